import sys

from pirasim.api.cli import main

sys.exit(main())
