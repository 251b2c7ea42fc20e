from pirasim.infrastructure.report_writer import write_json, write_rows
from pirasim.infrastructure.trace_link import TraceLink
from pirasim.infrastructure.trace_repository import parse_trace, write_trace
from pirasim.infrastructure.trace_synthesizer import synthesize_traces
from pirasim.infrastructure.workload_generator import generate_workload
from pirasim.infrastructure.workload_repository import parse_workload, write_workload

__all__ = [
    "TraceLink",
    "parse_trace",
    "write_trace",
    "parse_workload",
    "write_workload",
    "synthesize_traces",
    "generate_workload",
    "write_json",
    "write_rows",
]
