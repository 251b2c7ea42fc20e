EPSILON = 1e-9


def positive(value: float) -> float:
    """The (x)_+ operator: max(x, 0)."""
    return value if value > 0.0 else 0.0
