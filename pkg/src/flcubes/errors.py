class CapacityError(Exception):
    """An input exceeds a documented size bound for exhaustive computation."""
