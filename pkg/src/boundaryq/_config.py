import os

DEFAULT_DENSE_LIMIT = 14


class ResourceLimitError(ValueError):
    """Raised when a dense or sparse expansion would exceed the qubit cap."""


def dense_limit() -> int:
    """Qubit cap for matrix expansions; ``BOUNDARYQ_DENSE_LIMIT`` overrides the default."""
    raw = os.environ.get("BOUNDARYQ_DENSE_LIMIT")
    if raw is None or raw.strip() == "":
        return DEFAULT_DENSE_LIMIT
    return int(raw)


def check_limit(n: int, what: str = "operator") -> None:
    limit = dense_limit()
    if n > limit:
        raise ResourceLimitError(
            f"{what} on {n} qubits exceeds the dense limit of {limit} "
            "(set BOUNDARYQ_DENSE_LIMIT to raise it)"
        )
