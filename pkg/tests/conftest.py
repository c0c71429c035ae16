"""Shared helpers for the test suite."""

from sliceregular import Quaternion


def qnorm(a: Quaternion, b: Quaternion) -> float:
    """Euclidean distance between two quaternions."""
    return (a - b).norm()


def assert_close(a: Quaternion, b: Quaternion, tol: float = 1e-12):
    d = qnorm(a, b)
    assert d <= tol, f"{a} != {b} (distance {d:.3e} > {tol:.1e})"
