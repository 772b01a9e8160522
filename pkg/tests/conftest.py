import math

import pytest


@pytest.fixture(scope="session")
def zp():
    """zeta'_R(-1) via the package's production route (itself dual-checked)."""
    from conedet import zeta_prime_minus1

    return zeta_prime_minus1()


@pytest.fixture(scope="session")
def gamma():
    from conedet import euler_gamma

    return euler_gamma()


def coprime_pairs(limit):
    """All coprime (p, q) with 1 <= p, q <= limit."""
    return [
        (p, q)
        for p in range(1, limit + 1)
        for q in range(1, limit + 1)
        if math.gcd(p, q) == 1
    ]


def random_flat_config(rng, n):
    """Admissible flat-sphere configuration: orders drawn in (-0.9, 0.5),
    shifted to sum to -2, redrawn until every order stays above -0.95."""
    from conedet import FlatSphereConfig

    while True:
        orders = rng.uniform(-0.9, 0.5, size=n)
        orders += (-2.0 - orders.sum()) / n
        if orders.min() > -0.95:
            break
    while True:
        pts = rng.normal(size=n) + 1j * rng.normal(size=n)
        if min(
            abs(pts[i] - pts[j]) for i in range(n) for j in range(i + 1, n)
        ) > 0.15:
            break
    return FlatSphereConfig(points=pts, orders=orders)
