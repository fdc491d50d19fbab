"""Shared specs and word generators for the test suite."""

import pytest
from hypothesis import HealthCheck, settings

from graphprod import Syllable, parse_spec

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def cyclic(n):
    return {"kind": "cyclic", "order": n}


def s3_table():
    """Symmetric group on three points, generators r (3-cycle) and t (swap)."""

    def mul(p, q):
        return tuple(p[q[i]] for i in range(3))

    e = (0, 1, 2)
    r = (1, 2, 0)
    t = (1, 0, 2)
    named = [
        (e, "1"),
        (r, "r"),
        (mul(r, r), "r2"),
        (t, "t"),
        (mul(r, t), "rt"),
        (mul(mul(r, r), t), "r2t"),
    ]
    index = {p: i for i, (p, _) in enumerate(named)}
    names = [n for _, n in named]
    table = [[names[index[mul(p, q)]] for q, _ in named] for p, _ in named]
    return {"kind": "table", "elements": names, "table": table,
            "generators": ["r", "t"]}


def f20_table():
    """Order-20 Frobenius group: r of order 5, s of order 4, s r s^-1 = r^2."""
    names = []
    for i in range(5):
        for j in range(4):
            part = "" if not i else ("r" if i == 1 else f"r{i}")
            part += "" if not j else ("s" if j == 1 else f"s{j}")
            names.append(part or "1")

    def mul(a, b):
        i, j = divmod(a, 4)
        k, l = divmod(b, 4)
        return ((i + k * pow(2, j, 5)) % 5) * 4 + (j + l) % 4

    table = [[names[mul(a, b)] for b in range(20)] for a in range(20)]
    return {"kind": "table", "elements": names, "table": table,
            "generators": ["r", "s"]}


GEX_DATA = {
    "vertices": [
        {"name": "a", "group": cyclic(2)},
        {"name": "b", "group": cyclic(2)},
        {"name": "c", "group": cyclic(3)},
    ],
    "edges": [["a", "c"], ["b", "c"]],
}

GEX_S3_DATA = {
    "vertices": [
        {"name": "a", "group": cyclic(2)},
        {"name": "b", "group": cyclic(2)},
        {"name": "c", "group": s3_table()},
    ],
    "edges": [["a", "c"], ["b", "c"]],
}

G510_DATA = {
    "vertices": [
        {"name": "a", "group": cyclic(3)},
        {"name": "b", "group": cyclic(3)},
        {"name": "c", "group": f20_table()},
        {"name": "e", "group": {"kind": "integers"}},
    ],
    "edges": [["a", "c"], ["b", "c"], ["b", "e"]],
}

TRIANGLE_DATA = {
    "vertices": [
        {"name": "a", "group": cyclic(2)},
        {"name": "b", "group": cyclic(3)},
        {"name": "c", "group": cyclic(4)},
    ],
    "edges": [["a", "b"], ["a", "c"], ["b", "c"]],
}


@pytest.fixture(scope="session")
def gex():
    return parse_spec(GEX_DATA)


@pytest.fixture(scope="session")
def gex_s3():
    return parse_spec(GEX_S3_DATA)


@pytest.fixture(scope="session")
def g510():
    return parse_spec(G510_DATA)


@pytest.fixture(scope="session")
def triangle():
    return parse_spec(TRIANGLE_DATA)


def element_pool(group):
    """Non-identity elements, truncated to a small window for integers."""
    if group.kind == "integers":
        return [-2, -1, 1, 2]
    if group.kind == "cyclic":
        return list(range(1, group.order))
    return list(range(1, len(group.names)))


def syllable_pool(spec):
    out = []
    for v in range(spec.graph.n):
        out.extend(Syllable(v, g) for g in element_pool(spec.groups[v]))
    return out


def random_word(rng, spec, max_syllables, pool=None):
    pool = pool or syllable_pool(spec)
    return tuple(rng.choice(pool) for _ in range(rng.randrange(max_syllables + 1)))
