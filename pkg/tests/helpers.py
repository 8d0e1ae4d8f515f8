"""Shared small-universe builders for the test suite."""

from itertools import product

from hives.enumeration import enumerate_hives
from hives.hive import pad
from hives.tableaux import partitions_in_box


def partitions_upto(parts: int, max_part: int):
    """All partitions with at most ``parts`` parts bounded by max_part,
    zero-padded to the full length."""
    return [pad(p, parts)
            for total in range(parts * max_part + 1)
            for p in partitions_in_box(total, parts, max_part)]


def triple_universe(parts: int, max_part: int, lam_max_part: int | None = None):
    """All (mu, nu, lam) with balanced weights inside the box."""
    if lam_max_part is None:
        lam_max_part = 2 * max_part
    ps = partitions_upto(parts, max_part)
    out = []
    for mu, nu in product(ps, repeat=2):
        for lam in partitions_in_box(sum(mu) + sum(nu), parts, lam_max_part):
            out.append((mu, nu, pad(lam, parts)))
    return out


def hive_universe(parts: int, max_part: int):
    """All normalized DC hives over triple_universe, tagged with boundary."""
    out = []
    for mu, nu, lam in triple_universe(parts, max_part):
        for h in enumerate_hives(mu, nu, lam):
            out.append((mu, nu, lam, h))
    return out
