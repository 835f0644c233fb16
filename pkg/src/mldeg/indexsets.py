"""Index sets, partitions, complements, and constrained enumeration.

An index set is a tuple of strictly increasing nonnegative ints; a
partition is a tuple of weakly decreasing nonnegative ints (trailing
zeros carry length information and are kept).  Everything here is a
plain tuple so values can be dict keys and cross process boundaries.
"""

from __future__ import annotations

from .exact import binom


def check_indexset(I):
    I = tuple(I)
    for k, v in enumerate(I):
        assert isinstance(v, int) and v >= 0, f"bad index entry {v!r}"
        assert k == 0 or I[k - 1] < v, f"not strictly increasing: {I}"
    return I


def lambda_of(I):
    """Partition of I: subtract the staircase, largest part first.

    Length equals #I; trailing zeros are kept so the size information
    round-trips through index_of.
    """
    I = check_indexset(I)
    r = len(I)
    return tuple(I[r - 1 - k] - (r - 1 - k) for k in range(r))


def index_of(lam):
    """Inverse of lambda_of; the partition length (zeros included) sets the size."""
    lam = tuple(lam)
    r = len(lam)
    for k in range(1, r):
        assert lam[k - 1] >= lam[k] >= 0, f"not a partition: {lam}"
    if r:
        assert lam[r - 1] >= 0
    return tuple(lam[r - 1 - k] + k for k in range(r))


def complement(I, n):
    """[n] minus I, ascending; I must sit inside [n] = {0, ..., n-1}."""
    I = check_indexset(I)
    members = set(I)
    if not members.issubset(range(n)):
        raise ValueError(f"complement: {I} is not a subset of [{n}]")
    return tuple(x for x in range(n) if x not in members)


def leq(I, J):
    """Componentwise order on equal-size index sets."""
    I = check_indexset(I)
    J = check_indexset(J)
    assert len(I) == len(J), "leq: size mismatch"
    return all(a <= b for a, b in zip(I, J))


def enumerate_indexsets(size, total, bound=None):
    """Yield every strictly increasing set with the given size and sum.

    Elements are < bound when bound is given.  Lexicographic order, so
    downstream sums and emitted files are reproducible.
    """
    assert size >= 0

    def rec(prefix, remaining, lo, slots):
        if slots == 0:
            if remaining == 0:
                yield prefix
            return
        # remaining must cover lo + (lo+1) + ... for the slots left
        hi = bound if bound is not None else remaining + 1
        for v in range(lo, hi):
            tail_min = (slots - 1) * v + slots * (slots - 1) // 2
            rest = remaining - v
            if rest < tail_min:
                break
            yield from rec(prefix + (v,), rest, v + 1, slots - 1)

    if total < 0:
        return
    yield from rec((), total, 0, size)


def format_indexset(I):
    return "{" + ",".join(str(x) for x in I) + "}"


def parse_indexset(text):
    """Parse '{0,2,5}' (whitespace tolerated); '{}' is the empty set."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ValueError(f"bad index set literal: {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    return check_indexset(int(p.strip()) for p in body.split(","))


def conjugate(lam):
    """Conjugate partition (zeros dropped in the result)."""
    parts = [p for p in lam if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def partition_weight(I):
    """|lambda(I)| = sum(I) - C(#I, 2)."""
    I = check_indexset(I)
    return sum(I) - binom(len(I), 2)
