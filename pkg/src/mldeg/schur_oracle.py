"""Definitional oracle: Schur expansions of complete homogeneous sums.

The coefficient families computed combinatorially elsewhere are defined
as Schur coefficients of h_d evaluated at small sets of linear forms.
This module computes those expansions from first principles: monomial
dicts built by a truncated geometric series, Schur monomials by the
branching recursion, and decomposition by peeling dominant terms.
Slow but independent of every fast path it is used to check.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict

from .exact import ConsistencyError, binom
from .indexsets import check_indexset, index_of, lambda_of, partition_weight

_ssyt_memo = {}
_expansion_memo = {}
_expansion_two_memo = {}
_series_two_state = {}


def unit_form(i, nvars):
    """Coefficient vector of the variable x_i."""
    return tuple(1 if k == i else 0 for k in range(nvars))


def _add_form(target, poly, form):
    """target += poly * (linear form), monomial dicts."""
    for mono, c in poly.items():
        for var, fc in enumerate(form):
            if fc:
                key = mono[:var] + (mono[var] + 1,) + mono[var + 1:]
                target[key] += c * fc


def hom_full(forms, degree, nvars):
    """Monomial dicts of h_0, ..., h_degree at the given linear forms.

    Multiplying in one geometric series per form: after each form f the
    running list equals the previous one times 1/(1 - f), truncated.
    """
    series = [defaultdict(int) for _ in range(degree + 1)]
    series[0][(0,) * nvars] = 1
    for form in forms:
        for a in range(1, degree + 1):
            _add_form(series[a], series[a - 1], form)
    return [dict((k, v) for k, v in level.items() if v) for level in series]


def schur_full(shape, nvars):
    """All monomials of the Schur polynomial s_shape(x_1..x_nvars).

    Branching on the last variable: strip a horizontal strip (the
    interlacing condition) and recurse on one variable fewer.
    """
    shape = tuple(p for p in shape if p)
    key = (shape, nvars)
    if key in _ssyt_memo:
        return _ssyt_memo[key]
    if not shape:
        result = {(0,) * nvars: 1}
    elif len(shape) > nvars:
        result = {}
    else:
        result = defaultdict(int)
        lam = shape
        ranges = []
        for i in range(len(lam)):
            lo = lam[i + 1] if i + 1 < len(lam) else 0
            ranges.append(range(lo, lam[i] + 1))
        total = sum(lam)
        for mu in itertools.product(*ranges):
            sub = schur_full(mu, nvars - 1)
            last = total - sum(mu)
            for mono, c in sub.items():
                result[mono + (last,)] += c
        result = dict(result)
    _ssyt_memo[key] = result
    return result


def orbit_size(dominant):
    """Number of distinct permutations of an exponent vector."""
    counts = defaultdict(int)
    for v in dominant:
        counts[v] += 1
    size = math.factorial(len(dominant))
    for c in counts.values():
        size //= math.factorial(c)
    return size


def kostka_row(shape, nvars):
    """Per-monomial coefficients of s_shape grouped by dominant exponent."""
    grouped = {}
    for mono, c in schur_full(shape, nvars).items():
        dom = tuple(sorted(mono, reverse=True))
        prev = grouped.get(dom)
        if prev is None:
            grouped[dom] = c
        else:
            assert prev == c, "Schur polynomial not symmetric?"
    return grouped


class SymPoly:
    """Symmetric polynomial stored by dominant exponent vectors.

    from_full verifies symmetry of the raw monomial dict (orbit
    coefficients equal, orbit fully present) before collapsing it.
    """

    def __init__(self, nvars, dominant):
        self.nvars = nvars
        self.dominant = dict(dominant)

    @classmethod
    def from_full(cls, full, nvars):
        groups = defaultdict(dict)
        for mono, c in full.items():
            if c:
                groups[tuple(sorted(mono, reverse=True))][mono] = c
        dominant = {}
        for dom, members in groups.items():
            coeffs = set(members.values())
            if len(coeffs) != 1 or len(members) != orbit_size(dom):
                raise ConsistencyError(
                    f"monomial dict is not symmetric at orbit {dom}"
                )
            dominant[dom] = coeffs.pop()
        return cls(nvars, dominant)


def schur_decompose(sym):
    """Expand a SymPoly in the Schur basis by peeling the lex-max term.

    Returns a dict mapping length-nvars partitions to coefficients.
    Raises ConsistencyError if the peeling fails to terminate.
    """
    work = dict(sym.dominant)
    result = {}
    guard = len(work) * 64 + 64
    while work:
        guard -= 1
        if guard < 0:
            raise ConsistencyError("Schur peeling did not terminate")
        top = max(work)
        c = work.pop(top)
        result[top] = c
        for dom, k in kostka_row(top, sym.nvars).items():
            if dom == top:
                continue
            nv = work.get(dom, 0) - c * k
            if nv:
                work[dom] = nv
            else:
                work.pop(dom, None)
    return result


def _pair_forms(nvars, include_diagonal):
    forms = []
    for i in range(nvars):
        for j in range(i if include_diagonal else i + 1, nvars):
            fi = unit_form(i, nvars)
            fj = unit_form(j, nvars)
            forms.append(tuple(a + b for a, b in zip(fi, fj)))
    return forms


def _expansion(family, nvars, degree):
    """Schur decomposition of h_degree at the pair forms, memoized."""
    key = (family, nvars, degree)
    if key in _expansion_memo:
        return _expansion_memo[key]
    forms = _pair_forms(nvars, include_diagonal=(family == "psi"))
    full = hom_full(forms, degree, nvars)[degree]
    result = schur_decompose(SymPoly.from_full(full, nvars))
    _expansion_memo[key] = result
    return result


def psi_oracle(I):
    """Schur coefficient definition of the symmetric-pair coefficients."""
    I = check_indexset(I)
    return _expansion("psi", len(I), partition_weight(I)).get(lambda_of(I), 0)


def alpha_oracle(I):
    """Schur coefficient definition of the off-diagonal-pair coefficients."""
    I = check_indexset(I)
    return _expansion("alpha", len(I), partition_weight(I)).get(lambda_of(I), 0)


def _cross_series(rx, ry, degree):
    """Truncated product of geometric series over the cross forms.

    Grown geometrically and cached per alphabet pair, so a sweep over
    many degrees builds the monomial levels only a few times.
    """
    state = _series_two_state.get((rx, ry))
    if state is not None and state[0] >= degree:
        return state[1]
    cap = max(degree, 8)
    if state is not None:
        cap = max(cap, 2 * state[0])
    series = [defaultdict(int) for _ in range(cap + 1)]
    series[0][((0,) * rx, (0,) * ry)] = 1
    for i in range(rx):
        for j in range(ry):
            for a in range(1, cap + 1):
                for (xe, ye), c in list(series[a - 1].items()):
                    kx = xe[:i] + (xe[i] + 1,) + xe[i + 1:]
                    series[a][(kx, ye)] += c
                    ky = ye[:j] + (ye[j] + 1,) + ye[j + 1:]
                    series[a][(xe, ky)] += c
    _series_two_state[(rx, ry)] = (cap, series)
    return series


def _expansion_two(rx, ry, degree):
    """Double Schur decomposition of h_degree at the cross forms x_i + y_j."""
    key = (rx, ry, degree)
    if key in _expansion_two_memo:
        return _expansion_two_memo[key]
    series = _cross_series(rx, ry, degree)
    work = {k: v for k, v in series[degree].items() if v}
    result = {}
    guard = len(work) * 64 + 64
    while work:
        guard -= 1
        if guard < 0:
            raise ConsistencyError("two-alphabet peeling did not terminate")
        kappa = max(tuple(sorted(xe, reverse=True)) for (xe, ye) in work)
        q_part = {ye: c for (xe, ye), c in work.items() if xe == kappa}
        if not q_part:
            raise ConsistencyError("dominant x-monomial missing from orbit")
        x_monos = schur_full(kappa, rx)
        for xm, xc in x_monos.items():
            for ye, yc in q_part.items():
                k2 = (xm, ye)
                nv = work.get(k2, 0) - xc * yc
                if nv:
                    work[k2] = nv
                else:
                    work.pop(k2, None)
        for mu, c in schur_decompose(SymPoly.from_full(q_part, ry)).items():
            if c:
                result[(kappa, mu)] = c
    _expansion_two_memo[key] = result
    return result


def d_oracle(I, J):
    """Two-alphabet Schur coefficient defining the square-case entries."""
    I = check_indexset(I)
    J = check_indexset(J)
    degree = partition_weight(I) + partition_weight(J)
    table = _expansion_two(len(I), len(J), degree)
    return table.get((lambda_of(I), lambda_of(J)), 0)


def sij_row_oracle(I):
    """All shifted-argument coefficients with upper set I.

    Substituting x -> x + 1 into s_{lambda(I)} and re-expanding each
    homogeneous piece in the Schur basis yields the coefficients
    indexed by lower sets J of the same size.
    """
    I = check_indexset(I)
    r = len(I)
    lam = lambda_of(I)
    shifted = defaultdict(int)
    for mono, c in schur_full(lam, r).items():
        for picks in itertools.product(*(range(e + 1) for e in mono)):
            mult = c
            for e, k in zip(mono, picks):
                mult *= binom(e, k)
            shifted[picks] += mult
    by_degree = defaultdict(dict)
    for mono, c in shifted.items():
        if c:
            by_degree[sum(mono)][mono] = c
    result = {}
    for piece in by_degree.values():
        sym = SymPoly.from_full(piece, r)
        for lam2, c in schur_decompose(sym).items():
            if c:
                result[index_of(lam2)] = c
    return result
