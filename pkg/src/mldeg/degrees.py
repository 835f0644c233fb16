"""Degree computations for the three matrix families.

Each degree has two independent routes: a direct sum of coefficient
products over constrained index sets, and a closed-form alternating
binomial sum against half-argument specializations (or dimension
polynomials in the square case).  The suite demands the routes agree
on every query; the CLI exposes both and cross-checks on demand.

Raw sums are used everywhere, with no special-casing of boundary
parameters: the empty and full index sets realize all the extended
boundary conventions on their own (full-space degree 1, vanishing
outside the feasibility window, zero at infeasible ranks).
"""

from __future__ import annotations

from fractions import Fraction

from .exact import ConsistencyError, binom
from .indexsets import (
    check_indexset,
    conjugate,
    enumerate_indexsets,
    lambda_of,
)
from .lascoux import alpha, alpha_complement, d_a, d_a_complement, psi, psi_complement
from .qschur import b_value, d_value

_aij_poly_memo = {}


# ---------------------------------------------------------------- symmetric

def delta_sym(m, n, r):
    """Dual degree of the rank-r locus sliced by an m-dimensional pencil."""
    value, _ = delta_sym_info(m, n, r)
    return value


def delta_sym_items(m, n, r):
    """Index sets the direct sum ranges over; one term per set."""
    assert n >= 0
    size = n - r
    if size < 0 or size > n:
        return []
    return list(enumerate_indexsets(size, m - n + r, n))


def delta_sym_partial(n, items):
    return sum(psi(I) * psi_complement(I, n) for I in items)


def delta_sym_info(m, n, r):
    items = delta_sym_items(m, n, r)
    return delta_sym_partial(n, items), len(items)


def delta_sym_nrs(m, n, s):
    """Closed form for delta_sym(m, n, n-s) via the half-argument values."""
    value, _ = delta_sym_nrs_info(m, n, s)
    return value


def delta_sym_nrs_items(m, s):
    """Weighted index sets of the alternating closed-form sum."""
    assert m > 0 and s > 0
    items = []
    for t in range(binom(s, 2), m - s + 1):
        sign = -1 if (m - s - t) % 2 else 1
        coeff = sign * binom(m - 1, m - s - t)
        for I in enumerate_indexsets(s, t):
            items.append((coeff, I))
    return items


def delta_sym_nrs_partial(n, items):
    total = Fraction(0)
    for coeff, I in items:
        c = psi(I)
        if c:
            total += coeff * c * b_value(I, n)
    return total


def delta_sym_nrs_info(m, n, s):
    assert n > 0
    items = delta_sym_nrs_items(m, s)
    total = delta_sym_nrs_partial(n, items)
    if total.denominator != 1:
        raise ConsistencyError(
            f"closed-form sum is not an integer at (m={m}, n={n}, s={s}): {total}"
        )
    return int(total), len(items)


def phi_sym(n, d):
    """Degree count for symmetric inverses: weighted rank sum over n."""
    assert n > 0 and d > 0
    total = 0
    for s in range(1, n + 1):
        if binom(s + 1, 2) > d:
            break
        total += s * delta_sym(d, n, n - s)
    if total % n:
        raise ConsistencyError(f"rank-weighted sum {total} not divisible by n={n}")
    return total // n


# ------------------------------------------------------------------ windows

_TYPE_ALIASES = {
    "sym": "sym", "symmetric": "sym",
    "a": "a", "general": "a", "square": "a",
    "d": "d", "skew": "d",
}


def canonical_type(matrix_type):
    key = _TYPE_ALIASES.get(str(matrix_type).lower())
    if key is None:
        raise ValueError(f"unknown matrix type: {matrix_type!r}")
    return key


def pataki_window(matrix_type, n, r):
    """Inclusive feasibility window for m at rank r; degrees vanish outside.

    Windows match the support of the defining sums, which is also what
    the duality and closed-form equality tests pin down.
    """
    assert 0 < r < n, "window defined for intermediate ranks only"
    kind = canonical_type(matrix_type)
    if kind == "sym":
        return binom(n - r + 1, 2), binom(n + 1, 2) - binom(r + 1, 2)
    if kind == "a":
        return (n - r) ** 2, n * n - r * r
    return binom(2 * (n - r), 2), binom(2 * n, 2) - binom(2 * r, 2)


# ------------------------------------------------------------------- square

def delta_type_a(m, n, r):
    value, _ = delta_type_a_info(m, n, r)
    return value


def delta_type_a_items(m, n, r):
    assert n >= 0
    size = n - r
    if size < 0 or size > n:
        return []
    target = m - n + r
    items = []
    for ti in range(binom(size, 2), target - binom(size, 2) + 1):
        for I in enumerate_indexsets(size, ti, n):
            for J in enumerate_indexsets(size, target - ti, n):
                items.append((I, J))
    return items


def delta_type_a_partial(n, items):
    total = 0
    for I, J in items:
        c = d_a(I, J)
        if c:
            total += c * d_a_complement(I, J, n)
    return total


def delta_type_a_info(m, n, r):
    items = delta_type_a_items(m, n, r)
    return delta_type_a_partial(n, items), len(items)


def a_ij_poly(I, J):
    """Dimension polynomial of the glued shape built from both partitions.

    The shape stacks r + lambda(I) over the conjugate of lambda(J); its
    principal specialization is the content-over-hook product, a
    polynomial in n that vanishes at integers below the row count.
    """
    I = check_indexset(I)
    J = check_indexset(J)
    assert len(I) == len(J), "a_ij_poly: size mismatch"
    key = (I, J)
    if key in _aij_poly_memo:
        return _aij_poly_memo[key]
    from .exact import N, PolyQ

    nu = _glued_shape(I, J)
    poly = PolyQ((1,))
    for n_plus, hook in _content_hook_cells(nu):
        poly = poly * (N + n_plus) * Fraction(1, hook)
    _aij_poly_memo[key] = poly
    return poly


def _glued_shape(I, J):
    r = len(I)
    nu = tuple(r + p for p in lambda_of(I)) + conjugate(lambda_of(J))
    for a, b in zip(nu, nu[1:]):
        assert a >= b, f"glued shape not a partition: {nu}"
    return tuple(p for p in nu if p)


def _content_hook_cells(nu):
    conj = conjugate(nu)
    cells = []
    for i, row in enumerate(nu):
        for j in range(row):
            hook = (row - j) + (conj[j] - i) - 1
            cells.append((j - i, hook))
    return cells


def a_value(I, J, n):
    """Point value of a_ij_poly at integer n, without building the PolyQ."""
    value = Fraction(1)
    for content, hook in _content_hook_cells(_glued_shape(I, J)):
        if n + content == 0:
            return Fraction(0)
        value *= Fraction(n + content, hook)
    return value


def delta_type_a_nrs(m, n, r):
    """Closed form for delta_type_a(m, n, n-r)."""
    value, _ = delta_type_a_nrs_info(m, n, r)
    return value


def delta_type_a_nrs_items(m, r):
    assert m > 0 and r > 0
    items = []
    for u in range(2 * binom(r, 2), m - r + 1):
        sign = -1 if (m - r - u) % 2 else 1
        coeff = sign * binom(m - 1, m - r - u)
        for ti in range(binom(r, 2), u - binom(r, 2) + 1):
            for I in enumerate_indexsets(r, ti):
                for L in enumerate_indexsets(r, u - ti):
                    items.append((coeff, I, L))
    return items


def delta_type_a_nrs_partial(n, items):
    total = Fraction(0)
    for coeff, I, L in items:
        c = d_a(I, L)
        if c:
            total += coeff * c * a_value(I, L, n)
    return total


def delta_type_a_nrs_info(m, n, r):
    assert n > 0
    items = delta_type_a_nrs_items(m, r)
    total = delta_type_a_nrs_partial(n, items)
    if total.denominator != 1:
        raise ConsistencyError(
            f"square closed form not an integer at (m={m}, n={n}, r={r}): {total}"
        )
    return int(total), len(items)


def phi_type_a(n, d):
    """Degree count for square-matrix inverses."""
    assert n > 0 and d > 0
    total = 0
    for r in range(1, n + 1):
        total += r * delta_type_a(d, n, n - r)
    if total % n:
        raise ConsistencyError(f"rank-weighted sum {total} not divisible by n={n}")
    return total // n


# -------------------------------------------------------------------- skew

def delta_type_d(m, n, r):
    """Skew case; n is the half-size (matrices are 2n x 2n, rank 2r)."""
    value, _ = delta_type_d_info(m, n, r)
    return value


def delta_type_d_items(m, n, r):
    assert n >= 0
    size = 2 * n - 2 * r
    if size < 0 or size > 2 * n:
        return []
    return list(enumerate_indexsets(size, m, 2 * n))


def delta_type_d_partial(n, items):
    total = 0
    for I in items:
        c = alpha(I)
        if c:
            total += c * alpha_complement(I, 2 * n)
    return total


def delta_type_d_info(m, n, r):
    items = delta_type_d_items(m, n, r)
    return delta_type_d_partial(n, items), len(items)


def delta_type_d_nrs(m, n, r):
    """Closed form for delta_type_d(m, n, n-r); sums size-2r sets."""
    value, _ = delta_type_d_nrs_info(m, n, r)
    return value


def delta_type_d_nrs_items(m, r):
    assert m > 0 and r > 0
    items = []
    for t in range(binom(2 * r, 2), m + 1):
        sign = -1 if (m - t) % 2 else 1
        coeff = sign * binom(m - 1, m - t)
        for I in enumerate_indexsets(2 * r, t):
            items.append((coeff, I))
    return items


def delta_type_d_nrs_partial(n, items):
    total = Fraction(0)
    for coeff, I in items:
        c = alpha(I)
        if c:
            total += coeff * c * d_value(I, 2 * n)
    return total


def delta_type_d_nrs_info(m, n, r):
    assert n > 0
    items = delta_type_d_nrs_items(m, r)
    total = delta_type_d_nrs_partial(n, items)
    if total.denominator != 1:
        raise ConsistencyError(
            f"skew closed form not an integer at (m={m}, n={n}, r={r}): {total}"
        )
    return int(total), len(items)


def phi_type_d(n, d):
    """Degree count for skew inverses (half-size n)."""
    assert n > 0 and d > 0
    total = 0
    for r in range(1, n + 1):
        if binom(r, 2) > d:
            break
        total += r * delta_type_d(d, n, n - r)
    if total % n:
        raise ConsistencyError(f"rank-weighted sum {total} not divisible by n={n}")
    return total // n


# -------------------------------------------------------------- dispatchers

def delta_direct_info(matrix_type, m, n, r):
    kind = canonical_type(matrix_type)
    if kind == "sym":
        return delta_sym_info(m, n, r)
    if kind == "a":
        return delta_type_a_info(m, n, r)
    return delta_type_d_info(m, n, r)


def delta_nrs_info(matrix_type, m, n, r):
    """Closed-form value of the rank-r degree (argument converted inside)."""
    kind = canonical_type(matrix_type)
    if kind == "sym":
        return delta_sym_nrs_info(m, n, n - r)
    if kind == "a":
        return delta_type_a_nrs_info(m, n, n - r)
    return delta_type_d_nrs_info(m, n, n - r)


def delta_direct_items(matrix_type, m, n, r):
    kind = canonical_type(matrix_type)
    if kind == "sym":
        return delta_sym_items(m, n, r)
    if kind == "a":
        return delta_type_a_items(m, n, r)
    return delta_type_d_items(m, n, r)


def delta_direct_partial(matrix_type, n, items):
    kind = canonical_type(matrix_type)
    if kind == "sym":
        return delta_sym_partial(n, items)
    if kind == "a":
        return delta_type_a_partial(n, items)
    return delta_type_d_partial(n, items)


def delta_nrs_items(matrix_type, m, n, r):
    kind = canonical_type(matrix_type)
    if kind == "sym":
        return delta_sym_nrs_items(m, n - r)
    if kind == "a":
        return delta_type_a_nrs_items(m, n - r)
    return delta_type_d_nrs_items(m, n - r)


def delta_nrs_partial(matrix_type, n, items):
    kind = canonical_type(matrix_type)
    if kind == "sym":
        return delta_sym_nrs_partial(n, items)
    if kind == "a":
        return delta_type_a_nrs_partial(n, items)
    return delta_type_d_nrs_partial(n, items)


def phi_value(matrix_type, n, d):
    kind = canonical_type(matrix_type)
    if kind == "sym":
        return phi_sym(n, d)
    if kind == "a":
        return phi_type_a(n, d)
    return phi_type_d(n, d)
