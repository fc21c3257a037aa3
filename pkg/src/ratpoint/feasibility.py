"""Exact feasibility search over an affine family of symmetric matrices.

Given M(Y) = M0 + Y_1 M_1 + ... + Y_k M_k, look for a rational Y with M(Y)
positive semidefinite.  Everything here is sound but incomplete: a returned
point is exactly verified by the LDL^T test, an emptiness certificate is an
exact vector annihilating the family with a negative base value, and None
just means this searcher gave up (a complete decision procedure must then
take over).

Layers, in order: the base point, a diagonal-dominance feasibility LP, and a
cutting-plane (ellipsoid) search driven by exact LDL^T separating witnesses.
The ellipsoid update uses a rational square-root overapproximation plus a
small inflation, so every step stays in exact rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from ratpoint.linalg import RationalMatrix, ldlt_psd, quadratic_form
from ratpoint.simplex import feasible_point


def _family_at(m0: RationalMatrix, basis, y):
    acc = m0
    for coef, mat in zip(y, basis):
        if coef:
            acc = acc.add(mat.scale(coef))
    return acc


def _separating_cut(m0, basis, y):
    """None when M(y) is PSD; otherwise ("cut", a, beta) for a valid
    constraint a . Y >= beta violated at y, or ("empty", w) when the witness
    proves the whole family infeasible."""
    res = ldlt_psd(_family_at(m0, basis, y))
    if res.is_psd:
        return None
    w = res.witness
    a = [quadratic_form(m, w) for m in basis]
    beta = -quadratic_form(m0, w)
    if not any(a):
        return ("empty", w)
    return ("cut", *_normalize_cut(a, beta))


def _normalize_cut(a, beta):
    """Scale a valid inequality to primitive integer coefficients."""
    from math import gcd, lcm

    den = lcm(beta.denominator, *(x.denominator for x in a))
    ints = [int(x * den) for x in a] + [int(beta * den)]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return [Fraction(v, g) for v in ints[:-1]], Fraction(ints[-1], g)


def _diag_dominance_lp(m0: RationalMatrix, basis):
    """Y making M(Y) diagonally dominant with nonnegative diagonal, or None.

    Diagonal dominance is a polyhedral inner approximation of the PSD cone,
    so this is a plain exact LP."""
    k = len(basis)
    n = m0.rows
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    nvars = k + len(pairs)
    s_index = {pr: k + t for t, pr in enumerate(pairs)}
    cons = []

    def entry_coeffs(i, j):
        row = [Fraction(0)] * nvars
        for t in range(k):
            row[t] = basis[t].get(i, j)
        return row, m0.get(i, j)

    for i, j in pairs:
        row, c0 = entry_coeffs(i, j)
        up_row = list(row)
        up_row[s_index[(i, j)]] = Fraction(-1)
        cons.append((up_row, "<=", -c0))  # M_ij - s_ij <= 0
        dn_row = [-x for x in row]
        dn_row[s_index[(i, j)]] = Fraction(-1)
        cons.append((dn_row, "<=", c0))  # -M_ij - s_ij <= 0
    for i in range(n):
        row, c0 = entry_coeffs(i, i)
        full = [-x for x in row]
        for j in range(n):
            if j != i:
                pr = (min(i, j), max(i, j))
                full[s_index[pr]] += Fraction(1)
        cons.append((full, "<=", c0))  # sum_j s_ij - M_ii <= 0
    sol = feasible_point(nvars, cons, nonneg=range(k, nvars))
    if sol is None:
        return None
    return sol[:k]


def _sqrt_upper(x: Fraction) -> Fraction:
    """Rational s with sqrt(x) <= s <= sqrt(x) * (1 + tiny)."""
    if x <= 0:
        raise ValueError("need a positive value")
    scale = 1 << 64
    num = x.numerator * scale * scale
    den = x.denominator
    r = isqrt(num * den) + 1
    return Fraction(r, den * scale)


def _interval_search_1d(m0, basis, radius: Fraction, iterations: int):
    """Exact cutting-plane search on a single parameter."""
    lo, hi = -radius, radius
    for _ in range(iterations):
        if lo > hi:
            return None
        c = (lo + hi) / 2
        got = _separating_cut(m0, basis, [c])
        if got is None:
            return ("psd", [c])
        if got[0] == "empty":
            return got
        _, a, beta = got
        bound = beta / a[0]
        if a[0] > 0:
            lo = max(lo, bound)
        else:
            hi = min(hi, bound)
    return None


def _ellipsoid_search(m0, basis, radius: Fraction, iterations: int):
    """Cutting-plane search inside a ball of the given radius."""
    k = len(basis)
    if k == 1:
        return _interval_search_1d(m0, basis, radius, iterations)
    c = [Fraction(0)] * k
    q = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        q[i][i] = radius * radius
    shrink = Fraction(k * k, k * k - 1)
    inflate = 1 + Fraction(1, 1 << 20)
    grid = 1 << 64
    for _ in range(iterations):
        got = _separating_cut(m0, basis, c)
        if got is None:
            return ("psd", list(c))
        if got[0] == "empty":
            return got
        _, a, beta = got
        g = [-x for x in a]
        qg = [sum((q[i][j] * g[j] for j in range(k)), Fraction(0)) for i in range(k)]
        gqg = sum((g[i] * qg[i] for i in range(k)), Fraction(0))
        if gqg <= 0:
            return None
        step = _sqrt_upper(gqg) * (k + 1)
        c = [ci - qgi / step for ci, qgi in zip(c, qg)]
        coef = Fraction(2, (k + 1)) / gqg
        q = [
            [shrink * (q[i][j] - coef * qg[i] * qg[j]) * inflate for j in range(k)]
            for i in range(k)
        ]
        # keep the bit size bounded; the slack is covered by the inflation
        c = [Fraction(round(x * grid), grid) for x in c]
        q = [[Fraction(round(x * grid), grid) for x in row] for row in q]
    return None


def _projection_greedy(m0, basis, iterations: int):
    """Cheap relaxation walk: jump across each separating hyperplane.

    Often lands inside quickly; no convergence guarantee, hence the cap."""
    k = len(basis)
    c = [Fraction(0)] * k
    grid = 1 << 48
    for it in range(iterations):
        got = _separating_cut(m0, basis, c)
        if got is None:
            return ("psd", c)
        if got[0] == "empty":
            return got
        _, a, beta = got
        norm2 = sum((x * x for x in a), Fraction(0))
        gap = beta - sum((x * y for x, y in zip(a, c)), Fraction(0))
        over = Fraction(3, 2) if it % 2 else Fraction(1)
        step = gap * over / norm2
        c = [ci + step * ai for ci, ai in zip(c, a)]
        c = [Fraction(round(x * grid), grid) for x in c]
    return None


def _data_radius(m0: RationalMatrix) -> Fraction:
    top = max((abs(e) for e in m0.entries), default=Fraction(0))
    return 4 * (top + 1)


def find_psd_point(m0: RationalMatrix, basis, effort: int = 1):
    """Search the affine family for an exactly verified PSD member.

    Returns ("psd", Y) with ldlt_psd(M(Y)) succeeding, ("empty", w) with an
    exact infeasibility witness (w annihilates every direction and has a
    negative base value), or None when undecided."""
    k = len(basis)
    if k == 0:
        got = _separating_cut(m0, basis, [])
        if got is None:
            return ("psd", [])
        return got if got[0] == "empty" else None
    got = _separating_cut(m0, basis, [Fraction(0)] * k)
    if got is None:
        return ("psd", [Fraction(0)] * k)
    if got[0] == "empty":
        return got
    y = _diag_dominance_lp(m0, basis)
    if y is not None:
        check = _separating_cut(m0, basis, y)
        if check is None:
            return ("psd", y)
    got = _projection_greedy(m0, basis, 60)
    if got is not None:
        return got
    r0 = _data_radius(m0)
    budgets = [(r0, 200 * (k + 1))]
    if effort >= 1:
        budgets.append((r0 * 2**10, 420 * (k + 1)))
    if effort >= 2:
        budgets.append((r0 * 2**24, 800 * (k + 1)))
    for radius, iters in budgets:
        got = _ellipsoid_search(m0, basis, radius, iters)
        if got is not None:
            return got
    return None
