"""Dense univariate polynomial arithmetic over the rationals.

Polynomials are coefficient lists in ascending degree with no trailing zeros;
the zero polynomial is the empty list.  Coefficients are ``Fraction`` (plain
``int`` is accepted and treated exactly).

Sign-sensitive work (Sturm sequences, isolation) runs on primitive integer
forms so the inner loops stay in integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from ratpoint.rationals import qq, qsign


def strip(coeffs) -> list:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def degree(p) -> int:
    return len(p) - 1


def is_zero(p) -> bool:
    return not p


def leading(p):
    if not p:
        raise ValueError("zero polynomial has no leading coefficient")
    return p[-1]


def from_roots(roots) -> list:
    """Monic polynomial with the given rational roots (with multiplicity)."""
    p = [Fraction(1)]
    for r in roots:
        r = qq(r)
        p = sub(shift_up(p), scale(p, r))
    return p


def shift_up(p) -> list:
    """Multiply by the variable."""
    return [Fraction(0)] + list(p) if p else []


def add(p, q) -> list:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] = out[i] + c
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return strip(out)


def neg(p) -> list:
    return [-c for c in p]


def sub(p, q) -> list:
    return add(p, neg(q))


def scale(p, c) -> list:
    if not c:
        return []
    return [x * c for x in p]


def mul(p, q) -> list:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return strip(out)


def pow_(p, n: int) -> list:
    result = [Fraction(1)]
    base = list(p)
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def _field(p) -> list:
    """Promote plain ints to Fraction; other exact scalars pass through."""
    return [Fraction(c) if isinstance(c, int) else c for c in p]


def divmod_exact(p, q):
    """Quotient and remainder over the coefficient field."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p, q = _field(p), _field(q)
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead_inv = q[-1] ** -1
    dq = len(q) - 1
    while len(rem) - 1 >= dq and rem:
        c = rem[-1] * lead_inv
        k = len(rem) - 1 - dq
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] = rem[k + i] - c * b
        rem = strip(rem)
    return strip(quo), rem


def rem(p, q) -> list:
    return divmod_exact(p, q)[1]


def monic(p) -> list:
    if not p:
        return []
    p = _field(p)
    inv = p[-1] ** -1
    return [c * inv for c in p]


def poly_gcd(p, q) -> list:
    """Monic gcd over the rationals."""
    a, b = list(p), list(q)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def poly_xgcd(p, q):
    """Extended gcd: returns (g, s, t) with s*p + t*q = g, g monic."""
    a, b = list(p), list(q)
    sa, sb = [Fraction(1)], []
    ta, tb = [], [Fraction(1)]
    while b:
        quo, r = divmod_exact(a, b)
        a, b = b, r
        sa, sb = sb, sub(sa, mul(quo, sb))
        ta, tb = tb, sub(ta, mul(quo, tb))
    if not a:
        return [], [], []
    lc = a[-1]
    return monic(a), scale(sa, 1 / lc), scale(ta, 1 / lc)


def derivative(p) -> list:
    return strip([c * i for i, c in enumerate(p)][1:])


def eval_at(p, x):
    """Horner evaluation; works for any scalar with field arithmetic."""
    if not p:
        return Fraction(0)
    acc = p[-1]
    for c in reversed(p[:-1]):
        acc = acc * x + c
    return acc


def compose(p, q) -> list:
    """Coefficients of p(q(T))."""
    acc = []
    for c in reversed(p):
        acc = add(mul(acc, q), [qq(c)] if c else [])
    return acc


def squarefree_part(p) -> list:
    """Monic product of the distinct irreducible factors."""
    if not p:
        raise ValueError("zero polynomial")
    if len(p) == 1:
        return [Fraction(1)]
    g = poly_gcd(p, derivative(p))
    quo, r = divmod_exact(p, g)
    assert not r
    return monic(quo)


# -- primitive integer forms -------------------------------------------------


def to_integer(p):
    """Primitive integer coefficients with the same roots and the same signs.

    Returns (factor, ints) with p == factor * ints, factor a positive rational.
    """
    if not p:
        return Fraction(1), []
    coeffs = [qq(c) for c in p]
    den = lcm(*(c.denominator for c in coeffs))
    nums = [c.numerator * (den // c.denominator) for c in coeffs]
    g = 0
    for nval in nums:
        g = gcd(g, abs(nval))
    return Fraction(g, den), [nval // g for nval in nums]


def int_primitive(p):
    """Divide an integer polynomial by its positive content."""
    if not p:
        return []
    g = 0
    for c in p:
        g = gcd(g, abs(c))
    return [c // g for c in p]


def int_sign_at(p, x: Fraction) -> int:
    """Sign of an integer polynomial at a rational point, all-integer."""
    if not p:
        return 0
    a, b = x.numerator, x.denominator
    acc = 0
    bp = 1
    for c in reversed(p):
        acc = acc * a + c * bp
        bp *= b
    # bp scaling is positive, so acc carries the sign of p(x) * b^deg
    return qsign(acc)


def _int_prem_counted(a, b):
    """Integer pseudo-remainder: returns (r, m) with r == lc(b)^m * (a mod b)."""
    da, db = len(a) - 1, len(b) - 1
    if db < 0:
        raise ZeroDivisionError
    if da < db:
        return list(a), 0
    lc = b[-1]
    r = list(a)
    m = 0
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        top = r[-1]
        r = [c * lc for c in r]
        m += 1
        for i in range(db + 1):
            r[k + i] -= top * b[i]
        while r and r[-1] == 0:
            r.pop()
    return r, m


def sturm_chain_int(p_int) -> list:
    """Sturm chain of an integer polynomial as primitive integer polynomials.

    Each member equals the classical signed-remainder member up to a positive
    factor, which preserves sign variation counts.
    """
    a = int_primitive(p_int)
    b = int_primitive([c * i for i, c in enumerate(a)][1:])
    chain = [a]
    if b:
        chain.append(b)
    while len(chain) >= 2 and chain[-1]:
        prev, cur = chain[-2], chain[-1]
        r, m = _int_prem_counted(prev, cur)
        if not r:
            break
        # r == lc^m * rem(prev, cur); want a positive multiple of -rem
        positive_factor = cur[-1] > 0 or m % 2 == 0
        r = [-c for c in r] if positive_factor else list(r)
        chain.append(int_primitive(r))
    return chain


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def variations_at(chain, x: Fraction) -> int:
    return _variations([int_sign_at(p, x) for p in chain])


def variations_at_inf(chain, positive: bool) -> int:
    signs = []
    for p in chain:
        if not p:
            signs.append(0)
        elif positive:
            signs.append(qsign(p[-1]))
        else:
            signs.append(qsign(p[-1]) * (-1 if (len(p) - 1) % 2 else 1))
    return _variations(signs)


def sturm_count(p, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b].

    Requires a < b and p(a) != 0; p may have repeated roots.
    """
    if not p:
        raise ValueError("zero polynomial has no root count")
    a, b = qq(a), qq(b)
    if not a < b:
        raise ValueError(f"need a < b, got {a} >= {b}")
    _, p_int = to_integer(p)
    sf = int_primitive(to_integer(squarefree_part(p_int))[1])
    if int_sign_at(sf, a) == 0:
        raise ValueError(f"left endpoint {a} is a root")
    chain = sturm_chain_int(sf)
    return variations_at(chain, a) - variations_at(chain, b)


def count_real_roots(p) -> int:
    """Number of distinct real roots."""
    if not p:
        raise ValueError("zero polynomial")
    _, p_int = to_integer(p)
    sf = int_primitive(to_integer(squarefree_part(p_int))[1])
    if len(sf) <= 1:
        return 0
    chain = sturm_chain_int(sf)
    return variations_at_inf(chain, positive=False) - variations_at_inf(chain, positive=True)


def cauchy_root_bound(p) -> Fraction:
    """B with every real root in [-B, B]."""
    p = strip([qq(c) for c in p])
    if len(p) <= 1:
        return Fraction(1)
    lc = abs(p[-1])
    return 1 + max(abs(c) / lc for c in p[:-1])


def isolate_roots(p) -> list:
    """Disjoint isolating intervals, one per distinct real root.

    Returns sorted (lo, hi) pairs of rationals.  A rational root r appears as
    the degenerate pair (r, r); every other pair satisfies lo < root < hi with
    nonzero values at both endpoints.
    """
    if not p:
        raise ValueError("zero polynomial")
    _, p_int = to_integer(p)
    sf = int_primitive(to_integer(squarefree_part(p_int))[1])
    found_rational = []
    while True:
        if len(sf) <= 1:
            intervals = []
            break
        chain = sturm_chain_int(sf)
        bound = cauchy_root_bound(sf) + 1
        total = variations_at(chain, -bound) - variations_at(chain, bound)
        if total == 0:
            intervals = []
            break
        hit = None
        intervals = []
        work = [(-bound, bound, total)]
        while work:
            lo, hi, n = work.pop()
            if n == 1:
                intervals.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            if int_sign_at(sf, mid) == 0:
                hit = mid
                break
            left = variations_at(chain, lo) - variations_at(chain, mid)
            if left:
                work.append((lo, mid, left))
            if n - left:
                work.append((mid, hi, n - left))
        if hit is None:
            break
        # a probe landed exactly on a rational root: record it, deflate, restart
        found_rational.append(hit)
        quo, r = divmod_exact([Fraction(c) for c in sf], [-hit, Fraction(1)])
        assert not r
        _, sf = to_integer(quo)
    result = [(qq(lo), qq(hi)) for lo, hi in intervals]
    for r in found_rational:
        fixed = []
        for lo, hi in result:
            if lo < r < hi:
                # split at the known nonroot point r of the deflated factor
                if sturm_count([Fraction(c) for c in sf], lo, r):
                    fixed.append((lo, r))
                else:
                    fixed.append((r, hi))
            else:
                fixed.append((lo, hi))
        result = fixed
        result.append((r, r))
    result.sort()
    return _separate(sf, result)


def _refine_once(p_int, lo, hi):
    """One bisection step on an isolating interval; may collapse to a point."""
    if lo == hi:
        return lo, hi
    mid = (lo + hi) / 2
    s_mid = int_sign_at(p_int, mid)
    if s_mid == 0:
        return mid, mid
    return (mid, hi) if s_mid == int_sign_at(p_int, lo) else (lo, mid)


def _separate(sf_int, result):
    """Refine sorted intervals until pairwise disjoint as closed intervals."""
    changed = True
    while changed:
        changed = False
        for i in range(len(result) - 1):
            if result[i][1] >= result[i + 1][0]:
                changed = True
                result[i] = _refine_once(sf_int, *result[i])
                result[i + 1] = _refine_once(sf_int, *result[i + 1])
    return result


def refine_interval(p, lo: Fraction, hi: Fraction, width: Fraction):
    """Shrink an isolating interval of a simple root until hi - lo <= width.

    The polynomial must be nonzero at both endpoints with opposite signs
    (guaranteed for a squarefree isolating interval), or lo == hi.
    """
    if lo == hi:
        return lo, hi
    _, p_int = to_integer(p)
    s_lo = int_sign_at(p_int, lo)
    if s_lo == 0 or int_sign_at(p_int, hi) == 0:
        raise ValueError("endpoints must not be roots")
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = int_sign_at(p_int, mid)
        if s_mid == 0:
            return mid, mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def format_poly(p, var: str = "T") -> str:
    """Human-readable form, descending powers."""
    from ratpoint.rationals import format_q

    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = qq(p[i])
        if not c:
            continue
        if i == 0:
            body = format_q(abs(c))
        else:
            mag = format_q(abs(c))
            pw = var if i == 1 else f"{var}^{i}"
            body = pw if mag == "1" else f"{mag}*{pw}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
