"""Arithmetic in real algebraic number fields Q(gamma), with field extension.

A ``NumberField`` wraps an irreducible integer polynomial of degree >= 2
together with an isolating interval selecting one real root; the interval is
refined in place (monotonically, which never changes any answer) as sign
determinations demand.  Elements are polynomial residues modulo the minimal
polynomial.

Rational numbers are deliberately NOT wrapped: code that mixes exact scalars
keeps rationals as ``Fraction`` and only coordinates that genuinely live in an
extension become ``NFElement``.
"""

from __future__ import annotations

from fractions import Fraction

from ratpoint import unipoly as up
from ratpoint.factorization import factor_over_Q
from ratpoint.multipoly import MultiPoly
from ratpoint.prs import lift_coeffs, resultant
from ratpoint.rationals import qq, qsign


def _interval_mul(a, b):
    ps = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
    return min(ps), max(ps)


def _interval_eval(coeffs, box):
    acc = (qq(coeffs[-1]), qq(coeffs[-1]))
    for c in reversed(coeffs[:-1]):
        acc = _interval_mul(acc, box)
        c = qq(c)
        acc = (acc[0] + c, acc[1] + c)
    return acc


class NumberField:
    __slots__ = ("minpoly_int", "minpoly_q", "_lo", "_hi", "_sign_lo")

    def __init__(self, minpoly_int, lo, hi):
        minpoly_int = tuple(int(c) for c in minpoly_int)
        if len(minpoly_int) < 3:
            raise ValueError("number fields here have degree >= 2; use Fraction instead")
        if minpoly_int[-1] < 0:
            minpoly_int = tuple(-c for c in minpoly_int)
        self.minpoly_int = minpoly_int
        self.minpoly_q = up.monic([Fraction(c) for c in minpoly_int])
        self._lo, self._hi = qq(lo), qq(hi)
        self._sign_lo = up.int_sign_at(list(minpoly_int), self._lo)
        if self._sign_lo == 0 or up.int_sign_at(list(minpoly_int), self._hi) == 0:
            raise ValueError("interval endpoints must not be roots")
        if up.sturm_count(list(minpoly_int), self._lo, self._hi) != 1:
            raise ValueError("interval does not isolate a single root")

    @property
    def degree(self) -> int:
        return len(self.minpoly_int) - 1

    def interval(self):
        return self._lo, self._hi

    def refine(self):
        mid = (self._lo + self._hi) / 2
        s = up.int_sign_at(list(self.minpoly_int), mid)
        # irreducible of degree >= 2 has no rational roots, so s != 0
        if s == self._sign_lo:
            self._lo = mid
        else:
            self._hi = mid

    def refine_below(self, width):
        while self._hi - self._lo > width:
            self.refine()

    def element(self, rep) -> "NFElement":
        rep = [qq(c) for c in rep]
        if len(rep) >= len(self.minpoly_q):
            _, rep = up.divmod_exact(rep, self.minpoly_q)
        return NFElement(self, tuple(up.strip(list(rep))))

    def generator(self) -> "NFElement":
        return NFElement(self, (Fraction(0), Fraction(1)))

    def zero(self) -> "NFElement":
        return NFElement(self, ())

    def one(self) -> "NFElement":
        return NFElement(self, (Fraction(1),))

    def __repr__(self):
        return f"NumberField({up.format_poly(list(self.minpoly_int))}, [{self._lo}, {self._hi}])"


class NFElement:
    __slots__ = ("field", "rep")

    def __init__(self, field: NumberField, rep: tuple):
        self.field = field
        self.rep = rep

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.rep

    def __bool__(self):
        return bool(self.rep)

    def is_rational(self) -> bool:
        return len(self.rep) <= 1

    def to_rational(self) -> Fraction:
        if not self.rep:
            return Fraction(0)
        if len(self.rep) == 1:
            return self.rep[0]
        raise ValueError("element is not rational")

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field.minpoly_int != self.field.minpoly_int:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            v = qq(other)
            return NFElement(self.field, (v,) if v else ())
        return NotImplemented

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return NFElement(self.field, tuple(up.add(list(self.rep), list(o.rep))))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-c for c in self.rep))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return NFElement(self.field, tuple(up.sub(list(self.rep), list(o.rep))))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prod = up.mul(list(self.rep), list(o.rep))
        if len(prod) >= len(self.field.minpoly_q):
            _, prod = up.divmod_exact(prod, self.field.minpoly_q)
        return NFElement(self.field, tuple(up.strip(prod)))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if not self.rep:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = up.poly_xgcd(list(self.rep), self.field.minpoly_q)
        if len(g) != 1:
            raise ArithmeticError("minimal polynomial not irreducible")
        inv = [c / g[0] for c in s]
        return self.field.element(inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            o = self._coerce(other)
            return self.rep == o.rep
        if isinstance(other, NFElement):
            if other.field is self.field or other.field.minpoly_int == self.field.minpoly_int:
                return self.rep == other.rep
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.minpoly_int, self.rep))

    # -- real embedding ----------------------------------------------------------

    def sign(self) -> int:
        if not self.rep:
            return 0
        while True:
            lo, hi = _interval_eval(list(self.rep), self.field.interval())
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self.field.refine()

    def bounds(self):
        """Current rational bounds on the real value (not tightened)."""
        if not self.rep:
            return Fraction(0), Fraction(0)
        return _interval_eval(list(self.rep), self.field.interval())

    def bounds_refined(self, width):
        if not self.rep:
            return Fraction(0), Fraction(0)
        while True:
            lo, hi = _interval_eval(list(self.rep), self.field.interval())
            if hi - lo <= width:
                return lo, hi
            self.field.refine()

    def abs_upper_bound(self) -> Fraction:
        lo, hi = self.bounds()
        return max(abs(lo), abs(hi))

    def abs_lower_bound_nonzero(self) -> Fraction:
        """Positive rational below |value|; requires the element nonzero."""
        if not self.rep:
            raise ZeroDivisionError("zero element")
        while True:
            lo, hi = _interval_eval(list(self.rep), self.field.interval())
            if lo > 0:
                return lo
            if hi < 0:
                return -hi
            self.field.refine()

    def __repr__(self):
        return f"NFElement({up.format_poly(list(self.rep), 'g')})"


def scalar_sign(x) -> int:
    if isinstance(x, (int, Fraction)):
        return qsign(x)
    return x.sign()


def scalar_is_rational(x) -> bool:
    return isinstance(x, (int, Fraction)) or x.is_rational()


# -- univariate machinery over a field -------------------------------------------


def _fe(field, x):
    if isinstance(x, NFElement):
        return x
    return field.element([qq(x)])


def field_poly(field, coeffs) -> list:
    return up.strip([_fe(field, c) for c in coeffs])


def _field_sturm_chain(field, p):
    """Sturm chain over the field; members scaled by positive values only."""
    chain = [list(p)]
    d = up.strip([c * i for i, c in enumerate(p)][1:])
    if d:
        chain.append(d)
    while len(chain) >= 2 and chain[-1]:
        r = up.rem(chain[-2], chain[-1])
        if not r:
            break
        r = [(-c if isinstance(c, NFElement) else -qq(c)) for c in r]
        lc = r[-1]
        s = scalar_sign(lc)
        scale = (lc * s).inverse() if isinstance(lc, NFElement) else Fraction(1, 1) / (qq(lc) * s)
        chain.append([c * scale for c in r])
    return chain


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def _field_variations_at(chain, x: Fraction) -> int:
    return _variations([scalar_sign(up.eval_at(p, x)) for p in chain])


def field_count_roots(field, p, a: Fraction, b: Fraction) -> int:
    """Distinct real roots of a squarefree field polynomial in (a, b]."""
    chain = _field_sturm_chain(field, p)
    return _field_variations_at(chain, a) - _field_variations_at(chain, b)


def field_squarefree_part(field, p):
    g = up.poly_gcd(p, up.derivative(p))
    if len(g) == 1:
        return up.monic(p)
    q, _ = up.divmod_exact(p, g)
    return up.monic(q)


def _field_root_bound(field, p) -> Fraction:
    lc = p[-1]
    if isinstance(lc, NFElement):
        lc_low = lc.abs_lower_bound_nonzero()
    else:
        lc_low = abs(qq(lc))
    top = Fraction(0)
    for c in p[:-1]:
        if isinstance(c, NFElement):
            top = max(top, c.abs_upper_bound())
        else:
            top = max(top, abs(qq(c)))
    return 1 + top / lc_low


class FieldRoot:
    """One isolated real root of a squarefree polynomial over a field.

    ``value`` is a Fraction when the root was recognized rational during
    isolation; otherwise the root is pinned by (interval, poly) and can be
    refined by sign bisection.
    """

    __slots__ = ("field", "poly", "interval", "value")

    def __init__(self, field, poly, interval, value=None):
        self.field = field
        self.poly = poly
        self.interval = interval
        self.value = value

    def refine(self):
        lo, hi = self.interval
        if self.value is not None or lo == hi:
            return
        mid = (lo + hi) / 2
        v = up.eval_at(self.poly, mid)
        s = scalar_sign(v)
        if s == 0:
            self.value = mid
            self.interval = (mid, mid)
            return
        if s == scalar_sign(up.eval_at(self.poly, lo)):
            self.interval = (mid, hi)
        else:
            self.interval = (lo, mid)


def field_isolate_roots(field, coeffs) -> list:
    """Sorted isolating data for the distinct real roots of a polynomial with
    coefficients in the field (or rational).  Returned intervals have rational
    endpoints, are disjoint as closed intervals, and nondegenerate intervals
    have nonzero polynomial values at both endpoints."""
    p = field_poly(field, coeffs) if field is not None else up.strip([qq(c) for c in coeffs])
    if not p:
        raise ValueError("zero polynomial")
    if len(p) == 1:
        return []
    if field is None:
        out = []
        sf = up.squarefree_part(p)
        for lo, hi in up.isolate_roots(p):
            if lo == hi:
                out.append(FieldRoot(None, sf, (lo, hi), lo))
            else:
                out.append(FieldRoot(None, sf, (lo, hi)))
        return out

    sf = field_squarefree_part(field, p)
    rational_hits = []
    while True:
        if len(sf) == 1:
            intervals = []
            break
        chain = _field_sturm_chain(field, sf)
        bound = _field_root_bound(field, sf) + 1
        total = _field_variations_at(chain, -bound) - _field_variations_at(chain, bound)
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
            if scalar_sign(up.eval_at(sf, mid)) == 0:
                hit = mid
                break
            left = _field_variations_at(chain, lo) - _field_variations_at(chain, mid)
            if left:
                work.append((lo, mid, left))
            if n - left:
                work.append((mid, hi, n - left))
        if hit is None:
            break
        rational_hits.append(hit)
        quo, r = up.divmod_exact(sf, field_poly(field, [-hit, Fraction(1)]))
        assert not r
        sf = up.monic(quo)

    roots = [FieldRoot(field, sf, (qq(lo), qq(hi))) for lo, hi in intervals]
    for rhit in rational_hits:
        fixed = []
        for fr in roots:
            lo, hi = fr.interval
            if fr.value is None and lo < rhit < hi:
                if field_count_roots(field, sf, lo, rhit):
                    fr.interval = (lo, rhit)
                else:
                    fr.interval = (rhit, hi)
            fixed.append(fr)
        roots = fixed
        roots.append(FieldRoot(field, sf, (rhit, rhit), rhit))
    roots.sort(key=lambda fr: fr.interval)
    # separate into pairwise-disjoint closed intervals
    changed = True
    while changed:
        changed = False
        for i in range(len(roots) - 1):
            if roots[i].interval[1] >= roots[i + 1].interval[0]:
                changed = True
                roots[i].refine()
                roots[i + 1].refine()
    return roots


# -- extensions -------------------------------------------------------------------


def _poly_to_bivariate(coeffs_int, variables, var_name):
    v = MultiPoly.variable(variables, var_name)
    acc = MultiPoly.zero(variables)
    for j, cj in enumerate(coeffs_int):
        if cj:
            acc = acc + cj * v**j
    return acc


def _rational_minpoly_of_root(field, root: FieldRoot):
    """Minimal polynomial over the rationals of an algebraic FieldRoot.

    Works through the norm: the resultant of the field generator's minimal
    polynomial and the root's defining polynomial (written bivariately) is a
    rational polynomial vanishing at the root; its irreducible factors are the
    candidates, and interval refinement identifies the right one.  May detect
    along the way that the root is in fact rational (root.value gets set).
    """
    sf = root.poly
    if field is None:
        cands = [f for f, _ in factor_over_Q(sf)]
    else:
        vs = ("_t", "_x")
        t = MultiPoly.variable(vs, "_t")
        x = MultiPoly.variable(vs, "_x")
        big = MultiPoly.zero(vs)
        for k, c in enumerate(sf):
            c = _fe(field, c)
            piece = MultiPoly.zero(vs)
            for j, cj in enumerate(c.rep):
                if cj:
                    piece = piece + cj * t**j
            big = big + piece * x**k
        a_poly = _poly_to_bivariate(field.minpoly_int, vs, "_t")
        norm = resultant(lift_coeffs(a_poly, "_t"), lift_coeffs(big, "_t"))
        if norm.is_zero():
            raise ArithmeticError("vanishing norm for a nonzero polynomial")
        norm_coeffs = [c.constant_value() for c in norm.as_univariate_in("_x")]
        cands = [f for f, _ in factor_over_Q(norm_coeffs)]
    while True:
        if root.value is not None:
            r = root.value
            return [-r.numerator, r.denominator]
        lo, hi = root.interval
        claims = []
        bad_endpoint = False
        for f in cands:
            if up.int_sign_at(f, lo) == 0 or up.int_sign_at(f, hi) == 0:
                bad_endpoint = True
                break
            if up.sturm_count(f, lo, hi) > 0:
                claims.append(f)
        if not bad_endpoint and len(claims) == 1 and up.sturm_count(claims[0], lo, hi) == 1:
            return list(claims[0])
        root.refine()


def _compose_linear(a_int, const_elem, slope, field: NumberField):
    """Coefficients of a(const + slope*x) as a polynomial over the field."""
    lin = up.strip([const_elem, field.element([qq(slope)])])
    acc = []
    for c in reversed(a_int):
        acc = up.mul(acc, lin)
        if c:
            acc = up.add(acc, [field.element([qq(c)])])
    return up.strip(acc)


def _gamma_equals_rational(field, root: FieldRoot, t: int, r: Fraction) -> bool:
    """Exact test of alpha + t*beta == r for the isolated root beta."""
    cand = (field.element([r]) - field.generator()) * Fraction(1, t)
    val = up.eval_at(list(root.poly), cand)
    if scalar_sign(val) != 0:
        return False
    # cand is some root of the squarefree polynomial; compare against the
    # isolated one (strictly interior to its interval)
    while True:
        lo, hi = root.interval
        clo, chi = cand.bounds()
        if chi < lo or clo > hi:
            return False
        if lo <= clo and chi <= hi:
            return True
        field.refine()


def extend_field(field, root: FieldRoot):
    """Attach one isolated root to the coordinate field.

    Returns (new_field, convert, new_coord):
      new_field  the possibly extended field, or None when everything is rational
      convert    maps old coordinates into the new field
      new_coord  the attached root as a Fraction or an NFElement of new_field
    """
    identity = lambda c: c  # noqa: E731
    if root.value is not None:
        return field, identity, root.value

    minpoly = _rational_minpoly_of_root(field, root)
    if root.value is not None:
        return field, identity, root.value
    if len(minpoly) == 2:
        val = Fraction(-minpoly[0], minpoly[1])
        root.value = val
        root.interval = (val, val)
        return field, identity, val

    if field is None:
        while True:
            lo, hi = root.interval
            if (
                up.int_sign_at(minpoly, lo) != 0
                and up.int_sign_at(minpoly, hi) != 0
                and up.sturm_count(minpoly, lo, hi) == 1
            ):
                break
            root.refine()
        new_field = NumberField(minpoly, *root.interval)
        return new_field, identity, new_field.generator()

    # genuine tower: find a separating multiplier for gamma = alpha + t*beta
    a_int = list(field.minpoly_int)
    b_int = list(minpoly)
    for t in range(1, 64):
        got = _try_primitive(field, root, a_int, b_int, t)
        if got is None:
            continue
        gamma_field, beta_new = got
        alpha_new = gamma_field.generator() - t * beta_new
        a_val = up.eval_at([Fraction(c) for c in a_int], alpha_new)
        b_val = up.eval_at([Fraction(c) for c in b_int], beta_new)
        assert scalar_sign(a_val) == 0 and scalar_sign(b_val) == 0

        def convert(c, _alpha=alpha_new, _gf=gamma_field):
            if isinstance(c, (int, Fraction)):
                return qq(c)
            if not c.rep:
                return _gf.zero()
            return up.eval_at(list(c.rep), _alpha)

        return gamma_field, convert, beta_new
    raise ArithmeticError("no separating multiplier found (tried 63)")


def _try_primitive(field, root: FieldRoot, a_int, b_int, t: int):
    """Attempt gamma = alpha + t*beta; returns (field_of_gamma, beta) or None."""
    vs = ("_t", "_z")
    tt = MultiPoly.variable(vs, "_t")
    zz = MultiPoly.variable(vs, "_z")
    # resultant_T(a(T), t^db * b((z-T)/t)) vanishes exactly at alpha_i + t*beta_j
    db = len(b_int) - 1
    bz = MultiPoly.zero(vs)
    for k, c in enumerate(b_int):
        if c:
            bz = bz + c * (zz - tt) ** k * Fraction(t) ** (db - k)
    at = _poly_to_bivariate(a_int, vs, "_t")
    r = resultant(lift_coeffs(at, "_t"), lift_coeffs(bz, "_t"))
    r_coeffs = [c.constant_value() for c in r.as_univariate_in("_z")]
    cands = [f for f, _ in factor_over_Q(r_coeffs)]
    for f in cands:
        if len(f) == 2 and _gamma_equals_rational(field, root, t, Fraction(-f[0], f[1])):
            return None  # gamma rational: t does not separate
    while True:
        alo, ahi = field.interval()
        blo, bhi = root.interval
        glo, ghi = alo + t * blo, ahi + t * bhi
        claims = []
        bad_endpoint = False
        for f in cands:
            if up.int_sign_at(f, glo) == 0 or up.int_sign_at(f, ghi) == 0:
                bad_endpoint = True
                break
            if up.sturm_count(f, glo, ghi) > 0:
                claims.append(f)
        if not bad_endpoint and len(claims) == 1 and up.sturm_count(claims[0], glo, ghi) == 1:
            g_min = claims[0]
            break
        field.refine()
        root.refine()
    if len(g_min) == 2:
        return None
    gamma_field = NumberField(g_min, glo, ghi)
    # beta inside Q(gamma): the unique common root of b(x) and a(gamma - t*x)
    b_over = field_poly(gamma_field, [Fraction(c) for c in b_int])
    a_comp = _compose_linear(a_int, gamma_field.generator(), Fraction(-t), gamma_field)
    g = _field_gcd(b_over, a_comp)
    if len(g) != 2:
        return None
    g0 = g[0]
    beta = -g0 if isinstance(g0, NFElement) else gamma_field.element([-qq(g0)])
    return gamma_field, beta


def _field_gcd(a, b):
    a, b = up.strip(list(a)), up.strip(list(b))
    while b:
        a, b = b, up.rem(a, b)
    return up.monic(a)
