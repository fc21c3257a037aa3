"""Factorization of univariate polynomials over the rationals.

Pipeline: Yun squarefree decomposition, factorization modulo a suitable prime
(distinct-degree plus equal-degree splitting), quadratic Hensel lifting to a
coefficient bound, then subset recombination.  All arithmetic is exact.

Finite-field polynomials are plain int lists reduced modulo the prime; they
exist only inside this module.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt

from ratpoint import unipoly as up


# -- arithmetic modulo m -------------------------------------------------------


def _mp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mp_add(a, b, m):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _mp_trim(out)


def _mp_sub(a, b, m):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _mp_trim(out)


def _mp_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if not c:
            continue
        for j, d in enumerate(b):
            out[i + j] = (out[i + j] + c * d) % m
    return _mp_trim(out)


def _mp_scale(a, c, m):
    return _mp_trim([(x * c) % m for x in a])


def _mp_divmod(a, b, m):
    """Division where lc(b) is invertible modulo m."""
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], -1, m)
    r = [c % m for c in a]
    _mp_trim(r)
    db = len(b) - 1
    q = [0] * max(len(r) - db, 0)
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        c = (r[-1] * inv) % m
        q[k] = c
        for i in range(db + 1):
            r[k + i] = (r[k + i] - c * b[i]) % m
        _mp_trim(r)
    return _mp_trim(q), r


def _mp_monic(a, m):
    if not a:
        return []
    return _mp_scale(a, pow(a[-1], -1, m), m)


def _mp_gcd(a, b, p):
    a, b = [c % p for c in a], [c % p for c in b]
    _mp_trim(a), _mp_trim(b)
    while b:
        a, b = b, _mp_divmod(a, b, p)[1]
    return _mp_monic(a, p)


def _mp_pow(base, e, mod_poly, p):
    result = [1]
    base = _mp_divmod(base, mod_poly, p)[1]
    while e:
        if e & 1:
            result = _mp_divmod(_mp_mul(result, base, p), mod_poly, p)[1]
        e >>= 1
        if e:
            base = _mp_divmod(_mp_mul(base, base, p), mod_poly, p)[1]
    return result


def _mp_deriv(a, p):
    return _mp_trim([(c * i) % p for i, c in enumerate(a)][1:])


# -- factorization over GF(p) --------------------------------------------------


def _distinct_degree(f, p):
    """Split a monic squarefree polynomial into (product, degree) pieces."""
    pieces = []
    x = [0, 1]
    h = x
    d = 0
    rest = list(f)
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = _mp_pow(h, p, rest, p)
        g = _mp_gcd(_mp_sub(h, x, p), rest, p)
        if len(g) > 1:
            pieces.append((g, d))
            rest = _mp_divmod(rest, g, p)[0]
            h = _mp_divmod(h, rest, p)[1]
    if len(rest) > 1:
        pieces.append((rest, len(rest) - 1))
    return pieces


def _equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus split of a monic squarefree product of degree-d primes."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        _mp_trim(a)
        if len(a) < 2:
            continue
        g = _mp_gcd(a, f, p)
        if len(g) > 1:
            part = g
        else:
            if p == 2:
                # trace map splitting for characteristic 2
                t = list(a)
                acc = list(a)
                for _ in range(d - 1):
                    acc = _mp_pow(acc, 2, f, 2)
                    t = _mp_add(t, acc, 2)
                part = _mp_gcd(t, f, 2)
            else:
                e = (p**d - 1) // 2
                b = _mp_pow(a, e, f, p)
                part = _mp_gcd(_mp_sub(b, [1], p), f, p)
        if 1 < len(part) - 1 + 1 and len(part) - 1 < n and len(part) > 1:
            left = _equal_degree(part, d, p, rng)
            right = _equal_degree(_mp_divmod(f, part, p)[0], d, p, rng)
            return left + right


def _factor_mod_p(f, p, rng):
    """Monic irreducible factors of a squarefree monic polynomial mod p."""
    out = []
    for piece, d in _distinct_degree(f, p):
        out.extend(_equal_degree(piece, d, p, rng))
    out.sort()
    return out


# -- Hensel lifting -------------------------------------------------------------


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift: from factorization mod m to mod m*m.

    Requires f == g*h (mod m), s*g + t*h == 1 (mod m), h monic,
    deg f == deg g + deg h, deg s < deg h, deg t < deg g.
    """
    m2 = m * m
    e = _mp_sub([c % m2 for c in f], _mp_mul(g, h, m2), m2)
    q, r = _mp_divmod(_mp_mul(s, e, m2), h, m2)
    g1 = _mp_add(_mp_add(g, _mp_mul(t, e, m2), m2), _mp_mul(q, g, m2), m2)
    h1 = _mp_add(h, r, m2)
    b = _mp_sub(_mp_add(_mp_mul(s, g1, m2), _mp_mul(t, h1, m2), m2), [1], m2)
    c, d = _mp_divmod(_mp_mul(s, b, m2), h1, m2)
    s1 = _mp_sub(s, d, m2)
    t1 = _mp_sub(_mp_sub(t, _mp_mul(t, b, m2), m2), _mp_mul(c, g1, m2), m2)
    return g1, h1, s1, t1


def _lift_group(f, factors, p, target):
    """Lift monic factors with f == lc(f) * prod(factors) (mod p) to mod target.

    Returns the list of monic lifted factors mod target, in the same order.
    target must be a power of p.
    """
    if len(factors) == 1:
        inv = pow(f[-1] % target, -1, target)
        return [_mp_monic(_mp_scale(f, 1, target), target) if False else _mp_scale(f, inv, target)]
    mid = len(factors) // 2
    left, right = factors[:mid], factors[mid:]
    g = _mp_scale(_prod_mod(left, p), f[-1] % p, p)
    h = _prod_mod(right, p)
    gg, ss, tt = _mp_xgcd(g, h, p)
    if len(gg) != 1:
        raise ArithmeticError("factor groups not coprime mod p")
    inv = pow(gg[0], -1, p)
    s, t = _mp_scale(ss, inv, p), _mp_scale(tt, inv, p)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    g = [c % target for c in g]
    h = [c % target for c in h]
    _mp_trim(g), _mp_trim(h)
    return _lift_group(g, left, p, target) + _lift_group(h, right, p, target)


def _prod_mod(polys, m):
    out = [1]
    for q in polys:
        out = _mp_mul(out, q, m)
    return out


def _mp_xgcd(a, b, p):
    a, b = [c % p for c in a], [c % p for c in b]
    _mp_trim(a), _mp_trim(b)
    sa, sb = [1], []
    ta, tb = [], [1]
    while b:
        q, r = _mp_divmod(a, b, p)
        a, b = b, r
        sa, sb = sb, _mp_sub(sa, _mp_mul(q, sb, p), p)
        ta, tb = tb, _mp_sub(ta, _mp_mul(q, tb, p), p)
    return a, sa, ta


# -- the rational driver ---------------------------------------------------------


def _symmetric(a, m):
    """Map residues to the symmetric range (-m/2, m/2]."""
    out = []
    for c in a:
        c %= m
        out.append(c - m if c > m // 2 else c)
    return out


def _primes_from(start):
    n = max(start, 3) | 1
    while True:
        if all(n % q for q in range(3, isqrt(n) + 1, 2)):
            yield n
        n += 2


def _factor_squarefree_int(f) -> list:
    """Irreducible factors over Q of a primitive squarefree integer polynomial.

    Factors come back primitive with positive leading coefficient, sorted.
    """
    n = len(f) - 1
    if n <= 0:
        return []
    if n == 1:
        return [list(f) if f[-1] > 0 else [-c for c in f]]
    rng = random.Random(0x5EED + n)
    lc = f[-1]
    prime = None
    for p in _primes_from(5):
        if lc % p == 0:
            continue
        fp = _mp_monic([c % p for c in f], p)
        if len(_mp_gcd(fp, _mp_deriv(fp, p), p)) == 1:
            prime = p
            break
    modular = _factor_mod_p(_mp_monic([c % prime for c in f], prime), prime, rng)
    if len(modular) == 1:
        return [list(f) if f[-1] > 0 else [-c for c in f]]
    # lift beyond twice the largest possible coefficient of lc * any factor
    norm2 = isqrt(sum(c * c for c in f)) + 1
    bound = 2 * (norm2 << n) * abs(lc) + 1
    target = prime
    while target <= 2 * bound:
        target *= prime
    lifted = _lift_group([c % target for c in f], modular, prime, target)

    import itertools

    remaining = list(range(len(lifted)))
    current = list(f)
    found = []
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        for combo in itertools.combinations(remaining, size):
            prod = _mp_scale(_prod_mod([lifted[i] for i in combo], target), current[-1] % target, target)
            cand = up.int_primitive(_symmetric(prod, target))
            if not cand:
                continue
            if cand[-1] < 0:
                cand = [-c for c in cand]
            quo, r = up.divmod_exact([Fraction(c) for c in current], [Fraction(c) for c in cand])
            if not r:
                found.append(cand)
                _, current = up.to_integer(quo)
                remaining = [i for i in remaining if i not in combo]
                hit = True
                break
        if not hit:
            size += 1
    if len(current) > 1:
        cur = up.int_primitive(current)
        if cur[-1] < 0:
            cur = [-c for c in cur]
        found.append(cur)
    found.sort(key=lambda q: (len(q), q))
    return found


def squarefree_decomposition(p) -> list:
    """Yun decomposition: list of (primitive integer factor, multiplicity).

    The product of factor^multiplicity equals the input up to a rational
    constant; each factor is squarefree, primitive, positive leading
    coefficient, and the factors are pairwise coprime.
    """
    if up.is_zero(p):
        raise ValueError("zero polynomial")
    _, f = up.to_integer(p)
    if f[-1] < 0:
        f = [-c for c in f]
    if len(f) == 1:
        return []
    fq = [Fraction(c) for c in f]
    d = up.derivative(fq)
    g = up.poly_gcd(fq, d)
    if len(g) == 1:
        return [(f, 1)]
    out = []
    w, _ = up.divmod_exact(fq, g)
    y, _ = up.divmod_exact(d, g)
    z = up.sub(y, up.derivative(w))
    i = 1
    while len(w) > 1:
        h = up.poly_gcd(w, z)
        if len(h) > 1:
            _, h_int = up.to_integer(h)
            if h_int[-1] < 0:
                h_int = [-c for c in h_int]
            out.append((h_int, i))
        w, _ = up.divmod_exact(w, h)
        y, _ = up.divmod_exact(z, h)
        z = up.sub(y, up.derivative(w))
        i += 1
    return out


def factor_over_Q(p) -> list:
    """Irreducible factorization over the rationals.

    Returns a list of (factor, multiplicity) with each factor a primitive
    integer polynomial with positive leading coefficient, irreducible over Q.
    The product of factor^multiplicity equals the input up to a nonzero
    rational constant.  Constants factor to the empty list.
    """
    if up.is_zero(p):
        raise ValueError("cannot factor the zero polynomial")
    out = []
    for sqf, mult in squarefree_decomposition(p):
        for irr in _factor_squarefree_int(sqf):
            out.append((irr, mult))
    out.sort(key=lambda t: (len(t[0]), t[0], t[1]))
    return out
