"""Polynomial elimination toolkit over sparse multivariate polynomials.

Polynomials in one distinguished variable are handled as ascending coefficient
lists whose entries are ``MultiPoly`` (the distinguished variable is set to
exponent zero inside the coefficients).  Provides pseudo-division, the
subresultant remainder sequence, principal subresultant coefficients,
resultants, multivariate gcd, and squarefree parts.
"""

from __future__ import annotations

from fractions import Fraction

from ratpoint.errors import BudgetExhaustedError
from ratpoint.multipoly import MultiPoly

# intermediate polynomials beyond this many terms abort with a budget error
# rather than grinding unboundedly; gcd callers treat that as "too large"
GCD_TERM_BUDGET = 20000


def _strip(cs):
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def lift_coeffs(p: MultiPoly, var: str) -> list:
    return p.as_univariate_in(var)


def collapse(coeffs, var: str) -> MultiPoly:
    """Inverse of lift_coeffs."""
    if not coeffs:
        raise ValueError("empty coefficient list")
    variables = coeffs[0].variables
    x = MultiPoly.variable(variables, var)
    acc = MultiPoly.zero(variables)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def upoly_mul(a, b):
    if not a or not b:
        return []
    variables = (a or b)[0].variables
    zero = MultiPoly.zero(variables)
    out = [zero] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c.is_zero():
            continue
        for j, d in enumerate(b):
            out[i + j] = out[i + j] + c * d
    return _strip(out)


def upoly_scale(a, c: MultiPoly):
    return _strip([x * c for x in a])


def upoly_sub(a, b):
    n = max(len(a), len(b))
    if n == 0:
        return []
    variables = (a or b)[0].variables
    zero = MultiPoly.zero(variables)
    out = [zero] * n
    for i, c in enumerate(a):
        out[i] = out[i] + c
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return _strip(out)


def pseudo_rem(a, b):
    """(r, m): r equals lc(b)^m * a modulo b, coefficients polynomial."""
    if not b:
        raise ZeroDivisionError("pseudo-division by zero")
    db = len(b) - 1
    r = list(a)
    lc = b[-1]
    m = 0
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        top = r[-1]
        r = [c * lc for c in r]
        m += 1
        for i in range(db + 1):
            r[k + i] = r[k + i] - top * b[i]
        _strip(r)
    return r, m


def mpoly_div_exact(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Exact quotient a / b; raises ValueError when the division is not exact."""
    if b.is_zero():
        raise ZeroDivisionError
    variables = a.variables
    quo = MultiPoly.zero(variables)
    rem_ = a
    bt = b.sorted_terms()
    b_exps, b_c = bt[0]
    while not rem_.is_zero():
        r_exps, r_c = rem_.sorted_terms()[0]
        q_exps = tuple(x - y for x, y in zip(r_exps, b_exps))
        if any(e < 0 for e in q_exps):
            raise ValueError("division not exact")
        t = MultiPoly.monomial(variables, q_exps, r_c / b_c)
        quo = quo + t
        rem_ = rem_ - t * b
    return quo


def subresultant_prs(a, b):
    """Subresultant polynomial remainder sequence (Brown's algorithm).

    Input and output are coefficient lists over MultiPoly; the first two
    members are the inputs (a first when deg a >= deg b).
    """
    if not a or not b:
        raise ValueError("zero polynomial in remainder sequence")
    if len(a) < len(b):
        a, b = b, a
    variables = a[0].variables
    one = MultiPoly.constant(variables, Fraction(1))
    prs = [a, b]
    g, h = one, one
    while True:
        A, B = prs[-2], prs[-1]
        delta = (len(A) - 1) - (len(B) - 1)
        r, m = pseudo_rem(A, B)
        size = 0
        for c in r:
            for v in c.terms.values():
                v = Fraction(v)
                size += abs(v.numerator).bit_length() + v.denominator.bit_length()
        if size > 64 * GCD_TERM_BUDGET:
            raise BudgetExhaustedError(
                "remainder sequence intermediate size exceeded the budget"
            )
        # normalize to the exact pseudo-remainder multiplier lc(B)^(delta+1)
        lc = B[-1]
        for _ in range(delta + 1 - m):
            r = [c * lc for c in r]
        if not r:
            break
        divisor = g * (h**delta) if delta >= 0 else g
        r = [mpoly_div_exact(c, divisor) for c in r]
        prs.append(_strip(r))
        g = B[-1]
        if delta == 0:
            pass  # h unchanged
        elif delta == 1:
            h = g
        else:
            h = mpoly_div_exact(g**delta, h ** (delta - 1))
        if len(prs[-1]) - 1 <= 0:
            break
    return prs


def psc_list(a, b):
    """Principal subresultant coefficients psc_0 .. psc_{deg b - 1} (after
    arranging deg a >= deg b), identically-zero entries omitted.

    Entries can differ from the textbook normalization by powers of leading
    coefficients; for sign-invariant decompositions this is harmless because
    those leading coefficients are carried alongside in the projection.
    """
    a, b = _strip(list(a)), _strip(list(b))
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    db = len(b) - 1
    if db <= 0:
        return []
    variables = a[0].variables
    zero = MultiPoly.zero(variables)
    subres = [None] * db  # nominal subresultants S_0 .. S_{db-1}
    for i, cur in enumerate(subresultant_prs(a, b)):
        if i < 2:
            prev = cur
            continue
        d_prev, d_cur = len(prev) - 1, len(cur) - 1
        if 0 <= d_prev - 1 < db:
            subres[d_prev - 1] = cur
        if d_cur < d_prev - 1 and d_cur < db:
            subres[d_cur] = upoly_scale(cur, cur[-1] ** (d_prev - d_cur - 1))
        prev = cur
    out = []
    for j in range(db):
        s = subres[j]
        if s is None:
            continue  # identically zero at and below the gcd degree
        c = s[j] if j < len(s) else zero
        if not c.is_zero():
            out.append(c)
    return out


def sylvester_matrix(a, b):
    m, n = len(a) - 1, len(b) - 1
    if m < 0 or n < 0:
        raise ValueError("zero polynomial has no resultant")
    variables = a[0].variables
    zero = MultiPoly.zero(variables)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant(a, b) -> MultiPoly:
    """Resultant with respect to the distinguished variable, exact.

    Fraction-free Bareiss elimination on the Sylvester matrix; entries stay
    polynomial throughout.
    """
    a, b = _strip(list(a)), _strip(list(b))
    if not a or not b:
        raise ValueError("zero polynomial has no resultant")
    variables = a[0].variables
    if len(a) - 1 == 0:
        return a[0] ** (len(b) - 1)
    if len(b) - 1 == 0:
        return b[0] ** (len(a) - 1)
    rows = sylvester_matrix(a, b)
    n = len(rows)
    one = MultiPoly.constant(variables, Fraction(1))
    prev = one
    sign = 1
    for k in range(n - 1):
        if rows[k][k].is_zero():
            for i in range(k + 1, n):
                if not rows[i][k].is_zero():
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(variables)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]
                rows[i][j] = mpoly_div_exact(num, prev)
            rows[i][k] = MultiPoly.zero(variables)
        prev = rows[k][k]
    out = rows[n - 1][n - 1]
    return -out if sign < 0 else out


# -- multivariate gcd and squarefree parts ----------------------------------------


def _content_wrt(coeffs) -> MultiPoly:
    g = MultiPoly.zero(coeffs[0].variables)
    for c in coeffs:
        g = mpoly_gcd(g, c)
    return g


def mpoly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Greatest common divisor, returned in primitive integer form with a
    positive leading coefficient (constants collapse to 1).

    Works along one shared variable with the subresultant remainder sequence
    (whose exact divisions keep coefficient growth polynomial), recursing only
    for contents."""
    if a.is_zero():
        return b.sign_canonical()
    if b.is_zero():
        return a.sign_canonical()
    a = a.sign_canonical()
    b = b.sign_canonical()
    shared = sorted(a.used_variables() & b.used_variables())
    if not shared:
        return MultiPoly.constant(a.variables, Fraction(1))
    x = shared[-1]
    ca = lift_coeffs(a, x)
    cb = lift_coeffs(b, x)
    cont_a = _content_wrt(ca)
    cont_b = _content_wrt(cb)
    cont = mpoly_gcd(cont_a, cont_b)
    pa = [mpoly_div_exact(c, cont_a) for c in ca]
    pb = [mpoly_div_exact(c, cont_b) for c in cb]
    chain = subresultant_prs(pa, pb)
    last = chain[-1]
    if len(last) == 1:
        pp = [MultiPoly.constant(a.variables, Fraction(1))]
    else:
        cl = _content_wrt(last)
        pp = [mpoly_div_exact(c, cl) for c in last]
    g = cont * collapse(pp, x)
    return g.sign_canonical()


def mpoly_squarefree_part(p: MultiPoly) -> MultiPoly:
    """Product of the distinct irreducible factors, primitive integer form."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = p.sign_canonical()
    if p.is_constant():
        return MultiPoly.constant(p.variables, Fraction(1))
    g = p
    for v in sorted(p.used_variables()):
        g = mpoly_gcd(g, p.derivative(v))
        if g.is_constant():
            return p
    return mpoly_div_exact(p, g).sign_canonical()
