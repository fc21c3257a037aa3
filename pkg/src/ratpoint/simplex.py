"""Exact rational linear programming, feasibility only.

A small two-phase simplex (phase one with Bland's rule, which cannot cycle)
over ``Fraction``.  Big enough for convex-hull membership tests and small
structural feasibility problems; not a general-purpose LP solver.
"""

from __future__ import annotations

from fractions import Fraction

from ratpoint.rationals import qq


def _phase_one(rows, b, n):
    """Find x >= 0 with rows*x == b (b >= 0), or None.  Modifies copies."""
    m = len(rows)
    # tableau columns: n structural + m artificial, then rhs
    tab = []
    for i in range(m):
        tab.append(rows[i] + [Fraction(int(j == i)) for j in range(m)] + [b[i]])
    basis = [n + i for i in range(m)]
    # objective: minimize sum of artificials -> reduced cost row
    cost = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n + m + 1):
            cost[j] += tab[i][j]
    # artificial columns start with cost 1 - 1 = 0 handled by the sum above
    for j in range(n, n + m):
        cost[j] -= Fraction(1)

    total = n + m
    while True:
        enter = None
        for j in range(total):
            if cost[j] > 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][total] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # unbounded phase-one objective cannot happen; defensive
            return None
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if cost[enter]:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, tab[leave])]
        basis[leave] = enter

    if cost[total] != 0:
        return None
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[i][total]
        elif tab[i][total]:
            return None  # artificial stuck at a nonzero level
    return x


def equality_feasible(rows, b):
    """Some x >= 0 with rows x == b, or None."""
    rows = [[qq(c) for c in r] for r in rows]
    b = [qq(v) for v in b]
    n = len(rows[0]) if rows else 0
    for i in range(len(rows)):
        if b[i] < 0:
            rows[i] = [-c for c in rows[i]]
            b[i] = -b[i]
    return _phase_one(rows, b, n)


def feasible_point(n_vars: int, constraints, nonneg=()):
    """Feasibility for linear constraints over possibly-free variables.

    constraints: iterable of (coeffs, rel, rhs) with rel in {"<=", ">=", "="}.
    Variables not listed in nonneg are free and get split internally.
    Returns a satisfying assignment as a list of Fractions, or None.
    """
    nonneg = set(nonneg)
    # column map: nonneg var -> one column; free var -> positive and negative parts
    col_of = {}
    ncols = 0
    for v in range(n_vars):
        if v in nonneg:
            col_of[v] = (ncols,)
            ncols += 1
        else:
            col_of[v] = (ncols, ncols + 1)
            ncols += 2
    rows, rhs = [], []
    slack_count = sum(1 for _, rel, _ in constraints if rel in ("<=", ">="))
    slack_base = ncols
    ncols += slack_count
    s_idx = 0
    for coeffs, rel, b in constraints:
        row = [Fraction(0)] * ncols
        for v, c in enumerate(coeffs):
            c = qq(c)
            if not c:
                continue
            cols = col_of[v]
            row[cols[0]] += c
            if len(cols) == 2:
                row[cols[1]] -= c
        if rel == "<=":
            row[slack_base + s_idx] = Fraction(1)
            s_idx += 1
        elif rel == ">=":
            row[slack_base + s_idx] = Fraction(-1)
            s_idx += 1
        elif rel != "=":
            raise ValueError(f"unknown relation {rel!r}")
        rows.append(row)
        rhs.append(qq(b))
    x = equality_feasible(rows, rhs)
    if x is None:
        return None
    out = []
    for v in range(n_vars):
        cols = col_of[v]
        if len(cols) == 1:
            out.append(x[cols[0]])
        else:
            out.append(x[cols[0]] - x[cols[1]])
    return out


def in_convex_hull(point, vertices) -> bool:
    """Exact membership of a rational point in the convex hull of a finite set."""
    point = [qq(c) for c in point]
    vertices = [[qq(c) for c in v] for v in vertices]
    if not vertices:
        return False
    dim = len(point)
    rows = []
    rhs = []
    for d in range(dim):
        rows.append([v[d] for v in vertices])
        rhs.append(point[d])
    rows.append([Fraction(1)] * len(vertices))
    rhs.append(Fraction(1))
    return equality_feasible(rows, rhs) is not None
