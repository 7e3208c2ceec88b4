"""Independent exact-arithmetic oracle for the multi-level center dimension.

Works directly in the cyclotomic fields Q(zeta_{p^s}) with Fraction
coordinates in the power basis.  The center dimension is recovered as the
nullity of a stacked linear system: one conjugation-antisymmetry block per
level and one relative-trace compatibility block per consecutive pair of
levels.  Nothing here shares code with the package under test; the package
computes the same number by a closed-form count.
"""

from fractions import Fraction
from math import gcd

Vector = list[Fraction]
Matrix = list[Vector]

ZERO = Fraction(0)
ONE = Fraction(1)


def phi_count(m: int) -> int:
    """Euler phi by direct gcd counting; deliberately not the closed form."""
    return sum(1 for t in range(1, m + 1) if gcd(t, m) == 1)


def _zeta_power_table(p: int, s: int) -> list[Vector]:
    """Coordinates of zeta^t, t = 0..m-1, in the power basis of Q(zeta_m).

    m = p^s, degree d = phi(m).  The minimal polynomial is
    1 + x^{p^{s-1}} + x^{2 p^{s-1}} + ... + x^{(p-1) p^{s-1}},
    so zeta^d = -(1 + zeta^{p^{s-1}} + ... + zeta^{(p-2) p^{s-1}}).
    """
    m = p**s
    d = phi_count(m)
    step = p ** (s - 1)
    reduction = [ZERO] * d
    for j in range(p - 1):
        reduction[j * step] = Fraction(-1)

    table: list[Vector] = [[ONE] + [ZERO] * (d - 1)]
    for _t in range(1, m):
        prev = table[-1]
        nxt = [ZERO] + prev[: d - 1]
        top = prev[d - 1]
        if top != 0:
            nxt = [a + top * b for a, b in zip(nxt, reduction)]
        table.append(nxt)
    return table


def _automorphism_matrix(p: int, s: int, a: int) -> Matrix:
    """Matrix of zeta -> zeta^a on the power basis, rows indexed by basis."""
    m = p**s
    d = phi_count(m)
    assert gcd(a, m) == 1
    table = _zeta_power_table(p, s)
    cols = [table[(a * k) % m] for k in range(d)]
    return [[cols[k][row] for k in range(d)] for row in range(d)]


def _mat_vec(mat: Matrix, vec: Vector) -> Vector:
    return [sum((row[k] * vec[k] for k in range(len(vec))), ZERO) for row in mat]


def _solve_exact(mat: Matrix, rhs: Vector) -> Vector:
    """Solve mat @ y = rhs for a (possibly overdetermined) consistent system."""
    rows = len(mat)
    cols = len(mat[0])
    aug = [list(mat[i]) + [rhs[i]] for i in range(rows)]
    pivot_cols: list[int] = []
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = ONE / aug[rank][col]
        aug[rank] = [x * inv for x in aug[rank]]
        for i in range(rows):
            if i != rank and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[rank])]
        pivot_cols.append(col)
        rank += 1
    for i in range(rank, rows):
        assert aug[i][cols] == 0, "inconsistent system"
    y = [ZERO] * cols
    for i, col in enumerate(pivot_cols):
        y[col] = aug[i][cols]
    assert _mat_vec(mat, y) == rhs
    return y


def conjugation_matrix(p: int, s: int) -> Matrix:
    """Complex conjugation zeta -> zeta^{-1} on Q(zeta_{p^s})."""
    m = p**s
    return _automorphism_matrix(p, s, m - 1)


def relative_trace_matrix(p: int, s: int) -> Matrix:
    """Trace from Q(zeta_{p^{s+1}}) down to Q(zeta_{p^s}), in subfield coordinates.

    The Galois group of the extension consists of zeta -> zeta^{1 + t p^s}
    for t = 0..p-1; the subfield embeds via zeta_{p^s} = zeta_{p^{s+1}}^p.
    """
    m_low = p**s
    m_high = p ** (s + 1)
    d_low = phi_count(m_low)
    d_high = phi_count(m_high)
    table_high = _zeta_power_table(p, s + 1)

    sigma = [_automorphism_matrix(p, s + 1, 1 + t * m_low) for t in range(p)]
    embed_cols = [table_high[(p * j) % m_high] for j in range(d_low)]
    embed = [[embed_cols[j][row] for j in range(d_low)] for row in range(d_high)]

    trace_cols: list[Vector] = []
    for k in range(d_high):
        basis_vec = [ONE if idx == k else ZERO for idx in range(d_high)]
        tr = [ZERO] * d_high
        for mat in sigma:
            img = _mat_vec(mat, basis_vec)
            tr = [a + b for a, b in zip(tr, img)]
        trace_cols.append(_solve_exact(embed, tr))
    return [[trace_cols[k][row] for k in range(d_high)] for row in range(d_low)]


def _rank(mat: Matrix) -> int:
    work = [list(row) for row in mat]
    rows = len(work)
    cols = len(work[0]) if rows else 0
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = ONE / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for i in range(rows):
            if i != rank and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[rank])]
        rank += 1
    return rank


def center_dimension_oracle(p: int, r: int) -> int:
    """Nullity of the stacked antisymmetry + trace-compatibility system.

    Variables are the power-basis coordinates of one element per level
    q = p, ..., p^r.  An element tuple lies in the center model iff every
    component is purely imaginary and consecutive components are linked by
    the relative trace.
    """
    dims = [phi_count(p**s) for s in range(1, r + 1)]
    total = sum(dims)
    offsets = [sum(dims[:i]) for i in range(r)]
    rows: Matrix = []

    for s in range(1, r + 1):
        conj = conjugation_matrix(p, s)
        d = dims[s - 1]
        off = offsets[s - 1]
        for i in range(d):
            row = [ZERO] * total
            for k in range(d):
                row[off + k] = conj[i][k]
            row[off + i] += ONE
            rows.append(row)

    for s in range(1, r):
        trace = relative_trace_matrix(p, s)
        d_low, d_high = dims[s - 1], dims[s]
        off_low, off_high = offsets[s - 1], offsets[s]
        for i in range(d_low):
            row = [ZERO] * total
            for k in range(d_high):
                row[off_high + k] = trace[i][k]
            row[off_low + i] -= ONE
            rows.append(row)

    return total - _rank(rows)
