"""Coprimality witnesses.

A witness for (n, p, q) is an integer i with 1 <= i <= q - 1, gcd(i, p) = 1,
and gcd(floor(n*i/q), n - 1) = 1.  Such an i certifies that the semisimple
part of the Hodge group of the new part is everything the Hermitian form
allows.  Witnesses are produced two ways: constructively (case analysis on
(n mod q), modular inverses, and shifted Bezout solutions) and by an
exhaustive scan used as an independent oracle.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    BoundExceededError,
    InternalContradictionError,
    InternalInvariantError,
    ParameterError,
    PreconditionViolatedError,
)
from .params import CurveParams

# floor_mult guards its product at 2^128; validated params keep n*i < 2^80.
MAX_PRODUCT = 1 << 128


class Branch(Enum):
    """How a witness was obtained."""

    CASE_A_I1 = "CaseA_i1"                  # q < n < 2q, take i = 1
    HALF_RANGE_I2 = "HalfRange_i2"          # p odd, q/2 < n < q, take i = 2
    MULTIPLIER_SEARCH = "MultiplierSearch"  # p odd, n < q/2, smallest multiplier
    MODULAR_INVERSE = "ModularInverse"      # i = d^-1 mod q where d = (n mod q) - 1
    BEZOUT_CANDIDATE_0 = "BezoutCandidate0"  # base Bezout solution
    BEZOUT_CANDIDATE_1 = "BezoutCandidate1"  # Bezout solution shifted by q'
    POWER2_SPECIAL = "Power2Special"        # p = 2 and q divides n + 1
    BRUTE_FORCE = "BruteForce"              # exhaustive oracle scan


@dataclass(frozen=True)
class BezoutData:
    """Base solution of d'*i - q'*j = 1 with 0 < i <= q' - 1, j >= 0."""

    d_prime: int
    q_prime: int
    j: int


@dataclass(frozen=True)
class Witness:
    i: int
    floor_value: int
    branch: Branch
    bezout: BezoutData | None = None
    determinant_check: int | None = None


@dataclass(frozen=True)
class DerivationTrace:
    """The derived quantities k, c, d, t, d', q' for a parameter point.

    k = floor(n/q), c = n - k*q, d = c - 1, t = gcd(d, q), d' = d/t,
    q' = q/t.  Whenever q does not divide n - 1 these satisfy
    2 <= c <= q - 1 and 1 <= d <= q - 2.
    """

    k: int
    c: int
    d: int
    t: int
    d_prime: int
    q_prime: int
    steps: tuple[str, ...]


def floor_mult(n: int, i: int, q: int) -> int:
    """floor(n*i/q) by exact integer arithmetic."""
    if n < 1 or i < 1:
        raise ParameterError(f"floor_mult needs n, i >= 1; got n = {n}, i = {i}")
    if q < 2:
        raise ParameterError(f"floor_mult needs q >= 2; got q = {q}")
    prod = n * i
    if prod > MAX_PRODUCT:
        raise BoundExceededError(f"n*i = {prod} exceeds the supported product bound")
    return prod // q


def derivation_trace(params: CurveParams) -> DerivationTrace:
    """Compute k, c, d, t, d', q' for params, recording each step."""
    n, q = params.n, params.q
    k, c = divmod(n, q)
    d = c - 1
    t = math.gcd(d, q)  # gcd(0, q) = q when q divides n - 1
    d_prime = d // t
    q_prime = q // t
    steps = (
        f"k = floor({n}/{q}) = {k}",
        f"c = {n} - {k}*{q} = {c}",
        f"d = c - 1 = {d}",
        f"t = gcd({d}, {q}) = {t}",
        f"d' = {d}/{t} = {d_prime}",
        f"q' = {q}/{t} = {q_prime}",
    )
    return DerivationTrace(k=k, c=c, d=d, t=t, d_prime=d_prime, q_prime=q_prime, steps=steps)


def floor_correction_vanishes(trace: DerivationTrace, i: int, params: CurveParams) -> bool:
    """Whether the floor-correction term floor((t + i + q')/q) is zero.

    The shifted-candidate floor identities hold exactly when this term
    vanishes for the base Bezout solution i.
    """
    return (trace.t + i + trace.q_prime) // params.q == 0


def brute_force_witness(params: CurveParams) -> Witness | None:
    """Smallest admissible i found by scanning 1..q-1, or None.

    Serves as the independent oracle for the constructive routines.
    """
    n, p, q = params.n, params.p, params.q
    n1 = n - 1
    gcd = math.gcd
    for i in range(1, q):
        if i % p == 0:
            continue
        fv = n * i // q
        if gcd(fv, n1) == 1:
            return Witness(i=i, floor_value=fv, branch=Branch.BRUTE_FORCE)
    return None


def _modular_inverse_witness(params: CurveParams) -> Witness:
    """Witness i = d^-1 mod q, valid whenever d >= 1 and p does not divide d."""
    n, p, q = params.n, params.p, params.q
    tr = derivation_trace(params)
    if tr.d < 1 or tr.d % p == 0:
        raise PreconditionViolatedError(
            f"inverse route needs d >= 1 and p coprime to d; got d = {tr.d}, p = {p}"
        )
    i = pow(tr.d, -1, q)
    j = tr.c * i // q
    det = i * tr.d - q * j
    if det != 1:
        raise InternalInvariantError(f"determinant i*d - q*j = {det} != 1 at n = {n}, q = {q}")
    fv = floor_mult(n, i, q)
    assert fv == tr.k * i + j  # floor(n*i/q) = k*i + floor(c*i/q)
    assert math.gcd(i, p) == 1
    if math.gcd(fv, n - 1) != 1:
        raise InternalInvariantError(f"inverse witness not coprime at n = {n}, q = {q}")
    return Witness(i=i, floor_value=fv, branch=Branch.MODULAR_INVERSE, determinant_check=1)


def constructive_witness_prime(params: CurveParams) -> Witness:
    """Construct a witness via the odd-prime case analysis.

    Applies when q < n < 2q, or when p is odd and additionally p does not
    divide n - 1 or n < 2q.  Branches are tried in their proof order.
    """
    n, p, q = params.n, params.p, params.q

    if q < n < 2 * q:
        fv = floor_mult(n, 1, q)
        assert fv == 1
        return Witness(i=1, floor_value=fv, branch=Branch.CASE_A_I1)

    odd = p != 2
    if not (odd and ((n - 1) % p != 0 or n < 2 * q)):
        raise PreconditionViolatedError(
            f"odd-prime witness route does not apply at n = {n}, p = {p}, q = {q}"
        )

    if 2 * n > q and n < q:
        # q odd here, so n != q/2 and floor(2n/q) = 1 exactly.
        fv = floor_mult(n, 2, q)
        assert fv == 1
        return Witness(i=2, floor_value=fv, branch=Branch.HALF_RANGE_I2)

    if 2 * n < q:
        mu = -(-q // n)  # ceil(q/n); smallest multiplier with mu*n >= q
        if not (q < mu * n < (mu + 1) * n < 2 * q):
            raise InternalInvariantError(
                f"multiplier guard failed: q = {q}, n = {n}, mu = {mu}"
            )
        i = mu if mu % p != 0 else mu + 1
        assert i % p != 0  # consecutive integers cannot both be multiples of p
        fv = floor_mult(n, i, q)
        assert fv == 1
        return Witness(i=i, floor_value=fv, branch=Branch.MULTIPLIER_SEARCH)

    # Remaining range: n > 2q with p coprime to n - 1, hence p coprime to d.
    return _modular_inverse_witness(params)


def _power_of_two_witness(params: CurveParams) -> Witness:
    """p = 2 and q | n + 1: take i = q/2 - 1."""
    n, q = params.n, params.q
    k = (n + 1) // q
    if k % 2 != 0:
        # k odd would mean n = q - 1 mod 2q, excluded by the precondition.
        raise InternalInvariantError(f"odd ratio (n+1)/q = {k} at n = {n}, q = {q}")
    i = q // 2 - 1
    fv = floor_mult(n, i, q)
    assert fv == (q // 2 - 1) * k - 1
    if math.gcd(fv, n - 1) != 1:
        raise InternalInvariantError(f"power-of-two witness not coprime at n = {n}, q = {q}")
    return Witness(i=i, floor_value=fv, branch=Branch.POWER2_SPECIAL)


def _bezout_witness(params: CurveParams, tr: DerivationTrace) -> Witness:
    """p | d route: shifted Bezout candidates i and i + q'."""
    n, p, q = params.n, params.p, params.q
    t, dp, qp = tr.t, tr.d_prime, tr.q_prime
    # Here t > 1 and q' > 1 are powers of p, and gcd(d', q') = 1.
    assert t > 1 and qp > 1 and math.gcd(dp, qp) == 1

    i0 = pow(dp, -1, qp)  # unique solution with 0 < i0 <= q' - 1
    j0 = (dp * i0 - 1) // qp
    assert dp * i0 - qp * j0 == 1 and j0 >= 0
    bez = BezoutData(d_prime=dp, q_prime=qp, j=j0)

    if not floor_correction_vanishes(tr, i0, params):
        raise InternalInvariantError(
            f"floor correction did not vanish: t = {t}, i = {i0}, q' = {qp}, q = {q}"
        )

    for eps, branch in ((0, Branch.BEZOUT_CANDIDATE_0), (1, Branch.BEZOUT_CANDIDATE_1)):
        i = i0 + eps * qp
        j = j0 + eps * dp
        det = tr.d * i - q * j
        if det != t:
            raise InternalInvariantError(
                f"determinant d*i - q*j = {det} != t = {t} at n = {n}, q = {q}, eps = {eps}"
            )
        assert i % p != 0  # gcd(i0, q') = 1 and q' is a power of p
        fv = floor_mult(n, i, q)
        assert fv == tr.k * i + j  # correction term vanishes for both candidates
        if math.gcd(fv, n - 1) == 1:
            return Witness(
                i=i, floor_value=fv, branch=branch, bezout=bez, determinant_check=det
            )
    raise InternalContradictionError(
        f"both Bezout candidates failed at n = {n}, p = {p}, q = {q}"
    )


def constructive_witness_q(params: CurveParams) -> Witness:
    """Construct a witness via the general prime-power case analysis.

    Applies whenever q does not divide n - 1; for p = 2 additionally q > 2
    and n not congruent to q - 1 modulo 2q.
    """
    n, p, q = params.n, params.p, params.q
    if (n - 1) % q == 0:
        raise PreconditionViolatedError(f"q = {q} divides n - 1 = {n - 1}")
    if p == 2 and (q == 2 or n % (2 * q) == q - 1):
        raise PreconditionViolatedError(
            f"p = 2 route needs q > 2 and n != q - 1 mod 2q; got n = {n}, q = {q}"
        )

    tr = derivation_trace(params)
    if tr.d % p != 0:
        return _modular_inverse_witness(params)
    if p == 2 and (n + 1) % q == 0:
        return _power_of_two_witness(params)
    return _bezout_witness(params, tr)


def _verify_branch(params: CurveParams, w: Witness) -> bool:
    """Branch-specific invariants, recomputed from scratch."""
    n, p, q = params.n, params.p, params.q
    br = w.branch

    if br is Branch.BRUTE_FORCE:
        return True

    if br is Branch.CASE_A_I1:
        return w.i == 1 and q < n < 2 * q and w.floor_value == 1

    if br is Branch.HALF_RANGE_I2:
        return w.i == 2 and p != 2 and 2 * n > q and n < q and w.floor_value == 1

    if br is Branch.MULTIPLIER_SEARCH:
        if p == 2 or 2 * n >= q:
            return False
        mu = -(-q // n)
        if w.i not in (mu, mu + 1) or w.i % p == 0:
            return False
        return q < mu * n < (mu + 1) * n < 2 * q and w.floor_value == 1

    tr = derivation_trace(params)

    if br is Branch.MODULAR_INVERSE:
        if tr.d < 1 or tr.d % p == 0:
            return False
        j = tr.c * w.i // q
        return (
            (w.i * tr.d) % q == 1
            and w.i * tr.d - q * j == 1
            and w.determinant_check == 1
        )

    if br in (Branch.BEZOUT_CANDIDATE_0, Branch.BEZOUT_CANDIDATE_1):
        if tr.d < 1 or tr.d % p != 0:
            return False
        eps = 0 if br is Branch.BEZOUT_CANDIDATE_0 else 1
        dp, qp, t = tr.d_prime, tr.q_prime, tr.t
        if qp < 2 or t < 2:
            return False
        i0 = pow(dp, -1, qp)
        j0 = (dp * i0 - 1) // qp
        if w.bezout != BezoutData(d_prime=dp, q_prime=qp, j=j0):
            return False
        if w.i != i0 + eps * qp:
            return False
        det = tr.d * w.i - q * (j0 + eps * dp)
        return det == t and w.determinant_check == t and floor_correction_vanishes(tr, i0, params)

    if br is Branch.POWER2_SPECIAL:
        if p != 2 or q <= 2 or (n + 1) % q != 0:
            return False
        k = (n + 1) // q
        if k % 2 != 0 or n % (2 * q) == q - 1:
            return False
        return w.i == q // 2 - 1 and w.floor_value == (q // 2 - 1) * k - 1

    return False


def verify_witness(params: CurveParams, w: Witness) -> bool:
    """Recompute every witness invariant independently; True iff all hold."""
    n, p, q = params.n, params.p, params.q
    if not 1 <= w.i <= q - 1:
        return False
    if math.gcd(w.i, p) != 1:
        return False
    if w.floor_value != n * w.i // q:
        return False
    if math.gcd(w.floor_value, n - 1) != 1:
        return False
    return _verify_branch(params, w)
