"""Validated curve parameters and sufficiency-condition classification.

A parameter triple (n, p, r) describes a superelliptic curve y^q = f(x)
with q = p^r, p prime, p not dividing n = deg(f), and n >= 4.  The
classifier evaluates, by pure integer arithmetic, the conditions under
which the Hodge group of the new part of the jacobian is determined.
"""

from dataclasses import dataclass

from .errors import (
    BoundExceededError,
    DegreeTooSmallError,
    DividesDegreeError,
    ExponentTooSmallError,
    NotPrimeError,
)

# n and q are both capped at 2^40 so every product formed anywhere in the
# library (n*i with i < q, dimension ledgers in (n-1)^2) stays well inside
# 128 bits.  Larger inputs are rejected explicitly rather than silently
# accepted.
MAX_SUPPORTED = 1 << 40

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin; exact for all m < 3.3 * 10^24."""
    if m < 2:
        return False
    for sp in _MR_BASES:
        if m % sp == 0:
            return m == sp
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CurveParams:
    """Immutable validated parameters; build them through validate()."""

    n: int
    p: int
    r: int
    q: int

    @property
    def phi(self) -> int:
        """Euler phi of q = p^r, i.e. p^(r-1) * (p - 1)."""
        return self.q // self.p * (self.p - 1)


@dataclass(frozen=True)
class ConditionStatus:
    """Outcome of classify(): which sufficiency conditions hold at (n, p, q).

    holds_A / holds_B / holds_C are the three alternative conditions of the
    determination criterion; theorem_applicable requires n > q together with
    at least one of them.  The witness_* flags report whether the respective
    constructive witness routine applies, and product_applicable whether the
    multi-level (product) certification hypotheses on p hold.
    """

    holds_A: bool
    holds_B: bool
    holds_C: bool
    n_gt_q: bool
    witness_prime_applicable: bool
    witness_prime_case: str | None
    witness_q_applicable: bool
    theorem_applicable: bool
    product_applicable: bool


def validate(n: int, p: int, r: int) -> CurveParams:
    """Check (n, p, r) and return CurveParams with q = p^r.

    Raises ExponentTooSmallError, NotPrimeError, DegreeTooSmallError,
    DividesDegreeError, or BoundExceededError on bad input.
    """
    if r < 1:
        raise ExponentTooSmallError(f"r = {r}; the exponent must be at least 1")
    if not is_prime(p):
        raise NotPrimeError(f"p = {p} is not prime")
    if n < 4:
        raise DegreeTooSmallError(f"n = {n}; the degree must be at least 4")
    if n % p == 0:
        raise DividesDegreeError(f"p = {p} divides n = {n}")
    if n > MAX_SUPPORTED:
        raise BoundExceededError(f"n = {n} exceeds the supported bound 2^40")
    # p >= 2, so r > 40 already forces q > 2^40; bail before computing p**r.
    if r > 40:
        raise BoundExceededError(f"q = {p}^{r} exceeds the supported bound 2^40")
    q = p**r
    if q > MAX_SUPPORTED:
        raise BoundExceededError(f"q = {p}^{r} = {q} exceeds the supported bound 2^40")
    return CurveParams(n=n, p=p, r=r, q=q)


def classify(params: CurveParams) -> ConditionStatus:
    """Evaluate every sufficiency condition literally, with no extrapolation."""
    n, p, q = params.n, params.p, params.q
    odd = p != 2

    holds_a = q < n < 2 * q
    holds_b = odd and n % q != 1
    holds_c = (not odd) and n % q != 1 and n % (2 * q) != q - 1
    n_gt_q = n > q

    # Constructive witness, odd-prime route: either q < n < 2q, or p odd
    # together with (p coprime to n-1, or n < 2q).
    case: str | None = None
    if holds_a:
        case = "i"
    elif odd and ((n - 1) % p != 0 or n < 2 * q):
        case = "ii"

    # Constructive witness, general prime-power route: q must not divide
    # n - 1; for p = 2 additionally q > 2 and n not congruent to q - 1
    # modulo 2q.
    witness_q = (n - 1) % q != 0 and (odd or (q > 2 and n % (2 * q) != q - 1))

    return ConditionStatus(
        holds_A=holds_a,
        holds_B=holds_b,
        holds_C=holds_c,
        n_gt_q=n_gt_q,
        witness_prime_applicable=case is not None,
        witness_prime_case=case,
        witness_q_applicable=witness_q,
        theorem_applicable=n_gt_q and (holds_a or holds_b or holds_c),
        product_applicable=odd and (n * (n - 1)) % p != 0,
    )
