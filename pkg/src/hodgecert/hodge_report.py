"""Certificates for the Hodge group of the new part.

A single-level certificate decides whether the group is the full unitary
group of the CM Hermitian form and always carries the exact dimension
ledger (unitary = center + semisimple).  A product certificate stacks one
determined certificate per level q = p, p^2, ..., p^r and adds the center
of the multi-level algebra, whose dimension is phi(p^r)/2.
"""

from dataclasses import dataclass
from enum import Enum

from .cm_type import multiplicities, new_part_dim, semisimplicity_criterion
from .errors import (
    ExponentTooSmallError,
    HyperellipticExcludedError,
    LevelInconclusiveError,
    NotPrimeError,
    ProductHypothesisFailedError,
)
from .params import ConditionStatus, CurveParams, classify, is_prime, validate
from .witness import Witness, constructive_witness_prime, constructive_witness_q, verify_witness


class Verdict(Enum):
    DETERMINED = "Determined"
    INCONCLUSIVE = "Inconclusive"
    OUT_OF_SCOPE = "OutOfScope"


# The determination criterion is conditional on the Galois group of f; that
# hypothesis cannot be evaluated from (n, p, r) alone, so every certificate
# records it as an assumption instead of silently relying on it.
GALOIS_ASSUMPTION = (
    "assumes f is separable of degree n with Galois group S_n or A_n, "
    "where n >= 5, or n = 4 with group S_4; not verifiable from (n, p, r)"
)

# Transporting the product ledger from the product of new parts to the full
# jacobian fixes an isogeny; the certified Lie algebra is determined up to
# the corresponding conjugation.
ISOGENY_NOTE = (
    "dimensions computed on the product of new parts; transport to the "
    "jacobian is by conjugation under a fixed isogeny"
)


@dataclass(frozen=True)
class HodgeCertificate:
    params: CurveParams
    verdict: Verdict
    assumption_note: str
    witness: Witness | None
    dim_abelian_variety: int
    dim_unitary: int
    dim_center: int
    dim_semisimple: int
    conditions: ConditionStatus


@dataclass(frozen=True)
class ProductCertificate:
    params: CurveParams
    levels: tuple[HodgeCertificate, ...]
    dim_center_product: int
    dim_total: int
    isogeny_note: str


def unitary_dims(params: CurveParams) -> tuple[int, int, int]:
    """(unitary, center, semisimple) dimensions over the rationals for d = n - 1."""
    phi = params.phi
    d2 = (params.n - 1) ** 2
    dim_u = phi * d2 // 2
    dim_c = phi // 2
    dim_ss = phi * (d2 - 1) // 2
    assert dim_c + dim_ss == dim_u
    return dim_u, dim_c, dim_ss


def certify_single(params: CurveParams) -> HodgeCertificate:
    """Certify one level.  Determined iff the sufficiency conditions hold,
    a constructive witness verifies, and the multiplicity criterion holds;
    the dimension ledger is populated either way."""
    if params.q == 2:
        raise HyperellipticExcludedError("q = 2 certificates are out of scope")

    conds = classify(params)
    dim_u, dim_c, dim_ss = unitary_dims(params)

    verdict = Verdict.INCONCLUSIVE
    witness: Witness | None = None
    if conds.theorem_applicable:
        if conds.witness_prime_applicable:
            cand = constructive_witness_prime(params)
        else:
            cand = constructive_witness_q(params)
        flag, _tau = semisimplicity_criterion(multiplicities(params))
        if verify_witness(params, cand) and flag:
            verdict = Verdict.DETERMINED
            witness = cand

    return HodgeCertificate(
        params=params,
        verdict=verdict,
        assumption_note=GALOIS_ASSUMPTION,
        witness=witness,
        dim_abelian_variety=new_part_dim(params),
        dim_unitary=dim_u,
        dim_center=dim_c,
        dim_semisimple=dim_ss,
        conditions=conds,
    )


def center_dim_product(p: int, r: int) -> int:
    """Dimension phi(p^r)/2 of the multi-level center for odd p.

    The center consists of trace-compatible tuples of purely imaginary
    cyclotomic elements; each tuple is determined by its top component.
    """
    if not is_prime(p):
        raise NotPrimeError(f"p = {p} is not prime")
    if p == 2:
        raise ProductHypothesisFailedError("the multi-level center needs p odd")
    if r < 1:
        raise ExponentTooSmallError(f"r = {r}; need r >= 1")
    return p ** (r - 1) * (p - 1) // 2


def certify_product(params: CurveParams) -> ProductCertificate:
    """Certify all levels q = p, ..., p^r at once.

    Requires p odd, p coprime to n(n-1), and n > q; under those hypotheses
    every level is individually determined, and the total ledger is the
    multi-level center plus the per-level semisimple parts.
    """
    n, p, r, q = params.n, params.p, params.r, params.q
    if p == 2:
        raise ProductHypothesisFailedError("product certification needs p odd")
    if (n * (n - 1)) % p == 0:
        raise ProductHypothesisFailedError(f"p = {p} divides n(n-1) = {n * (n - 1)}")
    if n <= q:
        raise ProductHypothesisFailedError(f"need n > q; got n = {n}, q = {q}")

    levels = tuple(certify_single(validate(n, p, i)) for i in range(1, r + 1))
    for i, cert in enumerate(levels, start=1):
        if cert.verdict is not Verdict.DETERMINED:
            raise LevelInconclusiveError(f"level q = {p}^{i} came back {cert.verdict.value}")

    center = center_dim_product(p, r)
    total = center + sum(cert.dim_semisimple for cert in levels)
    return ProductCertificate(
        params=params,
        levels=levels,
        dim_center_product=center,
        dim_total=total,
        isogeny_note=ISOGENY_NOTE,
    )
