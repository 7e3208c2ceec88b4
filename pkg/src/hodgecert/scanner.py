"""Grid scanning and deterministic report serialization.

Every writer here is reproducible: rows are generated in sorted (p, r, n)
order, serialized with a fixed field order and no timestamps, and written
atomically (temp file + rename) so an interrupted run never leaves a
partial report behind.
"""

import csv
import io
import json
import os
import tempfile
from dataclasses import dataclass

from ._version import __version__
from .errors import (
    EquivalenceFailedError,
    ExponentTooSmallError,
    InternalInvariantError,
    NotPrimeError,
    OracleDisagreementError,
    ParameterError,
)
from .hodge_report import (
    HodgeCertificate,
    ProductCertificate,
    Verdict,
    certify_single,
)
from .params import MAX_SUPPORTED, ConditionStatus, CurveParams, classify, is_prime, validate
from .witness import (
    Witness,
    brute_force_witness,
    constructive_witness_prime,
    constructive_witness_q,
    verify_witness,
)

SCHEMA_VERSION = "1"
TOOL = f"hodgecert {__version__}"

MODES = ("certify", "witness", "remark_check")
FORMATS = ("json", "csv")
METHODS = ("constructive", "brute", "both")

CSV_COLUMNS = (
    "n",
    "p",
    "r",
    "q",
    "holds_A",
    "holds_B",
    "holds_C",
    "witness_constructive_i",
    "witness_constructive_branch",
    "witness_bruteforce_i",
    "verdict",
    "dim_abelian_variety",
    "dim_unitary",
    "dim_center",
    "dim_semisimple",
)


@dataclass(frozen=True)
class ScanSpec:
    """Parameters of a grid scan over primes x exponents x degrees."""

    n_min: int
    n_max: int
    primes: tuple[int, ...]
    r_max: int
    mode: str = "certify"
    output_path: str | None = None
    format: str = "json"

    def __post_init__(self) -> None:
        if self.n_min > self.n_max:
            raise ParameterError(f"empty degree range [{self.n_min}, {self.n_max}]")
        if not self.primes:
            raise ParameterError("no primes given")
        for p in self.primes:
            if not is_prime(p):
                raise NotPrimeError(f"p = {p} is not prime")
        if self.r_max < 1:
            raise ExponentTooSmallError(f"r_max = {self.r_max}; need at least 1")
        if self.mode not in MODES:
            raise ParameterError(f"unknown mode {self.mode!r}")
        if self.format not in FORMATS:
            raise ParameterError(f"unknown format {self.format!r}")


@dataclass(frozen=True)
class ScanRow:
    n: int
    p: int
    r: int
    q: int
    holds_A: bool
    holds_B: bool
    holds_C: bool
    witness_constructive: tuple[int, str] | None
    witness_bruteforce: int | None
    verdict: str
    dim_abelian_variety: int | None
    dim_unitary: int | None
    dim_center: int | None
    dim_semisimple: int | None


@dataclass(frozen=True)
class RemarkReport:
    """Outcome of the power-of-two precondition check at q = 4."""

    n_max: int
    passed: bool
    matching: tuple[int, ...]


@dataclass(frozen=True)
class CrossValidationReport:
    points: int
    prime_construction_checked: int
    general_construction_checked: int
    oracle_agreements: int


# ---------- serialization ----------


def witness_to_dict(w: Witness) -> dict:
    return {
        "i": w.i,
        "floor_value": w.floor_value,
        "branch": w.branch.value,
        "determinant_check": w.determinant_check,
        "bezout": (
            None
            if w.bezout is None
            else {"d_prime": w.bezout.d_prime, "q_prime": w.bezout.q_prime, "j": w.bezout.j}
        ),
    }


def conditions_to_dict(cs: ConditionStatus) -> dict:
    return {
        "A": cs.holds_A,
        "B": cs.holds_B,
        "C": cs.holds_C,
        "n_gt_q": cs.n_gt_q,
        "witness_prime_applicable": cs.witness_prime_applicable,
        "witness_prime_case": cs.witness_prime_case,
        "witness_q_applicable": cs.witness_q_applicable,
        "theorem_applicable": cs.theorem_applicable,
        "product_applicable": cs.product_applicable,
    }


def certificate_to_dict(cert: HodgeCertificate) -> dict:
    pr = cert.params
    return {
        "n": pr.n,
        "p": pr.p,
        "r": pr.r,
        "q": pr.q,
        "verdict": cert.verdict.value,
        "assumption": cert.assumption_note,
        "conditions": conditions_to_dict(cert.conditions),
        "witness": None if cert.witness is None else witness_to_dict(cert.witness),
        "dim_abelian_variety": cert.dim_abelian_variety,
        "dim_unitary": cert.dim_unitary,
        "dim_center": cert.dim_center,
        "dim_semisimple": cert.dim_semisimple,
    }


def product_to_dict(cert: ProductCertificate) -> dict:
    pr = cert.params
    return {
        "n": pr.n,
        "p": pr.p,
        "r": pr.r,
        "q": pr.q,
        "dim_center_product": cert.dim_center_product,
        "dim_total": cert.dim_total,
        "isogeny_note": cert.isogeny_note,
        "levels": [certificate_to_dict(lv) for lv in cert.levels],
    }


def row_to_dict(row: ScanRow) -> dict:
    wc = row.witness_constructive
    return {
        "n": row.n,
        "p": row.p,
        "r": row.r,
        "q": row.q,
        "holds_A": row.holds_A,
        "holds_B": row.holds_B,
        "holds_C": row.holds_C,
        "witness_constructive": None if wc is None else {"i": wc[0], "branch": wc[1]},
        "witness_bruteforce": row.witness_bruteforce,
        "verdict": row.verdict,
        "dim_abelian_variety": row.dim_abelian_variety,
        "dim_unitary": row.dim_unitary,
        "dim_center": row.dim_center,
        "dim_semisimple": row.dim_semisimple,
    }


def render_json(payload: dict) -> bytes:
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def report_envelope(key: str, value) -> dict:
    return {"schema_version": SCHEMA_VERSION, "tool": TOOL, key: value}


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def rows_to_csv_bytes(rows: list[ScanRow]) -> bytes:
    buf = io.StringIO()
    buf.write(f"# tool: {TOOL}, schema: {SCHEMA_VERSION}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        wc = row.witness_constructive
        writer.writerow(
            [
                _csv_cell(v)
                for v in (
                    row.n,
                    row.p,
                    row.r,
                    row.q,
                    row.holds_A,
                    row.holds_B,
                    row.holds_C,
                    None if wc is None else wc[0],
                    None if wc is None else wc[1],
                    row.witness_bruteforce,
                    row.verdict,
                    row.dim_abelian_variety,
                    row.dim_unitary,
                    row.dim_center,
                    row.dim_semisimple,
                )
            ]
        )
    return buf.getvalue().encode("utf-8")


def rows_to_json_bytes(rows: list[ScanRow]) -> bytes:
    return render_json(report_envelope("rows", [row_to_dict(r) for r in rows]))


def atomic_write(path: str, data: bytes) -> None:
    """Write via a temp file in the target directory, then rename into place."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".hodgecert-", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


# ---------- row building ----------


def _grid(spec: ScanSpec):
    """Yield validated params in sorted (p, r, n) order, skipping invalid points."""
    for p in sorted(set(spec.primes)):
        for r in range(1, spec.r_max + 1):
            if p**r > MAX_SUPPORTED:
                break
            for n in range(max(spec.n_min, 4), spec.n_max + 1):
                if n % p == 0:
                    continue
                yield validate(n, p, r)


def compute_row(params: CurveParams, method: str = "both") -> ScanRow:
    """One scan row; every emitted witness is re-verified first."""
    if method not in METHODS:
        raise ParameterError(f"unknown method {method!r}")
    conds = classify(params)

    wc: tuple[int, str] | None = None
    if method in ("constructive", "both"):
        cand: Witness | None = None
        if conds.witness_prime_applicable:
            cand = constructive_witness_prime(params)
        elif conds.witness_q_applicable:
            cand = constructive_witness_q(params)
        if cand is not None:
            if not verify_witness(params, cand):
                raise InternalInvariantError(
                    f"constructive witness failed verification at n={params.n}, q={params.q}"
                )
            wc = (cand.i, cand.branch.value)

    wb: int | None = None
    if method in ("brute", "both"):
        found = brute_force_witness(params)
        if found is not None:
            if not verify_witness(params, found):
                raise InternalInvariantError(
                    f"oracle witness failed verification at n={params.n}, q={params.q}"
                )
            wb = found.i

    if params.q == 2:
        # No certification at q = 2: the dimension ledger is undefined there.
        return ScanRow(
            n=params.n,
            p=params.p,
            r=params.r,
            q=params.q,
            holds_A=conds.holds_A,
            holds_B=conds.holds_B,
            holds_C=conds.holds_C,
            witness_constructive=wc,
            witness_bruteforce=wb,
            verdict=Verdict.OUT_OF_SCOPE.value,
            dim_abelian_variety=None,
            dim_unitary=None,
            dim_center=None,
            dim_semisimple=None,
        )

    cert = certify_single(params)
    return ScanRow(
        n=params.n,
        p=params.p,
        r=params.r,
        q=params.q,
        holds_A=conds.holds_A,
        holds_B=conds.holds_B,
        holds_C=conds.holds_C,
        witness_constructive=wc,
        witness_bruteforce=wb,
        verdict=cert.verdict.value,
        dim_abelian_variety=cert.dim_abelian_variety,
        dim_unitary=cert.dim_unitary,
        dim_center=cert.dim_center,
        dim_semisimple=cert.dim_semisimple,
    )


def build_rows(spec: ScanSpec, method: str = "both") -> list[ScanRow]:
    return [compute_row(params, method) for params in _grid(spec)]


def run_scan(spec: ScanSpec, method: str = "both") -> tuple[list[ScanRow], bytes]:
    """Build all rows, render them, and write the report if a path is set.

    Identical specs always produce identical bytes.
    """
    rows = build_rows(spec, method)
    payload = rows_to_csv_bytes(rows) if spec.format == "csv" else rows_to_json_bytes(rows)
    if spec.output_path is not None:
        atomic_write(spec.output_path, payload)
    return rows, payload


# ---------- equivalence check at p = 2, q = 4 ----------


def run_remark_check(n_max: int) -> RemarkReport:
    """Verify that at (p, q) = (2, 4) the general witness route applies
    exactly for n congruent to 7 modulo 8, over all odd n in [5, n_max].

    Raises EquivalenceFailedError with the first counterexample.
    """
    if n_max < 9:
        raise ParameterError(f"n_max = {n_max}; need at least 9")
    matching: list[int] = []
    for n in range(5, n_max + 1, 2):
        applicable = classify(validate(n, 2, 2)).witness_q_applicable
        expected = n % 8 == 7
        if applicable != expected:
            raise EquivalenceFailedError(f"counterexample n = {n}")
        if applicable:
            matching.append(n)
    return RemarkReport(n_max=n_max, passed=True, matching=tuple(matching))


def remark_report_to_dict(report: RemarkReport) -> dict:
    return {
        "n_max": report.n_max,
        "passed": report.passed,
        "matching_count": len(report.matching),
        "matching": list(report.matching),
        "counterexample": None,
    }


# ---------- constructive vs oracle cross-validation ----------


def run_cross_validate(spec: ScanSpec) -> CrossValidationReport:
    """Check constructive routes against the exhaustive oracle on the grid.

    At every point where a constructive route applies, its witness must
    verify and the oracle must find some witness.  Raises
    OracleDisagreementError at the first failure.
    """
    points = 0
    prime_checked = 0
    general_checked = 0
    agreements = 0
    for params in _grid(spec):
        points += 1
        conds = classify(params)
        any_checked = False
        if conds.witness_prime_applicable:
            w = constructive_witness_prime(params)
            if not verify_witness(params, w):
                raise OracleDisagreementError(
                    f"odd-prime construction invalid at n={params.n}, p={params.p}, r={params.r}"
                )
            prime_checked += 1
            any_checked = True
        if conds.witness_q_applicable:
            w = constructive_witness_q(params)
            if not verify_witness(params, w):
                raise OracleDisagreementError(
                    f"general construction invalid at n={params.n}, p={params.p}, r={params.r}"
                )
            general_checked += 1
            any_checked = True
        if any_checked:
            if brute_force_witness(params) is None:
                raise OracleDisagreementError(
                    f"oracle found no witness at n={params.n}, p={params.p}, r={params.r}"
                )
            agreements += 1
    return CrossValidationReport(
        points=points,
        prime_construction_checked=prime_checked,
        general_construction_checked=general_checked,
        oracle_agreements=agreements,
    )


def cross_validation_to_dict(report: CrossValidationReport) -> dict:
    return {
        "points": report.points,
        "prime_construction_checked": report.prime_construction_checked,
        "general_construction_checked": report.general_construction_checked,
        "oracle_agreements": report.oracle_agreements,
        "disagreements": 0,
    }
