"""Command-line front end.

Commands: generators | structure | h2 | sweep | verify.  Exit codes: 0 on
success, 1 when a verification or predictor/solver crosscheck fails, 2 on
input errors.  JSON output is key-sorted and rationals are serialized as
"p/q" strings, so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from multiprocessing import Pool

from .ck_matrix import (
    FAMILIES,
    I_LABEL,
    OmegaVector,
    build_generator,
    build_metric,
    is_metric_antihermitian,
    is_traceless,
    labels_for_family,
)
from .cohomology import CohomologySolver, OneCochain, coboundary
from .classify import (
    coefficient_cocycle,
    crosscheck,
    pair_combination,
    pair_mu,
    removal_mu,
)
from .lie_core import build_algebra, from_matrices, verify_jacobi

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2

SWEEP_COLUMNS = (
    "family",
    "N",
    "omega",
    "n_zeros",
    "dim_z2",
    "dim_b2",
    "dim_h2",
    "predicted",
    "match",
)


class InputError(Exception):
    """User-facing input problem; reported on stderr with exit code 2."""


@dataclass
class RunConfig:
    command: str
    family: str
    n: int
    omega: OmegaVector | None
    fmt: str
    out: str | None
    jobs: int
    stretch: bool
    corrupt: bool = False
    seed: int = 0


def _parse_omega(text: str) -> OmegaVector:
    try:
        return OmegaVector.parse(text)
    except ValueError as exc:
        raise InputError(f"bad --omega value: {exc}") from None


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    family = args.family
    omega = None
    n = getattr(args, "n", None)
    if getattr(args, "omega", None) is not None:
        omega = _parse_omega(args.omega)
        if n is not None and n != omega.n:
            raise InputError(f"--n {n} disagrees with --omega of length {omega.n}")
        n = omega.n
    if n is None:
        raise InputError("either --omega or --n is required")
    if n < 1:
        raise InputError("--n must be >= 1")
    jobs = getattr(args, "jobs", None)
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise InputError("--jobs must be >= 1")
    stretch = bool(getattr(args, "stretch", False))
    cfg = RunConfig(
        command=args.command,
        family=family,
        n=n,
        omega=omega,
        fmt=args.format,
        out=getattr(args, "out", None),
        jobs=jobs,
        stretch=stretch,
        corrupt=bool(getattr(args, "corrupt", False)),
        seed=int(getattr(args, "seed", 0)),
    )
    if cfg.family == "sq" and cfg.n >= 3 and cfg.command in ("h2", "sweep", "verify"):
        if not cfg.stretch:
            raise InputError(
                "sq with n >= 3 is expensive; pass --stretch to enable it"
            )
    return cfg


def _write_output(cfg: RunConfig, text: str):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(cfg: RunConfig, payload) -> None:
    _write_output(cfg, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _require_format(cfg: RunConfig, allowed: tuple[str, ...]):
    if cfg.fmt not in allowed:
        raise InputError(
            f"--format {cfg.fmt} is not supported by {cfg.command}; use one of {allowed}"
        )


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def cmd_generators(cfg: RunConfig) -> int:
    _require_format(cfg, ("json", "text"))
    labels = labels_for_family(cfg.family, cfg.n)
    mats = [(lab, build_generator(cfg.family, lab, cfg.omega)) for lab in labels]
    if cfg.fmt == "json":
        payload = {
            "family": cfg.family,
            "n": cfg.n,
            "omega": [str(c) for c in cfg.omega],
            "dim": len(labels),
            "generators": [
                {"label": str(lab), "matrix": mat.to_component_lists()}
                for lab, mat in mats
            ],
        }
        _emit_json(cfg, payload)
    else:
        lines = [f"family {cfg.family}  omega ({cfg.omega.text()})  {len(labels)} generators"]
        for lab, mat in mats:
            lines.append(f"{lab}:")
            lines.append(str(mat))
        _write_output(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# structure
# ---------------------------------------------------------------------------


def cmd_structure(cfg: RunConfig) -> int:
    _require_format(cfg, ("json", "text"))
    L = build_algebra(cfg.family, cfg.omega)
    if cfg.corrupt:
        rows = sorted(L.constants)
        if not rows:
            raise InputError("algebra is abelian; nothing to corrupt")
        pair = rows[0]
        terms = dict(L.constants[pair])
        k = sorted(terms)[0]
        terms[k] = -terms[k]
        L.constants[pair] = terms
    jacobi_ok = verify_jacobi(L)
    matrix_match = from_matrices(cfg.family, cfg.omega).same_constants(L)
    payload = L.to_json_obj()
    payload["jacobi_ok"] = jacobi_ok
    payload["matrix_match"] = matrix_match
    if cfg.fmt == "json":
        _emit_json(cfg, payload)
    else:
        lines = [
            f"family {cfg.family}  omega ({cfg.omega.text()})  dim {L.dim}",
            f"jacobi_ok: {jacobi_ok}",
            f"matrix_match: {matrix_match}",
        ]
        for i, j, k, c in L.structure_rows():
            lines.append(f"[{L.basis[i]}, {L.basis[j]}] -> {c} * {L.basis[k]}")
        _write_output(cfg, "\n".join(lines) + "\n")
    return EXIT_OK if (jacobi_ok and matrix_match) else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# h2
# ---------------------------------------------------------------------------


def _h2_payload(family: str, omega: OmegaVector) -> dict:
    L = build_algebra(family, omega)
    solver = CohomologySolver(L)
    res = solver.result()
    report = crosscheck(family, omega, solver=solver)
    payload = {
        "family": family,
        "n": omega.n,
        "omega": [str(c) for c in omega],
        "n_zeros": omega.n_zeros,
        "dim": L.dim,
    }
    payload.update(res.to_json_obj(L))
    payload["crosscheck"] = report.to_json_obj()
    payload["predicted"] = report.predicted
    payload["match"] = report.match
    return payload


def cmd_h2(cfg: RunConfig) -> int:
    _require_format(cfg, ("json", "text"))
    payload = _h2_payload(cfg.family, cfg.omega)
    if cfg.fmt == "json":
        _emit_json(cfg, payload)
    else:
        lines = [
            f"family {cfg.family}  omega ({cfg.omega.text()})",
            f"dim_z2 {payload['dim_z2']}  dim_b2 {payload['dim_b2']}  dim_h2 {payload['dim_h2']}",
            f"predicted {payload['predicted']}  match {payload['match']}",
        ]
        for rep in payload["representatives"]:
            body = ", ".join(
                f"xi({p['label_i']},{p['label_j']})={p['c']}" for p in rep["pairs"]
            )
            lines.append(f"representative: {body}")
        _write_output(cfg, "\n".join(lines) + "\n")
    return EXIT_OK if payload["match"] else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


def run_case(family: str, signs: tuple[int, ...]) -> dict:
    """One sweep row: solver dims, predicted count, crosscheck match."""
    omega = OmegaVector.coerce(signs)
    report = crosscheck(family, omega)
    return {
        "family": family,
        "N": omega.n,
        "omega": omega.text(),
        "n_zeros": omega.n_zeros,
        "dim_z2": report.dim_z2,
        "dim_b2": report.dim_b2,
        "dim_h2": report.dim_h2,
        "predicted": report.predicted,
        "match": report.match,
    }


def _sweep_worker(task: tuple[str, tuple[int, ...]]) -> dict:
    return run_case(*task)


def sweep_rows(family: str, n: int, jobs: int = 1) -> list[dict]:
    """All 3^n sign patterns, rows sorted by omega lexicographic order."""
    tasks = [(family, signs) for signs in product((-1, 0, 1), repeat=n)]
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            rows = pool.map(_sweep_worker, tasks)
    else:
        rows = [_sweep_worker(t) for t in tasks]
    rows.sort(key=lambda row: tuple(int(s) for s in row["omega"].split(",")))
    return rows


def cmd_sweep(cfg: RunConfig) -> int:
    _require_format(cfg, ("json", "csv", "text"))
    rows = sweep_rows(cfg.family, cfg.n, jobs=cfg.jobs)
    mismatches = sum(1 for row in rows if not row["match"])
    if cfg.fmt == "json":
        _emit_json(
            cfg,
            {
                "rows": rows,
                "summary": {"cases": len(rows), "mismatches": mismatches},
            },
        )
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for row in rows:
            writer.writerow(
                [
                    row["family"],
                    row["N"],
                    row["omega"],
                    row["n_zeros"],
                    row["dim_z2"],
                    row["dim_b2"],
                    row["dim_h2"],
                    row["predicted"],
                    "true" if row["match"] else "false",
                ]
            )
        buf.write(f"# summary cases={len(rows)} mismatches={mismatches}\n")
        _write_output(cfg, buf.getvalue())
    else:
        lines = []
        for row in rows:
            lines.append(
                f"{row['family']}  ({row['omega']})  z2={row['dim_z2']} b2={row['dim_b2']} "
                f"h2={row['dim_h2']} predicted={row['predicted']} match={row['match']}"
            )
        lines.append(f"summary: cases={len(rows)} mismatches={mismatches}")
        _write_output(cfg, "\n".join(lines) + "\n")
    return EXIT_OK if mismatches == 0 else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def verify_case(family: str, omega: OmegaVector, seed: int = 0, n_random_mu: int = 100) -> dict:
    """Full invariant suite for one algebra; values 'pass'/'fail'/'skipped'."""
    checks: dict[str, str] = {}
    labels = labels_for_family(family, omega.n)
    mats = [build_generator(family, lab, omega) for lab in labels]
    metric = build_metric(omega)
    checks["antihermitian"] = (
        "pass" if all(is_metric_antihermitian(m, metric) for m in mats) else "fail"
    )
    if family == "su":
        checks["traceless"] = "pass" if all(is_traceless(m) for m in mats) else "fail"
    elif family == "u":
        ok = all(
            is_traceless(m) for lab, m in zip(labels, mats) if lab != I_LABEL
        )
        checks["traceless"] = "pass" if ok else "fail"
    else:
        checks["traceless"] = "skipped"
    L = build_algebra(family, omega)
    checks["closure_matrix_match"] = (
        "pass" if from_matrices(family, omega).same_constants(L) else "fail"
    )
    checks["jacobi"] = "pass" if verify_jacobi(L) else "fail"
    solver = CohomologySolver(L)
    rng = random.Random(seed or f"{family}:{omega.text()}")
    ok = True
    for _ in range(n_random_mu):
        mu = OneCochain([_random_fraction(rng) for _ in range(L.dim)])
        if not solver.is_cocycle(coboundary(mu, L)):
            ok = False
            break
    checks["coboundaries_are_cocycles"] = "pass" if ok else "fail"
    removal = _pseudoextension_removal_status(family, omega, L)
    checks["pseudoextension_removal"] = removal
    return checks


def _pseudoextension_removal_status(family: str, omega: OmegaVector, L) -> str:
    """Exact-equality removal identities for every applicable coefficient."""
    n = omega.n
    if family == "so":
        if n < 2:
            return "skipped"
        ok = True
        for a in range(n - 2):
            ok = ok and pair_combination(omega, a) == coboundary(pair_mu(omega, a), L)
        if omega.value(2):
            xi = coefficient_cocycle("so", omega, "alphaL[0,1]")
            ok = ok and xi == coboundary(removal_mu("so", omega, "alphaL[0,1]"), L)
        if omega.value(n - 1):
            name = f"alphaF[{n - 1},{n}]"
            xi = coefficient_cocycle("so", omega, name)
            ok = ok and xi == coboundary(removal_mu("so", omega, name), L)
        return "pass" if ok else "fail"
    if family in ("su", "u"):
        ok = True
        for k in range(1, n + 1):
            if omega.value(k):
                name = f"alpha[{k}]"
                xi = coefficient_cocycle(family, omega, name)
                ok = ok and xi == coboundary(removal_mu(family, omega, name), L)
        return "pass" if ok else "fail"
    return "skipped"


def cmd_verify(cfg: RunConfig) -> int:
    _require_format(cfg, ("json", "text"))
    checks = verify_case(cfg.family, cfg.omega, seed=cfg.seed)
    failed = [name for name, status in checks.items() if status == "fail"]
    payload = {
        "family": cfg.family,
        "n": cfg.n,
        "omega": [str(c) for c in cfg.omega],
        "checks": checks,
        "ok": not failed,
    }
    if cfg.fmt == "json":
        _emit_json(cfg, payload)
    else:
        lines = [f"family {cfg.family}  omega ({cfg.omega.text()})"]
        for name, status in checks.items():
            lines.append(f"{name}: {status}")
        lines.append("ok" if not failed else f"FAILED: {', '.join(failed)}")
        _write_output(cfg, "\n".join(lines) + "\n")
    return EXIT_OK if not failed else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cklie",
        description=(
            "Exact construction of the orthogonal/unitary/quaternionic "
            "contraction families and their central extensions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, need_omega: bool):
        p.add_argument("--family", required=True, choices=FAMILIES)
        if need_omega:
            p.add_argument(
                "--omega",
                required=True,
                help="comma-separated rational coefficients, e.g. 1,0,-1/2",
            )
            p.add_argument("--n", type=int, default=None, help="optional length check")
        else:
            p.add_argument("--n", type=int, required=True, help="number of coefficients")
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--out", default=None, help="write output to this path")
        p.add_argument("--jobs", type=int, default=None, help="parallel workers (sweep)")
        p.add_argument("--stretch", action="store_true", help="allow sq with n >= 3")

    p_gen = sub.add_parser("generators", help="print the basis matrices")
    common(p_gen, need_omega=True)

    p_struct = sub.add_parser("structure", help="structure constants + verification")
    common(p_struct, need_omega=True)
    p_struct.add_argument(
        "--corrupt",
        action="store_true",
        help="negate one structure constant first (verification must then fail)",
    )

    p_h2 = sub.add_parser("h2", help="second cohomology + predictor crosscheck")
    common(p_h2, need_omega=True)

    p_sweep = sub.add_parser("sweep", help="all 3^n sign patterns")
    common(p_sweep, need_omega=False)

    p_verify = sub.add_parser("verify", help="full invariant suite for one case")
    common(p_verify, need_omega=True)
    p_verify.add_argument("--seed", type=int, default=0, help="seed for random checks")

    return parser


_COMMANDS = {
    "generators": cmd_generators,
    "structure": cmd_structure,
    "h2": cmd_h2,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[cfg.command](cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
