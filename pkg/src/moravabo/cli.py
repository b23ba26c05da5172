"""Command-line front end: verification tables for the Morava K-theory
of BO(q) and MO(q), serialized as text tables, JSON, or CSV.

Commands:
    homology      Q_n kernel/image/homology dims per degree, with representatives
    basis         explicit b/c basis elements per even degree
    coproduct     coproducts (mod v_n) of all basis elements in range
    symquotient   symmetric-function slice/ideal/quotient dims per weight
    reconcile     three-way per-degree comparison of the descriptions
    verify-all    reconcile plus the structural law suites

Exit codes: 0 computation/verification succeeded, 1 a verification check
failed, 2 invalid arguments. Reports are byte-identical across runs for
identical configurations. An optional cache directory (--cache-dir or the
MORAVABO_CACHE environment variable) memoizes per-degree rows; it only
ever changes speed, never results.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import coalgebra, morava_basis, qn_action, reconcile, symfun
from .bo_homology import iter_monomials
from .qn_action import MoravaParams

REPORT_VERSION = 1
CACHE_ENV_VAR = "MORAVABO_CACHE"

Row = Dict[str, object]


@dataclass
class RunConfig:
    command: str
    n: int
    q: int
    max_degree: int
    exact: bool = False
    fmt: str = "table"
    cache_dir: Optional[str] = None
    out: Optional[str] = None


class ResultCache:
    """Content-keyed JSON row cache with atomic write-then-rename."""

    def __init__(self, root: str):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, key: Tuple) -> Path:
        digest = hashlib.sha256(json.dumps(list(key)).encode()).hexdigest()
        return self.root / f"{digest}.json"

    def lookup(self, key: Tuple) -> Optional[Row]:
        try:
            return json.loads(self._path(key).read_text())
        except (OSError, ValueError):
            return None

    def store(self, key: Tuple, value: Row) -> None:
        path = self._path(key)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(value))
        os.replace(tmp, path)


def _cached(
    cache: Optional[ResultCache], key: Tuple, build: Callable[[], Row]
) -> Row:
    if cache is not None:
        hit = cache.lookup(key)
        if hit is not None:
            return hit
    row = build()
    if cache is not None:
        cache.store(key, row)
    return row


# --- row builders ---------------------------------------------------------


def _combo_str(combo) -> str:
    return "+".join(str(m) for m in combo)


def _homology_rows(cfg: RunConfig, cache: Optional[ResultCache]) -> List[Row]:
    params = MoravaParams(cfg.n)
    rows = []
    for d in range(1, cfg.max_degree + 1):
        def build(d=d) -> Row:
            rep = qn_action.qn_homology(params, cfg.q, d, cfg.exact)
            return {
                "degree": d,
                "kernel_dim": rep.kernel_dim,
                "image_dim": rep.image_dim,
                "homology_dim": rep.homology_dim,
                "representatives": ";".join(_combo_str(c) for c in rep.representatives),
            }
        key = ("homology", cfg.n, cfg.q, d, cfg.exact, REPORT_VERSION)
        rows.append(_cached(cache, key, build))
    return rows


def _basis_rows(cfg: RunConfig, cache: Optional[ResultCache]) -> List[Row]:
    params = MoravaParams(cfg.n)
    rows = []
    for d in range(2, cfg.max_degree + 1, 2):
        elems = morava_basis.enumerate_basis(params, cfg.q, d, cfg.exact)
        rows.append({
            "degree": d,
            "count": len(elems),
            "elements": ";".join(str(m) for m in elems),
        })
    return rows


def _coproduct_rows(cfg: RunConfig, cache: Optional[ResultCache]) -> List[Row]:
    params = MoravaParams(cfg.n)
    rows = []
    for d in range(2, cfg.max_degree + 1, 2):
        for m in morava_basis.enumerate_basis(params, cfg.q, d, cfg.exact):
            terms = coalgebra.coproduct(params, m)
            rows.append({
                "degree": d,
                "element": str(m),
                "coproduct": "+".join(str(t) for t in terms),
            })
    return rows


def _symquotient_rows(cfg: RunConfig, cache: Optional[ResultCache]) -> List[Row]:
    params = MoravaParams(cfg.n)
    rows = []
    for w in range(1, cfg.max_degree // 2 + 1):
        def build(w=w) -> Row:
            report = symfun.quotient_report(params, cfg.q, w)
            canonical = len(symfun.enumerate_canonical(params, cfg.q, w))
            return {
                "degree": 2 * w,
                "weight": w,
                "slice_dim": report.slice_dim,
                "ideal_rank": report.ideal_rank,
                "quotient_dim": report.quotient_dim,
                "canonical_count": canonical,
                "verdict": "pass" if report.quotient_dim == canonical else "fail",
            }
        key = ("symquotient", cfg.n, cfg.q, 2 * w, cfg.exact, REPORT_VERSION)
        rows.append(_cached(cache, key, build))
    return rows


def _reconcile_rows(cfg: RunConfig, cache: Optional[ResultCache]) -> List[Row]:
    params = MoravaParams(cfg.n)
    report = reconcile.verify_all(params, cfg.q, cfg.max_degree)
    return [
        {
            "degree": row.degree,
            "homology_dim": row.homology_dim,
            "basis_count": row.basis_count,
            "quotient_dim": row.quotient_dim,
            "verdict": "pass" if row.passed else "fail",
        }
        for row in report.rows
    ]


def _verify_all_rows(cfg: RunConfig, cache: Optional[ResultCache]) -> List[Row]:
    params = MoravaParams(cfg.n)
    rows: List[Row] = []

    def check_row(check: str, scope: str, detail: str, ok: bool) -> Row:
        return {
            "check": check,
            "scope": scope,
            "detail": detail,
            "verdict": "pass" if ok else "fail",
        }

    for row in _reconcile_rows(cfg, cache):
        rows.append(check_row(
            "reconcile_degree",
            f"d={row['degree']}",
            f"homology={row['homology_dim']} basis={row['basis_count']} "
            f"quotient={row['quotient_dim']}",
            row["verdict"] == "pass",
        ))

    worst = 0
    for d in range(1, cfg.max_degree + 1, 2):
        dim = qn_action.qn_homology(params, cfg.q, d, exact_length=False).homology_dim
        worst = max(worst, dim)
    rows.append(check_row(
        "odd_degrees_vanish", f"odd d<={cfg.max_degree}", f"max_dim={worst}", worst == 0,
    ))

    count = 0
    ok = True
    for d in range(1, cfg.max_degree + 1):
        for m in iter_monomials(d, d, exact_length=False):
            count += 1
            acc = set()
            for t in qn_action.qn_derivation(params, m):
                acc ^= set(qn_action.qn_derivation(params, t))
            if acc:
                ok = False
    rows.append(check_row(
        "qn_squared_zero", f"deg<={cfg.max_degree}", f"monomials={count}", ok,
    ))

    co = coalgebra.check_coassociativity(params, cfg.q, cfg.max_degree)
    swap_ok = True
    for d in range(2, cfg.max_degree + 1, 2):
        for m in morava_basis.enumerate_basis(params, cfg.q, d, exact=False):
            terms = {(t.left, t.right) for t in coalgebra.coproduct(params, m)}
            if terms != {(r, l) for l, r in terms}:
                swap_ok = False
    rows.append(check_row(
        "coalgebra_laws",
        f"deg<={cfg.max_degree}",
        f"elements={co.elements_checked}",
        co.passed and swap_ok,
    ))

    factor_ok = all(symfun.factor_check(params, qq) for qq in range(1, cfg.q + 1))
    rows.append(check_row("factorization", f"q<={cfg.q}", "c_q divides", factor_ok))

    return rows


_BUILDERS: Dict[str, Callable[[RunConfig, Optional[ResultCache]], List[Row]]] = {
    "homology": _homology_rows,
    "basis": _basis_rows,
    "coproduct": _coproduct_rows,
    "symquotient": _symquotient_rows,
    "reconcile": _reconcile_rows,
    "verify-all": _verify_all_rows,
}

_VERIFYING = {"symquotient", "reconcile", "verify-all"}


def build_report(cfg: RunConfig) -> Dict[str, object]:
    """Compute the full report structure for a config (format-independent)."""
    cache = ResultCache(cfg.cache_dir) if cfg.cache_dir else None
    rows = _BUILDERS[cfg.command](cfg, cache)
    verdict: Optional[str] = None
    if cfg.command in _VERIFYING:
        verdict = "pass" if all(r["verdict"] == "pass" for r in rows) else "fail"
    return {
        "params": {
            "n": cfg.n,
            "q": cfg.q,
            "max_degree": cfg.max_degree,
            "exact": cfg.exact,
        },
        "rows": rows,
        "verdict": verdict,
    }


# --- renderers ------------------------------------------------------------


def render_json(report: Dict[str, object]) -> str:
    return json.dumps(report, indent=2) + "\n"


def render_csv(report: Dict[str, object]) -> str:
    rows: List[Row] = report["rows"]  # type: ignore[assignment]
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: "" if v is None else v for k, v in row.items()})
    return buf.getvalue()


def render_table(report: Dict[str, object]) -> str:
    rows: List[Row] = report["rows"]  # type: ignore[assignment]
    lines = []
    if rows:
        headers = list(rows[0].keys())
        cells = [[str("" if r[h] is None else r[h]) for h in headers] for r in rows]
        widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(headers)]
        lines.append("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip())
        for c in cells:
            lines.append("  ".join(v.ljust(w) for v, w in zip(c, widths)).rstrip())
    if report["verdict"] is not None:
        lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines) + "\n"


_RENDERERS = {"json": render_json, "csv": render_csv, "table": render_table}


def run(cfg: RunConfig) -> int:
    """Execute one command; returns the process exit status."""
    report = build_report(cfg)
    text = _RENDERERS[cfg.fmt](report)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    if cfg.command in _VERIFYING and report["verdict"] != "pass":
        return 1
    return 0


# --- argument parsing -----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moravabo",
        description="Exact Morava K-theory tables for BO(q) and MO(q) at p=2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("homology", "Q_n homology per degree"),
        ("basis", "explicit b/c basis per even degree"),
        ("coproduct", "coproducts of basis elements (mod v_n)"),
        ("symquotient", "symmetric-function quotient dims per weight"),
        ("reconcile", "three-way per-degree comparison"),
        ("verify-all", "reconcile plus structural suites"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, required=True, help="Morava height (>= 1)")
        p.add_argument("--q", type=int, required=True, help="orthogonal group rank (>= 1)")
        p.add_argument("--max-degree", type=int, default=24, dest="max_degree",
                       help="largest homological degree to tabulate")
        p.add_argument("--exact", action="store_true",
                       help="restrict to MO(q) (length exactly q) where applicable")
        p.add_argument("--format", choices=["table", "json", "csv"], default="table",
                       dest="fmt")
        p.add_argument("--cache-dir", default=None,
                       help=f"row cache directory (default: ${CACHE_ENV_VAR})")
        p.add_argument("--out", default=None, help="write the report to a file")
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 1:
        parser.error("--n must be >= 1")
    if args.q < 1:
        parser.error("--q must be >= 1")
    if args.max_degree < 0:
        parser.error("--max-degree must be >= 0")
    if args.command in ("reconcile", "verify-all") and args.max_degree % 2:
        parser.error("--max-degree must be even for reconcile/verify-all")
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV_VAR) or None
    return RunConfig(
        command=args.command,
        n=args.n,
        q=args.q,
        max_degree=args.max_degree,
        exact=args.exact,
        fmt=args.fmt,
        cache_dir=cache_dir,
        out=args.out,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
