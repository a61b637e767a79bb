"""Batch command-line interface with machine-readable output.

One command per process; exact counts are serialized as decimal strings
so consumers need not assume any integer width.  Exit codes: 0 success,
2 invalid input, 3 oracle cap exceeded, 4 verification mismatch.
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
from importlib import resources
from pathlib import Path

from .arith import epi0_count
from .oracle import (
    CapExceeded,
    load_witness_rows,
    oracle_fix,
    oracle_rooted,
    oracle_unrooted,
    verify_witness_table,
)
from .orbifolds import divide_passport, divide_quasi_one_face, enumerate_symbols, parse_symbol
from .partitions import parse_partition
from .passports import Passport, QuasiOneFacePassport, enumerate_quasi_one_face
from .rooted import exists_quasi_one_face, rooted_count, weighted_hurwitz
from .trees import TreePassport, kochetkov_count
from .unrooted import unrooted_count

__all__ = ["JobSpec", "run", "main"]

COMMANDS = (
    "rooted",
    "unrooted",
    "weighted",
    "trees",
    "exists",
    "epi0",
    "orbifolds",
    "divide",
    "oracle",
    "verify",
)


@dataclass(frozen=True)
class JobSpec:
    """One validated batch job: a command, its inputs, and output options."""

    command: str
    fmt: str = "json"
    cap: int | None = None
    genus: int | None = None
    m: int | None = None
    n: int | None = None
    p1: str | None = None
    p2: str | None = None
    p3: str | None = None
    json_text: str | None = None
    w1: str | None = None
    w2: str | None = None
    sigma: str | None = None
    l: int | None = None
    fix_l: int | None = None
    fixtures: str | None = None
    sweep: int = 25
    seed: int = 0
    max_n: int = 7


def _passport_from_job(job: JobSpec) -> QuasiOneFacePassport:
    if job.json_text is not None:
        text = job.json_text
        if text.startswith("@"):
            text = Path(text[1:]).read_text(encoding="utf-8")
        q = QuasiOneFacePassport.from_json(text)
    else:
        missing = [
            name
            for name, value in (
                ("--g", job.genus),
                ("--m", job.m),
                ("--n", job.n),
                ("--p1", job.p1),
                ("--p2", job.p2),
            )
            if value is None
        ]
        if missing:
            raise ValueError(f"missing required flags: {' '.join(missing)}")
        q = QuasiOneFacePassport.from_partitions(job.genus, job.m, job.n, job.p1, job.p2)
    q.require_valid()
    return q


def _term_payload(term) -> dict:
    return {
        "l": term.l,
        "m": term.m,
        "sigma": term.symbol.render(),
        "quotient": term.sigma_passport.render(),
        "rooted": str(term.rooted),
        "epi0": str(term.epi0),
    }


def _emit(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, separators=(",", ":"))
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if "terms" in payload:
            writer.writerow(["l", "m", "sigma", "quotient", "rooted", "epi0"])
            for term in payload["terms"]:
                writer.writerow(
                    [term["l"], term["m"], term["sigma"], term["quotient"],
                     term["rooted"], term["epi0"]]
                )
            for key, value in payload.items():
                if key != "terms":
                    writer.writerow([key, value])
        elif "checks" in payload:
            writer.writerow(["name", "ok", "expected", "actual"])
            for check in payload["checks"]:
                writer.writerow(
                    [check["name"], check["ok"], check["expected"], check["actual"]]
                )
            writer.writerow(["ok", payload["ok"], "", ""])
        else:
            writer.writerow(["key", "value"])
            for key, value in payload.items():
                if isinstance(value, list):
                    value = " ".join(str(v) for v in value)
                writer.writerow([key, value])
        return buffer.getvalue().rstrip("\n")
    # text
    lines = []
    for key, value in payload.items():
        if key == "terms":
            lines.append("terms:")
            for term in value:
                lines.append(
                    f"  l={term['l']} m={term['m']} sigma={term['sigma']} "
                    f"quotient={term['quotient']} rooted={term['rooted']} "
                    f"epi0={term['epi0']}"
                )
        elif key == "checks":
            for check in value:
                status = "ok" if check["ok"] else "MISMATCH"
                lines.append(
                    f"{status} {check['name']}: expected {check['expected']}, "
                    f"got {check['actual']}"
                )
        elif isinstance(value, list):
            lines.append(f"{key}: " + " ".join(str(v) for v in value))
        else:
            lines.append(f"{key} = {value}")
    return "\n".join(lines)


def _load_fixtures(path: str | None) -> tuple[dict, Path | None]:
    if path is None:
        data = resources.files("hurwitz").joinpath("data/reference_counts.json")
        return json.loads(data.read_text(encoding="utf-8")), None
    file_path = Path(path)
    return json.loads(file_path.read_text(encoding="utf-8")), file_path.parent


def _witness_path(name: str, base: Path | None):
    if base is not None:
        return base / name
    return resources.files("hurwitz").joinpath(f"data/{name}")


def _verify_checks(job: JobSpec) -> list[dict]:
    fixtures, base = _load_fixtures(job.fixtures)
    checks: list[dict] = []

    def record(name: str, expected, actual) -> None:
        checks.append(
            {
                "name": name,
                "ok": str(expected) == str(actual),
                "expected": str(expected),
                "actual": str(actual),
            }
        )

    def passport(case) -> QuasiOneFacePassport:
        return QuasiOneFacePassport.from_partitions(
            case["g"], case["m"], case["n"], case["p1"], case["p2"]
        )

    for case in fixtures.get("rooted", ()):
        q = passport(case)
        record(f"rooted {q.render()}", case["expect"], rooted_count(q))
    for case in fixtures.get("unrooted", ()):
        q = passport(case)
        count, terms = unrooted_count(q)
        record(f"unrooted {q.render()}", case["expect"], count)
        expected_terms = case.get("terms")
        if expected_terms is not None:
            actual = [
                (t.l, t.symbol.render(), str(t.rooted), str(t.epi0)) for t in terms
            ]
            wanted = [
                (t["l"], t["sigma"], t["rooted"], t["epi0"]) for t in expected_terms
            ]
            record(f"audit terms {q.render()}", wanted, actual)
    for case in fixtures.get("weighted", ()):
        q = passport(case)
        record(f"weighted {q.render()}", case["expect"], weighted_hurwitz(q))
    for case in fixtures.get("epi0", ()):
        sym = parse_symbol(case["sigma"])
        record(
            f"epi0 {sym.render()} l={case['l']}",
            case["expect"],
            epi0_count(sym, case["l"]),
        )
    for case in fixtures.get("trees", ()):
        w1 = parse_partition(case["w1"]).parts
        w2 = parse_partition(case["w2"]).parts
        record(
            f"trees {case['w1']} | {case['w2']}",
            case["expect"],
            kochetkov_count(TreePassport(w1, w2)),
        )
    for case in fixtures.get("oracle", ()):
        q = passport(case)
        record(
            f"oracle rooted {q.render()}",
            case["rooted"],
            oracle_rooted(q, job.cap),
        )
        record(
            f"oracle unrooted {q.render()}",
            case["unrooted"],
            oracle_unrooted(q, job.cap),
        )
        record(f"formula vs oracle rooted {q.render()}", case["rooted"], rooted_count(q))
        record(
            f"formula vs oracle unrooted {q.render()}",
            case["unrooted"],
            unrooted_count(q)[0],
        )
    witness = fixtures.get("witness")
    if witness:
        q = passport(witness)
        rows = load_witness_rows(_witness_path(witness["file"], base))
        report = verify_witness_table(rows, passport=q)
        record(f"witness rows {q.render()}", witness["rows"], len(report.rows))
        record(f"witness valid {q.render()}", True, report.ok)
        record(
            f"witness self-conjugate {q.render()}",
            tuple(witness["self_conjugate"]),
            report.self_conjugate,
        )

    rng = random.Random(job.seed)
    pool = [
        q
        for n in range(1, job.max_n + 1)
        for q in enumerate_quasi_one_face(n)
    ]
    for _ in range(job.sweep):
        q = rng.choice(pool)
        record(f"sweep rooted {q.render()}", oracle_rooted(q, job.cap), rooted_count(q))
        record(
            f"sweep unrooted {q.render()}",
            oracle_unrooted(q, job.cap),
            unrooted_count(q)[0],
        )
    return checks


def run(job: JobSpec) -> tuple[int, str]:
    """Execute one job; returns (exit status, serialized result)."""
    if job.command == "rooted":
        q = _passport_from_job(job)
        return 0, _emit({"rooted": str(rooted_count(q))}, job.fmt)
    if job.command == "weighted":
        q = _passport_from_job(job)
        return 0, _emit({"weighted": str(weighted_hurwitz(q))}, job.fmt)
    if job.command == "unrooted":
        q = _passport_from_job(job)
        count, terms = unrooted_count(q)
        payload = {"unrooted": str(count), "terms": [_term_payload(t) for t in terms]}
        return 0, _emit(payload, job.fmt)
    if job.command == "exists":
        q = _passport_from_job(job)
        return 0, _emit({"exists": exists_quasi_one_face(q)}, job.fmt)
    if job.command == "trees":
        if job.w1 is None or job.w2 is None:
            raise ValueError("trees requires --w1 and --w2")
        p = TreePassport(parse_partition(job.w1).parts, parse_partition(job.w2).parts)
        if job.n is not None and job.n != p.n:
            raise ValueError(f"--n {job.n} inconsistent with weight sum {p.n}")
        if job.m is not None and job.m != p.m:
            raise ValueError(f"--m {job.m} inconsistent with vertex count {p.m + 1}")
        count = kochetkov_count(p)
        payload = {
            "trees": str(count),
            "rooted": str(p.n * count),
            "rooted_weighted": str(p.m * count),
        }
        return 0, _emit(payload, job.fmt)
    if job.command == "epi0":
        if job.sigma is None or job.l is None:
            raise ValueError("epi0 requires --sigma and --l")
        sym = parse_symbol(job.sigma)
        return 0, _emit({"epi0": str(epi0_count(sym, job.l))}, job.fmt)
    if job.command == "orbifolds":
        if job.genus is None or job.l is None:
            raise ValueError("orbifolds requires --g and --l")
        symbols = enumerate_symbols(job.genus, job.l)
        return 0, _emit({"symbols": [s.render() for s in symbols]}, job.fmt)
    if job.command == "divide":
        if job.sigma is None or job.l is None:
            raise ValueError("divide requires --sigma and --l")
        sym = parse_symbol(job.sigma)
        if job.p3 is not None:
            p = Passport.from_partitions(job.genus, job.n, job.p1, job.p2, job.p3)
            p.validate().raise_if_invalid()
            quotients = divide_passport(p, sym, job.l)
        else:
            quotients = divide_quasi_one_face(_passport_from_job(job), sym, job.l)
        payload = {
            "count": str(len(quotients)),
            "quotients": [s.render() for s in quotients],
        }
        return 0, _emit(payload, job.fmt)
    if job.command == "oracle":
        q = _passport_from_job(job)
        payload = {
            "oracle_rooted": str(oracle_rooted(q, job.cap)),
            "oracle_unrooted": str(oracle_unrooted(q, job.cap)),
        }
        if job.fix_l is not None:
            payload["oracle_fix"] = str(oracle_fix(q, job.fix_l, job.cap))
        return 0, _emit(payload, job.fmt)
    if job.command == "verify":
        checks = _verify_checks(job)
        ok = all(c["ok"] for c in checks)
        payload = {"checks": checks, "ok": ok}
        return (0 if ok else 4), _emit(payload, job.fmt)
    raise ValueError(f"unknown command {job.command!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz",
        description="Exact rooted/unrooted hypermap counts for face type (m 1^(n-m)).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--cap", type=int, default=None, help="oracle pair-count cap")

    def add_passport(p: argparse.ArgumentParser) -> None:
        p.add_argument("--g", "--genus", dest="genus", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--p1", help="black partition, power notation")
        p.add_argument("--p2", help="white partition, power notation")
        p.add_argument("--json", dest="json_text", help="passport JSON (or @file)")

    for name in ("rooted", "unrooted", "weighted", "exists"):
        p = sub.add_parser(name)
        add_common(p)
        add_passport(p)

    p = sub.add_parser("trees")
    add_common(p)
    p.add_argument("--w1", help="black weight multiset, power notation")
    p.add_argument("--w2", help="white weight multiset, power notation")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)

    p = sub.add_parser("epi0")
    add_common(p)
    p.add_argument("--sigma", help='orbifold symbol "g2;t1,t2,..."')
    p.add_argument("--l", type=int, help="cyclic group order")

    p = sub.add_parser("orbifolds")
    add_common(p)
    p.add_argument("--g", "--genus", dest="genus", type=int)
    p.add_argument("--l", type=int)

    p = sub.add_parser("divide")
    add_common(p)
    add_passport(p)
    p.add_argument("--p3", help="face partition (general passports)")
    p.add_argument("--sigma")
    p.add_argument("--l", type=int)

    p = sub.add_parser("oracle")
    add_common(p)
    add_passport(p)
    p.add_argument("--fix", dest="fix_l", type=int, help="also report oracle_fix for this l")

    p = sub.add_parser("verify")
    add_common(p)
    p.add_argument("--fixtures", help="fixture file path (default: bundled)")
    p.add_argument("--sweep", type=int, default=25, help="random sweep cases")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", dest="max_n", type=int, default=7)

    return parser


def _job_from_args(args: argparse.Namespace) -> JobSpec:
    cap = getattr(args, "cap", None)
    if cap is None:
        env = os.environ.get("HURWITZ_ORACLE_CAP")
        cap = int(env) if env else None
    return JobSpec(
        command=args.command,
        fmt=getattr(args, "format", "json"),
        cap=cap,
        genus=getattr(args, "genus", None),
        m=getattr(args, "m", None),
        n=getattr(args, "n", None),
        p1=getattr(args, "p1", None),
        p2=getattr(args, "p2", None),
        p3=getattr(args, "p3", None),
        json_text=getattr(args, "json_text", None),
        w1=getattr(args, "w1", None),
        w2=getattr(args, "w2", None),
        sigma=getattr(args, "sigma", None),
        l=getattr(args, "l", None),
        fix_l=getattr(args, "fix_l", None),
        fixtures=getattr(args, "fixtures", None),
        sweep=getattr(args, "sweep", 25),
        seed=getattr(args, "seed", 0),
        max_n=getattr(args, "max_n", 7),
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    job = _job_from_args(args)
    try:
        status, output = run(job)
    except CapExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    print(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
