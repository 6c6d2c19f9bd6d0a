"""Command-line front end.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error,
3 the H^0 model refused a computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from . import gmod
from .errors import InvalidType, ModelError
from .pipeline import (
    GrassmannianElement,
    VerificationReport,
    direct_alpha0_negative,
    direct_grassmannian_stabilizer,
    grassmannian_elements,
    jw,
    sequence_test,
    worked_words,
    verify,
    verify_full,
    witness,
)
from .rootsys import RootSystem, Weight, build_root_system
from .weyl import WeylWord

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_MODEL = 0, 1, 2, 3

GRASSMANNIAN_MAX_N = 12
SWEEP_MAX_RANK = 6


class UsageError(Exception):
    pass


def weight_json(mu: Weight) -> list[list[int]]:
    return [[c.numerator, c.denominator] for c in mu]


def atom_json(atom) -> dict:
    if isinstance(atom, gmod.CartanMarker):
        return {"kind": "marker", "index": atom.index}
    return {"kind": "root", "weight": weight_json(atom.weight)}


def report_json(r: VerificationReport) -> dict:
    return {
        "type": r.type_name,
        "parabolic": list(r.parabolic),
        "witness": list(r.witness.letters),
        "provenance": r.provenance,
        "route": r.route,
        "exceptional": r.exceptional,
        "condition_i": {"pass": r.condition_i, "stabilizer": list(r.stabilizer)},
        "condition_ii": {"pass": r.condition_ii, "image": weight_json(r.alpha0_image)},
        "condition_iii": {
            "pass": "not-required" if r.condition_iii is None else r.condition_iii,
            "missing": [atom_json(a) for a in r.missing],
            "extra": [atom_json(a) for a in r.extra],
        },
        "jprime": list(r.jprime),
        "routing_ok": r.routing_ok,
        "model_error": r.model_error,
        "passed": r.passed,
    }


def _fmt_set(s) -> str:
    return "{" + ",".join(str(i) for i in s) + "}"


def _parse_indices(text: str | None) -> list[int]:
    if text is None:
        return []
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.replace(" ", ",").split(",") if tok]
    except ValueError:
        raise UsageError(f"cannot parse index list {text!r}") from None


def _root_system(args) -> RootSystem:
    if args.type is None or args.rank is None:
        raise UsageError("--type and --rank are required")
    try:
        return build_root_system(args.type.upper(), args.rank)
    except InvalidType as exc:
        raise UsageError(str(exc)) from None


def _parabolic(rs: RootSystem, text: str | None) -> list[int]:
    idx = _parse_indices(text)
    for i in idx:
        if not 1 <= i <= rs.rank:
            raise UsageError(f"index {i} out of range for {rs.name}")
    return sorted(set(idx))


def _proper_subsets(rs: RootSystem):
    n = rs.rank
    for k in range(1, n):
        yield from combinations(range(1, n + 1), k)


def _report_row(r: VerificationReport) -> str:
    iii = "n/a" if r.condition_iii is None else ("ok" if r.condition_iii else "FAIL")
    return (f"{r.type_name:<4} I={_fmt_set(r.parabolic):<12} w={str(r.witness):<28} "
            f"(i)={'ok' if r.condition_i else 'FAIL':<4} (ii)={'ok' if r.condition_ii else 'FAIL':<4} "
            f"(iii)={iii:<4} route={r.route:<16} {'PASS' if r.passed else 'FAIL'}")


def _exit_for(reports) -> int:
    if any(r.model_error for r in reports):
        return EXIT_MODEL
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _emit(args, config: dict, body: dict, human: list[str]) -> None:
    if args.json:
        doc = {"config": config, **body}
        print(json.dumps(doc, sort_keys=True, ensure_ascii=False))
    else:
        print("\n".join(human))


def cmd_verify(args) -> int:
    rs = _root_system(args)
    idx = _parabolic(rs, args.parabolic)
    full_set = list(rs.simple_indices)
    if args.full:
        if args.parabolic is not None and idx != full_set:
            raise UsageError("--full cannot be combined with a proper parabolic")
        reports = [verify_full(rs)]
    elif args.parabolic is not None:
        if not idx:
            raise UsageError("I is empty, so P = B: there is no such Schubert variety in G/B")
        if idx == full_set:
            raise UsageError("I = S means P = G; pass --full to verify the full-group case")
        reports = [verify(rs, idx)]
    else:
        reports = [verify(rs, I) for I in _proper_subsets(rs)]
    code = _exit_for(reports)
    config = {"subcommand": "verify", "type": rs.type_letter, "rank": rs.rank,
              "parabolic": idx if args.parabolic is not None else None, "full": args.full}
    summary = {"total": len(reports), "passed": sum(r.passed for r in reports), "exit_code": code}
    human = [_report_row(r) for r in reports] + [f"{summary['passed']}/{summary['total']} passed"]
    human += [f"  {r.type_name} I={_fmt_set(r.parabolic)}: {d}" for r in reports for d in r.diagnostics]
    _emit(args, config, {"reports": [report_json(r) for r in reports], "summary": summary}, human)
    return code


def cmd_witness(args) -> int:
    rs = _root_system(args)
    idx = _parabolic(rs, args.parabolic)
    if args.full:
        w = witness(rs, full=True)
    else:
        if not idx:
            raise UsageError("--parabolic is required (a nonempty proper subset), or pass --full")
        if idx == list(rs.simple_indices):
            raise UsageError("I = S means P = G; pass --full")
        w = witness(rs, idx)
    config = {"subcommand": "witness", "type": rs.type_letter, "rank": rs.rank,
              "parabolic": idx, "full": args.full}
    _emit(args, config, {"witness": list(w.letters), "length": w.length},
          [f"{rs.name} I={_fmt_set(idx) if not args.full else 'S'}: w = {w} (length {w.length})"])
    return EXIT_OK


def cmd_cohomology(args) -> int:
    rs = _root_system(args)
    letters = _parse_indices(args.word)
    for i in letters:
        if not 1 <= i <= rs.rank:
            raise UsageError(f"letter {i} out of range for {rs.name}")
    w = WeylWord(rs, letters)
    if not w.is_reduced():
        raise UsageError(f"word {letters} is not reduced")
    config = {"subcommand": "cohomology", "type": rs.type_letter, "rank": rs.rank, "word": letters}
    model_derived = tuple(letters) not in worked_words(rs)
    try:
        module = gmod.h0_word(rs, w)
    except ModelError as exc:
        msg = f"{type(exc).__name__}: {exc}"
        _emit(args, config, {"error": msg, "model_derived": model_derived}, [f"model error: {msg}"])
        return EXIT_MODEL
    cmp = gmod.equals_adjoint(rs, module)
    atoms = list(module)
    verdict = "= g" if cmp.equal else "!= g"
    human = [f"H^0({' '.join(f's{i}' for i in letters) or 'id'}, g/b) for {rs.name}: {len(atoms)} atoms"]
    human += [f"  {a}" for a in atoms]
    human.append(f"verdict: {verdict}" + ("  [model-derived]" if model_derived else ""))
    body = {
        "atoms": [atom_json(a) for a in atoms],
        "count": len(atoms),
        "equals_g": cmp.equal,
        "missing": [atom_json(a) for a in cmp.missing],
        "model_derived": model_derived,
    }
    _emit(args, config, body, human)
    return EXIT_OK


def _grassmannian_row(e: GrassmannianElement) -> dict:
    w = e.word()
    seq_test = sequence_test(e)
    direct = direct_alpha0_negative(w)
    stab = direct_grassmannian_stabilizer(e.n, e.r, w)
    jset = jw(e.n, e.r, e.seq) if e.in_wr() else None
    agree = seq_test == direct and (jset is None or jset == stab)
    return {
        "start": e.start,
        "sequence": list(e.seq),
        "word": list(e.letters),
        "sequence_test": seq_test,
        "alpha0_negative": direct,
        "J": sorted(jset) if jset is not None else None,
        "stabilizer": sorted(stab),
        "agree": agree,
    }


def cmd_grassmannian(args) -> int:
    n, r = args.n, args.r
    if n is None or r is None:
        raise UsageError("--n and --r are required")
    if not (1 <= r <= n <= GRASSMANNIAN_MAX_N):
        raise UsageError(f"need 1 <= r <= n <= {GRASSMANNIAN_MAX_N}, got n={n}, r={r}")
    rows = [_grassmannian_row(e) for e in grassmannian_elements(n, r)]
    ok = all(row["agree"] for row in rows)
    faithful = sum(row["alpha0_negative"] for row in rows)
    human = [f"A{n}, r={r}: {len(rows)} elements of W^(S-{{a{r}}}), {faithful} with w^-1(a0) < 0"]
    human.append(f"{'i':>2} {'sequence':<16} {'word':<30} {'seq':<5} {'J(w)':<16} {'stabilizer':<16} agree")
    for row in rows:
        human.append(
            f"{row['start'] or '-':>2} {str(tuple(row['sequence'])):<16} {' '.join(map(str, row['word'])) or 'id':<30} "
            f"{str(row['sequence_test']):<5} {_fmt_set(row['J']) if row['J'] is not None else '-':<16} "
            f"{_fmt_set(row['stabilizer']):<16} {row['agree']}"
        )
    config = {"subcommand": "grassmannian", "n": n, "r": r}
    summary = {"total": len(rows), "alpha0_negative": faithful, "all_agree": ok}
    _emit(args, config, {"rows": rows, "summary": summary}, human)
    return EXIT_OK if ok else EXIT_FAIL


def sweep_types(max_rank: int):
    """(type, rank) pairs covered by a sweep, without repeating B_2 = C_2."""
    out = []
    for n in range(1, max_rank + 1):
        out.append(("A", n))
    out += [("B", n) for n in range(2, max_rank + 1)]
    out += [("C", n) for n in range(3, max_rank + 1)]
    out += [("D", n) for n in range(4, max_rank + 1)]
    out += [("E", n) for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        out.append(("F", 4))
    if max_rank >= 2:
        out.append(("G", 2))
    return out


def cmd_sweep(args) -> int:
    m = args.max_rank
    if m is None or not 1 <= m <= SWEEP_MAX_RANK:
        raise UsageError(f"--max-rank must be between 1 and {SWEEP_MAX_RANK}")
    reports = []
    for t, n in sweep_types(m):
        rs = build_root_system(t, n)
        reports.extend(verify(rs, I) for I in _proper_subsets(rs))
    reports.sort(key=lambda r: (r.type_name[0], int(r.type_name[1:]), len(r.parabolic), r.parabolic))
    code = _exit_for(reports)
    summary = {"total": len(reports), "passed": sum(r.passed for r in reports),
               "exceptional": sum(r.exceptional for r in reports), "exit_code": code}
    human = [_report_row(r) for r in reports]
    human.append(f"{summary['passed']}/{summary['total']} passed ({summary['exceptional']} exceptional)")
    _emit(args, {"subcommand": "sweep", "max_rank": m},
          {"reports": [report_json(r) for r in reports], "summary": summary}, human)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubaut",
        description="Witness Schubert varieties whose automorphism group is a given parabolic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, typed=True):
        if typed:
            p.add_argument("--type", choices=list("ABCDEFG") + list("abcdefg"), help="Cartan type letter")
            p.add_argument("--rank", type=int)
        p.add_argument("--json", action="store_true", help="emit one JSON document")

    p = sub.add_parser("verify", help="check conditions (i)-(iii) for one or all parabolics")
    common(p)
    p.add_argument("--parabolic", help="comma-separated simple indices I")
    p.add_argument("--full", action="store_true", help="the case P = G")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="print the witness word")
    common(p)
    p.add_argument("--parabolic")
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("cohomology", help="H^0(w, g/b) as a list of weight atoms")
    common(p)
    p.add_argument("--word", default="", help="comma-separated letters, e.g. 1,2,3")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("grassmannian", help="type A Grassmannian table")
    common(p, typed=False)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_grassmannian)

    p = sub.add_parser("sweep", help="verify every proper parabolic up to a rank bound")
    common(p, typed=False)
    p.add_argument("--max-rank", type=int, default=3)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
