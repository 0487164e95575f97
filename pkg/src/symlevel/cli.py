"""Command-line entry point: single-value queries, table construction with
cache management, and batch verification runs with CI-friendly exit codes.

Exit status: 0 on success/pass, 1 when a verification sweep finds a
counterexample, 2 on usage errors (bad flags, malformed partitions, exceeded
size caps).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters, crystal, growth, rank, tensor
from .errors import SymlevelError
from .parallel import default_workers
from .partitions import (
    Partition,
    bar,
    conjugate,
    is_p_regular,
    level,
    parse_partition,
    partitions_of,
)
from .reports import VerificationReport, merge_reports
from .tensor import Decomposition


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symlevel",
        description="Exact level/rank invariants, tensor coefficients and growth reports for symmetric groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--out", help="write output to FILE instead of stdout")
        p.add_argument("--format", choices=["json", "csv", "text"], default=None)
        p.add_argument("--workers", type=int, default=None)
        p.add_argument("--no-timing", action="store_true", help="omit wall_time_ms from reports")
        return p

    for name, help_text in [
        ("level", "level of a partition (n minus first part)"),
        ("bar", "drop the first part"),
        ("conjugate", "transpose the Young diagram"),
        ("dim", "Specht module dimension (hook length formula)"),
    ]:
        p = add(name, help=help_text)
        p.add_argument("partition")

    p = add("regular", help="test p-regularity")
    p.add_argument("partition")
    p.add_argument("--p", type=int, required=True)

    p = add("chartable", help="full character table of S_n (cached)")
    p.add_argument("--n", type=int, required=True)

    p = add("char", help="single character value chi^lambda(mu)")
    p.add_argument("partition")
    p.add_argument("cycle_type")

    p = add("kronecker", help="Kronecker coefficient g(lambda, mu, nu)")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")

    p = add("kronecker-decompose", help="decomposition of chi^lambda * chi^mu")
    p.add_argument("lam")
    p.add_argument("mu")

    p = add("lr", help="Littlewood-Richardson coefficient c^nu_{lambda,mu}")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--method", choices=["tableaux", "characters", "both"], default="tableaux")

    p = add("crystal", help="signature combinatorics for one residue")
    p.add_argument("action", choices=["signature", "reduced", "normal", "good", "eps", "etilde"])
    p.add_argument("partition")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1, help="number of good-node removals for etilde")

    p = add("js", help="Jantzen-Seitz test (exactly one normal node)")
    p.add_argument("partition")
    p.add_argument("--p", type=int, required=True)

    p = add("rank", help="closed-form rank of the irreducible labelled by a p-regular partition")
    p.add_argument("partition")
    p.add_argument("--p", type=int, required=True)

    p = add("specht-rank", help="closed-form Specht module rank")
    p.add_argument("partition")
    p.add_argument("--kind", choices=["rank2", "rank3"], required=True)

    p = add("rank-oracle", help="characteristic-zero restriction-type rank oracle")
    p.add_argument("partition")
    p.add_argument("--kind", choices=["rank2", "rank3"], required=True)

    p = add("plancherel", help="Plancherel measure of a list of constituents")
    p.add_argument("constituents", nargs="+")
    p.add_argument("--group", choices=["S", "A"], default="S")

    p = add("growth", help="tensor growth report for a pair, or a sweep with --n")
    p.add_argument("pair", nargs="*", help="two partition literals")
    p.add_argument("--n", type=int, default=None)

    p = add("bound", help="dimension lower bound for given n, level and characteristic")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = add("verify", help="exhaustive verification sweeps")
    p.add_argument(
        "theorem",
        choices=[
            "murnaghan-littlewood",
            "specht-rank",
            "tensor-additivity",
            "F",
            "G",
            "lambda-vs-bar",
            "lambda-upper",
            "dim-bound",
            "all",
        ],
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, default=0)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _scalar(value, fmt: str | None) -> str:
    if fmt == "json":
        return json.dumps(value)
    return str(value)


def _decomposition_text(dec: Decomposition) -> str:
    return "\n".join(f"{lam.literal()} {m}" for lam, m in dec.items())


def _decomposition_json(dec: Decomposition) -> str:
    return json.dumps({lam.literal(): m for lam, m in dec.items()})


def _report_text(rep: VerificationReport, include_timing: bool) -> str:
    head = f"{rep.status.upper()} {rep.theorem} instances={rep.instances_checked}"
    if include_timing:
        head += f" wall_time_ms={rep.wall_time_ms}"
    lines = [head]
    lines += [f"  counterexample {json.dumps(f)}" for f in rep.failures]
    return "\n".join(lines)


def _report_csv(rep: VerificationReport) -> str:
    lines = ["theorem,instances_checked,status,failure"]
    if rep.failures:
        lines += [f"{rep.theorem},{rep.instances_checked},fail,{json.dumps(f)!r}" for f in rep.failures]
    else:
        lines.append(f"{rep.theorem},{rep.instances_checked},pass,")
    return "\n".join(lines)


def _emit_reports(reps: list[VerificationReport], args) -> int:
    include_timing = not args.no_timing
    fmt = args.format or "json"
    if fmt == "json":
        payload = [r.to_dict(include_timing) for r in reps]
        text = json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)
    elif fmt == "csv":
        text = "\n".join(_report_csv(r) for r in reps)
    else:
        text = "\n".join(_report_text(r, include_timing) for r in reps)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reps) else 1


def _murnaghan_instances_report(max_n: int, p: int) -> VerificationReport:
    # p > 0: no assertion is possible here, only the qualifying instance list
    # (level constraint plus p-regularity of all three partitions).
    instances = []
    for n in range(1, max_n + 1):
        regs = [lam for lam in partitions_of(n) if is_p_regular(lam, p)]
        by_level: dict[int, list[Partition]] = {}
        for nu in regs:
            by_level.setdefault(level(nu), []).append(nu)
        for lam in regs:
            for mu in regs:
                for nu in by_level.get(level(lam) + level(mu), ()):
                    instances.append(
                        {"lambda": list(lam.parts), "mu": list(mu.parts), "nu": list(nu.parts)}
                    )
    return VerificationReport(
        theorem="murnaghan_littlewood_instances",
        parameters={"max_n": max_n, "p": p},
        instances_checked=len(instances),
        failures=[],
        observations={"instances": instances},
    )


def _run_verify(args) -> int:
    n = args.n
    workers = args.workers if args.workers is not None else default_workers()

    def ml() -> VerificationReport:
        if args.p != 0:
            return _murnaghan_instances_report(n, args.p)
        reps = [
            tensor.verify_murnaghan_littlewood(k, characters.character_table(k, workers=workers))
            for k in range(1, n + 1)
        ]
        return merge_reports(reps, "murnaghan_littlewood", {"max_n": n, "p": 0})

    def specht_rank() -> VerificationReport:
        reps = [rank.verify_specht_rank(k) for k in range(1, n + 1)]
        return merge_reports(reps, "specht_rank", {"max_n": n, "p": 0})

    def additivity() -> VerificationReport:
        reps = [rank.verify_tensor_rank_additivity(k) for k in range(1, n + 1)]
        return merge_reports(reps, "tensor_rank_additivity", {"max_n": n, "p": 0})

    runners = {
        "murnaghan-littlewood": lambda: [ml()],
        "specht-rank": lambda: [specht_rank()],
        "tensor-additivity": lambda: [additivity()],
        "F": lambda: [growth.check_F_submultiplicative(n, n, n)],
        "G": lambda: [growth.check_G_submultiplicative(n)],
        "lambda-vs-bar": lambda: [growth.check_lambda_vs_bar(n)],
        "lambda-upper": lambda: [growth.check_lambda_upper(n)],
        "dim-bound": lambda: [growth.check_dim_bound_char0(n)],
    }
    if args.theorem == "all":
        reps: list[VerificationReport] = []
        for name in [
            "murnaghan-littlewood",
            "specht-rank",
            "tensor-additivity",
            "F",
            "G",
            "lambda-vs-bar",
            "lambda-upper",
            "dim-bound",
        ]:
            reps.extend(runners[name]())
    else:
        reps = runners[args.theorem]()
    return _emit_reports(reps, args)


def _run(args) -> int:
    cmd = args.command
    fmt = args.format

    if cmd == "level":
        _emit(_scalar(level(parse_partition(args.partition)), fmt), args.out)
    elif cmd == "bar":
        _emit(bar(parse_partition(args.partition)).literal(), args.out)
    elif cmd == "conjugate":
        _emit(conjugate(parse_partition(args.partition)).literal(), args.out)
    elif cmd == "regular":
        _emit(_scalar(is_p_regular(parse_partition(args.partition), args.p), fmt).lower(), args.out)
    elif cmd == "dim":
        _emit(_scalar(characters.specht_dim(parse_partition(args.partition)), fmt), args.out)
    elif cmd == "chartable":
        workers = args.workers if args.workers is not None else default_workers()
        table = characters.character_table(args.n, workers=workers)
        _emit(json.dumps(characters.table_to_json_dict(table)), args.out)
    elif cmd == "char":
        lam = parse_partition(args.partition)
        mu = parse_partition(args.cycle_type)
        _emit(_scalar(characters.character_value(lam, mu), fmt), args.out)
    elif cmd == "kronecker":
        lam, mu, nu = map(parse_partition, (args.lam, args.mu, args.nu))
        _emit(_scalar(tensor.kronecker_coeff(lam, mu, nu), fmt), args.out)
    elif cmd == "kronecker-decompose":
        lam, mu = parse_partition(args.lam), parse_partition(args.mu)
        dec = tensor.kronecker_decompose(lam, mu)
        _emit(_decomposition_json(dec) if fmt == "json" else _decomposition_text(dec), args.out)
    elif cmd == "lr":
        lam, mu, nu = map(parse_partition, (args.lam, args.mu, args.nu))
        if args.method == "tableaux":
            value = tensor.lr_coeff_tableaux(lam, mu, nu)
        elif args.method == "characters":
            value = tensor.lr_coeff_characters(lam, mu, nu)
        else:
            a = tensor.lr_coeff_tableaux(lam, mu, nu)
            b = tensor.lr_coeff_characters(lam, mu, nu)
            if a != b:
                _emit(f"MISMATCH tableaux={a} characters={b}", args.out)
                return 1
            value = a
        _emit(_scalar(value, fmt), args.out)
    elif cmd == "crystal":
        return _run_crystal(args)
    elif cmd == "js":
        _emit(_scalar(crystal.is_jantzen_seitz(parse_partition(args.partition), args.p), fmt).lower(), args.out)
    elif cmd == "rank":
        _emit(_scalar(crystal.rank_formula(parse_partition(args.partition), args.p), fmt), args.out)
    elif cmd == "specht-rank":
        _emit(_scalar(crystal.specht_rank_formula(parse_partition(args.partition), args.kind), fmt), args.out)
    elif cmd == "rank-oracle":
        lam = parse_partition(args.partition)
        chi = characters.character(lam)
        value = rank.rank2_oracle(chi) if args.kind == "rank2" else rank.rank3_oracle(chi)
        _emit(_scalar(value, fmt), args.out)
    elif cmd == "plancherel":
        parts = [parse_partition(s) for s in args.constituents]
        n = parts[0].n
        mult: dict[Partition, int] = {}
        for lam in parts:
            mult[lam] = mult.get(lam, 0) + 1
        dec = Decomposition(n, mult)
        value = growth.an_plancherel(dec) if args.group == "A" else growth.plancherel(dec)
        _emit(_scalar(value, fmt), args.out)
    elif cmd == "growth":
        return _run_growth(args)
    elif cmd == "bound":
        _emit(_scalar(growth.dim_lower_bound(args.n, args.l, args.p), fmt), args.out)
    elif cmd == "verify":
        return _run_verify(args)
    else:  # pragma: no cover - argparse rejects unknown commands
        raise AssertionError(cmd)
    return 0


def _run_crystal(args) -> int:
    lam = parse_partition(args.partition)
    i, p = args.i, args.p
    action = args.action
    as_json = args.format == "json"
    if action in ("signature", "reduced"):
        sig = crystal.i_signature(lam, i, p)
        if action == "reduced":
            sig = crystal.reduced_signature(sig)
        if as_json:
            payload = [{"sign": s, "node": list(node)} for s, node in sig.entries]
            _emit(json.dumps(payload), args.out)
        else:
            _emit(str(sig) if sig.entries else "(empty)", args.out)
    elif action == "normal":
        nodes = crystal.normal_nodes(lam, i, p)
        if as_json:
            _emit(json.dumps([list(node) for node in nodes]), args.out)
        else:
            _emit(" ".join(f"({r},{c})" for r, c in nodes) if nodes else "(none)", args.out)
    elif action == "good":
        node = crystal.good_node(lam, i, p)
        if as_json:
            _emit(json.dumps(None if node is None else list(node)), args.out)
        else:
            _emit("(none)" if node is None else f"({node[0]},{node[1]})", args.out)
    elif action == "eps":
        _emit(_scalar(crystal.epsilon(lam, i, p), args.format), args.out)
    elif action == "etilde":
        result = crystal.e_tilde(lam, i, p, args.k)
        if as_json:
            _emit(json.dumps(None if result is None else list(result.parts)), args.out)
        else:
            _emit("(none)" if result is None else result.literal(), args.out)
    return 0


def _run_growth(args) -> int:
    fmt = args.format or "csv"
    if args.n is not None:
        records = growth.growth_sweep(args.n)
    elif len(args.pair) == 2:
        records = [growth.growth_report(parse_partition(args.pair[0]), parse_partition(args.pair[1]))]
    else:
        print("growth needs either two partition literals or --n N", file=sys.stderr)
        return 2
    if fmt == "json":
        _emit(json.dumps([r.to_dict() for r in records], indent=2), args.out)
    else:
        _emit("\n".join([growth.GROWTH_CSV_HEADER] + [r.csv_row() for r in records]), args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        return _run(args)
    except SymlevelError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
