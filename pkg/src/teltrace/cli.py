"""``teltrace`` command line: parse, eval, models, compile, ground, solve, verify."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .aspcore import emit_text, stable_models
from .equilibrium import tel_models, tht_models
from .errors import BudgetExceeded, InvariantError, NotCompositional, budget_bits
from .normalform import (
    ReductionError,
    TemporalProgram,
    compile_theory,
    from_bc_law,
    is_past_future_rule,
    is_present_centered,
    lint,
    parse_bc_laws,
    reduction_is_exact,
)
from .semantics import HTTrace, parse_trace, sat
from .syntax import ParseError, parse_theory, print_formula
from .syntax.formula import Theory, desugar
from .translate import MODES, bounded_solve, decode, incremental_solve, tau_bounded
from .verify import verify_instance

EXIT_OK = 0
EXIT_NO_MODEL = 20
EXIT_SYNTAX = 65
EXIT_INTERNAL = 70
EXIT_BUDGET = 75


class UsageError(ValueError):
    """Bad input that is not a syntax error (exit 65)."""


# input -------------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _alphabet(args) -> frozenset[str] | None:
    if not getattr(args, "alphabet", None):
        return None
    return frozenset(a.strip() for a in args.alphabet.split(",") if a.strip())


def load(path: str, alphabet=None):
    """A ``Theory`` for formula files, a ``TemporalProgram`` for ``.bc`` files."""
    text = _read(path)
    if path.endswith(".bc"):
        rules = [r for law in parse_bc_laws(text) for r in from_bc_law(law)]
        return TemporalProgram.of(rules, alphabet)
    return parse_theory(text, alphabet)


def _theory_of(source) -> Theory:
    if isinstance(source, TemporalProgram):
        return source.to_theory()
    return source


def _program_of(source, reduce=True) -> TemporalProgram:
    if isinstance(source, TemporalProgram):
        return source
    return compile_theory(source, reduce=reduce)


# output ------------------------------------------------------------------


class Out:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self._first_block = True

    def line(self, text: str = ""):
        print(text, file=self.stream)

    def block(self, pairs: list[tuple[str, object]]):
        if not self._first_block:
            self.line()
        self._first_block = False
        for k, v in pairs:
            self.line(f"{k}={v}")


def _state(s) -> str:
    return " ".join(sorted(s))


def _trace_human(out: Out, t, indent="  "):
    for i, s in enumerate(t):
        out.line(f"{indent}state {i}: {{{_state(s)}}}")


def _trace_pairs(t, prefix="state"):
    return [(f"{prefix}.{i}", _state(s)) for i, s in enumerate(t)]


# commands ----------------------------------------------------------------


def cmd_parse(args, out: Out) -> int:
    source = load(args.file, _alphabet(args))
    if args.core or args.formulas:
        theory = _theory_of(source)
        for f in theory.formulas:
            f = desugar(f) if args.core else f
            if out.fmt == "kv":
                out.block([("formula", print_formula(f))])
            else:
                out.line(print_formula(f) + ".")
        return EXIT_OK
    program = _program_of(source, reduce=False)
    if out.fmt == "kv":
        for r in program.rules:
            out.block([("kind", r.kind), ("rule", r.text())])
    else:
        out.stream.write(program.text())
    return EXIT_OK


def cmd_eval(args, out: Out) -> int:
    theory = _theory_of(load(args.file, _alphabet(args)))
    traces = [parse_trace(_read(p)) for p in args.traces]
    if len(traces) == 1:
        m = HTTrace.total_of(traces[0])
    elif len(traces) == 2:
        if traces[0].length != traces[1].length:
            raise UsageError("here and there traces differ in length")
        try:
            m = HTTrace(traces[0], traces[1])
        except ValueError as e:
            raise UsageError(str(e)) from None
    else:
        raise UsageError("expected one trace (total) or two traces (here, there)")
    if not 0 <= args.at <= m.length:
        raise UsageError(f"time point {args.at} outside 0..{m.length}")
    alphabet = theory.alphabet | m.there.atoms()
    for i, f in enumerate(theory.formulas, 1):
        verdict = "satisfied" if sat(m, args.at, f, alphabet) else "falsified"
        if out.fmt == "kv":
            out.block([("formula", i), ("text", print_formula(f)), ("at", args.at), ("verdict", verdict)])
        else:
            out.line(f"{i}: {verdict}  {print_formula(f)}")
    return EXIT_OK


def _lengths(args):
    if args.upto is not None:
        return range(args.upto + 1)
    return [args.length if args.length is not None else 0]


def cmd_models(args, out: Out) -> int:
    theory = _theory_of(load(args.file, _alphabet(args)))
    budget = args.budget
    count = 0
    for n in _lengths(args):
        if args.tht:
            models = tht_models(theory, n, budget=budget)
        else:
            models = tel_models(theory, n, budget=budget, engine=args.engine)
        count += len(models)
        if out.fmt == "human":
            out.line(f"length {n}: {len(models)} model{'s' if len(models) != 1 else ''}")
        for j, m in enumerate(models, 1):
            if args.tht:
                if out.fmt == "kv":
                    out.block([("length", n), ("model", j)] + _trace_pairs(m.here, "here") + _trace_pairs(m.there, "there"))
                else:
                    out.line(f" model {j}:")
                    for i, (h, t) in enumerate(zip(m.here, m.there)):
                        out.line(f"  state {i}: H={{{_state(h)}}} T={{{_state(t)}}}")
            elif out.fmt == "kv":
                out.block([("length", n), ("model", j)] + _trace_pairs(m))
            else:
                out.line(f" model {j}:")
                _trace_human(out, m)
    if count == 0:
        if out.fmt == "kv":
            out.block([("models", 0)])
        else:
            out.line("no models")
    return EXIT_OK


def cmd_compile(args, out: Out) -> int:
    source = load(args.file, _alphabet(args))
    program = _program_of(source, reduce=args.reduce)
    for w in lint(program):
        print(f"warning: {w}", file=sys.stderr)
    if out.fmt == "kv":
        out.block([("rules", len(program.rules)), ("aux", " ".join(sorted(program.aux_alphabet))),
                   ("present_centered", str(is_present_centered(program)).lower())])
        for r in program.rules:
            out.block([("kind", r.kind), ("rule", r.text())])
    else:
        out.stream.write(program.text())
    return EXIT_OK


def cmd_ground(args, out: Out) -> int:
    source = load(args.file, _alphabet(args))
    program = _program_of(source, reduce=args.reduce)
    ground = tau_bounded(program, args.length)
    if not args.solve:
        header = {"alphabet": sorted(program.alphabet)}
        if program.aux_alphabet:
            header["aux"] = sorted(program.aux_alphabet)
        header.update(translation="bounded", length=args.length)
        out.stream.write(emit_text(ground, header))
        return EXIT_OK
    models = stable_models(ground, budget=args.budget)
    _print_stable(out, models, args.length, program)
    return EXIT_OK if models else EXIT_NO_MODEL


def _print_stable(out: Out, models, n, program):
    if out.fmt == "human":
        out.line(f"length {n}: {len(models)} stable model{'s' if len(models) != 1 else ''}")
    for j, m in enumerate(models, 1):
        atoms_text = " ".join(str(a) for a in sorted(m, key=lambda a: a.sort_key()))
        t = decode(m, n, program.alphabet)
        if out.fmt == "kv":
            out.block([("length", n), ("model", j), ("atoms", atoms_text)] + _trace_pairs(t))
        else:
            out.line(f" model {j}: {atoms_text}")
            _trace_human(out, t)


def _solve_program(source):
    """Compile for the incremental route; every past-future rule is reduced."""
    if isinstance(source, TemporalProgram):
        program = source
        if not is_present_centered(program):
            raise ReductionError("program has shifted head literals; use --ground for the bounded route")
        return program, []
    notes = []
    for i, f in enumerate(source.formulas, 1):
        if is_past_future_rule(f) and not reduction_is_exact(f):
            notes.append(f"formula {i}: eventuality obligations are encoded one-way; cross-check with 'verify'")
    program = compile_theory(source, reduce=True)
    if not is_present_centered(program):
        bad = [r.text() for r in program.rules if not r.present_centered]
        raise ReductionError(
            "input is not reducible to a present-centered program (future operator outside a "
            f"past-future rule); shifted heads: {'; '.join(bad[:3])}; use --ground for the bounded route"
        )
    return program, notes


def cmd_solve(args, out: Out) -> int:
    source = load(args.file, _alphabet(args))
    if args.ground is not None:
        program = _program_of(source)
        report = bounded_solve(program, args.ground, budget=args.budget)
        _print_stable(out, report.models, args.ground, program)
        return EXIT_OK if report.models else EXIT_NO_MODEL
    if args.start > args.stop:
        raise UsageError("--from exceeds --to")
    program, notes = _solve_program(source)
    for n in notes:
        print(f"note: {n}", file=sys.stderr)
    reports = incremental_solve(program, args.start, args.stop, args.mode, budget=args.budget)
    found = False
    for r in reports:
        traces = r.projected(program.alphabet)
        found = found or bool(traces)
        if out.fmt == "kv":
            out.block([("horizon", r.horizon), ("models", len(traces)), ("rules", r.stats["rules"])])
            for j, t in enumerate(traces, 1):
                out.block([("horizon", r.horizon), ("model", j)] + _trace_pairs(t))
        else:
            out.line(f"horizon {r.horizon}: {len(traces)} model{'s' if len(traces) != 1 else ''}")
            for j, t in enumerate(traces, 1):
                out.line(f" model {j}:")
                _trace_human(out, t)
    if not found:
        if out.fmt == "kv":
            out.block([("result", "none"), ("lmax", args.stop)])
        else:
            out.line(f"no model up to λmax={args.stop}")
        return EXIT_NO_MODEL
    return EXIT_OK


def cmd_verify(args, out: Out) -> int:
    source = load(args.file, _alphabet(args))
    report = verify_instance(source, lmax=args.lmax, seed=args.seed, budget=args.budget)
    groups: dict[str, list[bool]] = {}
    for check, _, good in report.checks:
        groups.setdefault(check, []).append(good)
    for check, goods in groups.items():
        status = "pass" if all(goods) else "FAIL"
        if out.fmt == "kv":
            out.block([("check", check), ("runs", len(goods)), ("status", status)])
        else:
            out.line(f"{status}  {check} ({len(goods)} runs)")
    if report.ok:
        if out.fmt == "kv":
            out.block([("result", "pass")])
        else:
            out.line("verify: pass")
        return EXIT_OK
    worst = report.minimal()
    if out.fmt == "kv":
        out.block([("result", "fail"), ("reproducer", worst.reproducer())])
    else:
        out.line("verify: FAIL")
        out.line(f"reproducer: {worst.reproducer()}")
    return EXIT_INTERNAL


# parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="teltrace", description="Temporal equilibrium logic on finite traces.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "kv"), default="human")
    common.add_argument("--alphabet", help="comma-separated atoms added to the alphabet")
    common.add_argument("--budget", type=int, default=None,
                        help="enumeration budget in bits (default: $TELTRACE_BUDGET_BITS or 20)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("parse", parents=[common], help="parse and print the normalized program")
    s.add_argument("file")
    s.add_argument("--formulas", action="store_true", help="print formulas instead of the normal form")
    s.add_argument("--core", action="store_true", help="print formulas over primitive connectives")
    s.set_defaults(run=cmd_parse)

    s = sub.add_parser("eval", parents=[common], help="evaluate formulas on a trace")
    s.add_argument("file")
    s.add_argument("traces", nargs="+", help="one total trace, or here and there traces")
    s.add_argument("--at", type=int, default=0)
    s.set_defaults(run=cmd_eval)

    s = sub.add_parser("models", parents=[common], help="enumerate temporal stable models")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--lambda", dest="length", type=int)
    g.add_argument("--upto", type=int)
    s.add_argument("--tht", action="store_true", help="list THT models instead")
    s.add_argument("--engine", choices=("brute", "search"), default="brute")
    s.set_defaults(run=cmd_models)

    s = sub.add_parser("compile", parents=[common], help="print the temporal logic program")
    s.add_argument("file")
    s.add_argument("--reduce", action="store_true", help="reduce past-future rules to present-centered rules")
    s.set_defaults(run=cmd_compile)

    s = sub.add_parser("ground", parents=[common], help="emit the bounded translation")
    s.add_argument("file")
    s.add_argument("--lambda", dest="length", type=int, required=True)
    s.add_argument("--reduce", action="store_true")
    s.add_argument("--solve", action="store_true", help="print stable models instead of the program")
    s.set_defaults(run=cmd_ground)

    s = sub.add_parser("solve", parents=[common], help="incremental point-wise solving")
    s.add_argument("file")
    s.add_argument("--from", dest="start", type=int, default=0)
    s.add_argument("--to", dest="stop", type=int, default=10)
    s.add_argument("--mode", choices=MODES, default="first")
    s.add_argument("--ground", type=int, default=None, metavar="LAMBDA",
                   help="solve the bounded translation at one length instead")
    s.set_defaults(run=cmd_solve)

    s = sub.add_parser("verify", parents=[common], help="cross-validate all routes on one input")
    s.add_argument("file")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--lmax", type=int, default=4)
    s.set_defaults(run=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Out(args.format)
    try:
        budget_bits(args.budget)
        return args.run(args, out)
    except ParseError as e:
        print(f"{args.file}: syntax error: {e}", file=sys.stderr)
        return EXIT_SYNTAX
    except (UsageError, ReductionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SYNTAX
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvariantError, NotCompositional) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SYNTAX
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SYNTAX


if __name__ == "__main__":
    sys.exit(main())
