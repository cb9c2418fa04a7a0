"""Walk through the shooting explanation from formulas to a plan.

    python3 demos/shooting_walkthrough.py
"""

from teltrace.aspcore import emit_text
from teltrace.corpus import read
from teltrace.normalform import compile_theory, reduction_is_exact
from teltrace.syntax import parse_theory, print_formula
from teltrace.translate import bounded_solve, incremental_solve, tau_bounded


def main():
    theory = parse_theory(read("shooting_explanation.tel"))
    print("formulas:")
    for f in theory.formulas:
        tag = "" if reduction_is_exact(f) else "   (one-way obligation)"
        print(f"  {print_formula(f)}{tag}")

    program = compile_theory(theory)
    print("\npresent-centered program:")
    print(program.text())

    for report in incremental_solve(program, 0, 6, "all-at-first"):
        print(f"horizon {report.horizon}: {len(report.models)} model(s), {report.stats['rules']} rules")
    for t in report.projected(theory.alphabet):
        for i, s in enumerate(t):
            print(f"  {i}: {' '.join(sorted(s))}")

    # the same horizon through the one-shot translation
    print("\nbounded translation at horizon 4 agrees:",
          bounded_solve(program, 4).projected(theory.alphabet) == report.projected(theory.alphabet))
    print(f"ground rules at horizon 1:\n{emit_text(tau_bounded(program, 1))}")


if __name__ == "__main__":
    main()
