"""Shipped encodings and their expected outputs."""

from __future__ import annotations

from importlib.resources import files

# (expected file, cli arguments); the second argument names a corpus file
GOLDEN = [
    ("two_step.parse.txt", ["parse", "two_step.tel"]),
    ("two_step.parse.txt", ["parse", "two_step_always.tel"]),
    ("two_step.models.txt", ["models", "two_step.tel", "--upto", "4"]),
    ("two_step.models.kv", ["models", "two_step.tel", "--upto", "4", "--format", "kv"]),
    ("two_step.ground1.lp", ["ground", "two_step.tel", "--lambda", "1"]),
    ("two_step.solve.txt", ["solve", "two_step.tel", "--from", "0", "--to", "5", "--mode", "first"]),
    ("yale_planning.compile.txt", ["compile", "yale_planning.tel", "--reduce"]),
    ("yale_planning.ground2.lp", ["ground", "yale_planning.tel", "--lambda", "2"]),
    ("yale_planning.solve.txt", ["solve", "yale_planning.tel", "--to", "4", "--mode", "all-at-first"]),
    ("fail_rule.compile.txt", ["compile", "fail_rule.tel", "--reduce"]),
    ("shooting_explanation.compile.txt", ["compile", "shooting_explanation.tel", "--reduce"]),
    ("shooting_explanation.solve.txt", ["solve", "shooting_explanation.tel", "--to", "6", "--mode", "all-at-first"]),
    ("shooting_explanation.solve.kv", ["solve", "shooting_explanation.tel", "--to", "6", "--format", "kv"]),
    ("shooting_bc.compile.txt", ["compile", "shooting.bc"]),
]


def path(name: str):
    return files(__name__) / name


def read(name: str) -> str:
    return path(name).read_text(encoding="utf-8")


def expected(name: str) -> str:
    return (files(__name__) / "expected" / name).read_text(encoding="utf-8")
