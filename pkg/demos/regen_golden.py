"""Rewrite the expected outputs of the shipped corpus.

Run after a deliberate output change, then review the diff by hand.
"""

import contextlib
import io
import sys

from teltrace import cli
from teltrace.corpus import GOLDEN, path


def render(argv):
    argv = list(argv)
    argv[1] = str(path(argv[1]))
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = cli.main(argv)
    return code, buf.getvalue()


def main():
    written = {}
    for name, argv in GOLDEN:
        code, text = render(argv)
        if name in written and written[name] != text:
            sys.exit(f"{name}: inputs disagree")
        written[name] = text
        (path("expected") / name).write_text(text, encoding="utf-8")
        print(f"{code:3d}  {name}")


if __name__ == "__main__":
    main()
