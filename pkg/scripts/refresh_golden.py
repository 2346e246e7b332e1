#!/usr/bin/env python3
"""Regenerate the CLI golden files from the current implementation.

Run from the repository root after an intentional output-format change,
then review the diff before committing:

    python scripts/refresh_golden.py
"""

from __future__ import annotations

import contextlib
import io
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))

from catmag.cli import main
from cli_cases import CASES, GOLDEN, resolve_argv


def run() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for stem, argv, expected_exit in CASES:
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            code = main(resolve_argv(argv))
        if code != expected_exit:
            raise SystemExit(
                f"{stem}: exit {code} but the case table expects {expected_exit}"
            )
        GOLDEN.joinpath(f"{stem}.txt").write_text(buffer.getvalue())
        print(f"wrote {stem}.txt ({len(buffer.getvalue())} bytes)")


if __name__ == "__main__":
    run()
