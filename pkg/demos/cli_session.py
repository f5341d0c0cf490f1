"""A guided command line session.

Runs the installed command through a handful of verbs and formats,
including the on-disk decomposition cache.  Each command is printed
before its output, so the transcript doubles as a cheat sheet.
"""

import subprocess
import sys
import tempfile
from pathlib import Path


def run(*argv: str) -> None:
    cmd = [sys.executable, "-m", "liefold", *argv]
    print("$ liefold " + " ".join(argv))
    result = subprocess.run(cmd, capture_output=True, text=True)
    sys.stdout.write(result.stdout)
    if result.stderr:
        sys.stdout.write(result.stderr)
    print(f"(exit {result.returncode})")
    print()


def main() -> None:
    run("decompose", "--family", "B", "--rank", "2", "[0,1]", "[0,1]")
    run("fold", "--pair", "even", "--n", "2", "[2,0]")
    run("triple", "--pair", "even", "--n", "2", "[1,0]", "[1,0]", "[1,0]")
    run("cell", "--pair", "even", "--n", "2", "[2,0,2]", "[5,0,5]")
    run("scan", "--pair", "even", "--n", "2", "--height", "1", "--format", "json")
    run("verify", "--pair", "odd", "--n", "2", "--height", "1")

    with tempfile.TemporaryDirectory() as tmp:
        cache = str(Path(tmp) / "decompositions.json")
        print("-- the cache file persists decompositions between runs --")
        run(
            "decompose", "--family", "A", "--rank", "3", "[1,1,1]", "[1,1,1]",
            "--cache", cache,
        )
        run(
            "decompose", "--family", "A", "--rank", "3", "[1,1,1]", "[1,1,1]",
            "--cache", cache, "--format", "long",
        )


if __name__ == "__main__":
    main()
