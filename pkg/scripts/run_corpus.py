"""Run the bundled corpus (or a directory) and report timing."""

import sys
import time

from liefol.cli import main

if __name__ == "__main__":
    t0 = time.perf_counter()
    code = main(["corpus", *sys.argv[1:]])
    print(f"elapsed {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    sys.exit(code)
