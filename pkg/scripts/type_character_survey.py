"""Compare induced and direct characters of every type block, cell by cell.

    python scripts/type_character_survey.py --rings cp:1 curve:2 --n-max 5
"""
import time

from krizmodel.config import RunConfig
from krizmodel.verify import type_character_check


def main(argv=None):
    cfg = RunConfig.from_argv(argv, rings=["cp:1", "cp:2", "curve:2"])
    failures = 0
    for ring in cfg.load_rings():
        for n in range(cfg.n_min, cfg.n_max + 1):
            t0 = time.perf_counter()
            types_ok, sums_ok, count = type_character_check(ring, n)
            failures += not (types_ok and sums_ok)
            print(f"{ring.name}\tn={n}\ttypes={count}\tper-type={types_ok}\tsums={sums_ok}"
                  f"\t{time.perf_counter() - t0:.2f}s", flush=True)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
