"""Betti tables of E(X, n) with the CP^1 closed form alongside.

    python scripts/cp1_poincare_table.py --rings cp:1 cp:2 --n-min 2 --n-max 5
"""
import time

from krizmodel.config import RunConfig
from krizmodel.homology import KrizComplex, cp1_expected_poincare, poincare_string


def main(argv=None):
    cfg = RunConfig.from_argv(argv, n_max=6)
    for ring in cfg.load_rings():
        is_cp1 = ring.top_degree == 2 and ring.size == 2
        for n in range(cfg.n_min, cfg.n_max + 1):
            t0 = time.perf_counter()
            table = KrizComplex(ring, n).betti_table()
            line = f"{ring.name}\tn={n}\t{poincare_string(table)}"
            if is_cp1:
                line += "\tmatches" if table == cp1_expected_poincare(n) else "\tDIFFERS"
            print(f"{line}\t{time.perf_counter() - t0:.2f}s", flush=True)


if __name__ == "__main__":
    main()
