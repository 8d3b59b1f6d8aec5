"""Isotypic decomposition of H_2^2 of the CP^1 model and the beta_2 closed form.

    python scripts/h2_isotypic.py --n-min 3 --n-max 7
"""
from krizmodel.chars import decompose, format_decomposition
from krizmodel.config import RunConfig
from krizmodel.homology import KrizComplex
from krizmodel.ring import cp_ring


def main(argv=None):
    cfg = RunConfig.from_argv(argv, n_min=3, n_max=7)
    ring = cp_ring(1)
    for n in range(cfg.n_min, cfg.n_max + 1):
        K = KrizComplex(ring, n)
        dec = decompose(K.cohomology_character(2, 2)) if (2, 2) in K.dims else []
        closed = (n - 4) * (n - 3) * (3 * n * n - n + 2) // 24 if n >= 4 else 0
        print(f"n={n}\tbeta2={K.betti(2, 2)}\tclosed={closed}\t{format_decomposition(dec)}"
              f"\t{format_decomposition(dec, stable=True)}", flush=True)


if __name__ == "__main__":
    main()
