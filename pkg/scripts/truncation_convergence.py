"""How fast x (x) y is approximated by its coordinate truncations, measured in
the Besselian crossnorm, for sequences with polynomial decay."""
import argparse

import numpy as np

from besselnorm import c0, lp
from besselnorm.norms import projection_residual


def space(name, d):
    return c0(d) if name == "c0" else lp(float(name), d)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dim", type=int, default=64)
    ap.add_argument("--decay", type=float, default=1.5, help="x_i ~ i^-decay")
    ap.add_argument("--spaces", nargs="+", default=["1", "2", "4", "c0"])
    ap.add_argument("--seed", type=lambda s: int(s, 0), default=0xBE55)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    i = np.arange(1, args.dim + 1)
    x = rng.choice([-1.0, 1.0], args.dim) * i ** (-args.decay)
    y = rng.choice([-1.0, 1.0], args.dim) * i ** (-args.decay)
    cuts = [m for m in (1, 2, 4, 8, 16, 32, 64, 128, 256) if m <= args.dim]
    print("M".rjust(6) + "".join(f"{'alpha ' + s:>16}" for s in args.spaces))
    for m in cuts:
        vals = [projection_residual(x, y, m, m, space(s, args.dim), space(s, args.dim)) for s in args.spaces]
        print(f"{m:>6}" + "".join(f"{v:>16.6e}" for v in vals))


if __name__ == "__main__":
    main()
