"""Besselian constant L versus unconditional constant D for random
biorthogonal systems, by exhaustive sign enumeration."""
import argparse
import json

import numpy as np

from besselnorm import besselian_constant, c0, lp, system_from_vectors, unconditional_constant


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--max-dim", type=int, default=8)
    ap.add_argument("--space", default="2", help="exponent p or 'c0'")
    ap.add_argument("--seed", type=lambda s: int(s, 0), default=0xBE55)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    out = []
    for _ in range(args.trials):
        d = int(rng.integers(2, args.max_dim + 1))
        sp = c0(d) if args.space == "c0" else lp(float(args.space), d)
        A = rng.standard_normal((d, d))
        sys = system_from_vectors(sp, A)
        L, D = besselian_constant(sys), unconditional_constant(sys)
        out.append(
            {"dim": d, "cond": float(np.linalg.cond(A)), "L": [L.lower, L.upper], "D": [D.lower, D.upper], "exact": L.exact and D.exact}
        )
    if args.json:
        print(json.dumps(out, indent=2, sort_keys=True))
        return
    print(f"{'dim':>4} {'cond':>10} {'L':>24} {'D':>24} {'D/L':>8}")
    for r in out:
        fmt = lambda b: f"{b[0]:.6f}" if b[0] == b[1] else f"[{b[0]:.4f}, {b[1]:.4f}]"
        print(f"{r['dim']:>4} {r['cond']:>10.2f} {fmt(r['L']):>24} {fmt(r['D']):>24} {r['D'][0] / r['L'][0]:>8.4f}")
    worst = max(r["L"][0] - r["D"][1] for r in out)
    print(f"\nmax(L_lower - D_upper) = {worst:.3e}  (L <= D up to rounding when this is <= 1e-8)")


if __name__ == "__main__":
    main()
