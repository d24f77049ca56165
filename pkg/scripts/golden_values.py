"""Recompute the closed-form examples on l_2 (x) l_2, l_1 (x) l_1 and c0 (x) c0,
and evaluate the uniformity condition for two operators."""
import argparse
import json
import math

import numpy as np

from besselnorm import CoeffTensor, besselian_crossnorm, c0, injective_norm, lp, projective_norm, uniformity_violation_demo


def rows():
    l2 = lp(2, 2)
    u = CoeffTensor(np.eye(2), l2, l2)
    v = CoeffTensor([[1.0, 1.0], [-1.0, 1.0]], l2, l2)
    M = [[3.0, -1.0], [0.0, 2.0]]
    w1 = CoeffTensor(M, lp(1, 2), lp(1, 2))
    w0 = CoeffTensor(M, c0(2), c0(2))
    yield "l2 (x) l2", "u = e1e1 + e2e2", "alpha", besselian_crossnorm(u).value, 1.0
    yield "l2 (x) l2", "u", "pi", projective_norm(u).value, 2.0
    yield "l2 (x) l2", "u", "eps", injective_norm(u).value, 1.0
    yield "l2 (x) l2", "v = [[1,1],[-1,1]]", "eps", injective_norm(v).value, math.sqrt(2)
    yield "l2 (x) l2", "v", "alpha", besselian_crossnorm(v).value, 2.0
    yield "l2 (x) l2", "v", "pi", projective_norm(v).value, 2 * math.sqrt(2)
    yield "l1 (x) l1", "[[3,-1],[0,2]]", "alpha", besselian_crossnorm(w1).value, 6.0
    yield "l1 (x) l1", "[[3,-1],[0,2]]", "pi", projective_norm(w1).value, 6.0
    yield "c0 (x) c0", "[[3,-1],[0,2]]", "alpha", besselian_crossnorm(w0).value, 3.0
    yield "c0 (x) c0", "[[3,-1],[0,2]]", "eps", injective_norm(w0).value, 3.0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    table = [dict(zip(("space", "tensor", "norm", "value", "expected"), r)) for r in rows()]
    demo = uniformity_violation_demo()
    if args.json:
        print(json.dumps({"values": table, "uniformity": demo}, indent=2, sort_keys=True))
        return
    print(f"{'space':<10} {'tensor':<20} {'norm':<6} {'value':>14} {'expected':>14}  ok")
    for r in table:
        ok = abs(r["value"] - r["expected"]) <= 1e-9
        print(f"{r['space']:<10} {r['tensor']:<20} {r['norm']:<6} {r['value']:>14.10f} {r['expected']:>14.10f}  {'yes' if ok else 'NO'}")
    print()
    for name, c in sorted(demo["cases"].items()):
        print(
            f"{name:<16} S={c['S']}  alpha(u)={c['alpha_u']:.10f}  alpha(v)={c['alpha_v']:.10f}  "
            f"|S||T|alpha(u)={c['bound']:.10f}  violated={c['violated']}"
        )


if __name__ == "__main__":
    main()
