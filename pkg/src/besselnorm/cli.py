"""besselnorm command line: norms of JSON tensors, property suites, the non-uniformity demo."""
from __future__ import annotations

import argparse
import sys

import numpy as np

from .config import RunConfig
from .frames import BiorthogonalSystem, frame_constants
from .io import ParseError, dumps, load_json, parse_system, parse_tensor
from .norms import (
    besselian_crossnorm,
    besselian_crossnorm_upper,
    hs_norm,
    injective_norm,
    projective_norm,
    uniformity_violation_demo,
)
from .opnorm import NormResult
from .spaces import CapExceeded
from .tensor import CoeffTensor, RankRep, rank_rep_to_coeffs
from .verify import ALIASES, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3
WHICH = ("bess", "inj", "proj", "hs")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _vec(w) -> str:
    if w is None:
        return "-"
    return "[" + ", ".join(_fmt(float(t)) for t in np.asarray(w).ravel()) + "]"


def _result_line(name: str, r: NormResult) -> str:
    cert = "exact" if r.exact else "bracket"
    return (
        f"{name}: value={_fmt(r.value)} bracket=[{_fmt(r.lower)}, {_fmt(r.upper)}] {cert} "
        f"method={r.method} witness_f={_vec(r.witness_f)} witness_g={_vec(r.witness_g)}"
    )


def _canonical_coords(u: CoeffTensor, sysL, sysR) -> CoeffTensor:
    """Coefficients w.r.t. frame vectors -> coefficients in the canonical bases."""
    lam = u.lam
    k, kk = lam.shape
    AL = np.eye(u.left.dim)[:, :k] if sysL is None else sysL.A[:, :k]
    AR = np.eye(u.right.dim)[:, :kk] if sysR is None else sysR.A[:, :kk]
    return CoeffTensor(AL @ lam @ AR.T, u.left, u.right)


def compute_norms(obj, which: str, cfg: RunConfig) -> dict:
    """Parse a tensor JSON object and compute the requested norms."""
    kw = {"cap": cfg.caps.sign_enum, "seed": cfg.seed}
    tensor, sysL, sysR = parse_tensor(obj)
    results: dict = {}
    names = WHICH if which == "all" else (which,)
    if isinstance(tensor, RankRep):
        if tensor.rank == 0:
            raise ParseError("representation has no pairs", "pairs")
        if "bess" in names and (sysL is not None or sysR is not None):
            results["bess"] = besselian_crossnorm_upper(tensor, sysL, sysR, **kw)
        coeffs = rank_rep_to_coeffs(tensor, sysL, sysR)
        canon = rank_rep_to_coeffs(tensor)
    else:
        coeffs = tensor
        canon = _canonical_coords(tensor, sysL, sysR)
    if "bess" in names and "bess" not in results:
        results["bess"] = besselian_crossnorm(coeffs, sysL, sysR, **kw)
    if "inj" in names:
        results["inj"] = injective_norm(canon, **kw)
    if "proj" in names:
        results["proj"] = projective_norm(canon, cap=cfg.caps.sign_enum, seed=cfg.seed)
    if "hs" in names:
        results["hs"] = NormResult.make_exact(hs_norm(canon), method="frobenius")
    return results


def cmd_norm(args, cfg: RunConfig) -> int:
    obj = load_json(args.input)
    if isinstance(obj, dict) and "ambient" in obj and "A" in obj:
        sysm: BiorthogonalSystem = parse_system(obj)
        fc = frame_constants(sysm, cap=cfg.caps.sign_enum, seed=cfg.seed)
        results = {"besselian_constant": fc.besselian, "unconditional_constant": fc.unconditional}
    else:
        results = compute_norms(obj, args.which, cfg)
    if cfg.output == "json":
        print(dumps({k: v.to_json() for k, v in results.items()}))
    else:
        for k, v in results.items():
            print(_result_line(k, v))
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, alpha=None) -> int:
    results = run_suite(args.suite, cfg, alpha=alpha)
    failed = [r for r in results if not r.passed]
    if cfg.output == "json":
        print(dumps({"seed": cfg.seed, "results": [r.to_json() for r in results], "failed": len(failed)}))
    else:
        for r in results:
            print(r.line())
            if not r.passed:
                print("  counterexample: " + dumps(r.counterexample).replace("\n", "\n  "))
        print(f"{len(results) - len(failed)}/{len(results)} properties passed (seed {cfg.seed:#x})")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_demo_nonuniform(args, cfg: RunConfig) -> int:
    rep = uniformity_violation_demo()
    if cfg.output == "json":
        print(dumps(rep))
        return EXIT_OK
    for name, case in sorted(rep["cases"].items()):
        verdict = "UNIFORMITY VIOLATED" if case["violated"] else "uniformity holds"
        print(
            f"{name}: S={case['S']} alpha(u)={_fmt(case['alpha_u'])}, alpha(v)={_fmt(case['alpha_v'])}, "
            f"bound={_fmt(case['bound'])}, {verdict}"
        )
    print("verdict: " + ("UNIFORMITY VIOLATED" if rep["violated"] else "no violation found"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="besselnorm", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="norms of a tensor (or constants of a system) read from JSON")
    p.add_argument("--input", required=True, help="JSON file")
    p.add_argument("--which", choices=WHICH + ("all",), default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=lambda s: int(s, 0))

    p = sub.add_parser("verify", help="run a seeded property suite")
    p.add_argument("--suite", choices=SUITES + tuple(ALIASES) + ("all",), required=True)
    p.add_argument("--seed", type=lambda s: int(s, 0))
    p.add_argument("--samples", type=int, help="random cases per property")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("demo-nonuniform", help="evaluate the uniformity condition on two operators")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=lambda s: int(s, 0))
    return ap


def main(argv=None, *, alpha=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_env(
            seed=args.seed,
            samples=getattr(args, "samples", None),
            output="json" if args.json else "text",
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.command == "norm":
            return cmd_norm(args, cfg)
        if args.command == "verify":
            return cmd_verify(args, cfg, alpha=alpha)
        return cmd_demo_nonuniform(args, cfg)
    except (ParseError, FileNotFoundError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
