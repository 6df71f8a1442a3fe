"""Command-line front end: ``qshuffle <command> ...``.

Exit status is 0 when everything checked passes, 1 when a verification
fails and 2 for malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import harness, render
from .bijection import PartitionPair, decompose, phi, psi_trace
from .errors import ContractViolation, InputError
from .insertion import canonical_labeling, descent_change, mis
from .perm import Permutation, descent_profile, enumerate_shuffles, maj, des, shuffle_distribution, tail_descent_count
from .qpartitions import QPoly, garsia_gessel_rhs

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _perm(text: str) -> Permutation:
    try:
        return Permutation(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ints(text: str) -> tuple:
    try:
        values = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"parts must be non-negative, got {text!r}")
    return values


def _emit(args, payload, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_stats(args):
    p = args.perm
    prof = descent_profile(p)
    tails = [tail_descent_count(p, k) for k in range(1, len(p) + 1)]
    payload = {
        "perm": list(p), "descent_set": sorted(prof.descent_set),
        "des": prof.des, "maj": prof.maj, "tail_descents": tails,
    }
    text = "\n".join([
        f"perm         {p}",
        f"descent set  {{{', '.join(map(str, sorted(prof.descent_set)))}}}",
        f"des          {prof.des}",
        f"maj          {prof.maj}",
        f"d_k          {' '.join(map(str, tails))}",
    ])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_shuffles(args):
    sigma, pi = args.sigma, args.pi
    if args.gf:
        dist = shuffle_distribution(sigma, pi)
        if args.k is not None:
            poly = dist.get(args.k, QPoly())
            _emit(args, {"k": args.k, "gf": poly.to_json()}, f"k={args.k}: {poly}")
            return EXIT_OK
        total = garsia_gessel_rhs(len(sigma), len(pi), maj(sigma), maj(pi))
        ks = sorted(dist)
        payload = {"distribution": {str(k): dist[k].to_json() for k in ks}, "total": total.to_json()}
        lines = [f"k={k}: {dist[k]}" for k in ks] + [f"all: {total}"]
        _emit(args, payload, "\n".join(lines))
        return EXIT_OK
    rows = []
    for alpha in enumerate_shuffles(sigma, pi):
        if args.k is None or des(alpha) == args.k:
            rows.append(alpha)
    payload = {"shuffles": [{"alpha": list(a), "des": des(a), "maj": maj(a)} for a in rows]}
    text = "\n".join(f"{render.marked(a, pi)}    des={des(a)} maj={maj(a)}" for a in rows)
    _emit(args, payload, text or "(none)")
    return EXIT_OK


def cmd_phi(args):
    dec = decompose(args.sigma, args.pi, args.alpha)
    pair = phi(args.sigma, args.pi, args.alpha)
    payload = pair.to_json()
    lines = [f"k = {pair.k}", f"lambda = {tuple(pair.lam)}", f"mu = {tuple(pair.mu)}"]
    if args.trace:
        payload["trace"] = {
            "chain": [list(a) for a in dec.chain],
            "t": list(dec.t_values),
            "descent_drop": [int(f) for f in dec.descent_drop_flags],
            "positions": list(dec.insertion_positions),
        }
        lines = [render.phi_table(dec), ""] + lines
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_psi(args):
    sigma, pi, k = args.sigma, args.pi, args.k
    r = des(sigma)
    lam = tuple(args.lam) + (0,) * max(0, k - r - len(args.lam))
    mu = tuple(args.mu) + (0,) * max(0, len(pi) - k + r - len(args.mu))
    pair = PartitionPair(lam, mu, k)
    steps = psi_trace(sigma, pi, k, pair)
    alpha = steps[-1].after if steps else sigma
    payload = {"alpha": list(alpha)}
    lines = [f"alpha = {alpha}"]
    if args.trace:
        payload["trace"] = [
            {"i": st.i, "letter": st.letter, "t": list(st.t_seq), "multiset": list(st.multiset),
             "position": st.position, "before": list(st.before)}
            for st in steps
        ]
        lines = [render.psi_table(steps, sigma, pi), ""] + lines
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_labeling(args):
    lab = canonical_labeling(args.perm, args.letter)
    payload = {
        "perm": list(args.perm), "letter": args.letter, "kinds": [str(k) for k in lab.kinds],
        "labels": list(lab.labels), "rl_count": lab.rl_count,
    }
    text = "\n".join([
        render.labeling_line(args.perm, lab),
        f"RL spaces  {' '.join(map(str, lab.rl_spaces))}",
        f"LR spaces  {' '.join(map(str, lab.lr_spaces))}",
    ])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_mis(args):
    seq = mis(args.perm, args.letter)
    changes = [descent_change(args.perm, i, args.letter) for i in range(len(args.perm) + 1)]
    payload = {"perm": list(args.perm), "letter": args.letter, "increments": list(seq), "descent_change": changes}
    text = f"MIS = {seq}"
    if args.trace:
        text = render.mis_table(args.perm, args.letter) + "\n\n" + text
    _emit(args, payload, text)
    return EXIT_OK


def _brief(value) -> str:
    if isinstance(value, dict):
        return str(value.get("gf", value.get("alpha", value)))
    return str(value)


def _report_line(rep) -> str:
    params = " ".join(
        f"{k}={' '.join(map(str, v)) if isinstance(v, list) else v}"
        for k, v in rep.parameters.items() if not isinstance(v, dict)
    )
    return f"{rep.verdict.upper():4}  {rep.theorem:19}  {params}  lhs={_brief(rep.lhs)}  rhs={_brief(rep.rhs)}  ({rep.elapsed * 1000:.1f} ms)"


def cmd_verify(args):
    what = args.what
    if what == "stanley":
        reports = harness.verify_stanley(args.sigma, args.pi)
    elif what == "garsia-gessel":
        reports = [harness.verify_garsia_gessel(args.sigma, args.pi)]
    elif what == "macmahon":
        reports = [harness.verify_macmahon(args.n, cap=args.cap)]
    elif what == "insertion":
        reports = [harness.verify_insertion_lemma(args.perm, args.letter)]
    else:
        reports = harness.run_suite(args.max_len, args.seed, cap=args.cap)
    if args.json:
        print(json.dumps([r.to_json() for r in reports], sort_keys=True))
    else:
        for rep in reports:
            print(_report_line(rep))
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports) - failed}/{len(reports)} passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--trace", action="store_true", default=argparse.SUPPRESS, help="print step tables")

    parser = argparse.ArgumentParser(prog="qshuffle", description="Shuffles, descents and major index: enumeration, the shuffle/partition bijection and identity checks.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--trace", action="store_true", help="print step tables")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("stats", cmd_stats, "descent set, des, maj and tail descent counts")
    p.add_argument("--perm", type=_perm, required=True)

    p = add("shuffles", cmd_shuffles, "list shuffles or their generating functions")
    p.add_argument("--sigma", type=_perm, required=True)
    p.add_argument("--pi", type=_perm, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--gf", action="store_true", help="print generating functions instead of the list")

    p = add("phi", cmd_phi, "shuffle -> partition pair")
    p.add_argument("--sigma", type=_perm, required=True)
    p.add_argument("--pi", type=_perm, required=True)
    p.add_argument("--alpha", type=_perm, required=True)

    p = add("psi", cmd_psi, "partition pair -> shuffle")
    p.add_argument("--sigma", type=_perm, required=True)
    p.add_argument("--pi", type=_perm, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_ints, default=())
    p.add_argument("--mu", type=_ints, default=(), help="zeros may be omitted")

    for name, func, help_ in (("labeling", cmd_labeling, "canonical labeling of insertion spaces"),
                              ("mis", cmd_mis, "major increment sequence")):
        p = add(name, func, help_)
        p.add_argument("--perm", type=_perm, required=True)
        p.add_argument("--letter", type=int, required=True)

    p = add("verify", cmd_verify, "check identities by enumeration")
    p.add_argument("what", choices=["stanley", "garsia-gessel", "macmahon", "insertion", "suite"])
    p.add_argument("--sigma", type=_perm)
    p.add_argument("--pi", type=_perm)
    p.add_argument("--perm", type=_perm)
    p.add_argument("--letter", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, help="enumeration cap (default 9 for suite, 8 for macmahon)")
    return parser


_NEEDS = {
    "stanley": ("sigma", "pi"),
    "garsia-gessel": ("sigma", "pi"),
    "macmahon": ("n",),
    "insertion": ("perm", "letter"),
    "suite": (),
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "verify":
        missing = [f"--{n.replace('_', '-')}" for n in _NEEDS[args.what] if getattr(args, n) is None]
        if missing:
            print(f"qshuffle: error: verify {args.what} needs {' '.join(missing)}", file=sys.stderr)
            return EXIT_USAGE
        if args.cap is None:
            args.cap = harness.MACMAHON_CAP if args.what == "macmahon" else harness.SUITE_CAP
    try:
        return args.func(args)
    except InputError as exc:
        print(f"qshuffle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ContractViolation as exc:
        print(f"qshuffle: contract violated: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
