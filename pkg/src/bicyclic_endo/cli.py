"""Command-line front end.

Exit codes: 0 success or verified, 1 verification failure (a witness is
printed), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import grammar
from .bicyclic_ext import BicyclicExtension
from .conv_iso import ConvSemigroup, compose, hasse_dot, iso_J, iso_J_inv, maximal_chains
from .endomorphism import (
    Shift,
    Table,
    classify_injective,
    table_of,
    verify_endomorphism,
)
from .matrix_units import (
    MatrixUnits,
    congruence_freeness_check,
    end_structure_report,
    enumerate_endomorphisms,
)
from .omega_family import family_F, is_omega_closed


class UsageError(Exception):
    pass


def _emit(args, human, payload):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _semigroup(kind, args):
    if kind == "bext":
        if args.family is not None:
            return BicyclicExtension(grammar.parse_family(args.family))
        if args.n is None:
            raise UsageError("B_omega^F needs --n (for F_n) or --family")
        return BicyclicExtension(family_F(args.n))
    if kind == "conv":
        if args.n is None:
            raise UsageError("conv elements need --n (the rank bound)")
        return ConvSemigroup(args.n)
    if args.lam is None:
        raise UsageError("matrix units need --lambda")
    return MatrixUnits(args.lam)


def cmd_mul(args):
    x, y = grammar.parse_element(args.x), grammar.parse_element(args.y)
    kinds = {grammar.element_kind(e) for e in (x, y)} - {None}
    if len(kinds) > 1:
        raise UsageError(f"elements come from different semigroups: {sorted(kinds)}")
    if args.semigroup:
        if kinds and kinds != {args.semigroup}:
            raise UsageError(f"--semigroup {args.semigroup} does not match the elements")
        kind = args.semigroup
    elif kinds:
        kind = kinds.pop()
    else:
        raise UsageError("both factors are 0; pass --semigroup to say which semigroup")
    S = _semigroup(kind, args)
    for e in (x, y):
        if not S.contains(e):
            raise UsageError(f"{e} is not an element of {S!r}")
    product = S.mul(x, y)
    _emit(args, str(product), {"semigroup": kind, "product": grammar.element_to_json(product)})
    return 0


def cmd_family_check(args):
    fam = grammar.parse_family(args.family)
    verdict = is_omega_closed(fam)
    if verdict.closed:
        _emit(args, f"{fam} is omega-closed", {"closed": True})
        return 0
    n, f1, f2 = verdict.witness
    _emit(
        args,
        f"{fam} is not omega-closed: {f1} & (-{n} + {f2}) is not in the family",
        {"closed": False, "witness": {"n": n, "F1": list(f1), "F2": list(f2)}},
    )
    return 1


def cmd_iso_check(args):
    n, W = args.n, args.window
    if n < 1:
        raise UsageError("--n must be at least 1")
    S = BicyclicExtension.F(n - 1)
    elements = S.window(W)
    images = {x: iso_J(x, n) for x in elements}
    witness = None
    for x in elements:
        if iso_J_inv(images[x], n) != x:
            witness = {"kind": "not_bijective", "x": str(x)}
            break
    if witness is None:
        for x in elements:
            for y in elements:
                if iso_J(S.mul(x, y), n) != compose(images[x], images[y]):
                    witness = {"kind": "not_homomorphic", "x": str(x), "y": str(y)}
                    break
            if witness:
                break
    if witness is None:
        _emit(
            args,
            f"J: B^F_{n - 1} -> I^{n}(conv) is a bijective homomorphism on window {W} "
            f"({len(elements) ** 2} pairs)",
            {"ok": True, "pairs": len(elements) ** 2},
        )
        return 0
    _emit(args, f"J fails: {witness}", {"ok": False, "witness": witness})
    return 1


def _load_table(args):
    try:
        with open(args.table) as fh:
            mapping = grammar.parse_table(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read table: {exc}") from None
    kinds = {grammar.element_kind(x) for x in mapping} - {None}
    if len(kinds) != 1 or kinds == {"mu"}:
        raise UsageError("a table must use one of the (i,j,F) or conv(s,t,k) grammars")
    kind = kinds.pop()
    S = ConvSemigroup(args.n) if kind == "conv" else BicyclicExtension.F(args.n - 1)
    window = set(S.window(args.window))
    missing = window - set(mapping)
    extra = set(mapping) - window
    if missing or extra:
        some = sorted(missing or extra, key=lambda x: x.sort_key())[0]
        what = "misses" if missing else "has entries outside"
        raise UsageError(f"table {what} window {args.window}, e.g. {some}")
    return S, Table(args.window, mapping)


def cmd_endo_verify(args):
    S, table = _load_table(args)
    v = verify_endomorphism(table, S, args.window)
    payload = {"ok": v.ok, "checked": v.checked, "skipped": v.skipped}
    if v.ok:
        _emit(args, f"endomorphism on window {args.window}: {v.checked} pairs checked, "
              f"{v.skipped} skipped (product outside the window)", payload)
        return 0
    payload["witness"] = [str(w) for w in v.witness]
    _emit(args, f"not an endomorphism: fails at {', '.join(payload['witness'])}", payload)
    return 1


def cmd_endo_classify(args):
    _, table = _load_table(args)
    result = classify_injective(table, args.n)
    payload = result.to_json()
    payload["window"] = args.window
    payload["scope"] = "agrees with Shift(i0) on the window only" if result.ok else "window"
    print(json.dumps(payload, sort_keys=True))
    return 0 if result.ok else 1


def cmd_table(args):
    S = ConvSemigroup(args.n) if args.semigroup == "conv" else BicyclicExtension.F(args.n - 1)
    t = table_of(Shift(args.p), S, args.window)
    sys.stdout.write(grammar.format_table(t.mapping))
    return 0


def cmd_chains(args):
    chains = maximal_chains(args.window, args.n)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(hasse_dot(args.window, args.n))
    if args.figure:
        from .plotting import plot_hasse

        plot_hasse(args.window, args.n, args.figure)
    lengths = sorted({len(c) for c in chains})
    human = "\n".join(" < ".join(map(str, c)) for c in chains)
    human += f"\n{len(chains)} maximal chains, lengths {lengths}"
    payload = {"chains": [[grammar.element_to_json(e) for e in c] for c in chains], "lengths": lengths}
    _emit(args, human, payload)
    return 0


def cmd_matrix_endos(args):
    lam = args.lam
    if args.figure:
        from .plotting import plot_end_composition

        plot_end_composition(lam, args.figure)
    if args.report:
        r = end_structure_report(lam)
        human = "\n".join(
            [f"End(B_{lam}): {r['endomorphisms']} endomorphisms "
             f"({r['injective']} injective, {r['annihilating']} annihilating), "
             f"{r['automorphisms']} automorphisms"]
            + [f"  {'ok  ' if v else 'FAIL'} {k}" for k, v in r["checks"].items()]
            + [f"  note: {r['note']}"]
        )
        _emit(args, human, r)
        return 0 if r["ok"] else 1
    ends = enumerate_endomorphisms(lam)
    inj = sum(e.is_injective() for e in ends)
    ann = sum(e.is_constant() for e in ends)
    _emit(
        args,
        f"{len(ends)} endomorphisms ({inj} injective, {ann} annihilating)",
        [e.as_dict() for e in ends],
    )
    return 0


def cmd_congruences(args):
    r = congruence_freeness_check(args.lam)
    human = f"{r['congruences']} congruences" + (" (congruence-free)" if r["congruence_free"] else "")
    if "note" in r:
        human += f"; {r['note']}"
    _emit(args, human, r)
    return 0 if r["congruence_free"] else 1


def cmd_suite(args):
    from .suite import run_suite

    results = run_suite(args.jobs)
    if args.json:
        print(json.dumps([r._asdict() for r in results], sort_keys=True))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="bicyclic-endo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", parents=[common], help="multiply two elements")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--n", type=int, help="F_n for (i,j,F) elements, rank bound for conv")
    p.add_argument("--family", help="explicit family for (i,j,F) elements, e.g. {[0;0],[0;1],{}}")
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--semigroup", choices=["bext", "conv", "mu"])
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("family-check", parents=[common], help="decide omega-closedness")
    p.add_argument("family")
    p.set_defaults(func=cmd_family_check)

    p = sub.add_parser("iso-check", parents=[common], help="check J on a window")
    p.add_argument("--n", type=int, required=True, help="rank bound of I^n(conv)")
    p.add_argument("--window", type=int, required=True)
    p.set_defaults(func=cmd_iso_check)

    for name, func in (("endo-verify", cmd_endo_verify), ("endo-classify", cmd_endo_classify)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--table", required=True, help="file of 'elem -> elem' lines")
        p.add_argument("--n", type=int, required=True,
                       help="rank bound of I^n(conv); (i,j,F) tables live in B^F_(n-1)")
        p.add_argument("--window", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("table", parents=[common], help="write the table of Shift(p)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--semigroup", choices=["bext", "conv"], default="conv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("chains", parents=[common], help="maximal chains of idempotents")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--dot", help="write the Hasse diagram as DOT")
    p.add_argument("--figure", help="render the Hasse diagram to an image file")
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("matrix-endos", parents=[common], help="enumerate End(B_lambda)")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--report", action="store_true")
    p.add_argument("--figure", help="render the composition table to an image file")
    p.set_defaults(func=cmd_matrix_endos)

    p = sub.add_parser("congruences", parents=[common], help="count congruences of B_lambda")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.set_defaults(func=cmd_congruences)

    p = sub.add_parser("suite", parents=[common], help="run every acceptance check")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except grammar.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        # AlgebraError and Unsupported are ValueErrors: bad input, not a failed check
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
