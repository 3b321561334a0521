"""Command line interface.

Subcommands: ``verify`` runs the claim suite, ``apply`` decomposes the
state reached by a move word, ``order`` prints exact group orders, and
``mdim`` prints minimal faithful dimensions.  Exit codes: 0 success,
1 check failure, 2 usage error.  All numeric output is exact decimal.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import abelian, cube, replib, verify
from .cube import CubeState, MoveWord, apply_word


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cubereps",
        description="exact verification of the cube groups' structure and "
        "minimal representation dimensions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--filter", default="*", help="glob over check ids")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=None,
                          help="override per-check randomized trial counts")
    p_verify.add_argument("--json", action="store_true", dest="as_json")

    p_apply = sub.add_parser("apply", help="apply a move word to a solved cube")
    p_apply.add_argument("size", type=int, choices=(2, 3))
    p_apply.add_argument("word", type=str)
    p_apply.add_argument("--json", action="store_true", dest="as_json")

    p_order = sub.add_parser("order", help="print an exact group order")
    p_order.add_argument(
        "target", choices=("g2", "g3", "corner-group", "edge-group", "p")
    )

    p_mdim = sub.add_parser("mdim", help="minimal faithful dimensions")
    p_mdim.add_argument(
        "spec",
        nargs="+",
        help="g2 | g3 | exceptional | abelian N,N,... | zk0m:K,M",
    )
    p_mdim.add_argument("--json", action="store_true", dest="as_json")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "apply":
            return _cmd_apply(args)
        if args.command == "order":
            return _cmd_order(args)
        if args.command == "mdim":
            return _cmd_mdim(args)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


def _cmd_verify(args) -> int:
    ctx = verify.Context(seed=args.seed, trials=args.trials)
    try:
        results = verify.run_suite(ctx, args.filter)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.as_json:
        print(verify.report_json(results, ctx))
    else:
        print(verify.report_text(results))
    return 0 if all(r.status == "pass" for r in results) else 1


def _cmd_apply(args) -> int:
    w = MoveWord.parse(args.word)
    state = apply_word(CubeState.solved(args.size), w)
    corner = cube.corner_permutation(state)
    payload = {
        "state": json.loads(state.to_json()),
        "corner_permutation": corner.cycle_string(),
        "corner_orientation": list(cube.corner_orientation(state)),
        "invariant_s": cube.invariant_s(state),
    }
    if args.size == 3:
        payload["edge_permutation"] = cube.edge_permutation(state).cycle_string(
            letters=True
        )
        payload["edge_orientation"] = list(cube.edge_orientation(state))
        payload["invariant_t"] = cube.invariant_t(state)
    if args.as_json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for key in sorted(payload):
            if key == "state":
                continue
            print(f"{key}: {payload[key]}")
        print(f"state: {state.to_json()}")
    return 0


def _cmd_order(args) -> int:
    ctx = verify.Context()
    if args.target == "g2":
        value = ctx.g2_chain().order()
    elif args.target == "g3":
        value = ctx.g3_chain().order()
    elif args.target == "corner-group":
        value = ctx.corner_chain().order()
    elif args.target == "edge-group":
        from .perm import chain_build
        from .structure import beta

        value = chain_build([beta(f) for f in cube.FACES]).order()
    else:
        value = ctx.p_chain().order()
    print(value)
    return 0


def _parse_group(spec_parts: list[str]) -> abelian.FiniteAbelianGroup:
    text = spec_parts[1] if len(spec_parts) > 1 else ""
    if not text:
        raise ValueError("expected a comma list of cyclic orders")
    return abelian.FiniteAbelianGroup(tuple(int(x) for x in text.split(",")))


def _cmd_mdim(args) -> int:
    spec = args.spec
    kind = spec[0]
    if kind == "g2":
        payload = {"complex": 8, "real": 16, "method": "split-bound+construction"}
        rep = replib.build_rep_g2()
        assert replib.faithful_structural(rep) and rep.degree == payload["complex"]
        assert replib.g2_real_case_analysis()["bound"] == payload["real"]
    elif kind == "g3":
        payload = {"complex": 20, "real": 28, "method": "split-bound+case-table"}
        rep = replib.build_rep_g3()
        assert replib.faithful_structural(rep) and rep.degree == payload["complex"]
        assert replib.g3_real_case_table()["bound"] == payload["real"]
    elif kind == "exceptional":
        ex = replib.ExceptionalExample()
        assert replib.faithful_enumerated(ex.rep4.of, ex.elements)
        assert replib.faithful_enumerated(ex.rep6.of, ex.elements)
        payload = {
            "complex": ex.rep4.degree,
            "real": ex.rep6.real_dimension,
            "method": "enumeration",
        }
    elif kind == "abelian":
        group = _parse_group(spec)
        payload = {
            "complex": abelian.mdim_complex_abelian(group),
            "real": abelian.mdim_real_abelian(group),
            "method": "formula",
        }
        if group.order <= 512:
            payload["method"] = "formula=oracle"
            assert abelian.oracle_min_faithful(group, "complex") == payload["complex"]
            assert abelian.oracle_min_faithful(group, "real") == payload["real"]
    elif kind.startswith("zk0m:"):
        k, m = (int(x) for x in kind.split(":", 1)[1].split(","))
        group, _ = abelian.zk0m(k, m)
        payload = {
            "complex": abelian.mdim_complex_abelian(group),
            "real": abelian.mdim_real_abelian(group),
            "method": "formula",
        }
    else:
        raise ValueError(f"unknown mdim spec {kind!r}")
    if args.as_json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(
            f"complex: {payload['complex']}\nreal: {payload['real']}\n"
            f"method: {payload['method']}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
