"""Command-line front end.

Exit status 0 means success / true, 1 means a false verdict or a contract
violation (e.g. decomposing a non-member), 2 means the input did not parse.
Results go to stdout, diagnostics to stderr.  ``--json`` switches every
command to a JSON document carrying ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from youngbraid import _kernel
from youngbraid.braid import (
    BKLFactor,
    BraidWord,
    bkl_expand,
    bkl_expand_alt,
    braid_equal,
    parse_braid_tokens,
)
from youngbraid.errors import ParseError, RankError, YoungBraidError
from youngbraid.free_product import certify_free, exotic, theta
from youngbraid.hurwitz import GTuple, apply_braid, bullet
from youngbraid.young import Partition, connect, decompose, is_member, orbit_verdict

SCHEMA = 1


class _Usage(Exception):
    """Bad input that has no caret position (exit 2)."""


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}))
    else:
        print(text)


def _braid(text: str, strands: int) -> BraidWord:
    return BraidWord.parse(text, strands)


def _tuples(*texts: str) -> list[GTuple]:
    parsed = [GTuple.parse(t) for t in texts]
    rank = max(t.rank for t in parsed)
    return [GTuple.parse(t, rank) for t in texts]


def cmd_member(args) -> int:
    q = Partition.parse(args.partition)
    b = _braid(args.braid, q.n)
    ok = is_member(b, q)
    _emit(args, {"member": ok, "braid": b.format(), "partition": q.format()},
          "true" if ok else "false")
    return 0 if ok else 1


def cmd_decompose(args) -> int:
    q = Partition.parse(args.partition)
    b = _braid(args.braid, q.n)
    fac = decompose(b, q)
    _emit(args, {"factors": fac.to_json(), "text": fac.format(), "strands": q.n}, fac.format())
    return 0


def cmd_orbit_check(args) -> int:
    t, u = _tuples(args.tuple, args.base)
    verdict = orbit_verdict(t, u)
    text = "true" if verdict else f"false: {verdict.reason}"
    _emit(args, {"in_orbit": verdict.member, "reason": verdict.reason or None}, text)
    return 0 if verdict else 1


def cmd_connect(args) -> int:
    t, u = _tuples(args.tuple, args.base)
    b = connect(t, u)
    _emit(args, {"braid": b.format(), "letters": list(b.letters), "strands": b.strands},
          b.format())
    return 0


def cmd_expand(args) -> int:
    items = parse_braid_tokens(args.bkl, args.strands)
    if not items or not all(isinstance(x, BKLFactor) for x in items):
        raise _Usage("--bkl expects band generator tokens such as a(1,3) or a(1,3)^-1")
    expand = bkl_expand_alt if args.alt else bkl_expand
    letters: list[int] = []
    for f in items:
        letters.extend(expand(f, args.strands).letters)
    b = BraidWord(letters, args.strands)
    _emit(args, {"braid": b.format(), "letters": letters, "strands": args.strands}, b.format())
    return 0


def cmd_braid_eq(args) -> int:
    left = _braid(args.left, args.strands)
    right = _braid(args.right, args.strands)
    ok = braid_equal(left, right)
    _emit(args, {"equal": ok}, "true" if ok else "false")
    return 0 if ok else 1


def _selftest_checks(seed: int, samples: int):
    a13 = bkl_expand(BKLFactor(1, 3), 4)
    a24 = bkl_expand(BKLFactor(2, 4), 4)
    yield "free subgroup <a13, a24> up to length 10", certify_free((a13, a24), 10)
    yield "theta images u^2 v u^2 and v u^2 v u^2 v", (
        theta(exotic(a13)).format() == "u^2 v u^2"
        and theta(exotic(a24)).format() == "v u^2 v u^2 v"
    )

    q = Partition([[1, 3], [2, 4]])
    b = BraidWord.parse("a(2,4) a(1,3)^-1", 4)
    t = apply_braid(b, GTuple.trivial(4))
    expected = GTuple.parse(
        "(v1 v3 v1^-1, v4, v4^-1 v1 v3^-1 v2 v3 v1 v3^-1 v2^-1 v3 v1^-1 v4,"
        " v4^-1 v1 v3^-1 v2 v3 v1^-1 v4)"
    )
    yield "worked example: b . t_triv", t == expected
    t = bullet(bkl_expand(BKLFactor(1, 3, -1), 4), t)
    yield "worked example: first bullet step", t == GTuple.parse(
        "(v1, v4, v4^-1 v2 v3 v2^-1 v4, v4^-1 v2 v4)"
    )
    t = bullet(bkl_expand(BKLFactor(2, 4), 4), t)
    yield "worked example: second bullet step", t == GTuple.trivial(4)
    yield "worked example: factorization", decompose(b, q).format() == "a(2,4) a(1,3)^-1"

    rng = random.Random(seed)
    ok = True
    for _ in range(samples):
        n = rng.randint(2, 6)
        labels = [rng.randrange(n) for _ in range(n)]
        i, j = rng.sample(range(n), 2)
        labels[j] = labels[i]
        q = Partition(
            [[k + 1 for k in range(n) if labels[k] == s] for s in set(labels)], n
        )
        pairs = q.admissible_pairs()
        factors = [
            BKLFactor(*rng.choice(pairs), rng.choice((1, -1))) for _ in range(rng.randint(0, 6))
        ]
        b = BraidWord([a for f in factors for a in bkl_expand(f, n).letters], n)
        fac = decompose(b, q)
        ok &= is_member(b, q) and fac.is_admissible(q) and braid_equal(fac.braid(), b)
    yield f"random round trip ({samples} samples, seed {seed})", ok


def cmd_selftest(args) -> int:
    results = []
    for name, ok in _selftest_checks(args.seed, args.samples):
        results.append({"check": name, "passed": bool(ok)})
        if not args.json:
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
    passed = all(r["passed"] for r in results)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": "selftest", "backend": _kernel.BACKEND,
                          "passed": passed, "checks": results}))
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")

    parser = argparse.ArgumentParser(
        prog="youngbraid",
        description="Young subgroups of braid groups: membership, factorization, Hurwitz orbits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("member", parents=[common], help="test membership in B_Q")
    p.add_argument("--braid", required=True, help='braid word, e.g. "s1 a(1,3)^-1"')
    p.add_argument("--partition", required=True, help='partition JSON, e.g. "[[1,3],[2,4]]"')
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("decompose", parents=[common], help="factor a member of B_Q")
    p.add_argument("--braid", required=True)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("orbit-check", parents=[common], help="is TUPLE in the orbit of BASE?")
    p.add_argument("--tuple", required=True, help='e.g. "(x2, x2^-1 x1 x2)"')
    p.add_argument("--base", required=True, help='tuple of generators, e.g. "(x1, x2)"')
    p.set_defaults(func=cmd_orbit_check)

    p = sub.add_parser("connect", parents=[common], help="braid b with b . BASE = TUPLE")
    p.add_argument("--tuple", required=True)
    p.add_argument("--base", required=True)
    p.set_defaults(func=cmd_connect)

    p = sub.add_parser("expand", parents=[common], help="Artin word of band generators")
    p.add_argument("--bkl", required=True, help='e.g. "a(1,3)"')
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--alt", action="store_true", help="use the alternative expansion")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("braid-eq", parents=[common], help="equality of two braids")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--strands", type=int, required=True)
    p.set_defaults(func=cmd_braid_eq)

    p = sub.add_parser("selftest", parents=[common], help="free-subgroup certificate and worked example")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=50, help="random round-trip samples")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"youngbraid {args.command}: parse error: {exc.annotated()}", file=sys.stderr)
        return 2
    except (_Usage, RankError) as exc:
        print(f"youngbraid {args.command}: {exc}", file=sys.stderr)
        return 2
    except YoungBraidError as exc:
        print(f"youngbraid {args.command}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"youngbraid {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
