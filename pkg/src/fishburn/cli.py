"""Command-line front end: count, expand, map, verify, list.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any

from fishburn import ascent, matching, matrix, perm, poset, series, verify

log = logging.getLogger("fishburn")

CONFIG_ENV = "FISHBURN_CONFIG"
FAMILIES = ("ascent", "poset", "matrix", "perm", "matching")
DEFAULT_CAPS = {"ascent": 10, "poset": 10, "matrix": 10, "perm": 8, "matching": 7, "series": 24}
SERIES_NAMES = ("P", "K", "Bk", "G", "G_u1yt", "G_primitive")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# encodings


def encode_ascent(x) -> str:
    return ",".join(map(str, x))


def decode_ascent(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        x = tuple(int(v) for v in text.split(",")) if text else ()
    except ValueError:
        raise UsageError(f"ascent sequences are comma-separated integers, got {text!r}") from None
    if not x or not ascent.validate(x):
        raise UsageError(f"not a nonempty ascent sequence: {text!r}")
    return x


def encode_perm(p) -> str:
    return "".join(map(str, p)) if len(p) < 10 else " ".join(map(str, p))


def decode_perm(text: str) -> tuple[int, ...]:
    text = text.strip()
    parts = text.replace(",", " ").split() if (" " in text or "," in text) else list(text)
    try:
        p = tuple(int(v) for v in parts)
    except ValueError:
        raise UsageError(f"permutations are one-line words, got {text!r}") from None
    if sorted(p) != list(range(1, len(p) + 1)) or not p:
        raise UsageError(f"not a permutation: {text!r}")
    return p


def encode_poset(p: poset.IntervalOrder) -> dict[str, Any]:
    return {
        "n": p.n,
        "downChainSizes": [len(d) for d in p.down_chain],
        "levels": [sorted(level) for level in p.levels],
        "canonicalForm": [list(pair) for pair in poset.canonical_form(p)],
    }


def decode_matrix(text: str) -> matrix.StaircaseMatrix:
    try:
        return matrix.StaircaseMatrix.from_rows(json.loads(text))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"invalid matrix {text!r}: {exc}") from None


def encode_matching(m: matching.Matching) -> list[list[int]]:
    return [list(arc) for arc in m.arcs]


# ---------------------------------------------------------------------------
# configuration


def load_config(path: str | None) -> dict[str, Any]:
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    try:
        return json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None


def caps_from(config: dict[str, Any]) -> dict[str, int]:
    caps = dict(DEFAULT_CAPS)
    caps.update({k: int(v) for k, v in config.get("caps", {}).items()})
    return caps


def _size(args) -> int:
    n = args.n_flag if args.n_flag is not None else args.n
    if n is None:
        raise UsageError("a size is required (positional or --n)")
    if n < 0:
        raise UsageError("size must be nonnegative")
    return n


# ---------------------------------------------------------------------------
# commands


def count_family(family: str, n: int, k: int | None = None) -> int:
    if family == "ascent":
        return sum(1 for _ in ascent.enumerate_ascent(n, k))
    if family == "poset":
        return verify.poset_class_count(n, k)
    if family == "matrix":
        return sum(1 for _ in matrix.enumerate_matrices(n, k))
    if family == "perm":
        return sum(1 for _ in perm.enumerate_R(n, k))
    if family == "matching":
        return sum(1 for _ in matching.enumerate_stoimenow(n, k))
    raise UsageError(f"unknown family {family!r}")


def cmd_count(args, config) -> int:
    n = _size(args)
    cap = caps_from(config)[args.family]
    if n > cap:
        raise UsageError(f"n={n} exceeds the {args.family} limit {cap} (raise it via the config file)")
    if args.k is not None and args.k < 1:
        raise UsageError("k must be positive")
    value = count_family(args.family, n, args.k)
    if args.format == "json":
        print(json.dumps({"family": args.family, "n": n, "k": args.k, "count": value}))
    else:
        print(value)
    return 0


def build_series(name: str, order: int, k: int | None) -> series.TruncatedSeries:
    if name == "P":
        return series.P_series(order)
    if name == "K":
        return series.K_series(order)
    if name == "Bk":
        if k is None:
            raise UsageError("Bk needs --k")
        return series.Bk_series(order, k)
    if name == "G":
        return series.G_full(order)
    if name == "G_u1yt":
        return series.G_u1yt(order)
    if name == "G_primitive":
        return series.G_primitive(order)
    raise UsageError(f"unknown series {name!r}; choose from {', '.join(SERIES_NAMES)}")


def parse_filter(text: str) -> dict[int, int]:
    """``"u^2*v"`` -> {index(u): 2, index(v): 1}; ``"u^0"`` pins u to exponent 0."""
    pinned: dict[int, int] = {}
    for factor in text.replace(" ", "").split("*"):
        name, _, power = factor.partition("^")
        if not power and len(name) > 1 and name[1:].isdigit():
            name, power = name[0], name[1:]
        if name not in series.VARS:
            raise UsageError(f"unknown variable {name!r} in filter")
        pinned[series.VARS.index(name)] = int(power) if power else 1
    return pinned


def cmd_expand(args, config) -> int:
    order = args.order if args.order is not None else args.n
    if order is None:
        raise UsageError("an order is required (positional or --order)")
    cap = caps_from(config)["series"]
    if not 0 <= order <= cap:
        raise UsageError(f"order {order} outside [0, {cap}]")
    s = build_series(args.series, order, args.k)
    pinned = parse_filter(args.filter) if args.filter else {}
    rows = [(m, c) for m, c in s.items() if all(m[i] == e for i, e in pinned.items())]
    if args.format == "json":
        print(json.dumps({
            "series": args.series, "order": order, "filter": args.filter,
            "coefficients": {",".join(map(str, m)): series.format_rational(c) for m, c in rows},
        }, indent=2))
    else:
        labels = [series.format_monomial(m) for m, _ in rows]
        width = max((len(x) for x in labels), default=0)
        for label, (_, c) in zip(labels, rows):
            print(f"{label:<{width}}  {c}")
    return 0


def map_object(src: str, dst: str, text: str) -> dict[str, Any]:
    if "matching" in (src, dst):
        raise UsageError("matchings have no constructive map here; they are supported at "
                         "distribution level only (see 'verify')")
    pair = (src, dst)
    if pair == ("ascent", "poset"):
        x = decode_ascent(text)
        p = poset.build(x)
        return {"input": encode_ascent(x), "output": encode_poset(p),
                "input_stats": vars(ascent.stats(x)), "output_stats": vars(poset.poset_stats(p))}
    if pair == ("poset", "ascent"):
        form = _poset_form(text)
        n = len(form)
        for x in ascent.enumerate_ascent(n):
            p = poset.build(x)
            if poset.canonical_form(p) == form:
                return {"input": encode_poset(p), "output": encode_ascent(x),
                        "input_stats": vars(poset.poset_stats(p)), "output_stats": vars(ascent.stats(x))}
        raise UsageError("no ascent sequence builds a poset with that canonical form")
    if pair == ("ascent", "matrix"):
        x = decode_ascent(text)
        a = matrix.zeta(x)
        return {"input": encode_ascent(x), "output": a.to_lists(),
                "input_stats": vars(ascent.stats(x)), "output_stats": vars(matrix.matrix_stats(a))}
    if pair == ("matrix", "ascent"):
        a = decode_matrix(text)
        if a.dim == 0:
            raise UsageError("empty matrix has no nonempty preimage")
        x = matrix.gamma(a)
        return {"input": a.to_lists(), "output": encode_ascent(x),
                "input_stats": vars(matrix.matrix_stats(a)), "output_stats": vars(ascent.stats(x))}
    if pair == ("ascent", "perm"):
        x = decode_ascent(text)
        p = perm.upsilon(x)
        return {"input": encode_ascent(x), "output": encode_perm(p),
                "input_stats": vars(ascent.stats(x)), "output_stats": _perm_stats(p)}
    if pair == ("perm", "ascent"):
        p = decode_perm(text)
        if not perm.in_R(p):
            raise UsageError(f"{text} violates the restricted 231 condition")
        x = perm.lambda_(p)
        return {"input": encode_perm(p), "output": encode_ascent(x),
                "input_stats": _perm_stats(p), "output_stats": vars(ascent.stats(x))}
    raise UsageError(f"unsupported direction {src} -> {dst}")


def _perm_stats(p) -> dict[str, int]:
    return {"asc_inverse": ascent.asc(perm.inverse(p)), "b": perm.b_label(p), "adjdes": perm.adjdes(p)}


def _poset_form(text: str) -> tuple[tuple[int, int], ...]:
    try:
        data = json.loads(text)
    except ValueError:
        raise UsageError("posets are JSON objects with a canonicalForm or downSets field") from None
    if isinstance(data, dict) and "downSets" in data:
        p = poset.IntervalOrder.from_down_sets({int(k): set(v) for k, v in data["downSets"].items()})
        return poset.canonical_form(p)
    if isinstance(data, dict) and "canonicalForm" in data:
        return tuple(sorted(tuple(pair) for pair in data["canonicalForm"]))
    raise UsageError("poset JSON needs canonicalForm or downSets")


def cmd_map(args, config) -> int:
    try:
        result = map_object(args.source, args.target, args.object)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(result, indent=2))
    else:
        out = result["output"]
        print(out if isinstance(out, str) else json.dumps(out))
        print(f"  {args.source}: {result['input_stats']}")
        print(f"  {args.target}: {result['output_stats']}")
    return 0


def limits_from(args, config) -> verify.Limits:
    lim = verify.Limits.from_mapping(config.get("limits", {}))
    overrides = {name: getattr(args, f"n_{name}") for name in FAMILIES if getattr(args, f"n_{name}") is not None}
    if args.order is not None:
        overrides["recurrence_order"] = args.order
    lim = replace(lim, **overrides)
    if args.n_ascent is not None:
        # a smaller ascent size shrinks every derived size as well
        lim = lim.capped(args.n_ascent)
    if args.n_flag is not None:
        lim = lim.capped(args.n_flag)
    return lim


def cmd_verify(args, config) -> int:
    lim = limits_from(args, config)
    report = verify.run_all(lim, parallel=args.parallel)
    for check in report.checks:
        log.info("%s %s (%.2fs)", check.status.upper(), check.id, check.duration)
    if args.format == "json":
        text = json.dumps(report.to_dict(durations=not args.no_durations), indent=2, sort_keys=True, default=str)
    else:
        text = "\n".join(f"{c.status.upper():4}  {c.id}  {c.params}" for c in report.checks)
    if args.output:
        Path(args.output).write_text(text + "\n")
    print(text)
    return 0 if report.passed else 1


def cmd_list(args, config) -> int:
    groups = {
        "families": list(FAMILIES),
        "series": list(SERIES_NAMES),
        "checks": list(verify.CHECKS),
        "maps": ["ascent->poset", "poset->ascent", "ascent->matrix", "matrix->ascent",
                 "ascent->perm", "perm->ascent"],
    }
    chosen = {args.what: groups[args.what]} if args.what else groups
    if args.format == "json":
        print(json.dumps(chosen, indent=2))
    else:
        for name, items in chosen.items():
            print(f"{name}: {' '.join(items)}")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fishburn", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help=f"JSON config file (default: ${CONFIG_ENV})")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, default_format: str = "text") -> None:
        p.add_argument("--format", choices=("json", "text"), default=default_format)

    p = sub.add_parser("count", help="brute-force size of a family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--n", dest="n_flag", type=int)
    p.add_argument("--k", type=int, help="run / entry / descent-run / chain bound")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("expand", help="exact coefficients of a generating function")
    p.add_argument("series", choices=SERIES_NAMES)
    p.add_argument("n", type=int, nargs="?", help="truncation order in t")
    p.add_argument("--order", type=int)
    p.add_argument("--k", type=int, help="run bound for Bk")
    p.add_argument("--filter", help="pin exponents, e.g. u^2 or u^1*v^0")
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("map", help="apply a bijection to one object")
    p.add_argument("source", choices=FAMILIES)
    p.add_argument("target", choices=FAMILIES)
    p.add_argument("object")
    common(p)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="run every acceptance check")
    for name in FAMILIES:
        p.add_argument(f"--n-{name}", dest=f"n_{name}", type=int)
    p.add_argument("--n", dest="n_flag", type=int, help="cap every size limit")
    p.add_argument("--order", type=int, help="series order for the recurrence check")
    p.add_argument("--parallel", type=int, default=1, help="worker processes")
    p.add_argument("--output", help="also write the report to this file")
    p.add_argument("--no-durations", action="store_true", help="omit timings (byte-stable output)")
    common(p, "json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list", help="list families, series, maps and checks")
    p.add_argument("what", nargs="?", choices=("families", "series", "checks", "maps"))
    common(p)
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        config = load_config(args.config)
        return args.func(args, config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
