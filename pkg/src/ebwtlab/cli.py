"""Command-line front end.

Every subcommand goes through the same payload builders as the HTTP
service, so `--json` output is byte-identical to the service response
for the same logical request.  Text mode renders the payloads in a
terminal-friendly shape instead.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import api
from .api import ApiError, DEFAULT_LIMITS, DEFAULT_PORT, PORT_ENV_VAR, canonical_json
from .suites import SUITE_NAMES, run_suite

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ebwtlab",
        description="Burrows-Wheeler transforms of word multisets and their run counts.",
    )
    _add_common(parser, suppress=False)

    # The same flags are accepted after the subcommand; SUPPRESS keeps a
    # subcommand from clobbering a value given before it.
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)

    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("ebwt", parents=[common], help="transform of a comma-joined multiset")
    p.add_argument("parts", help="comma-joined parts, e.g. baa,bab")

    p = sub.add_parser("bwt", parents=[common], help="transform of a single word")
    p.add_argument("word")

    p = sub.add_parser("invert", parents=[common], help="recover the multiset behind a transform")
    p.add_argument("l", help="the transform string")

    p = sub.add_parser("runs", parents=[common], help="run count of a word")
    p.add_argument("word")

    p = sub.add_parser("count", parents=[common], help="number of k-restricted decompositions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list compositions of n with parts > k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("search", parents=[common], help="min and max run count over decompositions")
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, help="refuse searches larger than this many compositions")

    p = sub.add_parser("block", parents=[common], help="blocks of length p with the remainder folded in")
    p.add_argument("--word", required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("bound", parents=[common], help="check the block decomposition against its bound")
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("lyndon", parents=[common], help="Lyndon factorization of a word")
    p.add_argument("word")

    p = sub.add_parser("family", parents=[common], help="smallest adversarial family for k and ratio")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ratio", type=int, required=True)

    p = sub.add_parser("cycles", parents=[common], help="candidate length-k cycle systems for n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("artin", parents=[common], help="n up to a limit with n+1 prime and 2 a generator")
    p.add_argument("--max", type=int, required=True, dest="max")

    p = sub.add_parser("circulant", parents=[common], help="check the exact circulant inverse identity")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run a named property suite")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES)

    p = sub.add_parser("serve", parents=[common], help="start the HTTP/JSON service")
    p.add_argument("--port", type=int, help=f"default: config, then ${PORT_ENV_VAR}, then {DEFAULT_PORT}")

    return parser


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument(
        "--json",
        action="store_true",
        **({"default": argparse.SUPPRESS} if suppress else {"default": False}),
    )
    parser.add_argument("--alphabet", help="declared symbol order, e.g. ab", **kw)
    parser.add_argument("--config", help="key=value file with guard and cap overrides", **kw)


def _limits(args: argparse.Namespace) -> api.Limits:
    path = getattr(args, "config", None)
    if not path:
        return DEFAULT_LIMITS
    return api.limits_from_config(api.load_config(path))


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(canonical_json(payload))
    else:
        print(text)


def _kv(pairs: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return _dispatch(args)
    except ApiError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 1


def _dispatch(args: argparse.Namespace) -> int:
    limits = _limits(args)
    alphabet = getattr(args, "alphabet", None)
    cmd = args.command

    if cmd == "ebwt":
        payload = api.ebwt_payload(api.parse_parts(args.parts), alphabet, limits)
        _emit(args, payload, payload["l"])
    elif cmd == "bwt":
        payload = api.bwt_payload(args.word, alphabet, limits)
        _emit(args, payload, payload["l"])
    elif cmd == "invert":
        payload = api.invert_payload(args.l, alphabet, limits)
        _emit(args, payload, ",".join(payload["parts"]))
    elif cmd == "runs":
        payload = api.runs_payload(args.word, limits)
        _emit(args, payload, str(payload["runs"]))
    elif cmd == "count":
        payload = api.count_payload(args.n, args.k, limits)
        _emit(args, payload, payload["count"])
    elif cmd == "enumerate":
        payload = api.enumerate_payload(args.n, args.k, limits)
        _emit(args, payload, "\n".join(payload["compositions"]))
    elif cmd == "search":
        payload = api.search_payload(args.word, args.k, args.limit, alphabet, limits)
        _emit(
            args,
            payload,
            _kv(
                [
                    ("word", payload["word"]),
                    ("k", payload["k"]),
                    ("explored", payload["count_explored"]),
                    ("baseline", payload["baseline_rho"]),
                    ("min", f"{payload['min_rho']} via {payload['min_witness']}"),
                    ("max", f"{payload['max_rho']} via {payload['max_witness']}"),
                ]
            ),
        )
    elif cmd == "block":
        payload = api.block_payload(args.word, args.p, alphabet, limits)
        _emit(args, payload, ",".join(payload["parts"]))
    elif cmd == "bound":
        payload = api.bound_payload(args.word, args.k, alphabet, limits)
        _emit(
            args,
            payload,
            _kv(
                [
                    ("sigma", payload["sigma"]),
                    ("k", payload["k"]),
                    ("remainder", payload["remainder"]),
                    ("achieved", payload["achieved"]),
                    ("bound", payload["bound"]),
                    ("fine_bound", payload["fine_bound"]),
                    ("ok", _flag(payload["ok"])),
                    ("ok_fine", _flag(payload["ok_fine"])),
                ]
            ),
        )
    elif cmd == "lyndon":
        payload = api.lyndon_payload(args.word, alphabet, limits)
        _emit(args, payload, ",".join(payload["parts"]))
    elif cmd == "family":
        payload = api.family_payload(args.k, args.ratio, limits)
        text = f"({payload['n']}, {payload['word']}, {','.join(payload['parts'])})"
        _emit(args, payload, text)
    elif cmd == "cycles":
        payload = api.cycles_payload(args.n, args.k, limits)
        lines = [
            "t={} alpha={} beta={} i={} feasible={}".format(
                ",".join(str(b) for b in s["t"]),
                ",".join(str(a) for a in s["alpha"]),
                ",".join(str(b) for b in s["beta"]),
                ",".join(s["i"]),
                _flag(s["feasible"]),
            )
            for s in payload["systems"]
        ]
        _emit(args, payload, "\n".join(lines))
    elif cmd == "artin":
        payload = api.artin_payload(args.max, limits)
        _emit(args, payload, " ".join(str(v) for v in payload["values"]))
    elif cmd == "circulant":
        payload = api.circulant_payload(args.k, limits)
        _emit(args, payload, _flag(payload["ok"]))
    elif cmd == "verify":
        return _verify(args)
    elif cmd == "serve":
        return _serve(args, limits)
    return 0


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite)
    if args.json:
        payload = {
            "suite": report.suite,
            "ok": report.ok,
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail} for c in report.checks
            ],
        }
        print(canonical_json(payload))
    else:
        for c in report.checks:
            print(f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.detail}")
    return 0 if report.ok else 1


def resolve_port(flag: int | None, config_path: str | None) -> int:
    """Port precedence: --port flag, then config file, then environment,
    then the built-in default."""
    if flag is not None:
        return flag
    if config_path:
        from_config = api.load_config(config_path).get("port")
        if from_config is not None:
            return int(from_config)
    from_env = os.environ.get(PORT_ENV_VAR)
    if from_env:
        return int(from_env)
    return DEFAULT_PORT


def _serve(args: argparse.Namespace, limits: api.Limits) -> int:
    from .server import serve

    port = resolve_port(getattr(args, "port", None), getattr(args, "config", None))
    serve(port, limits)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
