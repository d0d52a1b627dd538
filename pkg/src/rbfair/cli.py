"""Thin command-line client for the allocation service.

Every verb builds a JSON request, sends it to the service (an in-process
instance by default, or a remote one via --server) and renders the response
as CSV.  Exit codes: 0 success, 1 input error, 2 allocation error.
"""

from __future__ import annotations

import argparse
import asyncio
import csv
import io
import sys
from pathlib import Path

import httpx

from .exceptions import ScenarioError
from .scenario_io import load_scenario
from .service.app import create_app
from .service.schemas import ScenarioSpec
from .sweep import ComplexityRow, SweepRow, complexity_to_csv, fmt17, sweep_to_csv

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_ALLOCATION = 2


class CLIError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    # usage problems are input errors, not allocation errors
    def error(self, message):
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


async def _post(server: str | None, path: str, payload: dict) -> dict:
    if server:
        client = httpx.AsyncClient(base_url=server, timeout=300.0)
    else:
        transport = httpx.ASGITransport(app=create_app())
        client = httpx.AsyncClient(transport=transport, base_url="http://rbfair.local", timeout=300.0)
    async with client:
        resp = await client.post(path, json=payload)
    if resp.status_code == 200:
        return resp.json()
    try:
        detail = resp.json().get("detail", resp.text)
    except ValueError:
        detail = resp.text
    code = EXIT_ALLOCATION if resp.status_code == 409 else EXIT_INPUT
    raise CLIError(code, f"{path} failed ({resp.status_code}): {detail}")


def _scenario_payload(path: str) -> dict:
    scenario = load_scenario(path)
    return ScenarioSpec.from_scenario(scenario).model_dump(mode="json", exclude_none=True)


def _write(out: str, text: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _parse_ue_range(raw: str) -> tuple[int, int]:
    try:
        if ".." in raw:
            lo, hi = raw.split("..", 1)
            return int(lo), int(hi)
        return int(raw), int(raw)
    except ValueError:
        raise CLIError(EXIT_INPUT, f"--ues expects N or A..B, got {raw!r}") from None


def _candidate_csv(candidates: list[dict], extra: dict | None = None) -> str:
    m = len(candidates[0]["rbs"]) if candidates else 0
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = [f"rb_{i}" for i in range(1, m + 1)] + ["total", "log_utility", "maximizer"]
    header += list(extra) if extra else []
    writer.writerow(header)
    for cand in candidates:
        row = [str(q) for q in cand["rbs"]]
        row += [str(cand["total"]), fmt17(cand["log_utility"]),
                "true" if cand["maximizer"] else "false"]
        row += [str(v) for v in extra.values()] if extra else []
        writer.writerow(row)
    return buf.getvalue()


def _cmd_allocate(args) -> int:
    payload = {
        "scenario": _scenario_payload(args.scenario),
        "pool": args.pool,
        "tie_tol": args.tie_tol,
    }
    if args.rate is not None:
        payload["bandwidth"] = args.rate
    data = asyncio.run(_post(args.server, "/allocate", payload))
    cont = data["continuous"]
    print(
        f"bandwidth={fmt17(data['bandwidth'])} price={fmt17(cont['price'])} "
        f"iterations={cont['iterations']} converged={str(cont['converged']).lower()} "
        f"pool={len(data['candidates'])}",
        file=sys.stderr,
    )
    _write(args.out, _candidate_csv(data["candidates"]))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    payload = {
        "scenario": _scenario_payload(args.scenario),
        "start": args.start,
        "stop": args.stop,
        "step": args.step,
    }
    data = asyncio.run(_post(args.server, "/sweep", payload))
    rows = [
        SweepRow(
            bandwidth=r["bandwidth"],
            rates=tuple(r["rates"]),
            bids=tuple(r["bids"]),
            rbs=tuple(r["rbs"]) if r["rbs"] is not None else None,
            converged=r["converged"],
            wall_time_s=r["wall_time_s"],
            error=r["error"],
        )
        for r in data["rows"]
    ]
    _write(args.out, sweep_to_csv(rows, include_timing=not args.no_timing))
    failed = [r.bandwidth for r in rows if r.error]
    if failed:
        print(f"allocation failed at R={failed}", file=sys.stderr)
        return EXIT_ALLOCATION
    return EXIT_OK


def _cmd_complexity(args) -> int:
    lo, hi = _parse_ue_range(args.ues)
    payload = {"ues_start": lo, "ues_stop": hi, "candidates_per_ue": args.candidates}
    data = asyncio.run(_post(args.server, "/complexity", payload))
    rows = [
        ComplexityRow(
            ues=r["ues"],
            full=int(r["full"]),
            boundary=int(r["boundary"]),
            log10_full=r["log10_full"],
            log10_boundary=r["log10_boundary"],
        )
        for r in data["rows"]
    ]
    _write(args.out, complexity_to_csv(rows))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    payload = {"scenario": _scenario_payload(args.scenario), "grid_bound": args.grid}
    if args.rate is not None:
        payload["bandwidth"] = args.rate
    data = asyncio.run(_post(args.server, "/oracle", payload))
    extra = {"evaluated_count": data["evaluated_count"], "grid_bound": data["grid_bound"]}
    _write(args.out, _candidate_csv([data["best"]], extra=extra))
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("rbfair.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rbfair", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--server", default=None, help="service URL; default runs in-process")
        p.add_argument("--out", default="-", help="output CSV path, '-' for stdout")

    p = sub.add_parser("allocate", help="allocate resource blocks at one bandwidth")
    p.add_argument("--scenario", required=True)
    p.add_argument("--rate", type=float, default=None, help="override the scenario bandwidth")
    p.add_argument("--pool", choices=["all", "max"], default="all")
    p.add_argument("--tie-tol", type=float, default=1e-9, dest="tie_tol")
    common(p)
    p.set_defaults(func=_cmd_allocate)

    p = sub.add_parser("sweep", help="allocate across a bandwidth range")
    p.add_argument("--scenario", required=True)
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--step", type=float, default=1.0)
    p.add_argument("--no-timing", action="store_true",
                   help="zero the wall-time column for reproducible output")
    common(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("complexity", help="search-space size table")
    p.add_argument("--ues", required=True, help="UE count or range, e.g. 1..100")
    p.add_argument("--candidates", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_complexity)

    p = sub.add_parser("oracle", help="brute-force ground truth for small instances")
    p.add_argument("--scenario", required=True)
    p.add_argument("--rate", type=float, default=None)
    p.add_argument("--grid", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ScenarioError as exc:
        print(f"rbfair: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CLIError as exc:
        print(f"rbfair: {exc}", file=sys.stderr)
        return exc.code
    except httpx.HTTPError as exc:
        print(f"rbfair: transport error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
