"""Command-line interface.

Every command writes one JSON report with a fixed key order. The input digest
is the SHA-256 of the canonical edge-list text (``format_edgelist``), and any
randomness comes from a PCG64 generator whose seed is echoed in the report.
Wall-clock timings are included only with ``--timing`` (always for ``bench``),
so reports are byte-identical across runs otherwise.

Exit codes: 0 ok, 2 parse error, 3 domain error, 4 capacity exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Optional, Sequence

from . import __version__
from .bounds import BOUND_KINDS, BoundFn, asym_bound, g_eval, is_parabolic
from .coloring import color, color_for_betti
from .exceptions import CapacityError, ContractError, DomainError, GraphFormatError
from .family import FREENESS_LIMIT, FamilyIndex, family_witness
from .generators import RNG_NAME, gnp_random_graph, make_rng
from .graph import Graph, exact_chromatic_number, exact_clique_number, induced
from .homology import HOMOLOGY_LIMIT, BettiIndex, HomologyField, betti, betti_vanishes
from .io import format_edgelist, read_graph

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_CAPACITY = 0, 2, 3, 4

_ALIASES = {"closed": "closed_form", "closed-form": "closed_form", "pk2-transform": "pk2_transform"}


def graph_digest(g: Graph) -> str:
    return hashlib.sha256(format_edgelist(g).encode("ascii")).hexdigest()


def _input_block(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "sha256": graph_digest(g)}


def _independent_proper(g: Graph, colors: Sequence[int]) -> bool:
    # deliberately naive: edge list against the colour array
    return len(colors) == g.n and all(c >= 0 for c in colors) and all(
        colors[u] != colors[v] for u, v in g.edges()
    )


def _report(command: str, args: dict, body: dict, timing_ms: Optional[float] = None) -> dict:
    out = {"tool": "chibound", "version": __version__, "command": command, "args": args}
    out.update(body)
    if timing_ms is not None:
        out["timing_ms"] = round(timing_ms, 3)
    return out


def _index_args(ns) -> dict:
    if (ns.n is None) != (ns.d is None) or (ns.i is None) != (ns.j is None):
        raise DomainError("give both --n and --d, or both --i and --j")
    if (ns.n is None) == (ns.i is None):
        raise DomainError("give exactly one of (--n, --d) or (--i, --j)")
    return {"n": ns.n, "d": ns.d} if ns.n is not None else {"i": ns.i, "j": ns.j}


# commands -------------------------------------------------------------------


def cmd_color(ns) -> dict:
    index = _index_args(ns)
    g = read_graph(ns.input, ns.format)
    start = time.perf_counter()
    if "n" in index:
        res = color(g, FamilyIndex(ns.n, ns.d), omega=ns.omega, check_free=ns.check_free)
    else:
        res = color_for_betti(g, BettiIndex(ns.i, ns.j), omega=ns.omega, field=HomologyField.parse(ns.field))
    elapsed = (time.perf_counter() - start) * 1000
    if not _independent_proper(g, res.colors):
        raise AssertionError("engine produced an improper colouring")
    body = {
        "input": _input_block(g),
        "result": {
            "family": list(res.family),
            "colors_used": res.colors_used,
            "omega": res.omega,
            "bound": res.certified_bound,
            "bound_certified": res.bound_certified,
            "clique_trace": list(res.clique_trace),
            "proper": True,
            "coloring": list(res.colors),
        },
    }
    return _report("color", {**index, "format": ns.format, "field": ns.field}, body, elapsed if ns.timing else None)


def cmd_betti(ns) -> dict:
    idx = BettiIndex(ns.i, ns.j)
    field = HomologyField.parse(ns.field)
    g = read_graph(ns.input, ns.format)
    start = time.perf_counter()
    if ns.vanishes:
        v = betti_vanishes(g, idx, field, jobs=ns.jobs)
        result = {"vanishes": v.vanishes, "witness": None if v.witness is None else list(v.witness)}
    else:
        result = {"value": betti(g, idx, field, jobs=ns.jobs)}
    elapsed = (time.perf_counter() - start) * 1000
    args = {"i": ns.i, "j": ns.j, "field": str(field), "vanishes": ns.vanishes, "format": ns.format}
    return _report("betti", args, {"input": _input_block(g), "result": result}, elapsed if ns.timing else None)


def _parse_bound(name: str, params: list[int]) -> tuple[BoundFn, int]:
    kind = _ALIASES.get(name, name)
    if kind not in BOUND_KINDS:
        raise DomainError(f"unknown bound {name!r}; choose from {', '.join(BOUND_KINDS)}")
    if not params:
        raise DomainError("the last parameter must be omega")
    *head, omega = params
    if kind == "pk2_transform":
        raise DomainError("pk2_transform takes a function argument; use the library API")
    return BoundFn(kind, tuple(head)), omega


def table_grid(max_omega: int = 6) -> list[dict]:
    """Values of ``g_{n,d}`` on the small-index grid ``n = 2d+2 .. d+7``."""
    rows = []
    for d in range(6):
        for n in range(2 * d + 2, d + 8):
            rows.append({"n": n, "d": d, "values": [g_eval(n, d, w) for w in range(1, max_omega + 1)]})
    return rows


def cmd_bound(ns) -> dict:
    if ns.table:
        if ns.max_omega < 1:
            raise DomainError("--max-omega must be >= 1")
        body = {"result": {"omega": list(range(1, ns.max_omega + 1)), "table": table_grid(ns.max_omega)}}
        return _report("bound", {"table": True, "max_omega": ns.max_omega}, body)
    if ns.name is None:
        raise DomainError("give a bound name or --table")
    fn, omega = _parse_bound(ns.name, ns.params)
    value = fn(omega)
    args = {"name": fn.kind, "params": list(fn.params), "omega": omega}
    return _report("bound", args, {"result": {"value": value}})


def cmd_check_free(ns) -> dict:
    idx = FamilyIndex(ns.n, ns.d)
    g = read_graph(ns.input, ns.format)
    if g.n > FREENESS_LIMIT:
        raise CapacityError(f"check-free: n={g.n} exceeds limit {FREENESS_LIMIT}")
    witness = family_witness(g, idx)
    result = {"free": witness is None, "witness": None, "witness_edges": None}
    if witness is not None:
        result["witness"] = list(witness)
        result["witness_edges"] = [[witness[u], witness[v]] for u, v in induced(g, witness).edges()]
    return _report("check-free", {"n": ns.n, "d": ns.d, "format": ns.format}, {"input": _input_block(g), "result": result})


def spotcheck(i: int, j: int, count: int, n: int, p: float, seed: int, field="q") -> dict:
    """Sample ``G(n, p)`` graphs and compare ``chi`` with the asymptotic bound
    on those whose Betti number vanishes."""
    if not is_parabolic(i, j) or j - i < 3:
        raise DomainError(f"(i, j) = ({i}, {j}) must be parabolic with j - i >= 3")
    if count < 0 or not 0.0 <= p <= 1.0 or n < 0:
        raise DomainError("need count >= 0, n >= 0 and 0 <= p <= 1")
    if n > HOMOLOGY_LIMIT:
        raise CapacityError(f"spotcheck: n={n} exceeds limit {HOMOLOGY_LIMIT}")
    rng = make_rng(seed)
    vanishing = within = 0
    exceed: list[int] = []
    for k in range(count):
        g = gnp_random_graph(n, p, rng)
        if not betti_vanishes(g, (i, j), field):
            continue
        vanishing += 1
        omega = exact_clique_number(g)
        if omega == 0 or exact_chromatic_number(g) <= asym_bound(i, j, omega):
            within += 1
        else:
            exceed.append(k)
    return {
        "rng": RNG_NAME,
        "seed": seed,
        "samples": count,
        "vanishing": vanishing,
        "within_bound": within,
        "fraction": None if vanishing == 0 else round(within / vanishing, 6),
        "exceeding_samples": exceed,
    }


def cmd_spotcheck(ns) -> dict:
    start = time.perf_counter()
    result = spotcheck(ns.i, ns.j, ns.count, ns.n, ns.p, ns.seed, HomologyField.parse(ns.field))
    elapsed = (time.perf_counter() - start) * 1000
    args = {"i": ns.i, "j": ns.j, "count": ns.count, "n": ns.n, "p": ns.p, "seed": ns.seed, "field": ns.field}
    return _report("spotcheck", args, {"result": result}, elapsed if ns.timing else None)


def bench(sizes: Sequence[int], density: float, seed: int, n: int = 6, d: int = 2) -> list[dict]:
    idx = FamilyIndex(n, d)
    rows = []
    for size in sizes:
        g = gnp_random_graph(size, density, seed)
        start = time.perf_counter()
        res = color(g, idx, omega=0)  # omega=0 skips the exact clique oracle
        millis = (time.perf_counter() - start) * 1000
        rows.append({
            "n": size,
            "m": g.m,
            "omega_found": res.clique_trace[0] if res.clique_trace else 0,
            "colors_used": res.colors_used,
            "millis": round(millis, 3),
        })
    return rows


def cmd_bench(ns) -> dict:
    if any(s < 0 for s in ns.sizes) or not 0.0 <= ns.density <= 1.0:
        raise DomainError("sizes must be non-negative and density in [0, 1]")
    rows = bench(ns.sizes, ns.density, ns.seed, ns.family_n, ns.family_d)
    args = {"sizes": ns.sizes, "density": ns.density, "seed": ns.seed, "n": ns.family_n, "d": ns.family_d}
    return _report("bench", args, {"rng": RNG_NAME, "result": rows})


# argument parsing -----------------------------------------------------------


def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="graph file (DIMACS or edge list)")
    p.add_argument("--format", choices=("dimacs", "edges"), default=None, help="input format (default: detect)")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    p.add_argument("--timing", action="store_true", help="include wall-clock milliseconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chibound", description="Colour graphs within chi-bounds and compute edge-ideal Betti numbers.")
    parser.add_argument("--version", action="version", version=f"chibound {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="colour a graph for a family or Betti index")
    _graph_args(p)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--omega", type=int, default=None, help="clique number to certify against")
    p.add_argument("--check-free", action="store_true", help="verify freeness (small graphs)")
    p.add_argument("--field", default="q", help="q, f2 or fp:<p>")
    _common(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("betti", help="Betti number of the edge ideal")
    _graph_args(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--field", default="q")
    p.add_argument("--vanishes", action="store_true", help="only decide vanishing; report a witness")
    p.add_argument("--jobs", type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("bound", help="evaluate a bounding function")
    p.add_argument("name", nargs="?")
    p.add_argument("params", nargs="*", type=int, help="parameters, omega last")
    p.add_argument("--table", action="store_true", help="emit the g_{n,d} grid")
    p.add_argument("--max-omega", type=int, default=6)
    _common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("check-free", help="test B(n,d)-freeness")
    _graph_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_check_free)

    p = sub.add_parser("spotcheck", help="Monte Carlo comparison with the asymptotic bound")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", default="q")
    _common(p)
    p.set_defaults(func=cmd_spotcheck)

    p = sub.add_parser("bench", help="time the colouring engine on random graphs")
    p.add_argument("--sizes", type=int, nargs="*", default=[250, 500, 1000, 2000])
    p.add_argument("--density", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", dest="family_n", type=int, default=6)
    p.add_argument("--d", dest="family_d", type=int, default=2)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_bench, timing=True)
    return parser


def _render(value, indent: int) -> str:
    pad = "  " * (indent + 1)
    if isinstance(value, dict) and value:
        items = [f"{pad}{json.dumps(k)}: {_render(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        items = [pad + _render(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    # scalars and flat arrays stay on one line
    return json.dumps(value, ensure_ascii=True, separators=(", ", ": "))


def render(report: dict) -> str:
    """Serialise a report: valid JSON, fixed key order, flat arrays inline."""
    return _render(report, 0) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        report = ns.func(ns)
    except GraphFormatError as exc:
        print(f"chibound: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"chibound: cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"chibound: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (DomainError, ContractError) as exc:
        print(f"chibound: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = render(report)
    if ns.output:
        with open(ns.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK
