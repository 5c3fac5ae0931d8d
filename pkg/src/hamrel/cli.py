"""Command-line front end.

Subcommands: exact, approximate, bounds, compare, error-bound, curves.
Errors print one stable diagnostic line ``error: <code>: <detail>`` on
stderr and exit nonzero; identical configurations produce byte-identical
outputs.  Set HAMREL_FIXTURE_DIR to resolve bare input file names against a
fixture directory.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from .bounds import BoundsPair, bound_polynomials, stanley_bounds
from .errors import (
    DomainError,
    EnumerationCapError,
    GraphFormatError,
    HamrelError,
    InconsistentAnchorsError,
    InvalidVectorError,
)
from .oracle import (
    EXHAUSTIVE_EDGE_CAP,
    HammockVariant,
    exact_coeffs,
    make_hammock,
    parse_graph,
)
from .polynomials import (
    ApproxCoeffVector,
    ExactCoeffVector,
    HammockDims,
    binomial_row,
    eval_nform,
    vector_from_json,
    vector_to_doc,
)
from .profiles import coefficient_profile
from .spline import (
    KnownAnchors,
    anchors_from_exact,
    approximate,
    error_bound,
    model_to_doc,
)

FLOAT_FMT = "{:.17g}"


class _BoundViolation(HamrelError):
    code = "bound-violated"


def _fmt(x) -> str:
    return FLOAT_FMT.format(float(x))


def _resolve_input(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    fixture_dir = os.environ.get("HAMREL_FIXTURE_DIR")
    if fixture_dir:
        candidate = Path(fixture_dir) / path
        if candidate.exists():
            return candidate
    return p


def _write_text(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _json_dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _csv_lines(header: list[str], rows: list[list[str]]) -> str:
    out = [",".join(header)]
    out.extend(",".join(row) for row in rows)
    return "\n".join(out) + "\n"


def _variant(name: str) -> HammockVariant:
    return HammockVariant(name)


def _dims(args) -> HammockDims:
    if args.l is None or args.w is None:
        raise DomainError("both --l and --w are required")
    return HammockDims(args.l, args.w)


def _exact_vector(args, dims: HammockDims) -> ExactCoeffVector:
    if getattr(args, "exact_file", None):
        path = _resolve_input(args.exact_file)
        try:
            vec = vector_from_json(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise InvalidVectorError(f"cannot read exact-coefficient file {path}: {exc}") from exc
        if not isinstance(vec, ExactCoeffVector) or vec.n != dims.n:
            raise InconsistentAnchorsError(
                f"exact-coefficient file {path} does not hold an exact vector of n={dims.n}"
            )
        return ExactCoeffVector(vec.n, vec.coeffs, dims)
    return exact_coeffs(make_hammock(dims, _variant(args.variant)), dims)


def _load_anchors_file(path_str: str) -> dict:
    path = _resolve_input(path_str)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise InconsistentAnchorsError(f"cannot read anchors file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InconsistentAnchorsError(f"malformed anchors file {path}: {exc}") from exc
    return doc


def _spline_anchors(args, dims: HammockDims) -> KnownAnchors:
    s, t = args.s, args.t
    if args.anchors is not None:
        n_l, n_lt, nd_w, nd_ws = args.anchors
        return KnownAnchors(dims, t=t, s=s, n_l=n_l, n_lt=n_lt, nd_w=nd_w, nd_ws=nd_ws)
    if args.anchors_file is not None:
        doc = _load_anchors_file(args.anchors_file)
        try:
            file_dims = HammockDims(int(doc["l"]), int(doc["w"]))
            anchors = KnownAnchors(
                file_dims, t=int(doc["t"]), s=int(doc["s"]),
                n_l=int(doc["n_l"]), n_lt=int(doc["n_lt"]),
                nd_w=int(doc["nd_w"]), nd_ws=int(doc["nd_ws"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InconsistentAnchorsError(f"anchors file missing field: {exc}") from exc
        if file_dims != dims or anchors.s != s or anchors.t != t:
            raise InconsistentAnchorsError(
                f"anchors file is for l={file_dims.l} w={file_dims.w} "
                f"s={anchors.s} t={anchors.t}, command asked for "
                f"l={dims.l} w={dims.w} s={s} t={t}"
            )
        return anchors
    if args.auto_anchors:
        exact = exact_coeffs(make_hammock(dims, _variant(args.variant)), dims)
        return anchors_from_exact(exact, dims, s=s, t=t)
    raise InconsistentAnchorsError(
        "anchors required: pass --auto-anchors, --anchors-file, or --anchors"
    )


def _run_fit(args, anchors: KnownAnchors):
    return approximate(anchors, mode=args.mode, x1=args.x1, x2=args.x2)


def _print_table(header: list[str], rows: list[list[str]]) -> None:
    widths = [max(len(header[i]), max((len(r[i]) for r in rows), default=0))
              for i in range(len(header))]
    print("  ".join(h.rjust(widths[i]) for i, h in enumerate(header)))
    for row in rows:
        print("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))


# -- subcommands -------------------------------------------------------------


def cmd_exact(args) -> int:
    if args.graph:
        path = _resolve_input(args.graph)
        try:
            graph = parse_graph(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise GraphFormatError(f"cannot read graph file {path}: {exc}") from exc
        vec = exact_coeffs(graph)
        print(f"graph {path}: {graph.num_vertices} vertices, {graph.n} edges")
    else:
        dims = _dims(args)
        if dims.n > EXHAUSTIVE_EDGE_CAP:
            raise EnumerationCapError(
                f"n={dims.n} exceeds the exhaustive cap of {EXHAUSTIVE_EDGE_CAP}; "
                "supply an exact-coefficient fixture file instead"
            )
        vec = exact_coeffs(make_hammock(dims, _variant(args.variant)), dims)
        print(f"hammock l={dims.l} w={dims.w} n={dims.n} (variant {args.variant})")
    row = binomial_row(vec.n)
    _print_table(
        ["k", "N_k", "C(n,k)"],
        [[str(k), str(vec.coeffs[k]), str(row[k])] for k in range(vec.n + 1)],
    )
    if args.out:
        if args.format == "csv":
            lines = _csv_lines(
                ["k", "N_k", "C_n_k"],
                [[str(k), str(vec.coeffs[k]), str(row[k])] for k in range(vec.n + 1)],
            )
            _write_text(args.out, lines)
        else:
            _write_text(args.out, _json_dump(vector_to_doc(vec)))
    return 0


def cmd_approximate(args) -> int:
    dims = _dims(args)
    anchors = _spline_anchors(args, dims)
    flw, fwl, model = _run_fit(args, anchors)
    print(f"fit l={dims.l} w={dims.w} n={dims.n} mode={model.mode} s={anchors.s} t={anchors.t}")
    print(f"controls a={_fmt(model.a)} b={_fmt(model.b)} c={_fmt(model.c)} d={_fmt(model.d)}")
    rounded_lw, rounded_wl = flw.rounded(), fwl.rounded()
    _print_table(
        ["k", "f(k)", "round", "f_dual(k)", "round"],
        [
            [str(k), _fmt(flw.coeffs[k]), str(rounded_lw[k]),
             _fmt(fwl.coeffs[k]), str(rounded_wl[k])]
            for k in range(dims.n + 1)
        ],
    )
    if args.out:
        doc = {
            "f_lw": vector_to_doc(flw),
            "f_wl": vector_to_doc(fwl),
            "model": model_to_doc(model),
        }
        _write_text(args.out, _json_dump(doc))
    return 0


def _bound_anchors(args, dims: HammockDims) -> tuple[int, int, int, int]:
    n, w = dims.n, dims.w
    if args.anchors is not None:
        return tuple(args.anchors)
    if args.anchors_file is not None:
        doc = _load_anchors_file(args.anchors_file)
        try:
            s, t = int(doc["s"]), int(doc["t"])
            if (s, t) != (1, 1):
                raise InconsistentAnchorsError(
                    f"bounds need s=t=1 anchors, file has s={s} t={t}"
                )
            n_l, n_l1 = int(doc["n_l"]), int(doc["n_lt"])
            n_nw1 = math.comb(n, w + 1) - int(doc["nd_ws"])
            n_nw = math.comb(n, w) - int(doc["nd_w"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InconsistentAnchorsError(f"anchors file missing field: {exc}") from exc
        return n_l, n_l1, n_nw1, n_nw
    if args.auto_anchors:
        vec = exact_coeffs(make_hammock(dims, _variant(args.variant)), dims)
        c = vec.coeffs
        return c[dims.l], c[dims.l + 1], c[n - w - 1], c[n - w]
    raise InconsistentAnchorsError(
        "anchors required: pass --auto-anchors, --anchors-file, or --anchors"
    )


def cmd_bounds(args) -> int:
    dims = _dims(args)
    n_l, n_l1, n_nw1, n_nw = _bound_anchors(args, dims)
    pair = stanley_bounds(dims, n_l, n_l1, n_nw1, n_nw)
    print(f"bounds l={dims.l} w={dims.w} n={dims.n}")
    _print_table(
        ["k", "LB", "UB"],
        [[str(k), str(pair.lb[k]), str(pair.ub[k])] for k in range(dims.n + 1)],
    )
    if args.out:
        if args.format == "csv":
            lines = _csv_lines(
                ["k", "lb", "ub"],
                [[str(k), str(pair.lb[k]), str(pair.ub[k])] for k in range(dims.n + 1)],
            )
            _write_text(args.out, lines)
        else:
            doc = {
                "lb": vector_to_doc(pair.lb_vector()),
                "ub": vector_to_doc(pair.ub_vector()),
            }
            _write_text(args.out, _json_dump(doc))
    return 0


def cmd_error_bound(args) -> int:
    dims = _dims(args)
    eb = error_bound(dims)
    print(f"error bound l={dims.l} w={dims.w} n={dims.n}")
    print(f"per-network bound: {_fmt(eb.per_network)}")
    print(f"cumulative bound:  {_fmt(eb.cumulative)}")
    print(f"M: {eb.big_m}")
    if args.out:
        doc = {
            "per_network": repr(eb.per_network),
            "cumulative": repr(eb.cumulative),
            "big_m": str(eb.big_m),
        }
        _write_text(args.out, _json_dump(doc))
    return 0


def _grid(count: int) -> list[float]:
    if count < 2:
        raise DomainError(f"grid needs at least 2 points, got {count}")
    return [i / (count - 1) for i in range(count)]


def _curve_rows(exact: ExactCoeffVector, flw: ApproxCoeffVector,
                fwl: ApproxCoeffVector, pair: BoundsPair,
                grid: list[float]) -> list[dict]:
    lb_curve, ub_curve = bound_polynomials(pair, grid)
    rows = []
    for i, p in enumerate(grid):
        rows.append({
            "p": p,
            "h_exact": eval_nform(exact, p),
            "h_approx": eval_nform(flw, p),
            "h_dual_approx": eval_nform(fwl, p),
            "lb": lb_curve[i],
            "ub": ub_curve[i],
        })
    return rows


CURVE_COLUMNS = ["p", "h_exact", "h_approx", "h_dual_approx", "lb", "ub"]


def _curves_csv(rows: list[dict]) -> str:
    return _csv_lines(
        CURVE_COLUMNS,
        [[_fmt(r[col]) for col in CURVE_COLUMNS] for r in rows],
    )


def _plot_path(args) -> str | None:
    if args.plot is None:
        return None
    if args.plot != "AUTO":
        return args.plot
    if not args.out:
        raise DomainError("--plot without a path needs -o to derive the figure name")
    return str(Path(args.out).with_suffix(".png"))


def _compare_pipeline(args):
    dims = _dims(args)
    exact = _exact_vector(args, dims)
    if args.anchors is not None or args.anchors_file is not None:
        anchors = _spline_anchors(args, dims)
    else:
        anchors = anchors_from_exact(exact, dims, s=args.s, t=args.t)
    flw, fwl, model = _run_fit(args, anchors)
    c = exact.coeffs
    pair = stanley_bounds(
        dims, c[dims.l], c[dims.l + 1], c[dims.n - dims.w - 1], c[dims.n - dims.w]
    )
    return dims, exact, anchors, flw, fwl, model, pair


def cmd_compare(args) -> int:
    dims, exact, anchors, flw, fwl, model, pair = _compare_pipeline(args)
    grid = _grid(args.grid)
    rows = _curve_rows(exact, flw, fwl, pair, grid)
    rounded = flw.rounded()
    print(f"compare l={dims.l} w={dims.w} n={dims.n} mode={model.mode} "
          f"s={anchors.s} t={anchors.t}")
    _print_table(
        ["k", "LB", "f(k)", "N_k", "UB"],
        [
            [str(k), str(pair.lb[k]), str(rounded[k]), str(exact.coeffs[k]),
             str(pair.ub[k])]
            for k in range(dims.n + 1)
        ],
    )
    max_err = max(abs(r["h_exact"] - r["h_approx"]) for r in rows)
    eb = error_bound(dims)
    dual_defect = max(
        abs(1.0 - eval_nform(flw, p) - eval_nform(fwl, 1.0 - p)) for p in grid
    )
    print(f"max |h - h_fit| on {len(grid)}-point grid: {_fmt(max_err)}")
    print(f"per-network bound: {_fmt(eb.per_network)}")
    print(f"max |1 - h_fit(p) - h_dual_fit(1-p)|: {_fmt(dual_defect)}")
    print(f"cumulative bound: {_fmt(eb.cumulative)}")
    within = max_err <= eb.per_network and dual_defect <= eb.cumulative
    print(f"within bounds: {'yes' if within else 'NO'}")
    if args.out:
        _write_text(args.out, _curves_csv(rows))
    plot_path = _plot_path(args)
    if plot_path:
        from . import plotting

        plotting.render_curves(
            rows, plot_path, f"hammock l={dims.l} w={dims.w}: reliability and bounds"
        )
        print(f"figure written to {plot_path}")
    if not within:
        raise _BoundViolation(
            f"grid deviation {max_err} or dual defect {dual_defect} exceeds the bound"
        )
    return 0


def cmd_curves(args) -> int:
    dims, exact, anchors, flw, fwl, model, pair = _compare_pipeline(args)
    if args.coeff_fn:
        profile = coefficient_profile(exact)
        if args.grid is None:
            xs = [float(k) for k in range(dims.n + 1)]
        else:
            if args.grid < 2:
                raise DomainError(f"grid needs at least 2 points, got {args.grid}")
            step = dims.n / (args.grid - 1)
            xs = [min(i * step, float(dims.n)) for i in range(args.grid)]
        rows = [
            {"x": x, "coeff_exact": profile(x), "coeff_fit": model.value(x)}
            for x in xs
        ]
        text = _csv_lines(
            ["x", "coeff_exact", "coeff_fit"],
            [[_fmt(r["x"]), _fmt(r["coeff_exact"]), _fmt(r["coeff_fit"])] for r in rows],
        )
        plot_rows = rows
        render = "coefficients"
    else:
        grid = _grid(args.grid if args.grid is not None else 1001)
        plot_rows = _curve_rows(exact, flw, fwl, pair, grid)
        text = _curves_csv(plot_rows)
        render = "curves"
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    plot_path = _plot_path(args)
    if plot_path:
        from . import plotting

        title = f"hammock l={dims.l} w={dims.w}"
        if render == "coefficients":
            plotting.render_coefficients(plot_rows, plot_path, f"{title}: coefficients")
        else:
            plotting.render_curves(plot_rows, plot_path, f"{title}: reliability and bounds")
        print(f"figure written to {plot_path}", file=sys.stderr)
    return 0


# -- argument parsing ---------------------------------------------------------


def _add_dims(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--l", type=int, help="devices per wire (length)")
    parser.add_argument("--w", type=int, help="number of wires (width)")


def _add_variant(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--variant", choices=[v.value for v in HammockVariant],
        default=HammockVariant.BRICK_A.value,
        help="brick parity used when generating hammocks (default: brickA)",
    )


def _add_fit_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--s", type=int, default=1, help="dual anchor offset (default 1)")
    parser.add_argument("--t", type=int, default=1, help="primal anchor offset (default 1)")
    parser.add_argument("--mode", choices=["unique", "general"], default="unique")
    parser.add_argument("--x1", type=int, help="first bridge abscissa (general mode)")
    parser.add_argument("--x2", type=int, help="second bridge abscissa (default n - x1)")


def _add_anchor_sources(parser: argparse.ArgumentParser, four: str) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--auto-anchors", action="store_true",
                       help="take anchors from the exhaustive oracle")
    group.add_argument("--anchors-file", help="JSON anchors file")
    group.add_argument("--anchors", type=int, nargs=4, metavar=tuple(four.split()),
                       help="explicit anchor coefficients")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamrel",
        description="Exact and approximate reliability polynomials of hammock networks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exhaustive coefficient counts")
    _add_dims(p)
    _add_variant(p)
    p.add_argument("--graph", help="two-terminal graph file instead of --l/--w")
    p.add_argument("-o", "--out", help="output file")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("approximate", help="fit both coefficient curves")
    _add_dims(p)
    _add_variant(p)
    _add_fit_flags(p)
    _add_anchor_sources(p, "N_L N_LT ND_W ND_WS")
    p.add_argument("-o", "--out", help="combined JSON output file")
    p.set_defaults(func=cmd_approximate)

    p = sub.add_parser("bounds", help="coefficient-wise bound vectors")
    _add_dims(p)
    _add_variant(p)
    _add_anchor_sources(p, "N_L N_L1 N_NW1 N_NW")
    p.add_argument("-o", "--out", help="output file")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("error-bound", help="worst-case deviation guarantee")
    _add_dims(p)
    p.add_argument("-o", "--out", help="JSON output file")
    p.set_defaults(func=cmd_error_bound)

    p = sub.add_parser("compare", help="exact vs fit vs bounds report")
    _add_dims(p)
    _add_variant(p)
    _add_fit_flags(p)
    _add_anchor_sources(p, "N_L N_LT ND_W ND_WS")
    p.add_argument("--exact-file", help="exact coefficient JSON instead of the oracle")
    p.add_argument("--grid", type=int, default=1001, help="p-grid size (default 1001)")
    p.add_argument("-o", "--out", help="curve CSV output file")
    p.add_argument("--plot", nargs="?", const="AUTO", metavar="PNG",
                   help="also render a figure (default: alongside -o)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("curves", help="plot-ready curve samples")
    _add_dims(p)
    _add_variant(p)
    _add_fit_flags(p)
    _add_anchor_sources(p, "N_L N_LT ND_W ND_WS")
    p.add_argument("--exact-file", help="exact coefficient JSON instead of the oracle")
    p.add_argument("--grid", type=int, help="grid size (default 1001; integers in --coeff-fn mode)")
    p.add_argument("--coeff-fn", action="store_true",
                   help="sample coefficient profiles instead of reliability curves")
    p.add_argument("-o", "--out", help="CSV output file (default stdout)")
    p.add_argument("--plot", nargs="?", const="AUTO", metavar="PNG",
                   help="also render a figure (default: alongside -o)")
    p.set_defaults(func=cmd_curves)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HamrelError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: io-error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
