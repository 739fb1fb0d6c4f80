"""Command-line reports: the congruent table, density sweeps, optima and constraint checks.

Data goes to stdout (CSV or JSON), diagnostics to stderr.  Validation
failures are data and still exit with status 0.
"""
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass

import click

from . import packing

DEFAULT_P_LIST = "7,8,9,20,50,100"


@dataclass
class ReportRow:
    p: int
    h: float
    vol_orthoscheme: float
    vol_lens: float
    delta: float


@dataclass
class SweepPoint:
    x: float
    delta: float


def _parse_p_list(ctx, param, value):
    try:
        ps = [int(tok) for tok in value.split(",") if tok.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")
    bad = [p for p in ps if p < 7]
    if bad:
        raise click.BadParameter(
            f"p = {bad[0]} does not give a tiling: the truncated tetrahedra "
            "tile hyperbolic space only for integer p >= 7"
        )
    if not ps:
        raise click.BadParameter("empty p list")
    return ps


def _model(dim, p, tol):
    if dim == 3:
        if p is None:
            p = 7
        if p < 7:
            raise click.BadParameter(f"p = {p}: need integer p >= 7 for a tiling", param_hint="--p")
        return packing.build_3d(p)
    if p is not None:
        raise click.BadParameter("--p applies only to --dim 3", param_hint="--p")
    return packing.build_5d(tol)


def _write_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    click.echo(buf.getvalue(), nl=False)


def _write_json(obj):
    click.echo(json.dumps(obj, indent=2))


fmt_option = click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
                          show_default=True)
dim_option = click.option("--dim", type=click.Choice(["3", "5"]), default="3", show_default=True)
p_option = click.option("--p", "p", type=int, default=None, help="Tiling parameter (3D only, default 7).")
tol_option = click.option("--tol", type=float, default=1e-11, show_default=True,
                          help="Quadrature tolerance (5D) / optimizer x tolerance.")


@click.group()
def main():
    """Hyperball packing densities in truncated regular simplex tilings."""


@main.command()
@click.option("--p", "p_list", default=DEFAULT_P_LIST, show_default=True, callback=_parse_p_list,
              help="Comma-separated integer parameters p >= 7.")
@fmt_option
def table1(p_list, fmt):
    """Per-orthoscheme data of the congruent packings of {p,3,3}."""
    rows = [ReportRow(*packing.table1_row(p)) for p in p_list]
    if fmt == "json":
        _write_json([asdict(r) for r in rows])
    else:
        _write_csv(["p", "h", "vol_orthoscheme", "vol_lens", "delta"],
                   [[r.p] + [f"{v:.5f}" for v in (r.h, r.vol_orthoscheme, r.vol_lens, r.delta)]
                    for r in rows])


@main.command()
@dim_option
@p_option
@click.option("--points", type=click.IntRange(min=2), default=101, show_default=True)
@fmt_option
@tol_option
def sweep(dim, p, points, fmt, tol):
    """Density as a function of the expansion parameter x on [0, x_max]."""
    model = _model(int(dim), p, tol)
    pts = [SweepPoint(x, d) for x, d in packing.density_sweep(model, points)]
    if fmt == "json":
        _write_json({
            "dimension": model.dimension,
            "p": model.p,
            "x_max": model.x_max,
            "local_only": not model.realizable,
            "points": [asdict(s) for s in pts],
        })
    else:
        _write_csv(["x", "delta"], [[f"{s.x:.8f}", f"{s.delta:.8f}"] for s in pts])


@main.command()
@click.option("--mode", type=click.Choice(["over_x", "over_p"]), default="over_x", show_default=True)
@dim_option
@p_option
@tol_option
def optimize(mode, dim, p, tol):
    """Maximise the density over x (fixed tile) or over real p (congruent, 3D)."""
    if mode == "over_p":
        if dim != "3":
            raise click.BadParameter("over_p is defined for --dim 3 only", param_hint="--dim")
        res = packing.maximize_over_p(xtol=max(tol, 1e-12))
        out = {"mode": mode, "dimension": 3, "p": res.argmax, "delta": res.value}
    else:
        model = _model(int(dim), p, 1e-11)
        res = packing.maximize_over_x(model, xtol=max(tol, 1e-12))
        out = {"mode": mode, "dimension": model.dimension, "p": model.p,
               "x": res.argmax, "delta": res.value}
    out.update(res.to_dict())
    _write_json(out)


@main.command()
@dim_option
@p_option
@click.option("--x", "x", type=float, default=0.0, show_default=True)
@tol_option
def validate(dim, p, x, tol):
    """Check the packing requirements for the expansion parameter x."""
    model = _model(int(dim), p, tol)
    xm = model.x_max
    heights = packing.HeightAssignment.from_expansion(model, x)
    report = packing.validate(model, heights)
    in_range = -1e-12 <= x <= xm + 1e-12
    out = {
        "dimension": model.dimension,
        "p": model.p,
        "x": x,
        "x_max": xm,
        "heights": list(heights.heights),
        "x_in_range": in_range,
        "density": packing.density(model, x, with_report=False).delta if in_range else None,
    }
    out.update(report.to_dict())
    out["ok"] = report.ok and in_range
    if not out["ok"]:
        click.echo(f"constraint violations for x = {x}", err=True)
    _write_json(out)


if __name__ == "__main__":
    sys.exit(main())
