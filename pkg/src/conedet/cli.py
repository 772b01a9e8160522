"""Command-line interface: batch evaluation of every determinant formula
with JSON results on stdout, CSV curve emission for the scans, and
structured error objects with distinct exit codes (usage 2, domain 3,
convergence 4).

Output is bit-identical across identical invocations; wall-clock timing is
therefore opt-in via --timing.
"""

from __future__ import annotations

import json
import sys
import time
from functools import wraps
from math import fsum, log

import click

from . import barnes, determinants, extremal, quadrature
from .cone import ConeOrder, SurfaceTopology, c_beta_parts, heat_trace_a0, zeta0_surface
from .errors import ConvergenceError, DomainError
from .special import RationalOrder

EXIT_DOMAIN = 3
EXIT_CONVERGENCE = 4


def _emit(payload: dict, meta: dict, timing: bool, started: float) -> None:
    if timing:
        meta = dict(meta, wall_time_s=time.perf_counter() - started)
    click.echo(json.dumps({"payload": payload, "meta": meta}))


def _fail(kind: str, message: str, parameter=None, code: int = EXIT_DOMAIN):
    click.echo(json.dumps({"error": {"kind": kind, "message": message, "parameter": parameter}}))
    sys.exit(code)


def handle_math_errors(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except DomainError as err:
            _fail("domain", str(err), code=EXIT_DOMAIN)
        except ConvergenceError as err:
            _fail("convergence", str(err), code=EXIT_CONVERGENCE)

    return wrapper


def _logdet_payload(result, breakdown: bool) -> dict:
    payload = {"value": result.total}
    if breakdown:
        payload["breakdown"] = result.parts
    return payload


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _flat_config(path: str) -> quadrature.FlatSphereConfig:
    raw = _load_json(path)
    points = [complex(re, im) for re, im in raw["points"]]
    return quadrature.FlatSphereConfig(points=points, orders=raw["orders"])


def _beta_value(text: str):
    """Parse a cone order, preserving integer-typed inputs exactly."""
    try:
        return int(text)
    except ValueError:
        return float(text)


@click.group()
def main():
    """Determinants of Laplacians on surfaces with conical singularities."""


@main.command("barnes-zprime0")
@click.option("--a", "a_real", type=float, default=None, help="Real first period.")
@click.option("--p", type=int, default=None, help="Numerator of a rational period.")
@click.option("--q", type=int, default=None, help="Denominator of a rational period.")
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("--cross-check", is_flag=True, help="Evaluate both routes and their difference.")
@click.option("--timing", is_flag=True)
@handle_math_errors
def barnes_zprime0_cmd(a_real, p, q, tol, cross_check, timing):
    """zeta'_B(0; a, 1, 1) for a = P/Q (closed form) or real --a (quadrature)."""
    started = time.perf_counter()
    if (p is None) != (q is None):
        raise click.UsageError("--p and --q must be given together")
    if (a_real is None) == (p is None):
        raise click.UsageError("give exactly one of --a or --p/--q")
    if p is not None:
        order = RationalOrder(p, q)
        value = barnes.zprime0_rational(order)
        payload = {"value": value}
        route = "rational"
        if cross_check:
            other = barnes.zprime0_integral(order.value, tol)
            payload["integral_route"] = other
            payload["difference"] = value - other
    else:
        payload = {"value": barnes.zprime0_integral(a_real, tol)}
        route = "integral"
        if cross_check:
            payload["taylor_route"] = (
                barnes.zprime0_taylor_near1(a_real) if abs(a_real - 1.0) <= 0.25 else None
            )
    _emit(payload, {"tol": tol, "route": route}, timing, started)


@main.command("cbeta")
@click.option("--beta", type=float, required=True)
@click.option("--p", type=int, default=None, help="Numerator of exact beta + 1.")
@click.option("--q", type=int, default=None, help="Denominator of exact beta + 1.")
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("--breakdown", is_flag=True)
@click.option("--timing", is_flag=True)
@handle_math_errors
def cbeta_cmd(beta, p, q, tol, breakdown, timing):
    """The per-singularity contribution C(beta)."""
    started = time.perf_counter()
    if (p is None) != (q is None):
        raise click.UsageError("--p and --q must be given together")
    if p is not None:
        order = ConeOrder.from_rational(RationalOrder(p, q))
        route = "rational"
    else:
        order = ConeOrder(beta=beta)
        route = "integral"
    parts = c_beta_parts(order, tol)
    payload = {"value": fsum(parts.values())}
    if breakdown:
        payload["breakdown"] = parts
    _emit(payload, {"tol": tol, "route": route}, timing, started)


@main.command("zeta0")
@click.option("--euler", type=int, required=True, help="Topological Euler characteristic.")
@click.option("--orders", type=str, default="", help="Comma-separated cone orders.")
@click.option("--boundary/--closed", default=False)
@click.option("--a0", "want_a0", is_flag=True, help="Also report the heat-trace constant.")
@click.option("--timing", is_flag=True)
@handle_math_errors
def zeta0_cmd(euler, orders, boundary, want_a0, timing):
    """zeta(0) of the surface Laplacian from topology and cone orders."""
    started = time.perf_counter()
    parsed = [float(tok) for tok in orders.split(",") if tok.strip()]
    topo = SurfaceTopology(euler_top=euler, orders=parsed, has_boundary=boundary)
    payload = {"value": zeta0_surface(topo)}
    if want_a0:
        payload["heat_trace_a0"] = heat_trace_a0(topo)
    _emit(payload, {"route": "closed-form"}, timing, started)


@main.group("det")
def det_group():
    """Log-determinant formulas."""


@det_group.command("spindle")
@click.option("--beta", type=str, required=True, help="Cone order; plain integers stay exact.")
@click.option("--mu", type=float, default=0.0, show_default=True)
@click.option("--k", "--K", "curvature", type=float, default=1.0, show_default=True)
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("--breakdown", is_flag=True)
@click.option("--timing", is_flag=True)
@handle_math_errors
def det_spindle(beta, mu, curvature, tol, breakdown, timing):
    """Constant-positive-curvature sphere with two equal cone points."""
    started = time.perf_counter()
    cfg = determinants.SpindleConfig(beta=_beta_value(beta), mu=mu, curvature=curvature)
    result = determinants.logdet_spindle(cfg, tol)
    _emit(_logdet_payload(result, breakdown), {"tol": tol, "route": "closed-form"}, timing, started)


@det_group.command("spindle-area4pi")
@click.option("--beta", type=str, required=True)
@click.option("--mu", type=float, default=0.0, show_default=True)
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("--breakdown", is_flag=True)
@click.option("--timing", is_flag=True)
@handle_math_errors
def det_spindle_area4pi(beta, mu, tol, breakdown, timing):
    """Fixed-area-4pi spindle determinant."""
    started = time.perf_counter()
    result = determinants.logdet_spindle_area4pi(_beta_value(beta), mu, tol)
    _emit(_logdet_payload(result, breakdown), {"tol": tol, "route": "closed-form"}, timing, started)


@det_group.command("flat-sphere")
@click.option("--input", "input_path", type=click.Path(exists=True), required=True)
@click.option("--tol", type=float, default=1e-8, show_default=True)
@click.option("--form", type=click.Choice(["cone", "as"]), default="cone", show_default=True,
              help="Which of the two equivalent singular-term assemblies to use.")
@click.option("--breakdown", is_flag=True)
@click.option("--timing", is_flag=True)
@handle_math_errors
def det_flat_sphere(input_path, tol, form, breakdown, timing):
    """Flat conical metric on the sphere; config from a JSON file."""
    started = time.perf_counter()
    cfg = _flat_config(input_path)
    fn = determinants.logdet_flat_sphere if form == "cone" else determinants.logdet_flat_sphere_AS
    result = fn(cfg, tol)
    _emit(_logdet_payload(result, breakdown), {"tol": tol, "route": form}, timing, started)


@det_group.command("disk")
@click.option("--beta", type=str, required=True, help="Cone order; plain integers stay exact.")
@click.option("--k", type=float, required=True)
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("--breakdown", is_flag=True)
@click.option("--timing", is_flag=True)
@handle_math_errors
def det_disk(beta, k, tol, breakdown, timing):
    """Constant-curvature unit disk with a central cone point (Dirichlet)."""
    started = time.perf_counter()
    cfg = determinants.DiskConfig(beta=_beta_value(beta), k=k)
    result = determinants.logdet_disk(cfg, tol)
    _emit(_logdet_payload(result, breakdown), {"tol": tol, "route": "closed-form"}, timing, started)


@det_group.command("flat-disk")
@click.option("--radius", type=float, required=True)
@click.option("--breakdown", is_flag=True)
@click.option("--timing", is_flag=True)
@handle_math_errors
def det_flat_disk(radius, breakdown, timing):
    """Flat disk of the given radius (Dirichlet)."""
    started = time.perf_counter()
    value = determinants.logdet_flat_disk(radius)
    payload = {"value": value}
    if breakdown:
        radius_term = -log(radius) / 3.0
        payload["breakdown"] = {
            "log_radius": radius_term,
            "constant": value - radius_term,
        }
    _emit(payload, {"route": "closed-form"}, timing, started)


@det_group.command("hyperbolic")
@click.option("--input", "input_path", type=click.Path(exists=True), required=True)
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("--breakdown", is_flag=True)
@click.option("--timing", is_flag=True)
@handle_math_errors
def det_hyperbolic(input_path, tol, breakdown, timing):
    """Hyperbolic conical sphere from a JSON summary
    {"orders": [...], "phi_consts": [...], "liouville_integral": x}."""
    started = time.perf_counter()
    raw = _load_json(input_path)
    summary = determinants.HyperbolicSummary(
        orders=raw["orders"],
        phi_consts=raw["phi_consts"],
        liouville_integral=raw["liouville_integral"],
    )
    result = determinants.logdet_hyperbolic_sphere(summary, tol)
    _emit(_logdet_payload(result, breakdown), {"tol": tol, "route": "closed-form"}, timing, started)


@main.group("area")
def area_group():
    """Total-area integrals."""


@area_group.command("flat-sphere")
@click.option("--input", "input_path", type=click.Path(exists=True), required=True)
@click.option("--tol", type=float, default=1e-8, show_default=True)
@click.option("--mc-samples", type=int, default=None, help="Also run the Monte-Carlo oracle.")
@click.option("--mc-seed", type=int, default=0, show_default=True)
@click.option("--timing", is_flag=True)
@handle_math_errors
def area_flat_sphere(input_path, tol, mc_samples, mc_seed, timing):
    """Improper plane integral of the flat conical density."""
    started = time.perf_counter()
    cfg = _flat_config(input_path)
    report = quadrature.flat_sphere_area(cfg, tol)
    if not report.converged:
        raise ConvergenceError(
            f"area quadrature did not converge (estimate {report.error_estimate:.3e})"
        )
    payload = {
        "value": report.value,
        "error_estimate": report.error_estimate,
        "evaluations": report.evaluations,
    }
    if mc_samples is not None:
        est, stderr = quadrature.flat_sphere_area_mc(cfg, mc_samples, mc_seed)
        payload["mc_estimate"] = est
        payload["mc_stderr"] = stderr
    _emit(payload, {"tol": tol, "route": "partition-of-unity quadrature"}, timing, started)


def _write_curve(result, header: str, generated_by: str, out):
    lines = [f"# generated-by: {generated_by}", header]
    for x, v in result.rows:
        lines.append(f"{x:.17g},{v:.17g}")
    for x, reason in result.skipped:
        lines.append(f"# skipped {x:.17g}: {reason}")
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.group("scan")
def scan_group():
    """Curve tabulation (CSV)."""


@scan_group.command("cbeta")
@click.option("--start", type=float, default=-0.9, show_default=True)
@click.option("--stop", type=float, default=5.0, show_default=True)
@click.option("--steps", type=int, default=60, show_default=True)
@click.option("--out", type=click.Path(), default=None)
@handle_math_errors
def scan_cbeta(start, stop, steps, out):
    """Tabulate beta -> C(beta)."""
    grid = extremal.ScanGrid(param="beta", start=start, stop=stop, steps=steps)
    result = extremal.scan_curve("cbeta", grid)
    _write_curve(
        result,
        "beta,c_beta",
        f"conedet scan cbeta --start {start} --stop {stop} --steps {steps}",
        out,
    )


@scan_group.command("fixed-area")
@click.option("--start", type=float, default=-0.89, show_default=True)
@click.option("--stop", type=float, default=5.0, show_default=True)
@click.option("--steps", type=int, default=60, show_default=True)
@click.option("--mu", type=float, default=0.0, show_default=True)
@click.option("--out", type=click.Path(), default=None)
@handle_math_errors
def scan_fixed_area(start, stop, steps, mu, out):
    """Tabulate beta -> det at fixed area 4 pi (exponentiated)."""
    grid = extremal.ScanGrid(param="beta", start=start, stop=stop, steps=steps, fixed_other=mu)
    result = extremal.scan_curve("fixed_area_det", grid)
    _write_curve(
        result,
        "beta,det_fixed_area",
        f"conedet scan fixed-area --start {start} --stop {stop} --steps {steps} --mu {mu}",
        out,
    )


@main.command("find-max")
@click.option("--initial", type=float, default=0.2, show_default=True)
@click.option("--tol", type=float, default=1e-8, show_default=True)
@click.option("--timing", is_flag=True)
@handle_math_errors
def find_max_cmd(initial, tol, timing):
    """Locate the fixed-area determinant's interior maximum at mu = 0."""
    started = time.perf_counter()
    report = extremal.find_local_max(initial, tol)
    _emit(
        {
            "location": report.location,
            "value": report.value,
            "second_derivative": report.second_derivative,
            "tolerance_achieved": report.tolerance_achieved,
        },
        {"tol": tol, "route": report.method},
        timing,
        started,
    )


@main.command("taylor-check")
@click.option("--h", "step", type=float, default=1e-3, show_default=True)
@click.option("--timing", is_flag=True)
@handle_math_errors
def taylor_check_cmd(step, timing):
    """Finite-difference expansion coefficients of the fixed-area curve at 0."""
    started = time.perf_counter()
    c2, c3 = extremal.taylor_check_at_zero(step)
    _emit(
        {"c2": c2, "c3": c3},
        {"h": step, "route": "Richardson-extrapolated central differences"},
        timing,
        started,
    )


@main.group("distance")
def distance_group():
    """Geodesic distances."""


@distance_group.command("spindle")
@click.option("--beta", type=str, required=True)
@click.option("--mu", type=float, default=0.0, show_default=True)
@click.option("--k", "--K", "curvature", type=float, default=1.0, show_default=True)
@click.option("--timing", is_flag=True)
@handle_math_errors
def distance_spindle(beta, mu, curvature, timing):
    """Distance between the two cone points of a spindle."""
    started = time.perf_counter()
    cfg = determinants.SpindleConfig(beta=_beta_value(beta), mu=mu, curvature=curvature)
    _emit(
        {"value": determinants.spindle_distance(cfg)},
        {"route": "closed-form"},
        timing,
        started,
    )


if __name__ == "__main__":
    main()
