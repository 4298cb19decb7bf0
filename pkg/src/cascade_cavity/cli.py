"""Command-line surface: reports, figure data, sweeps, optima, oracle runs.

Output discipline: human-readable structured reports print every number as
%.6g followed by the full-precision repr in parentheses; data files (csv)
carry reprs only.  Identical invocations produce byte-identical output.

Exit status: 0 on success (including a boundary-attainment notice from
maximize), 1 on usage or computation errors, 2 when the oracle comparison
lands outside the adiabatic regime.
"""
from __future__ import annotations

import argparse
import sys

from .params import SystemParams, atomic_steady_state, derive_params, \
    params_from_plot_set
from .single_mode import mean_photon_number, quadrature_report
from .superposed import superposed_report
from .sweep import FIGURES, QUANTITIES, SweepSpec, figure_table, maximize, \
    sweep

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; that slot is taken by
    the oracle's outside-regime verdict, so remap usage errors to 1."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(value: float) -> str:
    return f"{value:.6g} ({value!r})"


def _build_parser() -> _Parser:
    parser = _Parser(prog="cascade-cavity",
                     description="Steady-state photon statistics and "
                                 "squeezing of a driven three-level "
                                 "cascade atom in a damped cavity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("report", "csv")):
        g = p.add_argument_group("system parameters")
        g.add_argument("--g", type=float, help="atom-field coupling rate")
        g.add_argument("--kappa", type=float, help="cavity damping rate")
        g.add_argument("--eta", type=float, help="drive amplitude rate")
        g.add_argument("--gamma", type=float,
                       help="spontaneous emission rate")
        g.add_argument("--gamma-c", type=float, dest="gamma_c",
                       help="stimulated decay constant 4g^2/kappa "
                            "(alternative to --g/--eta)")
        g.add_argument("--epsilon", type=float,
                       help="effective drive 2g*eta/kappa "
                            "(alternative to --g/--eta)")
        p.add_argument("--out", help="write output to this path instead of "
                                     "standard output")
        p.add_argument("--format", choices=("report", "structured-report",
                                            "csv"),
                       help=f"output format (default {formats[0]})")
        p.add_argument("--config",
                       help="flat key=value file supplying defaults for any "
                            "long option; explicit flags win")
        p.set_defaults(default_format=formats[0])

    p = sub.add_parser("report", help="closed-form steady state, photon "
                                      "statistics, and squeezing at one "
                                      "parameter point")
    add_common(p)

    p = sub.add_parser("figure", help="curve data for one published figure "
                                      "(gamma_c=0.5, kappa=0.8, gamma per "
                                      "caption)")
    p.add_argument("figure_id", choices=sorted(FIGURES),
                   metavar="figure-id",
                   help="one of " + ", ".join(sorted(FIGURES)))
    p.add_argument("--points", type=int, help="grid size (default 401)")
    add_common(p, formats=("csv", "report"))

    p = sub.add_parser("sweep", help="evaluate quantities on an epsilon "
                                     "grid")
    p.add_argument("--eps-min", type=float, dest="eps_min",
                   help="grid start (default 0)")
    p.add_argument("--eps-max", type=float, dest="eps_max",
                   help="grid end (default 2)")
    p.add_argument("--points", type=int, help="grid size (default 401)")
    p.add_argument("--quantities",
                   help="comma-separated selectors (default n_bar); valid: "
                        + ", ".join(sorted(QUANTITIES)))
    add_common(p, formats=("csv", "report"))

    p = sub.add_parser("maximize", help="golden-section maximization of a "
                                        "quantity over epsilon")
    p.add_argument("--quantity", required=True,
                   help="selector, e.g. s-plus; valid: "
                        + ", ".join(sorted(QUANTITIES)))
    p.add_argument("--eps-min", type=float, dest="eps_min",
                   help="bracket start (default 0)")
    p.add_argument("--eps-max", type=float, dest="eps_max",
                   help="bracket end (default 3)")
    p.add_argument("--tol", type=float,
                   help="bracket width tolerance (default 1e-8)")
    add_common(p)

    p = sub.add_parser("oracle", help="truncated-Fock master-equation run "
                                      "compared against the closed forms")
    p.add_argument("--dims", help="Fock truncations Nb,N1,N2 (default "
                                  "6,3,3)")
    p.add_argument("--t-end", type=float, dest="t_end",
                   help="evolution horizon (default 4000)")
    p.add_argument("--dt", type=float,
                   help="integration step (default 0.02/max rate)")
    p.add_argument("--leak-tol", type=float, dest="leak_tol",
                   help="max tolerated top-Fock-level population "
                        "(default 1e-4)")
    add_common(p)

    return parser


# converters for values arriving from a --config file, keyed by the
# namespace attribute they fill
_CONFIG_TYPES = {
    "g": float, "kappa": float, "eta": float, "gamma": float,
    "gamma_c": float, "epsilon": float,
    "eps_min": float, "eps_max": float, "points": int, "tol": float,
    "quantities": str, "quantity": str,
    "dims": str, "t_end": float, "dt": float, "leak_tol": float,
    "out": str, "format": str,
}


def _apply_config(ns: argparse.Namespace, parser: _Parser) -> None:
    if not getattr(ns, "config", None):
        return
    try:
        with open(ns.config) as fh:
            lines = fh.readlines()
    except OSError as e:
        parser.error(f"cannot read config file: {e}")
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            parser.error(f"{ns.config}:{lineno}: expected key=value, got "
                         f"{line!r}")
        key, _, value = line.partition("=")
        attr = key.strip().replace("-", "_")
        value = value.strip()
        if attr == "config":
            parser.error(f"{ns.config}:{lineno}: config files cannot nest")
        if attr not in _CONFIG_TYPES or not hasattr(ns, attr):
            parser.error(f"{ns.config}:{lineno}: unknown key {key.strip()!r}"
                         f" for this subcommand")
        if getattr(ns, attr) is None:  # flags win over the file
            try:
                setattr(ns, attr, _CONFIG_TYPES[attr](value))
            except ValueError:
                parser.error(f"{ns.config}:{lineno}: bad value {value!r} "
                             f"for {key.strip()!r}")


def _resolve_params(ns, parser, need_drive: bool,
                    defaults: dict | None = None) -> SystemParams:
    defaults = defaults or {}
    style_g = ns.g is not None or ns.eta is not None
    style_eps = ns.gamma_c is not None or ns.epsilon is not None
    if style_g and style_eps:
        parser.error("parameter styles cannot be mixed: use --g/--eta or "
                     "--gamma-c/--epsilon")
    gamma = ns.gamma if ns.gamma is not None else defaults.get("gamma", 0.0)
    if style_g:
        kappa = ns.kappa if ns.kappa is not None else defaults.get("kappa")
        if ns.g is None or kappa is None:
            parser.error("--g and --kappa are required with the g/eta "
                         "parameter style")
        eta = ns.eta
        if eta is None:
            if need_drive:
                parser.error("--eta is required for this subcommand")
            eta = 0.0
        return derive_params(g=ns.g, kappa=kappa, eta=eta, gamma=gamma)
    gamma_c = ns.gamma_c if ns.gamma_c is not None \
        else defaults.get("gamma_c")
    kappa = ns.kappa if ns.kappa is not None else defaults.get("kappa")
    if gamma_c is None or kappa is None:
        parser.error("--gamma-c and --kappa are required (or --g/--eta)")
    epsilon = ns.epsilon
    if epsilon is None:
        if need_drive:
            parser.error("--epsilon is required for this subcommand")
        epsilon = 0.0
    return params_from_plot_set(gamma_c=gamma_c, kappa=kappa, gamma=gamma,
                                epsilon=epsilon)


def _emit(text: str, ns) -> None:
    if ns.out:
        with open(ns.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _chosen_format(ns) -> str:
    fmt = ns.format if ns.format is not None else ns.default_format
    return "report" if fmt == "structured-report" else fmt


def _report_rows(params: SystemParams):
    ss = atomic_steady_state(params)
    ph = mean_photon_number(params)
    qr = quadrature_report(params)
    sr = superposed_report(params)
    return (
        ("parameters", (("g", params.g), ("kappa", params.kappa),
                        ("eta", params.eta), ("gamma", params.gamma),
                        ("gamma_c", params.gamma_c),
                        ("epsilon", params.epsilon))),
        ("steady_state", (("sigma_a", ss.sigma_a), ("sigma_b", ss.sigma_b),
                          ("sigma_c", ss.sigma_c), ("eta_a", ss.eta_a),
                          ("eta_b", ss.eta_b), ("eta_c", ss.eta_c))),
        ("photon", (("n_bar", ph.n_bar), ("drive_term", ph.drive_term),
                    ("absorbed_term", ph.absorbed_term),
                    ("emitted_term", ph.emitted_term))),
        ("quadrature", (("var_plus", qr.var_plus),
                        ("var_minus", qr.var_minus),
                        ("vacuum_level", qr.vacuum_level),
                        ("f_lower", qr.f_lower),
                        ("f_product", qr.f_product),
                        ("s_plus", qr.s_plus), ("s_minus", qr.s_minus))),
        ("superposed", (("n_s", sr.n_s), ("var_plus", sr.var_plus),
                        ("var_minus", sr.var_minus),
                        ("vacuum_level", sr.vacuum_level),
                        ("f_lower", sr.f_lower),
                        ("f_product", sr.f_product),
                        ("s_sup_plus", sr.s_sup_plus),
                        ("s_sup_minus", sr.s_sup_minus))),
    )


def _cmd_report(ns, parser) -> int:
    params = _resolve_params(ns, parser, need_drive=True,
                             defaults={"gamma": 0.0})
    rows = _report_rows(params)
    if _chosen_format(ns) == "csv":
        lines = ["section,key,value"]
        for section, pairs in rows:
            for key, value in pairs:
                lines.append(f"{section},{key},{value!r}")
    else:
        lines = []
        for section, pairs in rows:
            lines.append(section)
            for key, value in pairs:
                lines.append(f"  {key} = {_fmt(value)}")
    _emit("\n".join(lines) + "\n", ns)
    return 0


def _table_text(table, title: str, meta: tuple = ()) -> str:
    lines = [title]
    for key, value in meta:
        lines.append(f"  {key} = {value}")
    lines.append("  columns = " + ",".join(table.columns))
    lines.append("data")
    return "\n".join(lines) + "\n" + table.csv()


def _cmd_figure(ns, parser) -> int:
    points = ns.points if ns.points is not None else 401
    gamma_c = ns.gamma_c if ns.gamma_c is not None else 0.5
    kappa = ns.kappa if ns.kappa is not None else 0.8
    table = figure_table(ns.figure_id, gamma_c=gamma_c, kappa=kappa,
                         points=points)
    if _chosen_format(ns) == "csv":
        _emit(table.csv(), ns)
    else:
        meta = (("gamma_c", repr(float(gamma_c))),
                ("kappa", repr(float(kappa))), ("points", points))
        _emit(_table_text(table, f"figure {ns.figure_id}", meta), ns)
    return 0


def _cmd_sweep(ns, parser) -> int:
    base = _resolve_params(ns, parser, need_drive=False,
                           defaults={"gamma_c": 0.5, "kappa": 0.8,
                                     "gamma": 0.3})
    quantities = tuple(
        q.strip().replace("-", "_")
        for q in (ns.quantities or "n_bar").split(",") if q.strip())
    spec = SweepSpec(
        base=base,
        eps_min=ns.eps_min if ns.eps_min is not None else 0.0,
        eps_max=ns.eps_max if ns.eps_max is not None else 2.0,
        points=ns.points if ns.points is not None else 401,
        quantities=quantities)
    table = sweep(spec)
    if _chosen_format(ns) == "csv":
        _emit(table.csv(), ns)
    else:
        meta = (("gamma_c", repr(base.gamma_c)), ("kappa", repr(base.kappa)),
                ("gamma", repr(base.gamma)),
                ("eps_min", repr(spec.eps_min)),
                ("eps_max", repr(spec.eps_max)), ("points", spec.points))
        _emit(_table_text(table, "sweep", meta), ns)
    return 0


def _cmd_maximize(ns, parser) -> int:
    base = _resolve_params(ns, parser, need_drive=False,
                           defaults={"gamma_c": 0.5, "kappa": 0.8,
                                     "gamma": 0.3})
    quantity = ns.quantity.strip().replace("-", "_")
    lo = ns.eps_min if ns.eps_min is not None else 0.0
    hi = ns.eps_max if ns.eps_max is not None else 3.0
    tol = ns.tol if ns.tol is not None else 1e-8
    result = maximize(base, quantity, bracket=(lo, hi), tol=tol)
    if _chosen_format(ns) == "csv":
        lines = ["quantity,eps_star,value_star,bracket,evaluations,boundary",
                 ",".join([quantity, repr(result.eps_star),
                           repr(result.value_star), repr(result.bracket),
                           str(result.evaluations),
                           result.boundary or "none"])]
        text = "\n".join(lines) + "\n"
    else:
        lines = ["maximize",
                 f"  quantity = {quantity}",
                 f"  eps_star = {_fmt(result.eps_star)}",
                 f"  value_star = {_fmt(result.value_star)}",
                 f"  bracket = {_fmt(result.bracket)}",
                 f"  evaluations = {result.evaluations}",
                 f"  boundary = {result.boundary or 'none'}"]
        if result.boundary is not None:
            lines.append("  notice = largest value sits on the bracket "
                         "edge; the objective is monotone there, no "
                         "interior maximum")
        text = "\n".join(lines) + "\n"
    _emit(text, ns)
    return 0


def _cmd_oracle(ns, parser) -> int:
    params = _resolve_params(ns, parser, need_drive=True,
                             defaults={"gamma": 0.0})
    from . import fock  # deferred: pulls in the compiled kernels

    dims = (6, 3, 3)
    if ns.dims is not None:
        try:
            dims = tuple(int(x) for x in ns.dims.split(","))
        except ValueError:
            dims = ()
        if len(dims) != 3:
            parser.error("--dims expects three integers Nb,N1,N2")
    kwargs = {}
    if ns.t_end is not None:
        kwargs["t_end"] = ns.t_end
    if ns.dt is not None:
        kwargs["dt"] = ns.dt
    if ns.leak_tol is not None:
        kwargs["leak_tolerance"] = ns.leak_tol
    config = fock.FockConfig(dim_b=dims[0], dim_a1=dims[1], dim_a2=dims[2],
                             **kwargs)
    report = fock.compare_with_analytic(params, config)
    if _chosen_format(ns) == "csv":
        _emit(fock.render_comparison_csv(report), ns)
    else:
        _emit(fock.render_comparison_text(report), ns)
    return {"pass": 0, "fail": 1, "outside adiabatic regime": 2}[
        report.verdict]


_DISPATCH = {
    "report": _cmd_report,
    "figure": _cmd_figure,
    "sweep": _cmd_sweep,
    "maximize": _cmd_maximize,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    _apply_config(ns, parser)
    try:
        return _DISPATCH[ns.command](ns, parser)
    except (ValueError, RuntimeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
