"""Brute-force master-equation oracle on a truncated Fock space.

The full system {three-level atom} x {driven mode b} x {emission modes
a1, a2} is evolved as a density matrix under the exact Hamiltonian with
atomic spontaneous emission and a standard damping dissipator at rate
kappa on each mode.  Nothing is adiabatically eliminated, so long-time
moments of this evolution are ground truth for the closed forms derived
in the kappa >> g regime.

Only normally ordered moments are compared.  The closed-form quadrature
variances are referenced to a gamma_c/kappa vacuum level that arises from
dropping noise operators under normal ordering; that convention has no
direct density-matrix counterpart and is deliberately out of scope here.

Atom basis order: index 0 = top level a, 1 = middle b, 2 = bottom c.
Composite index order: atom x mode_b x mode_a1 x mode_a2, row-major.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from . import _kernels
from .params import SystemParams, atomic_steady_state
from .single_mode import field_moments

__all__ = [
    "FockConfig",
    "OracleMoments",
    "EvolveInfo",
    "FieldComparison",
    "ComparisonReport",
    "LiouvillianAction",
    "OracleConvergenceError",
    "TruncationError",
    "build_generator",
    "initial_state",
    "evolve_to_steady",
    "extract_moments",
    "steady_moments",
    "compare_with_analytic",
    "render_comparison_text",
    "render_comparison_csv",
]

RESIDUAL_TOL = 1e-9          # max-norm of the generator action at steady state
TRACE_TOL = 1e-8
ABS_FLOOR = 1e-8             # absolute part of every pass/fail gate
ADIABATIC_KAPPA_OVER_G = 10.0
_CHUNK = 2000                # integration steps between trace audits

# relative tolerances per compared field: populations are first order in
# the adiabatic expansion, field moments accumulate extra truncation error
DEFAULT_RTOL = {
    "eta_a": 0.02, "eta_b": 0.02, "eta_c": 0.02, "sigma_c": 0.02,
    "mean_b": 0.05, "mean_b_sq": 0.05, "n_b": 0.05,
    "n_a1": 0.05, "n_a2": 0.05,
}
_FIELD_ORDER = ("eta_a", "eta_b", "eta_c", "sigma_c",
                "mean_b", "mean_b_sq", "n_b", "n_a1", "n_a2")


@dataclass(frozen=True)
class FockConfig:
    """Truncation and integration controls for one oracle run."""

    dim_b: int = 6
    dim_a1: int = 3
    dim_a2: int = 3
    t_end: float = 4000.0
    dt: float | None = None      # None: 0.02 / max(kappa, gamma, g, eta)
    leak_tolerance: float = 1e-4
    dim_cap: int = 2000


@dataclass(frozen=True)
class OracleMoments:
    eta_a: float
    eta_b: float
    eta_c: float
    sigma_c: complex
    mean_b: complex
    mean_b_sq: complex
    n_b: float
    n_a1: float
    n_a2: float
    trace_error: float
    top_level_population: float


@dataclass(frozen=True)
class EvolveInfo:
    steps: int
    time: float
    residual: float
    converged: bool
    trace_error: float


class OracleConvergenceError(RuntimeError):
    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class TruncationError(RuntimeError):
    """Population reached the top retained Fock level; enlarge the dims."""


def _mode_lower(n: int) -> sp.spmatrix:
    return sp.diags(np.sqrt(np.arange(1.0, n)), 1)


def _atom(i: int, j: int) -> sp.csr_matrix:
    m = np.zeros((3, 3))
    m[i, j] = 1.0
    return sp.csr_matrix(m)


def _kron4(a, b, c, d) -> sp.csr_matrix:
    return sp.kron(sp.kron(sp.kron(a, b), c), d).tocsr()


class LiouvillianAction:
    """Matrix-free Lindblad generator: calling it on a density matrix
    returns d rho / dt.

    hamiltonian and collapse_ops (rate, operator) are exposed so a slow
    sparse-matrix evaluation can cross-check the compiled kernel.
    """

    def __init__(self, dim, dims, hamiltonian, collapse_ops, packed):
        self.dim = dim
        self.dims = dims  # (dim_b, dim_a1, dim_a2)
        self.hamiltonian = hamiltonian
        self.collapse_ops = collapse_ops
        self._packed = packed

    def __call__(self, rho: np.ndarray) -> np.ndarray:
        if rho.shape != (self.dim, self.dim):
            raise ValueError(f"density matrix must be {self.dim}x{self.dim},"
                             f" got {rho.shape}")
        rho = np.ascontiguousarray(rho, dtype=np.complex128)
        out = np.empty_like(rho)
        _kernels.apply_generator(*self._packed, rho, out)
        return out


def _encode(hamiltonian, collapse_ops):
    """Pack the generator into flat arrays for the compiled kernel.

    Every collapse operator here has at most one entry per column, so the
    jump term L rho L† is encoded as (src, dst, weight) gathers; L†L is
    diagonal, accumulated into d.
    """
    H = hamiltonian.tocsr().copy()
    H.sum_duplicates()
    H.eliminate_zeros()
    dim = H.shape[0]
    d = np.zeros(dim)
    srcs, dsts, ws, ptr = [], [], [], [0]
    for rate, L in collapse_ops:
        if rate == 0.0:
            continue
        d += rate * (L.conj().T @ L).diagonal().real
        coo = L.tocoo()
        srcs.append(coo.col.astype(np.int64))
        dsts.append(coo.row.astype(np.int64))
        ws.append(np.sqrt(rate) * coo.data.real)
        ptr.append(ptr[-1] + coo.nnz)
    return (H.data.astype(np.complex128), H.indices.astype(np.int64),
            H.indptr.astype(np.int64), d,
            np.concatenate(srcs), np.concatenate(dsts), np.concatenate(ws),
            np.array(ptr, np.int64))


def build_generator(params: SystemParams,
                    config: FockConfig | None = None) -> LiouvillianAction:
    """Assemble the full-model generator at the configured truncation."""
    config = config if config is not None else FockConfig()
    nb, n1, n2 = config.dim_b, config.dim_a1, config.dim_a2
    for name, n in (("dim_b", nb), ("dim_a1", n1), ("dim_a2", n2)):
        if n < 2:
            raise ValueError(f"{name} must be at least 2, got {n}")
    dim = 3 * nb * n1 * n2
    if dim > config.dim_cap:
        raise ValueError(f"total dimension 3*{nb}*{n1}*{n2} = {dim} exceeds "
                         f"the cap {config.dim_cap}")
    if not params.kappa > 0:
        raise ValueError(f"kappa must be positive, got {params.kappa}")
    if params.g < 0 or params.eta < 0 or params.gamma < 0:
        raise ValueError("g, eta, gamma must be nonnegative")

    ia, ib, i1, i2 = (sp.identity(3), sp.identity(nb),
                      sp.identity(n1), sp.identity(n2))
    b = _kron4(ia, _mode_lower(nb), i1, i2)
    a1 = _kron4(ia, ib, _mode_lower(n1), i2)
    a2 = _kron4(ia, ib, i1, _mode_lower(n2))
    s_a = _kron4(_atom(1, 0), ib, i1, i2)   # |b><a|
    s_b = _kron4(_atom(2, 1), ib, i1, i2)   # |c><b|
    s_c = _kron4(_atom(2, 0), ib, i1, i2)   # |c><a|
    H = (1j * params.eta * (b.conj().T - b)
         + 1j * params.g * (s_c.conj().T @ b - b.conj().T @ s_c
                            + s_a.conj().T @ a1 - a1.conj().T @ s_a
                            + s_b.conj().T @ a2 - a2.conj().T @ s_b)).tocsr()
    collapse = ((params.gamma, s_a), (params.gamma, s_b),
                (params.gamma, s_c), (params.kappa, b),
                (params.kappa, a1), (params.kappa, a2))
    return LiouvillianAction(dim=dim, dims=(nb, n1, n2), hamiltonian=H,
                             collapse_ops=collapse,
                             packed=_encode(H, collapse))


def initial_state(config: FockConfig) -> np.ndarray:
    """Atom in the bottom level, every mode in vacuum."""
    dim = 3 * config.dim_b * config.dim_a1 * config.dim_a2
    rho = np.zeros((dim, dim), np.complex128)
    rho[2 * dim // 3, 2 * dim // 3] = 1.0
    return rho


def evolve_to_steady(params: SystemParams,
                     config: FockConfig | None = None
                     ) -> tuple[np.ndarray, EvolveInfo]:
    """Integrate the master equation from the default initial state until
    the generator action has max-norm <= 1e-9, auditing the trace every
    few thousand steps."""
    config = config if config is not None else FockConfig()
    if not config.t_end > 0:
        raise ValueError(f"t_end must be positive, got {config.t_end}")
    gen = build_generator(params, config)
    dt_max = 0.02 / max(params.kappa, params.gamma, params.g, params.eta)
    dt = config.dt if config.dt is not None else dt_max
    if not 0 < dt <= dt_max * (1 + 1e-12):
        raise ValueError(f"dt must lie in (0, {dt_max:.6g}] to resolve the "
                         f"fastest rate, got {dt}")
    nsteps = int(np.ceil(config.t_end / dt))
    rho = initial_state(config)
    done = 0
    converged = False
    residual = np.inf
    trace_error = 0.0
    while done < nsteps:
        chunk = min(_CHUNK, nsteps - done)
        steps, residual, converged = _kernels.evolve(
            *gen._packed, rho, dt, chunk, RESIDUAL_TOL)
        done += steps
        trace_error = abs(1.0 - np.trace(rho))
        if trace_error > TRACE_TOL:
            raise RuntimeError(
                f"trace drifted by {trace_error:.3e} after {done} steps; "
                f"step {dt:.3g} is too large for stable integration")
        if converged:
            break
    if not converged:
        raise OracleConvergenceError(
            f"no steady state by t_end={config.t_end:g}: residual "
            f"{residual:.3e} > {RESIDUAL_TOL:g}", float(residual))
    return rho, EvolveInfo(steps=done, time=done * dt,
                           residual=float(residual), converged=True,
                           trace_error=float(trace_error))


def extract_moments(rho: np.ndarray,
                    dims: tuple[int, int, int]) -> OracleMoments:
    """Normally ordered moments and populations from a density matrix."""
    nb, n1, n2 = dims
    t = rho.reshape(3, nb, n1, n2, 3, nb, n1, n2)
    eta_a = float(np.einsum('ijkijk->', t[0, :, :, :, 0]).real)
    eta_b = float(np.einsum('ijkijk->', t[1, :, :, :, 1]).real)
    eta_c = float(np.einsum('ijkijk->', t[2, :, :, :, 2]).real)
    # tr(rho |c><a|) picks the (a-row, c-column) block
    sigma_c = complex(np.einsum('ijkijk->', t[0, :, :, :, 2]))
    diag = np.einsum('anklankl->ankl', t).real
    n_b = float(np.arange(nb) @ diag.sum(axis=(0, 2, 3)))
    n_a1 = float(np.arange(n1) @ diag.sum(axis=(0, 1, 3)))
    n_a2 = float(np.arange(n2) @ diag.sum(axis=(0, 1, 2)))
    mean_b = 0j
    for n in range(nb - 1):
        mean_b += np.sqrt(n + 1.0) * np.einsum(
            'aklakl->', t[:, n + 1, :, :, :, n, :, :])
    mean_b_sq = 0j
    for n in range(nb - 2):
        mean_b_sq += np.sqrt((n + 1.0) * (n + 2.0)) * np.einsum(
            'aklakl->', t[:, n + 2, :, :, :, n, :, :])
    top = max(diag[:, nb - 1, :, :].sum(),
              diag[:, :, n1 - 1, :].sum(),
              diag[:, :, :, n2 - 1].sum())
    return OracleMoments(eta_a=eta_a, eta_b=eta_b, eta_c=eta_c,
                         sigma_c=sigma_c, mean_b=complex(mean_b),
                         mean_b_sq=complex(mean_b_sq),
                         n_b=n_b, n_a1=n_a1, n_a2=n_a2,
                         trace_error=float(abs(1.0 - np.trace(rho))),
                         top_level_population=float(top))


def steady_moments(params: SystemParams,
                   config: FockConfig | None = None) -> OracleMoments:
    config = config if config is not None else FockConfig()
    rho, _ = evolve_to_steady(params, config)
    moments = extract_moments(rho, (config.dim_b, config.dim_a1,
                                    config.dim_a2))
    if moments.top_level_population > config.leak_tolerance:
        raise TruncationError(
            f"top Fock level holds {moments.top_level_population:.3e} "
            f"> leak tolerance {config.leak_tolerance:g}; increase "
            f"dim_b/dim_a1/dim_a2")
    return moments


@dataclass(frozen=True)
class FieldComparison:
    name: str
    oracle: complex
    reference: float
    abs_dev: float
    rel_dev: float
    rel_tol: float
    passed: bool


@dataclass(frozen=True)
class ComparisonReport:
    fields: tuple[FieldComparison, ...]
    verdict: str               # pass | fail | outside adiabatic regime
    kappa_over_g: float
    moments: OracleMoments
    info: EvolveInfo
    note: str


_NOTE = ("comparison restricted to normally ordered moments; the "
         "closed-form quadrature variances are referenced to the "
         "gamma_c/kappa vacuum of the adiabatic theory, which has no "
         "density-matrix counterpart, so variances are not compared. "
         "The closed forms are exact only for kappa >> g; outside that "
         "regime the deviations below measure the adiabatic "
         "approximation itself, not a defect of either path.")


def compare_with_analytic(params: SystemParams,
                          config: FockConfig | None = None,
                          tolerances: dict[str, float] | None = None
                          ) -> ComparisonReport:
    """Side-by-side oracle vs closed forms with per-field pass gates.

    A field passes when |oracle - reference| <= 1e-8 + rtol*|reference|.
    All fields passing gives verdict "pass"; a failure is "fail" only in
    the good-cavity regime kappa/g >= 10 where the closed forms should
    hold, and "outside adiabatic regime" otherwise.
    """
    config = config if config is not None else FockConfig()
    if not (params.g > 0 and params.gamma_c > 0):
        raise ValueError("comparison needs g > 0 and gamma_c > 0; the "
                         "closed forms are undefined otherwise")
    rtol = dict(DEFAULT_RTOL)
    for key in (tolerances or {}):
        if key not in rtol:
            raise ValueError(f"unknown tolerance field {key!r}; valid: "
                             + ", ".join(_FIELD_ORDER))
    rtol.update(tolerances or {})

    rho, info = evolve_to_steady(params, config)
    m = extract_moments(rho, (config.dim_b, config.dim_a1, config.dim_a2))
    if m.top_level_population > config.leak_tolerance:
        raise TruncationError(
            f"top Fock level holds {m.top_level_population:.3e} "
            f"> leak tolerance {config.leak_tolerance:g}; increase "
            f"dim_b/dim_a1/dim_a2")

    ss = atomic_steady_state(params)
    fm = field_moments(params)
    emit = params.gamma_c / params.kappa
    refs = {
        "eta_a": ss.eta_a, "eta_b": ss.eta_b, "eta_c": ss.eta_c,
        "sigma_c": ss.sigma_c,
        "mean_b": fm.mean_b, "mean_b_sq": fm.mean_b_squared,
        "n_b": fm.n_bar,
        "n_a1": emit * ss.eta_a, "n_a2": emit * ss.eta_b,
    }
    oracle = {name: getattr(m, name) for name in _FIELD_ORDER}
    fields = []
    for name in _FIELD_ORDER:
        ref = refs[name]
        dev = abs(oracle[name] - ref)
        if ref != 0:
            rel = dev / abs(ref)
        else:
            rel = 0.0 if dev == 0 else np.inf
        fields.append(FieldComparison(
            name=name, oracle=oracle[name], reference=ref,
            abs_dev=float(dev), rel_dev=float(rel), rel_tol=rtol[name],
            passed=bool(dev <= ABS_FLOOR + rtol[name] * abs(ref))))
    kappa_over_g = params.kappa / params.g
    if all(f.passed for f in fields):
        verdict = "pass"
    elif kappa_over_g >= ADIABATIC_KAPPA_OVER_G:
        verdict = "fail"
    else:
        verdict = "outside adiabatic regime"
    return ComparisonReport(fields=tuple(fields), verdict=verdict,
                            kappa_over_g=float(kappa_over_g), moments=m,
                            info=info, note=_NOTE)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, complex):
        return f"{value.real:.6g}{value.imag:+.6g}j ({value!r})"
    if isinstance(value, float):
        return f"{value:.6g} ({value!r})"
    return str(value)


def render_comparison_text(report: ComparisonReport) -> str:
    lines = ["oracle comparison"]
    lines.append("regime")
    lines.append(f"  kappa_over_g = {_fmt(report.kappa_over_g)}")
    lines.append("  adiabatic = " + _fmt(
        report.kappa_over_g >= ADIABATIC_KAPPA_OVER_G)
        + f" (good-cavity threshold kappa/g >= {ADIABATIC_KAPPA_OVER_G:g})")
    lines.append("evolution")
    lines.append(f"  steps = {report.info.steps}")
    lines.append(f"  time = {_fmt(report.info.time)}")
    lines.append(f"  residual = {_fmt(report.info.residual)}")
    lines.append(f"  trace_error = {_fmt(report.moments.trace_error)}")
    lines.append("  top_level_population = "
                 + _fmt(report.moments.top_level_population))
    lines.append("fields")
    for f in report.fields:
        lines.append(f"  {f.name}")
        lines.append(f"    oracle = {_fmt(f.oracle)}")
        lines.append(f"    reference = {_fmt(f.reference)}")
        lines.append(f"    abs_dev = {_fmt(f.abs_dev)}")
        lines.append(f"    rel_dev = {_fmt(f.rel_dev)}")
        lines.append(f"    rel_tol = {_fmt(f.rel_tol)}")
        lines.append("    status = " + ("pass" if f.passed else "FAIL"))
    lines.append(f"verdict = {report.verdict}")
    lines.append(f"note = {report.note}")
    return "\n".join(lines) + "\n"


def render_comparison_csv(report: ComparisonReport) -> str:
    lines = ["field,oracle_re,oracle_im,reference,abs_dev,rel_dev,"
             "rel_tol,status"]
    for f in report.fields:
        o = complex(f.oracle)
        lines.append(",".join([
            f.name, repr(o.real), repr(o.imag), repr(float(f.reference)),
            repr(f.abs_dev), repr(f.rel_dev), repr(f.rel_tol),
            "pass" if f.passed else "fail"]))
    return "\n".join(lines) + "\n"
