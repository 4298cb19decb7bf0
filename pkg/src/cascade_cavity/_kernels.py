"""Compiled inner loops for the truncated-Fock-space master equation.

The generator application is fused into one pass so the density matrix is
touched a minimal number of times:

* -i H rho via CSR rows (H is sparse, a few entries per row);
* the Hermitian conjugate term and the anticommutator -{L†L, rho}/2 in a
  mirrored upper/lower sweep.  L†L is diagonal for every collapse operator
  here, so the anticommutator is a scalar coefficient per element.  The
  mirrored writes use identical floating-point operations for (i,j) and
  (j,i), which keeps Hermitian inputs exactly Hermitian;
* jump terms L rho L†.  Every collapse operator (mode lowering, atomic
  lowering) has at most one entry per column, so L rho L† is a weighted
  gather from (src, src) positions into (dst, dst) positions.

Inputs are the packed arrays produced by fock._encode; no object-mode
fallbacks, everything is plain arrays.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def apply_generator(hdata, hind, hptr, d, src, dst, w, opptr, rho, out):
    n = rho.shape[0]
    # out = -i H rho (rowwise CSR)
    for i in range(n):
        for j in range(n):
            out[i, j] = 0.0
        for p in range(hptr[i], hptr[i + 1]):
            c = -1j * hdata[p]
            k = hind[p]
            for j in range(n):
                out[i, j] += c * rho[k, j]
    # Hermitian mirror adds +i rho H for Hermitian rho; anticommutator is
    # elementwise since every L†L is diagonal (d holds sum_k r_k diag)
    for i in range(n):
        di = d[i]
        for j in range(i, n):
            a = out[i, j]
            b = out[j, i]
            coef = -0.5 * (di + d[j])
            out[i, j] = a + np.conj(b) + coef * rho[i, j]
            out[j, i] = b + np.conj(a) + coef * rho[j, i]
    # jump terms: op k scatters rho[src, src] -> out[dst, dst] with weights
    nops = opptr.shape[0] - 1
    for k in range(nops):
        for p in range(opptr[k], opptr[k + 1]):
            ip = dst[p]
            sp = src[p]
            wp = w[p]
            for q in range(opptr[k], opptr[k + 1]):
                out[ip, dst[q]] += wp * w[q] * rho[sp, src[q]]


@njit(cache=True)
def evolve(hdata, hind, hptr, d, src, dst, w, opptr, rho, dt, nsteps, tol):
    """Classical fourth-order steps in place; returns (steps, residual,
    converged).  The residual is the max-norm of the generator action,
    checked before each step (it is the k1 stage, so the check is free)."""
    n = rho.shape[0]
    k = np.empty_like(rho)
    acc = np.empty_like(rho)
    tmp = np.empty_like(rho)
    res = 0.0
    for step in range(nsteps):
        apply_generator(hdata, hind, hptr, d, src, dst, w, opptr, rho, k)
        res = 0.0
        for i in range(n):
            for j in range(n):
                m = abs(k[i, j])
                if m > res:
                    res = m
        if res <= tol:
            return step, res, True
        h = 0.5 * dt
        for i in range(n):
            for j in range(n):
                acc[i, j] = k[i, j]
                tmp[i, j] = rho[i, j] + h * k[i, j]
        apply_generator(hdata, hind, hptr, d, src, dst, w, opptr, tmp, k)
        for i in range(n):
            for j in range(n):
                acc[i, j] += 2.0 * k[i, j]
                tmp[i, j] = rho[i, j] + h * k[i, j]
        apply_generator(hdata, hind, hptr, d, src, dst, w, opptr, tmp, k)
        for i in range(n):
            for j in range(n):
                acc[i, j] += 2.0 * k[i, j]
                tmp[i, j] = rho[i, j] + dt * k[i, j]
        apply_generator(hdata, hind, hptr, d, src, dst, w, opptr, tmp, k)
        s = dt / 6.0
        for i in range(n):
            for j in range(n):
                rho[i, j] += s * (acc[i, j] + k[i, j])
    return nsteps, res, False
