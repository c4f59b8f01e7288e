"""Frame-free classical implementations used as cross-check oracles.

These operate directly on a plain matrix with the identity metric and share
no code with the frame machinery: norms and eigenvalues come straight from
LAPACK, and the numerical-radius sweep is a standalone reimplementation of
the grid bound.
"""

import math

import numpy as np


def spectral_norm(t):
    return float(np.linalg.norm(np.asarray(t, dtype=np.complex128), ord=2))


def spectral_radius(t):
    lam = np.linalg.eigvals(np.asarray(t, dtype=np.complex128))
    return float(np.abs(lam).max()) if lam.size else 0.0


def numerical_radius(t, grid=4096, rounds=3, factor=32):
    """(lower, upper) bracket of the classical numerical radius via the
    support-function grid bound with local refinement."""
    t = np.asarray(t, dtype=np.complex128)
    if not np.any(t):
        return 0.0, 0.0
    th = t.conj().T

    def fvals(angles):
        ph = np.exp(1j * angles)
        h = 0.5 * (ph[:, None, None] * t + np.conj(ph)[:, None, None] * th)
        lam = np.linalg.eigvalsh(h)
        return lam[:, -1], -lam[:, 0]

    spacing = 2.0 * math.pi / grid
    base = np.arange(grid // 2) * spacing
    fmax, fneg = fvals(base)
    angles = np.concatenate([base, base + math.pi])
    values = np.concatenate([fmax, fneg])
    lower = float(values.max())
    upper = lower / math.cos(0.5 * spacing)
    for _ in range(rounds):
        cand = angles[values >= 2.0 * lower - upper]
        offs = (np.arange(factor + 1) / factor - 0.5) * spacing
        new = np.unique((cand[:, None] + offs[None, :]).ravel())
        nmax, nneg = fvals(new)
        angles = np.concatenate([angles, new, new + math.pi])
        values = np.concatenate([values, nmax, nneg])
        spacing /= factor
        lower = float(values.max())
        upper = lower / math.cos(0.5 * spacing)
    return lower, upper


def numerical_radius_sampled(t, samples=5000, seed=0):
    """Plain uniform sampling of |<Tx, x>| over the unit sphere."""
    t = np.asarray(t, dtype=np.complex128)
    rng = np.random.default_rng(seed)
    n = t.shape[0]
    z = rng.standard_normal((samples, n)) + 1j * rng.standard_normal((samples, n))
    num = np.abs(np.einsum("ij,ij->i", z.conj(), z @ t.T))
    den = np.einsum("ij,ij->i", z.conj(), z).real
    return float((num / den).max())
