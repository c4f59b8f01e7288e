"""Dense complex linear-algebra kernels.

Everything operates on plain numpy arrays (complex128, 2-D, row-major).
The eigensolver is a cyclic Jacobi iteration for Hermitian matrices; the
SVD, Moore-Penrose pseudoinverse, PSD square root and range projector are
all derived from it, so the kernel layer is self-contained and every
postcondition is checkable with a handful of matrix products. The target
regime is small dense matrices (desk scale), where robustness and
determinism matter more than speed.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    NegativeEntryError,
    NoConvergenceError,
    NotHermitianError,
    NotPsdError,
    NotSquareError,
)

EPS = float(np.finfo(np.float64).eps)

# Relative Hermitian-deviation allowance on inputs that must be Hermitian.
TAU_SYM = 1e-10
# Relative reconstruction allowance asserted by the test suite.
TAU_EIG = 1e-10
# Cyclic Jacobi: fixed sweep cap and off-diagonal Frobenius target.
JACOBI_MAX_SWEEPS = 30
JACOBI_OFF_TOL = 1e-14
# Negative eigenvalues above -PSD_CLAMP_FACTOR * rank_tolerance are treated
# as roundoff from Gram-style constructions and clamped to zero.
PSD_CLAMP_FACTOR = 100.0


def as_matrix(a, name="matrix"):
    """Validate and convert to a 2-D complex128 array with finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got ndim={m.ndim}")
    if m.size and not (np.isfinite(m.real).all() and np.isfinite(m.imag).all()):
        raise ValueError(f"{name} contains non-finite entries")
    return m


def require_square(m, name="matrix"):
    if m.shape[0] != m.shape[1]:
        raise NotSquareError(f"{name} must be square, got shape {m.shape}")


def frobenius(m):
    return float(np.linalg.norm(m))


def hermitian_deviation(m):
    """Frobenius norm of the anti-Hermitian part, relative check helper."""
    return float(np.linalg.norm(m - m.conj().T))


def rank_tolerance(m, scale=None):
    """Absolute truncation threshold: max(rows, cols) * eps * largest
    singular value (or eigenvalue magnitude, passed as `scale`).

    When no scale is given the Frobenius norm is used; it bounds the
    spectral norm from above, so the threshold is only more conservative.
    """
    m = np.asarray(m)
    if scale is None:
        scale = float(np.linalg.norm(m)) if m.size else 0.0
    return max(m.shape) * EPS * float(scale)


@dataclass
class HermitianEigen:
    """Eigendecomposition of a Hermitian matrix.

    eigenvalues are real and ascending; columns of `vectors` are the
    corresponding orthonormal eigenvectors.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray


@dataclass
class Svd:
    """Singular value decomposition M = left @ Sigma @ right^H.

    `left` is rows x rows unitary, `right` is cols x cols unitary, and
    `singular_values` holds the min(rows, cols) values, nonincreasing.
    """

    left: np.ndarray
    singular_values: np.ndarray
    right: np.ndarray


def _offdiag_frobenius(a):
    # Summed directly (not as ||a||^2 - ||diag||^2, which cancels badly).
    off = np.abs(a) ** 2
    np.fill_diagonal(off, 0.0)
    return math.sqrt(float(off.sum()))


def _jacobi_hermitian(h, want_vectors):
    """Cyclic complex Jacobi on an (already symmetrized) Hermitian matrix.

    Returns (eigenvalues ascending, vectors-or-None). Raises
    NoConvergenceError when the sweep cap is exhausted before the
    off-diagonal Frobenius norm drops below JACOBI_OFF_TOL * ||h||_F.
    """
    n = h.shape[0]
    a = np.array(h, dtype=np.complex128, copy=True)
    v = np.eye(n, dtype=np.complex128) if want_vectors else None
    norm = frobenius(a)
    if n == 1 or norm == 0.0:
        lam = np.diagonal(a).real.copy()
        order = np.argsort(lam, kind="stable")
        return lam[order], (v[:, order] if v is not None else None)

    off_target = JACOBI_OFF_TOL * norm
    elem_skip = off_target / (2.0 * n)
    converged = False
    for _ in range(JACOBI_MAX_SWEEPS):
        if _offdiag_frobenius(a) <= off_target:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = abs(a[p, q])
                if b <= elem_skip:
                    continue
                ph = a[p, q] / b
                tau = (a[q, q].real - a[p, p].real) / (2.0 * b)
                if tau == 0.0:
                    t = 1.0
                else:
                    # smaller-magnitude root of t^2 - 2*tau*t - 1 = 0
                    sgn = 1.0 if tau > 0.0 else -1.0
                    t = -sgn / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c

                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp + s * np.conj(ph) * cq
                a[:, q] = -s * ph * cp + c * cq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp + s * ph * rq
                a[q, :] = -s * np.conj(ph) * rp + c * rq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp + s * np.conj(ph) * vq
                    v[:, q] = -s * ph * vp + c * vq
    if not converged and _offdiag_frobenius(a) > off_target:
        raise NoConvergenceError(
            f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps (n={n})"
        )
    lam = np.diagonal(a).real.copy()
    order = np.argsort(lam, kind="stable")
    lam = lam[order]
    if v is not None:
        v = v[:, order]
    return lam, v


def hermitian_eig(m):
    """Eigendecomposition of a Hermitian matrix via cyclic Jacobi.

    The input may deviate from exact Hermitian symmetry by at most
    TAU_SYM * ||m||_F; it is symmetrized internally before iterating.
    """
    m = as_matrix(m)
    require_square(m)
    norm = frobenius(m)
    if hermitian_deviation(m) > TAU_SYM * max(norm, 1e-300):
        raise NotHermitianError("matrix is not Hermitian within tolerance")
    h = 0.5 * (m + m.conj().T)
    lam, v = _jacobi_hermitian(h, want_vectors=True)
    return HermitianEigen(eigenvalues=lam, vectors=v)


def eigvals_hermitian(m):
    """Eigenvalues only (ascending) of a Hermitian matrix; skips the
    eigenvector accumulation of hermitian_eig."""
    m = as_matrix(m)
    require_square(m)
    norm = frobenius(m)
    if hermitian_deviation(m) > TAU_SYM * max(norm, 1e-300):
        raise NotHermitianError("matrix is not Hermitian within tolerance")
    h = 0.5 * (m + m.conj().T)
    lam, _ = _jacobi_hermitian(h, want_vectors=False)
    return lam


def _orthonormalize(cols):
    """Modified Gram-Schmidt with one reorthogonalization pass."""
    out = []
    for v in cols:
        w = v.astype(np.complex128, copy=True)
        for _ in range(2):
            for u in out:
                w = w - u * np.vdot(u, w)
        nrm = np.linalg.norm(w)
        if nrm > 0.0:
            out.append(w / nrm)
    return out


def _complete_basis(cols, dim):
    """Extend an orthonormal list of vectors to a full basis of C^dim by
    greedily orthogonalizing canonical vectors."""
    basis = list(cols)
    while len(basis) < dim:
        best = None
        best_norm = -1.0
        for j in range(dim):
            w = np.zeros(dim, dtype=np.complex128)
            w[j] = 1.0
            for _ in range(2):
                for u in basis:
                    w = w - u * np.vdot(u, w)
            nrm = float(np.linalg.norm(w))
            if nrm > best_norm:
                best_norm = nrm
                best = w
        basis.append(best / best_norm)
    return basis


def svd(m):
    """SVD via the Hermitian eigendecomposition of M^H M.

    Singular values come back nonincreasing; left factors are recovered as
    normalized images of the right singular vectors and completed to a
    unitary basis. Adequate at desk-scale conditioning.
    """
    m = as_matrix(m)
    rows, cols = m.shape
    k_total = min(rows, cols)
    if frobenius(m) == 0.0:
        return Svd(
            left=np.eye(rows, dtype=np.complex128),
            singular_values=np.zeros(k_total),
            right=np.eye(cols, dtype=np.complex128),
        )
    gram = m.conj().T @ m
    gram = 0.5 * (gram + gram.conj().T)
    lam, v = _jacobi_hermitian(gram, want_vectors=True)
    # descending singular values
    lam = lam[::-1]
    v = v[:, ::-1]
    sigma = np.sqrt(np.clip(lam, 0.0, None))
    tol = rank_tolerance(m, scale=sigma[0] if sigma.size else 0.0)
    rank = int(np.count_nonzero(sigma > tol))
    u_cols = []
    for i in range(min(rank, rows)):
        u_cols.append((m @ v[:, i]) / sigma[i])
    u_cols = _orthonormalize(u_cols)
    u_cols = _complete_basis(u_cols, rows)
    left = np.column_stack(u_cols)
    return Svd(left=left, singular_values=sigma[:k_total], right=v)


def spectral_norm(m):
    """Largest singular value."""
    m = as_matrix(m)
    if frobenius(m) == 0.0:
        return 0.0
    gram = m.conj().T @ m
    gram = 0.5 * (gram + gram.conj().T)
    lam, _ = _jacobi_hermitian(gram, want_vectors=False)
    return math.sqrt(max(float(lam[-1]), 0.0))


def pinv(m, tol=None):
    """Moore-Penrose pseudoinverse with rank truncation at `tol`.

    The four defining equations hold to roughly eps * conditioning: with
    X = pinv(M), MXM = M, XMX = X, and MX, XM are the orthogonal projectors
    onto the ranges of M and M^H. Rank zero yields the zero matrix.
    """
    m = as_matrix(m)
    dec = svd(m)
    sigma = dec.singular_values
    if tol is None:
        tol = rank_tolerance(m, scale=sigma[0] if sigma.size else 0.0)
    rank = int(np.count_nonzero(sigma > tol))
    if rank == 0:
        return np.zeros((m.shape[1], m.shape[0]), dtype=np.complex128)
    vr = dec.right[:, :rank]
    ur = dec.left[:, :rank]
    return (vr / sigma[:rank]) @ ur.conj().T


def psd_sqrt(m):
    """Hermitian PSD square root.

    Eigenvalues in [-PSD_CLAMP_FACTOR * rank_tolerance, 0) are clamped to
    zero (roundoff from A = B^H B constructions); anything below the window
    raises NotPsdError.
    """
    dec = hermitian_eig(m)
    lam = dec.eigenvalues
    scale = float(np.max(np.abs(lam))) if lam.size else 0.0
    window = PSD_CLAMP_FACTOR * rank_tolerance(np.asarray(m), scale=scale)
    if lam.size and float(lam[0]) < -window:
        raise NotPsdError(
            f"eigenvalue {lam[0]:.3e} below the clamping window {-window:.3e}"
        )
    lam = np.clip(lam, 0.0, None)
    root = (dec.vectors * np.sqrt(lam)) @ dec.vectors.conj().T
    return 0.5 * (root + root.conj().T)


def range_projector(m, tol=None):
    """Orthogonal projector onto the range of m (P^2 = P = P^H)."""
    m = as_matrix(m)
    dec = svd(m)
    sigma = dec.singular_values
    if tol is None:
        tol = rank_tolerance(m, scale=sigma[0] if sigma.size else 0.0)
    rank = int(np.count_nonzero(sigma > tol))
    ur = dec.left[:, :rank]
    p = ur @ ur.conj().T
    return 0.5 * (p + p.conj().T)


def nonneg2x2_spectral_radius(a, b, c, d):
    """Perron root of the entrywise-nonnegative matrix [[a, b], [c, d]]:
    ((a + d) + sqrt((a - d)^2 + 4 b c)) / 2."""
    for name, x in (("a", a), ("b", b), ("c", c), ("d", d)):
        if x < 0.0:
            raise NegativeEntryError(f"entry {name}={x} is negative")
    return 0.5 * ((a + d) + math.hypot(a - d, 2.0 * math.sqrt(b * c)))
