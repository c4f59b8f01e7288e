"""Semi-Hilbertian frames.

A frame packages a Hermitian PSD metric A together with everything derived
from its eigendecomposition: rank, A^{1/2} and its pseudoinverse, A^dagger,
and the orthogonal projector P onto the range of A. Operators bound to a
frame carry the reduced matrix A^{1/2} T (A^{1/2})^dagger, which transports
every metric-weighted quantity of T to the corresponding classical quantity,
plus two membership flags:

  in_la_half -- T maps the null space of A into itself (the seminorm of T
                is finite; "A-bounded");
  in_la      -- the range of T^H A sits inside the range of A, so the sharp
                adjoint A^dagger T^H A exists.

Frames and framed operators are immutable after construction and safe to
share across workers. Generators take explicit seeds; there is no hidden
global RNG anywhere in this module.
"""

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    BadRankError,
    DegenerateFrameError,
    DimensionMismatchError,
    NotABoundedError,
    NotInLAError,
    NotPsdError,
    UnsatisfiableKindError,
)

# Membership residuals are exact algebra for generated instances, so the
# threshold only has to absorb roundoff.
MEMBER_TOL_BASE = 1e-8

OPERATOR_KINDS = (
    "arbitrary",
    "in_LA",
    "A_selfadjoint",
    "A_positive",
    "nilpotent_AT2zero",
)


def _freeze(*arrays):
    for a in arrays:
        a.setflags(write=False)


@dataclass(eq=False)
class PsdFrame:
    """Validated PSD metric with eagerly computed caches."""

    dim: int
    a: np.ndarray
    rank: int
    eigenvalues: np.ndarray  # ascending, sub-tolerance values zeroed
    eigenvectors: np.ndarray
    sqrt_a: np.ndarray
    pinv_sqrt_a: np.ndarray
    pinv_a: np.ndarray
    projector: np.ndarray
    tol: float

    def operator(self, t):
        """Bind a dim x dim matrix to this frame."""
        return _bind(self, t)

    @property
    def null_dim(self):
        return self.dim - self.rank


@dataclass(eq=False)
class FramedOperator:
    """A matrix tied to a frame, with its reduced matrix and membership
    flags computed at construction."""

    frame: PsdFrame
    t: np.ndarray
    reduced: np.ndarray
    in_la: bool
    in_la_half: bool
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self):
        return self.frame.dim


@dataclass
class OperatorFlags:
    a_selfadjoint: bool
    a_positive: bool
    a_unitary: bool


def member_tol(frame, t):
    return MEMBER_TOL_BASE * (1.0 + linalg.frobenius(t) * linalg.frobenius(frame.a))


def make_frame(a):
    """Build a PsdFrame from a Hermitian PSD matrix.

    Eigenvalues below the rank tolerance are treated as exact zeros in all
    caches (standard truncation semantics, consistent with the rank rule);
    eigenvalues below the negative clamping window raise NotPsdError.
    """
    a = linalg.as_matrix(a, "metric")
    linalg.require_square(a, "metric")
    dec = linalg.hermitian_eig(a)
    lam = dec.eigenvalues
    v = dec.vectors
    n = a.shape[0]
    scale = float(np.max(np.abs(lam))) if n else 0.0
    tol = linalg.rank_tolerance(a, scale=scale)
    window = linalg.PSD_CLAMP_FACTOR * tol
    if n and float(lam[0]) < -window:
        raise NotPsdError(
            f"metric eigenvalue {lam[0]:.3e} below clamping window {-window:.3e}"
        )
    keep = lam > tol
    lam_eff = np.where(keep, lam, 0.0)
    rank = int(np.count_nonzero(keep))

    inv_lam = np.divide(1.0, lam_eff, out=np.zeros_like(lam_eff), where=keep)
    sqrt_lam = np.sqrt(lam_eff)
    inv_sqrt_lam = np.divide(1.0, sqrt_lam, out=np.zeros_like(lam_eff), where=keep)

    def hermitize(m):
        return 0.5 * (m + m.conj().T)

    vh = v.conj().T
    sqrt_a = hermitize((v * sqrt_lam) @ vh)
    pinv_a = hermitize((v * inv_lam) @ vh)
    pinv_sqrt_a = hermitize((v * inv_sqrt_lam) @ vh)
    projector = hermitize((v * keep.astype(float)) @ vh)

    a = a.copy()
    _freeze(a, lam_eff, v, sqrt_a, pinv_a, pinv_sqrt_a, projector)
    return PsdFrame(
        dim=n,
        a=a,
        rank=rank,
        eigenvalues=lam_eff,
        eigenvectors=v,
        sqrt_a=sqrt_a,
        pinv_sqrt_a=pinv_sqrt_a,
        pinv_a=pinv_a,
        projector=projector,
        tol=tol,
    )


def assemble_frame(dim, a, rank, eigenvalues, eigenvectors, sqrt_a,
                   pinv_sqrt_a, pinv_a, projector, tol):
    """Construct a frame from precomputed caches (used for exact blockwise
    lifts, where re-decomposing would only add roundoff)."""
    arrays = [np.array(x, dtype=np.complex128) for x in
              (a, eigenvectors, sqrt_a, pinv_sqrt_a, pinv_a, projector)]
    lam = np.array(eigenvalues, dtype=float)
    _freeze(lam, *arrays)
    a, eigenvectors, sqrt_a, pinv_sqrt_a, pinv_a, projector = arrays
    return PsdFrame(
        dim=dim, a=a, rank=rank, eigenvalues=lam, eigenvectors=eigenvectors,
        sqrt_a=sqrt_a, pinv_sqrt_a=pinv_sqrt_a, pinv_a=pinv_a,
        projector=projector, tol=tol,
    )


def _bind(frame, t):
    t = linalg.as_matrix(t, "operator")
    linalg.require_square(t, "operator")
    if t.shape[0] != frame.dim:
        raise DimensionMismatchError(
            f"operator is {t.shape[0]}x{t.shape[1]}, frame dim is {frame.dim}"
        )
    reduced = frame.sqrt_a @ t @ frame.pinv_sqrt_a
    tol = member_tol(frame, t)
    comp = np.eye(frame.dim) - frame.projector
    half_resid = linalg.frobenius(frame.sqrt_a @ t @ comp)
    la_resid = linalg.frobenius(comp @ t.conj().T @ frame.a)
    in_la_half = half_resid <= tol
    # membership in the adjointable class implies boundedness; enforcing the
    # implication keeps the flags consistent at tolerance edges
    in_la = in_la_half and la_resid <= tol
    t = t.copy()
    _freeze(t, reduced)
    return FramedOperator(frame=frame, t=t, reduced=reduced,
                          in_la=in_la, in_la_half=in_la_half)


def semi_inner(frame, x, y):
    """The metric-weighted sesquilinear form <A x, y>."""
    x = np.asarray(x, dtype=np.complex128).reshape(-1)
    y = np.asarray(y, dtype=np.complex128).reshape(-1)
    if x.shape[0] != frame.dim or y.shape[0] != frame.dim:
        raise DimensionMismatchError("vector length does not match frame dim")
    return complex(np.vdot(y, frame.a @ x))


def vector_seminorm(frame, x):
    """Seminorm ||x||_A = ||A^{1/2} x||; zero exactly on the null space."""
    x = np.asarray(x, dtype=np.complex128).reshape(-1)
    if x.shape[0] != frame.dim:
        raise DimensionMismatchError("vector length does not match frame dim")
    return float(np.linalg.norm(frame.sqrt_a @ x))


def op_seminorm(op):
    """Operator seminorm, the largest singular value of the reduced matrix.

    Raises NotABoundedError when the operator leaks out of the null space of
    the metric: the seminorm is infinite there, and the reduced matrix would
    silently report a wrong finite value.
    """
    if not op.in_la_half:
        raise NotABoundedError("operator does not map null(A) into null(A)")
    if "seminorm" not in op._cache:
        op._cache["seminorm"] = linalg.spectral_norm(op.reduced)
    return op._cache["seminorm"]


def sharp_adjoint(op):
    """The distinguished adjoint A^dagger T^H A (requires in_la)."""
    if not op.in_la:
        raise NotInLAError("operator admits no sharp adjoint for this metric")
    if "sharp" not in op._cache:
        sharp = op.frame.pinv_a @ op.t.conj().T @ op.frame.a
        sharp.setflags(write=False)
        op._cache["sharp"] = sharp
    return op._cache["sharp"]


def classify(op):
    """Structure flags relative to the metric.

    a_selfadjoint: A T is Hermitian. a_positive: A T is additionally PSD
    within the clamping window. a_unitary: the operator and its sharp
    adjoint are both isometries on the range of A, tested through
    U^# U = P = U U^#.
    """
    frame, t = op.frame, op.t
    at = frame.a @ t
    tol = member_tol(frame, t)
    selfadj = linalg.frobenius(at - at.conj().T) <= tol
    positive = False
    if selfadj:
        h = 0.5 * (at + at.conj().T)
        lam = linalg.eigvals_hermitian(h)
        scale = float(np.max(np.abs(lam))) if lam.size else 0.0
        window = linalg.PSD_CLAMP_FACTOR * linalg.rank_tolerance(h, scale=scale)
        positive = bool(lam.size == 0 or float(lam[0]) >= -window)
    unitary = False
    if op.in_la:
        sharp = sharp_adjoint(op)
        p = frame.projector
        unitary = (
            linalg.frobenius(sharp @ t - p) <= tol
            and linalg.frobenius(t @ sharp - p) <= tol
        )
    return OperatorFlags(a_selfadjoint=selfadj, a_positive=positive,
                         a_unitary=unitary)


def _cgauss(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_psd(dim, rank, seed):
    """Random metric of prescribed rank, A = B^H B with B of that rank.

    Nonzero eigenvalues are log-uniform with the largest normalized to 1,
    so the condition number on the range stays below 1e2. Deterministic for
    a given seed.
    """
    if not 1 <= rank <= dim:
        raise BadRankError(f"rank must be in 1..{dim}, got {rank}")
    rng = np.random.default_rng(seed)
    g = _cgauss(rng, (dim, dim))
    q, _ = np.linalg.qr(g)
    d = np.exp(rng.uniform(np.log(1e-2), 0.0, size=rank))
    d /= d.max()
    b = np.zeros((dim, dim), dtype=np.complex128)
    b[:rank, :] = np.sqrt(d)[:, None] * q[:, :rank].conj().T
    a = b.conj().T @ b
    a = 0.5 * (a + a.conj().T)
    return make_frame(a)


def generate(kind, frame, seed):
    """Structured random operator over a frame; deterministic per seed.

    Kinds build membership by construction, never by rejection:
      arbitrary          -- dense complex Gaussian;
      in_LA              -- A^dagger S A for Gaussian S;
      A_selfadjoint      -- A^dagger (P H P) for Gaussian Hermitian H;
      A_positive         -- same with H positive semidefinite;
      nilpotent_AT2zero  -- rank-one x y^H with disjoint supports, so T^2
                            (and hence A T^2) is exactly zero in floats.
    """
    if kind not in OPERATOR_KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {OPERATOR_KINDS}")
    rng = np.random.default_rng(seed)
    n = frame.dim
    if kind == "arbitrary":
        return frame.operator(_cgauss(rng, (n, n)))
    if kind == "in_LA":
        s = _cgauss(rng, (n, n))
        return frame.operator(frame.pinv_a @ s @ frame.a)
    if kind == "A_selfadjoint":
        g = _cgauss(rng, (n, n))
        h = 0.5 * (g + g.conj().T)
        return frame.operator(frame.pinv_a @ h @ frame.projector)
    if kind == "A_positive":
        g = _cgauss(rng, (n, n))
        w = g @ g.conj().T / n
        return frame.operator(frame.pinv_a @ w @ frame.projector)
    return _generate_nilpotent(frame, rng)


def _generate_nilpotent(frame, rng):
    """T = alpha e_c y^H with y in range(A), y_c = 0.

    Disjoint supports make every term of the matrix product T @ T an exact
    float zero, so A T^2 = 0 holds exactly, and y in range(A) keeps the
    operator adjointable. Needs rank >= 2: with a rank-one metric the range
    is a single generic line and no coordinate can be zeroed.
    """
    n, r = frame.dim, frame.rank
    if r < 2 or n < 2:
        raise UnsatisfiableKindError(
            f"no exact nilpotent instance for dim={n}, rank={r}"
        )
    diag = np.real(np.diagonal(frame.a))
    c = int(np.argmax(diag))
    basis = frame.eigenvectors[:, n - r:]  # columns spanning range(A)
    row = basis[c, :]
    denom = float(np.vdot(row, row).real)
    y = None
    for _ in range(32):
        g = _cgauss(rng, r)
        w = g if denom == 0.0 else g - row.conj() * (np.dot(row, g) / denom)
        cand = basis @ w
        cand[c] = 0.0
        nrm = np.linalg.norm(cand)
        if nrm > 1e-8:
            y = cand / nrm
            break
    if y is None:
        raise UnsatisfiableKindError(
            f"could not build a nilpotent instance for dim={n}, rank={r}"
        )
    alpha = complex(_cgauss(rng, ()))
    t = np.zeros((n, n), dtype=np.complex128)
    t[c, :] = alpha * y.conj()
    return frame.operator(t)
