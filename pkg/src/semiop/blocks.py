"""2x2 block operators over the doubled metric diag(A, A).

The lifted frame is assembled blockwise from the base frame: the doubled
metric's eigendecomposition, square root, pseudoinverse and projector are
exact block embeddings of the base caches, so no second decomposition (and
no extra roundoff) is involved.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionMismatchError, NotInLAError, SemiopError
from .frames import FramedOperator, PsdFrame, assemble_frame, sharp_adjoint

SPECIAL_UNITARIES = ("hadamard", "swap")


@dataclass(eq=False)
class BlockFrame:
    base: PsdFrame
    lifted: PsdFrame


@dataclass(eq=False)
class Block2:
    """Four n x n blocks and their assembly over the lifted frame."""

    t11: np.ndarray
    t12: np.ndarray
    t21: np.ndarray
    t22: np.ndarray
    assembled: FramedOperator
    blocks_in_la: tuple


def _blkdiag(m1, m2):
    n1, n2 = m1.shape[0], m2.shape[0]
    out = np.zeros((n1 + n2, n1 + n2), dtype=np.complex128)
    out[:n1, :n1] = m1
    out[n1:, n1:] = m2
    return out


def block_frame(base):
    """Lift a frame to dimension 2n with metric diag(A, A)."""
    n = base.dim
    lam = np.concatenate([base.eigenvalues, base.eigenvalues])
    order = np.argsort(lam, kind="stable")
    vecs = _blkdiag(base.eigenvectors, base.eigenvectors)[:, order]
    lifted = assemble_frame(
        dim=2 * n,
        a=_blkdiag(base.a, base.a),
        rank=2 * base.rank,
        eigenvalues=lam[order],
        eigenvectors=vecs,
        sqrt_a=_blkdiag(base.sqrt_a, base.sqrt_a),
        pinv_sqrt_a=_blkdiag(base.pinv_sqrt_a, base.pinv_sqrt_a),
        pinv_a=_blkdiag(base.pinv_a, base.pinv_a),
        projector=_blkdiag(base.projector, base.projector),
        tol=2.0 * base.tol,
    )
    return BlockFrame(base=base, lifted=lifted)


def assemble(t11, t12, t21, t22):
    return np.block([[t11, t12], [t21, t22]])


def block2(bf, t11, t12, t21, t22):
    """Assemble four blocks into a framed operator over the lifted metric.

    The assembly is adjointable exactly when all four blocks are; the
    per-block flags are reported alongside.
    """
    n = bf.base.dim
    mats = []
    for name, blk in (("t11", t11), ("t12", t12), ("t21", t21), ("t22", t22)):
        m = linalg.as_matrix(blk, name)
        if m.shape != (n, n):
            raise DimensionMismatchError(f"{name} must be {n}x{n}, got {m.shape}")
        mats.append(m)
    t11, t12, t21, t22 = mats
    assembled = bf.lifted.operator(assemble(t11, t12, t21, t22))
    flags = tuple(bf.base.operator(b).in_la for b in mats)
    return Block2(t11=t11, t12=t12, t21=t21, t22=t22,
                  assembled=assembled, blocks_in_la=flags)


def block_sharp(bf, b):
    """Blockwise sharp adjoint: off-diagonal blocks swap positions.

    Agrees with the sharp adjoint of the assembled operator.
    """
    if not all(b.blocks_in_la):
        raise NotInLAError("all four blocks must admit sharp adjoints")
    base = bf.base
    s11 = sharp_adjoint(base.operator(b.t11))
    s12 = sharp_adjoint(base.operator(b.t12))
    s21 = sharp_adjoint(base.operator(b.t21))
    s22 = sharp_adjoint(base.operator(b.t22))
    return block2(bf, s11, s21, s12, s22)


def special_unitary(bf, kind):
    """The two lifted-metric unitaries used throughout the block bounds:
    hadamard = (1/sqrt2) [[I, -I], [I, I]] and swap = [[0, I], [I, 0]]."""
    n = bf.base.dim
    eye = np.eye(n, dtype=np.complex128)
    zero = np.zeros((n, n), dtype=np.complex128)
    if kind == "hadamard":
        u = assemble(eye, -eye, eye, eye) / np.sqrt(2.0)
    elif kind == "swap":
        u = assemble(zero, eye, eye, zero)
    else:
        raise ValueError(f"kind must be one of {SPECIAL_UNITARIES}, got {kind!r}")
    return bf.lifted.operator(u)


def circulant_power(t1, t2, n):
    """Blocks (P, Q) of [[T1, T2], [T2, T1]]^n.

    The circulant structure is preserved under powers, with
    P + Q = (T1 + T2)^n and P - Q = (T1 - T2)^n; both identities are
    verified before returning.
    """
    t1 = linalg.as_matrix(t1, "t1")
    t2 = linalg.as_matrix(t2, "t2")
    linalg.require_square(t1, "t1")
    if t1.shape != t2.shape:
        raise DimensionMismatchError(f"blocks differ: {t1.shape} vs {t2.shape}")
    if n < 1:
        raise ValueError("power must be >= 1")
    m = t1.shape[0]
    full = np.linalg.matrix_power(assemble(t1, t2, t2, t1), n)
    p, q = full[:m, :m], full[:m, m:]
    scale = max(1.0, (linalg.frobenius(t1) + linalg.frobenius(t2)) ** n)
    plus = np.linalg.matrix_power(t1 + t2, n)
    minus = np.linalg.matrix_power(t1 - t2, n)
    if (linalg.frobenius(p + q - plus) > 1e-9 * scale
            or linalg.frobenius(p - q - minus) > 1e-9 * scale):
        raise SemiopError("circulant power identity violated beyond tolerance")
    return p, q
