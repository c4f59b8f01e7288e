"""Catalog of machine-checkable inequalities and identities.

Every entry draws a randomized instance (metric frame plus structured
operators) from a per-trial RNG, evaluates one named bound or identity of
the block-operator radius theory, and returns structured slack records.

Conventions:

- Inequality checks score slack = rhs - lhs and pass when slack >= -tol.
  Certified radius terms enter through their enclosure upper ends on both
  sides, and the effective tolerance adds the induced width of every
  enclosure used, so enclosure slack can never produce a spurious failure;
  a negative-slack record means a genuine violation or a bug.
- Equality checks are encoded as lhs = |gap| (or the gap between two
  enclosures, zero when they intersect) and rhs = 0.
- The effective tolerance is base * max(1, |lhs|, |rhs|) + widths, with
  `base` chosen per law (1e-10 for exact algebra, 1e-8 for norm and radius
  identities, 1e-7 for bound checks, 1e-5 for Gelfand-estimated spectral
  radii).
- Trials whose bound is vacuous (a lower bound that is <= 0) still score
  slack but are tagged, so aggregates can report them separately.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import classical, linalg
from .blocks import assemble, block2, block_frame, block_sharp, special_unitary
from .frames import (
    classify,
    generate,
    op_seminorm,
    random_psd,
    semi_inner,
    sharp_adjoint,
    vector_seminorm,
)
from .radius import (
    RadiusConfig,
    numerical_radius,
    numerical_radius_sampled,
    spectral_radius,
)

BASE_STRICT = 1e-10
BASE_NORM = 1e-8
BASE_BOUND = 1e-7
BASE_GELFAND = 1e-5
BASE_CLASSICAL = 1e-9
BASE_ORACLE = 1e-12
BASE_PERRON = 1e-6


@dataclass
class CheckResult:
    name: str
    lhs: float
    rhs: float
    slack: float
    passed: bool
    tol_used: float
    vacuous: bool
    inputs: dict

    def to_dict(self):
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "passed": self.passed,
            "tol_used": self.tol_used,
            "vacuous": self.vacuous,
            "inputs": self.inputs,
        }


@dataclass
class TrialCtx:
    """Everything a check needs for one randomized trial."""

    rng: np.random.Generator
    dim: int
    rank: int
    rcfg: RadiusConfig
    samples: int = 2000
    tol_scale: float = 1.0
    tol_overrides: dict = field(default_factory=dict)
    perturb: float = 0.0
    inputs: dict = field(default_factory=dict)

    def _tol(self, name, base, lhs, rhs, widths):
        mult = self.tol_scale * float(self.tol_overrides.get(name, 1.0))
        return mult * base * max(1.0, abs(lhs), abs(rhs)) + widths

    def ineq(self, name, lhs, rhs, widths=0.0, base=BASE_BOUND, vacuous=False,
             **extra):
        """Record the claim lhs <= rhs."""
        rhs_eff = rhs - self.perturb
        tol = self._tol(name, base, lhs, rhs_eff, widths)
        slack = rhs_eff - lhs
        return CheckResult(name=name, lhs=float(lhs), rhs=float(rhs_eff),
                           slack=float(slack), passed=bool(slack >= -tol),
                           tol_used=float(tol), vacuous=bool(vacuous),
                           inputs={**self.inputs, **extra})

    def equal(self, name, gap, scale, widths=0.0, base=BASE_NORM, **extra):
        """Record the claim gap == 0, scored at the given magnitude scale."""
        lhs = abs(gap) + self.perturb
        tol = self.tol_scale * float(self.tol_overrides.get(name, 1.0)) \
            * base * max(1.0, abs(scale)) + widths
        return CheckResult(name=name, lhs=float(lhs), rhs=0.0,
                           slack=float(-lhs), passed=bool(lhs <= tol),
                           tol_used=float(tol), vacuous=False,
                           inputs={**self.inputs, **extra})

    # instance builders -------------------------------------------------
    def frame(self, dim=None, rank=None):
        return random_psd(dim or self.dim, rank or self.rank, self.rng)

    def ops(self, fr, count, kind="in_LA"):
        return [generate(kind, fr, self.rng) for _ in range(count)]


def _enc_gap(e1, e2):
    """Separation between two enclosures (zero when they intersect)."""
    return max(e1.lower - e2.upper, e2.lower - e1.upper, 0.0)


def _point_gap(enc, v):
    return max(enc.lower - v, v - enc.upper, 0.0)


def _rad(ctx, op):
    return numerical_radius(op, ctx.rcfg)


def _block_op(bf, t11, t12, t21, t22):
    return bf.lifted.operator(assemble(t11, t12, t21, t22))


def _offdiag_setup(ctx):
    fr = ctx.frame()
    t2, t3 = ctx.ops(fr, 2)
    bf = block_frame(fr)
    z = np.zeros((fr.dim, fr.dim), dtype=np.complex128)
    wb = _rad(ctx, _block_op(bf, z, t2.t, t3.t, z))
    return fr, bf, t2, t3, z, wb


# --- block radius bounds ------------------------------------------------

def check_offdiag_radius_upper(ctx):
    """w([[0,T2],[T3,0]]) <= min(w(T2), w(T3)) + min(||T2+T3||, ||T2-T3||)/2."""
    fr, bf, t2, t3, z, wb = _offdiag_setup(ctx)
    w2, w3 = _rad(ctx, t2), _rad(ctx, t3)
    npl = op_seminorm(fr.operator(t2.t + t3.t))
    nmi = op_seminorm(fr.operator(t2.t - t3.t))
    rhs = min(w2.upper, w3.upper) + 0.5 * min(npl, nmi)
    widths = wb.width + min(w2, w3, key=lambda e: e.upper).width
    return [ctx.ineq("offdiag_radius_upper", wb.upper, rhs, widths)]


def check_offdiag_radius_lower_max(ctx):
    """max(w(T2), w(T3)) - min(||T2+T3||, ||T2-T3||)/2 <= w(block)."""
    fr, bf, t2, t3, z, wb = _offdiag_setup(ctx)
    w2, w3 = _rad(ctx, t2), _rad(ctx, t3)
    npl = op_seminorm(fr.operator(t2.t + t3.t))
    nmi = op_seminorm(fr.operator(t2.t - t3.t))
    bound = max(w2.upper, w3.upper) - 0.5 * min(npl, nmi)
    widths = wb.width + max(w2, w3, key=lambda e: e.upper).width
    return [ctx.ineq("offdiag_radius_lower_max", bound, wb.upper, widths,
                     vacuous=bound <= 0.0)]


def check_offdiag_radius_lower_norms(ctx):
    """max(||T2+T3||, ||T2-T3||)/2 - min(w(T2), w(T3)) <= w(block)."""
    fr, bf, t2, t3, z, wb = _offdiag_setup(ctx)
    w2, w3 = _rad(ctx, t2), _rad(ctx, t3)
    npl = op_seminorm(fr.operator(t2.t + t3.t))
    nmi = op_seminorm(fr.operator(t2.t - t3.t))
    bound = 0.5 * max(npl, nmi) - min(w2.upper, w3.upper)
    widths = wb.width + min(w2, w3, key=lambda e: e.upper).width
    return [ctx.ineq("offdiag_radius_lower_norms", bound, wb.upper, widths,
                     vacuous=bound <= 0.0)]


def check_offdiag_product_lower(ctx):
    """max(w(T2T3+T3T2), w(T2T3-T3T2))/2 <= w(block)^2.

    The displayed bound's brace has no operation between its two members;
    the derivation bounds both by 2 w^2, so the max is checked.
    """
    fr, bf, t2, t3, z, wb = _offdiag_setup(ctx)
    prod = t2.t @ t3.t
    rrod = t3.t @ t2.t
    wp = _rad(ctx, fr.operator(prod + rrod))
    wm = _rad(ctx, fr.operator(prod - rrod))
    lhs = 0.5 * max(wp.upper, wm.upper)
    rhs = wb.upper ** 2
    widths = 0.5 * max(wp.width, wm.width) + (wb.upper ** 2 - wb.lower ** 2)
    return [ctx.ineq("offdiag_product_lower", lhs, rhs, widths)]


def check_fullblock_radius_lower(ctx):
    """The full-block radius dominates the diagonal radii and the
    square-rooted symmetrized products of the off-diagonal pair."""
    fr = ctx.frame()
    t1, t2, t3, t4 = ctx.ops(fr, 4)
    bf = block_frame(fr)
    wf = _rad(ctx, _block_op(bf, t1.t, t2.t, t3.t, t4.t))
    w1, w4 = _rad(ctx, t1), _rad(ctx, t4)
    prod = t2.t @ t3.t
    rrod = t3.t @ t2.t
    wp = _rad(ctx, fr.operator(prod + rrod))
    wm = _rad(ctx, fr.operator(prod - rrod))
    lhs = max(w1.upper, w4.upper,
              math.sqrt(0.5 * wp.upper), math.sqrt(0.5 * wm.upper))
    widths = (wf.width + w1.width + w4.width
              + abs(math.sqrt(0.5 * wp.upper) - math.sqrt(0.5 * wp.lower))
              + abs(math.sqrt(0.5 * wm.upper) - math.sqrt(0.5 * wm.lower)))
    return [ctx.ineq("fullblock_radius_lower", lhs, wf.upper, widths)]


def check_offdiag_power_lower(ctx):
    """max(w((T2T3)^n), w((T3T2)^n))^(1/2n) <= w(block), n in 1..3."""
    fr, bf, t2, t3, z, wb = _offdiag_setup(ctx)
    n = int(ctx.rng.integers(1, 4))
    pw = np.linalg.matrix_power
    wp = _rad(ctx, fr.operator(pw(t2.t @ t3.t, n)))
    wq = _rad(ctx, fr.operator(pw(t3.t @ t2.t, n)))
    root = lambda x: x ** (1.0 / (2 * n))
    lhs = root(max(wp.upper, wq.upper))
    widths = wb.width + abs(root(max(wp.upper, wq.upper))
                            - root(max(wp.lower, wq.lower)))
    return [ctx.ineq("offdiag_power_lower", lhs, wb.upper, widths, n=n)]


def check_pm_power_lower(ctx):
    """For B = [[T1,T2],[-T2,-T1]]: the 2n-th root of the radius of the
    alternating products ((T1-T2)(T1+T2))^n dominates from below."""
    fr = ctx.frame()
    t1, t2 = ctx.ops(fr, 2)
    bf = block_frame(fr)
    wb = _rad(ctx, _block_op(bf, t1.t, t2.t, -t2.t, -t1.t))
    n = int(ctx.rng.integers(1, 3))
    s = t1.t + t2.t
    d = t1.t - t2.t
    pw = np.linalg.matrix_power
    wp = _rad(ctx, fr.operator(pw(d @ s, n)))
    wq = _rad(ctx, fr.operator(pw(s @ d, n)))
    root = lambda x: x ** (1.0 / (2 * n))
    lhs = root(max(wp.upper, wq.upper))
    widths = wb.width + abs(root(max(wp.upper, wq.upper))
                            - root(max(wp.lower, wq.lower)))
    return [ctx.ineq("pm_power_lower", lhs, wb.upper, widths, n=n)]


def check_pm_norm_upper(ctx):
    """For B = [[T1,T2],[-T2,-T1]]: the radius upper bound through the
    norm and square-norm of B, plus the two norm identities it rests on."""
    fr = ctx.frame()
    t1, t2 = ctx.ops(fr, 2)
    bf = block_frame(fr)
    bop = _block_op(bf, t1.t, t2.t, -t2.t, -t1.t)
    wb = _rad(ctx, bop)
    s = t1.t + t2.t
    d = t1.t - t2.t
    ns = op_seminorm(fr.operator(s))
    nd = op_seminorm(fr.operator(d))
    nsd = op_seminorm(fr.operator(s @ d))
    nds = op_seminorm(fr.operator(d @ s))
    rhs = 0.5 * max(ns, nd) + 0.5 * math.sqrt(max(nsd, nds))
    out = [ctx.ineq("pm_norm_upper", wb.upper, rhs, wb.width)]
    nb = op_seminorm(bop)
    out.append(ctx.equal("pm_block_norm_identity", nb - max(ns, nd),
                         scale=max(ns, nd)))
    nb2 = op_seminorm(bf.lifted.operator(bop.t @ bop.t))
    out.append(ctx.equal("pm_block_square_norm_identity",
                         nb2 - max(nsd, nds), scale=max(nsd, nds)))
    return out


def check_product_radius_upper(ctx):
    """w(T1 T2) <= (||T2 T1|| + ||T1|| ||T2||) / 2."""
    fr = ctx.frame()
    t1, t2 = ctx.ops(fr, 2)
    w12 = _rad(ctx, fr.operator(t1.t @ t2.t))
    n21 = op_seminorm(fr.operator(t2.t @ t1.t))
    rhs = 0.5 * (n21 + op_seminorm(t1) * op_seminorm(t2))
    return [ctx.ineq("product_radius_upper", w12.upper, rhs, w12.width)]


# --- frame identities ---------------------------------------------------

def check_reduction_homomorphism(ctx):
    """reduced(T S) = reduced(T) reduced(S) for A-bounded T, S."""
    fr = ctx.frame()
    t, s = ctx.ops(fr, 2)
    lhs = fr.operator(t.t @ s.t).reduced
    rhs = t.reduced @ s.reduced
    scale = 1.0 + linalg.frobenius(t.reduced) * linalg.frobenius(s.reduced)
    return [ctx.equal("reduction_homomorphism",
                      linalg.frobenius(lhs - rhs), scale, base=BASE_STRICT)]


def check_double_sharp_projection(ctx):
    """(T^#)^# equals P T P."""
    fr = ctx.frame()
    t, = ctx.ops(fr, 1)
    dd = sharp_adjoint(fr.operator(sharp_adjoint(t)))
    ptp = fr.projector @ t.t @ fr.projector
    scale = 1.0 + linalg.frobenius(t.t)
    return [ctx.equal("double_sharp_projection",
                      linalg.frobenius(dd - ptp), scale, base=BASE_STRICT)]


def check_sharp_norm_chain(ctx):
    """||T^# T|| = ||T T^#|| = ||T||^2 = ||T^#||^2 = w(T T^#) = w(T^# T)."""
    fr = ctx.frame()
    t, = ctx.ops(fr, 1)
    sharp = sharp_adjoint(t)
    nt2 = op_seminorm(t) ** 2
    prod = fr.operator(sharp @ t.t)
    swap = fr.operator(t.t @ sharp)
    wp, ws = _rad(ctx, prod), _rad(ctx, swap)
    return [
        ctx.equal("sharp_chain_product_norm", op_seminorm(prod) - nt2, nt2),
        ctx.equal("sharp_chain_swap_norm", op_seminorm(swap) - nt2, nt2),
        ctx.equal("sharp_chain_adjoint_norm",
                  op_seminorm(fr.operator(sharp)) ** 2 - nt2, nt2),
        ctx.equal("sharp_chain_product_radius", _point_gap(wp, nt2), nt2,
                  widths=wp.width),
        ctx.equal("sharp_chain_swap_radius", _point_gap(ws, nt2), nt2,
                  widths=ws.width),
    ]


def check_adjoint_rules(ctx):
    """(T S)^# = S^# T^# and (T + S)^# = T^# + S^#."""
    fr = ctx.frame()
    t, s = ctx.ops(fr, 2)
    st, ss = sharp_adjoint(t), sharp_adjoint(s)
    prod_gap = linalg.frobenius(
        sharp_adjoint(fr.operator(t.t @ s.t)) - ss @ st)
    sum_gap = linalg.frobenius(
        sharp_adjoint(fr.operator(t.t + s.t)) - (st + ss))
    scale = 1.0 + linalg.frobenius(st) * linalg.frobenius(ss)
    return [
        ctx.equal("adjoint_product_rule", prod_gap, scale, base=BASE_STRICT),
        ctx.equal("adjoint_sum_rule", sum_gap, scale, base=BASE_STRICT),
    ]


def check_seminorm_submultiplicative(ctx):
    """||T S|| <= ||T|| ||S|| and ||T x||_A <= ||T|| ||x||_A."""
    fr = ctx.frame()
    t, s = ctx.ops(fr, 2)
    nt, ns = op_seminorm(t), op_seminorm(s)
    nts = op_seminorm(fr.operator(t.t @ s.t))
    x = (ctx.rng.standard_normal(fr.dim)
         + 1j * ctx.rng.standard_normal(fr.dim))
    return [
        ctx.ineq("seminorm_submultiplicative", nts, nt * ns, base=BASE_NORM),
        ctx.ineq("seminorm_vector_bound", vector_seminorm(fr, t.t @ x),
                 nt * vector_seminorm(fr, x), base=BASE_NORM),
    ]


def check_cauchy_schwarz(ctx):
    """|<x, y>_A| <= ||x||_A ||y||_A."""
    fr = ctx.frame()
    x = ctx.rng.standard_normal(fr.dim) + 1j * ctx.rng.standard_normal(fr.dim)
    y = ctx.rng.standard_normal(fr.dim) + 1j * ctx.rng.standard_normal(fr.dim)
    lhs = abs(semi_inner(fr, x, y))
    rhs = vector_seminorm(fr, x) * vector_seminorm(fr, y)
    return [ctx.ineq("cauchy_schwarz", lhs, rhs, base=BASE_STRICT)]


# --- radius laws --------------------------------------------------------

def check_radius_norm_sandwich(ctx):
    """||T||/2 <= w(T) <= ||T||."""
    fr = ctx.frame()
    t, = ctx.ops(fr, 1)
    w = _rad(ctx, t)
    nt = op_seminorm(t)
    return [
        ctx.ineq("radius_sandwich_lower", 0.5 * nt, w.upper, w.width,
                 base=BASE_NORM),
        ctx.ineq("radius_sandwich_upper", w.upper, nt, w.width,
                 base=BASE_NORM),
    ]


def check_selfadjoint_radius(ctx):
    """For selfadjoint operators the seminorm, the numerical radius and the
    spectral radius coincide (the spectral leg at Gelfand accuracy)."""
    fr = ctx.frame()
    t = generate("A_selfadjoint", fr, ctx.rng)
    w = _rad(ctx, t)
    nt = op_seminorm(t)
    r = spectral_radius(t, ctx.rcfg)
    return [
        ctx.equal("selfadjoint_radius_norm", _point_gap(w, nt), nt,
                  widths=w.width),
        ctx.equal("selfadjoint_radius_spectral", _point_gap(w, r), nt,
                  widths=w.width, base=BASE_GELFAND),
    ]


def check_radius_power_inequality(ctx):
    """w(T^n) <= w(T)^n for n in 2..4."""
    fr = ctx.frame()
    t, = ctx.ops(fr, 1)
    n = int(ctx.rng.integers(2, 5))
    w = _rad(ctx, t)
    wn = _rad(ctx, fr.operator(np.linalg.matrix_power(t.t, n)))
    widths = wn.width + abs(w.upper ** n - w.lower ** n)
    return [ctx.ineq("radius_power_inequality", wn.upper, w.upper ** n,
                     widths, base=BASE_NORM, n=n)]


def check_adjoint_radius_invariance(ctx):
    """w(T) = w(T^#)."""
    fr = ctx.frame()
    t, = ctx.ops(fr, 1)
    w = _rad(ctx, t)
    ws = _rad(ctx, fr.operator(sharp_adjoint(t)))
    return [ctx.equal("adjoint_radius_invariance", _enc_gap(w, ws),
                      max(w.upper, ws.upper), widths=w.width + ws.width)]


def check_weak_unitary_invariance(ctx):
    """w(U^# T U) = w(T) for metric unitaries: a conjugated unitary on an
    invertible metric, and the hadamard/swap block unitaries on the
    (possibly singular) doubled metric."""
    out = []
    # invertible metric: U = A^{-1/2} Q A^{1/2} with Q unitary
    fr = ctx.frame(rank=ctx.dim)
    t, = ctx.ops(fr, 1)
    g = (ctx.rng.standard_normal((fr.dim, fr.dim))
         + 1j * ctx.rng.standard_normal((fr.dim, fr.dim)))
    q, _ = np.linalg.qr(g)
    u = fr.operator(fr.pinv_sqrt_a @ q @ fr.sqrt_a)
    conj = fr.operator(sharp_adjoint(u) @ t.t @ u.t)
    w, wc = _rad(ctx, t), _rad(ctx, conj)
    out.append(ctx.equal("weak_unitary_invariance_conjugation",
                         _enc_gap(w, wc), max(w.upper, wc.upper),
                         widths=w.width + wc.width))
    # singular doubled metric with the special block unitaries
    fr2 = ctx.frame()
    bf = block_frame(fr2)
    tb = bf.lifted.operator(assemble(*(o.t for o in ctx.ops(fr2, 4))))
    wt = _rad(ctx, tb)
    for kind in ("hadamard", "swap"):
        u = special_unitary(bf, kind)
        conj = bf.lifted.operator(sharp_adjoint(u) @ tb.t @ u.t)
        wc = _rad(ctx, conj)
        out.append(ctx.equal(f"weak_unitary_invariance_{kind}",
                             _enc_gap(wt, wc), max(wt.upper, wc.upper),
                             widths=wt.width + wc.width))
    return out


def check_spectral_radius_commutativity(ctx):
    """r(T S) = r(S T)."""
    fr = ctx.frame()
    t, s = ctx.ops(fr, 2)
    rts = spectral_radius(fr.operator(t.t @ s.t), ctx.rcfg)
    rst = spectral_radius(fr.operator(s.t @ t.t), ctx.rcfg)
    return [ctx.equal("spectral_radius_commutativity", rts - rst,
                      max(rts, rst), base=BASE_GELFAND)]


def check_nilpotent_radius_halving(ctx):
    """When A T^2 = 0 the radius equals half the seminorm."""
    fr = ctx.frame(rank=max(2, ctx.rank))
    t = generate("nilpotent_AT2zero", fr, ctx.rng)
    w = _rad(ctx, t)
    half = 0.5 * op_seminorm(t)
    return [ctx.equal("nilpotent_radius_halving", _point_gap(w, half), half,
                      widths=w.width)]


def check_radius_norm_power_bound(ctx):
    """w(T) <= (||T|| + ||T^2||^(1/2)) / 2."""
    fr = ctx.frame()
    t, = ctx.ops(fr, 1)
    w = _rad(ctx, t)
    rhs = 0.5 * (op_seminorm(t)
                 + math.sqrt(op_seminorm(fr.operator(t.t @ t.t))))
    return [ctx.ineq("radius_norm_power_bound", w.upper, rhs, w.width,
                     base=BASE_NORM)]


def check_spectral_radius_below_radius(ctx):
    """r(T) <= w(T)."""
    fr = ctx.frame()
    t, = ctx.ops(fr, 1)
    r = spectral_radius(t, ctx.rcfg)
    w = _rad(ctx, t)
    return [ctx.ineq("spectral_radius_below_radius", r, w.upper, w.width,
                     base=BASE_GELFAND)]


def check_sampled_radius_consistency(ctx):
    """The sampled supremum never exceeds the certified upper bound."""
    fr = ctx.frame()
    t, = ctx.ops(fr, 1)
    w = _rad(ctx, t)
    seed = int(ctx.rng.integers(0, 2**63))
    cfg = RadiusConfig(rel_width=ctx.rcfg.rel_width, grid=ctx.rcfg.grid,
                       rounds=ctx.rcfg.rounds,
                       refine_factor=ctx.rcfg.refine_factor,
                       samples=ctx.samples,
                       gelfand_depth=ctx.rcfg.gelfand_depth)
    s = numerical_radius_sampled(t, cfg, seed=seed)
    return [ctx.ineq("sampled_radius_consistency", s, w.upper,
                     base=BASE_ORACLE)]


# --- block laws ---------------------------------------------------------

def check_block_diag_radius_max(ctx):
    """w(diag(T1, T2)) = max(w(T1), w(T2))."""
    fr = ctx.frame()
    t1, t2 = ctx.ops(fr, 2)
    bf = block_frame(fr)
    z = np.zeros((fr.dim, fr.dim), dtype=np.complex128)
    wb = _rad(ctx, _block_op(bf, t1.t, z, z, t2.t))
    w1, w2 = _rad(ctx, t1), _rad(ctx, t2)
    lo = max(w1.lower, w2.lower)
    hi = max(w1.upper, w2.upper)
    gap = max(lo - wb.upper, wb.lower - hi, 0.0)
    return [ctx.equal("block_diag_radius_max", gap, hi,
                      widths=wb.width + w1.width + w2.width)]


def check_offdiag_swap_symmetry(ctx):
    """w([[0,T1],[T2,0]]) = w([[0,T2],[T1,0]])."""
    fr = ctx.frame()
    t1, t2 = ctx.ops(fr, 2)
    bf = block_frame(fr)
    z = np.zeros((fr.dim, fr.dim), dtype=np.complex128)
    wa = _rad(ctx, _block_op(bf, z, t1.t, t2.t, z))
    wb = _rad(ctx, _block_op(bf, z, t2.t, t1.t, z))
    return [ctx.equal("offdiag_swap_symmetry", _enc_gap(wa, wb),
                      max(wa.upper, wb.upper), widths=wa.width + wb.width)]


def check_offdiag_phase_invariance(ctx):
    """Scaling one off-diagonal block by a unit phase leaves the block
    radius unchanged; scored as the worst gap over 8 random phases."""
    fr = ctx.frame()
    t1, t2 = ctx.ops(fr, 2)
    bf = block_frame(fr)
    z = np.zeros((fr.dim, fr.dim), dtype=np.complex128)
    wb = _rad(ctx, _block_op(bf, z, t1.t, t2.t, z))
    worst = 0.0
    widths = wb.width
    for theta in ctx.rng.uniform(0.0, 2.0 * math.pi, size=8):
        wp = _rad(ctx, _block_op(bf, z, t1.t, np.exp(1j * theta) * t2.t, z))
        worst = max(worst, _enc_gap(wb, wp))
        widths = max(widths, wb.width + wp.width)
    return [ctx.equal("offdiag_phase_invariance", worst, wb.upper,
                      widths=widths, thetas=8)]


def check_circulant_block_radius(ctx):
    """w([[T1,T2],[T2,T1]]) = max(w(T1+T2), w(T1-T2)); in particular the
    symmetric off-diagonal block has radius w(T2)."""
    fr = ctx.frame()
    t1, t2 = ctx.ops(fr, 2)
    bf = block_frame(fr)
    wb = _rad(ctx, _block_op(bf, t1.t, t2.t, t2.t, t1.t))
    wp = _rad(ctx, fr.operator(t1.t + t2.t))
    wm = _rad(ctx, fr.operator(t1.t - t2.t))
    lo, hi = max(wp.lower, wm.lower), max(wp.upper, wm.upper)
    gap = max(lo - wb.upper, wb.lower - hi, 0.0)
    out = [ctx.equal("circulant_radius_max", gap, hi,
                     widths=wb.width + wp.width + wm.width)]
    z = np.zeros((fr.dim, fr.dim), dtype=np.complex128)
    ws = _rad(ctx, _block_op(bf, z, t2.t, t2.t, z))
    w2 = _rad(ctx, t2)
    out.append(ctx.equal("offdiag_symmetric_radius", _enc_gap(ws, w2),
                         max(ws.upper, w2.upper),
                         widths=ws.width + w2.width))
    return out


def check_block_part_domination(ctx):
    """The diagonal part and the off-diagonal part are both dominated by
    the full block in radius."""
    fr = ctx.frame()
    t1, t2, t3, t4 = ctx.ops(fr, 4)
    bf = block_frame(fr)
    z = np.zeros((fr.dim, fr.dim), dtype=np.complex128)
    wf = _rad(ctx, _block_op(bf, t1.t, t2.t, t3.t, t4.t))
    wd = _rad(ctx, _block_op(bf, t1.t, z, z, t4.t))
    wo = _rad(ctx, _block_op(bf, z, t2.t, t3.t, z))
    return [
        ctx.ineq("diag_part_dominated", wd.upper, wf.upper,
                 wd.width + wf.width, base=BASE_NORM),
        ctx.ineq("offdiag_part_dominated", wo.upper, wf.upper,
                 wo.width + wf.width, base=BASE_NORM),
    ]


def check_block_nilpotent_identity(ctx):
    """w([[T,T],[-T,-T]]) = ||T|| and the doubled metric annihilates the
    block's square."""
    fr = ctx.frame()
    t, = ctx.ops(fr, 1)
    bf = block_frame(fr)
    bop = _block_op(bf, t.t, t.t, -t.t, -t.t)
    wb = _rad(ctx, bop)
    nt = op_seminorm(t)
    sq_resid = linalg.frobenius(bf.lifted.a @ (bop.t @ bop.t))
    return [
        ctx.equal("block_nilpotent_identity", _point_gap(wb, nt), nt,
                  widths=wb.width),
        ctx.equal("block_nilpotent_square", sq_resid,
                  linalg.frobenius(bop.t) ** 2, base=BASE_STRICT),
    ]


def check_block_spectral_domination(ctx):
    """r(block) is dominated by the Perron root of the 2x2 matrix of block
    seminorms."""
    fr = ctx.frame()
    t1, t2, t3, t4 = ctx.ops(fr, 4)
    bf = block_frame(fr)
    bop = _block_op(bf, t1.t, t2.t, t3.t, t4.t)
    r = spectral_radius(bop, ctx.rcfg)
    perron = linalg.nonneg2x2_spectral_radius(
        op_seminorm(t1), op_seminorm(t2), op_seminorm(t3), op_seminorm(t4))
    return [ctx.ineq("block_spectral_domination", r, perron,
                     base=BASE_GELFAND)]


def check_block_sharp_identity(ctx):
    """The blockwise sharp adjoint equals the sharp adjoint of the
    assembled operator."""
    fr = ctx.frame()
    t1, t2, t3, t4 = ctx.ops(fr, 4)
    bf = block_frame(fr)
    b = block2(bf, t1.t, t2.t, t3.t, t4.t)
    bs = block_sharp(bf, b)
    gap = linalg.frobenius(bs.assembled.t - sharp_adjoint(b.assembled))
    scale = 1.0 + linalg.frobenius(b.assembled.t)
    return [ctx.equal("block_sharp_identity", gap, scale, base=BASE_STRICT)]


def check_block_norm_max_law(ctx):
    """Diagonal and antidiagonal two-block assemblies both have seminorm
    max(||T1||, ||T4||)."""
    fr = ctx.frame()
    t1, t4 = ctx.ops(fr, 2)
    bf = block_frame(fr)
    z = np.zeros((fr.dim, fr.dim), dtype=np.complex128)
    nm = max(op_seminorm(t1), op_seminorm(t4))
    nd = op_seminorm(_block_op(bf, t1.t, z, z, t4.t))
    na = op_seminorm(_block_op(bf, z, t1.t, t4.t, z))
    return [
        ctx.equal("block_diag_norm_law", nd - nm, nm),
        ctx.equal("block_antidiag_norm_law", na - nm, nm),
    ]


# --- kernel properties and the classical limit --------------------------

def check_kernel_properties(ctx):
    """Reconstruction, pseudoinverse axioms, PSD square root, and the
    closed-form Perron root against its own Gelfand iteration."""
    n = ctx.dim
    rng = ctx.rng
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    h = 0.5 * (g + g.conj().T)
    dec = linalg.hermitian_eig(h)
    rec = (dec.vectors * dec.eigenvalues) @ dec.vectors.conj().T
    scale = max(1.0, linalg.frobenius(h))
    out = [ctx.equal("eig_reconstruction", linalg.frobenius(rec - h),
                     scale, base=BASE_STRICT)]

    # rank-deficient instance with controlled conditioning on the range
    r = max(1, ctx.rank)
    qu, _ = np.linalg.qr(rng.standard_normal((n, n))
                         + 1j * rng.standard_normal((n, n)))
    qv, _ = np.linalg.qr(rng.standard_normal((n, n))
                         + 1j * rng.standard_normal((n, n)))
    sig = np.zeros(n)
    sig[:r] = np.exp(rng.uniform(np.log(1e-3), 0.0, size=r))
    m = (qu * sig) @ qv.conj().T
    x = linalg.pinv(m)
    resid = max(
        linalg.frobenius(m @ x @ m - m),
        linalg.frobenius(x @ m @ x - x),
        linalg.frobenius(m @ x - (m @ x).conj().T),
        linalg.frobenius(x @ m - (x @ m).conj().T),
    )
    out.append(ctx.equal("pinv_axioms", resid,
                         max(1.0, linalg.frobenius(m)), base=BASE_STRICT))

    psd = (qu * sig) @ (qu * sig).conj().T
    psd = 0.5 * (psd + psd.conj().T)
    root = linalg.psd_sqrt(psd)
    out.append(ctx.equal("psd_sqrt_square",
                         linalg.frobenius(root @ root - psd),
                         max(1.0, linalg.frobenius(psd)), base=BASE_STRICT))

    a, bb, c, d = rng.uniform(0.0, 2.0, size=4)
    perron = linalg.nonneg2x2_spectral_radius(a, bb, c, d)
    mat = np.array([[a, bb], [c, d]], dtype=np.complex128)
    acc, cur = 0.0, mat
    for j in range(40):
        nrm = linalg.frobenius(cur)
        if nrm == 0.0:
            acc, cur = None, None
            break
        acc += math.log(nrm) / 2.0 ** j
        cur = (cur / nrm) @ (cur / nrm)
    gel = 0.0 if acc is None else math.exp(
        acc + math.log(max(linalg.frobenius(cur), 1e-300)) / 2.0 ** 40)
    out.append(ctx.equal("perron_gelfand_agreement", perron - gel,
                         max(1.0, perron), base=BASE_PERRON))
    return out


def check_classical_limit(ctx):
    """With the identity metric every quantity must agree with the
    frame-free classical implementation."""
    from .frames import make_frame
    n = ctx.dim
    fr = make_frame(np.eye(n))
    g = (ctx.rng.standard_normal((n, n))
         + 1j * ctx.rng.standard_normal((n, n)))
    t = fr.operator(g)
    nt = op_seminorm(t)
    nc = classical.spectral_norm(g)
    w = _rad(ctx, t)
    lo, hi = classical.numerical_radius(g, grid=ctx.rcfg.grid,
                                        rounds=ctx.rcfg.rounds)
    gap = max(w.lower - hi, lo - w.upper, 0.0)
    r = spectral_radius(t, ctx.rcfg)
    rc = classical.spectral_radius(g)
    return [
        ctx.equal("classical_norm_agreement", nt - nc, max(1.0, nc),
                  base=BASE_CLASSICAL),
        ctx.equal("classical_radius_agreement", gap, max(1.0, hi),
                  widths=w.width + (hi - lo), base=BASE_CLASSICAL),
        ctx.equal("classical_spectral_agreement", r - rc, max(1.0, rc),
                  base=BASE_CLASSICAL),
    ]


CATALOG = {
    "offdiag_radius_upper": check_offdiag_radius_upper,
    "offdiag_radius_lower_max": check_offdiag_radius_lower_max,
    "offdiag_radius_lower_norms": check_offdiag_radius_lower_norms,
    "offdiag_product_lower": check_offdiag_product_lower,
    "fullblock_radius_lower": check_fullblock_radius_lower,
    "offdiag_power_lower": check_offdiag_power_lower,
    "pm_power_lower": check_pm_power_lower,
    "pm_norm_upper": check_pm_norm_upper,
    "product_radius_upper": check_product_radius_upper,
    "reduction_homomorphism": check_reduction_homomorphism,
    "double_sharp_projection": check_double_sharp_projection,
    "sharp_norm_chain": check_sharp_norm_chain,
    "adjoint_rules": check_adjoint_rules,
    "seminorm_submultiplicative": check_seminorm_submultiplicative,
    "cauchy_schwarz": check_cauchy_schwarz,
    "radius_norm_sandwich": check_radius_norm_sandwich,
    "selfadjoint_radius": check_selfadjoint_radius,
    "radius_power_inequality": check_radius_power_inequality,
    "adjoint_radius_invariance": check_adjoint_radius_invariance,
    "weak_unitary_invariance": check_weak_unitary_invariance,
    "spectral_radius_commutativity": check_spectral_radius_commutativity,
    "nilpotent_radius_halving": check_nilpotent_radius_halving,
    "radius_norm_power_bound": check_radius_norm_power_bound,
    "spectral_radius_below_radius": check_spectral_radius_below_radius,
    "sampled_radius_consistency": check_sampled_radius_consistency,
    "block_diag_radius_max": check_block_diag_radius_max,
    "offdiag_swap_symmetry": check_offdiag_swap_symmetry,
    "offdiag_phase_invariance": check_offdiag_phase_invariance,
    "circulant_block_radius": check_circulant_block_radius,
    "block_part_domination": check_block_part_domination,
    "block_nilpotent_identity": check_block_nilpotent_identity,
    "block_spectral_domination": check_block_spectral_domination,
    "block_sharp_identity": check_block_sharp_identity,
    "block_norm_max_law": check_block_norm_max_law,
    "kernel_properties": check_kernel_properties,
    "classical_limit": check_classical_limit,
}
