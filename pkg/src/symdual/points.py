"""Fat point schemes in projective N-space.

Every question asked here reduces to the rank of an exact interpolation
matrix: the Hilbert function of a uniform fat scheme, its stabilization
index (which is the Castelnuovo-Mumford regularity of the quotient), the
initial degree of a symbolic power, and jet separation in a fixed degree.
The regularity sequence m -> reg(I^(m)) and the shifted jet separation
sequence are then dual under the sup/inf transforms, which this module
verifies index by index instead of appealing to limits.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import (
    CapExceeded,
    CertificationError,
    DuplicatePoints,
    HypothesisUnmet,
    InvalidInput,
)
from .filtrations import SymbolicPointsFiltration, alpha_seq
from .linalg import EchelonBuilder
from .numseq import (
    NEG_INF,
    IntSeqWindow,
    additivity_class,
    left_transform,
    right_transform,
)
from .polyalg import canonical_point, dim_graded, one_point_perp
from .runtime import parallel_map


@dataclass(frozen=True)
class PointConfig:
    """Distinct reduced points of P^N given by canonical coordinate tuples."""

    N: int
    points: tuple
    char: int = 0

    def __post_init__(self):
        if self.N < 1:
            raise InvalidInput("projective space dimension must be at least 1")
        pts = []
        for p in self.points:
            q = canonical_point(tuple(p), self.char)
            if len(q) != self.N + 1:
                raise InvalidInput(
                    f"point {p!r} does not have {self.N + 1} coordinates"
                )
            pts.append(q)
        if not pts:
            raise InvalidInput("need at least one point")
        if len(set(pts)) != len(pts):
            raise DuplicatePoints("points must be projectively distinct")
        object.__setattr__(self, "points", tuple(pts))

    @property
    def r(self) -> int:
        return len(self.points)

    @classmethod
    def random(cls, r: int, N: int, seed: int, height: int = 9,
               char: int = 0) -> "PointConfig":
        """Seeded configuration of r distinct small-height rational points."""
        if r < 1:
            raise InvalidInput("need at least one point")
        rng = random.Random(seed)
        pts: list = []
        seen = set()
        while len(pts) < r:
            coords = tuple(rng.randint(-height, height) for _ in range(N + 1))
            if not any(coords):
                continue
            q = canonical_point(coords, char)
            if q in seen:
                continue
            seen.add(q)
            pts.append(q)
        return cls(N, tuple(pts), char)

    def filtration(self) -> SymbolicPointsFiltration:
        return SymbolicPointsFiltration(self.points, char=self.char)

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "char": self.char,
            "points": [[str(c) for c in p] for p in self.points],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PointConfig":
        char = int(data.get("char", 0))
        pts = []
        for coords in data["points"]:
            if char == 0:
                pts.append(tuple(Fraction(c) for c in coords))
            else:
                pts.append(tuple(int(c) for c in coords))
        return cls(int(data["N"]), tuple(pts), char)


@dataclass(frozen=True)
class FatSchemeReport:
    """Hilbert data of the scheme of r points taken with multiplicity m."""

    m: int
    hilbert: IntSeqWindow
    multiplicity_e: int
    reg: int
    alpha: int

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "hilbert": self.hilbert.to_json(),
            "multiplicity_e": self.multiplicity_e,
            "reg": self.reg,
            "alpha": self.alpha,
        }


def fat_scheme_report(X: PointConfig, m: int, d_cap: int = 60) -> FatSchemeReport:
    """Hilbert function, multiplicity, regularity and initial degree.

    The Hilbert function of the quotient is nondecreasing and stops at the
    multiplicity e = r*C(m+N-1, N); the first degree where it arrives is
    the regularity of the quotient.  Raises CapExceeded when stabilization
    is not reached by d_cap.
    """
    if m < 1:
        raise InvalidInput("multiplicity must be at least 1")
    filt = X.filtration()
    nvars = X.N + 1
    e = X.r * comb(m + X.N - 1, X.N)
    vals = []
    reg = None
    for d in range(0, d_cap + 1):
        h = dim_graded(nvars, d) - filt.piece(m, d).dim
        vals.append(h)
        if h == e:
            reg = d
            break
    if reg is None:
        raise CapExceeded(
            f"hilbert function for m={m} not stabilized by degree {d_cap}"
        )
    alpha = None
    for d in range(0, reg + 2):
        full = dim_graded(nvars, d)
        h = vals[d] if d <= reg else full - filt.piece(m, d).dim
        if h < full:
            alpha = d
            break
    hil = IntSeqWindow(0, tuple(vals), certified_monotone=True)
    return FatSchemeReport(m=m, hilbert=hil, multiplicity_e=e, reg=reg,
                           alpha=alpha)


def reg_seq(X: PointConfig, m_max: int, d_cap: int = 60) -> IntSeqWindow:
    """Window of reg(I^(m)) = reg(R/I^(m)) + 1 for m = 1..m_max."""
    vals = tuple(
        fat_scheme_report(X, m, d_cap).reg + 1 for m in range(1, m_max + 1)
    )
    return IntSeqWindow(1, vals, certified_monotone=True)


def alpha_seq_points(X: PointConfig, m_max: int, d_cap: int = 60) -> IntSeqWindow:
    """Window of the initial degrees alpha(I^(m)) for m = 1..m_max."""
    return alpha_seq(X.filtration(), m_max, d_cap)


def jet_sep_direct(X: PointConfig, k: int, d: int) -> bool:
    """True when degree-d forms surject onto all k-jet spaces of X.

    The target of the jet evaluation map has dimension r*C(k+N, N); the
    map is surjective exactly when the stacked order-(k+1) vanishing
    conditions at the points are independent of that rank.
    """
    if k < 0 or d < 0:
        raise InvalidInput("jet order and degree must be nonnegative")
    target = X.r * comb(k + X.N, X.N)
    ncols = dim_graded(X.N + 1, d)
    if ncols < target:
        return False
    eb = EchelonBuilder(ncols, X.char)
    for p in X.points:
        for row in one_point_perp(p, k + 1, d).rows:
            eb.add(row)
    return eb.rank == target


def jet_sep_index(X: PointConfig, d: int, k_cap: int = 32):
    """Largest k <= k_cap separating k-jets in degree d, -inf if none.

    Separation is monotone downward in k, so the first failure certifies
    the index.  Raises CapExceeded when separation still holds at k_cap+1.
    """
    if d < 0:
        raise InvalidInput("degree must be nonnegative")
    for k in range(0, k_cap + 2):
        if not jet_sep_direct(X, k, d):
            return k - 1 if k > 0 else NEG_INF
    raise CapExceeded(f"jets still separate at k_cap={k_cap} in degree {d}")


@dataclass(frozen=True)
class AsymptoticReport:
    """Windowed duality between regularity and jet separation sequences."""

    config: dict
    m_cap: int
    d_cap: int
    reg_window: IntSeqWindow
    jet_window: IntSeqWindow
    transform_match: bool
    reverse_match: bool
    mismatches: tuple
    reg_subadditive: bool
    jet_superadditive: bool | None
    jet_window_start: int
    seshadri_lower: Fraction | None
    reg_upper: Fraction | None
    product_le_one: bool | None

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "m_cap": self.m_cap,
            "d_cap": self.d_cap,
            "reg_window": self.reg_window.to_json(),
            "jet_window": self.jet_window.to_json(),
            "transform_match": self.transform_match,
            "reverse_match": self.reverse_match,
            "mismatches": list(self.mismatches),
            "reg_subadditive": self.reg_subadditive,
            "jet_superadditive": self.jet_superadditive,
            "jet_window_start": self.jet_window_start,
            "seshadri_lower": None if self.seshadri_lower is None
            else str(self.seshadri_lower),
            "reg_upper": None if self.reg_upper is None
            else str(self.reg_upper),
            "product_le_one": self.product_le_one,
        }


def asymptotic_report(X: PointConfig, d_cap: int = 10,
                      m_cap: int = 5) -> AsymptoticReport:
    """Index-by-index duality between reg(I^(m)) and jet separation.

    Writes R_m = reg(I^(m)) and S_d = s(X, d-1) + 1 and verifies S equals
    the right transform of R and R equals the left transform of S on every
    certified index, plus the windowed additivity verdicts and the
    reciprocal one-sided bounds.  Requires r >= 2 and N >= 2.
    """
    if X.r < 2 or X.N < 2:
        raise HypothesisUnmet("duality report needs r >= 2 points in P^N, N >= 2")
    hilb_cap = max(m_cap * (X.r + 1) + 2, d_cap + 2)
    R = reg_seq(X, m_cap, hilb_cap)

    jet_vals = []
    for d in range(1, d_cap + 1):
        s = jet_sep_index(X, d - 1, k_cap=d)
        jet_vals.append(s)
    S = IntSeqWindow(
        1,
        tuple(NEG_INF if v == NEG_INF else v + 1 for v in jet_vals),
        certified_monotone=True,
    )

    mismatches = []
    rt = right_transform(R, n_max=d_cap, strict=False)
    for d in range(rt.start, rt.end + 1):
        if S.covers(d) and rt[d] != S[d]:
            mismatches.append({"side": "right", "index": d,
                               "transform": rt[d], "direct": S[d]})
    lt = left_transform(S, n_max=m_cap, strict=False)
    for k in range(lt.start, lt.end + 1):
        if R.covers(k) and lt[k] != R[k]:
            mismatches.append({"side": "left", "index": k,
                               "transform": lt[k], "direct": R[k]})
    transform_match = not any(m["side"] == "right" for m in mismatches)
    reverse_match = not any(m["side"] == "left" for m in mismatches)

    reg_subadditive = additivity_class(R).kind in ("subadditive", "both")

    d0 = R[2] if R.covers(2) else None
    jet_superadditive = None
    if d0 is not None and d0 <= d_cap:
        shifted = IntSeqWindow(
            d0, tuple(jet_vals[d - 1] for d in range(d0, d_cap + 1))
        )
        jet_superadditive = additivity_class(shifted).kind in (
            "superadditive", "both")

    seshadri_lower = None
    if d0 is not None:
        ratios = [Fraction(jet_vals[d - 1], d)
                  for d in range(d0, d_cap + 1)
                  if d - 1 < len(jet_vals) and jet_vals[d - 1] != NEG_INF]
        if ratios:
            seshadri_lower = max(ratios)
    reg_upper = None
    if m_cap >= 2:
        reg_upper = min(Fraction(R[m], m) for m in range(2, m_cap + 1))
    product_le_one = None
    if seshadri_lower is not None and reg_upper is not None:
        product_le_one = seshadri_lower * reg_upper <= 1

    return AsymptoticReport(
        config=X.to_json(),
        m_cap=m_cap,
        d_cap=d_cap,
        reg_window=R,
        jet_window=S,
        transform_match=transform_match,
        reverse_match=reverse_match,
        mismatches=tuple(mismatches),
        reg_subadditive=reg_subadditive,
        jet_superadditive=jet_superadditive,
        jet_window_start=d0 if d0 is not None else 0,
        seshadri_lower=seshadri_lower,
        reg_upper=reg_upper,
        product_le_one=product_le_one,
    )


def expected_waldschmidt(r: int, N: int) -> Fraction | None:
    """Closed-form limit of alpha(I^(m))/m for very general points, small r."""
    if r < 1 or N < 1:
        raise InvalidInput("need r >= 1 and N >= 1")
    if r == 1:
        return Fraction(1)
    if r <= N + 1:
        return Fraction(r, r - 1)
    if r == N + 2:
        return Fraction(r, r - 2)
    if r == N + 3:
        if r % 2 == 0:
            return Fraction(r - 1, r - 3)
        return Fraction(r * (r - 2), r * r - 4 * r + 2)
    return None


def expected_dual_growth(r: int, N: int) -> Fraction | None:
    """Closed-form limit of the dual socle growth for the same range of r.

    Consistent with the reciprocity B = A/(A-1) applied to the values of
    expected_waldschmidt.
    """
    A = expected_waldschmidt(r, N)
    if A is None or A == 1:
        return None
    return A / (A - 1)


def _nagata_trial(args):
    r, N, m_cap, d_cap, char, trial_seed = args
    X = PointConfig.random(r, N, seed=trial_seed, char=char)
    alphas = []
    try:
        aw = alpha_seq_points(X, m_cap, d_cap=d_cap)
        alphas = [aw[m] for m in range(1, m_cap + 1)]
    except CertificationError:
        alphas = []
    regs = []
    try:
        rw = reg_seq(X, m_cap, d_cap=d_cap)
        regs = [rw[m] for m in range(1, m_cap + 1)]
    except CertificationError:
        regs = []

    detail: dict = {"seed": trial_seed, "config": X.to_json()}
    if alphas:
        ratios = [Fraction(a, m + 1) for m, a in enumerate(alphas)]
        best = min(ratios)
        detail["alpha"] = alphas
        detail["min_alpha_ratio"] = str(best)
        detail["alpha_witness_m"] = ratios.index(best) + 1
        # alpha >= m * r^(1/N) checked exactly as alpha^N >= r * m^N
        detail["nagata_lower_ok"] = [
            a ** N >= r * (m + 1) ** N for m, a in enumerate(alphas)
        ]
    else:
        detail["alpha"] = None
    if regs:
        rratios = [Fraction(v, m + 1) for m, v in enumerate(regs)]
        detail["reg"] = regs
        detail["min_reg_ratio"] = str(min(rratios))
    else:
        detail["reg"] = None
    return detail


def nagata_check(r: int, N: int, trials: int = 3, m_cap: int = 4,
                 d_cap: int = 40, seed: int = 0) -> dict:
    """Sampled evidence report for the conjectured lower bounds.

    Each trial draws a seeded random configuration and reports window
    ratios bounding the Waldschmidt constant and the asymptotic
    regularity from above, plus exact per-m verdicts of the inequality
    alpha(I^(m)) >= m * r^(1/N).  Verdicts are reported, never asserted:
    random configurations need not be general enough.
    """
    if trials < 1:
        raise InvalidInput("need at least one trial")
    rng = random.Random(seed)
    seeds = [rng.randrange(2 ** 32) for _ in range(trials)]
    details = parallel_map(
        _nagata_trial, [(r, N, m_cap, d_cap, 0, s) for s in seeds]
    )
    ew = expected_waldschmidt(r, N)
    ed = expected_dual_growth(r, N)
    return {
        "r": r,
        "N": N,
        "trials": trials,
        "seed": seed,
        "m_cap": m_cap,
        "d_cap": d_cap,
        "expected_waldschmidt": None if ew is None else str(ew),
        "expected_dual_growth": None if ed is None else str(ed),
        "trials_detail": details,
        "note": "window ratios bound the limits one-sidedly; verdicts "
                "describe the sampled configurations only",
    }
