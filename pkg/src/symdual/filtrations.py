"""Graded ideal filtrations, their inverse systems, and duality reports.

A filtration oracle answers piece(n, d) = (I_n)_d as a graded subspace of
R_d, with I_0 = R.  The level-s inverse system has degree-d component

    L^s_d = ((I_{d-s})_d)^perp  inside the divided power algebra,

so the quotient D_d / L^s_d is dual to (I_{d-s})_d.  For differentially
closed filtrations L^s is an ideal of the divided power algebra, the
socle degree beta_s = max{d : (I_{d-s})_d != 0} is finite, and beta and
the initial-degree sequence alpha determine each other through the
sup/inf transforms of gamma = alpha - id.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import linalg, polyalg
from .errors import (
    CharZero,
    DegreeCapExceeded,
    DuplicatePoints,
    HypothesisUnmet,
    InvalidInput,
    Mismatch,
)
from .numseq import (
    NEG_INF,
    IntSeqWindow,
    additivity_class,
    growth_window,
    left_transform,
    offset_window,
    right_transform,
)
from .polyalg import (
    DividedPoly,
    GradedSubspace,
    Poly,
    canonical_point,
    diff_apply,
    monomial_basis,
    one_point_perp,
    parse_poly,
)
from .scalars import FieldScalar, multi_binomial, validate_char, vec_leq, vec_sub


class FiltrationOracle:
    """Base class: a decreasing chain of graded ideals, queried degreewise."""

    kind = "abstract"

    def __init__(self, char: int, nvars: int):
        validate_char(char)
        if nvars < 1:
            raise InvalidInput("need at least one variable")
        self.char = char
        self.nvars = nvars
        self._pieces: dict = {}

    def piece(self, n: int, d: int) -> GradedSubspace:
        """(I_n)_d; the full R_d when n <= 0, zero when d < 0."""
        if d < 0:
            return GradedSubspace.zero(self.char, self.nvars, d)
        if n <= 0:
            return GradedSubspace.full(self.char, self.nvars, d)
        key = (n, d)
        got = self._pieces.get(key)
        if got is None:
            got = self._compute_piece(n, d)
            self._pieces[key] = got
        return got

    def _compute_piece(self, n: int, d: int) -> GradedSubspace:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    def _span(self, vectors, d: int) -> GradedSubspace:
        """Span of an iterable of degree-d coefficient vectors, stopping
        early once the whole of R_d is reached."""
        ncols = polyalg.dim_graded(self.nvars, d)
        b = linalg.EchelonBuilder(ncols, self.char)
        for v in vectors:
            b.add(v)
            if b.is_full():
                return GradedSubspace.full(self.char, self.nvars, d)
        rows, pivots = b.finish()
        return GradedSubspace(self.char, self.nvars, d, False, rows, pivots)

    def _gens_span(self, gens, d: int) -> GradedSubspace:
        def vecs():
            for g in gens:
                dg = g.homogeneous_degree()
                if dg > d:
                    continue
                for m in monomial_basis(self.nvars, d - dg):
                    yield (g * Poly.monomial(m, 1, self.char)).coefficient_vector(d)
        return self._span(vecs(), d)


def _check_generators(gens, char, nvars):
    gens = list(gens)
    if not gens:
        raise InvalidInput("need at least one generator")
    out = []
    for g in gens:
        if isinstance(g, str):
            g = parse_poly(g, nvars, char)
        if type(g) is not Poly:
            raise InvalidInput("generators must be polynomials")
        if g.char != char or g.nvars != nvars:
            raise Mismatch("generator ring differs from the filtration's")
        if not g:
            raise InvalidInput("zero generator")
        g.homogeneous_degree()
        out.append(g)
    return out


class PowerFiltration(FiltrationOracle):
    """I_n = I^n for a fixed homogeneous ideal I."""

    kind = "powers"

    def __init__(self, generators, char: int = 0, nvars: int | None = None):
        if nvars is None:
            first = next(iter(generators))
            if isinstance(first, str):
                raise InvalidInput("string generators need an explicit nvars")
            char, nvars = first.char, first.nvars
        super().__init__(char, nvars)
        self.generators = tuple(_check_generators(generators, char, nvars))
        self.gen_degrees = tuple(g.homogeneous_degree() for g in self.generators)
        self.min_degree = min(self.gen_degrees)

    def _compute_piece(self, n: int, d: int) -> GradedSubspace:
        if d < n * self.min_degree:
            return GradedSubspace.zero(self.char, self.nvars, d)

        def vecs():
            for g, dg in zip(self.generators, self.gen_degrees):
                prev = self.piece(n - 1, d - dg)
                for f in prev.basis_polys():
                    yield (g * f).coefficient_vector(d)

        return self._span(vecs(), d)

    def descriptor(self) -> dict:
        return {
            "kind": self.kind,
            "char": self.char,
            "nvars": self.nvars,
            "generators": [str(g) for g in self.generators],
        }


class SymbolicPointsFiltration(FiltrationOracle):
    """I_n = intersection of the n-th powers of the ideals of finitely
    many distinct points of projective N-space."""

    kind = "symbolic-points"

    def __init__(self, points, char: int = 0, nvars: int | None = None):
        pts = []
        for p in points:
            coords = tuple(p)
            if coords and isinstance(coords[0], FieldScalar):
                pts.append(canonical_point(coords, coords[0].char))
            else:
                pts.append(canonical_point(coords, char))
        if not pts:
            raise InvalidInput("need at least one point")
        if nvars is None:
            nvars = len(pts[0])
        char = pts[0][0].char
        super().__init__(char, nvars)
        for p in pts:
            if len(p) != nvars:
                raise Mismatch("points of different projective spaces")
        if len(set(pts)) != len(pts):
            raise DuplicatePoints("points must be pairwise distinct")
        self.points = tuple(pts)

    def _compute_piece(self, n: int, d: int) -> GradedSubspace:
        def rows():
            for p in self.points:
                yield from one_point_perp(p, n, d).rows

        return GradedSubspace.from_conditions(rows(), self.char, self.nvars, d)

    def descriptor(self) -> dict:
        return {
            "kind": self.kind,
            "char": self.char,
            "N": self.nvars - 1,
            "points": [[str(c.value) for c in p] for p in self.points],
        }


class FrobeniusIntegralFiltration(FiltrationOracle):
    """Base-p digit filtration in characteristic p:

    for n = sum c_i p^i (0 <= c_i < p), I_n is the product over i of the
    c_i-th power of the Frobenius power I^[p^i] = (g^{p^i} : g in gens).
    """

    kind = "frobenius"

    def __init__(self, generators, char: int | None = None, nvars: int | None = None):
        if nvars is None:
            first = next(iter(generators))
            if isinstance(first, str):
                raise InvalidInput("string generators need an explicit nvars")
            char, nvars = first.char, first.nvars
        if not char:
            raise CharZero("the Frobenius filtration needs positive characteristic")
        super().__init__(char, nvars)
        self.generators = tuple(_check_generators(generators, char, nvars))
        self._level_gens_memo: dict = {}

    def _level_gens(self, n: int):
        got = self._level_gens_memo.get(n)
        if got is not None:
            return got
        p = self.char
        digit_factors = []
        i = 0
        m = n
        while m:
            c = m % p
            m //= p
            if c:
                frob = [g ** (p**i) for g in self.generators]
                digit_factors.append(
                    [_prod(pick) for pick in
                     itertools.combinations_with_replacement(frob, c)]
                )
            i += 1
        gens = [_prod(choice) for choice in itertools.product(*digit_factors)]
        self._level_gens_memo[n] = gens
        return gens

    def _compute_piece(self, n: int, d: int) -> GradedSubspace:
        return self._gens_span(self._level_gens(n), d)

    def descriptor(self) -> dict:
        return {
            "kind": self.kind,
            "char": self.char,
            "nvars": self.nvars,
            "generators": [str(g) for g in self.generators],
        }


def _prod(polys):
    out = None
    for g in polys:
        out = g if out is None else out * g
    return out


class DifferentialPowerFiltration(FiltrationOracle):
    """I_n = {f : D_a(f) lies in the base ideal for all |a| <= n-1},
    with D_a the Hasse derivatives; the base ideal is level 1 of the
    given oracle."""

    kind = "differential"

    def __init__(self, base: FiltrationOracle):
        super().__init__(base.char, base.nvars)
        self.base = base
        self._base_perp_memo: dict = {}

    def _base_perp(self, e: int) -> GradedSubspace:
        got = self._base_perp_memo.get(e)
        if got is None:
            got = self.base.piece(1, e).perp()
            self._base_perp_memo[e] = got
        return got

    def _compute_piece(self, n: int, d: int) -> GradedSubspace:
        basis_d = monomial_basis(self.nvars, d)

        def rows():
            zero = Fraction(0) if self.char == 0 else 0
            for k in range(min(n, d + 1)):
                W = self._base_perp(d - k)
                if W.is_zero():
                    continue
                idx = polyalg.monomial_index(self.nvars, d - k)
                for a in monomial_basis(self.nvars, k):
                    for w in W.rows:
                        row = [zero] * len(basis_d)
                        for i, b in enumerate(basis_d):
                            if not vec_leq(a, b):
                                continue
                            rest = vec_sub(b, a)
                            m = multi_binomial(a, rest, self.char)
                            if m:
                                row[i] = m.value * w[idx[rest]]
                        yield row

        return GradedSubspace.from_conditions(rows(), self.char, self.nvars, d)

    def descriptor(self) -> dict:
        return {"kind": self.kind, "base": self.base.descriptor()}


class IntersectionFiltration(FiltrationOracle):
    """Degreewise intersection of two or more filtrations."""

    kind = "intersection"

    def __init__(self, parts):
        parts = list(parts)
        if len(parts) < 2:
            raise InvalidInput("intersection needs at least two filtrations")
        first = parts[0]
        for q in parts[1:]:
            if (q.char, q.nvars) != (first.char, first.nvars):
                raise Mismatch("intersected filtrations live in different rings")
        super().__init__(first.char, first.nvars)
        self.parts = tuple(parts)

    def _compute_piece(self, n: int, d: int) -> GradedSubspace:
        out = self.parts[0].piece(n, d)
        for q in self.parts[1:]:
            if out.is_zero():
                return out
            out = out.intersect(q.piece(n, d))
        return out

    def descriptor(self) -> dict:
        return {"kind": self.kind, "parts": [q.descriptor() for q in self.parts]}


class LevelGensFiltration(FiltrationOracle):
    """Filtration given by an explicit generator family per level; used for
    hand-built witnesses.  The caller vouches for the chain being
    decreasing (pass decreasing=False when it is not known)."""

    kind = "generator-family"

    def __init__(self, gens_fn: Callable, char: int, nvars: int, decreasing: bool = True):
        super().__init__(char, nvars)
        self.gens_fn = gens_fn
        self.decreasing = decreasing

    def _compute_piece(self, n: int, d: int) -> GradedSubspace:
        gens = _check_generators(self.gens_fn(n), self.char, self.nvars)
        return self._gens_span(gens, d)

    def descriptor(self) -> dict:
        return {"kind": self.kind, "char": self.char, "nvars": self.nvars}


def from_descriptor(obj: dict) -> FiltrationOracle:
    """Build a filtration oracle from its JSON descriptor."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InvalidInput("filtration descriptor must be an object with a 'kind'")
    kind = obj["kind"]
    try:
        if kind == "powers":
            return PowerFiltration(
                obj["generators"], int(obj.get("char", 0)), int(obj["nvars"])
            )
        if kind == "symbolic-points":
            char = int(obj.get("char", 0))
            pts = [[_scalar_from_str(c, char) for c in p] for p in obj["points"]]
            return SymbolicPointsFiltration(pts, char, int(obj["N"]) + 1)
        if kind == "frobenius":
            return FrobeniusIntegralFiltration(
                obj["generators"], int(obj["char"]), int(obj["nvars"])
            )
        if kind == "differential":
            return DifferentialPowerFiltration(from_descriptor(obj["base"]))
        if kind == "intersection":
            return IntersectionFiltration([from_descriptor(q) for q in obj["parts"]])
    except KeyError as e:
        raise InvalidInput(f"descriptor for {kind!r} is missing field {e}") from None
    raise InvalidInput(f"unknown filtration kind {kind!r}")


def _scalar_from_str(text, char: int) -> FieldScalar:
    q = Fraction(str(text))
    if char == 0:
        return FieldScalar(q, char)
    num = FieldScalar(q.numerator, char)
    den = FieldScalar(q.denominator, char)
    return num / den


# ---------------------------------------------------------------------------
# differential closedness


@dataclass(frozen=True)
class ClosednessReport:
    closed: bool
    witness: dict | None
    n_max: int
    d_max: int

    def to_json(self) -> dict:
        return {
            "closed": self.closed,
            "witness": self.witness,
            "n_max": self.n_max,
            "d_max": self.d_max,
        }


def _closedness_steps(char: int, bound: int):
    """Orders of the generating Hasse derivatives, up to the bound:
    1 in characteristic zero, the powers of p in characteristic p."""
    if bound < 1:
        return []
    if char == 0:
        return [1]
    out = []
    q = 1
    while q <= bound:
        out.append(q)
        q *= char
    return out


def is_differentially_closed(filt: FiltrationOracle, n_max: int, d_max: int) -> ClosednessReport:
    """Check D_a(I_n) <= I_{n-|a|} on the window, for the generating
    operators D_{e_j} (char 0) or D_{p^i e_j} (char p)."""
    for n in range(2, n_max + 1):
        for k in _closedness_steps(filt.char, n - 1):
            for d in range(k, d_max + 1):
                P = filt.piece(n, d)
                if P.is_zero():
                    continue
                target = filt.piece(n - k, d - k)
                for f in P.basis_polys():
                    for j in range(filt.nvars):
                        a = tuple(k if i == j else 0 for i in range(filt.nvars))
                        Df = diff_apply(a, f)
                        if Df and not target.contains(Df):
                            return ClosednessReport(
                                False,
                                {"n": n, "d": d, "op": list(a), "poly": str(f)},
                                n_max,
                                d_max,
                            )
    return ClosednessReport(True, None, n_max, d_max)


# ---------------------------------------------------------------------------
# alpha and the inverse-system transform


def alpha_seq(filt: FiltrationOracle, n_max: int, d_cap: int) -> IntSeqWindow:
    """Initial degrees alpha_n = min{d : (I_n)_d != 0} for n = 1..n_max.

    Monotone because the chain is decreasing; raises DegreeCapExceeded if
    some level stays zero through the degree cap.
    """
    vals = []
    d = 1
    for n in range(1, n_max + 1):
        while filt.piece(n, d).is_zero():
            d += 1
            if d > d_cap:
                raise DegreeCapExceeded(
                    f"alpha_{n} exceeds the degree cap {d_cap}"
                )
        vals.append(d)
    monotone = getattr(filt, "decreasing", True)
    return IntSeqWindow(1, tuple(vals), certified_monotone=monotone)


class LPieces:
    """Level-s inverse system of a filtration, materialized degree by
    degree: piece(d) = ((I_{d-s})_d)^perp inside the divided powers."""

    def __init__(self, filt: FiltrationOracle, s: int, d_cap: int):
        if s < 0:
            raise InvalidInput("the level s must be nonnegative")
        self.filt = filt
        self.s = s
        self.d_cap = d_cap
        self._memo: dict = {}

    def piece(self, d: int) -> GradedSubspace:
        got = self._memo.get(d)
        if got is None:
            if d < 0:
                got = GradedSubspace.zero(self.filt.char, self.filt.nvars, d, dual=True)
            else:
                got = self.filt.piece(d - self.s, d).perp()
            self._memo[d] = got
        return got

    def quotient_dim(self, d: int) -> int:
        """dim of D_d / L^s_d, equal to dim (I_{d-s})_d."""
        if d < 0:
            return 0
        return self.filt.piece(d - self.s, d).dim

    def dims(self) -> list:
        return [
            {"d": d, "ldim": self.piece(d).dim, "qdim": self.quotient_dim(d)}
            for d in range(self.d_cap + 1)
        ]

    def soc(self, monotone_hypothesis: bool = False):
        """(socle degree of D/L^s within the window, certified flag).

        The value is max{d <= d_cap : quotient != 0}.  It is certified to
        be the true socle degree when the quotient vanishes at the cap
        and gamma = alpha - id is globally nondecreasing (which holds for
        differentially closed filtrations; pass monotone_hypothesis=True
        to assert it).
        """
        last = 0
        for d in range(self.d_cap + 1):
            if self.quotient_dim(d) > 0:
                last = d
        certified = bool(monotone_hypothesis) and self.quotient_dim(self.d_cap) == 0
        return last, certified


def l_transform(filt: FiltrationOracle, s: int, d_cap: int) -> LPieces:
    return LPieces(filt, s, d_cap)


@dataclass(frozen=True)
class IdealCheck:
    is_ideal: bool
    witness: dict | None
    d_max: int

    def to_json(self) -> dict:
        return {"is_ideal": self.is_ideal, "witness": self.witness, "d_max": self.d_max}


def is_ideal(lp: LPieces, d_max: int | None = None) -> IdealCheck:
    """Check that the inverse system is an ideal of the divided power
    algebra: multiplication by Y_j (char 0) or Y_j^[p^i] (char p) keeps
    it inside itself, through degree d_max."""
    if d_max is None:
        d_max = lp.d_cap
    filt = lp.filt
    for d in range(d_max):
        U = lp.piece(d)
        if U.is_zero():
            continue
        for k in _closedness_steps(filt.char, d_max - d):
            V = lp.piece(d + k)
            if V.is_full():
                continue
            for w in U.basis_polys():
                for j in range(filt.nvars):
                    a = tuple(k if i == j else 0 for i in range(filt.nvars))
                    prod = DividedPoly.monomial(a, 1, filt.char) * w
                    if not V.contains(prod):
                        return IdealCheck(
                            False,
                            {"d": d, "j": j, "order": k, "element": str(w)},
                            d_max,
                        )
    return IdealCheck(True, None, d_max)


# ---------------------------------------------------------------------------
# duality report


@dataclass(frozen=True)
class DualityReport:
    alpha: IntSeqWindow
    gamma: IntSeqWindow
    beta: IntSeqWindow
    right_gamma: IntSeqWindow
    transform_match: bool
    left_delta: IntSeqWindow
    reverse_match: bool
    alpha_class: str
    beta_class: str
    growth_upper: Fraction | None
    growth_lower: Fraction | None
    beta_bound_ok: bool | None
    alpha_bound_ok: bool | None

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha.to_json(),
            "gamma": self.gamma.to_json(),
            "beta": self.beta.to_json(),
            "right_gamma": self.right_gamma.to_json(),
            "transform_match": self.transform_match,
            "left_delta": self.left_delta.to_json(),
            "reverse_match": self.reverse_match,
            "alpha_class": self.alpha_class,
            "beta_class": self.beta_class,
            "growth_upper": None if self.growth_upper is None else str(self.growth_upper),
            "growth_lower": None if self.growth_lower is None else str(self.growth_lower),
            "beta_bound_ok": self.beta_bound_ok,
            "alpha_bound_ok": self.alpha_bound_ok,
        }


def duality_report(filt: FiltrationOracle, n_max: int, d_cap: int) -> DualityReport:
    """Verify both directions of the alpha/beta duality on a window.

    beta_s is computed by a direct socle scan of the level-s inverse
    system and compared with s + (right transform of gamma)_s; then alpha
    is recovered from beta via the left transform.  Certification of the
    socle scans assumes gamma is globally nondecreasing, which holds for
    differentially closed filtrations and is verified on the window.
    """
    alpha = alpha_seq(filt, n_max, d_cap)
    gamma_raw = offset_window(alpha, -1)
    if not gamma_raw.is_nondecreasing():
        raise HypothesisUnmet(
            "gamma = alpha - id is not nondecreasing on the window; "
            "the filtration cannot be differentially closed"
        )
    gamma = IntSeqWindow(1, gamma_raw.values, certified_monotone=True)
    g_end = gamma.values[-1]
    s_hi = g_end - 1
    s_lo = max(1, gamma.values[0])
    if s_hi < s_lo:
        raise HypothesisUnmet(
            "gamma grows too little on this window to certify any socle "
            "degree; enlarge n_max"
        )

    right_gamma = right_transform(gamma, n_max=s_hi).slice(s_lo, s_hi)

    beta_vals = []
    for s in range(s_lo, s_hi + 1):
        lp = l_transform(filt, s, n_max + s)
        value, certified = lp.soc(monotone_hypothesis=True)
        if not certified:
            raise HypothesisUnmet(f"socle scan at level {s} did not stabilize")
        beta_vals.append(value)
    beta = IntSeqWindow(s_lo, tuple(beta_vals), certified_monotone=True)

    transform_match = all(
        beta[s] - s == right_gamma[s] for s in range(s_lo, s_hi + 1)
    )

    delta_raw = offset_window(beta, -1)
    delta = IntSeqWindow(delta_raw.start, delta_raw.values, certified_monotone=True)
    left_delta = left_transform(delta, n_max=n_max, strict=False)
    reverse_match = all(
        left_delta[n] == gamma[n]
        for n in range(left_delta.start, min(left_delta.end, gamma.end) + 1)
    )

    alpha_class = additivity_class(alpha).kind
    beta_class = additivity_class(beta).kind if beta.start == 1 else "unknown"

    growth_upper = growth_lower = None
    beta_bound_ok = alpha_bound_ok = None
    if alpha_class in ("subadditive", "both"):
        growth_upper = growth_window(alpha, "sub").bound
        if growth_upper > 1:
            A = growth_upper
            beta_bound_ok = all(
                Fraction(beta[s]) <= Fraction(s) * A / (A - 1)
                for s in range(s_lo, s_hi + 1)
            )
    if beta_class in ("superadditive", "both"):
        growth_lower = growth_window(beta, "super").bound
        if growth_lower > 1:
            B = growth_lower
            alpha_bound_ok = all(
                Fraction(alpha[n]) >= Fraction(n) * B / (B - 1)
                for n in range(alpha.start, alpha.end + 1)
            )

    return DualityReport(
        alpha=alpha,
        gamma=gamma,
        beta=beta,
        right_gamma=right_gamma,
        transform_match=transform_match,
        left_delta=left_delta,
        reverse_match=reverse_match,
        alpha_class=alpha_class,
        beta_class=beta_class,
        growth_upper=growth_upper,
        growth_lower=growth_lower,
        beta_bound_ok=beta_bound_ok,
        alpha_bound_ok=alpha_bound_ok,
    )
