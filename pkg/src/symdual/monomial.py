"""Monomial ideal invariants built from exponent arithmetic.

Symbolic powers of squarefree ideals come from intersecting powers of
the minimal primes (minimal vertex covers of the generator supports);
monomial valuations, Newton polyhedron membership by exact linear
programming, resurgence-style non-containment windows, and the symbolic
polyhedron with its vertex invariants are all computed over Fraction
arithmetic with no floating point anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    CapExceeded,
    DimensionTooLarge,
    InvalidInput,
    NotSquarefree,
    UncertifiedSup,
)
from .linalg import solve_square
from .numseq import NEG_INF, IntSeqWindow, additivity_class, right_transform

SYMBOLIC_PRIME_CAP = 6
SYMBOLIC_POWER_CAP = 8


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _minimalize(gens) -> tuple:
    """Inclusion-minimal generators, sorted by degree then lex."""
    uniq = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list = []
    for g in uniq:
        if not any(_divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Proper monomial ideal of K[x_0..x_N] stored by minimal generators."""

    N: int
    gens: tuple

    def __post_init__(self):
        if self.N < 0:
            raise InvalidInput("need at least one variable")
        gens = []
        for g in self.gens:
            e = tuple(int(x) for x in g)
            if len(e) != self.N + 1:
                raise InvalidInput(f"generator {g!r} needs {self.N + 1} exponents")
            if any(x < 0 for x in e):
                raise InvalidInput("exponents must be nonnegative")
            if not any(e):
                raise InvalidInput("the unit ideal is not supported")
            gens.append(e)
        if not gens:
            raise InvalidInput("need at least one generator")
        object.__setattr__(self, "gens", _minimalize(gens))

    @property
    def nvars(self) -> int:
        return self.N + 1

    def is_squarefree(self) -> bool:
        return all(all(x <= 1 for x in g) for g in self.gens)

    def contains_monomial(self, e) -> bool:
        return any(_divides(g, e) for g in self.gens)

    def contains(self, other: "MonomialIdeal") -> bool:
        """Ideal containment self >= other, generator by generator."""
        return all(self.contains_monomial(g) for g in other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        pairs = {_lcm(g, h) for g in self.gens for h in other.gens}
        return MonomialIdeal(self.N, tuple(pairs))

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        prods = {tuple(x + y for x, y in zip(g, h))
                 for g in self.gens for h in other.gens}
        return MonomialIdeal(self.N, tuple(prods))

    def power(self, n: int) -> "MonomialIdeal":
        if n < 1:
            raise InvalidInput("power exponent must be at least 1")
        out = self
        for _ in range(n - 1):
            out = out.multiply(self)
        return out

    @classmethod
    def variable_prime(cls, N: int, indices) -> "MonomialIdeal":
        gens = []
        for i in indices:
            e = [0] * (N + 1)
            e[i] = 1
            gens.append(tuple(e))
        return cls(N, tuple(gens))

    def to_json(self) -> dict:
        return {"N": self.N, "generators": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        return cls(int(data["N"]), tuple(tuple(g) for g in data["generators"]))


def minimal_primes_squarefree(I: MonomialIdeal) -> list:
    """Minimal vertex covers of the generator supports, as index tuples."""
    if not I.is_squarefree():
        raise NotSquarefree("minimal primes require a squarefree ideal")
    edges = [frozenset(i for i, x in enumerate(g) if x) for g in I.gens]
    covers: set = set()

    def rec(chosen: frozenset, remaining):
        if not remaining:
            covers.add(chosen)
            return
        for v in sorted(remaining[0]):
            rec(chosen | {v}, [e for e in remaining[1:] if v not in e])

    rec(frozenset(), edges)
    minimal = [c for c in covers
               if not any(d < c for d in covers)]
    return sorted(tuple(sorted(c)) for c in minimal)


@lru_cache(maxsize=None)
def symbolic_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """n-th symbolic power of a squarefree ideal via its minimal primes."""
    if n < 1:
        raise InvalidInput("symbolic power index must be at least 1")
    if n > SYMBOLIC_POWER_CAP:
        raise CapExceeded(f"symbolic power index {n} exceeds cap {SYMBOLIC_POWER_CAP}")
    primes = minimal_primes_squarefree(I)
    if len(primes) > SYMBOLIC_PRIME_CAP:
        raise CapExceeded(
            f"{len(primes)} minimal primes exceed cap {SYMBOLIC_PRIME_CAP}"
        )
    result = None
    for support in primes:
        piece = MonomialIdeal.variable_prime(I.N, support).power(n)
        result = piece if result is None else result.intersect(piece)
    return result


def nu_eval(w, I: MonomialIdeal) -> int:
    """Value min over generators of w . g of the monomial valuation nu_w."""
    w = tuple(int(x) for x in w)
    if len(w) != I.nvars:
        raise InvalidInput("weight length must match the variable count")
    if any(x < 0 for x in w) or not any(w):
        raise InvalidInput("weight must be nonnegative and nonzero")
    return min(sum(a * b for a, b in zip(w, g)) for g in I.gens)


def nu_symbolic_window(I: MonomialIdeal, w, d_cap: int) -> IntSeqWindow:
    """Window of nu_w(I^(d)) for d = 1..d_cap; nondecreasing by inclusion."""
    vals = tuple(nu_eval(w, symbolic_power(I, d)) for d in range(1, d_cap + 1))
    return IntSeqWindow(1, vals, certified_monotone=True)


def beta_nu_window(I: MonomialIdeal, w, n_max: int, d_cap: int = 8) -> IntSeqWindow:
    """Window of sup{d : nu(I^(d)) < n*nu(I)} for n = 1..n_max.

    The thresholds n*nu(I) - 1 are fed through the sup transform over the
    certified-monotone window of symbolic valuations; the n = 1 entry is
    -inf because its defining set is empty.
    """
    nu1 = nu_eval(w, I)
    if nu1 <= 0:
        raise InvalidInput("valuation must be positive on the ideal")
    alpha = nu_symbolic_window(I, w, d_cap)
    beta = IntSeqWindow(
        1, tuple(n * nu1 - 1 for n in range(1, n_max + 1)),
        certified_monotone=True,
    )
    try:
        return right_transform(alpha, beta, n_max=n_max, strict=True)
    except UncertifiedSup as exc:
        raise CapExceeded(
            f"symbolic valuation window d_cap={d_cap} too short: {exc}"
        ) from exc


def beta_nu_report(I: MonomialIdeal, w, n_max: int, d_cap: int = 8) -> dict:
    """beta_nu window plus the windowed growth consistency check.

    The windowed maximum of beta_nu_n / n is provably below the ratio
    nu(I) / (windowed min of nu(I^(d))/d); the report carries both sides.
    """
    win = beta_nu_window(I, w, n_max, d_cap)
    nuw = nu_symbolic_window(I, w, d_cap)
    nu1 = nu_eval(w, I)
    nu_hat_win = min(Fraction(nuw[d], d) for d in range(1, d_cap + 1))
    finite = [(n, win[n]) for n in range(win.start, win.end + 1)
              if win[n] != NEG_INF]
    max_ratio = max((Fraction(v, n) for n, v in finite), default=None)
    bound = Fraction(nu1) / nu_hat_win
    superadd = None
    if finite and 2 * finite[0][0] <= finite[-1][0]:
        slice_win = IntSeqWindow(
            finite[0][0], tuple(v for _, v in finite))
        superadd = additivity_class(slice_win).kind in ("superadditive", "both")
    return {
        "window": win.to_json(),
        "n1_empty": win.covers(1) and win[1] == NEG_INF,
        "n1_note": "sup over an empty set; the remark suggesting "
                   "beta_nu >= 1 is not honored for n = 1",
        "max_ratio": None if max_ratio is None else str(max_ratio),
        "growth_bound": str(bound),
        "ratio_within_bound": max_ratio is None or max_ratio <= bound,
        "superadditive_on_window": superadd,
    }


def _max_weight_combination(gens, a) -> Fraction:
    """Exact LP value max{sum(lam) : sum lam_i g_i <= a, lam >= 0}.

    Primal simplex on the slack basis with Bland's rule; every entry is a
    Fraction, so the optimum is exact.  The feasible region is bounded
    because every generator is nonzero with nonnegative entries.
    """
    m = len(a)
    k = len(gens)
    # tableau rows: [lam cols | slack cols | rhs], basis starts as slacks
    rows = [
        [Fraction(g[i]) for g in gens]
        + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        + [Fraction(a[i])]
        for i in range(m)
    ]
    cost = [Fraction(-1)] * k + [Fraction(0)] * m + [Fraction(0)]
    basis = list(range(k, k + m))
    while True:
        enter = next((j for j in range(k + m) if cost[j] < 0), None)
        if enter is None:
            return cost[-1]
        best = None
        for i in range(m):
            coef = rows[i][enter]
            if coef > 0:
                ratio = rows[i][-1] / coef
                if best is None or ratio < best[0] or (
                        ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise InvalidInput("unbounded program; ideal has a zero generator")
        _, pivot_row = best
        piv = rows[pivot_row][enter]
        rows[pivot_row] = [x / piv for x in rows[pivot_row]]
        for i in range(m):
            if i != pivot_row and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[pivot_row])]
        if cost[enter]:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, rows[pivot_row])]
        basis[pivot_row] = enter


def newton_closure_member(a, I: MonomialIdeal, n: int = 1) -> bool:
    """True when a lies in n times the Newton polyhedron of I."""
    if n < 1:
        raise InvalidInput("scaling factor must be at least 1")
    a = tuple(int(x) for x in a)
    if len(a) != I.nvars or any(x < 0 for x in a):
        raise InvalidInput("exponent vector must be nonnegative of full length")
    return _max_weight_combination(I.gens, a) >= n


def _closure_contains(I: MonomialIdeal, J: MonomialIdeal, n: int) -> bool:
    """J inside the integral closure of I^n, generator by generator."""
    return all(newton_closure_member(g, I, n) for g in J.gens)


def resurgence_windows(I: MonomialIdeal, n_max: int, d_cap: int = 8) -> dict:
    """Largest non-containment indices against ordinary powers and closures.

    lambda_n = max{d : I^(d) not inside I^n} and beta_ic_n the analogue
    with the integral closure of I^n.  Containment is verified for every
    d up to d_cap; a non-containment at d_cap itself leaves the sup
    uncertified and raises CapExceeded.
    """
    if not I.is_squarefree():
        raise NotSquarefree("resurgence windows require a squarefree ideal")
    if n_max < 1 or d_cap < max(1, n_max - 1):
        raise InvalidInput("need d_cap >= n_max - 1 >= 0")
    sympows = {d: symbolic_power(I, d) for d in range(1, d_cap + 1)}
    lam_vals = []
    ic_vals = []
    for n in range(1, n_max + 1):
        ordinary = I.power(n)
        bad_ord = [d for d in range(1, d_cap + 1)
                   if not ordinary.contains(sympows[d])]
        bad_ic = [d for d in range(1, d_cap + 1)
                  if not _closure_contains(I, sympows[d], n)]
        for name, bad in (("lambda", bad_ord), ("beta_ic", bad_ic)):
            if bad and bad[-1] == d_cap:
                raise CapExceeded(
                    f"{name}_{n} not certified: non-containment at d_cap={d_cap}"
                )
        lam_vals.append(bad_ord[-1] if bad_ord else NEG_INF)
        ic_vals.append(bad_ic[-1] if bad_ic else NEG_INF)
    lam = IntSeqWindow(1, tuple(lam_vals), certified_monotone=True)
    ic = IntSeqWindow(1, tuple(ic_vals), certified_monotone=True)

    def _max_ratio(win):
        finite = [(n, win[n]) for n in range(1, n_max + 1) if win[n] != NEG_INF]
        if not finite:
            return None
        best = max(Fraction(v, n) for n, v in finite)
        return str(best)

    return {
        "lambda": lam,
        "beta_ic": ic,
        "ratios": {
            "lambda_max_ratio": _max_ratio(lam),
            "beta_ic_max_ratio": _max_ratio(ic),
        },
    }


@dataclass(frozen=True)
class RationalPolyhedron:
    """H-representation with implicit a >= 0, plus enumerated vertices."""

    constraints: tuple
    vertices: tuple

    def to_json(self) -> dict:
        return {
            "constraints": [
                {"coeffs": [str(c) for c in coeffs], "rhs": str(rhs)}
                for coeffs, rhs in self.constraints
            ],
            "vertices": [[str(c) for c in v] for v in self.vertices],
        }


def symbolic_polyhedron(I: MonomialIdeal) -> RationalPolyhedron:
    """Polyhedron {a >= 0 : sum of a_i over each minimal prime >= 1}.

    Vertices are found by solving every maximal square subsystem of tight
    constraints exactly and filtering for feasibility.
    """
    nvars = I.nvars
    if nvars > 9:
        raise DimensionTooLarge(f"{nvars} variables exceed the vertex cap of 9")
    primes = minimal_primes_squarefree(I)
    prime_rows = [
        (tuple(1 if i in support else 0 for i in range(nvars)), 1)
        for support in primes
    ]
    axis_rows = [
        (tuple(1 if j == i else 0 for j in range(nvars)), 0)
        for i in range(nvars)
    ]
    all_rows = prime_rows + axis_rows
    seen = set()
    for subset in itertools.combinations(range(len(all_rows)), nvars):
        mat = [all_rows[i][0] for i in subset]
        rhs = [all_rows[i][1] for i in subset]
        sol = solve_square(mat, rhs)
        if sol is None:
            continue
        if any(x < 0 for x in sol):
            continue
        if all(sum(c * x for c, x in zip(coeffs, sol)) >= rhs
               for coeffs, rhs in prime_rows):
            seen.add(tuple(sol))
    vertices = tuple(sorted(seen))
    return RationalPolyhedron(constraints=tuple(prime_rows), vertices=vertices)


def polyhedron_invariants(I: MonomialIdeal) -> dict:
    """Vertex-sum invariants of the symbolic polyhedron.

    The minimum vertex coordinate sum bounds every alpha(I^(n))/n from
    below, the maximum is the asymptotic regularity growth, equal_sums
    records whether the two coincide, and generator_vertex is a minimal
    generator whose exponent vector is itself a vertex (None when the
    expected witness is absent).
    """
    poly = symbolic_polyhedron(I)
    sums = [sum(v) for v in poly.vertices]
    wald = min(sums)
    areg = max(sums)
    vset = set(poly.vertices)
    witness = None
    for g in I.gens:
        if tuple(Fraction(x) for x in g) in vset:
            witness = list(g)
            break
    return {
        "waldschmidt": wald,
        "areg": areg,
        "equal_sums": wald == areg,
        "generator_vertex": witness,
    }


def corona_reg_value(m: int, s: int, t: int) -> int:
    """Regularity of the t-th symbolic power of the corona cover ideal."""
    if m < 2 or s < 1 or t < 1:
        raise InvalidInput("corona formula needs m >= 2, s >= 1, t >= 1")
    n, odd = divmod(t, 2)
    base = m * (s + 1) * n
    return base + m + s - 1 if odd else base


def corona_reg_window(m: int, s: int, t_max: int) -> IntSeqWindow:
    """Window of the corona regularity formula for t = 1..t_max."""
    vals = tuple(corona_reg_value(m, s, t) for t in range(1, t_max + 1))
    return IntSeqWindow(1, vals, certified_monotone=True)


def corona_subadditivity(m: int, s: int, t_max: int = 10) -> dict:
    """Windowed subadditivity verdict for the corona regularity sequence.

    The sequence fails subadditivity exactly when (m-2)(s-1) > 0; the
    witness pair is (1, 1), where the defect is that product.
    """
    win = corona_reg_window(m, s, t_max)
    verdict = additivity_class(win)
    return {
        "m": m,
        "s": s,
        "window": win.to_json(),
        "kind": verdict.kind,
        "subadditive": verdict.kind in ("subadditive", "both"),
        "predicted_nonsubadditive": (m - 2) * (s - 1) > 0,
        "sub_violation": verdict.sub_violation,
    }
