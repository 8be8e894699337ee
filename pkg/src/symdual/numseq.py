"""Windowed calculus for extended-integer sequences and their duals.

A sequence is known only on a finite index window, so every sup/inf is
emitted with a certificate or not at all.  The two transforms are

    right(alpha, beta)_n = sup { d >= 1 : alpha_d <= beta_n }
    left(alpha, beta)_n  = inf { d >= 1 : alpha_d >= beta_n }

with sup({}) = -inf and inf({}) = +inf, beta defaulting to the identity.
A sup entry is certified when a later window entry strictly exceeds the
threshold, or when the window is flagged monotone and pins the value; an
inf entry is certified when every smaller index is visible and below the
threshold.  Uncertified entries raise UncertifiedSup (or truncate the
output window when strict=False).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidInput, KindMismatch, UncertifiedSup

NEG_INF = -math.inf
POS_INF = math.inf


def _valid_entry(v) -> bool:
    return isinstance(v, int) or v == NEG_INF or v == POS_INF


def _ext_add(a, b):
    """Extended-integer addition; opposite infinities are an error."""
    if a in (NEG_INF, POS_INF) or b in (NEG_INF, POS_INF):
        if (a == NEG_INF and b == POS_INF) or (a == POS_INF and b == NEG_INF):
            raise InvalidInput("window mixes -inf and +inf additively")
        return a + b
    return a + b


@dataclass(frozen=True)
class IntSeqWindow:
    """Finite window of an extended-integer sequence.

    ``values[i]`` is the entry at index ``start + i``.  Entries are ints or
    +/-math.inf.  ``certified_monotone`` records outside knowledge that the
    full sequence is nondecreasing; the constructor checks the window does
    not contradict the flag.
    """

    start: int
    values: tuple = field(default=())
    certified_monotone: bool = False

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not isinstance(self.start, int):
            raise InvalidInput("window start must be an integer")
        for v in self.values:
            if not _valid_entry(v):
                raise InvalidInput(f"sequence entries must be ints or +/-inf, got {v!r}")
        if self.certified_monotone and not self.is_nondecreasing():
            raise InvalidInput("window contradicts certified_monotone flag")

    @property
    def end(self) -> int:
        return self.start + len(self.values) - 1

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n: int):
        if not (self.start <= n <= self.end):
            raise IndexError(f"index {n} outside window [{self.start}, {self.end}]")
        return self.values[n - self.start]

    def covers(self, n: int) -> bool:
        return self.start <= n <= self.end

    def items(self):
        return list(enumerate(self.values, start=self.start))

    def is_nondecreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))

    def is_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    def slice(self, lo: int, hi: int) -> "IntSeqWindow":
        """Subwindow on indices lo..hi (clamped to the window)."""
        lo = max(lo, self.start)
        hi = min(hi, self.end)
        if hi < lo:
            return IntSeqWindow(lo, (), self.certified_monotone)
        vals = self.values[lo - self.start : hi - self.start + 1]
        return IntSeqWindow(lo, vals, self.certified_monotone)

    def first_finite(self):
        """Smallest index with a finite entry, or None."""
        for n, v in self.items():
            if v not in (NEG_INF, POS_INF):
                return n
        return None

    def to_json(self) -> dict:
        out = []
        for v in self.values:
            if v == NEG_INF:
                out.append("-inf")
            elif v == POS_INF:
                out.append("inf")
            else:
                out.append(v)
        return {"start": self.start, "values": out}

    @classmethod
    def from_json(cls, obj, certified_monotone: bool = False) -> "IntSeqWindow":
        if isinstance(obj, list):
            start, raw = 1, obj
        elif isinstance(obj, dict):
            try:
                start, raw = obj["start"], obj["values"]
            except KeyError as e:
                raise InvalidInput(f"sequence JSON missing key {e}") from None
        else:
            raise InvalidInput("sequence JSON must be a list or an object")
        vals = []
        for v in raw:
            if v == "-inf":
                vals.append(NEG_INF)
            elif v == "inf":
                vals.append(POS_INF)
            elif isinstance(v, int) and not isinstance(v, bool):
                vals.append(v)
            else:
                raise InvalidInput(f"bad sequence entry {v!r}")
        return cls(start, tuple(vals), certified_monotone)

    @classmethod
    def from_formula(cls, fn, start: int, end: int, certified_monotone: bool = False):
        return cls(start, tuple(fn(n) for n in range(start, end + 1)), certified_monotone)


def identity_window(n_max: int) -> IntSeqWindow:
    return IntSeqWindow(1, tuple(range(1, n_max + 1)), certified_monotone=True)


def _threshold(beta, n: int):
    if beta is None:
        return n
    if not beta.covers(n):
        raise InvalidInput(f"beta window does not cover index {n}")
    return beta[n]


def _sup_entry(alpha: IntSeqWindow, t):
    """Certified sup{d : alpha_d <= t}, or None when uncertifiable."""
    if t == POS_INF:
        return POS_INF
    best = None
    for n, v in alpha.items():
        if v <= t:
            best = n
    if best is None:
        if alpha.start == 1 and alpha.certified_monotone:
            return NEG_INF
        return None
    if best < alpha.end:
        return best
    return None


def _inf_entry(alpha: IntSeqWindow, t):
    """Certified inf{d : alpha_d >= t}, or None when uncertifiable."""
    if t == NEG_INF:
        return 1
    for n, v in alpha.items():
        if v >= t:
            if alpha.start == 1:
                return n
            if alpha.certified_monotone and n > alpha.start:
                return n
            return None
    return None


def _run_transform(entry_fn, alpha, beta, n_max, strict, what):
    vals = []
    for n in range(1, n_max + 1):
        if beta is not None and not beta.covers(n):
            if strict:
                raise InvalidInput(f"beta window does not cover index {n}")
            break
        v = entry_fn(alpha, _threshold(beta, n))
        if v is None:
            if strict:
                raise UncertifiedSup(
                    f"{what} at index {n} is not certified by the window "
                    f"[{alpha.start}, {alpha.end}] (extend the window or "
                    f"certify monotonicity)"
                )
            break
        vals.append(v)
    # Nested threshold sets make the transform globally nondecreasing, so
    # the output inherits a monotonicity certificate from the thresholds.
    mono = beta is None or beta.certified_monotone
    return IntSeqWindow(1, tuple(vals), certified_monotone=mono)


def right_transform(alpha: IntSeqWindow, beta: IntSeqWindow | None = None,
                    n_max: int = 10, strict: bool = True) -> IntSeqWindow:
    """Window of sup{d : alpha_d <= beta_n} for n = 1..n_max.

    With strict=False the output stops before the first uncertified entry.
    The output is flagged monotone whenever the thresholds are nondecreasing
    (the defining sets are then nested).
    """
    return _run_transform(_sup_entry, alpha, beta, n_max, strict, "sup")


def left_transform(alpha: IntSeqWindow, beta: IntSeqWindow | None = None,
                   n_max: int = 10, strict: bool = True) -> IntSeqWindow:
    """Window of inf{d : alpha_d >= beta_n} for n = 1..n_max."""
    return _run_transform(_inf_entry, alpha, beta, n_max, strict, "inf")


@dataclass(frozen=True)
class AdditivityReport:
    """Windowed additivity classification with first violating pairs."""

    kind: str  # "subadditive" | "superadditive" | "both" | "neither"
    sub_violation: tuple | None
    super_violation: tuple | None

    def to_json(self):
        return {
            "kind": self.kind,
            "sub_violation": self.sub_violation,
            "super_violation": self.super_violation,
        }


def additivity_class(alpha: IntSeqWindow) -> AdditivityReport:
    """Classify alpha on all index pairs i <= j with i, j, i+j in the window."""
    sub_viol = None
    sup_viol = None
    lo, hi = alpha.start, alpha.end
    for i in range(lo, hi + 1):
        for j in range(i, hi - i + 1):
            s = _ext_add(alpha[i], alpha[j])
            v = alpha[i + j]
            if sub_viol is None and v > s:
                sub_viol = (i, j)
            if sup_viol is None and v < s:
                sup_viol = (i, j)
            if sub_viol and sup_viol:
                break
        if sub_viol and sup_viol:
            break
    if sub_viol is None and sup_viol is None:
        kind = "both"
    elif sub_viol is None:
        kind = "subadditive"
    elif sup_viol is None:
        kind = "superadditive"
    else:
        kind = "neither"
    return AdditivityReport(kind, sub_viol, sup_viol)


@dataclass(frozen=True)
class GrowthBound:
    """One-sided certified bound for the growth factor lim alpha_n / n.

    Subadditive sequences converge to their inf, so the windowed min is an
    upper bound; superadditive sequences converge to their sup, so the
    windowed max is a lower bound.  Never a claim about the limit itself.
    """

    bound: Fraction
    witness_n: int
    side: str  # "upper" | "lower"

    def to_json(self):
        return {"bound": str(self.bound), "witness_n": self.witness_n, "side": self.side}


def growth_window(alpha: IntSeqWindow, kind: str) -> GrowthBound:
    """Windowed growth bound; ``kind`` must be 'sub' or 'super' and must
    agree with the windowed additivity classification."""
    if kind not in ("sub", "super"):
        raise InvalidInput("kind must be 'sub' or 'super'")
    if alpha.start < 1:
        raise InvalidInput("growth bounds need windows starting at index >= 1")
    if len(alpha) == 0:
        raise InvalidInput("empty window")
    for _, v in alpha.items():
        if v in (NEG_INF, POS_INF):
            raise InvalidInput("growth bounds need finite entries; slice the window")
    verdict = additivity_class(alpha)
    if kind == "sub" and verdict.kind not in ("subadditive", "both"):
        raise KindMismatch(
            f"window is not subadditive (violation at {verdict.sub_violation})"
        )
    if kind == "super" and verdict.kind not in ("superadditive", "both"):
        raise KindMismatch(
            f"window is not superadditive (violation at {verdict.super_violation})"
        )
    best = None
    witness = None
    for n, v in alpha.items():
        r = Fraction(v, n)
        if best is None or (kind == "sub" and r < best) or (kind == "super" and r > best):
            best = r
            witness = n
    return GrowthBound(best, witness, "upper" if kind == "sub" else "lower")


def shift(alpha: IntSeqWindow, k: int) -> IntSeqWindow:
    """The shifted sequence alpha[k]_n = alpha_{n+k} on its valid window."""
    new_start = max(1, alpha.start - k)
    new_end = alpha.end - k
    if new_end < new_start:
        raise InvalidInput(f"shift by {k} leaves an empty window")
    vals = tuple(alpha[n + k] for n in range(new_start, new_end + 1))
    return IntSeqWindow(new_start, vals, alpha.certified_monotone)


def offset_window(alpha: IntSeqWindow, slope: int = -1) -> IntSeqWindow:
    """The window of alpha_n + slope*n (e.g. slope=-1 gives alpha_n - n).

    No monotonicity certificate is inherited: a caller with outside
    knowledge that the offset sequence is nondecreasing must re-wrap
    the result explicitly.
    """
    vals = []
    for n, v in alpha.items():
        if v in (NEG_INF, POS_INF):
            vals.append(v)
        else:
            vals.append(v + slope * n)
    return IntSeqWindow(alpha.start, tuple(vals))
