"""Polynomial ring, divided power algebra, and graded subspaces.

The graded dual of R = K[x_0..x_N] is presented on the divided monomial
basis Y^[a], in every characteristic, with

    Y^[a] * Y^[b] = multi_binomial(a, b) * Y^[a+b]
    x^a . Y^[b]   = Y^[b-a]  (contraction; zero unless a <= b)
    D_a(x^b)      = C(b, a) x^{b-a}  (Hasse derivative)

Graded subspaces of R_d or of its dual are stored as canonical reduced
row echelon matrices over the degree-d monomial basis in graded lex order,
so subspace equality is literal matrix equality.
"""

from __future__ import annotations

import functools
import math
import re
from fractions import Fraction

from . import linalg
from .errors import (
    CharMismatch,
    InvalidInput,
    Mismatch,
    NonHomogeneous,
    ZeroPoint,
)
from .scalars import (
    FieldScalar,
    exponent_vec,
    multi_binomial,
    validate_char,
    vec_degree,
    vec_leq,
    vec_sub,
)


@functools.cache
def monomial_basis(nvars: int, d: int) -> tuple:
    """Degree-d exponent vectors in lex-descending order (x_0-heavy first)."""
    if nvars < 1 or d < 0:
        return ()
    if nvars == 1:
        return ((d,),)
    out = []
    for e in range(d, -1, -1):
        for rest in monomial_basis(nvars - 1, d - e):
            out.append((e,) + rest)
    return tuple(out)


@functools.cache
def monomial_index(nvars: int, d: int) -> dict:
    return {a: i for i, a in enumerate(monomial_basis(nvars, d))}


def dim_graded(nvars: int, d: int) -> int:
    return len(monomial_basis(nvars, d))


class _SparsePoly:
    """Shared sparse-term machinery for Poly and DividedPoly."""

    __slots__ = ("char", "nvars", "terms")

    def __init__(self, terms: dict, char: int = 0, nvars: int | None = None):
        validate_char(char)
        clean = {}
        for a, c in terms.items():
            a = exponent_vec(a)
            if nvars is None:
                nvars = len(a)
            elif len(a) != nvars:
                raise InvalidInput("inconsistent exponent vector lengths")
            if not isinstance(c, FieldScalar):
                c = FieldScalar(c, char)
            elif c.char != char:
                raise CharMismatch("coefficient characteristic differs from polynomial's")
            if c:
                clean[a] = c
        if nvars is None:
            raise InvalidInput("nvars is required for a zero polynomial")
        object.__setattr__(self, "char", char)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, val):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def zero(cls, char: int = 0, nvars: int = 1):
        return cls({}, char, nvars)

    @classmethod
    def monomial(cls, a, coeff=1, char: int = 0):
        a = exponent_vec(a)
        return cls({a: FieldScalar(coeff, char)}, char, len(a))

    def _check_compat(self, other):
        if self.char != other.char:
            raise CharMismatch("cannot mix characteristics")
        if self.nvars != other.nvars:
            raise Mismatch("cannot mix variable counts")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.char, self.nvars, self.terms) == (other.char, other.nvars, other.terms)

    def __hash__(self):
        return hash((type(self).__name__, self.char, self.nvars,
                     frozenset(self.terms.items())))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        self._check_compat(other)
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, FieldScalar.zero(self.char)) + c
        return type(self)(terms, self.char, self.nvars)

    def __neg__(self):
        return type(self)({a: -c for a, c in self.terms.items()}, self.char, self.nvars)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, FieldScalar):
            c = FieldScalar(c, self.char)
        return type(self)({a: c * v for a, v in self.terms.items()}, self.char, self.nvars)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(vec_degree(a) for a in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {vec_degree(a) for a in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self) -> int:
        if not self.terms:
            return -1
        degs = {vec_degree(a) for a in self.terms}
        if len(degs) != 1:
            raise NonHomogeneous(f"polynomial has degrees {sorted(degs)}")
        return degs.pop()

    def coefficient_vector(self, d: int | None = None) -> list:
        """Raw coefficients over the degree-d monomial basis."""
        if d is None:
            d = self.homogeneous_degree()
            if d < 0:
                raise NonHomogeneous("zero polynomial needs an explicit degree")
        idx = monomial_index(self.nvars, d)
        zero = Fraction(0) if self.char == 0 else 0
        vec = [zero] * len(idx)
        for a, c in self.terms.items():
            i = idx.get(a)
            if i is None:
                raise NonHomogeneous(f"term {a} is not of degree {d}")
            vec[i] = c.value
        return vec

    @classmethod
    def from_vector(cls, vec, d: int, char: int = 0, nvars: int = 1):
        basis = monomial_basis(nvars, d)
        terms = {a: FieldScalar(v, char) for a, v in zip(basis, vec) if v}
        return cls(terms, char, nvars)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (-vec_degree(kv[0]), tuple(-e for e in kv[0])),
        )

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r}, char={self.char})"


class Poly(_SparsePoly):
    """Sparse polynomial in x_0..x_N with exact coefficients."""

    _varname = "x"

    def __mul__(self, other):
        if isinstance(other, (int, FieldScalar, Fraction)):
            return self.scale(other)
        if type(other) is not Poly:
            return NotImplemented
        self._check_compat(other)
        terms: dict = {}
        zero = FieldScalar.zero(self.char)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                terms[k] = terms.get(k, zero) + ca * cb
        return Poly(terms, self.char, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInput("negative polynomial power")
        out = Poly.monomial((0,) * self.nvars, 1, self.char)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def evaluate(self, point) -> FieldScalar:
        total = FieldScalar.zero(self.char)
        for a, c in self.terms.items():
            v = c
            for p, e in zip(point, a):
                if e:
                    v = v * (p**e)
            total = total + v
        return total

    def __str__(self):
        return _format(self, "x")


class DividedPoly(_SparsePoly):
    """Element of the graded dual on the divided monomial basis Y^[a]."""

    _varname = "Y"

    def __mul__(self, other):
        if isinstance(other, (int, FieldScalar, Fraction)):
            return self.scale(other)
        if type(other) is not DividedPoly:
            return NotImplemented
        self._check_compat(other)
        terms: dict = {}
        zero = FieldScalar.zero(self.char)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                m = multi_binomial(a, b, self.char)
                if not m:
                    continue
                k = tuple(x + y for x, y in zip(a, b))
                terms[k] = terms.get(k, zero) + m * ca * cb
        return DividedPoly(terms, self.char, self.nvars)

    __rmul__ = __mul__

    def __str__(self):
        return _format(self, "Y")


def divided_mul(f: DividedPoly, g: DividedPoly) -> DividedPoly:
    """Product in the divided power algebra."""
    return f * g


def contract(F: Poly, g: DividedPoly) -> DividedPoly:
    """Contraction action of the polynomial ring on its graded dual:
    x^a . Y^[b] = Y^[b-a] when a <= b, else 0 (extended bilinearly)."""
    if type(F) is not Poly or type(g) is not DividedPoly:
        raise InvalidInput("contract takes (Poly, DividedPoly)")
    F._check_compat(g)
    terms: dict = {}
    zero = FieldScalar.zero(F.char)
    for a, ca in F.terms.items():
        for b, cb in g.terms.items():
            if vec_leq(a, b):
                k = vec_sub(b, a)
                terms[k] = terms.get(k, zero) + ca * cb
    return DividedPoly(terms, F.char, F.nvars)


def diff_apply(a, F: Poly) -> Poly:
    """Hasse derivative D_a(F) = sum_b F_b * C(b, a) * x^{b-a}.

    In characteristic p these operators (for a = p^i e_j) generate the full
    ring of differential operators; D_a = (1/a!) d^a in characteristic 0.
    """
    a = exponent_vec(a)
    if len(a) != F.nvars:
        raise Mismatch("operator exponent length differs from variable count")
    terms: dict = {}
    zero = FieldScalar.zero(F.char)
    for b, cb in F.terms.items():
        if vec_leq(a, b):
            k = vec_sub(b, a)
            m = multi_binomial(a, k, F.char)  # prod C(b_i, a_i)
            if m:
                terms[k] = terms.get(k, zero) + m * cb
    return Poly(terms, F.char, F.nvars)


def factorial_scalar(a, char: int = 0) -> FieldScalar:
    out = FieldScalar.one(char)
    for e in a:
        for k in range(2, e + 1):
            out = out * k
    return out


def poly_to_divided(F: Poly) -> DividedPoly:
    """Char-0 comparison functor y^a -> a! Y^[a].

    It intertwines the differentiation action of R on polynomials with the
    contraction action on divided powers, which is how the classical
    characteristic-zero picture embeds into the uniform one.
    """
    if F.char != 0:
        raise CharMismatch("the factorial comparison map needs characteristic 0")
    return DividedPoly(
        {a: c * factorial_scalar(a, 0) for a, c in F.terms.items()}, 0, F.nvars
    )


# ---------------------------------------------------------------------------
# projective points and one-point inverse systems


def canonical_point(coords, char: int = 0) -> tuple:
    """Canonical projective representative as a tuple of FieldScalars.

    Char 0: primitive integer vector with positive leading entry.
    Char p: leading nonzero coordinate scaled to 1.
    """
    validate_char(char)
    vals = []
    for c in coords:
        if isinstance(c, FieldScalar):
            if c.char != char:
                raise CharMismatch("point coordinate characteristic mismatch")
            vals.append(c.value)
        elif char == 0:
            vals.append(Fraction(c))
        else:
            vals.append(FieldScalar(c, char).value)
    if not any(vals):
        raise ZeroPoint("projective points need a nonzero coordinate")
    if char == 0:
        den = 1
        for v in vals:
            den = den * v.denominator // math.gcd(den, v.denominator)
        ints = [int(v * den) for v in vals]
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        ints = [x // g for x in ints]
        lead = next(x for x in ints if x)
        if lead < 0:
            ints = [-x for x in ints]
        return tuple(FieldScalar(x, 0) for x in ints)
    lead = next(v for v in vals if v % char)
    inv = pow(lead, -1, char)
    return tuple(FieldScalar(v * inv, char) for v in vals)


def point_ideal_generators(point) -> list:
    """N independent linear forms vanishing at the point."""
    coords = list(point)
    char = coords[0].char
    nvars = len(coords)
    i0 = next(i for i, c in enumerate(coords) if c)
    gens = []
    for j in range(nvars):
        if j == i0:
            continue
        e_i0 = [0] * nvars
        e_i0[i0] = 1
        e_j = [0] * nvars
        e_j[j] = 1
        gens.append(
            Poly({tuple(e_i0): coords[j], tuple(e_j): -coords[i0]}, char, nvars)
        )
    return gens


def dual_power(point, k: int) -> DividedPoly:
    """Divided power of the dual linear form of a point:
    sum over |a| = k of (prod p_i^{a_i}) Y^[a]."""
    coords = tuple(point)
    char = coords[0].char
    nvars = len(coords)
    if k < 0:
        raise InvalidInput("negative divided power")
    terms = {}
    for a in monomial_basis(nvars, k):
        c = FieldScalar.one(char)
        for p, e in zip(coords, a):
            if e:
                c = c * (p**e)
        if c:
            terms[a] = c
    return DividedPoly(terms, char, nvars)


@functools.lru_cache(maxsize=None)
def _one_point_perp_cached(coords, n: int, d: int):
    char = coords[0].char
    nvars = len(coords)
    if n <= 0:
        return GradedSubspace.zero(char, nvars, d, dual=True)
    if d < n:
        return GradedSubspace.full(char, nvars, d, dual=True)
    vectors = []
    for c in range(d - n + 1, d + 1):
        L = dual_power(coords, c)
        for a in monomial_basis(nvars, d - c):
            g = DividedPoly.monomial(a, 1, char) * L
            vectors.append(g.coefficient_vector(d))
    return GradedSubspace.from_vectors(vectors, char, nvars, d, dual=True)


def one_point_perp(point, n: int, d: int) -> "GradedSubspace":
    """Degree-d annihilator of the n-th power of a point's ideal.

    Spanned by Y^[a] * L_p^[c] for d-n+1 <= c <= d, |a| = d-c; the full
    dual space when d < n.  Valid in every characteristic.
    """
    coords = canonical_point(point) if not isinstance(point[0], FieldScalar) else tuple(point)
    return _one_point_perp_cached(coords, n, d)


# ---------------------------------------------------------------------------
# graded subspaces


class GradedSubspace:
    """Subspace of R_d (dual=False) or of its graded dual (dual=True).

    Stored as a canonical reduced row echelon matrix over the degree-d
    monomial basis; equal subspaces compare equal as tuples.
    """

    __slots__ = ("char", "nvars", "degree", "dual", "rows", "pivots")

    def __init__(self, char, nvars, degree, dual, rows, pivots):
        object.__setattr__(self, "char", char)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "dual", dual)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, name, val):
        raise AttributeError("GradedSubspace is immutable")

    @classmethod
    def from_vectors(cls, vectors, char, nvars, degree, dual=False):
        ncols = dim_graded(nvars, degree)
        rows, pivots = linalg.rref(vectors, ncols, char)
        return cls(char, nvars, degree, dual, rows, pivots)

    @classmethod
    def from_polys(cls, polys, degree: int | None = None, char=None, nvars=None, dual=None):
        if polys:
            p0 = polys[0]
            char, nvars = p0.char, p0.nvars
            if dual is None:
                dual = type(p0) is DividedPoly
            if degree is None:
                degree = p0.homogeneous_degree()
        elif degree is None or char is None or nvars is None:
            raise InvalidInput("empty basis needs explicit degree/char/nvars")
        vectors = [p.coefficient_vector(degree) for p in polys]
        return cls.from_vectors(vectors, char, nvars, degree, bool(dual))

    @classmethod
    def from_conditions(cls, condition_rows, char, nvars, degree, dual=False):
        """Joint kernel of the given functionals (rows in the same degree).

        Feeding stops as soon as the conditions span everything, in which
        case the kernel is zero; callers may therefore pass generously
        redundant condition sets.
        """
        ncols = dim_graded(nvars, degree)
        b = linalg.EchelonBuilder(ncols, char)
        for row in condition_rows:
            b.add(row)
            if b.is_full():
                return cls.zero(char, nvars, degree, dual)
        rows, pivots = b.finish()
        nrows, npiv = linalg.nullspace(rows, pivots, ncols, char)
        return cls(char, nvars, degree, dual, nrows, npiv)

    @classmethod
    def full(cls, char, nvars, degree, dual=False):
        ncols = dim_graded(nvars, degree)
        one = Fraction(1) if char == 0 else 1
        zero = Fraction(0) if char == 0 else 0
        rows = tuple(
            tuple(one if j == i else zero for j in range(ncols)) for i in range(ncols)
        )
        return cls(char, nvars, degree, dual, rows, tuple(range(ncols)))

    @classmethod
    def zero(cls, char, nvars, degree, dual=False):
        return cls(char, nvars, degree, dual, (), ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def ambient_dim(self) -> int:
        return dim_graded(self.nvars, self.degree)

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def is_zero(self) -> bool:
        return self.dim == 0

    def contains_vector(self, vec) -> bool:
        return linalg.vector_in(self.rows, self.pivots, vec, self.char)

    def contains(self, poly) -> bool:
        if not poly:
            return True
        return self.contains_vector(poly.coefficient_vector(self.degree))

    def le(self, other) -> bool:
        """Inclusion self <= other."""
        self._check(other)
        return all(other.contains_vector(list(r)) for r in self.rows)

    def _check(self, other):
        if (self.char, self.nvars, self.degree, self.dual) != (
            other.char, other.nvars, other.degree, other.dual,
        ):
            raise Mismatch("graded subspaces live in different ambient spaces")

    def perp(self) -> "GradedSubspace":
        """Annihilator under the monomial-basis pairing of R_d with its dual."""
        ncols = self.ambient_dim
        rows, pivots = linalg.nullspace(self.rows, self.pivots, ncols, self.char)
        return GradedSubspace(self.char, self.nvars, self.degree, not self.dual, rows, pivots)

    def add(self, other) -> "GradedSubspace":
        self._check(other)
        return GradedSubspace.from_vectors(
            [list(r) for r in self.rows + other.rows],
            self.char, self.nvars, self.degree, self.dual,
        )

    def intersect(self, other) -> "GradedSubspace":
        self._check(other)
        joint = self.perp().add(other.perp())
        return joint.perp()

    def basis_polys(self):
        cls = DividedPoly if self.dual else Poly
        return [
            cls.from_vector(r, self.degree, self.char, self.nvars) for r in self.rows
        ]

    def __eq__(self, other):
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return (
            self.char, self.nvars, self.degree, self.dual, self.rows,
        ) == (other.char, other.nvars, other.degree, other.dual, other.rows)

    def __hash__(self):
        return hash((self.char, self.nvars, self.degree, self.dual, self.rows))

    def __repr__(self):
        amb = "D" if self.dual else "R"
        return (
            f"<GradedSubspace dim {self.dim} of {amb}_{self.degree}, "
            f"{self.nvars} vars, char {self.char}>"
        )


def perp(U: GradedSubspace) -> GradedSubspace:
    return U.perp()


# ---------------------------------------------------------------------------
# text form

_FACTOR_RE = re.compile(r"^([xY])(\d+)(?:\^(?:\[(\d+)\]|(\d+)))?$")
_NUM_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def _format(poly, varname: str) -> str:
    if not poly.terms:
        return "0"
    divided = varname == "Y"
    chunks = []
    for a, c in poly.sorted_terms():
        factors = []
        for i, e in enumerate(a):
            if e == 0:
                continue
            if divided:
                factors.append(f"{varname}{i}" if e == 1 else f"{varname}{i}^[{e}]")
            else:
                factors.append(f"{varname}{i}" if e == 1 else f"{varname}{i}^{e}")
        body = "*".join(factors)
        cv = c.value
        if not factors:
            text = str(cv)
        elif cv == 1:
            text = body
        elif poly.char == 0 and cv == -1:
            text = "-" + body
        else:
            text = f"{cv}*{body}"
        chunks.append(text)
    out = chunks[0]
    for t in chunks[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def parse_poly(text: str, nvars: int, char: int = 0, divided: bool = False):
    """Parse '3*x0^2*x1 - x2^3' or 'Y0^[2]*Y1 + 2*Y2' style literals."""
    cls = DividedPoly if divided else Poly
    varname = "Y" if divided else "x"
    s = text.replace(" ", "")
    if not s:
        raise InvalidInput("empty polynomial literal")
    if s == "0":
        return cls.zero(char, nvars)
    pieces = re.split(r"(?=[+-])", s)
    terms: dict = {}
    zero = FieldScalar.zero(char)
    for piece in pieces:
        if not piece or piece in "+-":
            raise InvalidInput(f"malformed polynomial literal {text!r}")
        sign = 1
        if piece[0] == "+":
            piece = piece[1:]
        elif piece[0] == "-":
            sign = -1
            piece = piece[1:]
        coeff = FieldScalar(sign, char)
        exps = [0] * nvars
        for factor in piece.split("*"):
            if _NUM_RE.match(factor):
                coeff = coeff * FieldScalar(Fraction(factor), char)
                continue
            m = _FACTOR_RE.match(factor)
            if not m or m.group(1) != varname:
                raise InvalidInput(f"bad factor {factor!r} in {text!r}")
            idx = int(m.group(2))
            if idx >= nvars:
                raise InvalidInput(f"variable index {idx} out of range (nvars={nvars})")
            e = int(m.group(3) or m.group(4) or 1)
            exps[idx] += e
        key = tuple(exps)
        terms[key] = terms.get(key, zero) + coeff
    return cls(terms, char, nvars)


def poly_to_json(poly) -> dict:
    return {
        "divided": type(poly) is DividedPoly,
        "nvars": poly.nvars,
        "terms": [
            {"exp": list(a), "coeff": str(c.value)} for a, c in poly.sorted_terms()
        ],
    }


def poly_from_json(obj, char: int = 0):
    if isinstance(obj, str):
        raise InvalidInput("poly_from_json takes an object; use parse_poly for text")
    cls = DividedPoly if obj.get("divided") else Poly
    nvars = obj["nvars"]
    terms = {}
    zero = FieldScalar.zero(char)
    for t in obj["terms"]:
        key = exponent_vec(t["exp"])
        terms[key] = terms.get(key, zero) + FieldScalar(Fraction(t["coeff"]), char)
    return cls(terms, char, nvars)
