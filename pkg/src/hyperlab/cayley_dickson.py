"""Cayley-Dickson doubling algebras over exact rationals (or floats).

The level-r algebra lives on coefficient vectors of length 2**r indexed by
basis units e_0 ... e_{2^r - 1}, with e_0 the two-sided unit.  The product
doubles the level-(r-1) product:

    (a1, a2)(b1, b2) = (a1*b1 - conj(b2)*a2,  b2*a1 + a2*conj(b1))

where an element splits into first/second coefficient halves and
conj(a) = (conj(a1), -a2).  Levels 0..4 are the reals, complexes,
quaternions, octonions and sedenions; zero divisors first appear at
level 4.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import (
    DEFAULT_TOLERANCE,
    is_exact,
    matrix_rank_exact,
    matrix_rank_float,
)

DEFAULT_MAX_LEVEL = 8


class LevelMismatch(ValueError):
    """Operands live at different doubling levels."""


class LevelTooLarge(ValueError):
    """Requested level exceeds the configured cap."""


class NormZero(ZeroDivisionError):
    """Quadratic inverse of an element with vanishing norm."""


class InvalidConjugation(ValueError):
    """Doubling seed violates the conjugation axioms."""


def _check_level(r: int, max_level: int) -> None:
    if r < 0:
        raise LevelTooLarge(f"level must be nonnegative, got {r}")
    if r > max_level:
        raise LevelTooLarge(f"level {r} exceeds cap {max_level} (dim {2 ** r})")


# ---------------------------------------------------------------------------
# structure constants
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _basis_tables(r: int):
    """(index, sign) matrices with e_p e_q = sign[p][q] * e_{index[p][q]}."""
    if r == 0:
        return ((0,),), ((1,),)
    idx_prev, sgn_prev = _basis_tables(r - 1)
    h = 1 << (r - 1)
    dim = h * 2
    idx = [[0] * dim for _ in range(dim)]
    sgn = [[0] * dim for _ in range(dim)]
    for p in range(dim):
        for q in range(dim):
            if p < h and q < h:
                idx[p][q] = idx_prev[p][q]
                sgn[p][q] = sgn_prev[p][q]
            elif p < h:
                qq = q - h
                idx[p][q] = h + idx_prev[qq][p]
                sgn[p][q] = sgn_prev[qq][p]
            elif q < h:
                pp = p - h
                conj_sign = 1 if q == 0 else -1
                idx[p][q] = h + idx_prev[pp][q]
                sgn[p][q] = conj_sign * sgn_prev[pp][q]
            else:
                pp, qq = p - h, q - h
                conj_sign = 1 if qq == 0 else -1
                idx[p][q] = idx_prev[qq][pp]
                sgn[p][q] = -conj_sign * sgn_prev[qq][pp]
    return tuple(map(tuple, idx)), tuple(map(tuple, sgn))


@dataclass(frozen=True)
class MultiplicationTable:
    """Structure constants of the level-r algebra.

    Each basis product e_p e_q equals sign[p][q] * e_{index[p][q]} with
    sign +-1, so the full gamma^k_{pq} array has at most one nonzero entry
    per (p, q); row and column 0 act as the identity.
    """

    level: int
    index: tuple
    sign: tuple

    @property
    def dim(self) -> int:
        return 1 << self.level

    def product(self, p: int, q: int) -> tuple[int, int]:
        return self.index[p][q], self.sign[p][q]

    def gamma(self, p: int, q: int, k: int) -> int:
        return self.sign[p][q] if self.index[p][q] == k else 0

    def dense_gamma(self):
        n = self.dim
        out = [[[0] * n for _ in range(n)] for _ in range(n)]
        for p in range(n):
            for q in range(n):
                out[p][q][self.index[p][q]] = self.sign[p][q]
        return out

    def to_json_dict(self) -> dict:
        return {"kind": "cayley_dickson", "level": self.level}


def structure_constants(r: int, max_level: int = DEFAULT_MAX_LEVEL) -> MultiplicationTable:
    """Full multiplication table at level r, generated by the doubling
    recursion and cached."""
    _check_level(r, max_level)
    idx, sgn = _basis_tables(r)
    return MultiplicationTable(level=r, index=idx, sign=sgn)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

def _coerce_coeff(x):
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Fraction, float)):
        return x
    raise TypeError(f"unsupported coefficient {x!r}")


class CDElement:
    """A number in the level-r doubling algebra, as a coefficient vector.

    Exact elements carry int/Fraction coefficients and compare literally;
    float-valued elements compare through ``isclose``.
    """

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs):
        coeffs = [_coerce_coeff(c) for c in coeffs]
        if len(coeffs) != 1 << level:
            raise ValueError(
                f"level {level} needs {1 << level} coefficients, got {len(coeffs)}"
            )
        self.level = level
        self.coeffs = coeffs

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, level: int) -> "CDElement":
        return cls(level, [0] * (1 << level))

    @classmethod
    def one(cls, level: int) -> "CDElement":
        coeffs = [0] * (1 << level)
        coeffs[0] = 1
        return cls(level, coeffs)

    @classmethod
    def basis(cls, level: int, k: int, scale=1) -> "CDElement":
        coeffs = [0] * (1 << level)
        coeffs[k] = scale
        return cls(level, coeffs)

    # -- structure -----------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _require_same_level(self, other: "CDElement") -> None:
        if self.level != other.level:
            raise LevelMismatch(f"levels differ: {self.level} vs {other.level}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, CDElement):
            return NotImplemented
        self._require_same_level(other)
        return CDElement(self.level, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, CDElement):
            return NotImplemented
        self._require_same_level(other)
        return CDElement(self.level, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CDElement(self.level, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, CDElement):
            return cd_multiply(self, other)
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            return CDElement(self.level, [a * other for a in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            return CDElement(self.level, [other * a for a in self.coeffs])
        return NotImplemented

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction, float)) and not isinstance(scalar, bool):
            if is_exact(scalar):
                return CDElement(self.level, [Fraction(a) / scalar for a in self.coeffs])
            return CDElement(self.level, [a / scalar for a in self.coeffs])
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, CDElement):
            return NotImplemented
        return self.level == other.level and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.level, tuple(self.coeffs)))

    def isclose(self, other: "CDElement", tolerance: float = DEFAULT_TOLERANCE) -> bool:
        self._require_same_level(other)
        return all(abs(a - b) <= tolerance for a, b in zip(self.coeffs, other.coeffs))

    # -- derived quantities ----------------------------------------------------

    def conjugate(self) -> "CDElement":
        return conjugate(self)

    def trace(self):
        return trace(self)

    def norm_sq(self):
        return norm_sq(self)

    def inverse(self) -> "CDElement":
        return inverse_quadratic(self)

    def __repr__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            unit = "e0" if k == 0 else f"e{k}"
            if c == 1:
                parts.append(unit)
            elif c == -1:
                parts.append(f"-{unit}")
            else:
                parts.append(f"{c}*{unit}")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"CDElement(r={self.level}: {body})"

    # -- serialization -----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"level": self.level, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "CDElement":
        coeffs = []
        for text in data["coeffs"]:
            try:
                coeffs.append(Fraction(text))
            except ValueError:
                coeffs.append(float(text))
        return cls(int(data["level"]), coeffs)


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def cd_multiply(a: CDElement, b: CDElement) -> CDElement:
    """Product at the common level, driven by the cached basis table."""
    if a.level != b.level:
        raise LevelMismatch(f"levels differ: {a.level} vs {b.level}")
    idx, sgn = _basis_tables(a.level)
    out = [0] * (1 << a.level)
    for p, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        row_idx = idx[p]
        row_sgn = sgn[p]
        for q, cb in enumerate(b.coeffs):
            if cb == 0:
                continue
            out[row_idx[q]] += row_sgn[q] * ca * cb
    return CDElement(a.level, out)


def _conj_vec(v):
    return [v[0]] + [-c for c in v[1:]]


def _mul_vec_recursive(x, y):
    n = len(x)
    if n == 1:
        return [x[0] * y[0]]
    h = n // 2
    a1, a2 = x[:h], x[h:]
    b1, b2 = y[:h], y[h:]
    left = [
        u - v
        for u, v in zip(_mul_vec_recursive(a1, b1), _mul_vec_recursive(_conj_vec(b2), a2))
    ]
    right = [
        u + v
        for u, v in zip(_mul_vec_recursive(b2, a1), _mul_vec_recursive(a2, _conj_vec(b1)))
    ]
    return left + right


def cd_multiply_recursive(a: CDElement, b: CDElement) -> CDElement:
    """Same product computed by direct divide-and-conquer on the halves.

    Independent of the table path; kept as a cross-implementation oracle.
    """
    if a.level != b.level:
        raise LevelMismatch(f"levels differ: {a.level} vs {b.level}")
    return CDElement(a.level, _mul_vec_recursive(a.coeffs, b.coeffs))


def conjugate(a: CDElement) -> CDElement:
    """Fix e_0, negate every imaginary coefficient; an involution."""
    return CDElement(a.level, _conj_vec(a.coeffs))


def trace(a: CDElement):
    """T(u) = u + conj(u), returned as the scalar 2*u^0."""
    return 2 * a.coeffs[0]


def norm_sq(a: CDElement):
    """N(u) = u*conj(u) = sum of squared coefficients (exact when exact)."""
    return sum(c * c for c in a.coeffs)


def inverse_quadratic(a: CDElement) -> CDElement:
    """conj(a)/N(a).  Two-sided inverse by power-associativity; note this
    does not make left-multiplication by ``a`` invertible at level >= 4
    (see is_operator_invertible)."""
    n = norm_sq(a)
    if n == 0:
        raise NormZero("element has zero norm")
    return conjugate(a) / n


def left_multiplication_matrix(a: CDElement):
    """Matrix of x -> a*x in the basis, as columns over the scalar field."""
    idx, sgn = _basis_tables(a.level)
    dim = 1 << a.level
    mat = [[0] * dim for _ in range(dim)]
    for p, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for q in range(dim):
            mat[idx[p][q]][q] += sgn[p][q] * ca
    return mat


def right_multiplication_matrix(a: CDElement):
    """Matrix of x -> x*a in the basis."""
    idx, sgn = _basis_tables(a.level)
    dim = 1 << a.level
    mat = [[0] * dim for _ in range(dim)]
    for q, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for p in range(dim):
            mat[idx[p][q]][p] += sgn[p][q] * ca
    return mat


def is_operator_invertible(a: CDElement) -> tuple[bool, bool]:
    """Full-rank test for the left and right multiplication operators.

    Separates "nonzero norm" from "cancellable": zero divisors at level 4
    have nonzero norm but rank-deficient multiplication operators.
    """
    dim = 1 << a.level
    rank = matrix_rank_exact if a.is_exact else matrix_rank_float
    left = rank(left_multiplication_matrix(a)) == dim
    right = rank(right_multiplication_matrix(a)) == dim
    return left, right


def associator(a: CDElement, b: CDElement, c: CDElement) -> CDElement:
    """[a,b,c] = (ab)c - a(bc)."""
    if not (a.level == b.level == c.level):
        raise LevelMismatch("associator needs equal levels")
    return cd_multiply(cd_multiply(a, b), c) - cd_multiply(a, cd_multiply(b, c))


def commutator(a: CDElement, b: CDElement) -> CDElement:
    """ab - ba."""
    if a.level != b.level:
        raise LevelMismatch("commutator needs equal levels")
    return cd_multiply(a, b) - cd_multiply(b, a)


# ---------------------------------------------------------------------------
# identity battery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExhaustiveBasis:
    """Check identities on every tuple of basis units."""

    def describe(self) -> dict:
        return {"mode": "exhaustive-basis"}


@dataclass(frozen=True)
class RandomSample:
    """Check identities on seeded random small-integer coefficient vectors."""

    count: int = 200
    seed: int = 0
    span: int = 3

    def describe(self) -> dict:
        return {"mode": "random-sample", "count": self.count, "seed": self.seed}


@dataclass
class IdentityVerdict:
    name: str
    passed: bool
    witness: tuple | None
    checked: int

    def to_json_dict(self) -> dict:
        out = {"identity": self.name, "passed": self.passed, "checked": self.checked}
        if self.witness is not None:
            out["witness"] = [w.to_json_dict() for w in self.witness]
        return out


@dataclass
class PropertyReport:
    level: int
    mode: ExhaustiveBasis | RandomSample
    verdicts: dict

    def passed(self, name: str) -> bool:
        return self.verdicts[name].passed

    def witness(self, name: str):
        return self.verdicts[name].witness

    def all_passed(self) -> bool:
        return all(v.passed for v in self.verdicts.values())

    def to_json_dict(self) -> dict:
        return {
            "level": self.level,
            **self.mode.describe(),
            "identities": [v.to_json_dict() for v in self.verdicts.values()],
        }


def _identity_checks(level: int):
    one = CDElement.one(level)

    def associative(t):
        a, b, c = t
        return (a * b) * c == a * (b * c)

    def left_alternative(t):
        a, b = t
        return (a * a) * b == a * (a * b)

    def right_alternative(t):
        a, b = t
        return (a * b) * b == a * (b * b)

    def flexible(t):
        a, b = t
        return a * (b * a) == (a * b) * a

    def moufang_a(t):
        a, x, y = t
        return a * (x * (a * y)) == ((a * x) * a) * y

    def moufang_b(t):
        a, x, y = t
        return ((x * a) * y) * a == x * ((a * y) * a)

    def moufang_c(t):
        a, x, y = t
        return (a * x) * (y * a) == (a * (x * y)) * a

    def power_associative(t):
        (z,) = t
        powers = [one, z]
        for _ in range(5):
            powers.append(powers[-1] * z)
        for total in range(2, 7):
            for n in range(1, total):
                if powers[n] * powers[total - n] != powers[total]:
                    return False
        return True

    def norm_multiplicative(t):
        a, b = t
        return norm_sq(a * b) == norm_sq(a) * norm_sq(b)

    return [
        ("associative", 3, associative),
        ("left_alternative", 2, left_alternative),
        ("right_alternative", 2, right_alternative),
        ("flexible", 2, flexible),
        ("moufang_a", 3, moufang_a),
        ("moufang_b", 3, moufang_b),
        ("moufang_c", 3, moufang_c),
        ("power_associative", 1, power_associative),
        ("norm_multiplicative", 2, norm_multiplicative),
    ]


def zero_divisor_probe(level: int) -> tuple[CDElement, CDElement] | None:
    """The canonical annihilating pair (e3+e10, e6-e15), present from level 4."""
    if level < 4:
        return None
    a = CDElement.basis(level, 3) + CDElement.basis(level, 10)
    b = CDElement.basis(level, 6) - CDElement.basis(level, 15)
    return a, b


def identity_battery(
    r: int,
    mode: ExhaustiveBasis | RandomSample = ExhaustiveBasis(),
    max_level: int = DEFAULT_MAX_LEVEL,
) -> PropertyReport:
    """Verdicts for the standard identity ladder at level r.

    Every failure carries a concrete witness tuple that re-checks against
    the corresponding operation.  Known counterexample candidates (the
    canonical zero-divisor pair) are probed ahead of random sampling so
    failing identities report a stable witness.
    """
    _check_level(r, max_level)
    dim = 1 << r
    basis = [CDElement.basis(r, k) for k in range(dim)]
    probe = zero_divisor_probe(r)

    def tuples(arity: int):
        if isinstance(mode, ExhaustiveBasis):
            yield from itertools.product(basis, repeat=arity)
        else:
            rng = random.Random(mode.seed * 7919 + arity)
            if probe is not None and arity == 2:
                yield probe
            for _ in range(mode.count):
                yield tuple(
                    CDElement(
                        r,
                        [rng.randint(-mode.span, mode.span) for _ in range(dim)],
                    )
                    for _ in range(arity)
                )

    verdicts = {}
    for name, arity, check in _identity_checks(r):
        witness = None
        checked = 0
        for t in tuples(arity):
            checked += 1
            if not check(t):
                witness = t
                break
        verdicts[name] = IdentityVerdict(name, witness is None, witness, checked)
    return PropertyReport(level=r, mode=mode, verdicts=verdicts)


# ---------------------------------------------------------------------------
# zero divisors
# ---------------------------------------------------------------------------

def two_term_signed_candidates(r: int):
    """All e_i + s*e_j and -e_i + s*e_j with 1 <= i < j, s = +-1, in a fixed
    lexicographic order by (i, j, sign_i, sign_j)."""
    dim = 1 << r
    out = []
    for i in range(1, dim):
        for j in range(i + 1, dim):
            for si in (1, -1):
                for sj in (1, -1):
                    out.append((i, si, j, sj))
    return out


def find_zero_divisors(
    r: int,
    search_space="two-term-signed",
    max_level: int = DEFAULT_MAX_LEVEL,
) -> list[tuple[CDElement, CDElement]]:
    """All ordered pairs (a, b) from the search space with a, b nonzero and
    ab = 0, in deterministic order.  Empty below level 4."""
    _check_level(r, max_level)
    idx, sgn = _basis_tables(r)
    dim = 1 << r

    if search_space == "two-term-signed":
        keys = two_term_signed_candidates(r)

        def prod_is_zero(a, b):
            ai, asi, aj, asj = a
            bi, bsi, bj, bsj = b
            acc = [0] * dim
            for p, sp in ((ai, asi), (aj, asj)):
                for q, sq in ((bi, bsi), (bj, bsj)):
                    acc[idx[p][q]] += sp * sq * sgn[p][q]
            return not any(acc)

        pairs = []
        for a in keys:
            for b in keys:
                if prod_is_zero(a, b):
                    pairs.append((a, b))

        def build(key):
            i, si, j, sj = key
            coeffs = [0] * dim
            coeffs[i] = si
            coeffs[j] = sj
            return CDElement(r, coeffs)

        return [(build(a), build(b)) for a, b in pairs]

    candidates = [c for c in search_space if not c.is_zero()]
    out = []
    for a in candidates:
        for b in candidates:
            if cd_multiply(a, b).is_zero():
                out.append((a, b))
    return out


# ---------------------------------------------------------------------------
# Cayley extension (generic doubling with a conjugation)
# ---------------------------------------------------------------------------

class ConjugatedAlgebra:
    """Finite unital algebra with a conjugation, given by dense tables.

    ``mult[p][q]`` is the coefficient vector of the basis product b_p b_q
    and ``conj[p]`` the vector of the conjugate of b_p.  The unit is always
    the first basis vector.  Entries may be Fractions or polynomials, so
    the doubling below can run with symbolic parameters.
    """

    def __init__(self, mult, conj, validate: bool = True):
        self.dim = len(mult)
        self.mult = [[list(vec) for vec in row] for row in mult]
        self.conj = [list(vec) for vec in conj]
        if validate:
            self.validate()

    # vector helpers -------------------------------------------------------

    def _zero_vec(self):
        return [0 * self.mult[0][0][0] for _ in range(self.dim)]

    def unit_vector(self):
        vec = self._zero_vec()
        vec[0] = vec[0] + 1
        return vec

    def multiply(self, x, y):
        out = self._zero_vec()
        for p, cx in enumerate(x):
            if cx == 0:
                continue
            for q, cy in enumerate(y):
                if cy == 0:
                    continue
                prod = self.mult[p][q]
                for k in range(self.dim):
                    if prod[k] != 0:
                        out[k] = out[k] + cx * cy * prod[k]
        return out

    def conjugate_vector(self, x):
        out = self._zero_vec()
        for p, cx in enumerate(x):
            if cx == 0:
                continue
            for k in range(self.dim):
                if self.conj[p][k] != 0:
                    out[k] = out[k] + cx * self.conj[p][k]
        return out

    def _scalar_part(self, vec, what: str):
        for k in range(1, self.dim):
            if vec[k] != 0:
                raise InvalidConjugation(f"{what} is not a multiple of the unit")
        return vec[0]

    def trace_of(self, x):
        """T(u) = u + conj(u), as a scalar."""
        s = [a + b for a, b in zip(x, self.conjugate_vector(x))]
        return self._scalar_part(s, "u + conj(u)")

    def norm_of(self, x):
        """N(u) = u * conj(u), as a scalar."""
        n = self.multiply(x, self.conjugate_vector(x))
        return self._scalar_part(n, "u * conj(u)")

    # axioms ----------------------------------------------------------------

    def validate(self) -> None:
        """Conjugation axioms: involution fixing the unit, an
        anti-endomorphism, with u + conj(u) and u*conj(u) scalar."""
        n = self.dim
        unit = self.unit_vector()
        for p in range(n):
            e_p = [0 * unit[0]] * n
            e_p = list(e_p)
            e_p[p] = e_p[p] + 1
            if any(a != b for a, b in zip(self.multiply(unit, e_p), e_p)):
                raise InvalidConjugation("first basis vector is not a left unit")
            if any(a != b for a, b in zip(self.multiply(e_p, unit), e_p)):
                raise InvalidConjugation("first basis vector is not a right unit")
            twice = self.conjugate_vector(self.conjugate_vector(e_p))
            if any(a != b for a, b in zip(twice, e_p)):
                raise InvalidConjugation("conjugation is not an involution")
        if any(a != b for a, b in zip(self.conjugate_vector(unit), unit)):
            raise InvalidConjugation("conjugation moves the unit")
        basis = []
        for p in range(n):
            vec = self._zero_vec()
            vec[p] = vec[p] + 1
            basis.append(vec)
        for p in range(n):
            self.trace_of(basis[p])  # raises if not scalar
        for p in range(n):
            for q in range(n):
                # polarized form of u*conj(u) scalar
                uv = self.multiply(basis[p], self.conjugate_vector(basis[q]))
                vu = self.multiply(basis[q], self.conjugate_vector(basis[p]))
                self._scalar_part(
                    [a + b for a, b in zip(uv, vu)],
                    "u*conj(v) + v*conj(u)",
                )
                lhs = self.conjugate_vector(self.multiply(basis[p], basis[q]))
                rhs = self.multiply(
                    self.conjugate_vector(basis[q]), self.conjugate_vector(basis[p])
                )
                if any(a != b for a, b in zip(lhs, rhs)):
                    raise InvalidConjugation("conjugation is not an anti-endomorphism")

    # conversions -------------------------------------------------------------

    def as_table(self) -> MultiplicationTable:
        """Convert to a sparse +-1 table; only valid when every basis
        product is a signed basis vector."""
        n = self.dim
        level = n.bit_length() - 1
        if 1 << level != n:
            raise ValueError("dimension is not a power of two")
        idx = [[0] * n for _ in range(n)]
        sgn = [[0] * n for _ in range(n)]
        for p in range(n):
            for q in range(n):
                vec = self.mult[p][q]
                nz = [(k, c) for k, c in enumerate(vec) if c != 0]
                if len(nz) != 1 or nz[0][1] not in (1, -1):
                    raise ValueError("table entry is not a signed basis vector")
                idx[p][q], sgn[p][q] = nz[0][0], int(nz[0][1])
        return MultiplicationTable(level=level, index=tuple(map(tuple, idx)),
                                   sign=tuple(map(tuple, sgn)))


def real_conjugated() -> ConjugatedAlgebra:
    one = Fraction(1)
    return ConjugatedAlgebra(mult=[[[one]]], conj=[[one]])


def quadratic_algebra(alpha, beta) -> ConjugatedAlgebra:
    """Two-dimensional algebra on (e, i) with i^2 = alpha*e + beta*i and
    conjugation u -> T(u)e - u; parameters may be rational or symbolic."""
    zero = 0 * alpha
    one = zero + 1
    mult = [
        [[one, zero], [zero, one]],
        [[zero, one], [alpha, beta]],
    ]
    conj = [
        [one, zero],
        [beta, zero - 1],
    ]
    return ConjugatedAlgebra(mult=mult, conj=conj)


def cayley_extension(base: ConjugatedAlgebra, gamma) -> ConjugatedAlgebra:
    """Double (E, s) by gamma: on E x E the product is

        (x, y)(x', y') = (x x' + gamma * conj(y') y,  y conj(x') + y' x)

    with conjugation (x, y) -> (conj(x), -y).  gamma = -1 applied to the
    level-r table reproduces the level-(r+1) table.
    """
    n = base.dim
    zero = 0 * gamma

    def pad(first=None, second=None):
        vec = [zero] * (2 * n)
        if first is not None:
            for k, c in enumerate(first):
                vec[k] = vec[k] + c
        if second is not None:
            for k, c in enumerate(second):
                vec[n + k] = vec[n + k] + c
        return vec

    basis = []
    for p in range(n):
        vec = [zero] * n
        vec[p] = vec[p] + 1
        basis.append(vec)

    mult = [[None] * (2 * n) for _ in range(2 * n)]
    for p in range(2 * n):
        for q in range(2 * n):
            if p < n and q < n:
                mult[p][q] = pad(first=base.mult[p][q])
            elif p < n:
                qq = q - n
                mult[p][q] = pad(second=base.multiply(basis[qq], basis[p]))
            elif q < n:
                pp = p - n
                mult[p][q] = pad(
                    second=base.multiply(basis[pp], base.conjugate_vector(basis[q]))
                )
            else:
                pp, qq = p - n, q - n
                prod = base.multiply(base.conjugate_vector(basis[qq]), basis[pp])
                mult[p][q] = pad(first=[gamma * c for c in prod])

    conj = []
    for p in range(n):
        conj.append(pad(first=base.conj[p]))
    for p in range(n):
        vec = [zero] * n
        vec[p] = vec[p] - 1
        conj.append(pad(second=vec))

    return ConjugatedAlgebra(mult=mult, conj=conj)


def quaternion_type_algebra(alpha, beta, gamma) -> ConjugatedAlgebra:
    """The 4-dimensional doubling of the type-(alpha, beta) quadratic
    algebra by gamma, on the basis (e, i, j, k)."""
    return cayley_extension(quadratic_algebra(alpha, beta), gamma)


def conjugated_from_level(r: int, max_level: int = DEFAULT_MAX_LEVEL) -> ConjugatedAlgebra:
    """The level-r table packaged with its standard conjugation."""
    table = structure_constants(r, max_level)
    n = table.dim
    zero = Fraction(0)
    mult = [[None] * n for _ in range(n)]
    for p in range(n):
        for q in range(n):
            vec = [zero] * n
            k, s = table.product(p, q)
            vec[k] = Fraction(s)
            mult[p][q] = vec
    conj = []
    for p in range(n):
        vec = [zero] * n
        vec[p] = Fraction(1) if p == 0 else Fraction(-1)
        conj.append(vec)
    return ConjugatedAlgebra(mult=mult, conj=conj)


# ---------------------------------------------------------------------------
# quaternions as complex matrices
# ---------------------------------------------------------------------------

def quaternion_to_complex_matrix(q: CDElement):
    """Ring homomorphism sending a + b*e1 + c*e2 + d*e3 to
    [[a+bi, c+di], [-c+di, a-bi]]; the images of -i*e3, -i*e2, -i*e1 are
    the three standard 2x2 spin matrices."""
    if q.level != 2:
        raise LevelMismatch("expected a level-2 element")
    a, b, c, d = (complex(float(x), 0.0) for x in q.coeffs)
    i = 1j
    return [
        [a + b * i, c + d * i],
        [-c + d * i, a - b * i],
    ]


def pauli_matrices():
    """sigma_x, sigma_y, sigma_z derived from the quaternion embedding."""
    i, j, k = (CDElement.basis(2, n) for n in (1, 2, 3))
    scale = -1j

    def times(mat):
        return [[scale * entry for entry in row] for row in mat]

    return (
        times(quaternion_to_complex_matrix(k)),
        times(quaternion_to_complex_matrix(j)),
        times(quaternion_to_complex_matrix(i)),
    )
