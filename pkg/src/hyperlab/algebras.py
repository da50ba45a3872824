"""Finite structure-constant algebras and their doubling-algebra tensor
products.

A ``StructureAlgebra`` is a unital algebra given by a dense gamma array;
``TensorAlgebra`` combines one with a level-r doubling algebra on the basis
b_i (x) e_p, ordered p-major.  Centre, nucleus, classic limit and the two
canonical factor embeddings are computed exactly over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cayley_dickson import (
    DEFAULT_MAX_LEVEL,
    CDElement,
    LevelMismatch,
    _basis_tables,
    _check_level,
)
from .exact import mat_mult, nullspace, rref


class InvalidAlgebra(ValueError):
    pass


class AlgebraMismatch(ValueError):
    pass


class DimTooLarge(ValueError):
    pass


class NoFunctional(ValueError):
    """Classic limit requested but the base carries no functional."""


DEFAULT_NUCLEUS_CAP = 64


def _frac_vec(values):
    return [Fraction(v) for v in values]


class StructureAlgebra:
    """Unital algebra from an n x n x n structure-constant array.

    gamma[p][q][k] is the e_k coefficient of b_p b_q.  The unit vector is
    verified to be a two-sided identity at construction; associativity is
    established by checking all basis triples.
    """

    def __init__(self, gamma, unit, name: str = "", classic_limit=None):
        self.dim = len(gamma)
        self.gamma = [
            [_frac_vec(vec) for vec in row] for row in gamma
        ]
        self.unit = _frac_vec(unit)
        self.name = name or f"algebra(dim={self.dim})"
        self.classic_limit_functional = (
            _frac_vec(classic_limit) if classic_limit is not None else None
        )
        if len(self.unit) != self.dim or any(
            len(row) != self.dim or any(len(vec) != self.dim for vec in row)
            for row in self.gamma
        ):
            raise InvalidAlgebra("gamma/unit dimensions are inconsistent")
        self._check_unit()
        self.associative = self._check_associative()
        if self.classic_limit_functional is not None:
            value = sum(
                c * u for c, u in zip(self.classic_limit_functional, self.unit)
            )
            if value != 1:
                raise InvalidAlgebra("classic-limit functional must be 1 on the unit")

    def zero_vector(self):
        return [Fraction(0)] * self.dim

    def basis_vector(self, i: int):
        vec = self.zero_vector()
        vec[i] = Fraction(1)
        return vec

    def multiply(self, x, y):
        out = self.zero_vector()
        for p, cx in enumerate(x):
            if cx == 0:
                continue
            for q, cy in enumerate(y):
                if cy == 0:
                    continue
                coeff = cx * cy
                for k, g in enumerate(self.gamma[p][q]):
                    if g != 0:
                        out[k] += coeff * g
        return out

    def _check_unit(self) -> None:
        for i in range(self.dim):
            b = self.basis_vector(i)
            if self.multiply(self.unit, b) != b or self.multiply(b, self.unit) != b:
                raise InvalidAlgebra("unit vector is not a two-sided identity")

    def _check_associative(self) -> bool:
        basis = [self.basis_vector(i) for i in range(self.dim)]
        for a in basis:
            for b in basis:
                ab = self.multiply(a, b)
                for c in basis:
                    if self.multiply(ab, c) != self.multiply(a, self.multiply(b, c)):
                        return False
        return True

    def left_matrix(self, x):
        cols = [self.multiply(x, self.basis_vector(q)) for q in range(self.dim)]
        return [[cols[q][k] for q in range(self.dim)] for k in range(self.dim)]

    def to_json_dict(self) -> dict:
        return {
            "kind": "structure_constants",
            "dim": self.dim,
            "unit": [str(u) for u in self.unit],
            "gamma": [
                [[str(g) for g in vec] for vec in row] for row in self.gamma
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict, name: str = "") -> "StructureAlgebra":
        gamma = [
            [[Fraction(g) for g in vec] for vec in row] for row in data["gamma"]
        ]
        unit = [Fraction(u) for u in data["unit"]]
        return cls(gamma, unit, name=name)

    def __repr__(self):
        return f"StructureAlgebra({self.name}, dim={self.dim})"


# -- shipped base algebras ----------------------------------------------------

def real_algebra() -> StructureAlgebra:
    return StructureAlgebra([[[1]]], [1], name="R", classic_limit=[1])


def complex_algebra() -> StructureAlgebra:
    """C as a 2-dimensional structure algebra on (1, i)."""
    gamma = [
        [[1, 0], [0, 1]],
        [[0, 1], [-1, 0]],
    ]
    return StructureAlgebra(gamma, [1, 0], name="C", classic_limit=[1, 0])


def matrix2_algebra() -> StructureAlgebra:
    """M_2(R) on the matrix units (E11, E12, E21, E22)."""
    dim = 4

    def unit_index(i, j):
        return 2 * i + j

    gamma = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for m in range(2):
                    # E_ij E_km = delta_jk E_im
                    if j == k:
                        gamma[unit_index(i, j)][unit_index(k, m)][unit_index(i, m)] = 1
    unit = [1, 0, 0, 1]
    half = Fraction(1, 2)
    return StructureAlgebra(gamma, unit, name="M2(R)",
                            classic_limit=[half, 0, 0, half])


def upper_triangular2_algebra() -> StructureAlgebra:
    """Upper-triangular 2x2 matrices on (E11, E12, E22); noncommutative and
    not semisimple."""
    names = [(0, 0), (0, 1), (1, 1)]
    index = {pair: n for n, pair in enumerate(names)}
    dim = 3
    gamma = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for a, (i, j) in enumerate(names):
        for b, (k, m) in enumerate(names):
            if j == k and (i, m) in index:
                gamma[a][b][index[(i, m)]] = 1
    unit = [1, 0, 1]
    half = Fraction(1, 2)
    return StructureAlgebra(gamma, unit, name="UT2(R)",
                            classic_limit=[half, 0, half])


BASE_ALGEBRAS = {
    "real": real_algebra,
    "complex": complex_algebra,
    "mat2": matrix2_algebra,
    "upper2": upper_triangular2_algebra,
}


# ---------------------------------------------------------------------------
# tensor with a doubling algebra
# ---------------------------------------------------------------------------

class TensorAlgebra:
    """B (x) A_r on the basis b_i (x) e_p with index p * dim(B) + i.

    The combined structure constants are the Kronecker combination of B's
    gamma array with the level-r table; associativity holds exactly when B
    is associative and r <= 2 (re-verified on basis triples for small
    dimensions).
    """

    def __init__(self, base: StructureAlgebra, level: int,
                 max_level: int = DEFAULT_MAX_LEVEL):
        _check_level(level, max_level)
        self.base = base
        self.level = level
        self.cd_dim = 1 << level
        self.dim = base.dim * self.cd_dim
        self._cd_index, self._cd_sign = _basis_tables(level)
        self.associative = base.associative and level <= 2
        if self.dim <= 32 and self._verify_associative() != self.associative:
            raise InvalidAlgebra("associativity flag disagrees with basis check")

    def tensor_index(self, i: int, p: int) -> int:
        return p * self.base.dim + i

    def split_index(self, n: int) -> tuple[int, int]:
        return n % self.base.dim, n // self.base.dim

    def zero_vector(self):
        return [Fraction(0)] * self.dim

    def unit_vector(self):
        vec = self.zero_vector()
        for i, c in enumerate(self.base.unit):
            vec[self.tensor_index(i, 0)] = c
        return vec

    def multiply(self, x, y):
        """Component product: blocks combine through the base gamma array
        and the +-1 doubling table."""
        nb = self.base.dim
        out = self.zero_vector()
        for n, cx in enumerate(x):
            if cx == 0:
                continue
            i, p = n % nb, n // nb
            for m, cy in enumerate(y):
                if cy == 0:
                    continue
                j, q = m % nb, m // nb
                k_cd = self._cd_index[p][q]
                s = self._cd_sign[p][q]
                coeff = cx * cy if s > 0 else -cx * cy
                block = k_cd * nb
                for k, g in enumerate(self.base.gamma[i][j]):
                    if g != 0:
                        out[block + k] += coeff * g
        return out

    def basis_product(self, n: int, m: int):
        x = self.zero_vector()
        y = self.zero_vector()
        x[n] = Fraction(1)
        y[m] = Fraction(1)
        return self.multiply(x, y)

    def _verify_associative(self) -> bool:
        vecs = []
        for n in range(self.dim):
            v = self.zero_vector()
            v[n] = Fraction(1)
            vecs.append(v)
        for a in vecs:
            for b in vecs:
                ab = self.multiply(a, b)
                for c in vecs:
                    if self.multiply(ab, c) != self.multiply(a, self.multiply(b, c)):
                        return False
        return True

    def dense_gamma(self):
        return [
            [self.basis_product(n, m) for m in range(self.dim)]
            for n in range(self.dim)
        ]

    def to_json_dict(self) -> dict:
        # basis_order records the fixed (b_i (x) e_p) -> p * dim(B) + i layout
        return {"B": self.base.to_json_dict(), "level": self.level,
                "basis_order": "cd-major"}

    def __repr__(self):
        return f"TensorAlgebra({self.base.name} (x) A_{self.level}, dim={self.dim})"


def tensor_algebra(base: StructureAlgebra, level: int,
                   max_level: int = DEFAULT_MAX_LEVEL) -> TensorAlgebra:
    return TensorAlgebra(base, level, max_level=max_level)


@dataclass
class TensorElement:
    """A vector in a TensorAlgebra; length matches the algebra dimension."""

    algebra: TensorAlgebra
    coeffs: list = field(default_factory=list)

    def __post_init__(self):
        self.coeffs = _frac_vec(self.coeffs)
        if len(self.coeffs) != self.algebra.dim:
            raise AlgebraMismatch(
                f"expected {self.algebra.dim} coefficients, got {len(self.coeffs)}"
            )

    def _require_same(self, other: "TensorElement"):
        if self.algebra is not other.algebra:
            if (self.algebra.level != other.algebra.level
                    or self.algebra.base is not other.algebra.base):
                raise AlgebraMismatch("elements live in different algebras")

    def __add__(self, other):
        self._require_same(other)
        return TensorElement(
            self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        self._require_same(other)
        return TensorElement(
            self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return TensorElement(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return qh_multiply(self, other)
        return TensorElement(self.algebra, [a * other for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_json_dict(self) -> dict:
        return {
            "B": self.algebra.base.name,
            "level": self.algebra.level,
            "coeffs": [str(c) for c in self.coeffs],
        }


def qh_multiply(x: TensorElement, y: TensorElement) -> TensorElement:
    x._require_same(y)
    return TensorElement(x.algebra, x.algebra.multiply(x.coeffs, y.coeffs))


def pure_tensor(algebra: TensorAlgebra, b_coeffs, cd: CDElement) -> TensorElement:
    """b (x) a for a base vector b and a doubling-algebra element a."""
    if cd.level != algebra.level:
        raise LevelMismatch("doubling level differs from the algebra")
    vec = algebra.zero_vector()
    for p, ca in enumerate(cd.coeffs):
        if ca == 0:
            continue
        for i, cb in enumerate(b_coeffs):
            if cb == 0:
                continue
            vec[algebra.tensor_index(i, p)] += Fraction(cb) * ca
    return TensorElement(algebra, vec)


def multiply_via_regular_representation(x: TensorElement, y: TensorElement):
    """Oracle product through the Kronecker product of the left-regular
    representations; valid when the algebra is associative."""
    alg = x.algebra
    if not alg.associative:
        raise InvalidAlgebra("regular-representation oracle needs associativity")
    nb, nc = alg.base.dim, alg.cd_dim

    def rep(element: TensorElement):
        mat = [[Fraction(0)] * alg.dim for _ in range(alg.dim)]
        for n, c in enumerate(element.coeffs):
            if c == 0:
                continue
            i, p = alg.split_index(n)
            lb = alg.base.left_matrix(alg.base.basis_vector(i))
            for q in range(nc):
                k = alg._cd_index[p][q]
                s = alg._cd_sign[p][q]
                for a in range(nb):
                    for bcol in range(nb):
                        if lb[a][bcol] != 0:
                            mat[k * nb + a][q * nb + bcol] += c * s * lb[a][bcol]
        return mat

    unit = alg.unit_vector()
    prod = mat_mult(rep(x), rep(y))
    coeffs = [
        sum(prod[row][col] * unit[col] for col in range(alg.dim))
        for row in range(alg.dim)
    ]
    return TensorElement(alg, coeffs)


# ---------------------------------------------------------------------------
# centre, nucleus, classic limit, embeddings
# ---------------------------------------------------------------------------

def _algebra_view(algebra):
    """(dim, basis_product) for either algebra flavour."""
    if isinstance(algebra, TensorAlgebra):
        return algebra.dim, algebra.basis_product
    if isinstance(algebra, StructureAlgebra):
        def basis_product(n, m):
            return algebra.multiply(algebra.basis_vector(n), algebra.basis_vector(m))
        return algebra.dim, basis_product
    raise TypeError(f"unsupported algebra {algebra!r}")


def _multiply_general(algebra, x, y):
    if isinstance(algebra, TensorAlgebra):
        return algebra.multiply(x, y)
    return algebra.multiply(x, y)


def centre(algebra) -> list:
    """Basis of {x : xb = bx for every b}, the nullspace of all commutator
    operators; each returned vector is re-verified to commute."""
    dim, basis_product = _algebra_view(algebra)
    rows = []
    for j in range(dim):
        # commutator with basis element j, acting on the unknown coefficients
        for k in range(dim):
            row = []
            for n in range(dim):
                left = basis_product(n, j)[k]
                right = basis_product(j, n)[k]
                row.append(left - right)
            rows.append(row)
    basis = nullspace(rows, dim)
    for vec in basis:
        for j in range(dim):
            ej = [Fraction(int(t == j)) for t in range(dim)]
            if _multiply_general(algebra, vec, ej) != _multiply_general(algebra, ej, vec):
                raise AssertionError("centre vector fails to commute")
    return basis


def nucleus(algebra, cap: int = DEFAULT_NUCLEUS_CAP) -> list:
    """Basis of {a : [a,b,c] = [b,a,c] = [b,c,a] = 0 for all basis b, c}.

    Constraint rows are absorbed into a growing echelon so memory stays
    proportional to dim^2 even though there are 3*dim^3 constraints.
    """
    dim, basis_product = _algebra_view(algebra)
    if dim > cap:
        raise DimTooLarge(f"nucleus capped at dimension {cap}, got {dim}")

    mult_cache = [[basis_product(n, m) for m in range(dim)] for n in range(dim)]
    echelon = []  # (pivot column, normalized row)

    def absorb(row):
        row = list(row)
        for pivot_col, pivot_row in echelon:
            if row[pivot_col] != 0:
                f = row[pivot_col]
                row = [x - f * y for x, y in zip(row, pivot_row)]
        for col, val in enumerate(row):
            if val != 0:
                row = [x / val for x in row]
                for idx, (pc, pr) in enumerate(echelon):
                    if pr[col] != 0:
                        f = pr[col]
                        echelon[idx] = (pc, [x - f * y for x, y in zip(pr, row)])
                echelon.append((col, row))
                return

    for b in range(dim):
        for c in range(dim):
            for r in _nucleus_rows(dim, mult_cache, b, c):
                absorb(r)

    constraint = [row for _, row in echelon]
    return nullspace(constraint, dim) if constraint else nullspace([], dim)


def _nucleus_rows(dim, mult_cache, b, c):
    """Constraint rows (one per output coordinate) for the three associator
    placements of the unknown at fixed basis indices (b, c)."""
    def mul(vec, j, left):
        out = [Fraction(0)] * dim
        for n, cv in enumerate(vec):
            if cv != 0:
                prod = mult_cache[j][n] if left else mult_cache[n][j]
                for k, g in enumerate(prod):
                    if g != 0:
                        out[k] += cv * g
        return out

    bc = mult_cache[b][c]
    rows = []
    cols_abc = []
    cols_bac = []
    cols_bca = []
    for n in range(dim):
        nb = mult_cache[n][b]
        bn = mult_cache[b][n]
        # [a, b, c] = (a b) c - a (b c)
        a_bc = [Fraction(0)] * dim
        for k, g in enumerate(bc):
            if g != 0:
                for kk, gg in enumerate(mult_cache[n][k]):
                    if gg != 0:
                        a_bc[kk] += g * gg
        cols_abc.append([x - y for x, y in zip(mul(nb, c, left=False), a_bc)])
        # [b, a, c] = (b a) c - b (a c)
        nc = mult_cache[n][c]
        b_ac = mul(nc, b, left=True)
        cols_bac.append([x - y for x, y in zip(mul(bn, c, left=False), b_ac)])
        # [b, c, a] = (b c) a - b (c a)
        cn = mult_cache[c][n]
        bc_a = [Fraction(0)] * dim
        for k, g in enumerate(bc):
            if g != 0:
                for kk, gg in enumerate(mult_cache[k][n]):
                    if gg != 0:
                        bc_a[kk] += g * gg
        b_ca = mul(cn, b, left=True)
        cols_bca.append([x - y for x, y in zip(bc_a, b_ca)])
    for k in range(dim):
        rows.append([cols_abc[n][k] for n in range(dim)])
        rows.append([cols_bac[n][k] for n in range(dim)])
        rows.append([cols_bca[n][k] for n in range(dim)])
    return [r for r in rows if any(x != 0 for x in r)]


def classic_limit(x: TensorElement):
    """c_B (x) (half the doubling trace): linear, unital, scalar-valued."""
    c_b = x.algebra.base.classic_limit_functional
    if c_b is None:
        raise NoFunctional(f"{x.algebra.base.name} has no classic-limit functional")
    total = Fraction(0)
    for i, cf in enumerate(c_b):
        if cf != 0:
            total += cf * x.coeffs[x.algebra.tensor_index(i, 0)]
    return total


def embed_factors(algebra: TensorAlgebra):
    """(embed_base, embed_cd): the unital homomorphisms b -> b (x) 1 and
    a -> e_B (x) a whose images generate the tensor algebra."""

    def embed_base(b_coeffs) -> TensorElement:
        return pure_tensor(algebra, b_coeffs, CDElement.one(algebra.level))

    def embed_cd(a: CDElement) -> TensorElement:
        return pure_tensor(algebra, algebra.base.unit, a)

    return embed_base, embed_cd


def verify_embeddings(algebra: TensorAlgebra) -> dict:
    """Check both embeddings are unital homomorphisms on basis products and
    that they commute elementwise."""
    embed_base, embed_cd = embed_factors(algebra)
    nb = algebra.base.dim
    report = {"base_homomorphism": True, "cd_homomorphism": True,
              "unital": True, "factors_commute": True}
    unit = TensorElement(algebra, algebra.unit_vector())
    if embed_base(algebra.base.unit) != unit or embed_cd(CDElement.one(algebra.level)) != unit:
        report["unital"] = False
    for i in range(nb):
        for j in range(nb):
            bi = algebra.base.basis_vector(i)
            bj = algebra.base.basis_vector(j)
            lhs = qh_multiply(embed_base(bi), embed_base(bj))
            rhs = embed_base(algebra.base.multiply(bi, bj))
            if lhs != rhs:
                report["base_homomorphism"] = False
    for p in range(algebra.cd_dim):
        for q in range(algebra.cd_dim):
            ep = CDElement.basis(algebra.level, p)
            eq = CDElement.basis(algebra.level, q)
            lhs = qh_multiply(embed_cd(ep), embed_cd(eq))
            rhs = embed_cd(ep * eq)
            if lhs != rhs:
                report["cd_homomorphism"] = False
    for i in range(nb):
        for p in range(algebra.cd_dim):
            b = embed_base(algebra.base.basis_vector(i))
            a = embed_cd(CDElement.basis(algebra.level, p))
            if qh_multiply(b, a) != qh_multiply(a, b):
                report["factors_commute"] = False
            if qh_multiply(b, a) != pure_tensor(
                algebra, algebra.base.basis_vector(i), CDElement.basis(algebra.level, p)
            ):
                report["base_homomorphism"] = False
    return report
