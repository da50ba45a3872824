"""Finitely generated abelian groups: Smith normal form and the derived
functor bookkeeping (Hom, Ext, tensor), plus cyclic-group homology and the
sphere homology / Euler characteristic lookup tables.

A group is stored in canonical form: free rank plus the invariant-factor
chain d1 | d2 | ... | ds with every di >= 2, so isomorphism testing is
plain equality.  All matrix work uses Python's arbitrary-precision ints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod


class InfiniteGroup(ValueError):
    pass


def _factorint(n: int) -> dict:
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class FGAbelianGroup:
    """rank copies of Z plus the torsion chain d1 | d2 | ... | ds."""

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        for d in self.torsion:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"divisibility chain broken: {a} does not divide {b}")

    @classmethod
    def from_divisors(cls, *divisors: int) -> "FGAbelianGroup":
        """Normalize an arbitrary direct sum of cyclic groups Z/d (d = 0
        meaning Z) into canonical form.

        >>> print(FGAbelianGroup.from_divisors(15))
        Z15
        >>> FGAbelianGroup.from_divisors(15) == FGAbelianGroup.from_divisors(3, 5)
        True
        >>> print(FGAbelianGroup.from_divisors(0, 30, 4))
        Z + Z2 + Z60
        """
        rank = 0
        primary: dict[int, list[int]] = {}
        for d in divisors:
            d = abs(int(d))
            if d == 0:
                rank += 1
            elif d > 1:
                for p, e in _factorint(d).items():
                    primary.setdefault(p, []).append(e)
        chains = {p: sorted(es, reverse=True) for p, es in primary.items()}
        length = max((len(c) for c in chains.values()), default=0)
        factors = []
        for i in range(length):
            factors.append(
                prod(p ** chain[i] for p, chain in chains.items() if i < len(chain))
            )
        factors.reverse()  # ascending divisibility chain
        return cls(rank, tuple(factors))

    # -- basic structure ------------------------------------------------------

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self) -> int:
        if not self.is_finite():
            raise InfiniteGroup("group has free rank > 0")
        return prod(self.torsion) if self.torsion else 1

    def direct_sum(self, *others: "FGAbelianGroup") -> "FGAbelianGroup":
        divisors = [0] * self.rank + list(self.torsion)
        for g in others:
            divisors += [0] * g.rank + list(g.torsion)
        return FGAbelianGroup.from_divisors(*divisors)

    def primary_decomposition(self) -> list[int]:
        """Elementary divisors (prime powers), ascending."""
        out = []
        for d in self.torsion:
            out.extend(p ** e for p, e in _factorint(d).items())
        return sorted(out)

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "FGAbelianGroup":
        return cls.from_divisors(*([0] * int(data["rank"])), *data["torsion"])


TRIVIAL = FGAbelianGroup()
Z = FGAbelianGroup(rank=1)


def cyclic(n: int) -> FGAbelianGroup:
    return FGAbelianGroup.from_divisors(n)


def parse_group(text: str) -> FGAbelianGroup:
    """Parse compact names like 'Z28+Z2', 'Z^2+Z4', 'Z', '0'.

    >>> print(parse_group("Z^2+Z4"))
    Z + Z + Z4
    """
    text = text.strip()
    if text in ("0", "1", "trivial"):
        return TRIVIAL
    divisors = []
    for part in text.replace(" ", "").split("+"):
        if "^" in part:
            base, power = part.split("^")
            count = int(power)
        else:
            base, count = part, 1
        if base == "Z":
            divisors += [0] * count
        elif base.startswith("Z"):
            divisors += [int(base[1:])] * count
        else:
            raise ValueError(f"cannot parse group summand {part!r}")
    return FGAbelianGroup.from_divisors(*divisors)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(matrix):
    """U * M * V = D with d1 | d2 | ... and U, V unimodular.

    Returns (factors, U, V, D); ``factors`` is the full diagonal of D
    including zeros.  The transforms are rebuilt and verified before
    returning.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    a = [[int(x) for x in row] for row in matrix]
    u = _identity(m)
    v = _identity(n)

    def row_op(i, j, k):  # row_i -= k * row_j
        a[i] = [x - k * y for x, y in zip(a[i], a[j])]
        u[i] = [x - k * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, k):  # col_i -= k * col_j
        for row in a:
            row[i] -= k * row[j]
        for row in v:
            row[i] -= k * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        # find a pivot of least absolute value in the remaining block
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        if a[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, m):
            if a[i][t] != 0:
                row_op(i, t, a[i][t] // a[t][t])
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if a[t][j] != 0:
                col_op(j, t, a[t][j] // a[t][t])
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # force divisibility: a[t][t] must divide every later entry
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)  # adds the offending row, creating smaller remainders
            continue
        t += 1

    factors = [a[i][i] for i in range(min(m, n))]
    d = [[a[i][j] for j in range(n)] for i in range(m)]
    _verify_snf(matrix, factors, u, v, d)
    return factors, u, v, d


def _det_unimodular(mat) -> int:
    # integer determinant by fraction-free Bareiss elimination
    from fractions import Fraction

    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    assert det.denominator == 1
    return int(det)


def _verify_snf(matrix, factors, u, v, d) -> None:
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    # U M V == D, recomputed exactly
    um = [
        [sum(u[i][k] * matrix[k][j] for k in range(m)) for j in range(n)]
        for i in range(m)
    ]
    umv = [
        [sum(um[i][k] * v[k][j] for k in range(n)) for j in range(n)]
        for i in range(m)
    ]
    assert umv == d, "U*M*V does not equal D"
    for i in range(m):
        for j in range(n):
            if i != j:
                assert d[i][j] == 0, "D not diagonal"
    for x, y in zip(factors, factors[1:]):
        if x != 0:
            assert y % x == 0, "divisibility chain broken"
        else:
            assert y == 0, "zero factor precedes nonzero"
    if m:
        assert _det_unimodular(u) in (1, -1), "U not unimodular"
    if n:
        assert _det_unimodular(v) in (1, -1), "V not unimodular"


def decompose(presentation) -> FGAbelianGroup:
    """Cokernel of a presentation: rows are relations among the column
    generators, so the group is Z^cols modulo the row span."""
    if not presentation or not presentation[0]:
        ncols = len(presentation[0]) if presentation else 0
        return FGAbelianGroup(rank=ncols)
    ncols = len(presentation[0])
    factors, *_ = smith_normal_form(presentation)
    nonzero = [f for f in factors if f != 0]
    rank = ncols - len(nonzero)
    return FGAbelianGroup.from_divisors(*([0] * rank), *nonzero)


def iso_check(g: FGAbelianGroup, h: FGAbelianGroup) -> bool:
    """Canonical forms are unique, so isomorphism is equality."""
    return g == h


# ---------------------------------------------------------------------------
# Hom, Ext, tensor
# ---------------------------------------------------------------------------

def _cyclic_blocks(g: FGAbelianGroup) -> list[int]:
    """0 stands for Z; positive entries are finite cyclic orders."""
    return [0] * g.rank + list(g.torsion)


def hom(g: FGAbelianGroup, h: FGAbelianGroup) -> FGAbelianGroup:
    """Hom(Zm, Zn) = Z_gcd, Hom(Z, G) = G, Hom(Zm, Z) = 0; additive.

    >>> print(hom(cyclic(28), cyclic(2)))
    Z2
    >>> print(hom(cyclic(10), Z))
    0
    """
    divisors = []
    for a in _cyclic_blocks(g):
        for b in _cyclic_blocks(h):
            if a == 0:
                divisors.append(b)
            elif b == 0:
                pass
            else:
                divisors.append(gcd(a, b))
    return FGAbelianGroup.from_divisors(*divisors)


def ext(g: FGAbelianGroup, h: FGAbelianGroup) -> FGAbelianGroup:
    """Ext(Z, G) = 0, Ext(Zm, Z) = Zm, Ext(Zm, Zn) = Z_gcd; additive.

    Equivalently Ext(Zm, H) = H/mH from the length-one free resolution of
    Zm (multiplication by m followed by the quotient map).

    >>> print(ext(cyclic(28), cyclic(2)))
    Z2
    >>> print(ext(Z, cyclic(7)))
    0
    >>> print(ext(cyclic(12), cyclic(18)))
    Z6
    """
    divisors = []
    for a in _cyclic_blocks(g):
        if a == 0:
            continue
        for b in _cyclic_blocks(h):
            divisors.append(a if b == 0 else gcd(a, b))
    return FGAbelianGroup.from_divisors(*divisors)


def tensor(g: FGAbelianGroup, h: FGAbelianGroup) -> FGAbelianGroup:
    """Zm (x) Zn = Z_gcd, Z (x) G = G; additive."""
    divisors = []
    for a in _cyclic_blocks(g):
        for b in _cyclic_blocks(h):
            if a == 0:
                divisors.append(b)
            elif b == 0:
                divisors.append(a)
            else:
                divisors.append(gcd(a, b))
    return FGAbelianGroup.from_divisors(*divisors)


def quotient_by_multiple(h: FGAbelianGroup, m: int) -> FGAbelianGroup:
    """H / mH computed from a presentation matrix, not from the gcd rule;
    serves as the independent route for Ext(Zm, H)."""
    if m == 0:
        return h
    blocks = _cyclic_blocks(h)
    k = len(blocks)
    # generators x1..xk, relations: d_i x_i = 0 (finite blocks) and m x_i = 0
    rows = []
    for i, d in enumerate(blocks):
        if d != 0:
            rows.append([d if j == i else 0 for j in range(k)])
        rows.append([m if j == i else 0 for j in range(k)])
    if not rows:
        return TRIVIAL
    return decompose(rows)


# -- brute-force oracles ------------------------------------------------------

def count_homs_brute(m: int, n: int) -> int:
    """Homomorphisms Zm -> Zn by enumerating images of the generator."""
    return sum(1 for x in range(n) if (m * x) % n == 0)


def image_order_multiplication(m: int, n: int) -> int:
    """Order of the subgroup m*Zn, by enumeration."""
    return len({(m * x) % n for x in range(n)})


def ext_order_brute(m: int, n: int) -> int:
    """|Zn / mZn| by enumeration; equals |Ext(Zm, Zn)|."""
    return n // image_order_multiplication(m, n)


# ---------------------------------------------------------------------------
# homology lookups
# ---------------------------------------------------------------------------

def cyclic_homology(order: int, degree: int) -> FGAbelianGroup:
    """Integral homology of the cyclic group of the given order:
    Z in degree 0, Z/order in odd degrees, trivial in positive even ones."""
    if order < 1 or degree < 0:
        raise ValueError("order >= 1 and degree >= 0 required")
    if degree == 0:
        return Z
    if degree % 2 == 1:
        return cyclic(order)
    return TRIVIAL


def sphere_homology(n: int, p: int) -> FGAbelianGroup:
    """Integral homology of the n-sphere; Z + Z in degree 0 when n = 0."""
    if n < 0 or p < 0:
        raise ValueError("n >= 0 and p >= 0 required")
    if n == 0:
        return FGAbelianGroup(rank=2) if p == 0 else TRIVIAL
    return Z if p in (0, n) else TRIVIAL


def euler_characteristic(n: int) -> int:
    """1 + (-1)^n: zero for odd n, two for even n."""
    if n < 0:
        raise ValueError("n >= 0 required")
    return 1 + (-1) ** n


def second_cohomology_of_cyclic(order: int, coefficients: FGAbelianGroup) -> FGAbelianGroup:
    """H^2 with trivial action via universal coefficients:
    Hom(H2, M) + Ext(H1, M) with the cyclic homology table supplying H1, H2."""
    h1 = cyclic_homology(order, 1)
    h2 = cyclic_homology(order, 2)
    return hom(h2, coefficients).direct_sum(ext(h1, coefficients))


# ---------------------------------------------------------------------------
# extension counting
# ---------------------------------------------------------------------------

def aut_is_trivial(g: FGAbelianGroup) -> bool:
    """Only the trivial group and Z2 have trivial automorphism groups:
    anything with an element of order > 2 admits negation, and (Z2)^k for
    k >= 2 admits coordinate swaps."""
    if not g.is_finite():
        return False
    return g.order() <= 2


@dataclass
class ExtensionReport:
    base: FGAbelianGroup
    fiber: FGAbelianGroup
    ext_group: FGAbelianGroup
    ext_order: int
    aut_fiber_trivial: bool
    direct_sum_order: int | None

    def to_json_dict(self) -> dict:
        return {
            "base": self.base.to_json_dict(),
            "fiber": self.fiber.to_json_dict(),
            "ext_group": self.ext_group.to_json_dict(),
            "ext_order": self.ext_order,
            "aut_fiber_trivial": self.aut_fiber_trivial,
            "direct_sum_order": self.direct_sum_order,
        }


def extension_count(base: FGAbelianGroup, fiber: FGAbelianGroup) -> ExtensionReport:
    """|Ext(base, fiber)| for finite groups; when the fiber has no
    nontrivial automorphisms the total order is forced to
    |base| * |fiber|."""
    if not base.is_finite() or not fiber.is_finite():
        raise InfiniteGroup("extension counting needs finite base and fiber")
    e = ext(base, fiber)
    trivial_aut = aut_is_trivial(fiber)
    return ExtensionReport(
        base=base,
        fiber=fiber,
        ext_group=e,
        ext_order=e.order(),
        aut_fiber_trivial=trivial_aut,
        direct_sum_order=base.order() * fiber.order() if trivial_aut else None,
    )


def abelian_groups_of_order(n: int) -> list[FGAbelianGroup]:
    """All isomorphism classes of abelian groups of order n."""
    if n < 1:
        raise ValueError("order must be positive")

    def partitions(k):
        if k == 0:
            yield ()
            return
        for first in range(k, 0, -1):
            for rest in partitions(k - first):
                if not rest or rest[0] <= first:
                    yield (first,) + rest

    per_prime = []
    for p, e in _factorint(n).items():
        per_prime.append([[p ** part for part in parts] for parts in partitions(e)])
    if not per_prime:
        return [TRIVIAL]
    groups = []
    for combo in itertools.product(*per_prime):
        divisors = [d for block in combo for d in block]
        groups.append(FGAbelianGroup.from_divisors(*divisors))
    unique = []
    for g in groups:
        if g not in unique:
            unique.append(g)
    return unique
