"""Finite Heyting algebras: construction, laws, filters, quotients.

Elements of a finite algebra are dense indices 0..n-1 with index 0 the
bottom element; meet, join and implication are n x n index tables and the
order is recovered as a <= b iff a /\\ b = a.  Constructors exist for
finite topologies (implication by interior of union-with-complement),
chains, poset up-sets, and raw lattice tables (where the implication is
found by brute force or the construction is rejected).  Ground sets are
capped at 16 points so subsets fit in bitmask ints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

MAX_POINTS = 16
MAX_LATTICE = 256


class InvalidTopology(ValueError):
    pass


class InvalidPoset(ValueError):
    pass


class InvalidFilter(ValueError):
    pass


class NotHeyting(ValueError):
    """Lattice admits no relative pseudo-complement; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidLattice(ValueError):
    pass


# ---------------------------------------------------------------------------
# ground structures
# ---------------------------------------------------------------------------

def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class FiniteTopology:
    """Open-set family on a small named point set, opens as bitmasks."""

    points: tuple
    opens: tuple

    def __post_init__(self):
        if len(self.points) > MAX_POINTS:
            raise InvalidTopology(f"at most {MAX_POINTS} points supported")
        full = (1 << len(self.points)) - 1
        opens = set(self.opens)
        if 0 not in opens or full not in opens:
            raise InvalidTopology("opens must contain the empty and full sets")
        for a in opens:
            if a & ~full:
                raise InvalidTopology("open set refers to missing points")
            for b in opens:
                if (a | b) not in opens or (a & b) not in opens:
                    raise InvalidTopology("opens not closed under union/intersection")

    @property
    def full_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def interior(self, mask: int) -> int:
        """Largest open contained in the given subset."""
        best = 0
        for o in self.opens:
            if o & ~mask == 0 and _popcount(o) > _popcount(best):
                best = o
        return best

    def mask_name(self, mask: int) -> list:
        return [p for i, p in enumerate(self.points) if mask >> i & 1]

    @classmethod
    def from_subsets(cls, points, subsets) -> "FiniteTopology":
        index = {p: i for i, p in enumerate(points)}
        masks = []
        for s in subsets:
            mask = 0
            for p in s:
                mask |= 1 << index[p]
            masks.append(mask)
        return cls(tuple(points), tuple(sorted(set(masks))))

    def to_json_dict(self) -> dict:
        return {
            "points": list(self.points),
            "opens": [self.mask_name(m) for m in sorted(self.opens)],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FiniteTopology":
        return cls.from_subsets(data["points"], data["opens"])


def discrete_topology(points) -> FiniteTopology:
    n = len(points)
    return FiniteTopology(tuple(points), tuple(range(1 << n)))


def indiscrete_topology(points) -> FiniteTopology:
    return FiniteTopology(tuple(points), (0, (1 << len(points)) - 1))


def sierpinski_topology() -> FiniteTopology:
    return FiniteTopology(("a", "b"), (0, 0b01, 0b11))


def enumerate_topologies(n: int):
    """Every topology on n labelled points (n <= 4 is practical)."""
    full = (1 << n) - 1
    middles = [m for m in range(1, full)]
    for selection in itertools.product((False, True), repeat=len(middles)):
        opens = {0, full}
        opens.update(m for m, take in zip(middles, selection) if take)
        closed = True
        for a in opens:
            for b in opens:
                if (a | b) not in opens or (a & b) not in opens:
                    closed = False
                    break
            if not closed:
                break
        if closed:
            yield FiniteTopology(tuple(f"p{i}" for i in range(n)), tuple(sorted(opens)))


@dataclass(frozen=True)
class FinitePoset:
    """Partial order as a boolean matrix; reflexivity, antisymmetry and
    transitivity are verified (preorders are rejected)."""

    elements: tuple
    le: tuple  # le[i][j] == True iff element i <= element j

    def __post_init__(self):
        n = len(self.elements)
        if len(self.le) != n or any(len(row) != n for row in self.le):
            raise InvalidPoset("order matrix shape mismatch")
        for i in range(n):
            if not self.le[i][i]:
                raise InvalidPoset("order not reflexive")
            for j in range(n):
                if i != j and self.le[i][j] and self.le[j][i]:
                    raise InvalidPoset("order not antisymmetric (preorder rejected)")
                for k in range(n):
                    if self.le[i][j] and self.le[j][k] and not self.le[i][k]:
                        raise InvalidPoset("order not transitive")

    @classmethod
    def from_pairs(cls, elements, pairs) -> "FinitePoset":
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        le = [[i == j for j in range(n)] for i in range(n)]
        for a, b in pairs:
            le[index[a]][index[b]] = True
        # transitive closure before validation
        changed = True
        while changed:
            changed = False
            for i in range(n):
                for j in range(n):
                    if le[i][j]:
                        for k in range(n):
                            if le[j][k] and not le[i][k]:
                                le[i][k] = True
                                changed = True
        return cls(tuple(elements), tuple(tuple(row) for row in le))

    def to_json_dict(self) -> dict:
        pairs = [
            [self.elements[i], self.elements[j]]
            for i in range(len(self.elements))
            for j in range(len(self.elements))
            if self.le[i][j] and i != j
        ]
        return {"elements": list(self.elements), "le": pairs}

    @classmethod
    def from_json_dict(cls, data: dict) -> "FinitePoset":
        return cls.from_pairs(data["elements"], [tuple(p) for p in data["le"]])


# ---------------------------------------------------------------------------
# the algebra
# ---------------------------------------------------------------------------

class HeytingAlgebra:
    """Finite bounded lattice with a residuated implication.

    Construction verifies, over all pairs/triples: the bounded-lattice laws,
    both distributivity identities, and the residuation law
    a /\\ c <= b  iff  c <= (a -> b).
    """

    def __init__(self, meet, join, impl, bottom: int, top: int,
                 labels=None, verify: bool = True):
        self.n = len(meet)
        if self.n > MAX_LATTICE:
            raise InvalidLattice(f"size capped at {MAX_LATTICE}")
        self.meet = [list(row) for row in meet]
        self.join = [list(row) for row in join]
        self.impl = [list(row) for row in impl]
        self.bottom = bottom
        self.top = top
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.n)]
        if verify:
            self._verify()

    # order and negation ----------------------------------------------------

    def leq(self, a: int, b: int) -> bool:
        return self.meet[a][b] == a

    def neg(self, x: int) -> int:
        return self.impl[x][self.bottom]

    def elements(self):
        return range(self.n)

    # verification ----------------------------------------------------------

    def _verify(self) -> None:
        rng = range(self.n)
        for a in rng:
            if self.meet[a][a] != a or self.join[a][a] != a:
                raise InvalidLattice("idempotence fails")
            if not self.leq(self.bottom, a) or not self.leq(a, self.top):
                raise InvalidLattice("bounds are not extreme")
            for b in rng:
                if self.meet[a][b] != self.meet[b][a]:
                    raise InvalidLattice("meet not commutative")
                if self.join[a][b] != self.join[b][a]:
                    raise InvalidLattice("join not commutative")
                if self.meet[a][self.join[a][b]] != a or self.join[a][self.meet[a][b]] != a:
                    raise InvalidLattice("absorption fails")
        for a in rng:
            for b in rng:
                for c in rng:
                    if self.meet[self.meet[a][b]][c] != self.meet[a][self.meet[b][c]]:
                        raise InvalidLattice("meet not associative")
                    if self.join[self.join[a][b]][c] != self.join[a][self.join[b][c]]:
                        raise InvalidLattice("join not associative")
                    if self.meet[a][self.join[b][c]] != self.join[self.meet[a][b]][self.meet[a][c]]:
                        raise InvalidLattice("meet does not distribute over join")
                    if self.join[a][self.meet[b][c]] != self.meet[self.join[a][b]][self.join[a][c]]:
                        raise InvalidLattice("join does not distribute over meet")
                    # residuation: a /\ c <= b  iff  c <= a -> b
                    lhs = self.leq(self.meet[a][c], b)
                    rhs = self.leq(c, self.impl[a][b])
                    if lhs != rhs:
                        raise InvalidLattice("residuation law fails")

    # serialization -----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "size": self.n,
            "bottom": self.bottom,
            "top": self.top,
            "labels": self.labels,
            "meet": self.meet,
            "join": self.join,
            "impl": self.impl,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "HeytingAlgebra":
        return cls(data["meet"], data["join"], data["impl"],
                   data["bottom"], data["top"], labels=data.get("labels"))

    def __repr__(self):
        return f"HeytingAlgebra(n={self.n})"

    def is_isomorphic_chain(self) -> bool:
        return all(self.leq(a, b) or self.leq(b, a)
                   for a in self.elements() for b in self.elements())


# -- implication helpers --------------------------------------------------------

def implication_by_search(meet, leq, n, a, b):
    """Greatest c with a /\\ c <= b, or None if no greatest one exists."""
    candidates = [c for c in range(n) if leq(meet[a][c], b)]
    for c in candidates:
        if all(leq(d, c) for d in candidates):
            return c
    return None


def relative_pseudo_complement(h: HeytingAlgebra, a: int, b: int) -> int:
    """Greatest x with a /\\ x <= b; table lookup (existence is part of the
    construction contract)."""
    return h.impl[a][b]


def pseudo_complement(h: HeytingAlgebra, x: int) -> int:
    return h.impl[x][h.bottom]


# -- constructors ---------------------------------------------------------------

def heyting_from_topology(topology: FiniteTopology, verify: bool = True) -> HeytingAlgebra:
    """Elements are the open sets ordered by inclusion; implication is the
    interior of (complement union the target)."""
    opens = sorted(topology.opens, key=lambda m: (_popcount(m), m))
    index = {m: i for i, m in enumerate(opens)}
    full = topology.full_mask
    n = len(opens)
    meet = [[index[a & b] for b in opens] for a in opens]
    join = [[index[a | b] for b in opens] for a in opens]
    impl = [[index[topology.interior((full & ~a) | b)] for b in opens] for a in opens]
    labels = ["{" + ",".join(topology.mask_name(m)) + "}" for m in opens]
    return HeytingAlgebra(meet, join, impl, index[0], index[full],
                          labels=labels, verify=verify)


def heyting_from_chain(n: int) -> HeytingAlgebra:
    """The n-element chain 0 < 1/(n-1) < ... < 1 with
    p -> q = q when p > q and 1 otherwise; Boolean only for n <= 2."""
    if n < 1:
        raise InvalidLattice("chain needs at least one element")
    rng = range(n)
    meet = [[min(a, b) for b in rng] for a in rng]
    join = [[max(a, b) for b in rng] for a in rng]
    impl = [[(b if a > b else n - 1) for b in rng] for a in rng]
    if n == 1:
        labels = ["0"]
    else:
        labels = ["0"] + [f"{k}/{n - 1}" for k in range(1, n - 1)] + ["1"]
    return HeytingAlgebra(meet, join, impl, 0, n - 1, labels=labels)


def heyting_from_poset_upsets(poset: FinitePoset, direction: str = "up") -> HeytingAlgebra:
    """Up-sets (or down-sets) of a finite poset form a topology; delegate."""
    if direction not in ("up", "down"):
        raise ValueError("direction must be 'up' or 'down'")
    n = len(poset.elements)
    if n > MAX_POINTS:
        raise InvalidPoset(f"at most {MAX_POINTS} elements supported")
    opens = []
    for mask in range(1 << n):
        good = True
        for i in range(n):
            if not (mask >> i & 1):
                continue
            for j in range(n):
                above = poset.le[i][j] if direction == "up" else poset.le[j][i]
                if above and not (mask >> j & 1):
                    good = False
                    break
            if not good:
                break
        if good:
            opens.append(mask)
    topology = FiniteTopology(poset.elements, tuple(opens))
    return heyting_from_topology(topology)


def heyting_from_lattice(meet, join, labels=None) -> HeytingAlgebra:
    """Brute-force the implication of a bounded lattice.

    Raises NotHeyting with a witness pair when some (a, b) has no greatest
    c with a /\\ c <= b; on finite lattices this happens exactly when the
    lattice is not distributive.
    """
    n = len(meet)
    bottom = top = None
    for x in range(n):
        if all(meet[x][y] == x for y in range(n)):
            bottom = x
        if all(join[x][y] == x for y in range(n)):
            top = x
    if bottom is None or top is None:
        raise InvalidLattice("lattice is not bounded")

    def leq(a, b):
        return meet[a][b] == a

    impl = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            c = implication_by_search(meet, leq, n, a, b)
            if c is None:
                raise NotHeyting(
                    f"no greatest c with {a} /\\ c <= {b}", witness=(a, b)
                )
            impl[a][b] = c
    return HeytingAlgebra(meet, join, impl, bottom, top, labels=labels)


def pentagon_lattice():
    """N5: 0 < a < b < 1 and 0 < c < 1 with c incomparable to a, b."""
    # elements: 0, a, b, c, 1
    order = {(0, 0), (1, 1), (2, 2), (3, 3), (4, 4),
             (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 4), (3, 4)}

    def leq(x, y):
        return (x, y) in order

    return _lattice_tables_from_order(5, leq)


def diamond_lattice():
    """M3: three incomparable atoms between 0 and 1."""
    order = {(i, i) for i in range(5)} | {(0, i) for i in range(5)} | {
        (i, 4) for i in range(5)}

    def leq(x, y):
        return (x, y) in order

    return _lattice_tables_from_order(5, leq)


def _lattice_tables_from_order(n, leq):
    meet = [[None] * n for _ in range(n)]
    join = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lower = [c for c in range(n) if leq(c, a) and leq(c, b)]
            upper = [c for c in range(n) if leq(a, c) and leq(b, c)]
            for c in lower:
                if all(leq(d, c) for d in lower):
                    meet[a][b] = c
            for c in upper:
                if all(leq(c, d) for d in upper):
                    join[a][b] = c
            if meet[a][b] is None or join[a][b] is None:
                raise InvalidLattice("order is not a lattice")
    return meet, join


# ---------------------------------------------------------------------------
# classification and law reports
# ---------------------------------------------------------------------------

@dataclass
class ElementClassification:
    regular: frozenset
    complemented: frozenset
    is_boolean: bool
    h_reg: HeytingAlgebra
    h_comp: HeytingAlgebra

    def to_json_dict(self) -> dict:
        return {
            "regular": sorted(self.regular),
            "complemented": sorted(self.complemented),
            "is_boolean": self.is_boolean,
            "regular_size": len(self.regular),
            "complemented_size": len(self.complemented),
        }


def classify_elements(h: HeytingAlgebra) -> ElementClassification:
    """Regular (fixed by double negation) and complemented elements, with
    the two induced Boolean algebras.

    H_comp is a subalgebra of H; H_reg keeps meet, negation and
    implication but joins through x \\/ y := neg(neg x /\\ neg y).
    """
    neg = h.neg
    regular = frozenset(x for x in h.elements() if neg(neg(x)) == x)
    complemented = frozenset(
        x for x in h.elements()
        if any(h.meet[x][y] == h.bottom and h.join[x][y] == h.top
               for y in h.elements())
    )
    is_boolean = len(regular) == h.n

    def subalgebra(members, join_rule):
        members = sorted(members)
        index = {m: i for i, m in enumerate(members)}
        meet = [[index[h.meet[a][b]] for b in members] for a in members]
        join = [[index[join_rule(a, b)] for b in members] for a in members]
        impl = [[index[h.impl[a][b]] for b in members] for a in members]
        return HeytingAlgebra(meet, join, impl, index[h.bottom], index[h.top],
                              labels=[h.labels[m] for m in members])

    h_comp = subalgebra(complemented, lambda a, b: h.join[a][b])
    h_reg = subalgebra(regular, lambda a, b: neg(h.meet[neg(a)][neg(b)]))
    return ElementClassification(regular, complemented, is_boolean, h_reg, h_comp)


_AXIOM_NAMES = [
    "antisymmetry", "top_detection", "weakening", "distribution_of_implication",
    "meet_left", "meet_right", "adjunction", "join_left", "join_right",
    "case_split", "ex_falso",
]


def _intuitionistic_axioms(h: HeytingAlgebra) -> dict:
    """The eleven propositional axioms, quantified over all tuples."""
    top, bot = h.top, h.bottom
    imp, meet, join = h.impl, h.meet, h.join
    results = {name: True for name in _AXIOM_NAMES}
    for x in h.elements():
        if imp[top][x] == top and x != top:
            results["top_detection"] = False
        if imp[bot][x] != top:
            results["ex_falso"] = False
        for y in h.elements():
            if imp[x][y] == top and imp[y][x] == top and x != y:
                results["antisymmetry"] = False
            if imp[x][imp[y][x]] != top:
                results["weakening"] = False
            if imp[meet[x][y]][x] != top:
                results["meet_left"] = False
            if imp[meet[x][y]][y] != top:
                results["meet_right"] = False
            if imp[x][imp[y][meet[x][y]]] != top:
                results["adjunction"] = False
            if imp[x][join[x][y]] != top:
                results["join_left"] = False
            if imp[y][join[x][y]] != top:
                results["join_right"] = False
            for z in h.elements():
                if imp[imp[x][imp[y][z]]][imp[imp[x][y]][imp[x][z]]] != top:
                    results["distribution_of_implication"] = False
                if imp[imp[x][z]][imp[imp[y][z]][imp[join[x][y]][z]]] != top:
                    results["case_split"] = False
    return results


@dataclass
class LawReport:
    axioms: dict
    regular_de_morgan: bool
    weak_de_morgan: bool
    seven_conditions: dict
    seven_agree: bool
    triple_negation: bool
    negation_fixed_points: list
    witness: dict = field(default_factory=dict)

    def all_mandatory_pass(self) -> bool:
        return (all(self.axioms.values()) and self.regular_de_morgan
                and self.weak_de_morgan and self.triple_negation)

    def seven_block_passes(self) -> bool:
        return all(self.seven_conditions.values())

    def to_json_dict(self) -> dict:
        return {
            "axioms": self.axioms,
            "regular_de_morgan": self.regular_de_morgan,
            "weak_de_morgan": self.weak_de_morgan,
            "seven_conditions": self.seven_conditions,
            "seven_agree": self.seven_agree,
            "triple_negation": self.triple_negation,
            "negation_fixed_points": self.negation_fixed_points,
            "witness": self.witness,
        }


def law_report(h: HeytingAlgebra) -> LawReport:
    """Exhaustive law check: the eleven axioms, both De Morgan laws and
    triple negation (all must hold in any valid algebra), plus the block of
    seven mutually equivalent stronger conditions, which passes or fails as
    one (their agreement is itself reported)."""
    neg, meet, join = h.neg, h.meet, h.join
    top = h.top
    regulars = [x for x in h.elements() if neg(neg(x)) == x]
    witness = {}

    regular_dm = True
    weak_dm = True
    triple = True
    for x in h.elements():
        if neg(neg(neg(x))) != neg(x):
            triple = False
        for y in h.elements():
            if neg(join[x][y]) != meet[neg(x)][neg(y)]:
                regular_dm = False
            if neg(meet[x][y]) != neg(neg(join[neg(x)][neg(y)])):
                weak_dm = False

    def strong_dual(xs, ys):
        return all(neg(meet[x][y]) == join[neg(x)][neg(y)] for x in xs for y in ys)

    cond = {}
    cond["both_de_morgan"] = regular_dm and strong_dual(h.elements(), h.elements())
    cond["strong_dual_all"] = strong_dual(h.elements(), h.elements())
    cond["strong_dual_regular"] = strong_dual(regulars, regulars)
    cond["double_neg_join_all"] = all(
        neg(neg(join[x][y])) == join[neg(neg(x))][neg(neg(y))]
        for x in h.elements() for y in h.elements()
    )
    cond["join_of_regular_regular"] = all(
        neg(neg(join[x][y])) == join[x][y] for x in regulars for y in regulars
    )
    cond["regular_join_formula"] = all(
        neg(meet[neg(x)][neg(y)]) == join[x][y] for x in regulars for y in regulars
    )
    cond["weak_excluded_middle"] = all(
        join[neg(x)][neg(neg(x))] == top for x in h.elements()
    )
    if not cond["weak_excluded_middle"]:
        for x in h.elements():
            if join[neg(x)][neg(neg(x))] != top:
                witness["weak_excluded_middle"] = {
                    "x": h.labels[x],
                    "value": h.labels[join[neg(x)][neg(neg(x))]],
                }
                break

    fixed = [h.labels[x] for x in h.elements() if neg(x) == x]
    return LawReport(
        axioms=_intuitionistic_axioms(h),
        regular_de_morgan=regular_dm,
        weak_de_morgan=weak_dm,
        seven_conditions=cond,
        seven_agree=len(set(cond.values())) == 1,
        triple_negation=triple,
        negation_fixed_points=fixed,
        witness=witness,
    )


# ---------------------------------------------------------------------------
# filters, quotients, morphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Filter:
    """Meet-closed upward-closed subset containing the top element."""

    algebra: HeytingAlgebra
    members: frozenset

    def __post_init__(self):
        h = self.algebra
        if h.top not in self.members:
            raise InvalidFilter("filter must contain the top element")
        for x in self.members:
            for y in self.members:
                if h.meet[x][y] not in self.members:
                    raise InvalidFilter("filter not closed under meet")
            for y in h.elements():
                if h.leq(x, y) and y not in self.members:
                    raise InvalidFilter("filter not upward closed")

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def to_json_dict(self) -> dict:
        return {"members": sorted(self.members)}


def filter_generate(h: HeytingAlgebra, generators) -> Filter:
    """Smallest filter containing the generators: everything above a finite
    meet of generators; {top} when the set is empty."""
    generators = list(generators)
    if not generators:
        return Filter(h, frozenset({h.top}))
    meets = {h.top}
    frontier = {h.top}
    while frontier:
        new = set()
        for m in frontier:
            for g in generators:
                v = h.meet[m][g]
                if v not in meets:
                    new.add(v)
        meets |= new
        frontier = new
    members = {y for y in h.elements() if any(h.leq(m, y) for m in meets)}
    return Filter(h, frozenset(members))


def intersect_filters(f1: Filter, f2: Filter) -> Filter:
    if f1.algebra is not f2.algebra:
        raise InvalidFilter("filters on different algebras")
    return Filter(f1.algebra, f1.members & f2.members)


def quotient_by_filter(h: HeytingAlgebra, f: Filter):
    """Quotient by x ~ y iff x -> y and y -> x both lie in the filter.

    Returns (quotient algebra, projection list).  Class representatives are
    least indices; the projection is a morphism whose kernel is the filter,
    and the induced operations are checked to be representative-independent.
    """
    if f.algebra is not h:
        raise InvalidFilter("filter belongs to a different algebra")

    def related(x, y):
        return h.impl[x][y] in f and h.impl[y][x] in f

    classes = []
    proj = [None] * h.n
    for x in h.elements():
        for idx, cls in enumerate(classes):
            if related(x, cls[0]):
                cls.append(x)
                proj[x] = idx
                break
        else:
            classes.append([x])
            proj[x] = len(classes) - 1

    reps = [cls[0] for cls in classes]
    m = len(classes)
    meet = [[proj[h.meet[a][b]] for b in reps] for a in reps]
    join = [[proj[h.join[a][b]] for b in reps] for a in reps]
    impl = [[proj[h.impl[a][b]] for b in reps] for a in reps]
    # well-definedness across representatives
    for cls in classes:
        for alt in cls[1:]:
            for other in reps:
                if (proj[h.meet[alt][other]] != meet[proj[alt]][proj[other]]
                        or proj[h.join[alt][other]] != join[proj[alt]][proj[other]]
                        or proj[h.impl[alt][other]] != impl[proj[alt]][proj[other]]
                        or proj[h.impl[other][alt]] != impl[proj[other]][proj[alt]]):
                    raise InvalidFilter("quotient operations not well defined")
    labels = ["[" + h.labels[r] + "]" for r in reps]
    quotient = HeytingAlgebra(meet, join, impl, proj[h.bottom], proj[h.top],
                              labels=labels)
    return quotient, proj


@dataclass
class MorphismReport:
    clauses: dict
    failures: dict

    def is_morphism(self) -> bool:
        return all(self.clauses.values())

    def to_json_dict(self) -> dict:
        return {"clauses": self.clauses, "failures": self.failures}


def verify_morphism(h1: HeytingAlgebra, h2: HeytingAlgebra, f) -> MorphismReport:
    """Check the six morphism clauses of a total map on all pairs."""
    clauses = {name: True for name in
               ("bottom", "top", "meet", "join", "implication", "negation")}
    failures = {}

    def fail(name, info):
        clauses[name] = False
        failures.setdefault(name, info)

    if f[h1.bottom] != h2.bottom:
        fail("bottom", {"maps_to": f[h1.bottom]})
    if f[h1.top] != h2.top:
        fail("top", {"maps_to": f[h1.top]})
    for x in h1.elements():
        if f[h1.neg(x)] != h2.neg(f[x]):
            fail("negation", {"x": x})
        for y in h1.elements():
            if f[h1.meet[x][y]] != h2.meet[f[x]][f[y]]:
                fail("meet", {"x": x, "y": y})
            if f[h1.join[x][y]] != h2.join[f[x]][f[y]]:
                fail("join", {"x": x, "y": y})
            if f[h1.impl[x][y]] != h2.impl[f[x]][f[y]]:
                fail("implication", {"x": x, "y": y})
    return MorphismReport(clauses, failures)


def kernel(h1: HeytingAlgebra, h2: HeytingAlgebra, f) -> Filter:
    """Preimage of the top element, as a filter on the source."""
    return Filter(h1, frozenset(x for x in h1.elements() if f[x] == h2.top))


def algebras_isomorphic(h1: HeytingAlgebra, h2: HeytingAlgebra) -> bool:
    """Existence of a bijective morphism; exhaustive, for small algebras."""
    if h1.n != h2.n:
        return False
    for perm in itertools.permutations(range(h2.n)):
        if perm[h1.bottom] != h2.bottom or perm[h1.top] != h2.top:
            continue
        if all(
            perm[h1.meet[x][y]] == h2.meet[perm[x]][perm[y]]
            and perm[h1.join[x][y]] == h2.join[perm[x]][perm[y]]
            and perm[h1.impl[x][y]] == h2.impl[perm[x]][perm[y]]
            for x in range(h1.n) for y in range(h1.n)
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# Boolean rings
# ---------------------------------------------------------------------------

@dataclass
class BooleanRingReport:
    size: int
    idempotent: bool
    characteristic_two: bool
    ring_axioms: bool
    roundtrip_identity: bool
    char_map_isomorphism: bool
    exhaustive: bool

    def all_passed(self) -> bool:
        return (self.idempotent and self.characteristic_two and self.ring_axioms
                and self.roundtrip_identity and self.char_map_isomorphism)

    def to_json_dict(self) -> dict:
        return self.__dict__.copy()


class SetTooLarge(ValueError):
    pass


def boolean_ring_roundtrip(n_points: int, sample_seed: int = 0) -> BooleanRingReport:
    """The ring of subsets under symmetric difference and intersection.

    Verifies idempotence and characteristic two on every element; the ring
    axioms, the ring <-> algebra conversions round-tripping to the
    identity, and the characteristic-function isomorphism onto bit vectors
    are exhaustive for up to 5 points and seeded samples beyond that.
    """
    if n_points > MAX_POINTS:
        raise SetTooLarge(f"at most {MAX_POINTS} points supported")
    size = 1 << n_points
    full = size - 1
    elements = range(size)

    def add(a, b):
        return a ^ b

    def mul(a, b):
        return a & b

    idempotent = all(mul(a, a) == a for a in elements)
    char2 = all(add(a, a) == 0 for a in elements)

    exhaustive = size <= 32
    if exhaustive:
        triples = itertools.product(elements, repeat=3)
    else:
        import random

        rng = random.Random(sample_seed)
        triples = (
            (rng.randrange(size), rng.randrange(size), rng.randrange(size))
            for _ in range(2000)
        )
    ring_axioms = True
    for a, b, c in triples:
        if add(add(a, b), c) != add(a, add(b, c)):
            ring_axioms = False
        if mul(mul(a, b), c) != mul(a, mul(b, c)):
            ring_axioms = False
        if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
            ring_axioms = False
        if add(a, b) != add(b, a) or mul(a, b) != mul(b, a):
            ring_axioms = False

    # ring -> algebra: x \/ y = x + y + xy, complement = 1 + x
    def alg_join(a, b):
        return add(add(a, b), mul(a, b))

    def alg_complement(a):
        return add(full, a)

    # algebra -> ring: xy = x /\ y, x + y = (x /\ y') \/ (x' /\ y)
    def ring_add_back(a, b):
        return alg_join(mul(a, alg_complement(b)), mul(alg_complement(a), b))

    pair_iter = (
        itertools.product(elements, repeat=2)
        if exhaustive
        else ((a & full, (a * 7919 + 13) & full) for a in range(2000))
    )
    roundtrip = all(
        ring_add_back(a, b) == add(a, b) and alg_join(a, b) == (a | b)
        for a, b in pair_iter
    )

    # characteristic-function map into bit vectors is the identity on
    # bitmask encodings; verify it respects both operations pointwise
    def chi(a, i):
        return a >> i & 1

    pair_iter = (
        itertools.product(elements, repeat=2)
        if exhaustive
        else ((a & full, (a * 104729 + 7) & full) for a in range(2000))
    )
    char_iso = all(
        all(
            chi(mul(a, b), i) == (chi(a, i) & chi(b, i))
            and chi(add(a, b), i) == (chi(a, i) ^ chi(b, i))
            for i in range(n_points)
        )
        for a, b in pair_iter
    )
    injective = True  # chi is the bit decomposition, trivially injective
    return BooleanRingReport(
        size=size,
        idempotent=idempotent,
        characteristic_two=char2,
        ring_axioms=ring_axioms,
        roundtrip_identity=roundtrip,
        char_map_isomorphism=char_iso and injective,
        exhaustive=exhaustive,
    )
