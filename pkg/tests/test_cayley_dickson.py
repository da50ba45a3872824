import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlab.cayley_dickson import (
    CDElement,
    ExhaustiveBasis,
    InvalidConjugation,
    LevelMismatch,
    LevelTooLarge,
    NormZero,
    RandomSample,
    associator,
    cayley_extension,
    cd_multiply,
    cd_multiply_recursive,
    commutator,
    conjugate,
    conjugated_from_level,
    find_zero_divisors,
    identity_battery,
    inverse_quadratic,
    is_operator_invertible,
    norm_sq,
    quadratic_algebra,
    quaternion_to_complex_matrix,
    pauli_matrices,
    structure_constants,
    trace,
)


def e(r, k, scale=1):
    return CDElement.basis(r, k, scale)


def rational_element(r, rng):
    return CDElement(
        r, [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(1 << r)]
    )


class TestMultiplication:
    def test_unit_law_all_levels(self):
        rng = random.Random(0)
        for r in range(0, 5):
            one = CDElement.one(r)
            x = rational_element(r, rng)
            assert cd_multiply(one, x) == x
            assert cd_multiply(x, one) == x

    def test_octonion_basis_products(self):
        # e1 e2 = e3 and e2 e4 = e6 in the 8-dimensional algebra
        assert cd_multiply(e(3, 1), e(3, 2)) == e(3, 3)
        assert cd_multiply(e(3, 2), e(3, 4)) == e(3, 6)

    def test_sedenion_annihilating_pair(self):
        a = e(4, 3) + e(4, 10)
        b = e(4, 6) - e(4, 15)
        assert cd_multiply(a, b).is_zero()

    def test_level_mismatch(self):
        with pytest.raises(LevelMismatch):
            cd_multiply(e(2, 1), e(3, 1))

    def test_recursion_agrees_with_table(self):
        # two independent implementations of the same product
        rng = random.Random(11)
        for r in range(0, 7):
            for _ in range(8):
                x = CDElement(r, [rng.randint(-3, 3) for _ in range(1 << r)])
                y = CDElement(r, [rng.randint(-3, 3) for _ in range(1 << r)])
                assert cd_multiply(x, y) == cd_multiply_recursive(x, y)

    def test_bilinearity(self):
        rng = random.Random(5)
        a, b, c = (rational_element(3, rng) for _ in range(3))
        s = Fraction(3, 2)
        assert (a + b) * c == a * c + b * c
        assert a * (b + c) == a * b + a * c
        assert (s * a) * b == s * (a * b)


class TestConjugationTraceNorm:
    def test_conjugate_unit_and_basis(self):
        assert conjugate(CDElement.one(3)) == CDElement.one(3)
        assert conjugate(e(3, 5)) == -e(3, 5)

    def test_involution(self):
        rng = random.Random(2)
        x = rational_element(4, rng)
        assert conjugate(conjugate(x)) == x

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                    min_size=8, max_size=8),
           st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                    min_size=8, max_size=8))
    def test_conjugation_antihomomorphism(self, xs, ys):
        u = CDElement(3, xs)
        v = CDElement(3, ys)
        assert conjugate(u * v) == conjugate(v) * conjugate(u)

    def test_trace_and_norm_values(self):
        assert norm_sq(CDElement.one(3)) == 1
        assert norm_sq(e(4, 3) + e(4, 10)) == 2
        assert trace(e(3, 0, 3) + e(3, 2, 5)) == 6
        x = e(3, 0, 3) + e(3, 2, 5)
        assert trace(conjugate(x)) == trace(x)
        assert norm_sq(conjugate(x)) == norm_sq(x)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5),
                    min_size=16, max_size=16))
    def test_quadraticity(self, xs):
        # x^2 - T(x) x + N(x) = 0 at the zero-divisor level too
        x = CDElement(4, xs)
        lhs = x * x - trace(x) * x + norm_sq(x) * CDElement.one(4)
        assert lhs.is_zero()


class TestInverse:
    def test_basic_inverses(self):
        assert inverse_quadratic(CDElement.one(3)) == CDElement.one(3)
        assert inverse_quadratic(e(3, 1)) == -e(3, 1)

    def test_zero_divisor_has_quadratic_inverse_but_singular_operator(self):
        a = e(4, 3) + e(4, 10)
        inv = inverse_quadratic(a)
        assert inv == (-e(4, 3) - e(4, 10)) / 2
        assert a * inv == CDElement.one(4)
        assert inv * a == CDElement.one(4)
        assert is_operator_invertible(a) == (False, False)

    def test_norm_zero_raises(self):
        with pytest.raises(NormZero):
            inverse_quadratic(CDElement.zero(3))

    def test_operator_invertibility_matches_norm_up_to_octonions(self):
        rng = random.Random(7)
        for r in range(0, 4):
            for _ in range(10):
                x = CDElement(r, [rng.randint(-2, 2) for _ in range(1 << r)])
                expected = norm_sq(x) != 0
                assert is_operator_invertible(x) == (expected, expected)

    def test_zero_element(self):
        assert is_operator_invertible(CDElement.zero(4)) == (False, False)
        assert is_operator_invertible(e(3, 1)) == (True, True)


class TestAssociatorCommutator:
    def test_quaternions_associate(self):
        assert associator(e(2, 1), e(2, 2), e(2, 3)).is_zero()

    def test_octonion_associator_value(self):
        assert associator(e(3, 1), e(3, 2), e(3, 4)) == e(3, 7, 2)

    def test_alternating_on_octonion_basis(self):
        basis = [e(3, k) for k in range(8)]
        for a in basis:
            for b in basis:
                assert associator(a, a, b).is_zero()
                assert associator(a, b, b).is_zero()

    def test_totally_skew_on_basis_triples(self):
        basis = [e(3, k) for k in range(8)]
        for i in range(8):
            for j in range(8):
                for k in range(8):
                    base = associator(basis[i], basis[j], basis[k])
                    assert associator(basis[j], basis[i], basis[k]) == -base
                    assert associator(basis[i], basis[k], basis[j]) == -base

    def test_commutator(self):
        assert commutator(e(2, 1), e(2, 2)) == e(2, 3, 2)
        assert commutator(e(2, 1), e(2, 1)).is_zero()


class TestStructureConstants:
    def test_complex_table(self):
        t = structure_constants(1)
        assert t.product(1, 1) == (0, -1)
        assert t.product(0, 1) == (1, 1)

    def test_rows_and_columns_zero_are_identity(self):
        for r in (2, 3, 4):
            t = structure_constants(r)
            for k in range(t.dim):
                assert t.product(0, k) == (k, 1)
                assert t.product(k, 0) == (k, 1)

    def test_anticommutativity_and_squares_at_level_4(self):
        t = structure_constants(4)
        for i in range(1, 16):
            assert t.product(i, i) == (0, -1)
            for j in range(1, 16):
                if i != j:
                    ki, si = t.product(i, j)
                    kj, sj = t.product(j, i)
                    assert ki == kj and si == -sj

    def test_level_cap(self):
        with pytest.raises(LevelTooLarge):
            structure_constants(9)
        structure_constants(9, max_level=9)  # configurable
        with pytest.raises(LevelTooLarge):
            structure_constants(-1)

    def test_dense_gamma_sparsity(self):
        t = structure_constants(2)
        gamma = t.dense_gamma()
        for p in range(4):
            for q in range(4):
                nonzero = [(k, v) for k, v in enumerate(gamma[p][q]) if v]
                assert len(nonzero) == 1
                assert nonzero[0][1] in (1, -1)


class TestIdentityBattery:
    def test_level2_exhaustive_all_pass(self):
        report = identity_battery(2, ExhaustiveBasis())
        assert report.all_passed()

    def test_level3_exhaustive(self):
        report = identity_battery(3, ExhaustiveBasis())
        assert not report.passed("associative")
        assert report.witness("associative") == (e(3, 1), e(3, 2), e(3, 4))
        for name in ("left_alternative", "right_alternative", "flexible",
                     "moufang_a", "moufang_b", "moufang_c",
                     "power_associative", "norm_multiplicative"):
            assert report.passed(name), name

    def test_level4_random(self):
        report = identity_battery(4, RandomSample(count=300, seed=1))
        assert report.passed("flexible")
        assert report.passed("power_associative")
        assert not report.passed("left_alternative")
        assert not report.passed("norm_multiplicative")
        a, b = report.witness("norm_multiplicative")
        # the probe pair is deterministic and recomputable
        assert a == e(4, 3) + e(4, 10)
        assert b == e(4, 6) - e(4, 15)
        assert norm_sq(a * b) == 0
        assert norm_sq(a) * norm_sq(b) == 4

    def test_witnesses_recheck(self):
        report = identity_battery(4, RandomSample(count=50, seed=3))
        for name, verdict in report.verdicts.items():
            if verdict.witness is None:
                continue
            if name == "associative":
                a, b, c = verdict.witness
                assert (a * b) * c != a * (b * c)
            elif name == "left_alternative":
                a, b = verdict.witness
                assert (a * a) * b != a * (a * b)

    def test_seed_determinism(self):
        r1 = identity_battery(4, RandomSample(count=40, seed=9))
        r2 = identity_battery(4, RandomSample(count=40, seed=9))
        assert r1.to_json_dict() == r2.to_json_dict()


class TestHurwitz:
    @pytest.mark.parametrize("r", [0, 1, 2, 3])
    def test_norm_multiplicative_up_to_octonions(self, r):
        rng = random.Random(100 + r)
        for _ in range(200):
            a = rational_element(r, rng)
            b = rational_element(r, rng)
            assert norm_sq(a * b) == norm_sq(a) * norm_sq(b)


class TestZeroDivisors:
    def test_empty_below_level_4(self):
        assert find_zero_divisors(2) == []
        assert find_zero_divisors(3) == []

    def test_level4_contains_canonical_pair(self):
        pairs = find_zero_divisors(4)
        a = e(4, 3) + e(4, 10)
        b = e(4, 6) - e(4, 15)
        assert (a, b) in [(p, q) for p, q in pairs]
        # every reported pair annihilates and is built from nonzero factors
        for p, q in pairs:
            assert not p.is_zero() and not q.is_zero()
            assert (p * q).is_zero()

    def test_deterministic_order(self):
        assert find_zero_divisors(4) == find_zero_divisors(4)

    def test_explicit_candidate_list(self):
        a = e(4, 3) + e(4, 10)
        b = e(4, 6) - e(4, 15)
        found = find_zero_divisors(4, search_space=[a, b, CDElement.one(4)])
        # this particular pair annihilates in both orders
        assert found == [(a, b), (b, a)]


class TestCayleyExtension:
    def test_hamiltonian_quaternions(self):
        H = cayley_extension(quadratic_algebra(Fraction(-1), Fraction(0)),
                             Fraction(-1))
        i = [0, 1, 0, 0]
        j = [0, 0, 1, 0]
        k = [0, 0, 0, 1]
        assert H.multiply(i, j) == [Fraction(0), Fraction(0), Fraction(0), Fraction(1)]
        assert H.multiply(j, i) == [Fraction(0), Fraction(0), Fraction(0), Fraction(-1)]
        assert H.multiply(i, i)[0] == -1
        assert H.as_table().index == structure_constants(2).index

    @pytest.mark.parametrize("r", [0, 1, 2, 3, 4])
    def test_doubling_reproduces_next_level(self, r):
        doubled = cayley_extension(conjugated_from_level(r), Fraction(-1))
        table = doubled.as_table()
        expected = structure_constants(r + 1)
        assert table.index == expected.index
        assert table.sign == expected.sign

    def test_iterated_doubling_from_reals(self):
        from hyperlab.cayley_dickson import real_conjugated

        algebra = real_conjugated()
        for r in range(1, 6):
            algebra = cayley_extension(algebra, Fraction(-1))
            table = algebra.as_table()
            expected = structure_constants(r)
            assert table.index == expected.index
            assert table.sign == expected.sign

    def test_type_111_trace(self):
        F = cayley_extension(quadratic_algebra(Fraction(1), Fraction(1)), Fraction(1))
        u = [Fraction(1), Fraction(1), Fraction(0), Fraction(0)]  # e + i
        assert F.trace_of(u) == 3  # 2*1 + 1*1

    def test_invalid_conjugation_rejected(self):
        base = quadratic_algebra(Fraction(-1), Fraction(0))
        base.conj[1] = [Fraction(0), Fraction(1)]  # identity map: u*conj(u) not scalar
        with pytest.raises(InvalidConjugation):
            cayley_extension(base, Fraction(-1))


class TestPauli:
    def test_unit_maps_to_identity(self):
        m = quaternion_to_complex_matrix(CDElement.one(2))
        assert m == [[1 + 0j, 0j], [0j, 1 - 0j]]

    def test_i_image(self):
        m = quaternion_to_complex_matrix(e(2, 1))
        assert m == [[1j, 0j], [0j, -1j]]

    def test_homomorphism_on_random_quaternions(self):
        rng = random.Random(42)

        def matmul(a, b):
            return [
                [a[0][0] * b[0][0] + a[0][1] * b[1][0],
                 a[0][0] * b[0][1] + a[0][1] * b[1][1]],
                [a[1][0] * b[0][0] + a[1][1] * b[1][0],
                 a[1][0] * b[0][1] + a[1][1] * b[1][1]],
            ]

        for _ in range(25):
            p = CDElement(2, [rng.randint(-5, 5) for _ in range(4)])
            q = CDElement(2, [rng.randint(-5, 5) for _ in range(4)])
            lhs = quaternion_to_complex_matrix(p * q)
            rhs = matmul(quaternion_to_complex_matrix(p),
                         quaternion_to_complex_matrix(q))
            for i in range(2):
                for j in range(2):
                    assert abs(lhs[i][j] - rhs[i][j]) < 1e-12

    def test_spin_matrices_square_to_identity(self):
        for s in pauli_matrices():
            prod = [
                [s[0][0] * s[0][0] + s[0][1] * s[1][0],
                 s[0][0] * s[0][1] + s[0][1] * s[1][1]],
                [s[1][0] * s[0][0] + s[1][1] * s[1][0],
                 s[1][0] * s[0][1] + s[1][1] * s[1][1]],
            ]
            assert abs(prod[0][0] - 1) < 1e-12 and abs(prod[1][1] - 1) < 1e-12
            assert abs(prod[0][1]) < 1e-12 and abs(prod[1][0]) < 1e-12

    def test_level_checked(self):
        with pytest.raises(LevelMismatch):
            quaternion_to_complex_matrix(e(3, 1))


class TestSerialization:
    def test_element_roundtrip(self):
        x = CDElement(3, [Fraction(1, 2), 0, -3, Fraction(5, 7), 0, 0, 1, 0])
        back = CDElement.from_json_dict(x.to_json_dict())
        assert back == x

    def test_table_export(self):
        t = structure_constants(3)
        assert t.to_json_dict() == {"kind": "cayley_dickson", "level": 3}
