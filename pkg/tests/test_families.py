import random
from fractions import Fraction

import pytest

from agraph.borel import enumerate_borel_fixed, terminal_ideal
from agraph.errors import InvalidParameterError, VerificationError
from agraph.families import (
    EdgeFamily,
    build_edge_family,
    generators_at,
    transfer_coefficient,
    verify_family,
)
from agraph.monomials import minimalize, monomials_of_degree
from agraph.moves import Move, canonical_successor
from agraph.polynomials import Polynomial, torus_apply


def mono(n, exps, c=1):
    return Polynomial.monomial(n, exps, c)


def plane_family():
    I = minimalize(2, [(2, 0), (1, 1), (0, 2)])
    return build_edge_family(I, Move((((1, 1), (3, 0)),)))


def layered_family():
    gens = [(0, 0, 3)] + [m for m in monomials_of_degree(3, 4) if m[2] <= 2]
    I = minimalize(3, gens)
    mv, _ = canonical_successor(I)
    return build_edge_family(I, mv)


class TestCoefficients:
    def test_formula_values(self):
        assert transfer_coefficient(1, 2) == 6
        assert transfer_coefficient(1, 1) == 2
        assert transfer_coefficient(2, 1) == 6

    def test_rejects_bad_arguments(self):
        with pytest.raises(InvalidParameterError):
            transfer_coefficient(0, 1)

    def test_running_example(self, cubic_ideal):
        F = build_edge_family(cubic_ideal, Move((((1, 0, 2), (4, 0, 0)),)))
        assert F.a_vals == (1,)
        assert F.coeffs == (6,)
        assert F.l == 2

    def test_plane_family(self):
        F = plane_family()
        assert F.a_vals == (1,) and F.coeffs == (2,) and F.l == 1

    def test_layered_family_balances_two_pairs(self):
        F = layered_family()
        assert F.a_vals == (1, 2)
        assert F.coeffs == (6, 24)

    def test_coefficients_positive_integers_at_sweep_scale(self):
        for n, d in ((2, 6), (3, 5)):
            for I in enumerate_borel_fixed(n, d).ideals:
                if I == terminal_ideal(n, d):
                    continue
                mv, _ = canonical_successor(I)
                F = build_edge_family(I, mv)
                assert all(isinstance(c, int) and c > 0 for c in F.coeffs)

    def test_invalid_move_is_rejected(self, cubic_ideal):
        with pytest.raises(VerificationError):
            build_edge_family(cubic_ideal, Move((((4, 0, 0), (1, 0, 2)),)))


class TestGeneratorsAt:
    def test_fibre_at_zero_is_the_base(self, cubic_ideal):
        F = build_edge_family(cubic_ideal, Move((((1, 0, 2), (4, 0, 0)),)))
        monos = [p.sorted_terms()[0][0] for p in generators_at(F, 0)]
        assert minimalize(3, monos) == cubic_ideal

    def test_plane_fibre_at_one(self):
        F = plane_family()
        gens = generators_at(F, 1)
        assert gens[0] == mono(2, (2, 0)) + mono(2, (0, 1), 2)
        assert set(gens[1:]) == {mono(2, (1, 1)), mono(2, (0, 2))}

    def test_running_example_fibre_at_one(self, cubic_ideal):
        F = build_edge_family(cubic_ideal, Move((((1, 0, 2), (4, 0, 0)),)))
        gens = generators_at(F, 1)
        assert gens[0] == mono(3, (3, 0, 0)) + mono(3, (0, 0, 2), 6)
        # the source stays among the untouched generators
        assert mono(3, (1, 0, 2)) in gens[1:]
        assert len(gens) == 10


class TestVerifyFamily:
    def test_plane_family_passes(self):
        report = verify_family(plane_family(), t_samples=(1, 2, 3))
        assert report.ok
        assert report.to_dict()["failures"] == []

    def test_running_example_passes_at_default_samples(self, cubic_ideal):
        F = build_edge_family(cubic_ideal, Move((((1, 0, 2), (4, 0, 0)),)))
        report = verify_family(F)
        assert report.ok
        assert report.t_samples == (1, 2, 3, 5, 7)

    def test_layered_family_passes(self):
        report = verify_family(layered_family(), t_samples=(1, 2))
        assert report.ok

    def test_tampered_family_fails_colength(self):
        F = plane_family()
        tampered = EdgeFamily(F.base, F.move, F.l, F.a_vals, F.coeffs, F.moving, ())
        report = verify_family(tampered, t_samples=(1, 2))
        assert not report.colength_ok
        assert not report.ok

    def test_wrong_coefficient_breaks_fixedness_with_two_pairs(self):
        F = layered_family()
        wrong = EdgeFamily(F.base, F.move, F.l, F.a_vals, (F.coeffs[0], F.coeffs[1] + 1),
                           F.moving, F.fixed)
        report = verify_family(wrong, t_samples=(1,))
        assert not report.fixed_ok

    def test_samples_must_be_nonzero_and_distinct(self):
        with pytest.raises(InvalidParameterError):
            verify_family(plane_family(), t_samples=(1, 1))
        with pytest.raises(InvalidParameterError):
            verify_family(plane_family(), t_samples=(0, 1))

    def test_every_tree_edge_verifies_at_small_scale(self):
        for n, d in ((2, 5), (3, 4)):
            for I in enumerate_borel_fixed(n, d).ideals:
                if I == terminal_ideal(n, d):
                    continue
                mv, _ = canonical_successor(I)
                report = verify_family(build_edge_family(I, mv), t_samples=(1, 3))
                assert report.ok, (str(I), report.to_dict())


class TestTorusCoherence:
    def test_rescaling_moves_along_the_family(self):
        # scaling the variables maps the fibre at t onto the fibre at
        # t * s^delta, generator by generator, with the same delta for every
        # pair; that is what makes the punctured family one torus orbit
        rng = random.Random(41)
        F = layered_family()
        (src0, dst0) = F.move.pairs[0]
        delta = tuple(a - b for a, b in zip(src0, dst0))
        for src, dst in F.move.pairs:
            assert tuple(a - b for a, b in zip(src, dst)) == delta

        for _ in range(5):
            s = tuple(Fraction(rng.choice([1, 2, 3, 5]), rng.choice([1, 2])) for _ in range(3))
            t = Fraction(rng.choice([1, 2, 7]))
            factor = Fraction(1)
            for e, v in zip(delta, s):
                factor *= v ** e
            scaled = [torus_apply(g, s) for g in generators_at(F, t)]
            retimed = generators_at(F, t * factor)
            for g_s, g_r, (parent, _) in zip(scaled, retimed, F.moving):
                scale = Fraction(1)
                for e, v in zip(parent, s):
                    scale *= v ** e
                assert g_s == g_r * scale
            # untouched generators only pick up scalars
            for g_s, g_r in zip(scaled[len(F.moving):], retimed[len(F.moving):]):
                (m_s, c_s), = g_s.sorted_terms()
                (m_r, c_r), = g_r.sorted_terms()
                assert m_s == m_r


class TestSerialization:
    def test_family_json_round_trip(self, cubic_ideal):
        F = build_edge_family(cubic_ideal, Move((((1, 0, 2), (4, 0, 0)),)))
        again = EdgeFamily.from_json(F.to_json())
        assert again == F

    def test_report_dict_shape(self):
        report = verify_family(plane_family(), t_samples=(1, 2))
        data = report.to_dict()
        assert set(data) == {
            "ok", "base_ok", "fixed_ok", "colength_ok", "limit_ok",
            "t_samples", "failures",
        }
        assert data["t_samples"] == ["1", "2"]
