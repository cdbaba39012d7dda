"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -v` (output capture is disabled in
the project config, so the verdict lines appear inline).  Every tolerance and
time budget is pinned here; nothing is deferred to later calibration.
"""

import random
import time
from fractions import Fraction

from agraph.borel import (
    brute_force_enumerate,
    enumerate_borel_fixed,
    is_borel_fixed,
    terminal_ideal,
)
from agraph.errors import IncompatibleWeightsError, UncoveredCaseError, ZeroRowError
from agraph.families import build_edge_family, generators_at, verify_family
from agraph.graphs import build_spanning_tree, is_connected
from agraph.groebner import (
    buchberger,
    ideal_member,
    is_ga_fixed_poly_ideal,
    normal_form,
)
from agraph.monomials import minimalize, monomials_of_degree
from agraph.moves import (
    SINGLE,
    Move,
    apply_move,
    canonical_successor,
    is_valid_move,
    path_to_terminal,
    selection_data,
)
from agraph.polynomials import Polynomial, compatible_scales, ga_apply, torus_apply
from agraph.subgroups import (
    WeightMatrix,
    pick_compatible_pair,
    pick_one_ps,
    pick_two_ps,
    simplex_tgraph,
    verify_separation,
)
from conftest import CUBIC_GENS, SUCCESSOR_GENS


def report(number: int, label: str, ok: bool, started: float, budget: float) -> None:
    elapsed = time.perf_counter() - started
    verdict = "PASS" if ok and elapsed < budget else "FAIL"
    print(f"ACCEPTANCE {number:02d} {verdict}: {label} "
          f"({elapsed:.2f}s, budget {budget:g}s)")
    assert ok, label
    assert elapsed < budget, f"{label}: {elapsed:.2f}s over budget {budget}s"


def cubic():
    return minimalize(3, CUBIC_GENS)


def test_criterion_01_example_reproduction():
    started = time.perf_counter()
    J = apply_move(cubic(), Move((((1, 0, 2), (4, 0, 0)),)))
    ok = J == minimalize(3, SUCCESSOR_GENS) and len(J.gens) == 8
    report(1, "move on the cubic ideal reproduces the printed successor",
           ok, started, 1.0)


def test_criterion_02_canonical_successor_agreement():
    started = time.perf_counter()
    I = cubic()
    sel = selection_data(I)
    mv, J = canonical_successor(I)
    ok = (
        (sel.d_star, sel.j, sel.l) == (3, 3, 2)
        and sel.s_hat == ((1, 0, 2),)
        and mv.pairs == (((1, 0, 2), (4, 0, 0)),)
        and mv.derivation.case == SINGLE
        and (mv.derivation.h, mv.derivation.k) == (2, 2)
        and J == minimalize(3, SUCCESSOR_GENS)
    )
    report(2, "canonical successor selects (3, 3, 2, {x1*x3^2})", ok, started, 1.0)


def test_criterion_03_weights_and_socle_sizes():
    started = time.perf_counter()
    I = cubic()
    mv = Move((((1, 0, 2), (4, 0, 0)),))
    J = apply_move(I, mv)
    move_report = is_valid_move(I, mv)
    sizes = (move_report.socle_size_before, move_report.socle_size_after)
    ok = I.weight() == 12 and J.weight() == 14 and J.weight() > I.weight()
    ok = ok and sizes == (6, 5)  # the socle-swap discrepancy, recorded
    report(3, f"weights 12 -> 14 strictly increase; socle sizes {sizes} recorded",
           ok, started, 1.0)


def test_criterion_04_connectedness_sweep():
    started = time.perf_counter()
    ok = True
    for n, dmax in ((2, 8), (3, 8), (4, 5)):
        for d in range(1, dmax + 1):
            try:
                graph = build_spanning_tree(n, d, verify_level="fast")
            except UncoveredCaseError:
                ok = False
                continue
            ok = ok and graph.metadata["counters"]["uncovered"] == 0
            ok = ok and graph.edge_count == graph.vertex_count - 1
            ok = ok and is_connected(graph)
            sink = terminal_ideal(n, d)
            for I in graph.ideals:
                path = path_to_terminal(I)
                ok = ok and (path[-1][1] if path else I) == sink
    report(4, "sweep n<=3 d<=8 and n=4 d<=5: zero uncovered, certified trees",
           ok, started, 300.0)


def test_criterion_05_oracle_equivalence():
    started = time.perf_counter()
    ok = True
    for n in (1, 2, 3):
        for d in range(1, 7):
            ok = ok and (enumerate_borel_fixed(n, d).ideals
                         == brute_force_enumerate(n, d).ideals)

    def distinct_partitions(d, largest=None):
        if d == 0:
            return 1
        largest = d if largest is None else largest
        return sum(distinct_partitions(d - part, part - 1)
                   for part in range(min(d, largest), 0, -1))

    counts = [len(enumerate_borel_fixed(2, d)) for d in range(1, 11)]
    oracle = [distinct_partitions(d) for d in range(1, 11)]
    ok = ok and counts == oracle == [1, 1, 2, 2, 3, 4, 5, 6, 8, 10]
    report(5, "enumeration equals brute force (n<=3, d<=6); plane counts equal "
              "distinct-part partitions (d<=10)", ok, started, 60.0)


def test_criterion_06_edge_family_verification():
    started = time.perf_counter()
    samples = (Fraction(1), Fraction(2), Fraction(3), Fraction(5), Fraction(7))
    checked = 0
    ok = True
    for n in (2, 3):
        for d in range(1, 7):
            for I in enumerate_borel_fixed(n, d).ideals:
                if I == terminal_ideal(n, d):
                    continue
                mv, _ = canonical_successor(I)
                family_report = verify_family(build_edge_family(I, mv), samples)
                ok = ok and family_report.ok
                checked += 1
    ok = ok and checked >= 18
    report(6, f"all four family verdicts on {checked} tree edges at five t samples",
           ok, started, 180.0)


def test_criterion_07_criterion_equivalence():
    started = time.perf_counter()
    from test_borel import _all_artinian_ideals

    disagreements = 0
    total = 0
    for n in (1, 2, 3):
        for d in range(1, 6):
            for I in _all_artinian_ideals(n, d):
                total += 1
                gens = [Polynomial.monomial(n, g) for g in I.gens]
                if is_ga_fixed_poly_ideal(gens) != is_borel_fixed(I):
                    disagreements += 1
    ok = disagreements == 0 and total > 60
    report(7, f"combinatorial and analytic fixedness agree on {total} ideals",
           ok, started, 120.0)


def test_criterion_08_group_law_and_compatibility():
    started = time.perf_counter()
    rng = random.Random(2024)
    failures = 0
    for _ in range(200):
        n = rng.randint(1, 4)
        p = Polynomial.zero(n)
        for _ in range(rng.randint(1, 4)):
            m = tuple(rng.randint(0, 4) for _ in range(n))
            if sum(m) > 4:
                m = tuple(0 for _ in range(n))
            p = p + Polynomial.monomial(n, m, Fraction(rng.randint(-9, 9),
                                                       rng.randint(1, 9)))
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if ga_apply(ga_apply(p, a), b) != ga_apply(p, a + b):
            failures += 1
        c, exp = rng.randint(-4, 4), rng.randint(1, 4)
        t = Fraction(rng.choice([1, 2, 3, 5, -2, -3]), rng.choice([1, 2, 3]))
        u = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        s = compatible_scales(n, c, exp, t)
        s_inv = compatible_scales(n, c, exp, 1 / t)
        lhs = torus_apply(ga_apply(torus_apply(p, s), u), s_inv)
        if lhs != ga_apply(p, t ** exp * u):
            failures += 1
    report(8, "group law and diagonal compatibility exact on 200 random inputs",
           failures == 0, started, 120.0)


def test_criterion_09_subgroup_pickers():
    started = time.perf_counter()
    rng = random.Random(77)
    ok = True
    for _ in range(100):
        n = rng.randint(1, 5)
        rows = [tuple(rng.randint(-5, 5) for _ in range(n))
                for _ in range(rng.randint(1, 20))]
        W = WeightMatrix.from_rows(rows)
        if W.zero_rows():
            try:
                pick_one_ps(W)
                ok = False
            except ZeroRowError:
                pass
            continue
        good, _ = verify_separation(W, pick_one_ps(W))
        ok = ok and good
        a, b = pick_two_ps(W)
        good, _ = verify_separation(W, a, b)
        ok = ok and good
        try:
            first, second = pick_compatible_pair(W)
        except IncompatibleWeightsError as err:
            # the named vector must be genuinely infeasible
            v = err.vector
            ok = ok and sum(v) == 0 and sum(i * e for i, e in enumerate(v)) == 0
            continue
        for cp in (first, second):
            good, _ = verify_separation(W, cp.exponents(W.n))
            ok = ok and good and cp.p >= 1
    report(9, "pickers verified on 100 random weight matrices; infeasibility named",
           ok, started, 60.0)


def test_criterion_10_simplex_graphs():
    started = time.perf_counter()
    ok = True
    for n in range(1, 7):
        g = simplex_tgraph(n)
        degree = [0] * g.vertex_count
        for e in g.edges:
            degree[e.src] += 1
            degree[e.dst] += 1
        ok = (ok and g.vertex_count == n + 1
              and g.edge_count == n * (n + 1) // 2
              and all(deg == n for deg in degree)
              and is_connected(g))
    report(10, "coordinate-point graphs are complete K_{n+1} for n <= 6",
           ok, started, 10.0)


def test_criterion_11_groebner_soundness():
    started = time.perf_counter()
    rng = random.Random(99)
    ok = True

    def rand_poly(n):
        p = Polynomial.zero(n)
        while p.is_zero():
            for _ in range(rng.randint(1, 4)):
                m = tuple(rng.randint(0, 3) for _ in range(n))
                p = p + Polynomial.monomial(n, m, Fraction(rng.randint(-6, 6),
                                                           rng.randint(1, 4)))
        return p

    # the suite: pencil fibres of real tree edges, the vertex ideals
    # themselves, and random generator sets anchored by pure powers (the
    # engine's whole population is Artinian, where both orders reduce fast)
    suites = []
    for n, d in ((2, 5), (3, 4)):
        for I in enumerate_borel_fixed(n, d).ideals:
            suites.append([Polynomial.monomial(n, g) for g in I.gens])
            if I == terminal_ideal(n, d):
                continue
            mv, _ = canonical_successor(I)
            family = build_edge_family(I, mv)
            suites.append(generators_at(family, Fraction(rng.randint(1, 5))))
    for _ in range(6):
        n = rng.randint(2, 3)
        anchor = [Polynomial.monomial(n, tuple(4 if k == i else 0 for k in range(n)))
                  for i in range(n)]
        suites.append(anchor + [rand_poly(n) for _ in range(rng.randint(1, 3))])

    for gens in suites:
        n = gens[0].n
        A = buchberger(gens, order="degrevlex")
        B = buchberger(gens, order="lex")
        shuffled = gens[:]
        rng.shuffle(shuffled)
        ok = ok and buchberger(shuffled, order="degrevlex").to_json() == A.to_json()
        ok = ok and buchberger(shuffled, order="lex").to_json() == B.to_json()
        for _ in range(4):
            p = rand_poly(n)
            r = normal_form(p, A)
            ok = ok and normal_form(r, A) == r
            ok = ok and ideal_member(p, A) == ideal_member(p, B)
    report(11, "normal-form idempotence, order-independent membership, "
               "byte-stable bases", ok, started, 120.0)
