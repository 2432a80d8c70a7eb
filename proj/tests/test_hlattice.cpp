#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hermlat/hlattice.hpp"
#include "hermlat/registry.hpp"

using namespace hermlat;

namespace {

const std::vector<std::string> kHermNames = {
    "L_UU:-1", "L_UU:-2", "L_-1_UU2", "L_-2_UU2", "L_-1_D4", "L_-2_D4", "L_D6",
    "L_D8",    "L_A2",    "A_-1",     "A_-2",     "Ex1",     "Ex2",     "Ex3",
    "Ex4",     "Ex5",     "Ex6",      "Ex7a",     "Ex7b",    "Ex8",     "Ex9"};

HermVector random_vector(const HermLattice& h, std::mt19937& rng, int box) {
    std::uniform_int_distribution<int> c(-box, box);
    HermVector v;
    FieldElem w = omega(h.field());
    for (std::size_t i = 0; i < h.rank(); ++i)
        v.push_back(h.one() * Rat(c(rng)) + w * Rat(c(rng)));
    return v;
}

}  // namespace

TEST_CASE("creation rejects bad gram matrices with a located message") {
    FieldData f = FieldData::create(-1);
    // non-hermitian: g21 != conj(g12)
    Matrix<FieldElem> g(2, 2, FieldElem::from_rational(f, 0));
    g(0, 0) = FieldElem::from_rational(f, 1);
    g(1, 1) = FieldElem::from_rational(f, 1);
    g(0, 1) = omega(f);
    g(1, 0) = omega(f);
    CHECK_THROWS_WITH_AS(HermLattice::create(f, g), doctest::Contains("(1,2)"),
                         std::invalid_argument);

    // non-integral trace form
    Matrix<FieldElem> g2(1, 1, FieldElem::from_rational(f, Rat(1, 3)));
    CHECK_THROWS_AS(HermLattice::create(f, g2), std::invalid_argument);

    // degenerate
    Matrix<FieldElem> g3(2, 2, FieldElem::from_rational(f, 1));
    CHECK_THROWS_AS(HermLattice::create(f, g3), std::invalid_argument);
}

TEST_CASE("trace lattice doubles the hermitian signature") {
    for (const auto& nm : kHermNames) {
        HermLattice h = make_named_hermitian(nm);
        Signature hs = herm_signature(h);
        Signature qs = quad_signature(trace_lattice(h));
        CHECK(qs.plus == 2 * hs.plus);
        CHECK(qs.minus == 2 * hs.minus);
    }
}

TEST_CASE("trace of a direct sum matches the direct sum of traces") {
    HermLattice a = make_named_hermitian("L_UU:-1");
    HermLattice b = herm_rescale(make_named_hermitian("L_-1_D4"), -1);
    QuadLattice lhs = trace_lattice(herm_compose({{a, 1}, {b, 1}}));
    QuadLattice rhs = direct_sum(trace_lattice(a), trace_lattice(b));
    // basis orderings differ, so compare the full invariant profiles
    InvariantProfile p = invariant_profile(lhs), q = invariant_profile(rhs);
    CHECK(p.signature == q.signature);
    CHECK(p.determinant == q.determinant);
    CHECK(p.elementary_divisors == q.elementary_divisors);
    CHECK(p.even == q.even);
    CHECK(is_isometric_indef_2elem(lhs, rhs));
}

TEST_CASE("trace pairing equals twice the real part of the hermitian pairing") {
    std::mt19937 rng(271828);
    int cases = 0;
    for (const auto& nm : {"Ex1", "Ex5", "Ex8", "L_A2", "A_-2"}) {
        HermLattice h = make_named_hermitian(nm);
        QuadLattice t = trace_lattice(h);
        for (int i = 0; i < 25; ++i, ++cases) {
            HermVector x = random_vector(h, rng, 4), y = random_vector(h, rng, 4);
            auto [re, om] = pairing_decomposition(h, x, y);
            // trace coordinates: (alpha_1..alpha_m, beta_1..beta_m)
            QuadVector xv, yv;
            for (std::size_t j = 0; j < h.rank(); ++j) xv.push_back(x[j].omega_a().get_num());
            for (std::size_t j = 0; j < h.rank(); ++j) xv.push_back(x[j].omega_b().get_num());
            for (std::size_t j = 0; j < h.rank(); ++j) yv.push_back(y[j].omega_a().get_num());
            for (std::size_t j = 0; j < h.rank(); ++j) yv.push_back(y[j].omega_b().get_num());
            CHECK(t.inner(xv, yv) == 2 * re);
            FieldElem p = h.pair(x, y);
            CHECK(p.omega_b() == om);
            CHECK(p.real() == re);
        }
    }
    CHECK(cases >= 100);
}

TEST_CASE("norm agrees with the pairing diagonal") {
    std::mt19937 rng(11);
    HermLattice h = make_named_hermitian("Ex4");
    for (int i = 0; i < 30; ++i) {
        HermVector x = random_vector(h, rng, 3);
        CHECK(h.norm_of(x) == h.pair(x, x).omega_a());
        CHECK(h.pair(x, x).omega_b() == 0);
    }
}

TEST_CASE("reflections in norm -1 vectors are integral unitary involutions") {
    HermLattice h = make_named_hermitian("Ex1");
    auto vecs = enumerate_herm_norm_vectors(h, -1, 1, 100000);
    REQUIRE(!vecs.empty());
    Matrix<FieldElem> id =
        Matrix<FieldElem>::identity(h.rank(), h.one(), h.zero());
    int checked = 0;
    for (const auto& r : vecs) {
        Matrix<FieldElem> t = tau_reflection(h, r);
        CHECK(t * t == id);
        CHECK(is_integral_unitary(h, t));
        if (++checked == 25) break;
    }
}

TEST_CASE("dual membership scales") {
    HermLattice h = make_named_hermitian("L_A2");
    HermVector e = {h.one()};
    CHECK(dual_membership(h, e, 1));
    // 1/3 of a basis vector is only in the scaled dual
    HermVector third = {h.one() * Rat(1, 3)};
    CHECK_FALSE(dual_membership(h, third, 1));
    CHECK(dual_membership(h, third, 3));
}

TEST_CASE("norm enumeration is deterministic, sorted, and guarded") {
    HermLattice h = make_named_hermitian("Ex6");
    auto a = enumerate_herm_norm_vectors(h, -2, 1, 1000000);
    auto b = enumerate_herm_norm_vectors(h, -2, 1, 1000000);
    CHECK(a == b);
    REQUIRE(!a.empty());
    for (const auto& r : a) CHECK(h.norm_of(r) == -2);
    CHECK_THROWS_WITH(enumerate_herm_norm_vectors(h, -2, 1, 1),
                      doctest::Contains("limit"));
}

TEST_CASE("sufficient divisibility is recognized from the gram matrix") {
    for (const auto& nm : {"L_UU:-1", "L_-2_UU2", "L_-1_D4", "L_-2_D4", "L_D6", "L_D8"}) {
        ConditionVerdict v = condition_minus_one(make_named_hermitian(nm), 1);
        CHECK(v.status == ConditionStatus::VerifiedSufficient);
        CHECK_FALSE(v.counterexample.has_value());
    }
}

TEST_CASE("the composed example passes the norm -2 module condition") {
    ConditionVerdict v = condition_minus_two(make_named_hermitian("Ex5"), 3);
    CHECK(v.status == ConditionStatus::VerifiedUpToBound);
    CHECK(v.bound_used == 3);
    CHECK_FALSE(v.counterexample.has_value());
}

TEST_CASE("a violating lattice is caught with a witness") {
    // over Q(sqrt(-3)): diag(-1, 2) with off-diagonal sqrt(-3)/3; the pairing
    // of e2 against the norm -1 vector e1 is not half-integral
    FieldData f = FieldData::create(-3);
    Matrix<FieldElem> g(2, 2, FieldElem::from_rational(f, 0));
    g(0, 0) = FieldElem::from_rational(f, -1);
    g(1, 1) = FieldElem::from_rational(f, 2);
    g(0, 1) = FieldElem::from_sqrt_coords(f, 0, Rat(1, 3));
    g(1, 0) = g(0, 1).conj();
    HermLattice h = HermLattice::create(f, g);
    ConditionVerdict v = condition_minus_one(h, 2);
    CHECK(v.status == ConditionStatus::Violated);
    REQUIRE(v.counterexample.has_value());
    CHECK(h.norm_of(*v.counterexample) == -1);
    CHECK_FALSE(v.witness.empty());
    CHECK_FALSE(dual_membership(h, *v.counterexample, 2));
}

TEST_CASE("condition checks respect the process-wide enumeration cap") {
    std::size_t saved = herm_enumeration_cap();
    herm_enumeration_cap() = 1;
    CHECK_THROWS(enumerate_herm_norm_vectors(make_named_hermitian("Ex6"), -2, 1, 1000000));
    herm_enumeration_cap() = saved;
}

TEST_CASE("rescaling scales the gram matrix") {
    HermLattice h = make_named_hermitian("L_-1_D4");
    HermLattice s = herm_rescale(h, -2);
    for (std::size_t i = 0; i < h.rank(); ++i)
        for (std::size_t j = 0; j < h.rank(); ++j)
            CHECK(s.gram()(i, j) == h.gram()(i, j) * Rat(-2));
    CHECK_THROWS(herm_rescale(h, 0));
}

TEST_CASE("composition rejects mixed fields and empty input") {
    CHECK_THROWS(herm_compose({}));
    HermLattice a = make_named_hermitian("L_UU:-1");
    HermLattice b = make_named_hermitian("L_A2");
    CHECK_THROWS(herm_compose({{a, 1}, {b, 1}}));
}
