#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hermlat/hlattice.hpp"
#include "hermlat/qlattice.hpp"
#include "hermlat/registry.hpp"

using namespace hermlat;

namespace {

Matrix<Rat> to_rat(const Matrix<Int>& m) {
    Matrix<Rat> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

Matrix<Int> random_unimodular(std::size_t n, std::mt19937& rng) {
    Matrix<Int> t = Matrix<Int>::identity(n, Int(1), Int(0));
    std::uniform_int_distribution<int> idx(0, int(n) - 1), coef(-2, 2), op(0, 2);
    for (int step = 0; step < 16; ++step) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        switch (op(rng)) {
            case 0: {
                int c = coef(rng);
                for (std::size_t k = 0; k < n; ++k) t(i, k) += Int(c) * t(j, k);
                break;
            }
            case 1:
                t.swap_rows(i, j);
                break;
            default:
                for (std::size_t k = 0; k < n; ++k) t(i, k) = -t(i, k);
        }
    }
    return t;
}

}  // namespace

TEST_CASE("the two rank-8 reference forms are isometric to E8") {
    QuadLattice e8 = make_named_quadratic("E8");
    for (const std::string& nm : {"B_-1", "B_-2"}) {
        QuadLattice b = make_named_quadratic(nm);
        auto w = is_isometric_definite(b, e8);
        REQUIRE(w.has_value());
        CHECK(verify_witness(b, e8, *w));
    }
}

TEST_CASE("trace lattices of the rank-4 hermitian forms match their quadratic models") {
    for (auto [herm, quad] : {std::pair<std::string, std::string>{"A_-1", "B_-1"},
                              {"A_-2", "B_-2"}}) {
        QuadLattice t = trace_lattice(make_named_hermitian(herm));
        QuadLattice b = make_named_quadratic(quad);
        auto w = is_isometric_definite(t, b);
        REQUIRE(w.has_value());
        CHECK(verify_witness(t, b, *w));
    }
}

TEST_CASE("witness re-verification on random unimodular base changes") {
    std::mt19937 rng(31415);
    int cases = 0;
    for (const std::string& nm : {"D4", "A2", "D6"}) {
        QuadLattice L = make_named_quadratic(nm);
        for (int i = 0; i < 40; ++i, ++cases) {
            Matrix<Int> t = random_unimodular(L.rank(), rng);
            Matrix<Rat> tr = to_rat(t);
            QuadLattice M = QuadLattice::create(tr.transpose() * L.gram() * tr);
            auto w = is_isometric_definite(L, M);
            REQUIRE(w.has_value());
            CHECK(verify_witness(L, M, *w));
            // a wrong witness must be rejected; doubling breaks the congruence
            IsometryWitness bad = *w;
            for (std::size_t r = 0; r < bad.matrix.rows(); ++r)
                for (std::size_t c = 0; c < bad.matrix.cols(); ++c) bad.matrix(r, c) *= 2;
            CHECK_FALSE(verify_witness(L, M, bad));
        }
    }
    CHECK(cases >= 100);
}

TEST_CASE("non-isometric definite lattices are distinguished") {
    // same rank, same determinant, different minimum
    Matrix<Rat> g1(2, 2), g2(2, 2);
    g1(0, 0) = 2;
    g1(1, 1) = 6;
    g2(0, 0) = 4;
    g2(0, 1) = g2(1, 0) = 2;
    g2(1, 1) = 4;
    CHECK_FALSE(is_isometric_definite(QuadLattice::create(g1), QuadLattice::create(g2)));
    // different determinant
    CHECK_FALSE(
        is_isometric_definite(make_named_quadratic("D4"), make_named_quadratic("A2+A2")));
    // D4 is not isometric to the cubic lattice's even sublattice pattern <2>^4
    Matrix<Rat> diag(4, 4);
    for (int i = 0; i < 4; ++i) diag(i, i) = 2;
    CHECK_FALSE(is_isometric_definite(make_named_quadratic("D4"), QuadLattice::create(diag)));
}

TEST_CASE("trace lattices of the indefinite hermitian forms land in the named classes") {
    auto check_class = [](const std::string& herm, const std::string& quad) {
        QuadLattice t = trace_lattice(make_named_hermitian(herm));
        QuadLattice m = make_named_quadratic(quad);
        CHECK(is_isometric_indef_2elem(t, m));
    };
    check_class("L_UU:-1", "U+U");
    check_class("L_UU:-2", "U+U");
    check_class("L_UU:-5", "U+U");
    check_class("L_-1_UU2", "U+U(2)");
    check_class("L_-2_UU2", "U+U(2)");
}
