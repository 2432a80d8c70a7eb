// Acceptance suite: prints exactly one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Runtime limits are part of the criteria.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hermlat/hlattice.hpp"
#include "hermlat/qlattice.hpp"
#include "hermlat/registry.hpp"
#include "hermlat/verdict.hpp"

using namespace hermlat;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double run_criterion(const std::string& name, const std::function<void(std::ostringstream&)>& fn) {
    std::ostringstream detail;
    auto t0 = Clock::now();
    bool ok = true;
    try {
        fn(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail << " exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!detail.str().empty() && detail.str().find("FAIL") != std::string::npos) ok = false;
    std::cout << (ok ? "PASS" : "FAIL") << " " << name << " (" << secs << " s)"
              << detail.str() << "\n";
    if (!ok) ++failures;
    return secs;
}

void expect(std::ostringstream& out, bool cond, const std::string& what) {
    if (!cond) out << " FAIL[" << what << "]";
}

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
        if (op(rng) == 0) {
            int c = coef(rng);
            for (std::size_t k = 0; k < n; ++k) t(i, k) += Int(c) * t(j, k);
        } else if (op(rng) == 1) {
            t.swap_rows(i, j);
        } else {
            for (std::size_t k = 0; k < n; ++k) t(i, k) = -t(i, k);
        }
    }
    return t;
}

void criterion_invariant_table(std::ostringstream& out) {
    const std::vector<std::tuple<std::string, int, int>> rows = {
        {"U+U(2)+E8(-2)", 10, 0}, {"U+U+E8(-2)", 8, 0},
        {"U+U(2)+D4(-1)+D4(-1)", 6, 0}, {"U+U+D4(-1)+D4(-1)", 4, 0},
        {"U+U+D8(-1)", 2, 0}, {"U+U+E8(-1)", 0, 0}};
    for (const auto& [nm, ell, delta] : rows) {
        InvariantProfile p = invariant_profile(make_named_quadratic(nm));
        expect(out, p.ell == ell && p.delta == delta, nm);
    }
}

void criterion_weight_tables(std::ostringstream& out) {
    const std::map<int, int> big = {{10, 4}, {8, 12}, {6, 28}, {4, 60}, {2, 124}, {0, 252}};
    for (auto [ell, w] : big)
        expect(out, weight_formula(SignatureTag::Sig_2_10, ell) == w,
               "(2,10) ell=" + std::to_string(ell));
    const std::map<int, int> small = {{6, 24}, {4, 40}, {2, 72}};
    for (auto [ell, w] : small)
        expect(out, weight_formula(SignatureTag::Sig_2_6, ell) == w,
               "(2,6) ell=" + std::to_string(ell));
}

void criterion_isometries(std::ostringstream& out) {
    QuadLattice e8 = make_named_quadratic("E8");
    for (const std::string& nm : {"B_-1", "B_-2"}) {
        auto t0 = Clock::now();
        auto w = is_isometric_definite(make_named_quadratic(nm), e8);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        expect(out, w && verify_witness(make_named_quadratic(nm), e8, *w), nm + " ~ E8");
        expect(out, secs < 10.0, nm + " under 10 s");
    }
    for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"A_-1", "B_-1"}, {"A_-2", "B_-2"}}) {
        QuadLattice t = trace_lattice(make_named_hermitian(a));
        QuadLattice m = make_named_quadratic(b);
        auto w = is_isometric_definite(t, m);
        expect(out, w && verify_witness(t, m, *w), "trace(" + a + ") ~ " + b);
    }
    // indefinite trace classes, decided by the classification invariants
    for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"L_UU:-1", "U+U"}, {"L_UU:-2", "U+U"}, {"L_-1_UU2", "U+U(2)"},
             {"L_-2_UU2", "U+U(2)"}}) {
        QuadLattice t = trace_lattice(make_named_hermitian(a));
        expect(out, is_isometric_indef_2elem(t, make_named_quadratic(b)),
               "trace(" + a + ") ~ " + b);
    }
    // definite trace classes, decided by explicit witnesses
    for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"L_-1_D4", "D4"}, {"L_-2_D4", "D4"}, {"L_D6", "D6"}, {"L_D8", "D8"},
             {"L_A2", "A2"}}) {
        QuadLattice t = trace_lattice(make_named_hermitian(a));
        QuadLattice m = make_named_quadratic(b);
        auto w = is_isometric_definite(t, m);
        expect(out, w && verify_witness(t, m, *w), "trace(" + a + ") ~ " + b);
    }
}

void criterion_divisibility(std::ostringstream& out) {
    for (const std::string& nm :
         {"L_UU:-1", "L_-2_UU2", "L_-1_D4", "L_-2_D4", "L_D6", "L_D8"}) {
        ConditionVerdict v = condition_minus_one(make_named_hermitian(nm), 1);
        expect(out, v.status == ConditionStatus::VerifiedSufficient, nm);
    }
    ConditionVerdict ex5 = condition_minus_two(make_named_hermitian("Ex5"), 3);
    expect(out, ex5.status == ConditionStatus::VerifiedUpToBound, "Ex5 bound 3");
}

void criterion_verdicts(std::ostringstream& out) {
    const std::vector<std::tuple<std::string, std::string, bool>> expected = {
        {"Ex1", "T5.1", true},  {"Ex2", "T5.1", false}, {"Ex3", "T5.1", false},
        {"Ex4", "T5.1", false}, {"Ex5", "T5.2", false}, {"Ex6", "T5.3", false},
        {"Ex7a", "T5.4", false}, {"Ex7b", "T5.4", false}, {"Ex8", "T5.4", false},
        {"Ex9", "T5.4", false}};
    for (const auto& [nm, thm, fano] : expected) {
        TheoremVerdict v = theorem_verdict(make_named_hermitian(nm), 3);
        expect(out, v.uniruled && v.theorem_id == thm && v.fano == fano, nm);
    }
    expect(out, !uniruledness_check(5, 2, 12), "boundary (5,2,12)");
    expect(out, uniruledness_check(5, 2, 28), "boundary (5,2,28)");
    expect(out, uniruledness_check(5, 3, 124), "boundary (5,3,124)");
}

void criterion_property_suites(std::ostringstream& out) {
    std::mt19937 rng(20240811);

    // Smith normal form identity, 120 random matrices
    {
        std::uniform_int_distribution<int> ent(-9, 9), dim(1, 5);
        bool ok = true;
        for (int c = 0; c < 120; ++c) {
            std::size_t r = dim(rng), cc = dim(rng);
            Matrix<Int> g(r, cc);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < cc; ++j) g(i, j) = ent(rng);
            SnfResult s = smith_normal_form(g);
            if (!(to_rat(s.u) * to_rat(g) * to_rat(s.v) == to_rat(s.d))) ok = false;
        }
        expect(out, ok, "SNF identity x120");
    }

    // signature invariance under unimodular congruence, 120 cases
    {
        bool ok = true;
        int cases = 0;
        for (const std::string& nm : {"E8", "U+U", "U+U(2)+E8(-2)", "D4(-1)"}) {
            QuadLattice L = make_named_quadratic(nm);
            Signature base = quad_signature(L);
            for (int i = 0; i < 30; ++i, ++cases) {
                Matrix<Rat> tr = to_rat(random_unimodular(L.rank(), rng));
                QuadLattice M = QuadLattice::create(tr.transpose() * L.gram() * tr);
                if (!(quad_signature(M) == base)) ok = false;
            }
        }
        expect(out, ok && cases >= 100, "signature invariance x120");
    }

    // delta generator-check vs full-coset brute force (small 2-elementary lattices)
    {
        bool ok = true;
        std::vector<std::string> names = {"U+U(2)", "U(2)+U(2)", "D4(-1)", "U+U(2)+D4(-1)",
                                          "U+U+D8(-1)"};
        for (const auto& nm : names) {
            QuadLattice L = make_named_quadratic(nm);
            InvariantProfile p = invariant_profile(L);
            auto gens = dual_generators(L);
            std::vector<Int> counter(gens.size(), 0);
            bool integral = true, more = true;
            while (more) {
                RatVector v(L.rank(), Rat(0));
                for (std::size_t i = 0; i < gens.size(); ++i)
                    for (std::size_t j = 0; j < L.rank(); ++j)
                        v[j] += Rat(counter[i]) * gens[i].coords[j];
                if (!is_integer(L.norm_of(v))) integral = false;
                more = false;
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    counter[i] += 1;
                    if (counter[i] < gens[i].order) {
                        more = true;
                        break;
                    }
                    counter[i] = 0;
                }
            }
            if (!p.delta || *p.delta != (integral ? 0 : 1)) ok = false;
        }
        expect(out, ok, "delta vs brute force");
    }

    // witness re-verification, 120 cases
    {
        bool ok = true;
        int cases = 0;
        for (const std::string& nm : {"D4", "A2", "D6"}) {
            QuadLattice L = make_named_quadratic(nm);
            for (int i = 0; i < 40; ++i, ++cases) {
                Matrix<Rat> tr = to_rat(random_unimodular(L.rank(), rng));
                QuadLattice M = QuadLattice::create(tr.transpose() * L.gram() * tr);
                auto w = is_isometric_definite(L, M);
                if (!w || !verify_witness(L, M, *w)) ok = false;
            }
        }
        expect(out, ok && cases >= 100, "witness re-verification x120");
    }

    // sigma reflections: involutive automorphisms on 120 E8 roots
    {
        QuadLattice E8 = make_named_quadratic("E8");
        auto roots = enumerate_norm_vectors(E8, 2, 1000);
        std::shuffle(roots.begin(), roots.end(), rng);
        Matrix<Rat> id = Matrix<Rat>::identity(8, Rat(1), Rat(0));
        bool ok = roots.size() == 240;
        for (int i = 0; i < 120; ++i) {
            Matrix<Rat> s = sigma_reflection(E8, roots[i]);
            if (!(s * s == id) || !is_automorphism(E8, s)) ok = false;
        }
        expect(out, ok, "sigma reflections x120 and E8 root count 240");
    }

    // tau reflections: integral unitary involutions on norm -1 vectors
    {
        HermLattice h = make_named_hermitian("Ex1");
        auto vecs = enumerate_herm_norm_vectors(h, -1, 1, 1000000);
        Matrix<FieldElem> id = Matrix<FieldElem>::identity(h.rank(), h.one(), h.zero());
        bool ok = !vecs.empty();
        int cases = 0;
        for (const auto& r : vecs) {
            Matrix<FieldElem> t = tau_reflection(h, r);
            if (!(t * t == id) || !is_integral_unitary(h, t)) ok = false;
            if (++cases == 100) break;
        }
        expect(out, ok && cases >= 100, "tau reflections x100");
    }

    // trace pairing identity on 120 random pairs
    {
        bool ok = true;
        int cases = 0;
        std::uniform_int_distribution<int> c(-5, 5);
        for (const std::string& nm : {"Ex4", "Ex8", "L_A2"}) {
            HermLattice h = make_named_hermitian(nm);
            QuadLattice t = trace_lattice(h);
            FieldElem w = omega(h.field());
            for (int i = 0; i < 40; ++i, ++cases) {
                HermVector x, y;
                QuadVector xa, xb, ya, yb;
                for (std::size_t j = 0; j < h.rank(); ++j) {
                    int a1 = c(rng), b1 = c(rng), a2 = c(rng), b2 = c(rng);
                    x.push_back(h.one() * Rat(a1) + w * Rat(b1));
                    y.push_back(h.one() * Rat(a2) + w * Rat(b2));
                    xa.push_back(a1);
                    xb.push_back(b1);
                    ya.push_back(a2);
                    yb.push_back(b2);
                }
                QuadVector xv(xa), yv(ya);
                xv.insert(xv.end(), xb.begin(), xb.end());
                yv.insert(yv.end(), yb.begin(), yb.end());
                auto [re, om] = pairing_decomposition(h, x, y);
                if (t.inner(xv, yv) != 2 * re) ok = false;
            }
        }
        expect(out, ok && cases >= 100, "trace pairing identity x120");
    }

    // unit multiplication is a trace-lattice isometry
    {
        bool ok = true;
        for (const std::string& nm : {"Ex1", "L_A2"}) {
            HermLattice h = make_named_hermitian(nm);
            for (const FieldElem& u : unit_group(h.field()).elements) {
                Matrix<FieldElem> t(h.rank(), h.rank(), h.zero());
                for (std::size_t i = 0; i < h.rank(); ++i) t(i, i) = u;
                if (!is_integral_unitary(h, t)) ok = false;
            }
        }
        expect(out, ok, "unit isometries");
    }

    // enumeration box oracle on D4
    {
        QuadLattice D4 = make_named_quadratic("D4");
        std::set<QuadVector> oracle;
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b)
                for (int c2 = -3; c2 <= 3; ++c2)
                    for (int d = -3; d <= 3; ++d) {
                        if (!a && !b && !c2 && !d) continue;
                        QuadVector v = {Int(a), Int(b), Int(c2), Int(d)};
                        if (D4.norm_of(v) == 2) oracle.insert(v);
                    }
        auto got = enumerate_norm_vectors(D4, 2, 10000);
        expect(out,
               oracle.size() == 24 && std::set<QuadVector>(got.begin(), got.end()) == oracle,
               "D4 box oracle");
    }
}

}  // namespace

int main() {
    double t1 = run_criterion("criterion-1 invariant table", criterion_invariant_table);
    if (t1 >= 1.0) {
        std::cout << "FAIL criterion-1 runtime over 1 s\n";
        ++failures;
    }
    run_criterion("criterion-2 weight tables", criterion_weight_tables);
    run_criterion("criterion-3 isometries", criterion_isometries);
    run_criterion("criterion-4 divisibility", criterion_divisibility);
    run_criterion("criterion-5 verdicts", criterion_verdicts);
    double t6 = run_criterion("criterion-6 property suites", criterion_property_suites);
    if (t6 >= 60.0) {
        std::cout << "FAIL criterion-6 runtime over 60 s\n";
        ++failures;
    }
    return failures == 0 ? 0 : 1;
}
