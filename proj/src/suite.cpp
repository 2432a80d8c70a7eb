#include "hermlat/suite.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hermlat/hlattice.hpp"
#include "hermlat/qlattice.hpp"
#include "hermlat/registry.hpp"
#include "hermlat/verdict.hpp"

namespace hermlat {

namespace {

struct Collector {
    std::vector<SuiteItem> items;

    void add(std::string id, std::string claim, bool pass, std::string evidence) {
        items.push_back({std::move(id), std::move(claim), pass, std::move(evidence)});
    }

    template <class Fn>
    void guarded(std::string id, std::string claim, Fn&& fn) {
        try {
            auto [pass, evidence] = fn();
            add(std::move(id), std::move(claim), pass, std::move(evidence));
        } catch (const std::exception& e) {
            add(std::move(id), std::move(claim), false, std::string("exception: ") + e.what());
        }
    }
};

using Outcome = std::pair<bool, std::string>;

std::string triple_str(const NikulinTriple& t) {
    std::ostringstream os;
    os << "((" << t.sign.plus << "," << t.sign.minus << ")," << t.ell << "," << t.delta << ")";
    return os.str();
}

Outcome check_ell_delta(const std::string& comp, int ell, int delta) {
    InvariantProfile p = invariant_profile(make_named_quadratic(comp));
    std::ostringstream os;
    os << "computed ell=" << (p.ell ? std::to_string(*p.ell) : "n/a")
       << " delta=" << (p.delta ? std::to_string(*p.delta) : "n/a") << ", expected (" << ell << ","
       << delta << ")";
    bool ok = p.ell && p.delta && *p.ell == ell && *p.delta == delta;
    return {ok, os.str()};
}

Outcome check_weight(SignatureTag tag, int ell, int expected) {
    int w = weight_formula(tag, ell);
    return {w == expected,
            "formula gives " + std::to_string(w) + ", table says " + std::to_string(expected)};
}

Outcome check_definite_isometric(const QuadLattice& a, const QuadLattice& b) {
    auto w = is_isometric_definite(a, b);
    if (!w) return {false, "no isometry found"};
    bool ok = verify_witness(a, b, *w);
    return {ok, ok ? "witness found and re-verified" : "witness failed re-verification"};
}

Outcome check_triple_class(const QuadLattice& a, const std::string& comp) {
    InvariantProfile pa = invariant_profile(a);
    InvariantProfile pb = invariant_profile(make_named_quadratic(comp));
    if (!pa.nikulin_triple || !pb.nikulin_triple)
        return {false, "a lattice is not even 2-elementary"};
    bool ok = is_isometric_indef_2elem(a, make_named_quadratic(comp));
    return {ok, "triple " + triple_str(*pa.nikulin_triple) + " vs " +
                    triple_str(*pb.nikulin_triple)};
}

Outcome check_sufficient(const HermLattice& h, int bound) {
    ConditionVerdict c = condition_minus_one(h, bound);
    bool ok = c.status == ConditionStatus::VerifiedSufficient;
    return {ok, ok ? "all doubled gram entries lie in O_F (VERIFIED_SUFFICIENT)"
                   : "sufficient-path check did not fire"};
}

Outcome check_verdict(const std::string& name, const std::string& theorem_id, int bound,
                      bool expect_fano) {
    TheoremVerdict v = theorem_verdict(make_named_hermitian(name), bound);
    std::ostringstream os;
    os << "matched '" << v.theorem_id << "' k=" << v.k << " a=" << v.a
       << " uniruled=" << v.uniruled << " fano=" << v.fano << " (bound " << bound << ")";
    bool ok = v.theorem_id == theorem_id && v.uniruled && v.fano == expect_fano;
    return {ok, os.str()};
}

}  // namespace

SuiteReport paper_suite(int bound) {
    Collector c;

    // (i) the six (ell, delta) rows of the signature (2,10) table
    const std::vector<std::tuple<std::string, int, int>> rows = {
        {"U+U(2)+E8(-2)", 10, 0}, {"U+U+E8(-2)", 8, 0},  {"U+U(2)+D4(-1)+D4(-1)", 6, 0},
        {"U+U+D4(-1)+D4(-1)", 4, 0}, {"U+U+D8(-1)", 2, 0}, {"U+U+E8(-1)", 0, 0}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& [comp, ell, delta] = rows[i];
        c.guarded("01-invariants-row" + std::to_string(i + 1),
                  comp + " has (ell,delta)=(" + std::to_string(ell) + "," +
                      std::to_string(delta) + ")",
                  [&] { return check_ell_delta(comp, ell, delta); });
    }

    // (ii) both weight tables
    const std::vector<std::pair<int, int>> w210 = {{10, 4}, {8, 12}, {6, 28},
                                                   {4, 60}, {2, 124}, {0, 252}};
    for (const auto& [ell, w] : w210)
        c.guarded("02-weight-2-10-ell" + std::to_string(ell),
                  "(2,10) weight at ell=" + std::to_string(ell) + " is " + std::to_string(w),
                  [&] { return check_weight(SignatureTag::Sig_2_10, ell, w); });
    const std::vector<std::pair<int, int>> w26 = {{6, 24}, {4, 40}, {2, 72}};
    for (const auto& [ell, w] : w26)
        c.guarded("02-weight-2-6-ell" + std::to_string(ell),
                  "(2,6) weight at ell=" + std::to_string(ell) + " is " + std::to_string(w),
                  [&] { return check_weight(SignatureTag::Sig_2_6, ell, w); });

    // (iii) isometry claims
    c.guarded("03-isometry-B-1-E8", "B_-1 is isometric to E8", [&] {
        return check_definite_isometric(make_named_quadratic("B_-1"), make_named_quadratic("E8"));
    });
    c.guarded("03-isometry-B-2-E8", "B_-2 is isometric to E8", [&] {
        return check_definite_isometric(make_named_quadratic("B_-2"), make_named_quadratic("E8"));
    });
    c.guarded("03-isometry-trace-A-1", "trace lattice of A_-1 is isometric to B_-1", [&] {
        return check_definite_isometric(trace_lattice(make_named_hermitian("A_-1")),
                                        make_named_quadratic("B_-1"));
    });
    c.guarded("03-isometry-trace-A-2", "trace lattice of A_-2 is isometric to B_-2", [&] {
        return check_definite_isometric(trace_lattice(make_named_hermitian("A_-2")),
                                        make_named_quadratic("B_-2"));
    });
    for (const char* d : {"-1", "-2"}) {
        c.guarded(std::string("03-trace-L_UU") + d,
                  std::string("trace lattice of L_UU:") + d + " is isometric to U+U", [&] {
                      return check_triple_class(
                          trace_lattice(make_named_hermitian(std::string("L_UU:") + d)), "U+U");
                  });
    }
    for (const char* d : {"-1", "-2"}) {
        c.guarded(std::string("03-trace-L_UU2-") + (d + 1),
                  std::string("trace lattice of L_") + d + "_UU2 is isometric to U+U(2)", [&] {
                      return check_triple_class(
                          trace_lattice(make_named_hermitian(std::string("L_") + d + "_UU2")),
                          "U+U(2)");
                  });
    }
    for (const char* d : {"-1", "-2"}) {
        c.guarded(std::string("03-trace-L_D4-") + (d + 1),
                  std::string("trace lattice of L_") + d + "_D4 is isometric to D4", [&] {
                      return check_definite_isometric(
                          trace_lattice(make_named_hermitian(std::string("L_") + d + "_D4")),
                          make_named_quadratic("D4"));
                  });
    }
    c.guarded("03-trace-L_D6", "trace lattice of L_D6 is isometric to D6", [&] {
        return check_definite_isometric(trace_lattice(make_named_hermitian("L_D6")),
                                        make_named_quadratic("D6"));
    });
    c.guarded("03-trace-L_D8", "trace lattice of L_D8 is isometric to D8", [&] {
        return check_definite_isometric(trace_lattice(make_named_hermitian("L_D8")),
                                        make_named_quadratic("D8"));
    });
    c.guarded("03-trace-L_A2", "trace lattice of L_A2 is isometric to A2", [&] {
        return check_definite_isometric(trace_lattice(make_named_hermitian("L_A2")),
                                        make_named_quadratic("A2"));
    });

    // (iv) divisibility claims
    for (const char* name : {"L_UU:-1", "L_-2_UU2", "L_-1_D4", "L_-2_D4", "L_D6", "L_D8"}) {
        std::string id = std::string("04-divisibility-") + name;
        std::replace(id.begin(), id.end(), ':', '_');
        c.guarded(id, std::string("2<l,r> in O_F for all l,r in ") + name,
                  [&] { return check_sufficient(make_named_hermitian(name), bound); });
    }
    c.guarded("04-divisibility-L_A2", "12<l,r> in O_F for all l,r in L_A2", [&] {
        HermLattice h = make_named_hermitian("L_A2");
        bool ok = true;
        for (std::size_t i = 0; i < h.rank() && ok; ++i)
            for (std::size_t j = 0; j < h.rank() && ok; ++j)
                ok = h.gram()(i, j).in_scaled_ring(12);
        return Outcome{ok, ok ? "all gram entries scale into O_F by 12" : "an entry fails"};
    });
    c.guarded("04-ex5-condition2",
              "Ex5: <l,r> in O_F whenever <r,r>=-2 and Re<l,r> integral", [&] {
                  ConditionVerdict v = condition_minus_two(make_named_hermitian("Ex5"), bound);
                  bool ok = v.status != ConditionStatus::Violated;
                  std::string ev = ok ? "per-vector module check passed for every norm -2 vector "
                                        "in the coordinate box (bound " +
                                            std::to_string(bound) + ")"
                                      : v.witness;
                  return Outcome{ok, ev};
              });

    // (v) the nine example verdicts
    const std::vector<std::tuple<std::string, std::string, bool>> verdicts = {
        {"Ex1", "T5.1", true},  {"Ex2", "T5.1", false}, {"Ex3", "T5.1", false},
        {"Ex4", "T5.1", false}, {"Ex5", "T5.2", false}, {"Ex6", "T5.3", false},
        {"Ex7a", "T5.4", false}, {"Ex7b", "T5.4", false}, {"Ex8", "T5.4", false},
        {"Ex9", "T5.4", false}};
    for (const auto& [name, thm, fano] : verdicts)
        c.guarded("05-verdict-" + name,
                  name + " is uniruled via " + thm + (fano ? " and Fano" : ""),
                  [&] { return check_verdict(name, thm, bound, fano); });

    // (vi) pairing identity (lambda, z)_trace = 2 Re<lambda, z> on random samples
    c.guarded("06-pairing-identity",
              "trace pairing equals twice the real part of the Hermitian pairing", [&] {
                  std::mt19937 rng(20240811);
                  std::uniform_int_distribution<int> coord(-5, 5);
                  int checked = 0;
                  for (const char* name : {"Ex4", "Ex8", "L_A2"}) {
                      HermLattice h = make_named_hermitian(name);
                      QuadLattice q = trace_lattice(h);
                      for (int it = 0; it < 40; ++it) {
                          HermVector lam(h.rank(), h.zero()), z(h.rank(), h.zero());
                          QuadVector ql(2 * h.rank()), qz(2 * h.rank());
                          for (std::size_t i = 0; i < h.rank(); ++i) {
                              int a1 = coord(rng), b1 = coord(rng);
                              int a2 = coord(rng), b2 = coord(rng);
                              lam[i] = FieldElem(h.field(), a1, b1);
                              z[i] = FieldElem(h.field(), a2, b2);
                              ql[i] = a1;
                              ql[h.rank() + i] = b1;
                              qz[i] = a2;
                              qz[h.rank() + i] = b2;
                          }
                          auto [re, im] = pairing_decomposition(h, lam, z);
                          if (q.inner(ql, qz) != 2 * re)
                              return Outcome{false, std::string("identity fails on ") + name};
                          ++checked;
                      }
                  }
                  return Outcome{true, std::to_string(checked) + " sampled pairs agree"};
              });

    std::sort(c.items.begin(), c.items.end(),
              [](const SuiteItem& a, const SuiteItem& b) { return a.id < b.id; });
    SuiteReport r;
    r.items = std::move(c.items);
    r.pass = std::all_of(r.items.begin(), r.items.end(),
                         [](const SuiteItem& i) { return i.pass; });
    return r;
}

nlohmann::json suite_to_json(const SuiteReport& r) {
    nlohmann::json items = nlohmann::json::array();
    for (const SuiteItem& i : r.items)
        items.push_back({{"id", i.id},
                         {"claim", i.claim},
                         {"status", i.pass ? "PASS" : "FAIL"},
                         {"evidence", i.evidence}});
    return {{"items", std::move(items)}, {"pass", r.pass}};
}

std::string suite_to_text(const SuiteReport& r) {
    std::ostringstream os;
    for (const SuiteItem& i : r.items)
        os << (i.pass ? "PASS" : "FAIL") << " " << i.id << ": " << i.claim << " — " << i.evidence
           << "\n";
    os << (r.pass ? "ALL CLAIMS VERIFIED" : "SOME CLAIMS FAILED") << "\n";
    return os.str();
}

}  // namespace hermlat
