#include "hermlat/verdict.hpp"

#include <sstream>
#include <stdexcept>

#include "hermlat/registry.hpp"

namespace hermlat {

namespace {

std::string triple_str(const NikulinTriple& t) {
    std::ostringstream os;
    os << "((" << t.sign.plus << "," << t.sign.minus << "), ell=" << t.ell
       << ", delta=" << t.delta << ")";
    return os.str();
}

std::string profile_str(const InvariantProfile& p) {
    if (p.nikulin_triple) return triple_str(*p.nikulin_triple);
    std::ostringstream os;
    os << "((" << p.signature.plus << "," << p.signature.minus << "), even=" << p.even
       << ", 2-elementary=" << p.two_elementary << ")";
    return os.str();
}

NikulinTriple class_triple(const std::string& composition) {
    InvariantProfile p = invariant_profile(make_named_quadratic(composition));
    if (!p.nikulin_triple) throw std::logic_error("reference class is not even 2-elementary");
    return *p.nikulin_triple;
}

std::string condition_evidence(const ConditionVerdict& c) {
    switch (c.status) {
        case ConditionStatus::VerifiedSufficient:
            return "VERIFIED_SUFFICIENT: scaled gram entries lie in O_F";
        case ConditionStatus::VerifiedUpToBound:
            return "VERIFIED_UP_TO_BOUND " + std::to_string(c.bound_used.value_or(0)) +
                   ": no violating vector in the coordinate box";
        case ConditionStatus::Violated:
            return "VIOLATED: " + c.witness;
    }
    return "";
}

}  // namespace

int weight_formula(SignatureTag tag, int ell) {
    if (ell % 2 != 0) throw std::invalid_argument("ell must be even");
    if (tag == SignatureTag::Sig_2_10) {
        if (ell < 0 || ell > 10) throw std::invalid_argument("ell out of range for (2,10)");
        return (1 << ((16 - ell) / 2)) - 4;
    }
    if (ell < 2 || ell > 6) throw std::invalid_argument("ell out of range for (2,6)");
    return 8 * ((1 << ((8 - ell) / 2)) + 1);
}

std::optional<ReflectiveFormEntry> form_lookup(const InvariantProfile& profile,
                                               const std::optional<std::string>& class_key) {
    if (!profile.nikulin_triple) return std::nullopt;
    const NikulinTriple& t = *profile.nikulin_triple;

    if (class_key && *class_key == "U+U(2)+E8(-2)") {
        if (t != class_triple("U+U(2)+E8(-2)")) return std::nullopt;
        ReflectiveFormEntry e;
        e.class_key = *class_key;
        e.weight = 124;
        e.divisor_kind = DivisorKind::Minus4DoubleDual;
        e.source = "cusp form of weight 124 on the Enriques lattice";
        return e;
    }

    if (t.sign == Signature{2, 10}) {
        ReflectiveFormEntry e;
        e.class_key = class_key.value_or("sig(2,10) ell=" + std::to_string(t.ell));
        if (t.delta == 0) {
            e.weight = weight_formula(SignatureTag::Sig_2_10, t.ell);
            e.source = "weight table for even 2-elementary (2,10), delta=0";
            return e;
        }
        // delta=1 family: weight 4g with multiplicity g, g = 2^((12-ell)/2)+1.
        int g = (1 << ((12 - t.ell) / 2)) + 1;
        e.weight = 4 * g;
        e.multiplicity = g;
        e.strongly_reflective = false;
        e.admissible = false;
        e.note = "ratio 4g/g = 4 fails both quoted thresholds (stated as not greater than 5; "
                 "the criterion for n=5 needs > 6)";
        e.source = "delta=1 family, inadmissible";
        return e;
    }

    if (t == class_triple("U+U+D6(-1)")) {
        ReflectiveFormEntry e;
        e.class_key = class_key.value_or("U+U+D6(-1)");
        e.weight = 102;
        e.source = "fixed weight-102 entry for the (2,8) D6 class";
        return e;
    }

    if (t.sign == Signature{2, 6} && t.delta == 0 && t.ell >= 2 && t.ell <= 6) {
        for (const char* key : {"U+U+D4(-1)", "U+U(2)+D4(-1)", "U(2)+U(2)+D4(-1)"}) {
            if (t == class_triple(key)) {
                ReflectiveFormEntry e;
                e.class_key = class_key.value_or(key);
                e.weight = weight_formula(SignatureTag::Sig_2_6, t.ell);
                e.source = "weight table for the three (2,6) D4 classes";
                return e;
            }
        }
    }
    return std::nullopt;
}

bool uniruledness_check(int n, int a, int k) {
    if (n <= 1) throw std::invalid_argument("criterion requires n > 1");
    if (a < 1 || k < 1) throw std::invalid_argument("a and k must be positive");
    return k > a * (n + 1);
}

TheoremVerdict theorem_verdict(const HermLattice& h, int bound) {
    TheoremVerdict v;
    v.bound = bound;
    v.a = multiplicity_a(h.field());
    long d = h.field().d;

    Signature hs = herm_signature(h);
    v.trail.push_back("hermitian signature (" + std::to_string(hs.plus) + "," +
                      std::to_string(hs.minus) + ") over Q(sqrt(" + std::to_string(d) + "))");
    if (hs.plus != 1 || hs.minus < 3 || hs.minus > 5) {
        v.trail.push_back("no theorem applies to this signature");
        return v;
    }
    v.n = hs.minus;

    QuadLattice lq = trace_lattice(h);
    InvariantProfile prof = invariant_profile(lq);
    v.trail.push_back("trace lattice profile " + profile_str(prof));

    // Condition (1): class matching on the Nikulin triple.
    std::string match_evidence = profile_str(prof);
    bool minus_two_condition = false;
    if (v.n == 5 && prof.nikulin_triple) {
        if (*prof.nikulin_triple == class_triple("U+U(2)+E8(-2)")) {
            v.theorem_id = "T5.2";
            v.k = 124;
            minus_two_condition = true;
            match_evidence += " = class of U+U(2)+E8(-2)";
        } else if (prof.nikulin_triple->sign == Signature{2, 10} &&
                   prof.nikulin_triple->delta == 0) {
            int ell_cap = (d == -1 || d == -3) ? 6 : 8;
            if (d == -1 || d == -3)
                v.trail.push_back("strict variant applied: ell cap tightened to 6 for this "
                                  "field (the large unit group raises the k > a(n+1) "
                                  "threshold, which needs weight >= 28)");
            if (prof.nikulin_triple->ell <= ell_cap) {
                v.theorem_id = "T5.1";
                v.k = weight_formula(SignatureTag::Sig_2_10, prof.nikulin_triple->ell);
                match_evidence += ", ell <= " + std::to_string(ell_cap);
            } else {
                match_evidence += ", ell exceeds the cap " + std::to_string(ell_cap);
            }
        }
    } else if (v.n == 4 && prof.nikulin_triple &&
               *prof.nikulin_triple == class_triple("U+U+D6(-1)")) {
        v.theorem_id = "T5.3";
        v.k = 102;
        match_evidence += " = class of U+U+D6(-1)";
    } else if (v.n == 3 && prof.nikulin_triple) {
        for (const char* key : {"U+U+D4(-1)", "U+U(2)+D4(-1)", "U(2)+U(2)+D4(-1)"}) {
            if (*prof.nikulin_triple == class_triple(key)) {
                v.theorem_id = "T5.4";
                v.k = weight_formula(SignatureTag::Sig_2_6, prof.nikulin_triple->ell);
                match_evidence += std::string(" = class of ") + key;
                break;
            }
        }
    }

    v.hypothesis_results.push_back(
        {"condition (1): lattice class", !v.theorem_id.empty(), match_evidence});
    if (v.theorem_id.empty()) {
        v.trail.push_back("no theorem matches the trace-lattice class");
        return v;
    }
    v.trail.push_back("matched " + v.theorem_id + " with k=" + std::to_string(v.k));

    ConditionVerdict cond = minus_two_condition ? condition_minus_two(h, bound)
                                                : condition_minus_one(h, bound);
    bool cond_pass = cond.status != ConditionStatus::Violated;
    v.hypothesis_results.push_back(
        {minus_two_condition ? "condition (2): norm -2 pairing divisibility"
                             : "condition (2): norm -1 pairing divisibility",
         cond_pass, condition_evidence(cond)});

    bool all_pass = cond_pass;
    bool numeric = uniruledness_check(v.n, v.a, v.k);
    v.trail.push_back("criterion k > a(n+1): " + std::to_string(v.k) + " > " +
                      std::to_string(v.a) + "*" + std::to_string(v.n + 1) + " is " +
                      (numeric ? "true" : "false"));
    v.uniruled = all_pass && numeric;
    v.fano = v.theorem_id == "T5.1" && cond_pass && prof.nikulin_triple &&
             *prof.nikulin_triple == NikulinTriple{{2, 10}, 0, 0};
    if (v.fano) v.trail.push_back("class ((2,10),0,0) with the divisibility condition: Fano");
    return v;
}

}  // namespace hermlat
