#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermlat/hlattice.hpp"
#include "hermlat/qlattice.hpp"

namespace hermlat {

enum class SignatureTag { Sig_2_10, Sig_2_6 };
enum class DivisorKind { DeltaPrimeMinus2, Minus4DoubleDual };

struct ReflectiveFormEntry {
    std::string class_key;
    int weight = 0;
    DivisorKind divisor_kind = DivisorKind::DeltaPrimeMinus2;
    bool strongly_reflective = true;
    bool admissible = true;   // false for the delta=1 family
    int multiplicity = 1;     // divisor multiplicity bound
    std::string note;         // threshold discussion for inadmissible entries
    std::string source;
};

// Weight of the strongly reflective form for an even 2-elementary lattice of
// the tagged signature with delta=0; throws on parity or range violations.
int weight_formula(SignatureTag tag, int ell);

std::optional<ReflectiveFormEntry> form_lookup(const InvariantProfile& profile,
                                               const std::optional<std::string>& class_key = {});

// k > a(n+1); throws unless n > 1, a >= 1, k >= 1.
bool uniruledness_check(int n, int a, int k);

struct HypothesisResult {
    std::string label;
    bool pass = false;
    std::string evidence;
};

struct TheoremVerdict {
    std::string theorem_id;  // "T5.1".."T5.4", or "" when nothing matches
    std::vector<HypothesisResult> hypothesis_results;
    int n = 0;
    int a = 0;
    int k = 0;
    bool uniruled = false;
    bool fano = false;
    int bound = 0;
    std::vector<std::string> trail;
};

TheoremVerdict theorem_verdict(const HermLattice& h, int bound);

}  // namespace hermlat
