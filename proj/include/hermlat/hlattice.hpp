#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermlat/field.hpp"
#include "hermlat/matrix.hpp"
#include "hermlat/qlattice.hpp"

namespace hermlat {

// Vector with O_F coordinates in the lattice basis.
using HermVector = std::vector<FieldElem>;

// Hermitian lattice over O_F: rank-m Gram matrix of field elements, Hermitian
// symmetric, with integral trace form. Pairing is linear in the first slot and
// conjugate-linear in the second.
class HermLattice {
public:
    // Throws on non-Hermitian gram, degeneracy, or trace non-integrality; the
    // message names the first offending entry.
    static HermLattice create(FieldData field, Matrix<FieldElem> gram);

    const FieldData& field() const { return field_; }
    std::size_t rank() const { return gram_.rows(); }
    const Matrix<FieldElem>& gram() const { return gram_; }

    FieldElem pair(const HermVector& x, const HermVector& y) const;
    Rat norm_of(const HermVector& x) const;  // <x,x> is rational on the diagonal

    FieldElem zero() const { return FieldElem::from_rational(field_, 0); }
    FieldElem one() const { return FieldElem::from_rational(field_, 1); }

private:
    HermLattice(FieldData f, Matrix<FieldElem> g) : field_(f), gram_(std::move(g)) {}
    FieldData field_;
    Matrix<FieldElem> gram_;
};

enum class ConditionStatus { VerifiedSufficient, VerifiedUpToBound, Violated };

struct ConditionVerdict {
    ConditionStatus status = ConditionStatus::VerifiedUpToBound;
    std::optional<int> bound_used;
    std::optional<HermVector> counterexample;
    std::string witness;  // human-readable pairing evidence for a violation
};

Signature herm_signature(const HermLattice& h);

// Z-basis ordered (e_1..e_m, omega e_1..omega e_m); entries Tr<x,y>.
QuadLattice trace_lattice(const HermLattice& h);

// x in (1/s) L^sharp: s*<b,x> in O_F for every basis vector b.
bool dual_membership(const HermLattice& h, const HermVector& x, const Int& s);

Matrix<FieldElem> tau_reflection(const HermLattice& h, const HermVector& r);
bool is_integral_unitary(const HermLattice& h, const Matrix<FieldElem>& t);

// (Re<lambda,z>, omega-coordinate of <lambda,z>); the trace pairing equals
// twice the first component.
std::pair<Rat, Rat> pairing_decomposition(const HermLattice& h, const HermVector& lambda,
                                          const HermVector& z);

ConditionVerdict condition_minus_one(const HermLattice& h, int bound);
ConditionVerdict condition_minus_two(const HermLattice& h, int bound);

// Norm-t vectors. Definite blocks are enumerated completely via the trace
// lattice; indefinite blocks by the coordinate box [-bound, bound] on both
// omega-components. Deterministic order.
std::vector<HermVector> enumerate_herm_norm_vectors(const HermLattice& h, const Rat& t, int bound,
                                                    std::size_t limit = 10000);

// Process-wide cap on vectors visited during Hermitian enumeration (including
// the streaming condition checks); exceeding it throws. Settable by the CLI
// via --limit / HERMLAT_LIMIT.
std::size_t& herm_enumeration_cap();

struct HermSummand {
    HermLattice lattice;
    Int scale;
};
HermLattice herm_compose(const std::vector<HermSummand>& parts);
HermLattice herm_rescale(const HermLattice& h, const Int& s);

}  // namespace hermlat
