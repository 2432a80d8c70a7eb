#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermlat/matrix.hpp"
#include "hermlat/rational.hpp"

namespace hermlat {

using QuadVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Integral or rational quadratic lattice given by a symmetric nondegenerate Gram matrix.
class QuadLattice {
public:
    static QuadLattice create(Matrix<Rat> gram);  // throws on asymmetry / degeneracy

    std::size_t rank() const { return gram_.rows(); }
    const Matrix<Rat>& gram() const { return gram_; }
    const Rat& determinant() const { return det_; }
    bool integral() const { return integral_; }
    bool even() const { return even_; }

    Rat inner(const RatVector& v, const RatVector& w) const;
    Rat norm_of(const RatVector& v) const { return inner(v, v); }
    Rat inner(const QuadVector& v, const QuadVector& w) const;
    Rat norm_of(const QuadVector& v) const { return inner(v, v); }

private:
    explicit QuadLattice(Matrix<Rat> gram);
    Matrix<Rat> gram_;
    Rat det_;
    bool integral_ = false;
    bool even_ = false;
};

struct Signature {
    int plus = 0, minus = 0;
    bool operator==(const Signature&) const = default;
};

struct NikulinTriple {
    Signature sign;
    int ell = 0;
    int delta = 0;
    bool operator==(const NikulinTriple&) const = default;
};

struct InvariantProfile {
    Signature signature;
    Rat determinant;
    bool integral = false;
    bool even = false;
    std::vector<Int> elementary_divisors;  // nontrivial SNF divisors of the Gram matrix
    bool two_elementary = false;
    std::optional<int> ell;
    std::optional<int> delta;
    std::optional<NikulinTriple> nikulin_triple;
};

struct SnfResult {
    Matrix<Int> u, d, v;  // u*g*v = d, u/v unimodular, d_i | d_{i+1}, d_i >= 0
};

struct IsometryWitness {
    Matrix<Int> matrix;  // T with T^t * G2 * T = G1, det +-1
};

enum class RootClass { DeltaPrime, DeltaDoublePrime, Phi124Divisor, None };

Signature quad_signature(const QuadLattice& L);
Rat rational_det(const Matrix<Rat>& m);

SnfResult smith_normal_form(const Matrix<Int>& g);
Matrix<Int> to_int_matrix(const Matrix<Rat>& m);  // throws unless all entries integral

struct DualGenerator {
    RatVector coords;
    Int order;
};
// Coset representatives generating M^dual / M; orders match the elementary divisors.
std::vector<DualGenerator> dual_generators(const QuadLattice& L);

InvariantProfile invariant_profile(const QuadLattice& L);

QuadLattice direct_sum(const QuadLattice& a, const QuadLattice& b);
QuadLattice rescale(const QuadLattice& L, const Int& n);  // throws on n = 0

// All nonzero vectors of norm exactly t in a definite lattice, lexicographically
// ordered; throws if the count would exceed limit, or on indefinite input.
std::vector<QuadVector> enumerate_norm_vectors(const QuadLattice& L, const Rat& t,
                                               std::size_t limit = 10000);

std::optional<IsometryWitness> is_isometric_definite(const QuadLattice& a, const QuadLattice& b);
bool verify_witness(const QuadLattice& a, const QuadLattice& b, const IsometryWitness& w);

// Nikulin-triple comparison; throws unless both lattices are indefinite, even, 2-elementary.
bool is_isometric_indef_2elem(const QuadLattice& a, const QuadLattice& b);

Matrix<Rat> sigma_reflection(const QuadLattice& L, const QuadVector& r);  // throws on isotropic r
bool is_automorphism(const QuadLattice& L, const Matrix<Rat>& t);

RootClass classify_root_vector(const QuadLattice& L, const QuadVector& r);

bool in_dual(const QuadLattice& L, const RatVector& v);

}  // namespace hermlat
