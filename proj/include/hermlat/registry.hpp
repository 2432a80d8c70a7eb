#pragma once

#include <string>
#include <vector>

#include "hermlat/hlattice.hpp"
#include "hermlat/qlattice.hpp"

namespace hermlat {

// Named quadratic lattices and compositions like "U+U(2)+E8(-2)".
// Base names: U, A2, D4, D6, D8, E8 (root bases), B_-1, B_-2; an optional
// "(k)" suffix rescales by the nonzero integer k.
QuadLattice make_named_quadratic(const std::string& name);

// Named Hermitian lattices. "L_UU:d" instantiates the rank-2 hyperbolic
// family over Q(sqrt(d)); the rest are fixed-field entries: L_-1_UU2,
// L_-2_UU2, L_-1_D4, L_-2_D4, L_D6, L_D8, L_A2, A_-1, A_-2, and the example
// compositions Ex1..Ex9 (Ex7a/Ex7b are the two field variants of Ex7).
HermLattice make_named_hermitian(const std::string& name);

struct CatalogEntry {
    std::string name;
    std::string kind;  // "quadratic" or "hermitian"
    std::string description;
};
std::vector<CatalogEntry> catalog();

}  // namespace hermlat
