#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "hermlat/hlattice.hpp"
#include "hermlat/qlattice.hpp"
#include "hermlat/verdict.hpp"

namespace hermlat {

using ParsedLattice = std::variant<QuadLattice, HermLattice>;

// JSON schemas:
//   {"kind":"quadratic","rank":n,"gram":[["0","1"],...]}
//   {"kind":"hermitian","field_d":d,"rank":m,"gram":[[["a","b"],...],...]}
// Hermitian entries are a + b*sqrt(d) as rational-string pairs.
ParsedLattice parse_lattice_json(const nlohmann::json& j);
ParsedLattice parse_lattice_text(const std::string& text);

nlohmann::json quad_to_json(const QuadLattice& q);
nlohmann::json herm_to_json(const HermLattice& h);

nlohmann::json profile_to_json(const InvariantProfile& p);
nlohmann::json verdict_to_json(const TheoremVerdict& v);

}  // namespace hermlat
