#include "hermlat/io.hpp"

#include <stdexcept>

namespace hermlat {

using nlohmann::json;

namespace {

std::string entry_pos(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

Rat rat_at(const json& cell, std::size_t i, std::size_t j) {
    if (!cell.is_string())
        throw std::invalid_argument("gram entry " + entry_pos(i, j) + " must be a rational string");
    return parse_rat(cell.get<std::string>());
}

}  // namespace

ParsedLattice parse_lattice_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("lattice file must be an object with a 'kind' string");
    std::string kind = j["kind"].get<std::string>();
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        throw std::invalid_argument("lattice file must carry an integer 'rank'");
    auto rank = j["rank"].get<long>();
    if (!j.contains("gram") || !j["gram"].is_array())
        throw std::invalid_argument("lattice file must carry a 'gram' array");
    const json& gram = j["gram"];
    if (rank <= 0 || gram.size() != static_cast<std::size_t>(rank))
        throw std::invalid_argument("gram row count does not match rank");

    if (kind == "quadratic") {
        Matrix<Rat> g(gram.size(), gram.size());
        for (std::size_t i = 0; i < gram.size(); ++i) {
            if (!gram[i].is_array() || gram[i].size() != gram.size())
                throw std::invalid_argument("gram row " + std::to_string(i + 1) +
                                            " has the wrong length");
            for (std::size_t jj = 0; jj < gram.size(); ++jj) g(i, jj) = rat_at(gram[i][jj], i, jj);
        }
        return QuadLattice::create(std::move(g));
    }
    if (kind == "hermitian") {
        if (!j.contains("field_d") || !j["field_d"].is_number_integer())
            throw std::invalid_argument("hermitian lattice file requires an integer 'field_d'");
        FieldData f = FieldData::create(j["field_d"].get<long>());
        Matrix<FieldElem> g(gram.size(), gram.size(), FieldElem::from_rational(f, 0));
        for (std::size_t i = 0; i < gram.size(); ++i) {
            if (!gram[i].is_array() || gram[i].size() != gram.size())
                throw std::invalid_argument("gram row " + std::to_string(i + 1) +
                                            " has the wrong length");
            for (std::size_t jj = 0; jj < gram.size(); ++jj) {
                const json& cell = gram[i][jj];
                if (!cell.is_array() || cell.size() != 2)
                    throw std::invalid_argument("hermitian gram entry " + entry_pos(i, jj) +
                                                " must be a [a, b] pair");
                g(i, jj) = FieldElem::from_sqrt_coords(f, rat_at(cell[0], i, jj),
                                                       rat_at(cell[1], i, jj));
            }
        }
        return HermLattice::create(f, std::move(g));
    }
    throw std::invalid_argument("unknown lattice kind: '" + kind + "'");
}

ParsedLattice parse_lattice_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON lattice file");
    return parse_lattice_json(j);
}

json quad_to_json(const QuadLattice& q) {
    json gram = json::array();
    for (std::size_t i = 0; i < q.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < q.rank(); ++j) row.push_back(rat_str(q.gram()(i, j)));
        gram.push_back(std::move(row));
    }
    return {{"kind", "quadratic"}, {"rank", q.rank()}, {"gram", std::move(gram)}};
}

json herm_to_json(const HermLattice& h) {
    json gram = json::array();
    for (std::size_t i = 0; i < h.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < h.rank(); ++j) {
            const FieldElem& e = h.gram()(i, j);
            row.push_back(json::array({rat_str(e.sqrt_a()), rat_str(e.sqrt_b())}));
        }
        gram.push_back(std::move(row));
    }
    return {{"kind", "hermitian"},
            {"field_d", h.field().d},
            {"rank", h.rank()},
            {"gram", std::move(gram)}};
}

json profile_to_json(const InvariantProfile& p) {
    json j;
    j["signature"] = {p.signature.plus, p.signature.minus};
    j["determinant"] = rat_str(p.determinant);
    j["integral"] = p.integral;
    j["even"] = p.even;
    json divs = json::array();
    for (const Int& d : p.elementary_divisors) divs.push_back(d.get_str());
    j["elementary_divisors"] = std::move(divs);
    j["two_elementary"] = p.two_elementary;
    if (p.ell) j["ell"] = *p.ell;
    if (p.delta) j["delta"] = *p.delta;
    return j;
}

json verdict_to_json(const TheoremVerdict& v) {
    json j;
    j["theorem_id"] = v.theorem_id;
    json hyps = json::array();
    for (const auto& h : v.hypothesis_results)
        hyps.push_back({{"label", h.label}, {"pass", h.pass}, {"evidence", h.evidence}});
    j["hypothesis_results"] = std::move(hyps);
    j["n"] = v.n;
    j["a"] = v.a;
    j["k"] = v.k;
    j["uniruled"] = v.uniruled;
    j["fano"] = v.fano;
    j["bound"] = v.bound;
    j["trail"] = v.trail;
    return j;
}

}  // namespace hermlat
