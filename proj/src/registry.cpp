#include "hermlat/registry.hpp"

#include <cctype>
#include <stdexcept>

namespace hermlat {

namespace {

Matrix<Rat> int_gram(const std::vector<std::vector<int>>& rows) {
    Matrix<Rat> g(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) g(i, j) = rows[i][j];
    return g;
}

Matrix<Rat> gram_u() { return int_gram({{0, 1}, {1, 0}}); }
Matrix<Rat> gram_a2() { return int_gram({{2, 1}, {1, 2}}); }

// D_k root basis: alpha_i = e_i - e_{i+1} (i < k), alpha_k = e_{k-1} + e_k.
Matrix<Rat> gram_d(std::size_t k) {
    Matrix<Rat> g(k, k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) g(i, i) = 2;
    for (std::size_t i = 0; i + 2 < k; ++i) g(i, i + 1) = g(i + 1, i) = -1;
    g(k - 3, k - 1) = g(k - 1, k - 3) = -1;
    return g;
}

// E8 Cartan matrix, Bourbaki numbering: chain 1-3-4-5-6-7-8, node 2 on 4.
Matrix<Rat> gram_e8() {
    Matrix<Rat> g(8, 8, Rat(0));
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
    auto edge = [&](std::size_t a, std::size_t b) { g(a - 1, b - 1) = g(b - 1, a - 1) = -1; };
    edge(1, 3);
    edge(3, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    edge(7, 8);
    edge(2, 4);
    return g;
}

Matrix<Rat> gram_b_minus1() {
    return int_gram({{2, 0, 0, -1, 0, -1, 1, 0},
                     {0, 2, 1, 0, 1, 0, 0, 1},
                     {0, 1, 2, 0, 1, 0, 0, 1},
                     {-1, 0, 0, 2, 0, 1, -1, 0},
                     {0, 1, 1, 0, 2, 0, 1, 0},
                     {-1, 0, 0, 1, 0, 2, 0, 1},
                     {1, 0, 0, -1, 1, 0, 2, 0},
                     {0, 1, 1, 0, 0, 1, 0, 2}});
}

Matrix<Rat> gram_b_minus2() {
    return int_gram({{2, 0, 0, 0, 1, 2, 0, 1},
                     {0, 4, 0, 0, -2, 2, -1, 0},
                     {0, 0, 2, 0, 0, 1, 1, -2},
                     {0, 0, 0, 4, -1, 0, 2, 2},
                     {1, -2, 0, -1, 2, 0, 0, 0},
                     {2, 2, 1, 0, 0, 4, 0, 0},
                     {0, -1, 1, 2, 0, 0, 2, 0},
                     {1, 0, -2, 2, 0, 0, 0, 4}});
}

QuadLattice base_quadratic(const std::string& name) {
    if (name == "U") return QuadLattice::create(gram_u());
    if (name == "A2") return QuadLattice::create(gram_a2());
    if (name == "D4") return QuadLattice::create(gram_d(4));
    if (name == "D6") return QuadLattice::create(gram_d(6));
    if (name == "D8") return QuadLattice::create(gram_d(8));
    if (name == "E8") return QuadLattice::create(gram_e8());
    if (name == "B_-1") return QuadLattice::create(gram_b_minus1());
    if (name == "B_-2") return QuadLattice::create(gram_b_minus2());
    throw std::invalid_argument("unknown quadratic lattice name: '" + name + "'");
}

// One summand token "NAME" or "NAME(k)".
QuadLattice parse_summand(const std::string& token) {
    auto open = token.find('(');
    if (open == std::string::npos) return base_quadratic(token);
    if (token.back() != ')')
        throw std::invalid_argument("malformed lattice token: '" + token + "'");
    std::string base = token.substr(0, open);
    std::string scale_str = token.substr(open + 1, token.size() - open - 2);
    long scale = 0;
    try {
        std::size_t used = 0;
        scale = std::stol(scale_str, &used);
        if (used != scale_str.size()) throw std::invalid_argument(scale_str);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed scale in token: '" + token + "'");
    }
    if (scale == 0) throw std::invalid_argument("zero scale in token: '" + token + "'");
    return rescale(base_quadratic(base), Int(scale));
}

// sqrt(d)-coordinate shorthand for Hermitian gram construction
struct SC {
    Rat a, b;
};
Matrix<FieldElem> herm_gram(const FieldData& f, const std::vector<std::vector<SC>>& rows) {
    Matrix<FieldElem> g(rows.size(), rows[0].size(), FieldElem::from_rational(f, 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            g(i, j) = FieldElem::from_sqrt_coords(f, rows[i][j].a, rows[i][j].b);
    return g;
}

Rat h(int p, int q) { return Rat(p) / q; }

HermLattice herm_uu(long d) {
    FieldData f = FieldData::create(d);
    // gram (1/(2*sqrt(d))) [[0,1],[-1,0]]; 1/sqrt(d) = sqrt(d)/d
    Rat c = Rat(1) / (2 * Rat(d));
    return HermLattice::create(f, herm_gram(f, {{{0, 0}, {0, c}}, {{0, -c}, {0, 0}}}));
}

HermLattice herm_uu2_m1() {
    FieldData f = FieldData::create(-1);
    return HermLattice::create(
        f, herm_gram(f, {{{0, 0}, {h(1, 2), h(1, 2)}}, {{h(1, 2), h(-1, 2)}, {0, 0}}}));
}

HermLattice herm_uu2_m2() {
    FieldData f = FieldData::create(-2);
    return HermLattice::create(f,
                               herm_gram(f, {{{0, 0}, {h(1, 2), 0}}, {{h(1, 2), 0}, {0, 0}}}));
}

HermLattice herm_d4_m1() {
    FieldData f = FieldData::create(-1);
    // off-diagonal 1/(1+sqrt(-1)) = (1-sqrt(-1))/2
    return HermLattice::create(
        f, herm_gram(f, {{{1, 0}, {h(1, 2), h(-1, 2)}}, {{h(1, 2), h(1, 2)}, {1, 0}}}));
}

HermLattice herm_d4_m2() {
    FieldData f = FieldData::create(-2);
    return HermLattice::create(
        f, herm_gram(f, {{{1, 0}, {h(1, 2), h(1, 2)}}, {{h(1, 2), h(-1, 2)}, {1, 0}}}));
}

HermLattice herm_d6() {
    FieldData f = FieldData::create(-1);
    return HermLattice::create(f, herm_gram(f, {{{1, 0}, {h(1, 2), h(1, 2)}, {h(1, 2), 0}},
                                                {{h(1, 2), h(-1, 2)}, {1, 0}, {0, 0}},
                                                {{h(1, 2), 0}, {0, 0}, {1, 0}}}));
}

HermLattice herm_d8() {
    FieldData f = FieldData::create(-1);
    return HermLattice::create(
        f, herm_gram(f, {{{1, 0}, {h(1, 2), h(1, 2)}, {0, 0}, {0, 0}},
                         {{h(1, 2), h(-1, 2)}, {1, 0}, {h(1, 2), 0}, {0, 0}},
                         {{0, 0}, {h(1, 2), 0}, {1, 0}, {h(1, 2), 0}},
                         {{0, 0}, {0, 0}, {h(1, 2), 0}, {1, 0}}}));
}

HermLattice herm_a2() {
    FieldData f = FieldData::create(-3);
    return HermLattice::create(f, herm_gram(f, {{{1, 0}}}));
}

HermLattice herm_a_minus1() {
    FieldData f = FieldData::create(-1);
    return HermLattice::create(
        f, herm_gram(f, {{{1, 0}, {0, h(-1, 2)}, {0, h(-1, 2)}, {h(1, 2), 0}},
                         {{0, h(1, 2)}, {1, 0}, {h(1, 2), 0}, {0, h(1, 2)}},
                         {{0, h(1, 2)}, {h(1, 2), 0}, {1, 0}, {h(1, 2), 0}},
                         {{h(1, 2), 0}, {0, h(-1, 2)}, {h(1, 2), 0}, {1, 0}}}));
}

HermLattice herm_a_minus2() {
    FieldData f = FieldData::create(-2);
    return HermLattice::create(
        f, herm_gram(f, {{{1, 0}, {0, 0}, {h(1, 2), h(1, 2)}, {0, h(1, 4)}},
                         {{0, 0}, {1, 0}, {0, h(1, 4)}, {h(1, 2), h(-1, 2)}},
                         {{h(1, 2), h(-1, 2)}, {0, h(-1, 4)}, {1, 0}, {0, 0}},
                         {{0, h(-1, 4)}, {h(1, 2), h(1, 2)}, {0, 0}, {1, 0}}}));
}

HermLattice herm_named_fixed(const std::string& name) {
    if (name == "L_-1_UU2") return herm_uu2_m1();
    if (name == "L_-2_UU2") return herm_uu2_m2();
    if (name == "L_-1_D4") return herm_d4_m1();
    if (name == "L_-2_D4") return herm_d4_m2();
    if (name == "L_D6") return herm_d6();
    if (name == "L_D8") return herm_d8();
    if (name == "L_A2") return herm_a2();
    if (name == "A_-1") return herm_a_minus1();
    if (name == "A_-2") return herm_a_minus2();
    throw std::invalid_argument("unknown hermitian lattice name: '" + name + "'");
}

}  // namespace

QuadLattice make_named_quadratic(const std::string& name) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : name) {
        if (c == '+') {
            tokens.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    tokens.push_back(cur);
    QuadLattice acc = parse_summand(tokens[0]);
    for (std::size_t i = 1; i < tokens.size(); ++i) acc = direct_sum(acc, parse_summand(tokens[i]));
    return acc;
}

HermLattice make_named_hermitian(const std::string& name) {
    if (name.rfind("L_UU:", 0) == 0) {
        long d = 0;
        try {
            std::size_t used = 0;
            d = std::stol(name.substr(5), &used);
            if (used != name.size() - 5) throw std::invalid_argument(name);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed field in name: '" + name + "'");
        }
        return herm_uu(d);
    }
    // Example compositions; definite summands enter with the sign that makes
    // the total signature (1,n).
    if (name == "Ex1")
        return herm_compose({{herm_uu(-1), 1}, {herm_a_minus1(), -1}});
    if (name == "Ex2")
        return herm_compose({{herm_uu(-1), 1}, {herm_d8(), -1}});
    if (name == "Ex3")
        return herm_compose({{herm_uu(-1), 1}, {herm_d4_m1(), -1}, {herm_d4_m1(), -1}});
    if (name == "Ex4")
        return herm_compose({{herm_uu2_m2(), 1}, {herm_d4_m2(), -1}, {herm_d4_m2(), -1}});
    if (name == "Ex5")
        return herm_compose({{herm_uu2_m1(), 1}, {herm_a_minus1(), -2}});
    if (name == "Ex6")
        return herm_compose({{herm_uu(-1), 1}, {herm_d6(), -1}});
    if (name == "Ex7a")
        return herm_compose({{herm_uu(-1), 2}, {herm_d4_m1(), -1}});
    if (name == "Ex7b")
        return herm_compose({{herm_uu(-2), 2}, {herm_d4_m2(), -1}});
    if (name == "Ex8")
        return herm_compose({{herm_uu(-1), 1}, {herm_d4_m1(), -1}});
    if (name == "Ex9")
        return herm_compose({{herm_uu2_m2(), 1}, {herm_d4_m2(), -1}});
    return herm_named_fixed(name);
}

std::vector<CatalogEntry> catalog() {
    return {
        {"U", "quadratic", "hyperbolic plane, signature (1,1)"},
        {"A2", "quadratic", "A2 root lattice"},
        {"D4", "quadratic", "D4 root lattice"},
        {"D6", "quadratic", "D6 root lattice"},
        {"D8", "quadratic", "D8 root lattice"},
        {"E8", "quadratic", "E8 root lattice, even unimodular"},
        {"B_-1", "quadratic", "rank-8 even unimodular gram, isometric to E8"},
        {"B_-2", "quadratic", "rank-8 even unimodular gram, isometric to E8"},
        {"L_UU:-1", "hermitian", "rank-2 over Q(sqrt(-1)); trace lattice U+U"},
        {"L_UU:-2", "hermitian", "rank-2 over Q(sqrt(-2)); trace lattice U+U"},
        {"L_-1_UU2", "hermitian", "rank-2 over Q(sqrt(-1)); trace lattice U+U(2)"},
        {"L_-2_UU2", "hermitian", "rank-2 over Q(sqrt(-2)); trace lattice U+U(2)"},
        {"L_-1_D4", "hermitian", "rank-2 over Q(sqrt(-1)); trace lattice D4"},
        {"L_-2_D4", "hermitian", "rank-2 over Q(sqrt(-2)); trace lattice D4"},
        {"L_D6", "hermitian", "rank-3 over Q(sqrt(-1)); trace lattice D6"},
        {"L_D8", "hermitian", "rank-4 over Q(sqrt(-1)); trace lattice D8"},
        {"L_A2", "hermitian", "rank-1 over Q(sqrt(-3)); trace lattice A2"},
        {"A_-1", "hermitian", "rank-4 definite over Q(sqrt(-1)); trace lattice E8"},
        {"A_-2", "hermitian", "rank-4 definite over Q(sqrt(-2)); trace lattice E8"},
        {"Ex1", "hermitian", "L_UU:-1 + A_-1(-1); signature (1,5)"},
        {"Ex2", "hermitian", "L_UU:-1 + L_D8(-1); signature (1,5)"},
        {"Ex3", "hermitian", "L_UU:-1 + L_-1_D4(-1)^2; signature (1,5)"},
        {"Ex4", "hermitian", "L_-2_UU2 + L_-2_D4(-1)^2; signature (1,5)"},
        {"Ex5", "hermitian", "L_-1_UU2 + A_-1(-2); signature (1,5)"},
        {"Ex6", "hermitian", "L_UU:-1 + L_D6(-1); signature (1,4)"},
        {"Ex7a", "hermitian", "L_UU:-1(2) + L_-1_D4(-1); signature (1,3)"},
        {"Ex7b", "hermitian", "L_UU:-2(2) + L_-2_D4(-1); signature (1,3)"},
        {"Ex8", "hermitian", "L_UU:-1 + L_-1_D4(-1); signature (1,3)"},
        {"Ex9", "hermitian", "L_-2_UU2 + L_-2_D4(-1); signature (1,3)"},
    };
}

}  // namespace hermlat
