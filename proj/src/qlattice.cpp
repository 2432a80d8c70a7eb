#include "hermlat/qlattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hermlat {

namespace {

RatVector to_rat_vector(const QuadVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

}  // namespace

Rat rational_det(const Matrix<Rat>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Matrix<Rat> a = m;
    std::size_t n = a.rows();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            a.swap_rows(piv, k);
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

QuadLattice::QuadLattice(Matrix<Rat> gram) : gram_(std::move(gram)) {
    det_ = rational_det(gram_);
    integral_ = true;
    for (std::size_t i = 0; i < gram_.rows() && integral_; ++i)
        for (std::size_t j = 0; j < gram_.cols(); ++j)
            if (!is_integer(gram_(i, j))) {
                integral_ = false;
                break;
            }
    even_ = integral_;
    for (std::size_t i = 0; i < gram_.rows() && even_; ++i)
        if (gram_(i, i).get_num() % 2 != 0) even_ = false;
}

QuadLattice QuadLattice::create(Matrix<Rat> gram) {
    if (gram.rows() != gram.cols() || gram.rows() == 0)
        throw std::invalid_argument("gram matrix must be square and nonempty");
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = i + 1; j < gram.cols(); ++j)
            if (gram(i, j) != gram(j, i))
                throw std::invalid_argument("gram matrix is not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
    QuadLattice L(std::move(gram));
    if (L.det_ == 0) throw std::invalid_argument("gram matrix is degenerate");
    return L;
}

Rat QuadLattice::inner(const RatVector& v, const RatVector& w) const {
    if (v.size() != rank() || w.size() != rank())
        throw std::invalid_argument("vector length does not match lattice rank");
    Rat s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (v[i] == 0) continue;
        Rat row = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            if (w[j] != 0) row += gram_(i, j) * w[j];
        s += v[i] * row;
    }
    return s;
}

Rat QuadLattice::inner(const QuadVector& v, const QuadVector& w) const {
    return inner(to_rat_vector(v), to_rat_vector(w));
}

Signature quad_signature(const QuadLattice& L) {
    // Exact symmetric congruence diagonalization; when the whole remaining
    // diagonal vanishes, b_k <- b_k + b_j against a nonzero off-diagonal entry
    // creates a pivot.
    Matrix<Rat> a = L.gram();
    std::size_t n = a.rows();
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && a(j, j) == 0) ++j;
            if (j < n) {
                a.swap_rows(k, j);
                a.swap_cols(k, j);
            } else {
                for (j = k + 1; j < n && a(k, j) == 0; ++j) {
                }
                if (j == n) continue;  // zero row: degenerate block, skipped
                for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
                for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
            }
        }
        const Rat piv = a(k, k);
        if (piv > 0)
            ++sig.plus;
        else
            ++sig.minus;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / piv;
            for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
            for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
        }
    }
    return sig;
}

Matrix<Int> to_int_matrix(const Matrix<Rat>& m) {
    Matrix<Int> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j))) throw std::invalid_argument("matrix entry not integral");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

SnfResult smith_normal_form(const Matrix<Int>& g) {
    const std::size_t m = g.rows(), n = g.cols();
    SnfResult res{Matrix<Int>::identity(m, 1, 0), g, Matrix<Int>::identity(n, 1, 0)};
    Matrix<Int>&u = res.u, &d = res.d, &v = res.v;

    auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < n; ++j) d(dst, j) += c * d(src, j);
        for (std::size_t j = 0; j < m; ++j) u(dst, j) += c * u(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < m; ++i) d(i, dst) += c * d(i, src);
        for (std::size_t i = 0; i < n; ++i) v(i, dst) += c * v(i, src);
    };
    auto swap_row = [&](std::size_t a, std::size_t b) {
        d.swap_rows(a, b);
        u.swap_rows(a, b);
    };
    auto swap_col = [&](std::size_t a, std::size_t b) {
        d.swap_cols(a, b);
        v.swap_cols(a, b);
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < n; ++j) d(r, j) = -d(r, j);
        for (std::size_t j = 0; j < m; ++j) u(r, j) = -u(r, j);
    };

    std::size_t t = 0;
    const std::size_t lim = std::min(m, n);
    while (t < lim) {
        // Locate a minimal-magnitude nonzero pivot in the remaining block.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (d(i, j) == 0) continue;
                if (!found || cmp(abs(d(i, j)), abs(d(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) swap_row(pi, t);
        if (pj != t) swap_col(pj, t);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                Int q = floor_div(d(i, t), d(t, t));
                add_row(i, t, -q);
                if (d(i, t) != 0) {
                    swap_row(i, t);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Int q = floor_div(d(t, j), d(t, t));
                add_col(j, t, -q);
                if (d(t, j) != 0) {
                    swap_col(j, t);
                    dirty = true;
                }
            }
            if (!dirty) {
                // Pivot must divide every remaining entry for the divisor chain.
                for (std::size_t i = t + 1; i < m && !dirty; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (d(i, j) % d(t, t) != 0) {
                            add_row(t, i, 1);
                            dirty = true;
                            break;
                        }
            }
        }
        if (d(t, t) < 0) negate_row(t);
        ++t;
    }
    return res;
}

std::vector<DualGenerator> dual_generators(const QuadLattice& L) {
    if (!L.integral()) throw std::invalid_argument("dual generators require an integral lattice");
    SnfResult s = smith_normal_form(to_int_matrix(L.gram()));
    std::vector<DualGenerator> gens;
    const std::size_t n = L.rank();
    for (std::size_t i = 0; i < n; ++i) {
        const Int& di = s.d(i, i);
        if (di <= 1) continue;
        // G^{-1} U^{-1} e_i = V e_i / d_i generates a cyclic factor of order d_i.
        RatVector g(n);
        for (std::size_t r = 0; r < n; ++r) {
            g[r] = Rat(s.v(r, i)) / Rat(di);
            g[r] -= Rat(rat_floor(g[r]));  // representative with coordinates in [0,1)
        }
        gens.push_back({std::move(g), di});
    }
    return gens;
}

InvariantProfile invariant_profile(const QuadLattice& L) {
    InvariantProfile p;
    p.signature = quad_signature(L);
    p.determinant = L.determinant();
    p.integral = L.integral();
    p.even = L.even();
    if (!p.integral) return p;

    SnfResult s = smith_normal_form(to_int_matrix(L.gram()));
    for (std::size_t i = 0; i < L.rank(); ++i)
        if (s.d(i, i) > 1) p.elementary_divisors.push_back(s.d(i, i));

    p.two_elementary =
        std::all_of(p.elementary_divisors.begin(), p.elementary_divisors.end(),
                    [](const Int& e) { return e == 2; });
    if (p.two_elementary) {
        p.ell = static_cast<int>(p.elementary_divisors.size());
        if (p.even) {
            // Generator check; sound for even 2-elementary M since 2(v,w) is
            // integral for v,w in the dual.
            int delta = 0;
            for (const DualGenerator& g : dual_generators(L))
                if (!is_integer(L.norm_of(g.coords))) delta = 1;
            p.delta = delta;
            p.nikulin_triple = NikulinTriple{p.signature, *p.ell, delta};
        }
    }
    return p;
}

QuadLattice direct_sum(const QuadLattice& a, const QuadLattice& b) {
    std::size_t n = a.rank() + b.rank();
    Matrix<Rat> g(n, n, Rat(0));
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
    return QuadLattice::create(std::move(g));
}

QuadLattice rescale(const QuadLattice& L, const Int& n) {
    if (n == 0) throw std::invalid_argument("rescale by zero");
    Matrix<Rat> g = L.gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= Rat(n);
    return QuadLattice::create(std::move(g));
}

namespace {

// Exact LDL data for a positive definite rational Gram matrix:
// norm(x) = sum_i diag[i] * (x_i + sum_{j>i} coef[i][j] x_j)^2.
struct Ldl {
    std::vector<Rat> diag;
    Matrix<Rat> coef;
};

Ldl ldl_decompose(const Matrix<Rat>& gram) {
    std::size_t n = gram.rows();
    Matrix<Rat> a = gram;
    Ldl out{std::vector<Rat>(n), Matrix<Rat>(n, n, Rat(0))};
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) <= 0) throw std::invalid_argument("lattice is not positive definite");
        out.diag[k] = a(k, k);
        for (std::size_t j = k + 1; j < n; ++j) out.coef(k, j) = a(k, j) / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) -= a(k, i) * a(k, j) / a(k, k);
    }
    return out;
}

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

void enum_recurse(const Ldl& q, std::size_t level, const Rat& budget, std::vector<Int>& x,
                  std::vector<QuadVector>& out, std::size_t limit) {
    if (budget < 0) return;
    if (level == static_cast<std::size_t>(-1)) {
        if (budget == 0) {
            bool zero = std::all_of(x.begin(), x.end(), [](const Int& c) { return c == 0; });
            if (!zero) {
                if (out.size() >= limit) throw std::runtime_error("enumeration limit exceeded");
                out.push_back(x);
            }
        }
        return;
    }
    Rat center = 0;  // x_level + center is the completed-square offset
    for (std::size_t j = level + 1; j < x.size(); ++j)
        if (x[j] != 0) center += q.coef(level, j) * x[j];
    // |x + center| <= sqrt(budget/diag); overshoot the bound, filter exactly.
    Rat ratio = budget / q.diag[level];
    Int ub = isqrt(rat_ceil(ratio)) + 1;
    Int lo = rat_ceil(-center) - ub, hi = rat_floor(-center) + ub;
    for (Int c = lo; c <= hi; ++c) {
        Rat off = Rat(c) + center;
        Rat used = q.diag[level] * off * off;
        if (used > budget) continue;
        x[level] = c;
        enum_recurse(q, level - 1, budget - used, x, out, limit);
    }
    x[level] = 0;
}

}  // namespace

std::vector<QuadVector> enumerate_norm_vectors(const QuadLattice& L, const Rat& t,
                                               std::size_t limit) {
    Signature sig = quad_signature(L);
    std::size_t n = L.rank();
    bool pos = sig.minus == 0, neg = sig.plus == 0;
    if (!pos && !neg) throw std::invalid_argument("enumeration requires a definite lattice");
    Matrix<Rat> g = L.gram();
    Rat target = t;
    if (neg) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = -g(i, j);
        target = -t;
    }
    std::vector<QuadVector> out;
    if (target <= 0) return out;
    Ldl q = ldl_decompose(g);
    std::vector<Int> x(n, 0);
    enum_recurse(q, n - 1, target, x, out, limit);
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_witness(const QuadLattice& a, const QuadLattice& b, const IsometryWitness& w) {
    std::size_t n = a.rank();
    if (w.matrix.rows() != n || w.matrix.cols() != n || b.rank() != n) return false;
    Matrix<Rat> t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) = Rat(w.matrix(i, j));
    if (t.transpose() * b.gram() * t != a.gram()) return false;
    Rat det = rational_det(t);
    return det == 1 || det == -1;
}

namespace {

struct IsoSearch {
    const QuadLattice& a;
    const QuadLattice& b;
    std::vector<std::vector<QuadVector>> candidates;  // per slot, in slot order
    std::vector<std::vector<RatVector>> gw;           // b.gram() * candidate, per slot
    std::vector<std::size_t> order;                   // slot -> basis index of a
    std::vector<const QuadVector*> chosen;
    std::vector<const RatVector*> chosen_gw;

    bool dfs(std::size_t slot) {
        if (slot == order.size()) return true;
        std::size_t bi = order[slot];
        const auto& cands = candidates[slot];
        for (std::size_t c = 0; c < cands.size(); ++c) {
            const QuadVector& w = cands[c];
            bool ok = true;
            for (std::size_t s = 0; s < slot && ok; ++s) {
                Rat ip = 0;
                const RatVector& gwv = gw[slot][c];
                const QuadVector& prev = *chosen[s];
                for (std::size_t k = 0; k < prev.size(); ++k)
                    if (prev[k] != 0) ip += Rat(prev[k]) * gwv[k];
                ok = (ip == a.gram()(order[s], bi));
            }
            if (!ok) continue;
            chosen.push_back(&w);
            chosen_gw.push_back(&gw[slot][c]);
            if (dfs(slot + 1)) return true;
            chosen.pop_back();
            chosen_gw.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<IsometryWitness> is_isometric_definite(const QuadLattice& a, const QuadLattice& b) {
    Signature sa = quad_signature(a), sb = quad_signature(b);
    bool adef = sa.plus == 0 || sa.minus == 0;
    bool bdef = sb.plus == 0 || sb.minus == 0;
    if (!adef || !bdef) throw std::invalid_argument("isometry search requires definite lattices");
    if (a.rank() != b.rank() || !(sa == sb)) return std::nullopt;
    if (a.determinant() != b.determinant()) return std::nullopt;

    std::size_t n = a.rank();
    IsoSearch s{a, b, {}, {}, {}, {}, {}};

    std::map<Rat, std::vector<QuadVector>> by_norm;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
        idx[i] = i;
        Rat norm = a.gram()(i, i);
        if (!by_norm.count(norm))
            by_norm[norm] = enumerate_norm_vectors(b, norm, 2000000);
        if (by_norm[norm].empty()) return std::nullopt;
    }
    // Fill tight slots first.
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        return by_norm[a.gram()(x, x)].size() < by_norm[a.gram()(y, y)].size();
    });
    s.order = idx;
    for (std::size_t slot = 0; slot < n; ++slot) {
        const auto& cands = by_norm[a.gram()(idx[slot], idx[slot])];
        s.candidates.push_back(cands);
        std::vector<RatVector> gws;
        gws.reserve(cands.size());
        for (const QuadVector& w : cands) {
            RatVector gwv(n, Rat(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (w[j] != 0) gwv[i] += b.gram()(i, j) * w[j];
            gws.push_back(std::move(gwv));
        }
        s.gw.push_back(std::move(gws));
    }
    if (!s.dfs(0)) return std::nullopt;

    IsometryWitness wit{Matrix<Int>(n, n)};
    for (std::size_t slot = 0; slot < n; ++slot) {
        std::size_t bi = s.order[slot];
        for (std::size_t r = 0; r < n; ++r) wit.matrix(r, bi) = (*s.chosen[slot])[r];
    }
    if (!verify_witness(a, b, wit)) return std::nullopt;
    return wit;
}

bool is_isometric_indef_2elem(const QuadLattice& a, const QuadLattice& b) {
    InvariantProfile pa = invariant_profile(a), pb = invariant_profile(b);
    auto check = [](const InvariantProfile& p, const char* which) {
        if (p.signature.plus == 0 || p.signature.minus == 0)
            throw std::invalid_argument(std::string("Nikulin comparison not applicable: ") + which +
                                        " lattice is definite");
        if (!p.even || !p.two_elementary || !p.nikulin_triple)
            throw std::invalid_argument(std::string("Nikulin comparison not applicable: ") + which +
                                        " lattice is not even 2-elementary");
    };
    check(pa, "first");
    check(pb, "second");
    return *pa.nikulin_triple == *pb.nikulin_triple;
}

Matrix<Rat> sigma_reflection(const QuadLattice& L, const QuadVector& r) {
    Rat rr = L.norm_of(r);
    if (rr == 0) throw std::invalid_argument("reflection in an isotropic vector");
    std::size_t n = L.rank();
    Matrix<Rat> t = Matrix<Rat>::identity(n, Rat(1), Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        // column j is sigma_r(e_j) = e_j - (2(e_j,r)/(r,r)) r
        Rat ip = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (r[k] != 0) ip += L.gram()(j, k) * r[k];
        Rat f = 2 * ip / rr;
        if (f == 0) continue;
        for (std::size_t i = 0; i < n; ++i) t(i, j) -= f * Rat(r[i]);
    }
    return t;
}

bool is_automorphism(const QuadLattice& L, const Matrix<Rat>& t) {
    std::size_t n = L.rank();
    if (t.rows() != n || t.cols() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!is_integer(t(i, j))) return false;
    return t.transpose() * L.gram() * t == L.gram();
}

bool in_dual(const QuadLattice& L, const RatVector& v) {
    for (std::size_t i = 0; i < L.rank(); ++i) {
        Rat ip = 0;
        for (std::size_t j = 0; j < L.rank(); ++j)
            if (v[j] != 0) ip += L.gram()(i, j) * v[j];
        if (!is_integer(ip)) return false;
    }
    return true;
}

RootClass classify_root_vector(const QuadLattice& L, const QuadVector& r) {
    if (!L.integral()) throw std::invalid_argument("root classification requires an integral lattice");
    Rat rr = L.norm_of(r);
    RatVector half(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) half[i] = Rat(r[i]) / 2;
    if (rr == -2) return in_dual(L, half) ? RootClass::DeltaDoublePrime : RootClass::DeltaPrime;
    if (rr == -4 && in_dual(L, half)) return RootClass::Phi124Divisor;
    return RootClass::None;
}

}  // namespace hermlat
