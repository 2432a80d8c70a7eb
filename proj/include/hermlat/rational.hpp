#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hermlat {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p/q" etc. Rejects zero denominators and malformed input.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_t tmp;
    mpq_init(tmp);
    if (mpq_set_str(tmp, s.c_str(), 10) != 0) {
        mpq_clear(tmp);
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(tmp)) == 0) {
        mpq_clear(tmp);
        throw std::invalid_argument("zero denominator: '" + s + "'");
    }
    Rat r(tmp);
    mpq_clear(tmp);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

}  // namespace hermlat
