#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermlat/rational.hpp"

namespace hermlat {

enum class OmegaKind { SqrtD, HalfPlus };

// Imaginary quadratic field F = Q(sqrt(d)), d < 0 square-free, with the fixed
// integral basis {1, omega}: omega = sqrt(d) when d = 2,3 mod 4, (1+sqrt(d))/2
// when d = 1 mod 4.
struct FieldData {
    long d = -1;
    OmegaKind omega_kind = OmegaKind::SqrtD;
    long disc = -4;

    static FieldData create(long d);  // throws on non-negative or non-square-free d

    bool operator==(const FieldData& o) const { return d == o.d; }
    bool operator!=(const FieldData& o) const { return d != o.d; }
};

// Element a + b*omega of F in exact rational omega-coordinates.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(FieldData f, Rat a, Rat b) : field_(f), a_(std::move(a)), b_(std::move(b)) {}

    // a + b*sqrt(d), independent of the omega convention (external format).
    static FieldElem from_sqrt_coords(const FieldData& f, const Rat& a, const Rat& b);
    static FieldElem from_rational(const FieldData& f, const Rat& a) { return {f, a, 0}; }

    const FieldData& field() const { return field_; }
    const Rat& omega_a() const { return a_; }
    const Rat& omega_b() const { return b_; }

    Rat sqrt_a() const;  // coordinates over {1, sqrt(d)}
    Rat sqrt_b() const;

    FieldElem conj() const;
    Rat trace() const;  // x + conj(x)
    Rat norm() const;   // x * conj(x)
    Rat real() const { return trace() / 2; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const;
    // s*x in O_F, i.e. s*a and s*b integral in the omega-basis.
    bool in_scaled_ring(const Int& s) const;
    bool in_ring() const { return in_scaled_ring(1); }

    FieldElem inverse() const;  // throws on zero

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }
    FieldElem operator-() const { return {field_, -a_, -b_}; }
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem operator*(const Rat& c) const { return {field_, a_ * c, b_ * c}; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string str() const;  // "a+b*sqrt(d)" style, for diagnostics

private:
    const FieldData& common_field(const FieldElem& o) const;

    FieldData field_{};
    Rat a_, b_;
};

struct UnitGroup {
    std::vector<FieldElem> elements;
    int order = 0;
};

FieldElem omega(const FieldData& f);   // the basis element
FieldElem sqrt_d(const FieldData& f);  // sqrt(d) as a FieldElem

UnitGroup unit_group(const FieldData& f);
// |O_F^x / {+-1}|: 1 generically, 2 for d=-1, 3 for d=-3.
int multiplicity_a(const FieldData& f);

}  // namespace hermlat
