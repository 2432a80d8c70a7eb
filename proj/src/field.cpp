#include "hermlat/field.hpp"

#include <stdexcept>

namespace hermlat {

namespace {

bool square_free(long n) {
    if (n <= 0) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

long mod4(long d) {
    long m = d % 4;
    return m < 0 ? m + 4 : m;
}

}  // namespace

FieldData FieldData::create(long d) {
    if (d >= 0) throw std::invalid_argument("field discriminant parameter must be negative");
    if (!square_free(-d)) throw std::invalid_argument("d must be square-free");
    FieldData f;
    f.d = d;
    if (mod4(d) == 1) {
        f.omega_kind = OmegaKind::HalfPlus;
        f.disc = d;
    } else {
        f.omega_kind = OmegaKind::SqrtD;
        f.disc = 4 * d;
    }
    return f;
}

FieldElem FieldElem::from_sqrt_coords(const FieldData& f, const Rat& a, const Rat& b) {
    if (f.omega_kind == OmegaKind::SqrtD) return {f, a, b};
    // a + b*sqrt(d) = (a - b) + 2b * (1+sqrt(d))/2
    return {f, a - b, 2 * b};
}

Rat FieldElem::sqrt_a() const {
    if (field_.omega_kind == OmegaKind::SqrtD) return a_;
    return a_ + b_ / 2;
}

Rat FieldElem::sqrt_b() const {
    if (field_.omega_kind == OmegaKind::SqrtD) return b_;
    return b_ / 2;
}

FieldElem FieldElem::conj() const {
    if (field_.omega_kind == OmegaKind::SqrtD) return {field_, a_, -b_};
    // omega-bar = 1 - omega
    return {field_, a_ + b_, -b_};
}

Rat FieldElem::trace() const {
    FieldElem t = *this + conj();
    return t.a_;
}

Rat FieldElem::norm() const {
    FieldElem n = *this * conj();
    return n.a_;
}

bool FieldElem::is_rational() const { return b_ == 0; }

bool FieldElem::in_scaled_ring(const Int& s) const {
    if (s < 1) throw std::invalid_argument("ring scale must be positive");
    return is_integer(Rat(s) * a_) && is_integer(Rat(s) * b_);
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero field element");
    Rat n = norm();
    FieldElem c = conj();
    return {field_, c.a_ / n, c.b_ / n};
}

// Rational elements (b = 0) are field-agnostic: they adopt the other
// operand's field. This keeps generic containers (default-constructed zeros)
// usable across fields while still rejecting genuinely mixed arithmetic.
const FieldData& FieldElem::common_field(const FieldElem& o) const {
    if (field_ == o.field_) return field_;
    if (b_ == 0) return o.field_;
    if (o.b_ == 0) return field_;
    throw std::invalid_argument("mixed-field arithmetic");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    return {common_field(o), a_ + o.a_, b_ + o.b_};
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    return {common_field(o), a_ - o.a_, b_ - o.b_};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    const FieldData& field_out = common_field(o);
    // omega^2 = d for omega = sqrt(d); omega^2 = omega + (d-1)/4 for the half basis.
    Rat cross = b_ * o.b_;
    Rat a = a_ * o.a_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    if (field_out.omega_kind == OmegaKind::SqrtD) {
        a += cross * field_out.d;
    } else {
        b += cross;
        a += cross * Rat(field_out.d - 1) / 4;
    }
    return {field_out, a, b};
}

bool FieldElem::operator==(const FieldElem& o) const {
    return a_ == o.a_ && b_ == o.b_ && (field_ == o.field_ || b_ == 0);
}

std::string FieldElem::str() const {
    Rat a = sqrt_a(), b = sqrt_b();
    if (b == 0) return rat_str(a);
    std::string s = rat_str(a);
    s += (b > 0 ? "+" : "-");
    Rat ab = abs(b);
    if (ab != 1) s += rat_str(ab) + "*";
    s += "sqrt(" + std::to_string(field_.d) + ")";
    return s;
}

FieldElem omega(const FieldData& f) { return {f, 0, 1}; }

FieldElem sqrt_d(const FieldData& f) { return FieldElem::from_sqrt_coords(f, 0, 1); }

UnitGroup unit_group(const FieldData& f) {
    UnitGroup g;
    FieldElem one = FieldElem::from_rational(f, 1);
    g.elements = {one, -one};
    if (f.d == -1) {
        FieldElem i = omega(f);
        g.elements.push_back(i);
        g.elements.push_back(-i);
    } else if (f.d == -3) {
        // omega = (1+sqrt(-3))/2 is a primitive sixth root; omega^2 = omega - 1.
        FieldElem w = omega(f);
        FieldElem w2 = w * w;
        g.elements.insert(g.elements.end(), {w, -w, w2, -w2});
    }
    g.order = static_cast<int>(g.elements.size());
    return g;
}

int multiplicity_a(const FieldData& f) {
    if (f.d == -1) return 2;
    if (f.d == -3) return 3;
    return 1;
}

}  // namespace hermlat
