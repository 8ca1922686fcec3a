#include "adele/rational_function.hpp"

#include <ostream>

#include "adele/error.hpp"

namespace adele {

RationalFunction::RationalFunction(const Polynomial& num)
    : num_(num), den_(Polynomial::constant(FieldElement::one(num.field()))) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw Error("zero denominator");
    const FieldPtr& f = den.field();
    if (num.is_zero()) {
        num_ = Polynomial(f);
        den_ = Polynomial::constant(FieldElement::one(f));
        return;
    }
    Polynomial g = gcd(num, den);
    Polynomial n = num / g, d = den / g;
    const FieldElement li = d.leading().inverse();
    num_ = n * li;
    den_ = d * li;
}

RationalFunction RationalFunction::constant(const FieldElement& c) { return RationalFunction(Polynomial::constant(c)); }
RationalFunction RationalFunction::zero(const FieldPtr& f) { return RationalFunction(Polynomial(f)); }
RationalFunction RationalFunction::one(const FieldPtr& f) { return constant(FieldElement::one(f)); }

int RationalFunction::degree() const {
    if (is_zero()) throw Error("degree of the zero function");
    return num_.degree() - den_.degree();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) return *this = RationalFunction(num_ + o.num_, den_);
    return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    // cross-cancel first to keep degrees small
    Polynomial g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    if (num_.is_zero() || o.num_.is_zero()) return *this = zero(field());
    return *this = RationalFunction((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error("inverse of the zero function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return RationalFunction(num_.pow(e), den_.pow(e));
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::optional<FieldElement> RationalFunction::eval(const FieldElement& at) const {
    FieldElement d = den_(at);
    if (d.is_zero()) return std::nullopt;
    return num_(at) / d;
}

bool RationalFunction::operator<(const RationalFunction& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return num_ < o.num_;
}

std::string RationalFunction::to_string(const char* var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

RationalFunction normalize_rational(const Polynomial& num, const Polynomial& den) { return RationalFunction(num, den); }

}  // namespace adele
