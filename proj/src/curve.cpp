#include "adele/curve.hpp"

#include <ostream>
#include <sstream>

#include "adele/error.hpp"

namespace adele {

CurvePtr CurveModel::projective_line(FieldPtr base) {
    if (base->degree() != 1) throw Error("curves are defined over a prime field");
    auto c = std::shared_ptr<CurveModel>(new CurveModel());
    c->kind_ = CurveKind::ProjectiveLine;
    c->base_ = std::move(base);
    c->a_ = FieldElement::zero(c->base_);
    c->b_ = FieldElement::zero(c->base_);
    return c;
}

CurvePtr CurveModel::elliptic(FieldPtr base, int64_t a, int64_t b) {
    if (base->degree() != 1) throw Error("curves are defined over a prime field");
    auto c = std::shared_ptr<CurveModel>(new CurveModel());
    c->kind_ = CurveKind::Elliptic;
    c->base_ = base;
    c->a_ = FieldElement(base, a);
    c->b_ = FieldElement(base, b);
    const FieldElement disc = FieldElement(base, -16) * (FieldElement(base, 4) * c->a_.pow(3) + FieldElement(base, 27) * c->b_.pow(2));
    if (disc.is_zero()) throw Error("singular Weierstrass equation: discriminant vanishes");
    c->cubic_ = Polynomial(base, std::vector<FieldElement>{c->b_, c->a_, FieldElement::zero(base), FieldElement::one(base)});
    return c;
}

bool CurveModel::operator==(const CurveModel& o) const {
    return kind_ == o.kind_ && same_field(base_, o.base_) && a_ == o.a_ && b_ == o.b_;
}

std::string CurveModel::describe() const {
    std::ostringstream os;
    if (is_elliptic())
        os << "y^2 = x^3 + " << a_ << "x + " << b_ << " over " << base_->describe();
    else
        os << "P^1 over " << base_->describe();
    return os.str();
}

bool same_curve(const CurvePtr& a, const CurvePtr& b) noexcept { return a && b && (a == b || *a == *b); }

// ------------------------------------------------------ FunctionFieldElement

FunctionFieldElement::FunctionFieldElement(CurvePtr curve, RationalFunction a)
    : curve_(std::move(curve)), a_(std::move(a)), b_(RationalFunction::zero(curve_->base())) {}

FunctionFieldElement::FunctionFieldElement(CurvePtr curve, RationalFunction a, RationalFunction b)
    : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)) {
    if (!curve_->is_elliptic() && !b_.is_zero()) throw Error("the projective line has no y coordinate");
}

FunctionFieldElement FunctionFieldElement::constant(const CurvePtr& c, int64_t v) {
    return constant(c, FieldElement(c->base(), v));
}

FunctionFieldElement FunctionFieldElement::constant(const CurvePtr& c, const FieldElement& v) {
    return FunctionFieldElement(c, RationalFunction::constant(v));
}

FunctionFieldElement FunctionFieldElement::x(const CurvePtr& c) {
    return FunctionFieldElement(c, RationalFunction(Polynomial::x(c->base())));
}

FunctionFieldElement FunctionFieldElement::y(const CurvePtr& c) {
    if (!c->is_elliptic()) throw Error("the projective line has no y coordinate");
    return FunctionFieldElement(c, RationalFunction::zero(c->base()), RationalFunction::one(c->base()));
}

void FunctionFieldElement::check(const FunctionFieldElement& o) const {
    if (!same_curve(curve_, o.curve_)) throw Error("function field elements from different curves");
}

FunctionFieldElement FunctionFieldElement::operator-() const { return FunctionFieldElement(curve_, -a_, -b_); }

FunctionFieldElement& FunctionFieldElement::operator+=(const FunctionFieldElement& o) {
    check(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

FunctionFieldElement& FunctionFieldElement::operator-=(const FunctionFieldElement& o) {
    check(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

FunctionFieldElement& FunctionFieldElement::operator*=(const FunctionFieldElement& o) {
    check(o);
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    const RationalFunction h(curve_->cubic());
    RationalFunction na = a_ * o.a_ + b_ * o.b_ * h;
    RationalFunction nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

FunctionFieldElement& FunctionFieldElement::operator/=(const FunctionFieldElement& o) { return *this *= o.inverse(); }

RationalFunction FunctionFieldElement::norm_down() const {
    if (b_.is_zero()) return a_ * a_;
    return a_ * a_ - b_ * b_ * RationalFunction(curve_->cubic());
}

FunctionFieldElement FunctionFieldElement::inverse() const {
    if (is_zero()) throw Error("inverse of the zero function");
    if (b_.is_zero()) return FunctionFieldElement(curve_, a_.inverse());
    const RationalFunction n = norm_down().inverse();
    return FunctionFieldElement(curve_, a_ * n, -b_ * n);
}

FunctionFieldElement FunctionFieldElement::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    FunctionFieldElement r = constant(curve_, 1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

FunctionFieldElement FunctionFieldElement::conjugate() const { return FunctionFieldElement(curve_, a_, -b_); }

FunctionFieldElement::Cleared FunctionFieldElement::cleared() const {
    const Polynomial& da = a_.den();
    const Polynomial& db = b_.den();
    Polynomial C = (da * db) / gcd(da, db);
    C = C.monic();
    return {a_.num() * (C / da), b_.num() * (C / db), C};
}

bool FunctionFieldElement::operator==(const FunctionFieldElement& o) const {
    return same_curve(curve_, o.curve_) && a_ == o.a_ && b_ == o.b_;
}

bool FunctionFieldElement::operator<(const FunctionFieldElement& o) const {
    if (a_ != o.a_) return a_ < o.a_;
    return b_ < o.b_;
}

std::string FunctionFieldElement::to_string() const {
    const char* var = curve_->is_elliptic() ? "x" : "t";
    if (b_.is_zero()) return a_.to_string(var);
    std::string s;
    if (!a_.is_zero()) s = a_.to_string(var) + " + ";
    return s + "(" + b_.to_string(var) + ")*y";
}

std::ostream& operator<<(std::ostream& os, const FunctionFieldElement& f) { return os << f.to_string(); }

}  // namespace adele
