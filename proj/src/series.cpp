#include "adele/series.hpp"

#include <algorithm>

#include "adele/error.hpp"

namespace adele {

Series::Series(FieldPtr f, int offset, std::vector<FieldElement> coeffs)
    : field_(std::move(f)), offset_(offset), c_(std::move(coeffs)) {}

Series Series::constant(const FieldElement& c, int precision) {
    if (precision <= 0) return Series(c.field(), precision, {});
    std::vector<FieldElement> v(precision, FieldElement::zero(c.field()));
    v[0] = c;
    return Series(c.field(), 0, std::move(v));
}

Series Series::shifted_variable(const FieldElement& c0, int precision) {
    Series s = constant(c0, precision);
    if (precision > 1) s.c_[1] = FieldElement::one(c0.field());
    return s;
}

FieldElement Series::coeff(int i) const {
    if (i >= precision()) throw Error("series coefficient beyond precision");
    if (i < offset_) return FieldElement::zero(field_);
    return c_[i - offset_];
}

Series Series::normalized() const {
    size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    if (k == 0) return *this;
    return Series(field_, offset_ + static_cast<int>(k), std::vector<FieldElement>(c_.begin() + k, c_.end()));
}

int Series::valuation() const {
    Series n = normalized();
    if (n.c_.empty()) throw Error("series vanishes to precision " + std::to_string(precision()));
    return n.offset_;
}

FieldElement Series::leading() const {
    Series n = normalized();
    if (n.c_.empty()) throw Error("series vanishes to precision " + std::to_string(precision()));
    return n.c_[0];
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Series& Series::operator+=(const Series& o) {
    if (!field_) return *this = o;
    const int lo = std::min(offset_, o.offset_);
    const int hi = std::min(precision(), o.precision());
    std::vector<FieldElement> r;
    r.reserve(std::max(0, hi - lo));
    for (int i = lo; i < hi; ++i) {
        FieldElement v = FieldElement::zero(field_);
        if (i >= offset_) v += c_[i - offset_];
        if (i >= o.offset_) v += o.c_[i - o.offset_];
        r.push_back(std::move(v));
    }
    offset_ = std::min(lo, hi);
    c_ = std::move(r);
    return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series& Series::operator*=(const Series& o) {
    Series a = normalized(), b = o.normalized();
    const int off = a.offset_ + b.offset_;
    // relative precision of the product is the smaller relative precision,
    // except when one factor vanishes to its precision
    if (a.c_.empty() || b.c_.empty()) {
        const int prec = std::min(a.c_.empty() ? a.offset_ + b.offset_ : a.offset_ + b.precision(),
                                  b.c_.empty() ? b.offset_ + a.offset_ : b.offset_ + a.precision());
        *this = Series(field_ ? field_ : o.field_, prec, {});
        return *this;
    }
    const size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<FieldElement> r(n, FieldElement::zero(a.field_));
    for (size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; i + j < n; ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    *this = Series(a.field_, off, std::move(r));
    return *this;
}

Series Series::inverse() const {
    Series a = normalized();
    if (a.c_.empty()) throw Error("inverse of a series vanishing to its precision");
    const size_t n = a.c_.size();
    const FieldElement li = a.c_[0].inverse();
    std::vector<FieldElement> r(n, FieldElement::zero(field_));
    r[0] = li;
    for (size_t k = 1; k < n; ++k) {
        FieldElement acc = FieldElement::zero(field_);
        for (size_t j = 1; j <= k; ++j) acc += a.c_[j] * r[k - j];
        r[k] = -acc * li;
    }
    return Series(field_, -a.offset_, std::move(r));
}

Series Series::truncated(int prec) const {
    if (prec >= precision()) return *this;
    if (prec <= offset_) return Series(field_, prec, {});
    return Series(field_, offset_, std::vector<FieldElement>(c_.begin(), c_.begin() + (prec - offset_)));
}

Series compose(const Polynomial& p, const Series& x) {
    const FieldPtr& f = x.field();
    // Horner; precision is governed by x
    Series acc = Series::constant(FieldElement::zero(f), x.precision() > 0 ? x.precision() : 1);
    if (p.is_zero()) return acc;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        FieldElement c = p.coeff(i).lift_to(f);
        if (first) {
            acc = Series::constant(c, std::max(1, static_cast<int>(x.coeffs().size())));
            first = false;
            continue;
        }
        acc *= x;
        acc += Series::constant(c, acc.precision());
    }
    return acc;
}

Series compose(const RationalFunction& r, const Series& x) {
    return compose(r.num(), x) * compose(r.den(), x).inverse();
}

}  // namespace adele
