#include "adele/field.hpp"

#include <algorithm>
#include <tuple>
#include <ostream>
#include <sstream>

#include "adele/error.hpp"

namespace adele {

namespace gfp {

uint32_t pow(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t inv(uint32_t a, uint32_t p) {
    a %= p;
    if (a == 0) throw Error("division by zero in GF(" + std::to_string(p) + ")");
    // extended Euclid on small integers
    int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr) {
        int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec mul(const Vec& a, const Vec& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + uint64_t(a[i]) * b[j]) % p;
    }
    Vec r(acc.begin(), acc.end());
    trim(r);
    return r;
}

Vec mod(Vec a, const Vec& m, uint32_t p) {
    trim(a);
    if (m.empty()) throw Error("polynomial reduction by zero");
    const size_t dm = m.size() - 1;
    const uint32_t lc_inv = inv(m.back(), p);
    while (a.size() > dm) {
        const uint64_t c = uint64_t(a.back()) * lc_inv % p;
        const size_t shift = a.size() - 1 - dm;
        if (c) {
            for (size_t i = 0; i <= dm; ++i) {
                a[shift + i] = static_cast<uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Vec mulmod(const Vec& a, const Vec& b, const Vec& m, uint32_t p) { return mod(mul(a, b, p), m, p); }

Vec powmod(Vec base, uint64_t e, const Vec& m, uint32_t p) {
    Vec r = mod(Vec{1}, m, p);
    base = mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Vec gcd(Vec a, Vec b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Vec r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const uint64_t li = inv(a.back(), p);
        for (auto& c : a) c = static_cast<uint32_t>(c * li % p);
    }
    return a;
}

namespace {

Vec sub(Vec a, const Vec& b, uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

// x^(p^j) mod f, iterated
Vec frobenius_power_of_x(const Vec& f, uint32_t p, int j) {
    Vec x = mod(Vec{0, 1}, f, p);
    for (int i = 0; i < j; ++i) x = powmod(x, p, f, p);
    return x;
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_irreducible(const Vec& f_in, uint32_t p) {
    Vec f = f_in;
    trim(f);
    if (f.size() < 2) return false;
    const int n = static_cast<int>(f.size()) - 1;
    if (n == 1) return true;
    // Rabin's test
    const Vec x{0, 1};
    if (sub(frobenius_power_of_x(f, p, n), mod(x, f, p), p).size() != 0) return false;
    for (int r : prime_divisors(n)) {
        Vec h = sub(frobenius_power_of_x(f, p, n / r), x, p);
        if (gcd(h, f, p).size() != 1) return false;
    }
    return true;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace gfp

// ---------------------------------------------------------------- FieldSpec

FieldSpec::FieldSpec(uint32_t p, gfp::Vec modulus) : p_(p), modulus_(std::move(modulus)) {
    k_ = modulus_.empty() ? 1 : static_cast<int>(modulus_.size()) - 1;
    unsigned __int128 ord = 1;
    order_ = 1;
    for (int i = 0; i < k_; ++i) {
        ord *= p_;
        if (ord > UINT64_MAX) {
            order_ = 0;
            return;
        }
    }
    order_ = static_cast<uint64_t>(ord);
}

FieldPtr FieldSpec::prime(uint32_t p) {
    if (!gfp::is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    return FieldPtr(new FieldSpec(p, {}));
}

FieldPtr FieldSpec::extension(uint32_t p, gfp::Vec modulus) {
    if (!gfp::is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    for (auto& c : modulus) c %= p;
    gfp::trim(modulus);
    if (modulus.size() < 2) throw Error("extension modulus must have degree >= 1");
    if (modulus.back() != 1) throw Error("extension modulus must be monic");
    if (modulus.size() == 2) return prime(p);
    if (!gfp::is_irreducible(modulus, p)) throw Error("extension modulus is reducible over GF(" + std::to_string(p) + ")");
    return FieldPtr(new FieldSpec(p, std::move(modulus)));
}

FieldPtr FieldSpec::standard(uint32_t p, int k) {
    if (k < 1) throw Error("extension degree must be >= 1");
    if (k == 1) return prime(p);
    if (!gfp::is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    gfp::Vec f(k + 1, 0);
    f[k] = 1;
    for (;;) {
        if (f[0] != 0 && gfp::is_irreducible(f, p)) return FieldPtr(new FieldSpec(p, f));
        int i = 0;
        while (i < k && ++f[i] == p) f[i++] = 0;
        if (i == k) throw Error("no irreducible polynomial found");  // unreachable
    }
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (k_ > 1) {
        os << "^" << k_ << ") mod [";
        for (size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
        os << "]";
    } else {
        os << ")";
    }
    return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a && b && (a == b || *a == *b);
}

// ------------------------------------------------------------- FieldElement

namespace {

void check_same(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.field(), b.field())) {
        throw Error("field mismatch: " + (a.field() ? a.field()->describe() : std::string("<none>")) + " vs " +
                    (b.field() ? b.field()->describe() : std::string("<none>")));
    }
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, int64_t value) : field_(std::move(field)) {
    if (!field_) throw Error("field element without a field");
    const int64_t p = field_->characteristic();
    c_.assign(field_->degree(), 0);
    c_[0] = static_cast<uint32_t>(((value % p) + p) % p);
}

FieldElement::FieldElement(FieldPtr field, gfp::Vec coeffs) : field_(std::move(field)) {
    if (!field_) throw Error("field element without a field");
    const uint32_t p = field_->characteristic();
    for (auto& c : coeffs) c %= p;
    if (field_->degree() > 1) coeffs = gfp::mod(std::move(coeffs), field_->modulus(), p);
    coeffs.resize(field_->degree(), 0);
    c_ = std::move(coeffs);
}

FieldElement FieldElement::generator(const FieldPtr& f) {
    if (f->degree() == 1) return zero(f);
    return FieldElement(f, gfp::Vec{0, 1});
}

bool FieldElement::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](uint32_t c) { return c == 0; });
}

bool FieldElement::is_one() const noexcept {
    return !c_.empty() && c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](uint32_t c) { return c == 0; });
}

bool FieldElement::is_prime_field_element() const noexcept {
    return std::all_of(c_.begin() + (c_.empty() ? 0 : 1), c_.end(), [](uint32_t c) { return c == 0; });
}

uint32_t FieldElement::prime_value() const {
    if (!is_prime_field_element()) throw Error("element " + to_string() + " is not in the prime field");
    return c_[0];
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    const uint32_t p = field_->characteristic();
    for (auto& c : r.c_) c = c ? p - c : 0;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same(*this, o);
    const uint32_t p = field_->characteristic();
    for (size_t i = 0; i < c_.size(); ++i) {
        const uint32_t s = c_[i] + o.c_[i];
        c_[i] = s >= p ? s - p : s;
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same(*this, o);
    const uint32_t p = field_->characteristic();
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same(*this, o);
    const uint32_t p = field_->characteristic();
    if (field_->degree() == 1) {
        c_[0] = static_cast<uint32_t>(uint64_t(c_[0]) * o.c_[0] % p);
        return *this;
    }
    gfp::Vec r = gfp::mulmod(c_, o.c_, field_->modulus(), p);
    r.resize(field_->degree(), 0);
    c_ = std::move(r);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    const uint32_t p = field_->characteristic();
    if (field_->degree() == 1) return FieldElement(field_, gfp::Vec{gfp::inv(c_[0], p)});
    // extended Euclid: s*a + t*m = g with g a nonzero constant
    gfp::Vec r0 = field_->modulus(), r1 = c_;
    gfp::trim(r1);
    gfp::Vec s0{}, s1{1};
    auto sub_mul = [p](const gfp::Vec& a, const gfp::Vec& q, const gfp::Vec& b) {
        gfp::Vec qb = gfp::mul(q, b, p);
        gfp::Vec r = a;
        if (r.size() < qb.size()) r.resize(qb.size(), 0);
        for (size_t i = 0; i < qb.size(); ++i) r[i] = (r[i] + p - qb[i]) % p;
        gfp::trim(r);
        return r;
    };
    while (r1.size() > 1) {
        // quotient of r0 by r1
        gfp::Vec a = r0, q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
        const uint64_t li = gfp::inv(r1.back(), p);
        while (a.size() >= r1.size() && !a.empty()) {
            const size_t shift = a.size() - r1.size();
            const uint64_t c = a.back() * li % p;
            q[shift] = static_cast<uint32_t>(c);
            for (size_t i = 0; i < r1.size(); ++i) a[shift + i] = static_cast<uint32_t>((a[shift + i] + (p - c) * r1[i]) % p);
            a.pop_back();
            gfp::trim(a);
        }
        gfp::trim(q);
        gfp::Vec r2 = std::move(a);
        gfp::Vec s2 = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    const uint64_t ci = gfp::inv(r1[0], p);
    for (auto& c : s1) c = static_cast<uint32_t>(c * ci % p);
    return FieldElement(field_, s1);
}

FieldElement FieldElement::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement r = one(field_), b = *this;
    uint64_t u = static_cast<uint64_t>(e);
    while (u) {
        if (u & 1) r *= b;
        b *= b;
        u >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius() const { return pow(field_->characteristic()); }

FieldElement FieldElement::norm() const {
    FieldElement prod = *this, conj = *this;
    for (int i = 1; i < field_->degree(); ++i) {
        conj = conj.frobenius();
        prod *= conj;
    }
    return FieldElement(FieldSpec::prime(field_->characteristic()), static_cast<int64_t>(prod.prime_value()));
}

FieldElement FieldElement::trace() const {
    FieldElement sum = *this, conj = *this;
    for (int i = 1; i < field_->degree(); ++i) {
        conj = conj.frobenius();
        sum += conj;
    }
    return FieldElement(FieldSpec::prime(field_->characteristic()), static_cast<int64_t>(sum.prime_value()));
}

FieldElement FieldElement::lift_to(const FieldPtr& target) const {
    if (target->characteristic() != field_->characteristic()) throw Error("cannot move element between characteristics");
    if (same_field(field_, target)) return *this;
    return FieldElement(target, static_cast<int64_t>(prime_value()));
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(*this, o);
    return c_ == o.c_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    const auto& c = a.coeffs();
    if (c.size() == 1) return os << c[0];
    os << "[";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    return os << "]";
}

FieldElement norm_to_prime_field(const FieldElement& a) { return a.norm(); }

std::vector<FieldElement> enumerate_field(const FieldPtr& f, uint64_t limit) {
    if (f->order() == 0 || f->order() > limit) throw Error("field " + f->describe() + " too large to enumerate");
    std::vector<FieldElement> out;
    out.reserve(f->order());
    gfp::Vec digits(f->degree(), 0);
    const uint32_t p = f->characteristic();
    for (uint64_t n = 0; n < f->order(); ++n) {
        out.emplace_back(f, digits);
        int i = 0;
        while (i < f->degree() && ++digits[i] == p) digits[i++] = 0;
    }
    return out;
}

}  // namespace adele
