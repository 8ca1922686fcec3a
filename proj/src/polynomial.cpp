#include "adele/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "adele/error.hpp"

namespace adele {

Polynomial::Polynomial(FieldPtr f, std::vector<FieldElement> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto& c : c_) {
        if (!same_field(c.field(), field_)) throw Error("polynomial coefficient from a different field");
    }
    trim();
}

Polynomial::Polynomial(FieldPtr f, const std::vector<int64_t>& coeffs) : field_(std::move(f)) {
    c_.reserve(coeffs.size());
    for (int64_t v : coeffs) c_.emplace_back(field_, v);
    trim();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), std::vector<FieldElement>{c}); }

Polynomial Polynomial::x(const FieldPtr& f) { return Polynomial(f, std::vector<int64_t>{0, 1}); }

Polynomial Polynomial::linear(const FieldElement& a) {
    return Polynomial(a.field(), std::vector<FieldElement>{-a, FieldElement::one(a.field())});
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElement::zero(field_);
    return c_[i];
}

FieldElement Polynomial::leading() const {
    if (c_.empty()) return FieldElement::zero(field_);
    return c_.back();
}

Polynomial Polynomial::monic() const {
    if (c_.empty() || c_.back().is_one()) return *this;
    Polynomial r = *this;
    r *= c_.back().inverse();
    return r;
}

FieldElement Polynomial::operator()(const FieldElement& at) const {
    if (!same_field(at.field(), field_)) return eval_lifted(at);
    FieldElement acc = FieldElement::zero(field_);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= at;
        acc += c_[i];
    }
    return acc;
}

FieldElement Polynomial::eval_lifted(const FieldElement& at) const {
    const FieldPtr& f = at.field();
    FieldElement acc = FieldElement::zero(f);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= at;
        acc += c_[i].lift_to(f);
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (!field_) field_ = o.field_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElement::zero(field_));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (!field_) field_ = o.field_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElement::zero(field_));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (c_.empty() || o.c_.empty()) {
        if (!field_) field_ = o.field_;
        c_.clear();
        return *this;
    }
    if (!same_field(field_, o.field_)) throw Error("polynomial field mismatch");
    const uint32_t p = field_->characteristic();
    if (field_->degree() == 1) {
        std::vector<uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); ++i) {
            const uint64_t a = c_[i].coeffs()[0];
            if (!a) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) acc[i + j] = (acc[i + j] + a * o.c_[j].coeffs()[0]) % p;
        }
        c_.clear();
        c_.reserve(acc.size());
        for (uint64_t v : acc) c_.emplace_back(field_, static_cast<int64_t>(v));
    } else {
        std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, FieldElement::zero(field_));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        c_ = std::move(r);
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
    for (auto& a : c_) a *= c;
    trim();
    return *this;
}

Polynomial Polynomial::derivative() const {
    std::vector<FieldElement> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * FieldElement(field_, static_cast<int64_t>(i)));
    return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(FieldElement::one(field_)), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::lift_to(const FieldPtr& target) const {
    std::vector<FieldElement> c;
    c.reserve(c_.size());
    for (const auto& a : c_) c.push_back(a.lift_to(target));
    return Polynomial(target, std::move(c));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

bool Polynomial::operator<(const Polynomial& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] < o.c_[i]) return true;
        if (o.c_[i] < c_[i]) return false;
    }
    return false;
}

std::string Polynomial::to_string(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c_[i].is_one();
        if (!unit || i == 0) os << c_[i];
        if (i >= 1) os << (unit ? "" : "*") << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::vector<uint32_t> Polynomial::prime_coeffs() const {
    std::vector<uint32_t> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.prime_value());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    const FieldPtr& f = b.field();
    if (a.degree() < b.degree()) return {Polynomial(f), a};
    std::vector<FieldElement> r = a.coeffs();
    std::vector<FieldElement> q(a.degree() - b.degree() + 1, FieldElement::zero(f));
    const FieldElement li = b.leading().inverse();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i].is_zero()) continue;
        const FieldElement c = r[i] * li;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= c * bc[j];
    }
    r.resize(db > 0 ? db : 0, FieldElement::zero(f));
    return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    const FieldPtr f = a.field() ? a.field() : b.field();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(FieldElement::one(f)), s1(f);
    Polynomial t0(f), t1 = Polynomial::constant(FieldElement::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const FieldElement li = r0.leading().inverse();
    return {r0 * li, s0 * li, t0 * li};
}

Polynomial powmod(Polynomial base, uint64_t e, const Polynomial& m) {
    Polynomial r = Polynomial::constant(FieldElement::one(m.field())) % m;
    base = base % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

int multiplicity(Polynomial a, const Polynomial& f) {
    if (a.is_zero()) throw Error("multiplicity in the zero polynomial");
    int m = 0;
    for (;;) {
        auto [q, r] = divmod(a, f);
        if (!r.is_zero()) return m;
        a = std::move(q);
        ++m;
    }
}

// ------------------------------------------------------------ factorization

namespace {

using Factors = std::vector<std::pair<Polynomial, int>>;

// q-th power of x modulo m, where q is the coefficient field order
Polynomial frobenius_x(const Polynomial& xpow, const Polynomial& m) {
    const FieldPtr& f = m.field();
    // raise to p, k times (q = p^k may be large only through k)
    Polynomial r = xpow;
    for (int i = 0; i < f->degree(); ++i) r = powmod(r, f->characteristic(), m);
    return r;
}

// p-th root of a polynomial whose derivative vanishes
Polynomial pth_root(const Polynomial& a) {
    const FieldPtr& f = a.field();
    const uint32_t p = f->characteristic();
    std::vector<FieldElement> c;
    for (int i = 0; i <= a.degree(); i += static_cast<int>(p)) {
        FieldElement v = a.coeff(i);
        for (int j = 1; j < f->degree(); ++j) v = v.frobenius();  // v^(p^(k-1)) = v^(1/p)
        c.push_back(v);
    }
    return Polynomial(f, std::move(c));
}

void squarefree(const Polynomial& f, int mult, Factors& out) {
    if (f.degree() < 1) return;
    Polynomial d = f.derivative();
    const uint32_t p = f.field()->characteristic();
    if (d.is_zero()) {
        squarefree(pth_root(f), mult * static_cast<int>(p), out);
        return;
    }
    Polynomial c = gcd(f, d);
    Polynomial w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        Polynomial fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) squarefree(pth_root(c.monic()), mult * static_cast<int>(p), out);
}

Polynomial random_poly(const FieldPtr& f, int deg, std::mt19937_64& rng) {
    std::vector<FieldElement> c;
    const uint32_t p = f->characteristic();
    for (int i = 0; i <= deg; ++i) {
        gfp::Vec v(f->degree());
        for (auto& x : v) x = static_cast<uint32_t>(rng() % p);
        c.emplace_back(f, v);
    }
    return Polynomial(f, std::move(c));
}

// equal-degree splitting of a squarefree product of irreducibles of degree d
void equal_degree(const Polynomial& g, int d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const FieldPtr& f = g.field();
    const uint32_t p = f->characteristic();
    for (;;) {
        Polynomial a = random_poly(f, g.degree() - 1, rng);
        if (a.degree() < 1) continue;
        Polynomial t(f);
        if (p == 2) {
            // absolute trace map a + a^2 + ... + a^(2^(k d - 1))
            Polynomial term = a % g;
            t = term;
            for (int i = 1; i < f->degree() * d; ++i) {
                term = (term * term) % g;
                t += term;
            }
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
            Polynomial prod = a % g, conj = a % g;
            for (int i = 1; i < d; ++i) {
                for (int j = 0; j < f->degree(); ++j) conj = powmod(conj, p, g);
                prod = (prod * conj) % g;
            }
            uint64_t half = 1;
            for (int j = 0; j < f->degree(); ++j) half *= p;
            t = powmod(prod, (half - 1) / 2, g) - Polynomial::constant(FieldElement::one(f));
        }
        Polynomial h = gcd(t, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace

Factorization factor_polynomial(const Polynomial& f, uint64_t seed) {
    if (f.is_zero()) throw Error("cannot factor zero");
    Factorization result{f.leading(), {}};
    if (f.degree() == 0) return result;
    Factors sqf;
    squarefree(f.monic(), 1, sqf);
    std::mt19937_64 rng(seed);
    for (const auto& [g0, mult] : sqf) {
        Polynomial g = g0;
        const FieldPtr& fld = g.field();
        Polynomial xq = Polynomial::x(fld) % g;
        for (int d = 1; g.degree() >= 2 * d; ++d) {
            xq = frobenius_x(xq, g);
            Polynomial h = gcd(xq - Polynomial::x(fld), g);
            if (h.degree() > 0) {
                std::vector<Polynomial> parts;
                equal_degree(h, d, rng, parts);
                for (auto& q : parts) result.factors.emplace_back(std::move(q), mult);
                g = g / h;
                xq = xq % g;
            }
        }
        if (g.degree() > 0) result.factors.emplace_back(g.monic(), mult);
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge equal irreducibles that came from different squarefree layers
    Factors merged;
    for (auto& fm : result.factors) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(std::move(fm));
    }
    result.factors = std::move(merged);
    return result;
}

std::vector<FieldElement> roots(const Polynomial& f, uint64_t seed) {
    std::vector<FieldElement> out;
    if (f.degree() < 1) return out;
    // restrict to the product of linear factors first
    Polynomial g = f.monic();
    Polynomial xq = frobenius_x(Polynomial::x(g.field()) % g, g);
    Polynomial lin = gcd(xq - Polynomial::x(g.field()), g);
    if (lin.degree() < 1) return out;
    for (const auto& [q, m] : factor_polynomial(lin, seed).factors) out.push_back(-q.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial minimal_polynomial(const FieldElement& a) {
    FieldPtr base = FieldSpec::prime(a.field()->characteristic());
    std::vector<FieldElement> conj{a};
    for (FieldElement c = a.frobenius(); c != a; c = c.frobenius()) conj.push_back(c);
    Polynomial m = Polynomial::constant(FieldElement::one(a.field()));
    for (const auto& c : conj) m *= Polynomial::linear(c);
    std::vector<FieldElement> coeffs;
    for (const auto& c : m.coeffs()) coeffs.emplace_back(base, static_cast<int64_t>(c.prime_value()));
    return Polynomial(base, std::move(coeffs));
}

}  // namespace adele
