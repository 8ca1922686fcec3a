#include "adele/riemann_roch.hpp"

#include <algorithm>
#include <map>

#include "adele/error.hpp"
#include "adele/linalg.hpp"

namespace adele {

std::vector<uint32_t> flatten_coefficients(const Series& s, int lo, int hi, int residue_degree) {
    std::vector<uint32_t> out;
    out.reserve(static_cast<std::size_t>(std::max(0, hi - lo)) * residue_degree);
    for (int i = lo; i < hi; ++i) {
        const FieldElement c = s.coeff(i);
        for (int j = 0; j < residue_degree; ++j) out.push_back(j < static_cast<int>(c.coeffs().size()) ? c.coeffs()[j] : 0);
    }
    return out;
}

Divisor canonical_divisor(const CurvePtr& c) {
    if (c->is_elliptic()) return Divisor(c);
    return Divisor::point(Place::infinity(c), -2);
}

namespace {

std::vector<FunctionFieldElement> rr_projective_line(const CurvePtr& c, const Divisor& D) {
    const FieldPtr& k = c->base();
    Polynomial F = Polynomial::constant(FieldElement::one(k));
    Polynomial Q = F;
    int at_infinity = 0;
    for (const auto& [v, m] : D.terms()) {
        if (v.is_infinity()) at_infinity = m;
        else if (m > 0) F = F * v.pi().pow(m);
        else Q = Q * v.pi().pow(-m);
    }
    const int top = at_infinity + F.degree() - Q.degree();
    std::vector<FunctionFieldElement> out;
    Polynomial mono = Q;
    for (int i = 0; i <= top; ++i) {
        out.emplace_back(c, RationalFunction(mono, F));
        mono = mono * Polynomial::x(k);
    }
    return out;
}

std::vector<FunctionFieldElement> rr_elliptic(const CurvePtr& c, const Divisor& D) {
    const FieldPtr& k = c->base();
    const uint32_t p = k->characteristic();
    const Place O = Place::infinity(c);

    // F clears every allowed pole at affine places
    std::map<Polynomial, int> clear;
    for (const auto& [v, m] : D.terms()) {
        if (v.is_infinity() || m <= 0) continue;
        const int e = v.x_ramification();
        int& need = clear[v.pi()];
        need = std::max(need, (m + e - 1) / e);
    }
    Polynomial F = Polynomial::constant(FieldElement::one(k));
    for (const auto& [pi, n] : clear) F = F * pi.pow(n);

    const int M = D[O] + 2 * F.degree();
    if (M < 0) return {};

    // monomials x^i y^j with pole order 2i + 3j <= M, sorted by pole order
    struct Mono {
        int i, j;
    };
    std::vector<Mono> monos;
    for (int order = 0; order <= M; ++order) {
        if (order == 1) continue;
        if (order % 2 == 0) monos.push_back({order / 2, 0});
        else monos.push_back({(order - 3) / 2, 1});
    }

    // conditions v_P(g) >= v_P(F) - D(P)
    std::vector<Place> places;
    for (const auto& [pi, n] : clear)
        for (auto& v : Place::over(c, pi)) places.push_back(std::move(v));
    for (const auto& [v, m] : D.terms())
        if (!v.is_infinity() && m < 0) places.push_back(v);
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());

    std::vector<std::vector<uint32_t>> rows_by_mono(monos.size());
    for (const Place& v : places) {
        const int e = v.x_ramification();
        const int vF = e * multiplicity(F, v.pi());
        const int need = vF - D[v];
        if (need <= 0) continue;
        LocalCoordinates lc = local_coordinates(v, need + 2);
        const int deg = lc.field->degree();
        Series xs = lc.x.truncated(need), ys = lc.y.truncated(need);
        std::vector<Series> xpow{Series::constant(FieldElement::one(lc.field), need)};
        for (std::size_t idx = 0; idx < monos.size(); ++idx) {
            while (static_cast<int>(xpow.size()) <= monos[idx].i) xpow.push_back((xpow.back() * xs).truncated(need));
            const Series& xi = xpow[monos[idx].i];
            Series term = monos[idx].j ? (xi * ys).truncated(need) : xi;
            auto flat = flatten_coefficients(term, 0, need, deg);
            rows_by_mono[idx].insert(rows_by_mono[idx].end(), flat.begin(), flat.end());
        }
    }
    const std::size_t nconds = rows_by_mono.empty() ? 0 : rows_by_mono[0].size();
    linalg::Matrix m(nconds, monos.size(), p);
    for (std::size_t col = 0; col < monos.size(); ++col)
        for (std::size_t r = 0; r < nconds; ++r) m(r, col) = rows_by_mono[col][r];
    auto ker = linalg::kernel(std::move(m));

    const RationalFunction invF = RationalFunction(F).inverse();
    std::vector<FunctionFieldElement> out;
    for (const auto& vec : ker) {
        Polynomial A(k, std::vector<int64_t>{}), B(k, std::vector<int64_t>{});
        for (std::size_t col = 0; col < monos.size(); ++col) {
            if (!vec[col]) continue;
            Polynomial term = Polynomial::constant(FieldElement(k, vec[col])) * Polynomial::x(k).pow(monos[col].i);
            if (monos[col].j) B = B + term;
            else A = A + term;
        }
        out.emplace_back(c, RationalFunction(A) * invF, RationalFunction(B) * invF);
    }
    return out;
}

}  // namespace

std::vector<FunctionFieldElement> riemann_roch_space(const Divisor& D) {
    if (!D.curve()) throw Error("divisor has no curve");
    return D.curve()->is_elliptic() ? rr_elliptic(D.curve(), D) : rr_projective_line(D.curve(), D);
}

}  // namespace adele
