#include "adele/adelic.hpp"

#include <algorithm>

#include "adele/error.hpp"
#include "adele/linalg.hpp"
#include "adele/parallel.hpp"
#include "adele/riemann_roch.hpp"

namespace adele {

namespace {

// merges repeated entries of a formal product
MilnorSymbol collect(const MilnorSymbol& s) {
    MilnorSymbol out(s.curve());
    std::vector<MilnorSymbol::Entry> acc;
    for (const auto& e : s.entries()) {
        auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& a) { return a.f == e.f && a.g == e.g; });
        if (it == acc.end()) acc.push_back(e);
        else it->exponent += e.exponent;
    }
    for (const auto& e : acc) out.add(e.f, e.g, e.exponent);
    return out;
}

const FunctionFieldElement& as_function(const AdeleValue& a) {
    if (auto* f = std::get_if<FunctionFieldElement>(&a)) return *f;
    throw Error("adelic component is not a function");
}

const MilnorSymbol& as_symbol(const AdeleValue& a) {
    if (auto* s = std::get_if<MilnorSymbol>(&a)) return *s;
    throw Error("adelic component is not a symbol");
}

// a - b in the coefficient group
AdeleValue difference(const AdeleValue& a, const AdeleValue& b, const AdeleCoefficients& coeffs) {
    if (coeffs.is_coherent()) return as_function(a) - as_function(b);
    switch (coeffs.weight) {
        case 0: return std::get<int64_t>(a) - std::get<int64_t>(b);
        case 1: return as_function(a) / as_function(b);
        default: return collect(as_symbol(a) * as_symbol(b).inverse());
    }
}

bool identity_in(const AdeleValue& a, const AdeleCoefficients& coeffs) {
    if (coeffs.is_coherent()) return as_function(a).is_zero();
    return is_identity(a);
}

AdeleValue product(const AdeleValue& a, const AdeleValue& b) {
    if (auto* m = std::get_if<int64_t>(&a)) {
        if (auto* n = std::get_if<int64_t>(&b)) return *m * *n;
        if (auto* g = std::get_if<FunctionFieldElement>(&b)) return g->pow(static_cast<int>(*m));
        MilnorSymbol s = as_symbol(b);
        MilnorSymbol r(s.curve());
        for (const auto& e : s.entries()) r.add(e.f, e.g, e.exponent * static_cast<int>(*m));
        return r;
    }
    if (std::holds_alternative<int64_t>(b)) return product(b, a);
    const FunctionFieldElement& f = as_function(a);
    const FunctionFieldElement& g = as_function(b);
    return MilnorSymbol::single(f, g);
}

AdeleValue coherent_product(const AdeleValue& a, const AdeleValue& b) { return as_function(a) * as_function(b); }

AdeleCoefficients product_coefficients(const AdeleCoefficients& a, const AdeleCoefficients& b) {
    if (a.is_coherent() != b.is_coherent()) throw Error("incompatible coefficients in product");
    if (a.is_coherent()) return AdeleCoefficients::coherent(a.divisor + b.divisor);
    if (a.weight + b.weight > 2) throw Error("weight overflow: K_n is modelled for n <= 2");
    return AdeleCoefficients::k_weight(a.weight + b.weight);
}

}  // namespace

AdeleValue identity_value(const CurvePtr& c, const AdeleCoefficients& coeffs) {
    if (coeffs.is_coherent()) return FunctionFieldElement::constant(c, 0);
    switch (coeffs.weight) {
        case 0: return int64_t{0};
        case 1: return FunctionFieldElement::constant(c, 1);
        default: return MilnorSymbol(c);
    }
}

bool is_identity(const AdeleValue& a) {
    if (auto* n = std::get_if<int64_t>(&a)) return *n == 0;
    if (auto* f = std::get_if<FunctionFieldElement>(&a)) return f->is_constant() && !f->is_zero() && f->a().num().coeff(0).is_one();
    return collect(std::get<MilnorSymbol>(a)).entries().empty();
}

AdeleCochain AdeleCochain::zero_form(const CurvePtr& c, int degree, AdeleCoefficients coeffs) {
    AdeleCochain r;
    r.curve = c;
    r.degree = degree;
    r.generic = identity_value(c, coeffs);
    r.tail = r.generic;
    r.coefficients = std::move(coeffs);
    return r;
}

AdeleCochain AdeleCochain::global(const AdeleValue& f, AdeleCoefficients coeffs) {
    CurvePtr c;
    if (auto* g = std::get_if<FunctionFieldElement>(&f)) c = g->curve();
    else if (auto* s = std::get_if<MilnorSymbol>(&f)) c = s->curve();
    else if (coeffs.divisor.curve()) c = coeffs.divisor.curve();
    AdeleCochain r = zero_form(c, 0, std::move(coeffs));
    r.generic = f;
    return r;
}

AdeleValue AdeleCochain::component(const Place& v) const {
    auto it = exceptions.find(v);
    if (it != exceptions.end()) return it->second;
    if (degree == 0) return local_tail ? *local_tail : generic;
    return tail;
}

bool AdeleCochain::is_zero() const {
    if (degree >= 2) return true;
    auto id = [&](const AdeleValue& a) { return identity_in(a, coefficients); };
    if (degree == 0) {
        if (!id(generic)) return false;
        if (local_tail && !id(*local_tail)) return false;
    } else if (!id(tail)) {
        return false;
    }
    return std::all_of(exceptions.begin(), exceptions.end(), [&](const auto& e) { return id(e.second); });
}

AdeleCochain adelic_differential(const AdeleCochain& c) {
    if (c.degree >= 1) {
        AdeleCochain r = AdeleCochain::zero_form(c.curve, c.degree + 1, c.coefficients);
        return r;
    }
    AdeleCochain r = AdeleCochain::zero_form(c.curve, 1, c.coefficients);
    if (c.local_tail) r.tail = difference(*c.local_tail, c.generic, c.coefficients);
    for (const auto& [v, fx] : c.exceptions) {
        AdeleValue d = difference(fx, c.generic, c.coefficients);
        if (!identity_in(d, c.coefficients) || !identity_in(r.tail, c.coefficients)) r.exceptions.emplace(v, std::move(d));
    }
    return r;
}

namespace {

template <bool Parallel>
CohomologyReport cohomology_impl(const CurvePtr& c, const Divisor& D) {
    if (D.curve() && !same_curve(D.curve(), c)) throw Error("divisor lives on a different curve");
    CohomologyReport rep;
    Divisor DD = D.curve() ? D : Divisor(c);
    rep.basis = riemann_roch_space(DD);
    rep.h0 = static_cast<int>(rep.basis.size());

    const Place P0 = base_point(c);
    const uint32_t p = c->base()->characteristic();
    std::optional<int> previous;
    for (int n = 2 * (c->genus() + 1);; n *= 2) {
        const Divisor E = DD + Divisor::point(P0, n);
        const auto LE = riemann_roch_space(E);
        const int lo = -E[P0], hi = -DD[P0];
        auto parts = [&](std::size_t i) { return flatten_coefficients(expand(LE[i], P0, hi), lo, hi, 1); };
        const auto cols = Parallel ? parallel::map_indexed<std::vector<uint32_t>>(LE.size(), parts)
                                   : parallel::map_indexed_serial<std::vector<uint32_t>>(LE.size(), parts);
        linalg::Matrix m(static_cast<std::size_t>(n), LE.size(), p);
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < n; ++i) m(i, j) = cols[j][i];
        const int h1 = n - static_cast<int>(Parallel ? linalg::rank(std::move(m)) : linalg::rank_serial(std::move(m)));
        if (previous && *previous == h1) {
            rep.h1 = h1;
            rep.bound = n;
            return rep;
        }
        previous = h1;
        if (n > 4096) throw Error("principal parts did not stabilize");
    }
}

}  // namespace

CohomologyReport cohomology_dims(const CurvePtr& c, const Divisor& D) { return cohomology_impl<true>(c, D); }
CohomologyReport cohomology_dims_serial(const CurvePtr& c, const Divisor& D) { return cohomology_impl<false>(c, D); }

AdeleCochain divisor_cocycle(const Divisor& D) {
    if (!D.curve()) throw Error("divisor has no curve");
    AdeleCochain r = AdeleCochain::zero_form(D.curve(), 1, AdeleCoefficients::k_weight(1));
    for (const auto& [v, m] : D.terms()) r.exceptions.emplace(v, local_parameter(v).pow(-m));
    return r;
}

GerstenImage nu_curve(const AdeleCochain& c, const SignConventions& signs) {
    if (c.degree != 1) throw Error("nu_curve expects a one-cochain");
    if (c.coefficients.is_coherent() || c.coefficients.weight < 1)
        throw Error("nu_curve expects K_1 or K_2 coefficients");
    GerstenImage out;
    out.weight = c.coefficients.weight;
    if (out.weight == 1) {
        out.cycle = Divisor(c.curve);
        auto place_value = [&](const Place& v, const AdeleValue& a) { out.cycle.add(v, signs.nu * valuation(as_function(a), v)); };
        for (const auto& [v, a] : c.exceptions) place_value(v, a);
        for (const auto& v : candidate_places(as_function(c.tail)))
            if (!c.exceptions.count(v)) place_value(v, c.tail);
        return out;
    }
    auto place_value = [&](const Place& v, const AdeleValue& a) {
        const MilnorSymbol& s = as_symbol(a);
        if (s.entries().empty()) return;
        FieldElement t = tame_symbol(s, v).pow(-signs.nu);
        if (!t.is_one()) out.units.emplace(v, std::move(t));
    };
    for (const auto& [v, a] : c.exceptions) place_value(v, a);
    for (const auto& v : symbol_support(as_symbol(c.tail)))
        if (!c.exceptions.count(v)) place_value(v, c.tail);
    return out;
}

AdeleCochain cochain_product(const AdeleCochain& f, const AdeleCochain& g) {
    if (f.degree + g.degree > 1) throw Error("degree overflow");
    if (!same_curve(f.curve, g.curve)) throw Error("cochains on different curves");
    const AdeleCoefficients coeffs = product_coefficients(f.coefficients, g.coefficients);
    auto mul = [&](const AdeleValue& a, const AdeleValue& b) {
        return coeffs.is_coherent() ? coherent_product(a, b) : product(a, b);
    };
    AdeleCochain r = AdeleCochain::zero_form(f.curve, f.degree + g.degree, coeffs);
    std::vector<Place> places;
    for (const auto& [v, a] : f.exceptions) places.push_back(v);
    for (const auto& [v, a] : g.exceptions) places.push_back(v);
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());

    if (f.degree == 0 && g.degree == 0) {
        r.generic = mul(f.generic, g.generic);
        if (f.local_tail || g.local_tail)
            r.local_tail = mul(f.local_tail ? *f.local_tail : f.generic, g.local_tail ? *g.local_tail : g.generic);
        for (const auto& v : places) r.exceptions.emplace(v, mul(f.component(v), g.component(v)));
    } else if (f.degree == 0) {
        // (fg)_{X,x} = f_X g_{X,x}
        r.tail = mul(f.generic, g.tail);
        for (const auto& [v, a] : g.exceptions) r.exceptions.emplace(v, mul(f.generic, a));
    } else {
        // (fg)_{X,x} = f_{X,x} g_x
        r.tail = mul(f.tail, g.local_tail ? *g.local_tail : g.generic);
        for (const auto& v : places) r.exceptions.emplace(v, mul(f.component(v), g.component(v)));
    }
    return r;
}

}  // namespace adele
