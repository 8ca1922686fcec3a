#include "app.hpp"

#include <random>
#include <regex>
#include <set>

#include "adele/adelic.hpp"
#include "adele/elliptic.hpp"
#include "adele/milnor.hpp"
#include "adele/riemann_roch.hpp"
#include "adele/surface.hpp"
#include "adele/weil.hpp"
#include "checks.hpp"

namespace adele::app {

namespace {

// ----------------------------------------------------------------- schema

[[noreturn]] void schema(const std::string& path, const std::string& msg) { throw Error(ErrorCode::Schema, path + ": " + msg); }

void keys(const json& j, const std::string& path, std::initializer_list<const char*> required,
          std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) schema(path, "expected an object");
    std::set<std::string> allowed;
    for (const char* k : required) {
        allowed.insert(k);
        if (!j.contains(k)) schema(path, std::string("missing key \"") + k + "\"");
    }
    for (const char* k : optional) allowed.insert(k);
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) schema(path, "unknown key \"" + k + "\"");
}

int64_t integer(const json& j, const std::string& path) {
    static const std::regex decimal("-?[0-9]{1,18}");
    if (j.is_number_integer()) return j.get<int64_t>();
    if (j.is_string() && std::regex_match(j.get<std::string>(), decimal)) return std::stoll(j.get<std::string>());
    schema(path, "expected an integer as a decimal string");
}

int small_integer(const json& j, const std::string& path, int64_t lo, int64_t hi) {
    const int64_t v = integer(j, path);
    if (v < lo || v > hi) throw Error(ErrorCode::Domain, path + ": value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                                         std::to_string(hi) + "]");
    return static_cast<int>(v);
}

std::vector<int64_t> integers(const json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array of integers");
    std::vector<int64_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

const json& array(const json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array");
    return j;
}

json dec(int64_t v) { return std::to_string(v); }

json element(const FieldElement& a) {
    json out = json::array();
    for (uint32_t c : a.coeffs()) out.push_back(dec(c));
    return out;
}

json signs_json(const SignConventions& s) { return {{"intersection", dec(s.intersection)}, {"massey", dec(s.massey)}, {"nu", dec(s.nu)}}; }

// integers in echoed input become decimal strings
json normalized(const json& j) {
    if (j.is_number_integer()) return dec(j.get<int64_t>());
    if (j.is_array() || j.is_object()) {
        json out = j;
        for (auto& v : out) v = normalized(v);
        return out;
    }
    return j;
}

const char* verdict(bool ok) { return ok ? "match" : "mismatch"; }

// ----------------------------------------------------------------- inputs

struct Context {
    FieldPtr field;
    CurvePtr curve;
    uint64_t seed = 0;
};

FieldPtr parse_field(const json& j) {
    keys(j, "field", {"p"}, {"k", "modulus"});
    const int64_t p = integer(j["p"], "field.p");
    if (p < 2 || p > 65521 || !gfp::is_prime(static_cast<uint64_t>(p)))
        throw Error(ErrorCode::Domain, "field.p: " + std::to_string(p) + " is not a supported prime");
    const int64_t k = j.contains("k") ? integer(j["k"], "field.k") : 1;
    if (k != 1) throw Error(ErrorCode::Domain, "field.k: only prime base fields are supported");
    if (j.contains("modulus")) schema("field.modulus", "a modulus applies only when k > 1");
    return FieldSpec::prime(static_cast<uint32_t>(p));
}

CurvePtr parse_curve(const json& j, const FieldPtr& k) {
    if (!j.is_object()) schema("curve", "expected an object");
    if (!j.contains("model") || !j["model"].is_string()) schema("curve.model", "expected \"projective-line\" or \"elliptic\"");
    const std::string model = j["model"];
    if (model == "projective-line") {
        keys(j, "curve", {"model"});
        return CurveModel::projective_line(k);
    }
    if (model == "elliptic") {
        keys(j, "curve", {"model", "a", "b"});
        return CurveModel::elliptic(k, integer(j["a"], "curve.a"), integer(j["b"], "curve.b"));
    }
    schema("curve.model", "unknown model \"" + model + "\"");
}

const CurvePtr& need_curve(const Context& ctx) {
    if (!ctx.curve) schema("curve", "this task needs a curve");
    return ctx.curve;
}

Polynomial parse_poly(const json& j, const FieldPtr& k, const std::string& path) { return Polynomial(k, integers(j, path)); }

Place parse_place(const json& j, const CurvePtr& c, const std::string& path) {
    keys(j, path, {}, {"infinity", "point", "pi", "y"});
    const FieldPtr& k = c->base();
    if (j.contains("infinity")) {
        if (j.size() != 1 || !j["infinity"].is_boolean() || !j["infinity"].get<bool>()) schema(path, "\"infinity\" must be true and alone");
        return base_point(c);
    }
    if (j.contains("point")) {
        if (j.size() != 1) schema(path, "\"point\" must be alone");
        const auto xs = integers(j["point"], path + ".point");
        if (c->is_elliptic()) {
            if (xs.size() != 2) schema(path + ".point", "expected [x, y]");
            return Place::from_point(c, FieldElement(k, xs[0]), FieldElement(k, xs[1]));
        }
        if (xs.size() != 1) schema(path + ".point", "expected [t]");
        return Place::from_root(c, FieldElement(k, xs[0]));
    }
    if (!j.contains("pi")) schema(path, "expected \"infinity\", \"point\" or \"pi\"");
    const Polynomial pi = parse_poly(j["pi"], k, path + ".pi");
    const auto places = Place::over(c, pi);
    if (j.contains("y")) {
        const Polynomial y = parse_poly(j["y"], k, path + ".y") % pi;
        for (const auto& v : places)
            if (v.fibre() == Place::Fibre::Split && v.y_rep() == y) return v;
        throw Error(ErrorCode::Domain, path + ": no place over pi with that y");
    }
    if (places.size() != 1) throw Error(ErrorCode::Domain, path + ": two places lie over pi; give \"y\"");
    return places.front();
}

EcPoint parse_point(const json& j, const CurvePtr& c, const std::string& path) {
    if (j.is_string() && j.get<std::string>() == "O") return EcPoint::zero();
    const auto xs = integers(j, path);
    if (xs.size() != 2) schema(path, "expected \"O\" or [x, y]");
    EcPoint P = EcPoint::affine(FieldElement(c->base(), xs[0]), FieldElement(c->base(), xs[1]));
    if (!on_curve(c, P)) throw Error(ErrorCode::Domain, path + ": point " + P.to_string() + " is not on the curve");
    return P;
}

Divisor parse_divisor(const json& j, const CurvePtr& c, const std::string& path) {
    Divisor D(c);
    array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        keys(j[i], p, {"place", "multiplicity"});
        D.add(parse_place(j[i]["place"], c, p + ".place"), small_integer(j[i]["multiplicity"], p + ".multiplicity", -1000, 1000));
    }
    return D;
}

FunctionFieldElement parse_function(const json& j, const CurvePtr& c, const std::string& path) {
    if (c->is_elliptic())
        keys(j, path, {"num"}, {"den", "y_num", "y_den"});
    else
        keys(j, path, {"num"}, {"den"});
    const FieldPtr& k = c->base();
    auto part = [&](const char* num, const char* den) {
        const Polynomial n = parse_poly(j[num], k, path + "." + num);
        const Polynomial d = j.contains(den) ? parse_poly(j[den], k, path + "." + den) : Polynomial(k, std::vector<int64_t>{1});
        if (d.is_zero()) throw Error(ErrorCode::Domain, path + "." + den + ": zero denominator");
        return RationalFunction(n, d);
    };
    RationalFunction a = part("num", "den");
    if (j.contains("y_num")) return FunctionFieldElement(c, a, part("y_num", "y_den"));
    if (j.contains("y_den")) schema(path, "\"y_den\" without \"y_num\"");
    return FunctionFieldElement(c, a);
}

MilnorSymbol parse_symbol(const json& j, const CurvePtr& c, const std::string& path) {
    MilnorSymbol s(c);
    array(j, path);
    if (j.empty()) schema(path, "empty symbol");
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() < 2 || j[i].size() > 3) schema(p, "expected [f, g] or [f, g, exponent]");
        const int e = j[i].size() == 3 ? small_integer(j[i][2], p + "[2]", -1000, 1000) : 1;
        s.add(parse_function(j[i][0], c, p + "[0]"), parse_function(j[i][1], c, p + "[1]"), e);
    }
    return s;
}

SurfaceDivisor parse_surface_divisor(const json& j, const FieldPtr& k, const std::string& path) {
    SurfaceDivisor D;
    array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        keys(j[i], p, {"form"}, {"degree", "multiplicity"});
        std::vector<std::pair<Exponent, int64_t>> terms;
        const json& form = array(j[i]["form"], p + ".form");
        for (std::size_t t = 0; t < form.size(); ++t) {
            const std::string q = p + ".form[" + std::to_string(t) + "]";
            keys(form[t], q, {"monomial", "coefficient"});
            const auto e = integers(form[t]["monomial"], q + ".monomial");
            if (e.size() != 3) schema(q + ".monomial", "expected three exponents");
            Exponent ex{};
            for (int v = 0; v < 3; ++v) {
                if (e[v] < 0 || e[v] > 12) throw Error(ErrorCode::Domain, q + ".monomial: exponent out of range");
                ex[v] = static_cast<int>(e[v]);
            }
            terms.push_back({ex, integer(form[t]["coefficient"], q + ".coefficient")});
        }
        PlaneCurve C{MultiPoly(k, terms)};
        if (j[i].contains("degree") && integer(j[i]["degree"], p + ".degree") != C.degree())
            throw Error(ErrorCode::Domain, p + ".degree: form has degree " + std::to_string(C.degree()));
        D.add(C, j[i].contains("multiplicity") ? small_integer(j[i]["multiplicity"], p + ".multiplicity", -1000, 1000) : 1);
    }
    if (D.empty()) throw Error(ErrorCode::Domain, path + ": empty divisor");
    return D;
}

// ---------------------------------------------------------------- outputs

json place_json(const Place& v) { return {{"place", v.to_string()}, {"degree", dec(v.degree())}}; }

json divisor_json(const Divisor& D) {
    json out = json::array();
    for (const auto& [v, m] : D.terms()) {
        json t = place_json(v);
        t["multiplicity"] = dec(m);
        out.push_back(t);
    }
    return out;
}

json units_json(const PlaceUnits& units) {
    json out = json::array();
    for (const auto& [v, a] : units) {
        json t = place_json(v);
        t["value"] = element(a);
        out.push_back(t);
    }
    return out;
}

json point_json(const ProjectivePoint& x) {
    json out = json::array();
    for (const auto& c : x.coords) out.push_back(element(c));
    return out;
}

// ------------------------------------------------------------------ tasks

struct TaskOutput {
    json result = json::object();
    json oracle = json::object();
};

TaskOutput rr_table(const json& payload, const Context& ctx) {
    keys(payload, "payload", {}, {"degrees", "divisors"});
    const CurvePtr& c = need_curve(ctx);
    std::vector<Divisor> divisors;
    if (payload.contains("degrees")) {
        const auto r = integers(payload["degrees"], "payload.degrees");
        if (r.size() != 2 || r[0] > r[1]) schema("payload.degrees", "expected [min, max]");
        if (r[0] < -20 || r[1] > 20) throw Error(ErrorCode::Domain, "payload.degrees: degrees are limited to [-20, 20]");
        for (int64_t d = r[0]; d <= r[1]; ++d) {
            Divisor D(c);
            D.add(base_point(c), static_cast<int>(d));
            divisors.push_back(D);
        }
    }
    if (payload.contains("divisors")) {
        const json& list = array(payload["divisors"], "payload.divisors");
        for (std::size_t i = 0; i < list.size(); ++i)
            divisors.push_back(parse_divisor(list[i], c, "payload.divisors[" + std::to_string(i) + "]"));
    }
    if (divisors.empty()) schema("payload", "give \"degrees\" or \"divisors\"");
    TaskOutput out;
    json rows = json::array();
    bool rr = true, serre = true, basis = true;
    const Divisor K = canonical_divisor(c);
    for (const auto& D : divisors) {
        if (std::abs(D.degree()) > 20) throw Error(ErrorCode::Domain, "divisor degree is limited to [-20, 20]");
        const auto rep = cohomology_dims(c, D);
        const int dual = cohomology_dims(c, K - D).h0;
        const int dim = static_cast<int>(riemann_roch_space(D).size());
        const int expected = D.degree() + 1 - c->genus();
        rr = rr && rep.h0 - rep.h1 == expected;
        serre = serre && rep.h1 == dual;
        basis = basis && rep.h0 == dim;
        rows.push_back({{"divisor", divisor_json(D)},
                        {"degree", dec(D.degree())},
                        {"h0", dec(rep.h0)},
                        {"h1", dec(rep.h1)},
                        {"euler", dec(rep.h0 - rep.h1)},
                        {"expected", dec(expected)},
                        {"h0_dual", dec(dual)},
                        {"basis_dimension", dec(dim)}});
    }
    out.result["genus"] = dec(c->genus());
    out.result["rows"] = rows;
    out.oracle = {{"riemann-roch", verdict(rr)}, {"serre-duality", verdict(serre)}, {"basis", verdict(basis)}};
    return out;
}

FunctionFieldElement random_function(const CurvePtr& c, std::mt19937_64& rng) {
    const int64_t p = c->base()->characteristic();
    for (;;) {
        std::vector<int64_t> num(1 + rng() % 4), den(1 + rng() % 3);
        for (auto& x : num) x = static_cast<int64_t>(rng() % p);
        for (auto& x : den) x = static_cast<int64_t>(rng() % p);
        const Polynomial n(c->base(), num), d(c->base(), den);
        if (n.is_zero() || d.is_zero()) continue;
        FunctionFieldElement f(c, RationalFunction(n, d));
        if (c->is_elliptic() && rng() % 2) f += FunctionFieldElement::y(c);
        if (!f.is_zero()) return f;
    }
}

TaskOutput reciprocity(const json& payload, const Context& ctx) {
    keys(payload, "payload", {}, {"symbol", "random"});
    const CurvePtr& c = need_curve(ctx);
    if (!payload.contains("symbol") && !payload.contains("random")) schema("payload", "give \"symbol\" or \"random\"");
    TaskOutput out;
    bool ok = true;
    if (payload.contains("symbol")) {
        const MilnorSymbol s = parse_symbol(payload["symbol"], c, "payload.symbol");
        const FieldElement product = weil_reciprocity_check(s);
        out.result["boundary"] = units_json(gersten_boundary(s));
        out.result["product"] = element(product);
        ok = product.is_one();
    }
    if (payload.contains("random")) {
        const int count = small_integer(payload["random"], "payload.random", 1, 1000);
        std::mt19937_64 rng(ctx.seed);
        int ones = 0;
        for (int i = 0; i < count; ++i)
            ones += weil_reciprocity_check(MilnorSymbol::single(random_function(c, rng), random_function(c, rng))).is_one();
        out.result["random"] = {{"count", dec(count)}, {"trivial", dec(ones)}};
        ok = ok && ones == count;
    }
    out.oracle["weil-reciprocity"] = verdict(ok);
    return out;
}

TaskOutput tame(const json& payload, const Context& ctx) {
    keys(payload, "payload", {"symbol", "place"});
    const CurvePtr& c = need_curve(ctx);
    const MilnorSymbol s = parse_symbol(payload["symbol"], c, "payload.symbol");
    const Place v = parse_place(payload["place"], c, "payload.place");
    const FieldElement value = tame_symbol(s, v);
    TaskOutput out;
    out.result = place_json(v);
    out.result["value"] = element(value);
    out.result["norm"] = element(value.norm());
    out.result["boundary"] = units_json(gersten_boundary(s));
    out.oracle["weil-reciprocity"] = verdict(weil_reciprocity_check(s).is_one());
    return out;
}

TaskOutput intersect_task(const json& payload, const Context& ctx, const Options& opt) {
    keys(payload, "payload", {"D1", "D2"});
    const SurfaceDivisor D1 = parse_surface_divisor(payload["D1"], ctx.field, "payload.D1");
    const SurfaceDivisor D2 = parse_surface_divisor(payload["D2"], ctx.field, "payload.D2");
    IntersectionOptions io;
    io.ext_bound = opt.ext_bound;
    io.signs = opt.signs;
    const IntersectionReport rep = intersect(D1, D2, io);
    const FieldPtr M = FieldSpec::standard(ctx.field->characteristic(), rep.field_degree);
    std::map<ProjectivePoint, int> fulton;
    for (const auto& [C1, m1] : D1.terms())
        for (const auto& [C2, m2] : D2.terms())
            for (const auto& ip : intersection_points(C1, C2, M)) fulton[ip.point] += m1 * m2 * ip.multiplicity;
    std::erase_if(fulton, [](const auto& t) { return t.second == 0; });

    TaskOutput out;
    json cycle = json::array();
    for (const auto& [x, m] : rep.cycle)
        cycle.push_back({{"point", point_json(x)}, {"degree", dec(rep.degrees.at(x))}, {"multiplicity", dec(m)}});
    json modulus = json::array();
    for (uint32_t a : M->modulus()) modulus.push_back(dec(a));
    out.result = {{"number", dec(rep.number)},
                  {"cycle", cycle},
                  {"field_degree", dec(rep.field_degree)},
                  {"field_modulus", modulus},
                  {"auxiliary_line", rep.auxiliary_line.to_string()},
                  {"flags", dec(static_cast<int64_t>(rep.flags))},
                  {"degree_product", dec(D1.degree() * D2.degree())},
                  {"bezout", dec(rep.bezout)},
                  {"fulton_sum", dec(rep.fulton_sum)}};
    out.oracle = {{"bezout", verdict(rep.bezout == rep.number && rep.number == D1.degree() * D2.degree())},
                  {"fulton", verdict(rep.fulton_sum == rep.number && fulton == rep.cycle)}};
    return out;
}

const CurvePtr& need_elliptic(const Context& ctx) {
    const CurvePtr& c = need_curve(ctx);
    if (!c->is_elliptic()) throw Error(ErrorCode::Domain, "this task needs an elliptic curve");
    return c;
}

TaskOutput weil(const json& payload, const Context& ctx, const Options& opt) {
    keys(payload, "payload", {"l", "P", "Q"}, {"offset"});
    const CurvePtr& c = need_elliptic(ctx);
    const int l = small_integer(payload["l"], "payload.l", 1, 1000);
    const EcPoint P = parse_point(payload["P"], c, "payload.P"), Q = parse_point(payload["Q"], c, "payload.Q");
    const int offset = payload.contains("offset") ? small_integer(payload["offset"], "payload.offset", 0, 1000) : 0;
    const PairingValue idelic = weil_pairing_idelic(c, P, Q, l, offset);
    const PairingValue miller = weil_pairing_miller(c, P, Q, l);
    const MasseyOutput massey = massey_for_points(c, P, Q, l, offset, opt.signs);
    TaskOutput out;
    out.result = {{"value", element(idelic.value)}, {"order", dec(idelic.order)}, {"miller", element(miller.value)},
                  {"massey_direct_image", element(massey.direct_image)}};
    out.oracle = {{"miller", verdict(idelic.value == miller.value)}, {"massey", verdict(massey.direct_image == idelic.value.inverse())}};
    return out;
}

TaskOutput massey(const json& payload, const Context& ctx, const Options& opt) {
    keys(payload, "payload", {"l", "P", "Q"}, {"offset"});
    const CurvePtr& c = need_elliptic(ctx);
    const int l = small_integer(payload["l"], "payload.l", 1, 1000);
    const EcPoint P = parse_point(payload["P"], c, "payload.P"), Q = parse_point(payload["Q"], c, "payload.Q");
    const int offset = payload.contains("offset") ? small_integer(payload["offset"], "payload.offset", 0, 1000) : 0;
    const Representatives r = choose_representatives(c, P, Q, offset);
    const MasseyOutput m = massey_for_points(c, P, Q, l, offset, opt.signs);
    const PairingValue psi = weil_pairing_miller(c, P, Q, l);
    TaskOutput out;
    out.result = {{"alpha", divisor_json(r.D)},
                  {"beta", divisor_json(r.E)},
                  {"cocycle", units_json(m.cocycle)},
                  {"direct_image", element(m.direct_image)},
                  {"pairing", element(psi.value)}};
    out.oracle["weil-pairing"] = verdict(m.direct_image == psi.value.inverse());
    return out;
}

}  // namespace

// ------------------------------------------------------------------ public

const char* code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Domain: return "domain";
        case ErrorCode::Schema: return "schema";
        case ErrorCode::Audit: return "audit";
    }
    return "domain";
}

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::Domain: return 1;
        case ErrorCode::Schema: return 2;
        case ErrorCode::Audit: return 3;
    }
    return 1;
}

json error_report(ErrorCode code, const std::string& message) {
    return {{"version", kVersion}, {"error", {{"code", code_name(code)}, {"exit_status", dec(exit_code(code))}, {"message", message}}}};
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

json selfcheck(const Options& opt, bool& ok, bool& audit_ok) {
    checks::SuiteOptions so;
    so.seed = opt.seed.value_or(0);
    so.ext_bound = opt.ext_bound;
    so.signs = opt.signs;
    const auto results = checks::run_suite(so);
    json list = json::array();
    int passed = 0;
    ok = true;
    audit_ok = true;
    for (const auto& r : results) {
        list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        passed += r.passed;
        ok = ok && r.passed;
        if (r.name == "sign-audit") audit_ok = r.passed;
    }
    const SignAuditReport audit = adele::sign_audit(opt.signs);
    json consistent = json::array();
    for (const auto& s : audit.consistent) consistent.push_back(signs_json(s));
    json fixtures = json::object();
    for (const auto& [name, pass] : audit.fixtures) fixtures[name] = pass;
    return {{"version", kVersion},
            {"task", "selfcheck"},
            {"seed", dec(static_cast<int64_t>(so.seed))},
            {"ext_bound", dec(opt.ext_bound)},
            {"signs", signs_json(opt.signs)},
            {"checks", list},
            {"summary", {{"passed", dec(passed)}, {"failed", dec(static_cast<int64_t>(results.size()) - passed)}}},
            {"audit", {{"consistent", consistent}, {"fixtures", fixtures}}}};
}

json run(const json& config, const Options& opt, int& status) {
    status = 0;
    keys(config, "config", {"field", "task"}, {"curve", "payload", "seed"});
    if (!config["task"].is_string()) schema("task", "expected a string");
    const std::string task = config["task"];
    static const std::set<std::string> tasks{"rr-table", "reciprocity", "tame", "intersect", "weil", "massey", "selfcheck"};
    if (!tasks.count(task)) schema("task", "unknown task \"" + task + "\"");

    Context ctx;
    ctx.field = parse_field(config["field"]);
    if (config.contains("curve")) ctx.curve = parse_curve(config["curve"], ctx.field);
    ctx.seed = opt.seed ? *opt.seed : config.contains("seed") ? static_cast<uint64_t>(small_integer(config["seed"], "seed", 0, INT32_MAX)) : 0;
    Options effective = opt;
    effective.seed = ctx.seed;

    if (task == "selfcheck") {
        if (config.contains("payload")) schema("payload", "selfcheck takes no payload");
        bool ok = false, audit_ok = false;
        json report = selfcheck(effective, ok, audit_ok);
        status = ok ? 0 : audit_ok ? 1 : 3;
        return report;
    }
    if (!config.contains("payload")) schema("config", "missing key \"payload\"");
    const json& payload = config["payload"];

    TaskOutput out;
    if (task == "rr-table") out = rr_table(payload, ctx);
    if (task == "reciprocity") out = reciprocity(payload, ctx);
    if (task == "tame") out = tame(payload, ctx);
    if (task == "intersect") out = intersect_task(payload, ctx, effective);
    if (task == "weil") out = weil(payload, ctx, effective);
    if (task == "massey") out = massey(payload, ctx, effective);

    json input = {{"field", {{"p", dec(ctx.field->characteristic())}, {"k", "1"}}}, {"payload", normalized(payload)}};
    if (ctx.curve) input["curve"] = ctx.curve->describe();
    return {{"version", kVersion},
            {"task", task},
            {"seed", dec(static_cast<int64_t>(ctx.seed))},
            {"ext_bound", dec(opt.ext_bound)},
            {"signs", signs_json(opt.signs)},
            {"input", input},
            {"result", out.result},
            {"oracle", out.oracle}};
}

}  // namespace adele::app
