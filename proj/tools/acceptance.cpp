// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>

#include "app.hpp"
#include "checks.hpp"

namespace checks = adele::checks;
namespace app = adele::app;

namespace {

struct Criterion {
    int id;
    const char* title;
    double budget;
    std::function<checks::CheckResult(const checks::SuiteOptions&)> run;
};

checks::CheckResult end_to_end(const checks::SuiteOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    app::Options o;
    o.seed = opt.seed;
    bool ok1 = false, ok2 = false, audit1 = false, audit2 = false;
    const std::string first = app::render(app::selfcheck(o, ok1, audit1));
    const std::string second = app::render(app::selfcheck(o, ok2, audit2));
    checks::CheckResult r;
    r.name = "selfcheck";
    r.passed = ok1 && ok2 && audit1 && audit2 && first == second;
    r.detail = std::string("audit ") + (audit1 ? "consistent" : "failed") + ", suite " + (ok1 && ok2 ? "passed" : "failed") + ", reports " +
               (first == second ? "identical" : "differ");
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "riemann-roch through the adelic complex", 5, checks::riemann_roch},
        {2, "weil reciprocity", 10, checks::weil_reciprocity},
        {3, "intersection vs bezout and fulton", 30, checks::intersection},
        {4, "parshin point reciprocity", 10, checks::parshin},
        {5, "weil pairing and massey product", 10, checks::weil_pairing},
        {6, "chain invariance and trivial classes", 5, checks::chain_invariance},
        {7, "dlog pole bounds and residues", 5, checks::dlog_bounds},
        {8, "sign audit and deterministic selfcheck", 60,
         [](const checks::SuiteOptions& opt) {
             checks::CheckResult audit = checks::sign_audit(opt);
             checks::CheckResult e2e = end_to_end(opt);
             e2e.passed = e2e.passed && audit.passed;
             e2e.detail = audit.detail + "; " + e2e.detail;
             e2e.seconds += audit.seconds;
             return e2e;
         }},
    };
    checks::SuiteOptions opt;
    int failed = 0;
    for (const auto& c : criteria) {
        const checks::CheckResult r = c.run(opt);
        const bool in_time = r.seconds < c.budget;
        const bool pass = r.passed && in_time;
        failed += !pass;
        std::printf("[%s] %d %s: %s; %.2f s of %.0f s\n", pass ? "PASS" : "FAIL", c.id, c.title, r.detail.c_str(), r.seconds, c.budget);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
