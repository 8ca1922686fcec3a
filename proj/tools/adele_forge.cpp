#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "app.hpp"

using adele::Error;
using adele::ErrorCode;
namespace app = adele::app;

namespace {

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 1;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Adelic computations on curves and surfaces over finite fields"};
    cli.require_subcommand(1);
    uint64_t seed = 0;
    int ext_bound = 6;
    std::string out_path;
    std::string perturb;
    auto* seed_opt = cli.add_option("--seed", seed, "seed for randomized steps")->check(CLI::NonNegativeNumber);
    cli.add_option("--ext-bound", ext_bound, "largest extension degree k allowed for GF(p^k)")->check(CLI::Range(1, 12));
    cli.add_option("--out", out_path, "write the report here instead of stdout");
    cli.add_option("--perturb-sign", perturb, "flip one sign constant (testing the audit)")
        ->check(CLI::IsMember({"nu", "intersection", "massey"}))
        ->group("");

    auto* run = cli.add_subcommand("run", "run a configuration document");
    std::string config_path;
    run->add_option("config", config_path, "configuration JSON")->required();

    auto* self = cli.add_subcommand("selfcheck", "run the oracle suite");
    bool as_json = false;
    self->add_flag("--json", as_json, "print the JSON report");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? 0 : 2;
    }

    app::Options opt;
    if (seed_opt->count()) opt.seed = seed;
    opt.ext_bound = ext_bound;
    if (perturb == "nu") opt.signs.nu = -opt.signs.nu;
    if (perturb == "intersection") opt.signs.intersection = -opt.signs.intersection;
    if (perturb == "massey") opt.signs.massey = -opt.signs.massey;

    if (*self) {
        bool ok = false, audit_ok = false;
        const auto report = app::selfcheck(opt, ok, audit_ok);
        std::string text;
        if (as_json) {
            text = app::render(report);
        } else {
            std::ostringstream os;
            for (const auto& c : report["checks"])
                os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << " (" << c["detail"].get<std::string>()
                   << ")\n";
            os << report["summary"]["passed"].get<std::string>() << " passed, " << report["summary"]["failed"].get<std::string>()
               << " failed\n";
            text = os.str();
        }
        if (emit(text, out_path)) return 1;
        return ok ? 0 : audit_ok ? 1 : 3;
    }

    try {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) throw Error(ErrorCode::Schema, "cannot read " + config_path);
        app::json config;
        try {
            config = app::json::parse(in);
        } catch (const app::json::parse_error& e) {
            throw Error(ErrorCode::Schema, std::string("malformed JSON: ") + e.what());
        }
        int status = 0;
        const auto report = app::run(config, opt, status);
        if (emit(app::render(report), out_path)) return 1;
        return status;
    } catch (const Error& e) {
        std::cerr << "error (" << app::code_name(e.code()) << "): " << e.what() << "\n";
        emit(app::render(app::error_report(e.code(), e.what())), out_path);
        return app::exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error (domain): " << e.what() << "\n";
        emit(app::render(app::error_report(ErrorCode::Domain, e.what())), out_path);
        return 1;
    }
}
