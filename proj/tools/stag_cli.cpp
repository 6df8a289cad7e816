// Command-line front end: run verification scenarios, fuzz instances with a
// deterministic seed, and apply the truncation / decomposition operators to
// named scenario objects.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
// input errors (bad flags, unreadable files, malformed scenarios).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stag/json_io.hpp"

namespace {

using namespace stag;

#ifndef STAG_SCENARIO_DIR
#define STAG_SCENARIO_DIR ""
#endif

struct Options {
    std::string output;          // empty = stdout
    std::string format = "text";
    std::string field;           // empty = use the scenario's field
};

std::filesystem::path resolve_scenario(const std::string& name) {
    namespace fs = std::filesystem;
    if (fs::exists(name)) return name;
    for (const char* dir : {"scenarios", STAG_SCENARIO_DIR}) {
        if (std::string(dir).empty()) continue;
        fs::path p = fs::path(dir) / (name + ".json");
        if (fs::exists(p)) return p;
    }
    throw ScenarioError("cannot find scenario '" + name + "'");
}

Scenario load_scenario(const std::string& name, const Options& opt) {
    std::ifstream in(resolve_scenario(name));
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ScenarioError(std::string("scenario parse: ") + e.what());
    }
    return parse_scenario(j, opt.field);
}

void emit(const Options& opt, const std::string& text, const Json& json) {
    std::string body = opt.format == "json" ? json.dump(2) + "\n" : text;
    if (opt.output.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) throw ScenarioError("cannot open output file '" + opt.output + "'");
        out << body;
    }
}

int emit_report(const Options& opt, const Report& r) {
    emit(opt, report_to_text(r), report_to_json(r));
    return r.all_pass() ? 0 : 1;
}

std::string dims_line(const Complex& x) {
    if (x.is_zero_complex()) return "0";
    std::ostringstream os;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        os << (n == x.lo() ? "" : "  ") << "deg " << n << ": [";
        for (std::size_t e = 0; e < x.poset()->size(); ++e)
            os << (e ? " " : "") << x.term(n).dim(e);
        os << "]";
    }
    return os.str();
}

int run_verify(const std::string& scenario, const Options& opt) {
    Scenario sc = load_scenario(scenario, opt);
    return emit_report(opt, run_scenario(sc));
}

int run_fuzz(const std::string& instance, std::uint64_t seed, std::size_t count,
             const Options& opt) {
    Scenario sc = load_scenario(instance, opt);
    std::vector<Complex> sample =
        random_complexes(seed, count, sc.baric.poset(), sc.field);
    Report out;
    auto merge = [&out](const std::string& prefix, Report r) {
        for (CheckResult& c : r.checks)
            out.add(prefix + "/" + c.id, c.pass, std::move(c.detail));
    };
    merge("baric_axioms", verify_baric_axioms(sc.baric, sample));
    merge("truncation_identities", verify_truncation_identities(sc.baric, sample));
    if (sc.baric.kind() != BaricRealization::Kind::exceptional) {
        StaggerContext ctx{sc.baric, 0, false};
        merge("compat_suite", verify_compat_suite(ctx, sample));
    }
    if (sc.baric.kind() == BaricRealization::Kind::graded_weight)
        merge("mult_duality", verify_mult_duality(sc.baric, sample));
    return emit_report(opt, out);
}

int run_truncate(const std::string& scenario, const std::string& object, int w,
                 const Options& opt) {
    Scenario sc = load_scenario(scenario, opt);
    BaricTriangle t = truncation_triangle(sc.baric, sc.object(object), w);
    Json j{{"schema", 1},
           {"op", "truncate"},
           {"object", object},
           {"w", w},
           {"low", complex_to_json(t.low)},
           {"high", complex_to_json(t.high)}};
    std::ostringstream os;
    os << "object " << object << ", cut at w=" << w << "\n"
       << "low  (weights <= " << w << "): " << dims_line(t.low) << "\n"
       << "high (weights >= " << w + 1 << "): " << dims_line(t.high) << "\n";
    emit(opt, os.str(), j);
    return 0;
}

int run_stagger(const std::string& scenario, const std::string& object,
                const Options& opt) {
    Scenario sc = load_scenario(scenario, opt);
    StaggerContext ctx{sc.baric, 0, false};
    std::vector<Complex> sample;
    for (const auto& [name, x] : sc.objects) sample.push_back(x);
    Report cert = certify_compatibility(ctx, sample);
    if (!ctx.certified) return emit_report(opt, cert);
    StagTriangle t = stag_decompose(ctx, sc.object(object));
    Json j{{"schema", 1},
           {"op", "stagger"},
           {"object", object},
           {"low", complex_to_json(t.low)},
           {"high", complex_to_json(t.high)}};
    std::ostringstream os;
    os << "object " << object << ", staggered decomposition at 0\n"
       << "low  part: " << dims_line(t.low) << "\n"
       << "high part: " << dims_line(t.high) << "\n";
    emit(opt, os.str(), j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of weight truncation structures"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--output", opt.output, "write the result to a file instead of stdout");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--field", opt.field, "override the scenario field (Q or Fp:<p>)");

    std::string scenario, object, instance;
    int w = 0;
    std::uint64_t seed = 0;
    std::size_t count = 10;

    CLI::App* verify = app.add_subcommand("verify", "run a scenario's verification tasks");
    verify->fallthrough();
    verify->add_option("scenario", scenario, "scenario name or path")->required();

    CLI::App* fuzz = app.add_subcommand("fuzz", "verify randomly generated objects");
    fuzz->fallthrough();
    fuzz->add_option("--instance", instance, "scenario providing the realization")
        ->required();
    fuzz->add_option("--seed", seed, "master seed");
    fuzz->add_option("--count", count, "number of objects");

    CLI::App* trunc = app.add_subcommand("truncate", "weight truncation of an object");
    trunc->fallthrough();
    trunc->add_option("--scenario", scenario, "scenario name or path")->required();
    trunc->add_option("--object", object, "object name")->required();
    trunc->add_option("--w", w, "cut position")->required();

    CLI::App* stag = app.add_subcommand("stagger", "staggered decomposition of an object");
    stag->fallthrough();
    stag->add_option("--scenario", scenario, "scenario name or path")->required();
    stag->add_option("--object", object, "object name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit cleanly, bad usage is 2
    }

    try {
        if (verify->parsed()) return run_verify(scenario, opt);
        if (fuzz->parsed()) return run_fuzz(instance, seed, count, opt);
        if (trunc->parsed()) return run_truncate(scenario, object, w, opt);
        return run_stagger(scenario, object, opt);
    } catch (const stag::ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
