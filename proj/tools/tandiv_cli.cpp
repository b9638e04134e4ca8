// Command-line front end. Talks to the library exclusively through the C API
// in tandiv/tandiv.h; configs are JSON files so every output carries its own
// provenance. Exit codes: 0 success, 1 bound violation, 2 usage/config error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tandiv/tandiv.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliError{code, msg}; }

void check(tandiv_status st, const std::string& what) {
    if (st != TANDIV_OK) die(kExitUsage, what + ": " + tandiv_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(kExitUsage, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// temp file + rename so readers never observe a partial write
void write_file_atomic(const std::string& path, const std::string& content) {
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) die(kExitUsage, "cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    tandiv_string_free(s);
    return out;
}

using KernelPtr = std::unique_ptr<tandiv_kernel, decltype(&tandiv_kernel_free)>;
using CurvePtr = std::unique_ptr<tandiv_curve, decltype(&tandiv_curve_free)>;
using SchedulePtr = std::unique_ptr<tandiv_schedule, decltype(&tandiv_schedule_free)>;
using SetsPtr = std::unique_ptr<tandiv_sets, decltype(&tandiv_sets_free)>;
using SetPtr = std::unique_ptr<tandiv_set, decltype(&tandiv_set_free)>;
using ProductPtr = std::unique_ptr<tandiv_product, decltype(&tandiv_product_free)>;

struct Config {
    json raw;
    KernelPtr kernel{nullptr, tandiv_kernel_free};
    CurvePtr curve{nullptr, tandiv_curve_free};
};

Config load_config(const std::string& path) {
    Config cfg;
    cfg.raw = json::parse(read_file(path), nullptr, false);
    if (cfg.raw.is_discarded()) die(kExitUsage, "config " + path + " is not valid JSON");
    if (cfg.raw.value("depth", 1) < 1) die(kExitUsage, "config: depth must be >= 1");
    if (cfg.raw.value("samples", 0) < 0) die(kExitUsage, "config: samples must be >= 0");
    std::string kjson = cfg.raw.value("kernel", json{{"family", "poisson"}}).dump();
    std::string cjson =
        cfg.raw.value("curve", json{{"family", "power"}, {"c", 1.0}, {"alpha", 0.5}}).dump();
    tandiv_kernel* k = nullptr;
    check(tandiv_kernel_create(kjson.c_str(), &k), "kernel");
    cfg.kernel.reset(k);
    tandiv_curve* c = nullptr;
    check(tandiv_curve_create(cjson.c_str(), &c), "curve");
    cfg.curve.reset(c);
    return cfg;
}

std::string schedule_options(const Config& cfg, const std::string& variant_flag) {
    json opts;
    std::string variant =
        variant_flag.empty() ? cfg.raw.value("variant", "theorem1") : variant_flag;
    opts["variant"] = variant;
    opts["depth"] = cfg.raw.value("depth", variant == "theorem2" ? 5 : 4);
    opts["beta_target"] = cfg.raw.value("beta_target", variant == "theorem2" ? 1.0 : 0.98);
    return opts.dump();
}

SchedulePtr build_or_load_schedule(const Config& cfg, const std::string& schedule_path,
                                   const std::string& variant_flag) {
    tandiv_schedule* s = nullptr;
    if (!schedule_path.empty()) {
        check(tandiv_schedule_from_json(read_file(schedule_path).c_str(), &s), "schedule file");
    } else {
        check(tandiv_schedule_build(cfg.kernel.get(), cfg.curve.get(),
                                    schedule_options(cfg, variant_flag).c_str(), &s),
              "schedule build");
    }
    return SchedulePtr(s, tandiv_schedule_free);
}

std::string sweep_config(const Config& cfg) {
    json j;
    j["samples"] = cfg.raw.value("samples", 100);
    j["seed"] = cfg.raw.value("seed", 20250808);
    j["k_level"] = cfg.raw.value("k_level", 0);
    j["phi_tol"] = cfg.raw.value("phi_tol", 1e-8);
    return j.dump();
}

int cmd_schedule(const std::string& config_path, const std::string& out_path,
                 const std::string& variant_flag, bool validate) {
    Config cfg = load_config(config_path);
    SchedulePtr s = build_or_load_schedule(cfg, "", variant_flag);
    char* text = nullptr;
    check(tandiv_schedule_to_json(s.get(), &text), "schedule json");
    std::string body = take_string(text);
    if (!out_path.empty())
        write_file_atomic(out_path, body);
    else
        std::cout << body << "\n";
    if (validate) {
        int pass = 0;
        char* report = nullptr;
        check(tandiv_schedule_validate(s.get(), cfg.kernel.get(), cfg.curve.get(), &pass, &report),
              "validate");
        std::string rep = take_string(report);
        if (!out_path.empty()) write_file_atomic(out_path + ".validation.json", rep);
        std::cout << "schedule: built, validation " << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? kExitOk : kExitViolation;
    }
    std::cout << "schedule: built\n";
    return kExitOk;
}

int cmd_construct(const std::string& config_path, const std::string& schedule_path,
                  const std::string& out_path, const std::string& variant_flag) {
    Config cfg = load_config(config_path);
    SchedulePtr s = build_or_load_schedule(cfg, schedule_path, variant_flag);
    char* sjson = nullptr;
    check(tandiv_schedule_to_json(s.get(), &sjson), "schedule json");
    json sj = json::parse(take_string(sjson));
    std::string body;
    if (sj.at("variant") == "theorem1") {
        tandiv_sets* sets = nullptr;
        check(tandiv_sets_build(s.get(), &sets), "construct sets");
        SetsPtr guard(sets, tandiv_sets_free);
        char* text = nullptr;
        check(tandiv_sets_to_json(sets, &text), "sets json");
        body = take_string(text);
    } else {
        tandiv_product* b = nullptr;
        check(tandiv_product_build(s.get(), &b), "construct product");
        ProductPtr guard(b, tandiv_product_free);
        char* text = nullptr;
        check(tandiv_product_to_json(b, &text), "product json");
        body = take_string(text);
    }
    if (!out_path.empty())
        write_file_atomic(out_path, body);
    else
        std::cout << body << "\n";
    std::cout << "construct: written (" << sj.at("variant").get<std::string>() << ")\n";
    return kExitOk;
}

int cmd_beta(const std::string& config_path, const std::string& csv_path,
             const std::string& json_path) {
    Config cfg = load_config(config_path);
    json opts = json::object();
    if (cfg.raw.contains("beta_deltas")) opts["deltas"] = cfg.raw.at("beta_deltas");
    char* out_json = nullptr;
    char* out_csv = nullptr;
    check(tandiv_estimate_beta(cfg.kernel.get(), cfg.curve.get(), opts.dump().c_str(), &out_json,
                               &out_csv),
          "beta");
    std::string body = take_string(out_json), table = take_string(out_csv);
    if (!json_path.empty()) write_file_atomic(json_path, body);
    if (!csv_path.empty()) write_file_atomic(csv_path, table);
    json parsed = json::parse(body);
    std::cout << "beta estimate: " << parsed.at("value").get<double>() << "\n";
    return kExitOk;
}

int cmd_phi(const std::string& config_path, double r, double x, const std::string& set_path,
            const std::string& product_path, const std::string& r_dyadic,
            const std::string& csv_path) {
    Config cfg = load_config(config_path);
    if (set_path.empty() == product_path.empty())
        die(kExitUsage, "phi: provide exactly one of --set-file / --product-file");
    std::vector<double> radii;
    if (!r_dyadic.empty()) {
        int lo = 0, hi = 0;
        if (std::sscanf(r_dyadic.c_str(), "%d:%d", &lo, &hi) != 2 || lo < 1 || hi < lo)
            die(kExitUsage, "phi: --r-dyadic expects LO:HI with 1 <= LO <= HI");
        for (int i = lo; i <= hi; ++i) radii.push_back(1.0 - std::ldexp(1.0, -i));
    } else {
        radii.push_back(r);
    }
    std::ostringstream csv;
    csv << "r,phi_re,phi_im\n";
    for (double rr : radii) {
        double re = 0.0, im = 0.0;
        if (!set_path.empty()) {
            tandiv_set* set = nullptr;
            check(tandiv_set_create(read_file(set_path).c_str(), &set), "set file");
            SetPtr guard(set, tandiv_set_free);
            check(tandiv_phi_indicator(cfg.kernel.get(), rr, x, set, &re), "phi");
        } else {
            tandiv_product* b = nullptr;
            check(tandiv_product_from_json(read_file(product_path).c_str(), &b), "product file");
            ProductPtr guard(b, tandiv_product_free);
            check(tandiv_phi_complex(cfg.kernel.get(), rr, x, b, cfg.raw.value("phi_tol", 1e-8),
                                     &re, &im),
                  "phi");
        }
        csv << rr << ',' << re << ',' << im << '\n';
        if (r_dyadic.empty()) std::cout << "phi = " << re << " + i*" << im << "\n";
    }
    if (!csv_path.empty()) {
        write_file_atomic(csv_path, csv.str());
        std::cout << "phi: batch written\n";
    }
    return kExitOk;
}

int cmd_oscillate(const std::string& config_path, const std::string& schedule_path,
                  const std::string& variant_flag, const std::string& csv_path,
                  const std::string& summary_path) {
    Config cfg = load_config(config_path);
    SchedulePtr s = build_or_load_schedule(cfg, schedule_path, variant_flag);
    char* sjson = nullptr;
    check(tandiv_schedule_to_json(s.get(), &sjson), "schedule json");
    json sj = json::parse(take_string(sjson));
    std::string variant = sj.at("variant");
    char* out_csv = nullptr;
    char* out_summary = nullptr;
    if (variant == "theorem1") {
        tandiv_sets* sets = nullptr;
        check(tandiv_sets_build(s.get(), &sets), "sets");
        SetsPtr guard(sets, tandiv_sets_free);
        check(tandiv_sweep_theorem1(cfg.kernel.get(), cfg.curve.get(), s.get(), sets,
                                    sweep_config(cfg).c_str(), &out_csv, &out_summary),
              "sweep");
    } else {
        tandiv_product* b = nullptr;
        check(tandiv_product_build(s.get(), &b), "product");
        ProductPtr guard(b, tandiv_product_free);
        check(tandiv_sweep_theorem2(cfg.kernel.get(), cfg.curve.get(), s.get(), b,
                                    sweep_config(cfg).c_str(), &out_csv, &out_summary),
              "sweep");
    }
    std::string csv = take_string(out_csv), summary = take_string(out_summary);
    if (!csv_path.empty()) write_file_atomic(csv_path, csv);
    if (!summary_path.empty()) write_file_atomic(summary_path, summary);
    json sum = json::parse(summary);
    int violations = sum.at("violations").get<int>();
    std::cout << "oscillate " << variant << ": samples=" << sum.at("samples")
              << " violations=" << violations << " min_gap=" << sum.at("min_gap").get<double>()
              << "\n";
    return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_verify_lemma1(long long n, double delta, int grid_density, const std::string& json_path) {
    char* report = nullptr;
    check(tandiv_verify_lemma1(n, delta, grid_density, &report), "verify-lemma1");
    std::string body = take_string(report);
    if (!json_path.empty()) write_file_atomic(json_path, body);
    json rep = json::parse(body);
    bool pass = rep.at("pass").get<bool>();
    std::cout << "lemma1 n=" << n << " delta=" << delta
              << " max|b+1|=" << rep.at("max_plus_dev").get<double>()
              << " (bound " << rep.at("bound_plus").get<double>()
              << ") max|b-1|=" << rep.at("max_minus_dev").get<double>() << " (bound "
              << rep.at("bound_minus").get<double>() << ") -> " << (pass ? "PASS" : "FAIL")
              << "\n";
    return pass ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and finite-depth verification of tangential divergence "
                 "counterexamples for convolution kernels"};
    app.require_subcommand(0, 1);
    bool version = false;
    app.add_flag("--version", version, "print library and config schema versions");

    std::string config_path, out_path, schedule_path, csv_path, json_path, summary_path;
    std::string variant_flag, set_path, product_path, r_dyadic;
    double r = 0.5, x = 0.0, delta = 1e-4;
    long long n = 16;
    int grid_density = 64;
    bool validate = true;

    auto* sched = app.add_subcommand("schedule", "build and certify a schedule");
    sched->add_option("--config", config_path, "experiment config JSON")->required();
    sched->add_option("--out", out_path, "output schedule JSON path");
    sched->add_option("--variant", variant_flag, "theorem1 | theorem2");
    sched->add_flag("--validate,!--no-validate", validate, "run the independent validation");

    auto* cons = app.add_subcommand("construct", "build the counterexample object");
    cons->add_option("--config", config_path, "experiment config JSON")->required();
    cons->add_option("--schedule", schedule_path, "schedule JSON (built if absent)");
    cons->add_option("--out", out_path, "output JSON path");
    cons->add_option("--variant", variant_flag, "theorem1 | theorem2");

    auto* beta = app.add_subcommand("beta", "estimate the concentration index");
    beta->add_option("--config", config_path, "experiment config JSON")->required();
    beta->add_option("--csv", csv_path, "full (delta, r, inner_mass) table");
    beta->add_option("--json", json_path, "estimate JSON");

    auto* phi = app.add_subcommand("phi", "evaluate the operator once or on an r-grid");
    phi->add_option("--config", config_path, "experiment config JSON")->required();
    phi->add_option("--r", r, "radius");
    phi->add_option("--x", x, "angle (radians)");
    phi->add_option("--set-file", set_path, "indicator set JSON");
    phi->add_option("--product-file", product_path, "Blaschke product JSON");
    phi->add_option("--r-dyadic", r_dyadic, "batch radii 1-2^-i for i in LO:HI");
    phi->add_option("--csv", csv_path, "batch output CSV");

    auto* osc = app.add_subcommand("oscillate", "run the theorem-level sweep");
    osc->add_option("--config", config_path, "experiment config JSON")->required();
    osc->add_option("--schedule", schedule_path, "schedule JSON (built if absent)");
    osc->add_option("--variant", variant_flag, "theorem1 | theorem2");
    osc->add_option("--csv", csv_path, "per-x trace CSV");
    osc->add_option("--json", summary_path, "summary JSON");

    auto* lem = app.add_subcommand("verify-lemma1", "grid check of the factor bounds");
    lem->add_option("--n", n, "factor degree");
    lem->add_option("--delta", delta, "factor delta");
    lem->add_option("--grid-density", grid_density, "points per arc");
    lem->add_option("--json", json_path, "report JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    if (version) {
        std::cout << "tandiv " << tandiv_version() << " (config schema "
                  << tandiv_config_schema_version() << ")\n";
        return kExitOk;
    }
    if (app.get_subcommands().empty()) {
        std::cout << app.help();
        return kExitUsage;
    }

    try {
        if (sched->parsed()) return cmd_schedule(config_path, out_path, variant_flag, validate);
        if (cons->parsed())
            return cmd_construct(config_path, schedule_path, out_path, variant_flag);
        if (beta->parsed()) return cmd_beta(config_path, csv_path, json_path);
        if (phi->parsed())
            return cmd_phi(config_path, r, x, set_path, product_path, r_dyadic, csv_path);
        if (osc->parsed())
            return cmd_oscillate(config_path, schedule_path, variant_flag, csv_path, summary_path);
        if (lem->parsed()) return cmd_verify_lemma1(n, delta, grid_density, json_path);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
