#include "tandiv/config.hpp"

#include <json.hpp>

#include "tandiv/error.hpp"
#include "tandiv/json_io.hpp"

namespace tandiv {

using nlohmann::json;

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::parse, "config: malformed JSON");
    ExperimentConfig cfg;
    if (j.contains("kernel")) cfg.kernel = kernel_from_json(j.at("kernel").dump());
    if (j.contains("curve")) cfg.curve = curve_from_json(j.at("curve").dump());
    if (j.contains("variant"))
        cfg.variant = variant_from_name(j.at("variant").get<std::string>());
    cfg.depth = j.value("depth", cfg.variant == Variant::theorem2 ? 5 : 4);
    require(cfg.depth >= 1, errc::invalid_argument, "config: depth must be >= 1");
    cfg.beta_target = j.value("beta_target", cfg.variant == Variant::theorem2 ? 1.0 : 0.98);
    require(cfg.beta_target > 0.5 && cfg.beta_target <= 1.0, errc::invalid_argument,
            "config: beta_target must lie in (1/2, 1]");
    cfg.samples = j.value("samples", 100);
    require(cfg.samples >= 0, errc::invalid_argument, "config: samples must be >= 0");
    cfg.seed = j.value("seed", (std::uint64_t)20250808);
    cfg.k_level = j.value("k_level", 0);
    require(cfg.k_level >= 0 && cfg.k_level <= cfg.depth, errc::invalid_argument,
            "config: k_level must lie in [0, depth]");
    cfg.phi_tol = j.value("phi_tol", 1e-8);
    require(cfg.phi_tol >= 1e-10, errc::invalid_argument, "config: phi_tol below 1e-10");
    return cfg;
}

std::string ExperimentConfig::to_json() const {
    json j;
    j["kernel"] = json::parse(kernel_to_json(kernel));
    j["curve"] = json::parse(curve_to_json(curve));
    j["variant"] = variant_name(variant);
    j["depth"] = depth;
    j["beta_target"] = beta_target;
    j["samples"] = samples;
    j["seed"] = seed;
    j["k_level"] = k_level;
    j["phi_tol"] = phi_tol;
    j["schema_version"] = config_schema_version;
    return j.dump(2);
}

} // namespace tandiv
