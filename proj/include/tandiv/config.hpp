#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tandiv/curve.hpp"
#include "tandiv/kernel.hpp"
#include "tandiv/schedule.hpp"

namespace tandiv {

// Experiment configuration; everything except the subcommand and file paths
// travels in this JSON so outputs carry their own provenance.
struct ExperimentConfig {
    Kernel kernel = Kernel::poisson();
    ApproachCurve curve = ApproachCurve::power(1.0, 0.5);
    Variant variant = Variant::theorem1;
    int depth = 4;
    double beta_target = 0.98;
    int samples = 100;
    std::uint64_t seed = 20250808;
    int k_level = 0; // theorem2 working level for the sweep; 0 = depth
    double phi_tol = 1e-8;

    static ExperimentConfig from_json(const std::string& text);
    std::string to_json() const;
};

inline constexpr const char* config_schema_version = "1";

} // namespace tandiv
