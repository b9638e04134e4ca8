#pragma once

#include <string>

#include "tandiv/beta.hpp"
#include "tandiv/blaschke.hpp"
#include "tandiv/circle_set.hpp"
#include "tandiv/curve.hpp"
#include "tandiv/kernel.hpp"
#include "tandiv/schedule.hpp"
#include "tandiv/set_sequence.hpp"

namespace tandiv {

// JSON wire formats:
//   kernel   {"family": "poisson", "params": {}}
//   curve    {"family": "power", "c": 1.0, "alpha": 0.5}
//   set      [[lo, hi], ...]                     (radians)
//   product  {"factors": [{"n": 2010, "delta": 0.0078125}, ...]}
//   schedule {"variant", "depth", "beta_target", "entries": [...], "certificate": [...]}

std::string kernel_to_json(const Kernel& k);
Kernel kernel_from_json(const std::string& text);

std::string curve_to_json(const ApproachCurve& c);
ApproachCurve curve_from_json(const std::string& text);

std::string interval_union_to_json(const IntervalUnion& u);
IntervalUnion interval_union_from_json(const std::string& text);

std::string product_to_json(const BlaschkeProduct& b);
BlaschkeProduct product_from_json(const std::string& text);

std::string schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const std::string& text);

std::string validation_to_json(const ValidationReport& rep);
std::string beta_to_json(const BetaEstimate& est);
std::string set_sequence_to_json(const SetSequence& seq);

} // namespace tandiv
