#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lefschetz/fibration.hpp"

namespace lefschetz {

inline constexpr std::string_view kPlanSchema = "lefschetz-plan/1";

class PlanFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {schema, genus, blocks: [{relation, conjugator}], kill_list, twist_letters}
/// in that order. Words use the surface generator names a1..ag, b1..bg.
nlohmann::ordered_json plan_to_json(const FibrationPlan& plan);
std::string plan_to_text(const FibrationPlan& plan);

/// Rebuilds the plan from its blocks and checks that the stored kill list and
/// twist count agree with the recomputed ones. Throws PlanFormatError.
FibrationPlan plan_from_json(const nlohmann::ordered_json& doc);
FibrationPlan plan_from_text(std::string_view text);

FibrationPlan load_plan(const std::string& path);
void save_plan(const FibrationPlan& plan, const std::string& path);

}  // namespace lefschetz
