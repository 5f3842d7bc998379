#include "lefschetz/plan_io.hpp"

#include <fstream>
#include <sstream>

namespace lefschetz {

using nlohmann::ordered_json;

ordered_json plan_to_json(const FibrationPlan& plan) {
  const SurfaceGroup s(plan.genus());
  ordered_json doc;
  doc["schema"] = kPlanSchema;
  doc["genus"] = plan.genus();
  ordered_json blocks = ordered_json::array();
  for (const auto& b : plan.blocks()) {
    ordered_json block;
    block["relation"] = b.relation;
    block["conjugator"] = b.conjugator ? ordered_json(s.format(*b.conjugator)) : ordered_json(nullptr);
    blocks.push_back(std::move(block));
  }
  doc["blocks"] = std::move(blocks);
  ordered_json kills = ordered_json::array();
  for (const auto& c : plan.kill_list()) kills.push_back(s.format(c));
  doc["kill_list"] = std::move(kills);
  doc["twist_letters"] = plan.twist_letter_count();
  return doc;
}

std::string plan_to_text(const FibrationPlan& plan) { return plan_to_json(plan).dump(2) + "\n"; }

namespace {

const ordered_json& field(const ordered_json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw PlanFormatError(std::string("plan is missing field '") + name + "'");
  return *it;
}

Word parse_plan_word(const SurfaceGroup& s, const ordered_json& v, const std::string& where) {
  if (!v.is_string()) throw PlanFormatError(where + " must be a word string");
  try {
    return s.parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw PlanFormatError(where + ": " + e.what());
  }
}

}  // namespace

FibrationPlan plan_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw PlanFormatError("plan must be a JSON object");
  if (auto it = doc.find("schema"); it != doc.end() && *it != kPlanSchema)
    throw PlanFormatError("unsupported plan schema " + it->dump());
  const auto& g = field(doc, "genus");
  if (!g.is_number_integer() || g.get<long long>() < 1 || g.get<long long>() > 10000)
    throw PlanFormatError("genus must be an integer in [1, 10000]");
  const int genus = g.get<int>();
  const SurfaceGroup s(genus);

  const auto& raw_blocks = field(doc, "blocks");
  if (!raw_blocks.is_array()) throw PlanFormatError("blocks must be an array");
  std::vector<PlanBlock> blocks;
  for (std::size_t i = 0; i < raw_blocks.size(); ++i) {
    const auto& b = raw_blocks[i];
    const std::string where = "blocks[" + std::to_string(i) + "]";
    if (!b.is_object()) throw PlanFormatError(where + " must be an object");
    const auto& rel = field(b, "relation");
    if (!rel.is_string()) throw PlanFormatError(where + ".relation must be a string");
    PlanBlock block{rel.get<std::string>(), std::nullopt};
    if (auto c = b.find("conjugator"); c != b.end() && !c->is_null())
      block.conjugator = parse_plan_word(s, *c, where + ".conjugator");
    blocks.push_back(std::move(block));
  }

  FibrationPlan plan = [&] {
    try {
      return FibrationPlan::from_blocks(genus, std::move(blocks));
    } catch (const PlanFormatError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw PlanFormatError(e.what());
    }
  }();

  if (auto it = doc.find("kill_list"); it != doc.end()) {
    if (!it->is_array()) throw PlanFormatError("kill_list must be an array");
    std::vector<Word> stored;
    for (std::size_t i = 0; i < it->size(); ++i)
      stored.push_back(parse_plan_word(s, (*it)[i], "kill_list[" + std::to_string(i) + "]"));
    if (stored != plan.kill_list()) throw PlanFormatError("kill_list does not match the blocks");
  }
  if (auto it = doc.find("twist_letters"); it != doc.end()) {
    if (!it->is_number_unsigned() || it->get<std::uint64_t>() != plan.twist_letter_count())
      throw PlanFormatError("twist_letters does not match the blocks (expected " +
                            std::to_string(plan.twist_letter_count()) + ")");
  }
  return plan;
}

FibrationPlan plan_from_text(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PlanFormatError(std::string("malformed JSON: ") + e.what());
  }
  return plan_from_json(doc);
}

FibrationPlan load_plan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return plan_from_text(buf.str());
}

void save_plan(const FibrationPlan& plan, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << plan_to_text(plan);
  if (!out) throw std::runtime_error("error writing " + path);
}

}  // namespace lefschetz
