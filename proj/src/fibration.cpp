#include "lefschetz/fibration.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "lefschetz/symplectic.hpp"

namespace lefschetz {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > UINT64_MAX - b) throw std::overflow_error("twist count overflows 64 bits");
  return a + b;
}

std::optional<std::size_t> parse_prefix(const std::string& relation) {
  constexpr std::string_view tag = "prefix:";
  if (relation.rfind(tag, 0) != 0) return std::nullopt;
  std::size_t m = 0;
  const char* begin = relation.data() + tag.size();
  const char* end = relation.data() + relation.size();
  auto [ptr, ec] = std::from_chars(begin, end, m);
  if (ec != std::errc() || ptr != end || begin == end) throw std::invalid_argument("bad block relation '" + relation + "'");
  return m;
}

}  // namespace

FibrationPlan::FibrationPlan(int genus) : genus_(genus) {
  const SurfaceGroup s(genus);
  for (const auto& c : s.w_cycles())
    if (std::find(kill_list_.begin(), kill_list_.end(), c) == kill_list_.end()) kill_list_.push_back(c);
}

FibrationPlan FibrationPlan::bare_w(int genus) {
  FibrationPlan p(genus);
  p.append(PlanBlock{"W", std::nullopt});
  return p;
}

void FibrationPlan::append(PlanBlock block) {
  std::uint64_t size = 0;
  if (block.relation == "W") {
    size = SurfaceGroup(genus_).w_cycles().size();
  } else if (auto m = parse_prefix(block.relation)) {
    if (*m == 0 || *m > blocks_.size())
      throw std::invalid_argument("block '" + block.relation + "' refers past the " + std::to_string(blocks_.size()) +
                                  " existing blocks");
    size = twists_[*m];
  } else {
    throw std::invalid_argument("unknown block relation '" + block.relation + "'");
  }
  if (block.conjugator) {
    if (block.conjugator->max_generator() > 2 * genus_)
      throw std::invalid_argument("conjugator uses a generator outside genus " + std::to_string(genus_));
    if (std::find(kill_list_.begin(), kill_list_.end(), *block.conjugator) == kill_list_.end())
      kill_list_.push_back(*block.conjugator);
  }
  twists_.push_back(checked_add(twists_.back(), size));
  blocks_.push_back(std::move(block));
}

FibrationPlan FibrationPlan::from_blocks(int genus, std::vector<PlanBlock> blocks) {
  FibrationPlan p(genus);
  for (auto& b : blocks) p.append(std::move(b));
  if (p.blocks_.empty()) throw std::invalid_argument("plan has no blocks");
  return p;
}

Extension append_block(const FibrationPlan& p, PlanBlock block) {
  if (!block.conjugator) throw std::invalid_argument("appended blocks need a conjugator");
  Extension out{p, std::nullopt};
  const SurfaceGroup s(p.genus());
  const Word d = *block.conjugator;
  const HomologyClass hd = s.homology_class(d);
  const bool meets = std::any_of(p.kill_list().begin(), p.kill_list().end(), [&](const Word& c) {
    return abs_value(intersection(hd, s.homology_class(c))) == 1;
  });
  if (!meets)
    out.warning = "no curve in the kill list meets " + s.format(d) + " with algebraic intersection +-1";
  out.plan.append(std::move(block));
  return out;
}

Extension extend_by_twist(const FibrationPlan& p, const Word& d) {
  return append_conjugated_prefix(p, p.blocks().size(), d);
}

Extension append_w_block(const FibrationPlan& p, const Word& d) { return append_block(p, PlanBlock{"W", d}); }

Extension append_conjugated_prefix(const FibrationPlan& p, std::size_t prefix, const Word& d) {
  return append_block(p, PlanBlock{"prefix:" + std::to_string(prefix), d});
}

FibrationPlan construct_u(int genus) {
  if (genus < 2) throw std::out_of_range("U needs genus >= 2, got " + std::to_string(genus));
  const SurfaceGroup s(genus);
  FibrationPlan p = FibrationPlan::bare_w(genus);
  for (int i = 1; i <= genus; ++i) p = append_w_block(p, s.b(i)).plan;
  return p;
}

FibrationPlan construct_u_prime(int genus) {
  if (genus < 3) throw std::out_of_range("U' needs genus >= 3, got " + std::to_string(genus));
  const SurfaceGroup s(genus);
  FibrationPlan p = FibrationPlan::bare_w(genus);
  for (int i = 2; i <= genus - 1; ++i) p = append_w_block(p, s.b(i)).plan;
  return p;
}

Presentation pi1_presentation(const FibrationPlan& p) {
  const SurfaceGroup s(p.genus());
  Presentation out = s.presentation();
  for (const auto& c : p.kill_list())
    if (!c.is_identity()) out.relators.push_back(c);
  return out;
}

TietzeResult pi1_simplify(const FibrationPlan& p, std::size_t budget, const TietzeOptions& options) {
  return tietze_simplify(pi1_presentation(p), budget, options);
}

Presentation pi1_from_plan(const FibrationPlan& p, std::size_t budget) { return pi1_simplify(p, budget).presentation; }

Integer euler_characteristic(const FibrationPlan& p) {
  return Integer(4) - 4 * p.genus() + Integer(p.twist_letter_count());
}

int pipeline_genus_bound(const Presentation& gamma) {
  std::size_t l = 0;
  for (const auto& r : gamma.relators) l = std::max(l, r.syllable_length());
  if (l == 0) l = 1;
  return std::max(2 * gamma.rank() + static_cast<int>(l) - 1, 2);
}

PipelineResult run_pipeline(const Presentation& gamma, const PipelineOptions& options) {
  gamma.validate();
  const int n = gamma.rank();
  const int bound = pipeline_genus_bound(gamma);
  const int genus = options.genus.value_or(bound);
  if (genus < bound)
    throw std::out_of_range("genus " + std::to_string(genus) + " below bound " + std::to_string(bound));

  PipelineResult out;
  out.genus = genus;
  const SurfaceGroup s(genus);

  FibrationPlan v = construct_u(genus);
  for (int t = n + 1; t <= genus / 2; ++t) {
    auto ext = append_w_block(v, s.a(t));
    if (ext.warning) out.warnings.push_back(*ext.warning);
    v = std::move(ext.plan);
  }
  const std::size_t v_blocks = v.blocks().size();

  out.expected.generators = indexed_names("a", n);
  FibrationPlan plan = v;
  std::size_t index = 0;
  for (const auto& r : gamma.relators) {
    if (r.is_identity()) continue;
    FillerChoice choice = options.fillers;
    if (choice.mode == FillerChoice::Mode::Random && options.vary_seed_per_relator) choice.seed += index;
    ++index;
    out.curves.push_back(build_relator_curve(r, n, genus, choice));
    out.expected.relators.push_back(hat(r, genus));
    auto ext = append_conjugated_prefix(plan, v_blocks, out.curves.back().assembled);
    if (ext.warning) out.warnings.push_back(*ext.warning);
    plan = std::move(ext.plan);
  }
  out.plan = std::move(plan);

  TietzeOptions literal;
  literal.rewrite_relators = false;
  for (int i = 1; i <= n; ++i) literal.protected_generators.push_back(i);
  out.presentation = pi1_simplify(out.plan, 64, literal).presentation;

  std::vector<Word> wanted;
  for (const auto& r : out.expected.relators) {
    const Word c = cyclically_reduce(r);
    if (c.is_identity()) continue;
    if (std::none_of(wanted.begin(), wanted.end(), [&](const Word& x) { return same_cyclic_word(x, c); }))
      wanted.push_back(c);
  }
  out.matches_expected = out.presentation.generators == out.expected.generators &&
                         same_relators_up_to_cyclic(out.presentation.relators, wanted);
  return out;
}

}  // namespace lefschetz
