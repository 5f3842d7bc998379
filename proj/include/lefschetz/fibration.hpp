#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/invariants.hpp"
#include "lefschetz/relator_curves.hpp"
#include "lefschetz/tietze.hpp"

namespace lefschetz {

/// One factor of a monodromy product. `relation` is "W" for a copy of W, or
/// "prefix:<m>" for the product of the first m blocks of the same plan.
/// A conjugator d turns the factor X into X^{t_d}.
struct PlanBlock {
  std::string relation = "W";
  std::optional<Word> conjugator;

  friend bool operator==(const PlanBlock&, const PlanBlock&) = default;
};

struct Extension;

/// A Lefschetz fibration over the sphere given by its monodromy, together
/// with the curves whose normal closure computes pi_1 of the total space.
class FibrationPlan {
 public:
  /// The fibration with monodromy W alone.
  static FibrationPlan bare_w(int genus);

  /// Rebuilds a plan from stored blocks, recomputing the kill list and twist
  /// count. Throws std::invalid_argument on malformed blocks.
  static FibrationPlan from_blocks(int genus, std::vector<PlanBlock> blocks);

  int genus() const { return genus_; }
  const std::vector<PlanBlock>& blocks() const { return blocks_; }
  /// W cycles, then every conjugator center in block order; no duplicates.
  const std::vector<Word>& kill_list() const { return kill_list_; }
  std::uint64_t twist_letter_count() const { return twists_.back(); }
  bool has_section() const { return true; }

  /// Twists contributed by block i (|W| or the size of the referenced prefix).
  std::uint64_t block_letter_count(std::size_t i) const { return twists_[i + 1] - twists_[i]; }

  friend bool operator==(const FibrationPlan& a, const FibrationPlan& b) {
    return a.genus_ == b.genus_ && a.blocks_ == b.blocks_;
  }

 private:
  friend Extension append_block(const FibrationPlan& p, PlanBlock block);
  explicit FibrationPlan(int genus);
  void append(PlanBlock block);

  int genus_ = 0;
  std::vector<PlanBlock> blocks_;
  std::vector<Word> kill_list_;
  std::vector<std::uint64_t> twists_{0};
};

struct Extension {
  FibrationPlan plan;
  /// Set when no curve already in the kill list meets the new center with
  /// algebraic intersection +-1 (the homological shadow of the hypothesis
  /// that the center crosses a vanishing cycle exactly once).
  std::optional<std::string> warning;
};

/// Appends any block; the conjugator must be set.
Extension append_block(const FibrationPlan& p, PlanBlock block);

/// X -> X X^{t_d} for the whole current plan X; the twist count doubles.
Extension extend_by_twist(const FibrationPlan& p, const Word& d);

/// X -> X W^{t_d}; the twist count grows by |W|.
Extension append_w_block(const FibrationPlan& p, const Word& d);

/// X -> X Y^{t_d} where Y is the product of the first `prefix` blocks.
Extension append_conjugated_prefix(const FibrationPlan& p, std::size_t prefix, const Word& d);

/// U = W W^{t_{b_1}} ... W^{t_{b_g}}, g >= 2.
FibrationPlan construct_u(int genus);
/// U' = W W^{t_{b_2}} ... W^{t_{b_{g-1}}}, g >= 3.
FibrationPlan construct_u_prime(int genus);

/// <a_1..a_g, b_1..b_g | r, kill list>, before any simplification.
Presentation pi1_presentation(const FibrationPlan& p);

/// pi1_presentation followed by Tietze simplification.
TietzeResult pi1_simplify(const FibrationPlan& p, std::size_t budget = 64, const TietzeOptions& options = {});
Presentation pi1_from_plan(const FibrationPlan& p, std::size_t budget = 64);

/// e(X) = 4 - 4g + number of singular fibers.
Integer euler_characteristic(const FibrationPlan& p);

// ---------------------------------------------------------------------------
// From a presentation <g_1..g_n | r_1..r_k> to a fibration whose total space
// has that fundamental group.

/// 2n + l - 1 with l the longest relator syllable length (l = 1 without
/// relators), and never below 2 because U needs g >= 2.
int pipeline_genus_bound(const Presentation& gamma);

struct PipelineOptions {
  std::optional<int> genus;
  FillerChoice fillers;
  /// Random mode only: relator i uses seed fillers.seed + i.
  bool vary_seed_per_relator = true;
};

struct PipelineResult {
  int genus = 0;
  FibrationPlan plan = FibrationPlan::bare_w(1);
  std::vector<RelatorCurve> curves;
  std::vector<std::string> warnings;
  /// <a_1..a_n | hat r_1..hat r_k>.
  Presentation expected;
  /// pi_1 of the total space with a_1..a_n kept and no relator rewriting.
  Presentation presentation;
  bool matches_expected = false;
};

/// U, then V = U W^{t_{a_{n+1}}} ... W^{t_{a_{[g/2]}}}, then
/// V' = V V^{t_{R_1}} ... V^{t_{R_k}}. Identity relators are skipped.
/// Throws std::out_of_range when the genus is below the bound.
PipelineResult run_pipeline(const Presentation& gamma, const PipelineOptions& options = {});

}  // namespace lefschetz
