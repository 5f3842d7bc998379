#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/word.hpp"

namespace lefschetz {

/// Finite presentation <generators | relators>. Relator letters index into
/// `generators` (1-based).
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int rank() const { return static_cast<int>(generators.size()); }

  /// Throws std::invalid_argument on duplicate/invalid names or relators that
  /// mention a generator beyond rank().
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Grammar: "<" names? "|" relators? ">", names and relators comma separated.
Presentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation: "<a,b | a b a^-1 b^-1>", "<a | >", "< | >".
std::string format_presentation(const Presentation& p);

/// Relator lists equal as multisets of cyclic words up to inversion.
bool same_relators_up_to_cyclic(const std::vector<Word>& lhs, const std::vector<Word>& rhs);

}  // namespace lefschetz
