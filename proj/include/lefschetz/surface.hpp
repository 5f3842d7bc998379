#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/presentation.hpp"

namespace lefschetz {

using HomologyClass = IntVector<Integer>;
using SymplecticMatrix = IntMatrix<Integer>;

/// pi_1 of the closed genus-g surface on a_1..a_g, b_1..b_g, where a_i is
/// generator i and b_i is generator g + i.
class SurfaceGroup {
 public:
  explicit SurfaceGroup(int genus);

  int genus() const { return genus_; }

  /// a_0 and a_{g+1} are the identity.
  Word a(int i) const;
  Word b(int i) const;

  /// r = b_g^-1 ... b_1^-1 (a_1 b_1 a_1^-1) ... (a_g b_g a_g^-1).
  Word relator() const;
  const std::vector<std::string>& generator_names() const { return names_; }
  Presentation presentation() const;

  /// c_i = b_i^-1 ... b_1^-1 (a_1 b_1 a_1^-1) ... (a_i b_i a_i^-1), 1 <= i <= g.
  Word c_curve(int i) const;

  /// B_0..B_g.
  Word chain_curve(int index) const;

  struct AbcCurves {
    std::optional<Word> a, b, c;
  };
  /// a = a_{(g+1)/2} and b = c_{(g-1)/2} a_{(g+1)/2} for odd g; c = c_{g/2} for even g.
  AbcCurves abc_curves() const;

  /// Twist centers of W in order: (c, B_g..B_0) twice for even g,
  /// (a, a, b, b, B_g..B_0) twice for odd g.
  std::vector<Word> w_cycles() const;

  HomologyClass homology_class(const Word& w) const;

  std::string format(const Word& w) const { return format_word(w, names_); }
  Word parse(std::string_view text) const { return parse_word(text, names_); }

 private:
  Word c_or_identity(int i) const;

  int genus_;
  std::vector<std::string> names_;
};

struct WHomologyCertificate {
  int genus = 0;
  std::vector<Word> cycles;
  std::vector<HomologyClass> classes;
  std::vector<SymplecticMatrix> factors;
  SymplecticMatrix product;
  bool all_factors_symplectic = false;
  bool passed = false;
};

/// Checks that the twists of W compose to the identity on H_1(Sigma_g).
/// `drop` removes one twist (by position) as a negative control.
WHomologyCertificate verify_w_homology(int genus, std::optional<std::size_t> drop = std::nullopt);

}  // namespace lefschetz
