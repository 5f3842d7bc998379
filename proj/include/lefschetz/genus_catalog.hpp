#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/abelian.hpp"
#include "lefschetz/fibration.hpp"
#include "lefschetz/finite_group.hpp"

namespace lefschetz {

/// Families of finitely presented groups with tabulated genus bounds.
///
/// Params per family:
///   braid, sphere-mcg, symmetric, artin: n (strands / punctures / letters)
///   hyperelliptic, surface: g
///   abelian: n, k, m_1..m_k  (Z^n + Z_{m_1} + ... + Z_{m_k}, n + k >= 3)
///   small-abelian: same shape with n + k <= 2, the genus 0/1/2 table
enum class Family { Braid, Hyperelliptic, SphereMcg, Symmetric, Artin, Abelian, Surface, SmallAbelian };

std::string_view family_name(Family f);
/// Accepts the identifiers printed by family_name; throws std::invalid_argument.
Family parse_family(std::string_view name);
std::vector<Family> all_families();

struct FamilySpec {
  Family family = Family::Braid;
  std::vector<long long> params;

  /// Throws std::out_of_range when params are outside the family's range.
  void validate() const;
};

struct GenusBounds {
  int lower = 0;
  std::optional<int> upper;  // nullopt: no upper bound known
  bool exact = false;

  friend bool operator==(const GenusBounds&, const GenusBounds&) = default;
};

std::string format_bounds(const GenusBounds& b);

/// Two-generator (x, y) or three-generator (x, y, z) presentation of the
/// family member, via x = s_1, y = s_1 ... s_{n-1} (and z = tau for Artin).
/// Abelian families use commutators [e_i, e_j] and powers e_i^{m_i} on the
/// first k generators.
Presentation family_presentation(const FamilySpec& spec);

GenusBounds genus_bounds(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Certificates. Each check records one relator or identity and whether it
// holds in the representation used.

struct RelatorCheck {
  std::string label;
  bool holds = false;
  std::string detail;
};

struct FamilyCertificate {
  std::string family;
  long long parameter = 0;
  std::vector<RelatorCheck> checks;
  std::optional<std::size_t> order;  // coset enumeration, when run
  bool passed = false;
};

/// Evaluates braid-group words in x = s_1, y = s_1 ... s_{n-1} through the
/// Artin action on the free group of rank n; a relator holds iff it acts as
/// the identity automorphism. 2 <= n <= 8.
FamilyCertificate braid_relator_check(int n);
FamilyCertificate braid_relator_check(int n, const std::vector<Word>& relators);

/// Evaluates the symmetric-group relators with s_i -> (i, i+1) and, for
/// n <= 5, confirms the presentation has order n! by coset enumeration.
FamilyCertificate symmetric_relator_check(int n);

/// The x, y rewriting of the hyperelliptic relators: the half-twist product
/// identity (modulo y^{2g+2}) and the commutator identity. 1 <= g <= 4.
FamilyCertificate hyperelliptic_identity_check(int g);

/// Braid-part relators through the Artin action (n <= 8), the two extra
/// relators in S_n (puncture permutation), and for n <= 3 the group order
/// by coset enumeration (2 and 6).
FamilyCertificate sphere_mcg_check(int n);

/// The Artin group on s_1..s_{n-1}, tau with tau braiding s_4 only.
Presentation artin_sigma_presentation(int n);

/// Invariant-level comparison of the x, y, z presentation with the
/// s_1..s_{n-1}, tau presentation: abelianization and every hom count in the
/// battery. 5 <= n <= 7.
FamilyCertificate artin_invariant_check(int n, const std::vector<FiniteGroupTable>& battery);

/// Free reduction where exponents of `generator` are read modulo `modulus`
/// into the window (-modulus/2, modulus/2]; repeats until stable.
Word reduce_power_modulo(const Word& w, int generator, const Integer& modulus);

// ---------------------------------------------------------------------------
// Z^n + Z_{m_1} + ... + Z_{m_k} as a genus n+k+1 fibration.

struct AbelianFibration {
  int n = 0;
  int k = 0;
  std::vector<long long> m;
  /// V_6 (n + k even) or V_8 (odd): the torsion-free stage.
  FibrationPlan interim = FibrationPlan::bare_w(1);
  /// V_7 / V_9: interim followed by one torsion block per m_i.
  FibrationPlan plan = FibrationPlan::bare_w(1);
  /// Simplified pi_1 presentation of `plan`.
  Presentation presentation;
  /// The target group in invariant-factor form.
  AbelianInvariants expected;
};

/// Requires n, k >= 0, n + k >= 3, k == m.size(), every m_i >= 2.
AbelianFibration abelian_fibration(int n, int k, const std::vector<long long>& m);

/// Twist centers of the torsion-free stage, in block order (without W).
std::vector<Word> abelian_interim_centers(int rank);
/// Torsion curve for generator i (1-based over a_1..a_r, b_1..b_r[, a_{r+1}]).
Word abelian_torsion_curve(int rank, int i, long long m);

// ---------------------------------------------------------------------------
// T^2-bundles over the sphere with clutching (n, m): pi_1 = Z + Z_d with
// d = gcd(|n|, |m|) and gcd(0, 0) = 0.
AbelianInvariants t2_bundle_pi1(long long n, long long m);

}  // namespace lefschetz
