#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/presentation.hpp"

namespace lefschetz {

/// A finite group given by its Cayley table. Construction verifies the
/// group axioms (closure, associativity, identity, inverses).
class FiniteGroupTable {
 public:
  using Element = std::uint32_t;

  FiniteGroupTable(std::string name, std::vector<std::vector<Element>> table, Element identity);

  /// S_n on {0..n-1}; the product p*q applies p first.
  static FiniteGroupTable symmetric(int n);
  static FiniteGroupTable cyclic(int n);

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element power(Element a, const Integer& exponent) const;

 private:
  std::string name_;
  std::size_t order_;
  Element identity_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

/// S3, S4, Z2, Z3, Z4, Z5, Z6.
std::vector<FiniteGroupTable> default_battery();

/// Comma-separated group ids: s<n>, z<n>, and ranges like z2..z6.
std::vector<FiniteGroupTable> parse_battery(std::string_view spec);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HomCountOptions {
  /// Refuse when order^generators exceeds this.
  std::uint64_t cap = 200'000'000;
  /// Worker threads; the count does not depend on this.
  unsigned workers = 1;
};

/// Number of homomorphisms from the presented group to `group`.
std::uint64_t hom_count(const Presentation& p, const FiniteGroupTable& group, const HomCountOptions& options = {});

}  // namespace lefschetz
