#include "lefschetz/finite_group.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <numeric>
#include <thread>

namespace lefschetz {

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<std::vector<Element>> table, Element identity)
    : name_(std::move(name)), order_(table.size()), identity_(identity) {
  if (order_ == 0) throw std::invalid_argument("group table is empty");
  if (identity_ >= order_) throw std::invalid_argument("identity index out of range");
  table_.reserve(order_ * order_);
  for (const auto& row : table) {
    if (row.size() != order_) throw std::invalid_argument("group table is not square");
    for (Element e : row) {
      if (e >= order_) throw std::invalid_argument("group table entry out of range");
      table_.push_back(e);
    }
  }
  for (Element a = 0; a < order_; ++a)
    if (multiply(identity_, a) != a || multiply(a, identity_) != a)
      throw std::invalid_argument("identity axiom fails in " + name_);
  inverse_.assign(order_, static_cast<Element>(order_));
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b)
      if (multiply(a, b) == identity_ && multiply(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == order_) throw std::invalid_argument("inverse axiom fails in " + name_);
  }
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      for (Element c = 0; c < order_; ++c)
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
          throw std::invalid_argument("associativity fails in " + name_);
}

FiniteGroupTable FiniteGroupTable::symmetric(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric group degree must be in 1..6");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<int>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);

  std::vector<std::vector<Element>> table(perms.size(), std::vector<Element>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<int> prod(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) prod[static_cast<std::size_t>(k)] = perms[j][static_cast<std::size_t>(perms[i][static_cast<std::size_t>(k)])];
      table[i][j] = index.at(prod);
    }
  return FiniteGroupTable("S" + std::to_string(n), std::move(table), 0);
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  const auto un = static_cast<Element>(n);
  std::vector<std::vector<Element>> table(un, std::vector<Element>(un));
  for (Element i = 0; i < un; ++i)
    for (Element j = 0; j < un; ++j) table[i][j] = (i + j) % un;
  return FiniteGroupTable("Z" + std::to_string(n), std::move(table), 0);
}

FiniteGroupTable::Element FiniteGroupTable::power(Element a, const Integer& exponent) const {
  // a^|G| = 1, so the exponent only matters modulo the group order.
  Integer e = exponent % static_cast<unsigned long long>(order_);
  if (e < 0) e += static_cast<unsigned long long>(order_);
  auto k = static_cast<std::size_t>(e);
  Element result = identity_;
  Element base = a;
  while (k) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<FiniteGroupTable> default_battery() { return parse_battery("s3,s4,z2..z6"); }

namespace {

int parse_order(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    throw std::invalid_argument("bad battery entry '" + std::string(whole) + "'");
  return value;
}

FiniteGroupTable make_group(char kind, int order) {
  return kind == 's' ? FiniteGroupTable::symmetric(order) : FiniteGroupTable::cyclic(order);
}

}  // namespace

std::vector<FiniteGroupTable> parse_battery(std::string_view spec) {
  std::vector<FiniteGroupTable> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view item = spec.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.size() < 2 || (item[0] != 's' && item[0] != 'z'))
      throw std::invalid_argument("bad battery entry '" + std::string(item) + "'");
    const char kind = item[0];
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(make_group(kind, parse_order(item.substr(1), item)));
    } else {
      std::string_view hi = item.substr(dots + 2);
      if (!hi.empty() && hi[0] == kind) hi.remove_prefix(1);
      const int a = parse_order(item.substr(1, dots - 1), item);
      const int b = parse_order(hi, item);
      if (a > b) throw std::invalid_argument("empty battery range '" + std::string(item) + "'");
      for (int k = a; k <= b; ++k) out.push_back(make_group(kind, k));
    }
    start = end + 1;
  }
  return out;
}

namespace {

struct CompiledRelator {
  std::vector<std::pair<int, Integer>> letters;  // 0-based generator, exponent
};

class HomCounter {
 public:
  HomCounter(const Presentation& p, const FiniteGroupTable& group) : group_(group), rank_(p.rank()) {
    by_last_.resize(static_cast<std::size_t>(rank_));
    for (const auto& r : p.relators) {
      if (r.is_identity()) continue;
      CompiledRelator c;
      int last = 0;
      for (const auto& l : r.letters()) {
        c.letters.emplace_back(l.generator - 1, l.exponent);
        last = std::max(last, l.generator - 1);
      }
      by_last_[static_cast<std::size_t>(last)].push_back(std::move(c));
    }
    // exponents reduced once; powers looked up per assignment
    for (auto& bucket : by_last_)
      for (auto& c : bucket)
        for (auto& [g, e] : c.letters) {
          Integer m = e % static_cast<unsigned long long>(group_.order());
          if (m < 0) m += static_cast<unsigned long long>(group_.order());
          e = m;
        }
    powers_.resize(group_.order());
    for (FiniteGroupTable::Element a = 0; a < group_.order(); ++a) {
      powers_[a].push_back(group_.identity());
      for (std::size_t k = 1; k < group_.order(); ++k) powers_[a].push_back(group_.multiply(powers_[a].back(), a));
    }
  }

  std::uint64_t count_from(FiniteGroupTable::Element first) const {
    std::vector<FiniteGroupTable::Element> assignment(static_cast<std::size_t>(rank_));
    assignment[0] = first;
    if (!check(assignment, 0)) return 0;
    return recurse(assignment, 1);
  }

 private:
  bool check(const std::vector<FiniteGroupTable::Element>& assignment, int level) const {
    for (const auto& c : by_last_[static_cast<std::size_t>(level)]) {
      FiniteGroupTable::Element acc = group_.identity();
      for (const auto& [g, e] : c.letters)
        acc = group_.multiply(acc, powers_[assignment[static_cast<std::size_t>(g)]][static_cast<std::size_t>(e)]);
      if (acc != group_.identity()) return false;
    }
    return true;
  }

  std::uint64_t recurse(std::vector<FiniteGroupTable::Element>& assignment, int level) const {
    if (level == rank_) return 1;
    std::uint64_t total = 0;
    for (FiniteGroupTable::Element a = 0; a < group_.order(); ++a) {
      assignment[static_cast<std::size_t>(level)] = a;
      if (check(assignment, level)) total += recurse(assignment, level + 1);
    }
    return total;
  }

  const FiniteGroupTable& group_;
  int rank_;
  std::vector<std::vector<CompiledRelator>> by_last_;
  std::vector<std::vector<FiniteGroupTable::Element>> powers_;
};

}  // namespace

std::uint64_t hom_count(const Presentation& p, const FiniteGroupTable& group, const HomCountOptions& options) {
  p.validate();
  // order^rank <= cap, computed without overflow
  std::uint64_t space = 1;
  for (int i = 0; i < p.rank(); ++i) {
    if (space > options.cap / group.order())
      throw CapExceeded("hom_count into " + group.name() + " refused: " + std::to_string(group.order()) + "^" +
                        std::to_string(p.rank()) + " assignments exceed cap " + std::to_string(options.cap));
    space *= group.order();
  }
  if (p.rank() == 0) return 1;
  HomCounter counter(p, group);

  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(group.order())));
  if (workers == 1) {
    std::uint64_t total = 0;
    for (FiniteGroupTable::Element a = 0; a < group.order(); ++a) total += counter.count_from(a);
    return total;
  }
  std::atomic<FiniteGroupTable::Element> next{0};
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      for (auto a = next++; a < group.order(); a = next++) partial[w] += counter.count_from(a);
    });
  for (auto& t : threads) t.join();
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace lefschetz
