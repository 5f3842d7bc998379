#include "lefschetz/coset.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lefschetz {

namespace {

// HLT enumeration with a deduction stack processed Felsch-style: every new
// table entry (c, x) is pushed and the relator rotations starting with x are
// scanned from c without defining anything.
class CosetTable {
 public:
  CosetTable(int columns, std::vector<std::vector<int>> relators, std::size_t max_live)
      : columns_(columns), relators_(std::move(relators)), max_live_(max_live) {
    for (const auto& r : relators_)
      for (std::size_t s = 0; s < r.size(); ++s) {
        std::vector<int> rot(r.begin() + static_cast<std::ptrdiff_t>(s), r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(s));
        rotations_.push_back(std::move(rot));
      }
    starting_.resize(static_cast<std::size_t>(columns_));
    for (std::size_t i = 0; i < rotations_.size(); ++i)
      starting_[static_cast<std::size_t>(rotations_[i][0])].push_back(i);
    add_row();
  }

  std::optional<std::size_t> run() {
    try {
      for (std::size_t c = 0; c < rows(); ++c) {
        for (const auto& r : relators_) {
          if (!live(c)) break;
          scan(c, r, true);
          process_deductions();
        }
        for (int x = 0; x < columns_ && live(c); ++x)
          if (at(c, x) < 0) {
            define(c, x);
            process_deductions();
          }
      }
    } catch (const Overflow&) {
      return std::nullopt;
    }
    if (!verify()) return std::nullopt;
    return live_count_;
  }

 private:
  struct Overflow {};

  static int inv(int x) { return x ^ 1; }
  std::size_t rows() const { return forward_.size(); }
  bool live(std::size_t c) const { return forward_[c] == static_cast<int>(c); }
  int& at(std::size_t c, int x) { return table_[c * static_cast<std::size_t>(columns_) + static_cast<std::size_t>(x)]; }

  int add_row() {
    const int id = static_cast<int>(rows());
    forward_.push_back(id);
    table_.resize(table_.size() + static_cast<std::size_t>(columns_), -1);
    ++live_count_;
    return id;
  }

  void define(std::size_t c, int x) {
    if (live_count_ >= max_live_ || rows() >= 8 * max_live_) throw Overflow{};
    const int d = add_row();
    set(static_cast<int>(c), x, d);
  }

  void set(int c, int x, int d) {
    at(static_cast<std::size_t>(c), x) = d;
    at(static_cast<std::size_t>(d), inv(x)) = c;
    push_deduction(c, x);
  }

  // Dropped deductions are harmless: the main loop rescans every coset and
  // the final table is verified independently.
  void push_deduction(int c, int x) {
    if (deductions_.size() < 10'000) deductions_.emplace_back(c, x);
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(static_cast<std::size_t>(c))) continue;
      for (std::size_t i : starting_[static_cast<std::size_t>(x)]) {
        if (!live(static_cast<std::size_t>(c))) break;
        scan(static_cast<std::size_t>(c), rotations_[i], false);
      }
      const int d = at(static_cast<std::size_t>(c), x);
      if (d < 0 || !live(static_cast<std::size_t>(d))) continue;
      for (std::size_t i : starting_[static_cast<std::size_t>(inv(x))]) {
        if (!live(static_cast<std::size_t>(d))) break;
        scan(static_cast<std::size_t>(d), rotations_[i], false);
      }
    }
  }

  // Trace w from c forwards and backwards; close a one-letter gap by
  // deduction, merge on collision, and (if fill) define to bridge longer gaps.
  void scan(std::size_t c, const std::vector<int>& w, bool fill) {
    int f = static_cast<int>(c), b = static_cast<int>(c);
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]) >= 0)
        f = at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(static_cast<std::size_t>(b), inv(w[static_cast<std::size_t>(j)])) >= 0)
        b = at(static_cast<std::size_t>(b), inv(w[static_cast<std::size_t>(j--)]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[static_cast<std::size_t>(i)], b);
        return;
      }
      if (!fill) return;
      define(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]);
    }
  }

  int rep(int c) {
    int r = c;
    while (forward_[static_cast<std::size_t>(r)] != r) r = forward_[static_cast<std::size_t>(r)];
    while (forward_[static_cast<std::size_t>(c)] != r) {
      const int next = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int a = rep(k), b = rep(l);
    if (a == b) return;
    const int lo = std::min(a, b), hi = std::max(a, b);
    forward_[static_cast<std::size_t>(hi)] = lo;
    --live_count_;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int g = queue[q];
      for (int x = 0; x < columns_; ++x) {
        const int d = at(static_cast<std::size_t>(g), x);
        if (d < 0) continue;
        at(static_cast<std::size_t>(d), inv(x)) = -1;
        const int mu = rep(g), nu = rep(d);
        if (at(static_cast<std::size_t>(mu), x) >= 0) {
          merge(nu, at(static_cast<std::size_t>(mu), x), queue);
        } else if (at(static_cast<std::size_t>(nu), inv(x)) >= 0) {
          merge(mu, at(static_cast<std::size_t>(nu), inv(x)), queue);
        } else {
          set(mu, x, nu);
        }
      }
    }
  }

  bool verify() {
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < columns_; ++x) {
        const int d = at(c, x);
        if (d < 0 || !live(static_cast<std::size_t>(d)) || at(static_cast<std::size_t>(d), inv(x)) != static_cast<int>(c))
          return false;
      }
      for (const auto& r : relators_) {
        int f = static_cast<int>(c);
        for (int x : r) f = at(static_cast<std::size_t>(f), x);
        if (f != static_cast<int>(c)) return false;
      }
    }
    return true;
  }

  int columns_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> rotations_;
  std::vector<std::vector<std::size_t>> starting_;
  std::size_t max_live_;
  std::size_t live_count_ = 0;
  std::vector<int> table_;
  std::vector<int> forward_;
  std::vector<std::pair<int, int>> deductions_;
};

}  // namespace

std::optional<std::size_t> coset_enumerate(const Presentation& p, const CosetOptions& options) {
  if (options.max_cosets == 0) throw std::invalid_argument("max_cosets must be at least 1");
  p.validate();
  if (p.rank() == 0) return 1;

  // column 2(g-1) is g, column 2(g-1)+1 is g^-1
  std::vector<std::vector<int>> relators;
  for (const auto& r : p.relators) {
    const Word c = cyclically_reduce(r);
    if (c.is_identity()) continue;
    if (c.letter_count() > options.max_relator_letters) return std::nullopt;
    std::vector<int> seq;
    for (const auto& l : c.letters()) {
      const int column = 2 * (l.generator - 1) + (l.exponent < 0 ? 1 : 0);
      for (auto k = abs_value(l.exponent); k > 0; --k) seq.push_back(column);
    }
    relators.push_back(std::move(seq));
  }
  return CosetTable(2 * p.rank(), std::move(relators), options.max_cosets).run();
}

}  // namespace lefschetz
