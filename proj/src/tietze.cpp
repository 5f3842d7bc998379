#include "lefschetz/tietze.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>

namespace lefschetz {

namespace {

Word substitute_one(const Word& w, int generator, const Word& value) {
  if (!w.uses_generator(generator)) return w;
  Word out;
  for (const auto& l : w.letters()) {
    if (l.generator == generator)
      out *= value.pow(l.exponent);
    else
      out *= Word::generator(l.generator, l.exponent);
  }
  return out;
}

// Signed letter expansion: +g for g, -g for g^-1.
std::vector<int> expand(const Word& w) {
  std::vector<int> seq;
  for (const auto& l : w.letters()) {
    const int sign = l.exponent > 0 ? 1 : -1;
    const auto count = static_cast<long long>(abs_value(l.exponent));
    for (long long k = 0; k < count; ++k) seq.push_back(sign * l.generator);
  }
  return seq;
}

Word collapse(const std::vector<int>& seq) {
  std::vector<Letter> raw;
  raw.reserve(seq.size());
  for (int x : seq) raw.push_back({x > 0 ? x : -x, x > 0 ? 1 : -1});
  return Word::reduce(raw);
}

std::vector<int> invert(const std::vector<int>& seq) {
  std::vector<int> out(seq.rbegin(), seq.rend());
  for (int& x : out) x = -x;
  return out;
}

class Simplifier {
 public:
  Simplifier(const Presentation& p, const TietzeOptions& options)
      : names_(p.generators),
        alive_(p.generators.size() + 1, true),
        protected_(p.generators.size() + 1, false),
        options_(options) {
    alive_[0] = false;
    for (int g : options.protected_generators)
      if (g >= 1 && g <= p.rank()) protected_[g] = true;
    relators_ = p.relators;
    for (int g = 1; g <= p.rank(); ++g) images_.push_back(Word::generator(g));
  }

  TietzeResult run(std::size_t budget) {
    TietzeResult result;
    bool converged = false;
    for (std::size_t pass = 0; pass < budget; ++pass) {
      ++result.passes;
      bool changed = cleanup();
      while (eliminate_one()) {
        changed = true;
        cleanup();
      }
      if (options_.rewrite_relators && rewrite_pass()) changed = true;
      if (!changed) {
        converged = true;
        break;
      }
    }
    result.budget_exhausted = !converged;
    compact(result);
    return result;
  }

 private:
  bool cleanup() {
    std::vector<Word> kept;
    std::set<Word> seen;
    for (const auto& r : relators_) {
      Word c = cyclically_reduce(r);
      if (c.is_identity()) continue;
      if (!seen.insert(cyclic_canonical(c)).second) continue;
      kept.push_back(std::move(c));
    }
    const bool changed = kept != relators_;
    relators_ = std::move(kept);
    return changed;
  }

  bool eliminate_one() {
    // (letter length, -generator, relator index, syllable index)
    std::optional<std::tuple<Integer, int, std::size_t, std::size_t>> best;
    for (std::size_t ri = 0; ri < relators_.size(); ++ri) {
      const auto& ls = relators_[ri].letters();
      std::map<int, std::pair<int, std::size_t>> seen;  // generator -> (occurrences, syllable)
      for (std::size_t k = 0; k < ls.size(); ++k) {
        auto& entry = seen[ls[k].generator];
        ++entry.first;
        entry.second = k;
      }
      const Integer len = relators_[ri].letter_count();
      for (const auto& [g, entry] : seen) {
        if (entry.first != 1 || protected_[g]) continue;
        if (abs_value(ls[entry.second].exponent) != 1) continue;
        auto candidate = std::make_tuple(len, -g, ri, entry.second);
        if (!best || candidate < *best) best = candidate;
      }
    }
    if (!best) return false;

    const auto& [len, neg_g, ri, k] = *best;
    const int g = -neg_g;
    const auto& ls = relators_[ri].letters();
    std::vector<Letter> rest(ls.begin() + static_cast<std::ptrdiff_t>(k) + 1, ls.end());
    rest.insert(rest.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
    // g^e * rest = 1
    Word tail = Word::reduce(rest);
    Word value = ls[k].exponent > 0 ? tail.inverse() : tail;

    relators_.erase(relators_.begin() + static_cast<std::ptrdiff_t>(ri));
    for (auto& r : relators_) r = substitute_one(r, g, value);
    for (auto& im : images_) im = substitute_one(im, g, value);
    alive_[g] = false;
    return true;
  }

  std::optional<Word> shorten(const std::vector<int>& seq, const std::vector<int>& other) {
    const std::size_t L = seq.size(), M = other.size();
    std::vector<std::vector<int>> variants;
    const std::vector<int> inv = invert(other);
    for (std::size_t s = 0; s < M; ++s) {
      std::vector<int> v(other.begin() + static_cast<std::ptrdiff_t>(s), other.end());
      v.insert(v.end(), other.begin(), other.begin() + static_cast<std::ptrdiff_t>(s));
      variants.push_back(v);
      std::vector<int> w(inv.begin() + static_cast<std::ptrdiff_t>(s), inv.end());
      w.insert(w.end(), inv.begin(), inv.begin() + static_cast<std::ptrdiff_t>(s));
      variants.push_back(std::move(w));
    }
    for (const auto& v : variants) {
      for (std::size_t start = 0; start < L; ++start) {
        std::size_t m = 0;
        while (m < M && m < L && seq[(start + m) % L] == v[m]) ++m;
        if (2 * m <= M) continue;
        // v[0..m) = v[m..M)^-1 modulo the relator `other`.
        std::vector<int> out = invert(std::vector<int>(v.begin() + static_cast<std::ptrdiff_t>(m), v.end()));
        for (std::size_t t = 0; t < L - m; ++t) out.push_back(seq[(start + m + t) % L]);
        Word candidate = cyclically_reduce(collapse(out));
        if (candidate.letter_count() < L) return candidate;
      }
    }
    return std::nullopt;
  }

  bool rewrite_pass() {
    bool changed = false;
    const Integer limit = options_.rewrite_length_limit;
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      bool improved = true;
      while (improved) {
        improved = false;
        const Integer L = relators_[i].letter_count();
        if (L > limit || L == 0) break;
        const std::vector<int> seq = expand(relators_[i]);
        for (std::size_t j = 0; j < relators_.size() && !improved; ++j) {
          if (j == i) continue;
          const Integer M = relators_[j].letter_count();
          if (M >= L || M == 0) continue;
          if (auto shorter = shorten(seq, expand(relators_[j]))) {
            relators_[i] = std::move(*shorter);
            improved = changed = true;
          }
        }
      }
    }
    return changed;
  }

  void compact(TietzeResult& result) {
    std::map<int, Word> reindex;
    Presentation& out = result.presentation;
    for (std::size_t g = 1; g < alive_.size(); ++g) {
      if (!alive_[g]) continue;
      out.generators.push_back(names_[g - 1]);
      reindex[static_cast<int>(g)] = Word::generator(out.rank());
    }
    for (const auto& r : relators_) out.relators.push_back(substitute(r, reindex));
    for (const auto& im : images_) result.images.push_back(substitute(im, reindex));
  }

  std::vector<std::string> names_;
  std::vector<bool> alive_;
  std::vector<bool> protected_;
  TietzeOptions options_;
  std::vector<Word> relators_;
  std::vector<Word> images_;
};

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, std::size_t budget, const TietzeOptions& options) {
  if (budget == 0) throw std::invalid_argument("tietze budget must be positive");
  p.validate();
  return Simplifier(p, options).run(budget);
}

}  // namespace lefschetz
