#include "lefschetz/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace lefschetz {

Word Word::generator(int index, const Integer& exponent) {
  if (index < 1) throw std::invalid_argument("generator index must be >= 1");
  Word w;
  if (exponent != 0) w.letters_.push_back({index, exponent});
  return w;
}

void Word::push(int generator, Integer exponent) {
  if (exponent == 0) return;
  if (!letters_.empty() && letters_.back().generator == generator) {
    letters_.back().exponent += exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({generator, std::move(exponent)});
}

Word Word::reduce(std::span<const Letter> raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (const auto& l : raw) {
    if (l.generator < 1) throw std::invalid_argument("generator index must be >= 1");
    w.push(l.generator, l.exponent);
  }
  return w;
}

Integer Word::letter_count() const {
  Integer n = 0;
  for (const auto& l : letters_) n += abs_value(l.exponent);
  return n;
}

int Word::max_generator() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

bool Word::uses_generator(int index) const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [index](const Letter& l) { return l.generator == index; });
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->generator, -it->exponent});
  return w;
}

Word Word::pow(const Integer& exponent) const {
  if (exponent == 0 || is_identity()) return {};
  Word base = exponent < 0 ? inverse() : *this;
  Integer e = abs_value(exponent);
  if (letters_.size() == 1) return generator(letters_[0].generator, letters_[0].exponent * exponent);
  Word result;
  while (e > 0) {
    if ((e & 1) != 0) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Word& Word::operator*=(const Word& rhs) {
  if (this == &rhs) {
    Word copy = rhs;
    return *this *= copy;
  }
  for (const auto& l : rhs.letters_) push(l.generator, l.exponent);
  return *this;
}

bool operator<(const Word& lhs, const Word& rhs) {
  return std::lexicographical_compare(
      lhs.letters_.begin(), lhs.letters_.end(), rhs.letters_.begin(), rhs.letters_.end(),
      [](const Letter& a, const Letter& b) {
        if (a.generator != b.generator) return a.generator < b.generator;
        return a.exponent < b.exponent;
      });
}

Word conjugate(const Word& x, const Word& y) { return y.inverse() * x * y; }

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

Word substitute(const Word& w, const std::map<int, Word>& images) {
  Word out;
  for (const auto& l : w.letters()) {
    auto it = images.find(l.generator);
    if (it == images.end())
      throw std::out_of_range("no image for generator " + std::to_string(l.generator));
    out *= it->second.pow(l.exponent);
  }
  return out;
}

Word substitute(const Word& w, std::span<const Word> images) {
  Word out;
  for (const auto& l : w.letters()) {
    if (static_cast<std::size_t>(l.generator) > images.size())
      throw std::out_of_range("no image for generator " + std::to_string(l.generator));
    out *= images[l.generator - 1].pow(l.exponent);
  }
  return out;
}

IntVector<Integer> exponent_sums(const Word& w, int rank) {
  IntVector<Integer> v = IntVector<Integer>::Zero(rank);
  for (const auto& l : w.letters()) {
    if (l.generator > rank)
      throw std::out_of_range("generator " + std::to_string(l.generator) +
                              " exceeds rank " + std::to_string(rank));
    v(l.generator - 1) += l.exponent;
  }
  return v;
}

Word cyclically_reduce(const Word& w) {
  std::vector<Letter> ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  // Peel matching ends; a merged end syllable either cancels or stays at the front.
  while (hi - lo >= 2 && ls[lo].generator == ls[hi - 1].generator) {
    Integer merged = ls[lo].exponent + ls[hi - 1].exponent;
    --hi;
    if (merged == 0) {
      ++lo;
      continue;
    }
    ls[lo].exponent = merged;
    break;
  }
  return Word::reduce(std::span<const Letter>(ls.data() + lo, hi - lo));
}

namespace {

Word least_rotation(const Word& w) {
  const auto& ls = w.letters();
  Word best = w;
  for (std::size_t k = 1; k < ls.size(); ++k) {
    std::vector<Letter> rot(ls.begin() + k, ls.end());
    rot.insert(rot.end(), ls.begin(), ls.begin() + k);
    Word candidate = Word::reduce(rot);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace

Word cyclic_canonical(const Word& w) {
  Word r = cyclically_reduce(w);
  Word a = least_rotation(r);
  Word b = least_rotation(r.inverse());
  return b < a ? b : a;
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Word parse_word(std::string_view text, std::span<const std::string> names) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw ParseError("empty word (use 1 for the identity)", i);
  while (i < text.size()) {
    const std::size_t start = i;
    if (text[i] == '1' && (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      skip_space();
      continue;
    }
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    std::string_view name = text.substr(start, i - start);
    if (!is_identifier(name)) throw ParseError("expected generator name", start);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError("unknown generator '" + std::string(name) + "'", start);
    Integer exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t num_start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      const std::size_t digits_start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits_start) throw ParseError("expected integer exponent", num_start);
      std::string digits(text.substr(num_start, i - num_start));
      if (digits[0] == '+') digits.erase(0, 1);
      exponent = Integer(digits);
      if (exponent == 0) throw ParseError("exponent must be nonzero", num_start);
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
    raw.push_back({static_cast<int>(it - names.begin()) + 1, exponent});
    skip_space();
  }
  return Word::reduce(raw);
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (static_cast<std::size_t>(l.generator) > names.size())
      throw std::out_of_range("no name for generator " + std::to_string(l.generator));
    if (!out.empty()) out += ' ';
    out += names[l.generator - 1];
    if (l.exponent != 1) {
      out += '^';
      out += l.exponent.str();
    }
  }
  return out;
}

std::vector<std::string> indexed_names(std::string_view stem, int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 1; i <= count; ++i) names.push_back(std::string(stem) + std::to_string(i));
  return names;
}

}  // namespace lefschetz
