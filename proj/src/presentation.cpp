#include "lefschetz/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lefschetz {

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& name : generators) {
    if (!is_identifier(name)) throw std::invalid_argument("invalid generator name '" + name + "'");
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate generator '" + name + "'");
  }
  for (const auto& r : relators)
    if (r.max_generator() > rank())
      throw std::invalid_argument("relator uses generator " + std::to_string(r.max_generator()) +
                                  " beyond rank " + std::to_string(rank()));
}

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on commas, keeping the absolute offset of each piece.
std::vector<std::pair<std::string_view, std::size_t>> split_commas(std::string_view s, std::size_t base) {
  std::vector<std::pair<std::string_view, std::size_t>> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      parts.emplace_back(s.substr(start, i - start), base + start);
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::size_t offset = 0;
  std::string_view body = trim(text, offset);
  if (body.empty() || body.front() != '<') throw ParseError("expected '<'", offset);
  if (body.back() != '>') throw ParseError("expected '>'", offset + body.size());
  body = body.substr(1, body.size() - 2);
  ++offset;
  const auto bar = body.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected '|'", offset + body.size());

  Presentation p;
  std::size_t names_offset = offset;
  std::string_view names = trim(body.substr(0, bar), names_offset);
  if (!names.empty()) {
    for (auto [piece, at] : split_commas(names, names_offset)) {
      std::size_t piece_offset = at;
      std::string_view name = trim(piece, piece_offset);
      if (!is_identifier(name)) throw ParseError("invalid generator name", piece_offset);
      if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end())
        throw ParseError("duplicate generator '" + std::string(name) + "'", piece_offset);
      p.generators.emplace_back(name);
    }
  }

  std::size_t rel_offset = offset + bar + 1;
  std::string_view rels = trim(body.substr(bar + 1), rel_offset);
  if (!rels.empty()) {
    for (auto [piece, at] : split_commas(rels, rel_offset)) {
      try {
        p.relators.push_back(parse_word(piece, p.generators));
      } catch (const ParseError& e) {
        std::string msg = e.what();
        msg = msg.substr(0, msg.rfind(" at position"));
        throw ParseError(msg, at + e.position());
      }
    }
  }
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ',';
    out += p.generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += format_word(p.relators[i], p.generators);
  }
  out += '>';
  return out;
}

bool same_relators_up_to_cyclic(const std::vector<Word>& lhs, const std::vector<Word>& rhs) {
  auto canon = [](const std::vector<Word>& ws) {
    std::vector<Word> out;
    out.reserve(ws.size());
    for (const auto& w : ws) out.push_back(cyclic_canonical(w));
    std::sort(out.begin(), out.end());
    return out;
  };
  return canon(lhs) == canon(rhs);
}

}  // namespace lefschetz
