#include "lefschetz/surface.hpp"

#include <stdexcept>

#include "lefschetz/symplectic.hpp"

namespace lefschetz {

SurfaceGroup::SurfaceGroup(int genus) : genus_(genus) {
  if (genus < 1) throw std::out_of_range("surface genus must be >= 1, got " + std::to_string(genus));
  names_ = indexed_names("a", genus);
  for (auto& n : indexed_names("b", genus)) names_.push_back(n);
}

Word SurfaceGroup::a(int i) const {
  if (i == 0 || i == genus_ + 1) return Word();
  if (i < 1 || i > genus_) throw std::out_of_range("a_" + std::to_string(i) + " out of range");
  return Word::generator(i);
}

Word SurfaceGroup::b(int i) const {
  if (i < 1 || i > genus_) throw std::out_of_range("b_" + std::to_string(i) + " out of range");
  return Word::generator(genus_ + i);
}

Word SurfaceGroup::c_or_identity(int i) const {
  Word out;
  for (int t = i; t >= 1; --t) out *= b(t).inverse();
  for (int t = 1; t <= i; ++t) out *= a(t) * b(t) * a(t).inverse();
  return out;
}

Word SurfaceGroup::relator() const { return c_or_identity(genus_); }

Presentation SurfaceGroup::presentation() const { return Presentation{names_, {relator()}}; }

Word SurfaceGroup::c_curve(int i) const {
  if (i < 1 || i > genus_) throw std::out_of_range("c_" + std::to_string(i) + " out of range 1.." + std::to_string(genus_));
  return c_or_identity(i);
}

Word SurfaceGroup::chain_curve(int index) const {
  if (index < 0 || index > genus_)
    throw std::out_of_range("B_" + std::to_string(index) + " out of range 0.." + std::to_string(genus_));
  const int k = index / 2;
  Word chain;
  for (int t = k + 1; t <= genus_ - k; ++t) chain *= b(t);
  chain *= c_or_identity(genus_ - k);
  if (index % 2 == 0) return a(k) * chain * a(genus_ - k + 1);
  return a(k + 1) * chain * a(genus_ - k);
}

SurfaceGroup::AbcCurves SurfaceGroup::abc_curves() const {
  AbcCurves out;
  if (genus_ % 2 == 1) {
    out.a = a((genus_ + 1) / 2);
    out.b = c_or_identity((genus_ - 1) / 2) * a((genus_ + 1) / 2);
  } else {
    out.c = c_curve(genus_ / 2);
  }
  return out;
}

std::vector<Word> SurfaceGroup::w_cycles() const {
  std::vector<Word> half;
  const auto abc = abc_curves();
  if (genus_ % 2 == 0) {
    half.push_back(*abc.c);
  } else {
    half.insert(half.end(), {*abc.a, *abc.a, *abc.b, *abc.b});
  }
  for (int j = genus_; j >= 0; --j) half.push_back(chain_curve(j));
  std::vector<Word> out = half;
  out.insert(out.end(), half.begin(), half.end());
  return out;
}

HomologyClass SurfaceGroup::homology_class(const Word& w) const { return exponent_sums(w, 2 * genus_); }

WHomologyCertificate verify_w_homology(int genus, std::optional<std::size_t> drop) {
  const SurfaceGroup s(genus);
  WHomologyCertificate cert;
  cert.genus = genus;
  cert.cycles = s.w_cycles();
  if (drop) {
    if (*drop >= cert.cycles.size()) throw std::out_of_range("no twist at position " + std::to_string(*drop));
    cert.cycles.erase(cert.cycles.begin() + static_cast<std::ptrdiff_t>(*drop));
  }
  cert.all_factors_symplectic = true;
  for (const auto& c : cert.cycles) {
    cert.classes.push_back(s.homology_class(c));
    cert.factors.push_back(transvection(cert.classes.back()));
    cert.all_factors_symplectic = cert.all_factors_symplectic && is_symplectic(cert.factors.back());
  }
  cert.product = twist_product(cert.classes, genus);
  cert.passed = cert.all_factors_symplectic && cert.product == SymplecticMatrix::Identity(2 * genus, 2 * genus);
  return cert;
}

}  // namespace lefschetz
