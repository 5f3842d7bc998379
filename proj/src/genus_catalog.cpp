#include "lefschetz/genus_catalog.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "lefschetz/coset.hpp"

namespace lefschetz {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kNames{{
    {Family::Braid, "braid"},
    {Family::Hyperelliptic, "hyperelliptic"},
    {Family::SphereMcg, "sphere-mcg"},
    {Family::Symmetric, "symmetric"},
    {Family::Artin, "artin"},
    {Family::Abelian, "abelian"},
    {Family::Surface, "surface"},
    {Family::SmallAbelian, "small-abelian"},
}};

const std::vector<std::string> kXyz{"x", "y", "z"};

Word gen(int i, long long e = 1) { return Word::generator(i, e); }
Word x(long long e = 1) { return gen(1, e); }
Word y(long long e = 1) { return gen(2, e); }

/// s_i = y^{i-1} x y^{1-i}.
Word sigma(int i) { return y(i - 1) * x() * y(1 - i); }

/// Relators shared by every braid quotient: far commutation for
/// 2 <= k <= top, the braid relation (when s_2 exists) and (xy)^{n-1} y^{-n}.
std::vector<Word> braid_part(long long top, bool has_s2, long long n) {
  std::vector<Word> out;
  for (long long k = 2; k <= top; ++k) out.push_back(x() * y(k) * x() * y(-k) * x(-1) * y(k) * x(-1) * y(-k));
  if (has_s2) {
    out.push_back(x() * y() * x() * y(-1) * x() * y() * x(-1) * y(-1) * x(-1) * y() * x(-1) * y(-1));
  }
  out.push_back((x() * y()).pow(n - 1) * y(-n));
  return out;
}

Presentation xy(std::vector<Word> relators, int rank = 2) {
  return Presentation{{kXyz.begin(), kXyz.begin() + rank}, std::move(relators)};
}

struct AbelianParams {
  int n, k;
  std::vector<long long> m;
};

AbelianParams abelian_params(const FamilySpec& spec) {
  const auto& p = spec.params;
  return {static_cast<int>(p[0]), static_cast<int>(p[1]), std::vector<long long>(p.begin() + 2, p.end())};
}

Presentation standard_abelian(int n, int k, const std::vector<long long>& m) {
  Presentation out;
  out.generators = indexed_names("e", n + k);
  for (int i = 1; i <= n + k; ++i)
    for (int j = i + 1; j <= n + k; ++j) out.relators.push_back(commutator(gen(i), gen(j)));
  for (int i = 1; i <= k; ++i) out.relators.push_back(gen(i, m[i - 1]));
  return out;
}

AbelianInvariants abelian_target(int n, const std::vector<long long>& m) {
  std::vector<Integer> orders(n, Integer(0));
  for (long long v : m) orders.emplace_back(v);
  return AbelianInvariants::from_cyclic_orders(orders);
}

// Permutations on {0..n-1}; compose(p, q) applies p first.
using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
  return out;
}

Perm invert(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

Perm evaluate(const Word& w, const std::vector<Perm>& images) {
  const std::size_t deg = images.front().size();
  Perm out(deg);
  std::iota(out.begin(), out.end(), 0);
  for (const auto& l : w.letters()) {
    const Perm& base = l.exponent > 0 ? images[l.generator - 1] : invert(images[l.generator - 1]);
    for (Integer e = abs_value(l.exponent); e > 0; --e) out = compose(out, base);
  }
  return out;
}

std::vector<Perm> transposition_images(int n) {
  // x = (1 2), y = (1 2)(2 3)...(n-1 n) applied left to right
  Perm ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  Perm xs = ident;
  std::swap(xs[0], xs[1]);
  Perm ys = ident;
  for (int i = 0; i + 1 < n; ++i) {
    Perm t = ident;
    std::swap(t[i], t[i + 1]);
    ys = compose(ys, t);
  }
  return {xs, ys};
}

bool is_identity_perm(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// Artin action of s_i^{sign} on the free group of rank n.
std::vector<Word> artin_generator_images(int n, int i, int sign) {
  std::vector<Word> images;
  for (int j = 1; j <= n; ++j) images.push_back(gen(j));
  if (sign > 0) {
    images[i - 1] = gen(i) * gen(i + 1) * gen(i, -1);
    images[i] = gen(i);
  } else {
    images[i - 1] = gen(i + 1);
    images[i] = gen(i + 1, -1) * gen(i) * gen(i + 1);
  }
  return images;
}

void finish(FamilyCertificate& c) {
  c.passed = !c.checks.empty();
  for (const auto& ch : c.checks) c.passed = c.passed && ch.holds;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::out_of_range(what);
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames)
    if (fam == f) return name;
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : kNames)
    if (n == name) return fam;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& [fam, name] : kNames) out.push_back(fam);
  return out;
}

void FamilySpec::validate() const {
  const std::string name(family_name(family));
  auto one = [&](long long lo, const char* what) {
    require(params.size() == 1, name + " takes one parameter (" + what + ")");
    require(params[0] >= lo, name + ": " + what + " = " + std::to_string(params[0]) + " is out of range (need >= " +
                                 std::to_string(lo) + ")");
    require(params[0] <= 4096, name + ": " + what + " is unreasonably large");
  };
  switch (family) {
    case Family::Braid:
    case Family::SphereMcg:
    case Family::Symmetric:
      return one(2, "n");
    case Family::Artin:
      return one(5, "n");
    case Family::Hyperelliptic:
      return one(1, "g");
    case Family::Surface:
      return one(0, "g");
    case Family::Abelian:
    case Family::SmallAbelian: {
      require(params.size() >= 2, name + " takes n, k, m_1..m_k");
      const long long n = params[0], k = params[1];
      require(n >= 0 && k >= 0 && n <= 64 && k <= 64, name + ": n and k must lie in [0, 64]");
      require(params.size() == static_cast<std::size_t>(2 + k), name + ": expected " + std::to_string(k) + " orders m_i");
      for (std::size_t i = 2; i < params.size(); ++i) require(params[i] >= 2, name + ": every m_i must be >= 2");
      if (family == Family::Abelian)
        require(n + k >= 3, "abelian: n + k must be >= 3 (use small-abelian below that)");
      else
        require(n + k <= 2, "small-abelian: n + k must be <= 2");
      return;
    }
  }
}

std::string format_bounds(const GenusBounds& b) {
  if (b.exact) return "exact " + std::to_string(b.lower);
  return "[" + std::to_string(b.lower) + "," + (b.upper ? std::to_string(*b.upper) : std::string("inf")) + "]";
}

Presentation family_presentation(const FamilySpec& spec) {
  spec.validate();
  const long long p = spec.params[0];
  switch (spec.family) {
    case Family::Braid:
      return xy(braid_part(p - 2, p >= 3, p));
    case Family::Hyperelliptic: {
      auto r = braid_part(2 * p, true, 2 * p + 2);
      const Word yx = y(-1) * x();
      r.push_back(y(2 * p + 2));
      r.push_back(yx.pow(4 * p + 2));
      r.push_back(yx.pow(2 * p + 1) * (y() * x(-1)).pow(2 * p + 1));
      return xy(std::move(r));
    }
    case Family::SphereMcg: {
      auto r = braid_part(p - 2, p >= 3, p);
      r.push_back(y(p));
      r.push_back((y(-1) * x()).pow(p - 1));
      return xy(std::move(r));
    }
    case Family::Symmetric: {
      auto r = braid_part(p - 2, p >= 3, p);
      r.push_back(x(2));
      return xy(std::move(r));
    }
    case Family::Artin: {
      auto r = braid_part(p - 2, true, p);
      const Word z = gen(3);
      const Word s4 = sigma(4);
      r.push_back(s4 * z * s4 * z.inverse() * s4.inverse() * z.inverse());
      for (int i = 1; i <= p - 1; ++i)
        if (i != 4) r.push_back(z * sigma(i) * z.inverse() * sigma(i).inverse());
      return xy(std::move(r), 3);
    }
    case Family::Surface:
      if (p == 0) return Presentation{};
      return SurfaceGroup(static_cast<int>(p)).presentation();
    case Family::Abelian:
    case Family::SmallAbelian: {
      const auto a = abelian_params(spec);
      return standard_abelian(a.n, a.k, a.m);
    }
  }
  throw std::logic_error("unhandled family");
}

GenusBounds genus_bounds(const FamilySpec& spec) {
  spec.validate();
  const long long p = spec.params[0];
  const GenusBounds two_four{2, 4, false};
  switch (spec.family) {
    case Family::Braid:
      return p == 2 ? GenusBounds{1, 1, true} : two_four;
    case Family::SphereMcg:
    case Family::Symmetric:
      // both degenerate to Z_2 at n = 2
      return p == 2 ? GenusBounds{2, 2, true} : two_four;
    case Family::Hyperelliptic:
      return two_four;
    case Family::Artin:
      return GenusBounds{2, 5, false};
    case Family::Surface:
      return GenusBounds{static_cast<int>(p), static_cast<int>(p), true};
    case Family::Abelian: {
      const int total = static_cast<int>(spec.params[0] + spec.params[1]);
      return GenusBounds{(total + 2) / 2, total + 1, false};
    }
    case Family::SmallAbelian: {
      const auto a = abelian_params(spec);
      const auto inv = abelian_target(a.n, a.m);
      int g = 2;
      if (inv.generator_count() == 0)
        g = 0;
      else if (inv.free_rank == 2 || (inv.free_rank == 1 && inv.torsion.size() <= 1))
        g = 1;
      return GenusBounds{g, g, true};
    }
  }
  throw std::logic_error("unhandled family");
}

// ---------------------------------------------------------------------------

FamilyCertificate braid_relator_check(int n, const std::vector<Word>& relators) {
  require(n >= 2 && n <= 8, "braid check: n = " + std::to_string(n) + " is out of range [2, 8]");
  FamilyCertificate cert{"braid", n, {}, std::nullopt, false};
  // braid letters of x and y
  const std::vector<int> x_letters{1};
  std::vector<int> y_letters;
  for (int i = 1; i < n; ++i) y_letters.push_back(i);

  for (const auto& r : relators) {
    if (r.max_generator() > 2) throw std::invalid_argument("braid relators use x and y only");
    std::vector<Word> phi;
    for (int j = 1; j <= n; ++j) phi.push_back(gen(j));
    auto apply = [&](int i, int sign) {
      const auto base = artin_generator_images(n, i, sign);
      std::vector<Word> next;
      next.reserve(n);
      for (const auto& w : base) next.push_back(substitute(w, std::span<const Word>(phi)));
      phi = std::move(next);
    };
    for (const auto& l : r.letters()) {
      const auto& block = l.generator == 1 ? x_letters : y_letters;
      for (Integer e = abs_value(l.exponent); e > 0; --e) {
        if (l.exponent > 0)
          for (int i : block) apply(i, 1);
        else
          for (auto it = block.rbegin(); it != block.rend(); ++it) apply(*it, -1);
      }
    }
    RelatorCheck check{format_word(r, kXyz), true, ""};
    const auto names = indexed_names("t", n);
    for (int j = 1; j <= n; ++j) {
      if (phi[j - 1] != gen(j)) {
        check.holds = false;
        check.detail = names[j - 1] + " -> " + format_word(phi[j - 1], names);
        break;
      }
    }
    cert.checks.push_back(std::move(check));
  }
  finish(cert);
  return cert;
}

FamilyCertificate braid_relator_check(int n) {
  require(n >= 2 && n <= 8, "braid check: n = " + std::to_string(n) + " is out of range [2, 8]");
  return braid_relator_check(n, family_presentation({Family::Braid, {n}}).relators);
}

FamilyCertificate symmetric_relator_check(int n) {
  require(n >= 2 && n <= 8, "symmetric check: n = " + std::to_string(n) + " is out of range [2, 8]");
  FamilyCertificate cert{"symmetric", n, {}, std::nullopt, false};
  const Presentation p = family_presentation({Family::Symmetric, {n}});
  const auto images = transposition_images(n);
  for (const auto& r : p.relators) {
    const Perm v = evaluate(r, images);
    cert.checks.push_back({format_word(r, kXyz), is_identity_perm(v), ""});
  }
  if (n <= 5) {
    std::size_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= static_cast<std::size_t>(i);
    cert.order = coset_enumerate(p);
    const bool ok = cert.order && *cert.order == factorial;
    cert.checks.push_back({"order " + std::to_string(factorial), ok,
                           cert.order ? "enumerated " + std::to_string(*cert.order) : "enumeration inconclusive"});
  }
  finish(cert);
  return cert;
}

FamilyCertificate sphere_mcg_check(int n) {
  require(n >= 2 && n <= 8, "sphere-mcg check: n = " + std::to_string(n) + " is out of range [2, 8]");
  const Presentation p = family_presentation({Family::SphereMcg, {n}});
  const std::size_t braid_count = braid_part(n - 2, n >= 3, n).size();
  const std::vector<Word> braid_rels(p.relators.begin(), p.relators.begin() + static_cast<long>(braid_count));
  FamilyCertificate cert = braid_relator_check(n, braid_rels);
  cert.family = "sphere-mcg";
  const auto images = transposition_images(n);
  for (std::size_t i = braid_count; i < p.relators.size(); ++i)
    cert.checks.push_back({"S_" + std::to_string(n) + ": " + format_word(p.relators[i], kXyz),
                           is_identity_perm(evaluate(p.relators[i], images)), ""});
  if (n <= 3) {
    const std::size_t expected = n == 2 ? 2 : 6;
    cert.order = coset_enumerate(p);
    cert.checks.push_back({"order " + std::to_string(expected), cert.order == std::optional<std::size_t>(expected),
                           cert.order ? "enumerated " + std::to_string(*cert.order) : "enumeration inconclusive"});
  }
  finish(cert);
  return cert;
}

Presentation artin_sigma_presentation(int n) {
  require(n >= 5, "artin: n = " + std::to_string(n) + " is out of range (need >= 5)");
  Presentation out;
  out.generators = indexed_names("s", n - 1);
  out.generators.push_back("tau");
  const Word tau = gen(n);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) out.relators.push_back(commutator(gen(i), gen(j)));
  for (int i = 1; i <= n - 2; ++i)
    out.relators.push_back(gen(i) * gen(i + 1) * gen(i) * gen(i + 1, -1) * gen(i, -1) * gen(i + 1, -1));
  out.relators.push_back(gen(4) * tau * gen(4) * tau.inverse() * gen(4, -1) * tau.inverse());
  for (int i = 1; i <= n - 1; ++i)
    if (i != 4) out.relators.push_back(commutator(tau, gen(i)));
  return out;
}

FamilyCertificate artin_invariant_check(int n, const std::vector<FiniteGroupTable>& battery) {
  require(n >= 5 && n <= 7, "artin check: n = " + std::to_string(n) + " is out of range [5, 7]");
  FamilyCertificate cert{"artin", n, {}, std::nullopt, false};
  const Presentation xyz = family_presentation({Family::Artin, {n}});
  const Presentation sig = artin_sigma_presentation(n);
  const auto ab = abelianization(xyz);
  cert.checks.push_back({"abelianization", ab == abelianization(sig), format_abelian(ab)});
  for (const auto& grp : battery) {
    const auto a = hom_count(xyz, grp), b = hom_count(sig, grp);
    cert.checks.push_back({"hom " + grp.name(), a == b, std::to_string(a) + " vs " + std::to_string(b)});
  }
  finish(cert);
  return cert;
}

Word reduce_power_modulo(const Word& w, int generator, const Integer& modulus) {
  if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
  Word current = w;
  for (;;) {
    std::vector<Letter> raw;
    for (const auto& l : current.letters()) {
      if (l.generator != generator) {
        raw.push_back(l);
        continue;
      }
      Integer e = l.exponent % modulus;
      if (e < 0) e += modulus;
      if (2 * e > modulus) e -= modulus;
      raw.push_back({l.generator, e});
    }
    Word next = Word::reduce(raw);
    if (next == current) return next;
    current = std::move(next);
  }
}

FamilyCertificate hyperelliptic_identity_check(int g) {
  require(g >= 1 && g <= 4, "hyperelliptic check: g = " + std::to_string(g) + " is out of range [1, 4]");
  FamilyCertificate cert{"hyperelliptic", g, {}, std::nullopt, false};
  const int top = 2 * g + 1;
  const Integer period = 2 * g + 2;

  auto compare = [&](std::string label, const Word& lhs, const Word& rhs) {
    RelatorCheck c{std::move(label), lhs == rhs, ""};
    if (!c.holds) c.detail = format_word(lhs, kXyz) + " vs " + format_word(rhs, kXyz);
    cert.checks.push_back(std::move(c));
  };

  // s_1 ... s_{2g+1} = y, so the palindrome is y s_{2g+1} ... s_1
  Word palindrome = y();
  for (int i = top; i >= 1; --i) palindrome *= sigma(i);
  compare("free form y^{2g+1} (x y^-1)^{2g} x", palindrome, y(top) * (x() * y(-1)).pow(2 * g) * x());
  const Word reduced = reduce_power_modulo(palindrome, 2, period);
  const Word target = (y(-1) * x()).pow(top);
  compare("palindrome = (y^-1 x)^{2g+1} mod y^{2g+2}", reduced, target);
  compare("palindrome^2 = (y^-1 x)^{4g+2}", reduced.pow(2), (y(-1) * x()).pow(2 * top));
  compare("[palindrome, x] = (y^-1 x)^{2g+1} (y x^-1)^{2g+1}",
          reduce_power_modulo(commutator(reduced, x()), 2, period), target * (y() * x(-1)).pow(top));

  // the x, y relators hold in the quotient S_{2g+2}
  const auto images = transposition_images(2 * g + 2);
  for (const auto& r : family_presentation({Family::Hyperelliptic, {g}}).relators)
    cert.checks.push_back({"S_" + std::to_string(2 * g + 2) + ": " + format_word(r, kXyz),
                           is_identity_perm(evaluate(r, images)), ""});
  finish(cert);
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

struct Curves {
  explicit Curves(int genus) : s(genus) {}
  Word a(int i, long long e = 1) const { return s.a(i).pow(e); }
  Word b(int i, long long e = 1) const { return s.b(i).pow(e); }
  Word c(int i, long long e = 1) const { return s.c_curve(i).pow(e); }
  SurfaceGroup s;
};

int abelian_genus(int rank) { return rank + 1; }

}  // namespace

std::vector<Word> abelian_interim_centers(int rank) {
  if (rank < 3) throw std::out_of_range("abelian construction needs n + k >= 3");
  const Curves k(abelian_genus(rank));
  std::vector<Word> out;
  if (rank % 2 == 0) {
    const int r = rank / 2;
    auto o = [&](int j) { return 2 * r - j + 2; };
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j)
        out.push_back(k.a(i) * k.a(j, -1) * k.a(o(i)) * k.a(o(j), -1) * k.c(r + 1, -1) * k.b(r + 1, -1));
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j)
        out.push_back(k.b(i) * k.b(j) * k.b(i, -1) * k.a(o(j)) * k.b(o(j)) * k.a(o(j), -1) * k.b(r + 1, -1) * k.c(r));
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) {
        if (i == j)
          out.push_back(k.b(i, -1) * k.a(i) * k.b(i) * k.a(i, -1) * k.b(r + 1, -1));
        else
          out.push_back(k.a(i) * k.b(j, -1) * k.a(i, -1) * k.a(o(j)) * k.b(o(j), -1) * k.a(o(j), -1) * k.a(r + 1) *
                        k.b(r + 1, -1));
      }
    return out;
  }
  const int r = (rank - 1) / 2;
  auto o = [&](int j) { return 2 * r - j + 3; };
  out.push_back(k.b(r + 1));
  for (int i = 1; i <= r + 1; ++i)
    for (int j = i + 1; j <= r + 1; ++j) {
      if (j <= r)
        out.push_back(k.a(i) * k.a(j, -1) * k.a(o(i)) * k.a(o(j), -1) * k.c(r + 1, -1) * k.b(r + 1, -1));
      else
        out.push_back(k.a(i) * k.a(r + 1, -1) * k.b(r + 2) * k.a(o(i)) * k.c(r + 2) * k.a(r + 1));
    }
  const Word tail = k.b(r + 2, -1) * k.b(r + 1) * k.c(r + 1);
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      out.push_back(k.b(i) * k.b(j) * k.b(i, -1) * k.b(r + 2) * k.a(o(j)) * k.b(o(j)) * k.a(o(j), -1) * tail);
  for (int i = 1; i <= r + 1; ++i)
    for (int j = 1; j <= r; ++j) {
      if (i == r + 1)
        out.push_back(k.a(r + 1) * k.b(j) * k.a(r + 1, -1) * k.b(r + 2) * k.a(o(j)) * k.b(o(j)) * k.a(o(j), -1) *
                      k.c(r + 2));
      else if (i == j)
        out.push_back(k.b(i, -1) * k.a(i) * k.b(i) * k.a(i, -1) * k.b(r + 1, -1));
      else
        out.push_back(k.a(i) * k.b(j) * k.a(i, -1) * k.b(r + 2) * k.a(o(j)) * k.b(o(j)) * k.a(o(j), -1) * tail);
    }
  return out;
}

Word abelian_torsion_curve(int rank, int i, long long m) {
  if (rank < 3) throw std::out_of_range("abelian construction needs n + k >= 3");
  if (i < 1 || i > rank) throw std::out_of_range("torsion index out of range");
  if (m < 2) throw std::out_of_range("torsion orders must be >= 2");
  const Curves k(abelian_genus(rank));
  if (rank % 2 == 0) {
    const int r = rank / 2;
    if (i <= r) {
      const int o = 2 * r - i + 2;
      return k.a(i, m) * k.a(o) * k.b(o, -1) * k.a(o, -1) * k.a(r + 1) * k.b(r + 1, -1) * k.b(i, -1);
    }
    const int t = i - r;
    return k.b(t, m) * k.a(t, -1) * k.a(2 * r - t + 2, -1) * k.a(r + 1) * k.b(r + 1, -1);
  }
  const int r = (rank - 1) / 2;
  if (i <= r) {
    const int o = 2 * r - i + 3;
    return k.a(i, m) * k.a(o) * k.b(o, -1) * k.a(o, -1) * k.c(r + 1, -1) * k.b(r + 1, -1) * k.b(i, -1);
  }
  if (i <= 2 * r) {
    const int t = i - r;
    return k.b(t, m) * k.a(t, -1) * k.a(2 * r - t + 3, -1) * k.c(r + 1, -1) * k.b(r + 1, -1);
  }
  return k.a(r + 1, m) * k.b(r + 1, -1);
}

AbelianFibration abelian_fibration(int n, int k, const std::vector<long long>& m) {
  std::vector<long long> params{n, k};
  params.insert(params.end(), m.begin(), m.end());
  FamilySpec{Family::Abelian, params}.validate();

  const int rank = n + k;
  const int genus = abelian_genus(rank);
  AbelianFibration out;
  out.n = n;
  out.k = k;
  out.m = m;
  FibrationPlan plan = FibrationPlan::bare_w(genus);
  for (const auto& d : abelian_interim_centers(rank)) plan = append_w_block(plan, d).plan;
  out.interim = plan;
  for (int i = 1; i <= k; ++i) plan = append_w_block(plan, abelian_torsion_curve(rank, i, m[i - 1])).plan;
  out.plan = std::move(plan);
  out.presentation = pi1_from_plan(out.plan);
  out.expected = abelian_target(n, m);
  return out;
}

AbelianInvariants t2_bundle_pi1(long long n, long long m) {
  const long long d = std::gcd(n, m);  // std::gcd works on absolute values, gcd(0, 0) = 0
  return AbelianInvariants::from_cyclic_orders({Integer(0), Integer(d)});
}

}  // namespace lefschetz
