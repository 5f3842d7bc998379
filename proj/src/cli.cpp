#include "lefschetz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <ostream>

#include "lefschetz/plan_io.hpp"
#include "lefschetz/surface.hpp"

namespace lefschetz::cli {

using nlohmann::ordered_json;

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Warning: return "warning";
    case Status::Error: return "error";
  }
  return "error";
}

ordered_json CommandResult::to_json() const {
  ordered_json doc;
  doc["schema"] = kResultSchema;
  doc["command"] = command;
  doc["status"] = status_name(status);
  doc["exit_code"] = exit_code;
  doc["payload"] = payload;
  doc["diagnostics"] = diagnostics;
  return doc;
}

namespace {

ordered_json integer_json(const Integer& v) {
  if (v >= 0 && v <= Integer(std::numeric_limits<std::int64_t>::max())) return v.convert_to<std::int64_t>();
  return v.str();
}

void fail(CommandResult& r, int code, std::string message) {
  r.status = Status::Error;
  r.exit_code = code;
  r.diagnostics.push_back(std::move(message));
}

/// Runs `body`, turning library exceptions into exit code 2.
CommandResult guarded(std::string command, const std::function<void(CommandResult&)>& body) {
  CommandResult r;
  r.command = std::move(command);
  try {
    body(r);
  } catch (const ParseError& e) {
    fail(r, 2, std::string("parse error: ") + e.what());
  } catch (const PlanFormatError& e) {
    fail(r, 2, std::string("bad plan: ") + e.what());
  } catch (const CapExceeded& e) {
    fail(r, 2, std::string("cap exceeded: ") + e.what());
  } catch (const std::out_of_range& e) {
    fail(r, 2, e.what());
  } catch (const std::invalid_argument& e) {
    fail(r, 2, e.what());
  } catch (const std::runtime_error& e) {
    fail(r, 2, e.what());
  }
  return r;
}

Presentation parse_input(const std::string& text) {
  Presentation p = parse_presentation(text);
  p.validate();
  return p;
}

void verdict(CommandResult& r, bool ok, const std::string& failure) {
  if (!ok) fail(r, 1, failure);
}

ordered_json certificate_json(const FamilyCertificate& c) {
  ordered_json doc;
  doc["family"] = c.family;
  doc["parameter"] = c.parameter;
  ordered_json checks = ordered_json::array();
  for (const auto& ch : c.checks) checks.push_back({{"label", ch.label}, {"holds", ch.holds}, {"detail", ch.detail}});
  doc["checks"] = std::move(checks);
  doc["order"] = c.order ? ordered_json(*c.order) : ordered_json(nullptr);
  doc["passed"] = c.passed;
  return doc;
}

void certificate_lines(CommandResult& r, const FamilyCertificate& c) {
  for (const auto& ch : c.checks)
    r.lines.push_back(std::string(ch.holds ? "pass " : "FAIL ") + ch.label + (ch.detail.empty() ? "" : "  (" + ch.detail + ")"));
  if (c.order) r.lines.push_back("order " + std::to_string(*c.order));
  r.lines.push_back(c.passed ? "ok" : "failed");
  if (!c.passed)
    for (const auto& ch : c.checks)
      if (!ch.holds) r.diagnostics.push_back("check failed: " + ch.label);
}

ordered_json spec_json(const FamilySpec& spec) {
  return {{"family", family_name(spec.family)}, {"params", spec.params}};
}

}  // namespace

ordered_json abelian_to_json(const AbelianInvariants& a) {
  ordered_json torsion = ordered_json::array();
  for (const auto& t : a.torsion) torsion.push_back(integer_json(t));
  return {{"free_rank", a.free_rank}, {"torsion", torsion}, {"text", format_abelian(a)}};
}

ordered_json invariants_to_json(const InvariantVector& v) {
  ordered_json homs = ordered_json::object();
  for (const auto& [name, count] : v.hom_counts) homs[name] = count;
  ordered_json order;
  switch (v.order_kind) {
    case OrderKind::Finite: order = v.order; break;
    case OrderKind::Infinite: order = "infinite"; break;
    case OrderKind::Inconclusive: order = "inconclusive"; break;
  }
  return {{"abelianization", abelian_to_json(v.abelian)}, {"hom_counts", homs}, {"order", order}};
}

CommandResult cmd_construct(const std::string& input, const ConstructOptions& options) {
  return guarded("construct", [&](CommandResult& r) {
    const Presentation gamma = parse_input(input);
    PipelineOptions po;
    po.genus = options.genus;
    po.fillers = options.fillers;
    const PipelineResult res = run_pipeline(gamma, po);
    if (options.out) save_plan(res.plan, *options.out);

    const InvariantVector got = compute_invariants(res.presentation, options.invariants);
    const InvariantVector want = compute_invariants(gamma, options.invariants);
    r.payload["input"] = format_presentation(gamma);
    r.payload["genus"] = res.genus;
    r.payload["genus_bound"] = pipeline_genus_bound(gamma);
    r.payload["euler_characteristic"] = integer_json(euler_characteristic(res.plan));
    r.payload["presentation"] = format_presentation(res.presentation);
    r.payload["expected"] = format_presentation(res.expected);
    r.payload["matches_expected"] = res.matches_expected;
    r.payload["invariants"] = invariants_to_json(got);
    r.payload["invariants_match"] = got == want;
    r.payload["warnings"] = res.warnings;
    r.payload["plan_path"] = options.out ? ordered_json(*options.out) : ordered_json(nullptr);
    r.payload["plan"] = plan_to_json(res.plan);

    r.lines.push_back("genus " + std::to_string(res.genus) + " (bound " + std::to_string(pipeline_genus_bound(gamma)) + ")");
    r.lines.push_back("blocks " + std::to_string(res.plan.blocks().size()) + ", twists " +
                      std::to_string(res.plan.twist_letter_count()) + ", euler " +
                      euler_characteristic(res.plan).str());
    r.lines.push_back("pi1 " + format_presentation(res.presentation));
    r.lines.push_back("expected " + format_presentation(res.expected) + (res.matches_expected ? " (match)" : " (MISMATCH)"));
    r.lines.push_back("invariants " + format_invariants(got));
    if (options.out) r.lines.push_back("plan written to " + *options.out);

    for (const auto& w : res.warnings) r.diagnostics.push_back("warning: " + w);
    if (!res.warnings.empty()) r.status = Status::Warning;
    verdict(r, res.matches_expected, "pipeline output does not match the expected presentation");
    verdict(r, got == want, "invariants of the output differ from the input's");
  });
}

CommandResult cmd_verify_w_homology(int genus) {
  return guarded("verify w-homology", [&](CommandResult& r) {
    const auto cert = verify_w_homology(genus);
    const SurfaceGroup s(genus);
    ordered_json cycles = ordered_json::array();
    for (const auto& c : cert.cycles) cycles.push_back(s.format(c));
    r.payload["genus"] = genus;
    r.payload["cycles"] = std::move(cycles);
    r.payload["all_factors_symplectic"] = cert.all_factors_symplectic;
    r.payload["product_is_identity"] = cert.product == SymplecticMatrix::Identity(2 * genus, 2 * genus);
    r.payload["passed"] = cert.passed;
    r.lines.push_back("genus " + std::to_string(genus) + ": " + std::to_string(cert.cycles.size()) + " twists");
    r.lines.push_back(std::string("factors symplectic: ") + (cert.all_factors_symplectic ? "yes" : "no"));
    r.lines.push_back(cert.passed ? "product is the identity: ok" : "product is not the identity: failed");
    verdict(r, cert.passed, "W does not act trivially on homology");
  });
}

CommandResult cmd_verify_family(const std::string& family, const std::vector<long long>& params,
                                const InvariantOptions& invariants) {
  return guarded("verify family", [&](CommandResult& r) {
    const FamilySpec spec{parse_family(family), params};
    spec.validate();
    r.payload["spec"] = spec_json(spec);
    const int p = static_cast<int>(params[0]);
    FamilyCertificate cert;
    switch (spec.family) {
      case Family::Braid: cert = braid_relator_check(p); break;
      case Family::Symmetric: cert = symmetric_relator_check(p); break;
      case Family::SphereMcg: cert = sphere_mcg_check(p); break;
      case Family::Hyperelliptic: cert = hyperelliptic_identity_check(p); break;
      case Family::Artin: cert = artin_invariant_check(p, invariants.battery); break;
      case Family::Abelian: {
        const auto f = abelian_fibration(p, static_cast<int>(params[1]), {params.begin() + 2, params.end()});
        const auto got = compute_invariants(f.presentation, invariants);
        const auto want = compute_invariants(family_presentation(spec), invariants);
        cert = {"abelian", p, {}, std::nullopt, false};
        cert.checks.push_back({"abelianization " + format_abelian(f.expected), abelianization(f.presentation) == f.expected,
                               format_abelian(abelianization(f.presentation))});
        cert.checks.push_back({"invariant vector", got == want, format_invariants(got)});
        cert.passed = cert.checks[0].holds && cert.checks[1].holds;
        r.payload["plan"] = plan_to_json(f.plan);
        break;
      }
      case Family::Surface: {
        cert = {"surface", p, {}, std::nullopt, true};
        const auto ab = abelianization(family_presentation(spec));
        cert.checks.push_back({"abelianization Z^" + std::to_string(2 * p), ab == AbelianInvariants{std::size_t(2 * p), {}},
                               format_abelian(ab)});
        if (p >= 1) cert.checks.push_back({"W acts trivially on homology", verify_w_homology(p).passed, ""});
        cert.passed = std::all_of(cert.checks.begin(), cert.checks.end(), [](const auto& c) { return c.holds; });
        break;
      }
      case Family::SmallAbelian: {
        cert = {"small-abelian", p, {}, std::nullopt, false};
        const auto ab = abelianization(family_presentation(spec));
        const auto bounds = genus_bounds(spec);
        cert.checks.push_back({"abelianization", true, format_abelian(ab)});
        if (bounds.lower == 1) {
          // genus one: realized by a T^2-bundle with clutching (d, 0)
          const Integer d = ab.free_rank == 2 ? Integer(0) : (ab.torsion.empty() ? Integer(1) : ab.torsion[0]);
          const auto bundle = t2_bundle_pi1(d.convert_to<long long>(), 0);
          cert.checks.push_back({"T^2-bundle X_{" + d.str() + ",0}", bundle == ab, format_abelian(bundle)});
        }
        cert.passed = std::all_of(cert.checks.begin(), cert.checks.end(), [](const auto& c) { return c.holds; });
        break;
      }
    }
    r.payload["certificate"] = certificate_json(cert);
    certificate_lines(r, cert);
    verdict(r, cert.passed, std::string(family_name(spec.family)) + " certificate failed");
  });
}

CommandResult cmd_verify_plan(const std::string& path, const std::optional<std::string>& expect,
                              const InvariantOptions& invariants) {
  return guarded("verify plan", [&](CommandResult& r) {
    const FibrationPlan plan = load_plan(path);
    const Presentation pi1 = pi1_from_plan(plan);
    const InvariantVector got = compute_invariants(pi1, invariants);
    r.payload["path"] = path;
    r.payload["genus"] = plan.genus();
    r.payload["twist_letters"] = plan.twist_letter_count();
    r.payload["euler_characteristic"] = integer_json(euler_characteristic(plan));
    r.payload["presentation"] = format_presentation(pi1);
    r.payload["invariants"] = invariants_to_json(got);
    r.lines.push_back("genus " + std::to_string(plan.genus()) + ", twists " + std::to_string(plan.twist_letter_count()) +
                      ", euler " + euler_characteristic(plan).str());
    r.lines.push_back("pi1 " + format_presentation(pi1));
    r.lines.push_back("invariants " + format_invariants(got));
    if (expect) {
      const Presentation want_p = parse_input(*expect);
      const InvariantVector want = compute_invariants(want_p, invariants);
      r.payload["expected"] = format_presentation(want_p);
      r.payload["expected_invariants"] = invariants_to_json(want);
      r.payload["match"] = got == want;
      r.lines.push_back(got == want ? "matches expected: ok" : "differs from expected: failed");
      verdict(r, got == want, "invariants differ from " + format_presentation(want_p));
    }
  });
}

CommandResult cmd_invariants(const std::string& input, const InvariantOptions& invariants) {
  return guarded("invariants", [&](CommandResult& r) {
    const Presentation p = parse_input(input);
    const InvariantVector v = compute_invariants(p, invariants);
    r.payload["presentation"] = format_presentation(p);
    r.payload["invariants"] = invariants_to_json(v);
    r.lines.push_back("abelianization " + format_abelian(v.abelian));
    for (const auto& [name, count] : v.hom_counts) r.lines.push_back("hom " + name + " " + std::to_string(count));
    r.lines.push_back("order " + format_order(v));
  });
}

CommandResult cmd_genus_bounds(const std::string& family, const std::vector<long long>& params) {
  return guarded("genus-bounds", [&](CommandResult& r) {
    const FamilySpec spec{parse_family(family), params};
    const GenusBounds b = genus_bounds(spec);
    r.payload["spec"] = spec_json(spec);
    r.payload["lower"] = b.lower;
    r.payload["upper"] = b.upper ? ordered_json(*b.upper) : ordered_json(nullptr);
    r.payload["exact"] = b.exact;
    r.lines.push_back(format_bounds(b));
  });
}

CommandResult cmd_euler(const std::string& path) {
  return guarded("euler", [&](CommandResult& r) {
    const FibrationPlan plan = load_plan(path);
    const Integer e = euler_characteristic(plan);
    r.payload["genus"] = plan.genus();
    r.payload["twist_letters"] = plan.twist_letter_count();
    r.payload["euler_characteristic"] = integer_json(e);
    r.lines.push_back(e.str());
  });
}

CommandResult cmd_catalog(const std::string& family, const std::vector<long long>& params) {
  return guarded("catalog", [&](CommandResult& r) {
    const FamilySpec spec{parse_family(family), params};
    const Presentation p = family_presentation(spec);
    const GenusBounds b = genus_bounds(spec);
    r.payload["spec"] = spec_json(spec);
    r.payload["presentation"] = format_presentation(p);
    r.payload["relator_count"] = p.relators.size();
    r.payload["genus_bounds"] = format_bounds(b);
    r.lines.push_back(format_presentation(p));
  });
}

CommandResult cmd_t2_bundle(long long n, long long m) {
  return guarded("t2-bundle", [&](CommandResult& r) {
    const auto a = t2_bundle_pi1(n, m);
    r.payload["n"] = n;
    r.payload["m"] = m;
    r.payload["pi1"] = abelian_to_json(a);
    r.lines.push_back(format_abelian(a));
  });
}

CommandResult cmd_plan(const std::string& kind, const std::vector<long long>& params, const std::optional<std::string>& out) {
  return guarded("plan", [&](CommandResult& r) {
    auto genus_param = [&] {
      if (params.size() != 1) throw std::invalid_argument(kind + " takes exactly one parameter (the genus)");
      if (params[0] < 1 || params[0] > 1000) throw std::out_of_range("genus must lie in [1, 1000]");
      return static_cast<int>(params[0]);
    };
    FibrationPlan plan = FibrationPlan::bare_w(1);
    if (kind == "bare-w") {
      plan = FibrationPlan::bare_w(genus_param());
    } else if (kind == "u") {
      plan = construct_u(genus_param());
    } else if (kind == "u-prime") {
      plan = construct_u_prime(genus_param());
    } else if (kind == "abelian") {
      if (params.size() < 2) throw std::invalid_argument("abelian takes n, k, m_1..m_k");
      FamilySpec{Family::Abelian, params}.validate();
      plan = abelian_fibration(static_cast<int>(params[0]), static_cast<int>(params[1]), {params.begin() + 2, params.end()})
                 .plan;
    } else {
      throw std::invalid_argument("unknown plan kind '" + kind + "' (bare-w, u, u-prime, abelian)");
    }
    if (out) save_plan(plan, *out);
    r.payload["kind"] = kind;
    r.payload["plan_path"] = out ? ordered_json(*out) : ordered_json(nullptr);
    r.payload["plan"] = plan_to_json(plan);
    if (out) {
      r.lines.push_back("genus " + std::to_string(plan.genus()) + ", blocks " + std::to_string(plan.blocks().size()) +
                        ", twists " + std::to_string(plan.twist_letter_count()));
      r.lines.push_back("plan written to " + *out);
    } else {
      r.lines.push_back(plan_to_json(plan).dump(2));
    }
  });
}

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lefschetz fibration toolkit: monodromy plans, fundamental groups, genus bounds", "lefschetz"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::string battery = "s3,s4,z2..z6";
  std::size_t max_cosets = CosetOptions{}.max_cosets;
  app.add_flag("--json", json, "Print the versioned JSON result document");
  app.add_option("--battery", battery, "Finite groups for hom counts, e.g. s3,s4,z2..z6");
  app.add_option("--max-cosets", max_cosets, "Live coset cap for enumeration")->check(CLI::PositiveNumber);

  std::string input, path, family, kind;
  std::vector<long long> params;
  std::optional<int> genus;
  std::optional<std::string> out_path, expect;
  std::optional<std::uint64_t> seed;
  int w_genus = 0;
  long long t2n = 0, t2m = 0;

  auto* construct = app.add_subcommand("construct", "Build a fibration whose total space has the given pi_1");
  construct->add_option("presentation", input, "Presentation, e.g. \"<g1,g2 | g1 g2 g1^-1 g2^-1>\"")->required();
  construct->add_option("--genus", genus, "Fiber genus (at least 2n + l - 1)");
  construct->add_option("--out", out_path, "Write the plan JSON here");
  construct->add_option("--seed", seed, "Use random filler words with this seed");

  auto* verify = app.add_subcommand("verify", "Check a certificate");
  verify->require_subcommand(1);
  auto* vw = verify->add_subcommand("w-homology", "W acts trivially on H_1");
  vw->add_option("--genus", w_genus, "Genus")->required();
  auto* vf = verify->add_subcommand("family", "Certify a catalog family");
  vf->add_option("family", family)->required();
  vf->add_option("params", params)->required();
  auto* vp = verify->add_subcommand("plan", "Reload a plan and recompute its invariants");
  vp->add_option("path", path)->required();
  vp->add_option("--expect", expect, "Presentation whose invariants the plan must reproduce");

  auto* inv = app.add_subcommand("invariants", "Abelianization, hom counts and order");
  inv->add_option("presentation", input)->required();

  auto* gb = app.add_subcommand("genus-bounds", "Tabulated genus bounds for a family");
  gb->add_option("family", family)->required();
  gb->add_option("params", params)->required();

  auto* eu = app.add_subcommand("euler", "Euler characteristic of a plan's total space");
  eu->add_option("path", path)->required();

  auto* cat = app.add_subcommand("catalog", "Print a family presentation");
  cat->add_option("family", family)->required();
  cat->add_option("params", params)->required();

  auto* t2 = app.add_subcommand("t2-bundle", "pi_1 of the T^2-bundle X_{n,m}");
  t2->add_option("n", t2n)->required();
  t2->add_option("m", t2m)->required();

  auto* pl = app.add_subcommand("plan", "Build a named plan: bare-w G | u G | u-prime G | abelian n k m...");
  pl->add_option("kind", kind)->required();
  pl->add_option("params", params)->required();
  pl->add_option("--out", out_path, "Write the plan JSON here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  InvariantOptions iopts;
  try {
    iopts.battery = parse_battery(battery);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  iopts.coset.max_cosets = max_cosets;

  CommandResult result;
  if (*construct) {
    ConstructOptions o;
    o.genus = genus;
    o.out = out_path;
    if (seed) o.fillers = FillerChoice::random(*seed);
    o.invariants = iopts;
    result = cmd_construct(input, o);
  } else if (*vw) {
    result = cmd_verify_w_homology(w_genus);
  } else if (*vf) {
    result = cmd_verify_family(family, params, iopts);
  } else if (*vp) {
    result = cmd_verify_plan(path, expect, iopts);
  } else if (*inv) {
    result = cmd_invariants(input, iopts);
  } else if (*gb) {
    result = cmd_genus_bounds(family, params);
  } else if (*eu) {
    result = cmd_euler(path);
  } else if (*cat) {
    result = cmd_catalog(family, params);
  } else if (*t2) {
    result = cmd_t2_bundle(t2n, t2m);
  } else {
    result = cmd_plan(kind, params, out_path);
  }

  if (json) {
    out << result.to_json().dump(2) << "\n";
  } else {
    for (const auto& line : result.lines) out << line << "\n";
  }
  for (const auto& d : result.diagnostics) {
    const bool tagged = d.rfind("warning: ", 0) == 0;
    err << (tagged ? "" : "error: ") << d << "\n";
  }
  return result.exit_code;
}

}  // namespace lefschetz::cli
