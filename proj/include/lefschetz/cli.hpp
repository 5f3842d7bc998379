#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lefschetz/fibration.hpp"
#include "lefschetz/genus_catalog.hpp"
#include "lefschetz/invariants.hpp"

namespace lefschetz::cli {

inline constexpr std::string_view kResultSchema = "lefschetz-cli/1";

enum class Status { Ok, Warning, Error };

/// Exit codes: 0 ok or warning, 1 a verification failed, 2 usage, parse or
/// range error.
struct CommandResult {
  Status status = Status::Ok;
  int exit_code = 0;
  std::string command;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::vector<std::string> diagnostics;
  /// Human-readable rendering, one item per line.
  std::vector<std::string> lines;

  nlohmann::ordered_json to_json() const;
};

std::string_view status_name(Status s);

nlohmann::ordered_json invariants_to_json(const InvariantVector& v);
nlohmann::ordered_json abelian_to_json(const AbelianInvariants& a);

struct ConstructOptions {
  std::optional<int> genus;
  std::optional<std::string> out;
  FillerChoice fillers;
  InvariantOptions invariants;
};

CommandResult cmd_construct(const std::string& input, const ConstructOptions& options);
CommandResult cmd_verify_w_homology(int genus);
CommandResult cmd_verify_family(const std::string& family, const std::vector<long long>& params,
                                const InvariantOptions& invariants = {});
/// Reloads a plan, recomputes pi_1 and its invariants; with `expect`, fails
/// (exit 1) unless the invariants equal those of the expected presentation.
CommandResult cmd_verify_plan(const std::string& path, const std::optional<std::string>& expect,
                              const InvariantOptions& invariants = {});
CommandResult cmd_invariants(const std::string& input, const InvariantOptions& invariants = {});
CommandResult cmd_genus_bounds(const std::string& family, const std::vector<long long>& params);
CommandResult cmd_euler(const std::string& path);
CommandResult cmd_catalog(const std::string& family, const std::vector<long long>& params);
CommandResult cmd_t2_bundle(long long n, long long m);
/// kind: bare-w G | u G | u-prime G | abelian n k m_1..m_k.
CommandResult cmd_plan(const std::string& kind, const std::vector<long long>& params,
                       const std::optional<std::string>& out);

/// Full command line (args excludes the program name). Writes the rendering
/// to `out`, diagnostics to `err`, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lefschetz::cli
