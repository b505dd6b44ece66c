#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "looptx/json_io.hpp"

namespace looptx::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Subcommand -> library operations it reaches.
struct ManifestEntry {
  std::string subcommand;
  std::vector<std::string> operations;
};

const std::vector<ManifestEntry>& manifest();

/// Parses argv, runs one subcommand, prints the JSON report to `out` and
/// diagnostics to `err`. Returns 0 when every check passes, 1 when some
/// check fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of the canonical (sorted-key) dump of `j`.
std::string digest(const Json& j);

}  // namespace looptx::cli
