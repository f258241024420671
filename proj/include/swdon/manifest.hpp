#pragma once

#include "swdon/manifold.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swdon {

inline constexpr int kSchemaVersion = 1;

/// On-disk description of a manifold: the FourManifold plus an optional preferred w.
struct Manifest {
  FourManifold manifold;
  std::optional<CohClass> w;
};

struct ParseOptions {
  /// Unknown fields become warnings instead of ParseError.
  bool lenient = false;
  /// Run validate() and throw on the first failed check.
  bool validate = true;
};

/// JSON text to Manifest. Syntax errors report line and column; schema errors
/// report the offending field path.
Manifest parse_manifest(std::string_view text, const ParseOptions& options = {},
                        std::vector<std::string>* warnings = nullptr);

/// Canonical JSON (two-space indent, fixed field order).
std::string serialize_manifest(const Manifest& manifest);

}  // namespace swdon
