#pragma once

#include "swdon/manifest.hpp"
#include "swdon/relations.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace swdon {

enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitFail = 2, kExitUndetermined = 3 };

int exit_code_for(Verdict v);

/// "0", a full list "a,b,c" or "[a,b,c]", or sparse "i:v,j:w".
CohClass parse_coords(std::string_view text, Index rank);
/// Same grammar with rational entries "p/q".
Direction parse_direction(std::string_view text, Index rank);

/// A readable path is parsed as a manifest; anything else is looked up in the catalog.
Manifest resolve_manifest(const std::string& file, const ParseOptions& options,
                          std::vector<std::string>* warnings = nullptr);

/// Search radius from SWDON_SEARCH_RADIUS, else 3.
int default_search_radius();

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swdon
