#pragma once

#include "swdon/manifest.hpp"

#include <string>
#include <vector>

namespace swdon {

/// Built-in entries: K3, E3, E4, E5, E6.
std::vector<std::string> catalog_names();

/// Throws UnknownCatalogEntry for other names.
Manifest load_catalog(std::string_view name);

/// Elliptic surface E(n) for 2 <= n <= 12 (E(2) is the K3 surface).
FourManifold elliptic_surface(int n);

}  // namespace swdon
