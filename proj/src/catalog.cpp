#include "swdon/catalog.hpp"

namespace swdon {

// Literature-standard input data, not computed here: the elliptic surfaces E(n)
// with b1 = 0, chi = 12n, sigma = -8n, and their Seiberg-Witten basic classes
// (n - 2 - 2j) f with value (-1)^j binom(n - 2, j), f the fibre class.
//
// Intersection forms: (2n - 1) H + n (-E8) for n even. For n odd the form is odd,
// written here as (2n - 2) H + n (-E8) + <1> + <-1>, with f = (1, 1) on the last
// block (isotropic and characteristic there).

FourManifold elliptic_surface(int n) {
  if (n < 2 || n > 12) throw Error(ErrorCode::UnknownCatalogEntry, "E(n) is provided for 2 <= n <= 12");
  FourManifold m;
  m.name = n == 2 ? "K3" : "E" + std::to_string(n);
  m.chi = 12 * n;
  m.sigma = -8 * n;
  m.b_plus = 2 * n - 1;

  std::vector<Block> blocks;
  const bool even = n % 2 == 0;
  const int hyperbolic_count = even ? 2 * n - 1 : 2 * n - 2;
  for (int i = 0; i < hyperbolic_count; ++i) blocks.push_back(Block::hyperbolic());
  for (int i = 0; i < n; ++i) blocks.push_back(Block::e8(-1));
  if (!even) blocks.push_back(Block::diagonal({Integer(1), Integer(-1)}));
  m.form = IntegralLattice(std::move(blocks));

  CohClass f = CohClass::zero(m.form.rank());
  IntVector fc = f.coords();
  if (even) {
    fc(0) = 1;
  } else {
    fc(m.form.rank() - 2) = 1;
    fc(m.form.rank() - 1) = 1;
  }
  f = CohClass(fc);

  Integer binom = 1;
  for (int j = 0; j <= n - 2; ++j) {
    BasicClassEntry e;
    e.k = Integer(n - 2 - 2 * j) * f;
    e.sw = j % 2 == 0 ? binom : Integer(-binom);
    m.basic_classes.push_back(std::move(e));
    binom = binom * (n - 2 - j) / (j + 1);
  }
  return m;
}

std::vector<std::string> catalog_names() { return {"K3", "E3", "E4", "E5", "E6"}; }

Manifest load_catalog(std::string_view name) {
  static const std::pair<std::string_view, int> entries[] = {{"K3", 2}, {"E2", 2}, {"E3", 3},
                                                             {"E4", 4}, {"E5", 5}, {"E6", 6}};
  for (const auto& [key, n] : entries)
    if (key == name) {
      Manifest out;
      out.manifold = elliptic_surface(n);
      return out;
    }
  throw Error(ErrorCode::UnknownCatalogEntry,
              "\"" + std::string(name) + "\" is neither a readable file nor a catalog entry (K3, E3, E4, E5, E6)");
}

}  // namespace swdon
