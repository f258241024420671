#include "swdon/manifold.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace swdon {

std::vector<CohClass> FourManifold::basic_class_list() const {
  std::vector<CohClass> out;
  out.reserve(basic_classes.size());
  for (const auto& e : basic_classes) out.push_back(e.k);
  return out;
}

bool ValidationReport::failed(std::string_view check) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const ValidationFailure& f) { return f.check == check; });
}

ValidationReport validate(const FourManifold& m) {
  ValidationReport report;
  auto fail = [&](std::string check, std::string detail, ErrorCode code = ErrorCode::ValidationError) {
    report.failures.push_back({std::move(check), std::move(detail), code});
  };

  const Integer rank = m.form.rank();
  if (m.b_plus <= 1) fail("b_plus > 1", "b_plus = " + to_string(m.b_plus));
  if (m.chi != 2 + rank)
    fail("chi = 2 + rank", "chi = " + to_string(m.chi) + ", rank = " + to_string(rank));
  if (mod(m.chi + m.sigma, 4) != 0)
    fail("chi + sigma = 0 mod 4", "chi + sigma = " + to_string(Integer(m.chi + m.sigma)));
  if (m.sigma != 2 * m.b_plus - rank)
    fail("sigma = b_plus - (rank - b_plus)",
         "sigma = " + to_string(m.sigma) + ", b_plus = " + to_string(m.b_plus) +
             ", rank = " + to_string(rank));
  if (m.form.positive_index() + m.form.negative_index() != m.form.rank())
    fail("form nondegenerate", "diagonal block has a zero entry");
  else if (Integer(m.form.positive_index()) != m.b_plus)
    fail("b_plus = positive index of form",
         "b_plus = " + to_string(m.b_plus) + ", form has " + std::to_string(m.form.positive_index()) +
             " positive directions");

  const Integer simple_type_square = c1_squared(m);
  const bool even_h = is_even((m.chi + m.sigma) / 4);
  std::map<CohClass, Integer> values;
  for (const auto& entry : m.basic_classes) {
    const std::string label = to_string(entry.k);
    if (entry.k.size() != m.form.rank()) {
      fail("coords length", "class " + label + " has length " + std::to_string(entry.k.size()) +
                                ", rank is " + std::to_string(m.form.rank()));
      continue;
    }
    if (entry.sw == 0) fail("sw must be nonzero", "class " + label);
    if (!values.emplace(entry.k, entry.sw).second) fail("distinct basic classes", "class " + label + " repeated");
    if (!is_characteristic(m.form, entry.k)) fail("characteristic", "class " + label);
    const Integer sq = square(m.form, entry.k);
    if (sq != simple_type_square)
      fail("SW-simple type", "class " + label + " has square " + to_string(sq) + ", expected " +
                                 to_string(simple_type_square),
           ErrorCode::NonSimpleType);
  }

  for (const auto& [k, sw] : values) {
    const Integer expected = even_h ? sw : Integer(-sw);
    const auto it = values.find(-k);
    if (it == values.end()) {
      fail("conjugation symmetry", "class " + to_string(k) + " present but " + to_string(-k) + " missing");
    } else if (it->second != expected) {
      fail("conjugation symmetry", "sw(" + to_string(-k) + ") = " + to_string(it->second) + ", expected " +
                                       to_string(expected));
    }
  }
  return report;
}

void require_valid(const FourManifold& m) {
  const auto report = validate(m);
  if (report.ok()) return;
  const auto& first = report.failures.front();
  throw Error(first.code, "validation failed: " + first.check + " (" + first.detail + ")");
}

Rational c_of_x(const Integer& chi, const Integer& sigma) {
  return Rational(Integer(-(7 * chi + 11 * sigma)), Integer(4));
}
Rational c_of_x(const FourManifold& m) { return c_of_x(m.chi, m.sigma); }

Rational chi_h(const Integer& chi, const Integer& sigma) { return Rational(Integer(chi + sigma), Integer(4)); }
Rational chi_h(const FourManifold& m) { return chi_h(m.chi, m.sigma); }

Integer c1_squared(const Integer& chi, const Integer& sigma) { return 2 * chi + 3 * sigma; }
Integer c1_squared(const FourManifold& m) { return c1_squared(m.chi, m.sigma); }

std::size_t b_count(const FourManifold& m) {
  std::set<CohClass> representatives;
  for (const auto& e : m.basic_classes) representatives.insert(std::min(e.k, CohClass(-e.k)));
  return representatives.size();
}

}  // namespace swdon
