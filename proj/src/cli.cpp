#include "swdon/cli.hpp"

#include "swdon/catalog.hpp"
#include "swdon/region_figure.hpp"
#include "swdon/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace swdon {

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::Pass:
    case Verdict::PassVacuous: return kExitOk;
    case Verdict::Fail: return kExitFail;
    case Verdict::Undetermined: return kExitUndetermined;
  }
  return kExitError;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

/// Shared grammar for classes and directions; Parse turns one entry into a scalar.
template <typename Scalar, typename Parse>
Vector<Scalar> parse_vector(std::string_view text, Index rank, Parse parse_entry) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty coordinate list");
  Vector<Scalar> v = Vector<Scalar>::Zero(rank);
  if (text == "0") return v;
  const auto parts = split(text, ',');
  if (text.find(':') != std::string_view::npos) {
    for (const auto part : parts) {
      const auto colon = part.find(':');
      if (colon == std::string_view::npos)
        throw Error(ErrorCode::ParseError, "sparse coordinates must all be index:value, got \"" + std::string(part) + "\"");
      const Integer index = parse_integer(trim(part.substr(0, colon)));
      if (index < 0 || index >= rank)
        throw Error(ErrorCode::DimensionMismatch,
                    "coordinate index " + index.str() + " outside 0.." + std::to_string(rank - 1));
      v(index.convert_to<Index>()) += parse_entry(trim(part.substr(colon + 1)));
    }
    return v;
  }
  if (static_cast<Index>(parts.size()) != rank)
    throw Error(ErrorCode::DimensionMismatch, "coordinate list has " + std::to_string(parts.size()) +
                                                  " entries, form rank is " + std::to_string(rank));
  for (std::size_t i = 0; i < parts.size(); ++i) v(static_cast<Index>(i)) = parse_entry(parts[i]);
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void print(std::ostream& out, const ReportJson& report) { out << report.dump(2) << '\n'; }

}  // namespace

CohClass parse_coords(std::string_view text, Index rank) {
  return CohClass(parse_vector<Integer>(text, rank, [](std::string_view s) { return parse_integer(s); }));
}

Direction parse_direction(std::string_view text, Index rank) {
  return {parse_vector<Rational>(text, rank, [](std::string_view s) { return parse_rational(s); })};
}

Manifest resolve_manifest(const std::string& file, const ParseOptions& options, std::vector<std::string>* warnings) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(file, ec)) return parse_manifest(read_file(file), options, warnings);
  Manifest m = load_catalog(file);
  if (options.validate) require_valid(m.manifold);
  return m;
}

int default_search_radius() {
  if (const char* env = std::getenv("SWDON_SEARCH_RADIUS")) {
    const Integer r = parse_integer(env);
    if (r < 1 || r > 1000) throw Error(ErrorCode::Usage, "SWDON_SEARCH_RADIUS must be between 1 and 1000");
    return r.convert_to<int>();
  }
  return 3;
}

namespace {

struct Context {
  std::vector<std::string> argv;
  std::ostream& out;
  std::ostream& err;
  bool lenient = false;

  Manifest load(const std::string& file, bool validate = true) {
    std::vector<std::string> warnings;
    Manifest m = resolve_manifest(file, {lenient, validate}, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    return m;
  }

  ReportJson header(const std::string& command, const FourManifold& m) const {
    return report_header(command, argv, m.name);
  }
};

CohClass choose_w(const Manifest& manifest, const std::string& text) {
  const auto& m = manifest.manifold;
  if (!text.empty()) return parse_coords(text, m.form.rank());
  if (manifest.w) return *manifest.w;
  return characteristic_vector(m.form);
}

int cmd_validate(Context& ctx, const std::string& file) {
  const Manifest manifest = ctx.load(file, false);
  const ValidationReport report = validate(manifest.manifold);
  ReportJson out = ctx.header("validate", manifest.manifold);
  out["verdict"] = report.ok() ? "pass" : "fail";
  out["failures"] = to_json(report);
  print(ctx.out, out);
  return report.ok() ? kExitOk : kExitFail;
}

int cmd_invariants(Context& ctx, const std::string& file, const std::string& w_text) {
  const Manifest manifest = ctx.load(file);
  const FourManifold& m = manifest.manifold;
  const CohClass w = choose_w(manifest, w_text);
  const ExpSum series = sw_series(m, w);
  bool even_form = true;
  for (Index i = 0; i < m.form.rank(); ++i) even_form = even_form && is_even(m.form.gram()(i, i));

  ReportJson out = ctx.header("invariants", m);
  out["chi"] = m.chi.str();
  out["sigma"] = m.sigma.str();
  out["b_plus"] = m.b_plus.str();
  out["rank"] = m.form.rank();
  out["form_type"] = even_form ? "even" : "odd";
  out["c"] = to_json(c_of_x(m));
  out["chi_h"] = to_json(chi_h(m));
  out["c1_squared"] = c1_squared(m).str();
  out["b"] = b_count(m);
  out["w"] = to_json(w);
  out["w_squared"] = square(m.form, w).str();
  out["parity"] = parity_name(parity(series));
  out["expected_parity"] = parity_name(expected_parity(m, w));
  out["conjecture_assumed"] = m.conjecture_assumed;
  print(ctx.out, out);
  return kExitOk;
}

int cmd_abundance(Context& ctx, const std::string& file, int radius) {
  const Manifest manifest = ctx.load(file);
  const FourManifold& m = manifest.manifold;
  const auto classes = m.basic_class_list();
  const Sublattice perp = orthogonal_complement(m.form, classes);
  HyperbolicSearchOptions search;
  search.radius = radius;
  const auto result = find_hyperbolic_pair(perp, search);

  ReportJson out = ctx.header("abundance", m);
  out["b_perp_rank"] = perp.rank();
  out["radius"] = radius;
  out["candidates"] = result.candidates;
  out["exhaustive"] = result.exhaustive;
  out["residue_mod_8"] = mod(-(m.chi + m.sigma), 8).str();
  Verdict verdict = Verdict::Undetermined;
  if (result.pair) {
    verdict = Verdict::Pass;
    const auto ab = construct_abundance_classes(*result.pair, m.chi, m.sigma);
    out["from_shortcut"] = result.from_shortcut;
    out["hyperbolic_pair"] = {to_json(result.pair->e1), to_json(result.pair->e2)};
    out["h"] = ab.h.str();
    auto describe = [&](const CohClass& l) {
      return ReportJson{{"class", to_json(l)},
                        {"square", square(m.form, l).str()},
                        {"r", to_json(r_lambda(m, l))},
                        {"i", to_json(i_lambda(m, l))}};
    };
    out["lambda0"] = describe(ab.lambda0);
    out["lambda1"] = describe(ab.lambda1);
    out["lambda"] = describe(ab.lambda);
  } else {
    out["note"] = "no hyperbolic pair found; this does not show B-perp is not abundant";
  }
  out["verdict"] = verdict_name(verdict);
  print(ctx.out, out);
  return exit_code_for(verdict);
}

PipelineOptions pipeline_options(const FourManifold& m, int radius, const std::string& l0, const std::string& l1) {
  PipelineOptions options;
  options.search.radius = radius;
  if (l0.empty() != l1.empty()) throw Error(ErrorCode::Usage, "--lambda0 and --lambda1 must be given together");
  if (!l0.empty()) options.lambdas = std::pair{parse_coords(l0, m.form.rank()), parse_coords(l1, m.form.rank())};
  return options;
}

int cmd_sst(Context& ctx, const std::string& file, const std::string& w_text, const std::string& l0,
            const std::string& l1, int radius) {
  const Manifest manifest = ctx.load(file);
  const FourManifold& m = manifest.manifold;
  const auto report = sst_check(m, choose_w(manifest, w_text), pipeline_options(m, radius, l0, l1));
  ReportJson out = ctx.header("sst", m);
  out.update(to_json(report));
  print(ctx.out, out);
  return exit_code_for(report.verdict);
}

int cmd_dvanish(Context& ctx, const std::string& file, const std::string& w_text, int radius) {
  const Manifest manifest = ctx.load(file);
  const FourManifold& m = manifest.manifold;
  const auto report = dvanish_theorem_check(m, choose_w(manifest, w_text), pipeline_options(m, radius, "", ""));
  ReportJson out = ctx.header("dvanish", m);
  out.update(to_json(report));
  print(ctx.out, out);
  return exit_code_for(report.verdict);
}

struct RelateArgs {
  std::string lambda, w, at;
  long delta = 0;
  long m = 0;
};

int cmd_relate(Context& ctx, const std::string& file, const RelateArgs& a) {
  const Manifest manifest = ctx.load(file);
  const FourManifold& m = manifest.manifold;
  const RelationQuery q{parse_coords(a.w, m.form.rank()), parse_coords(a.lambda, m.form.rank()), a.delta, a.m};
  if (q.m < 0 || q.delta < 2 * q.m) throw Error(ErrorCode::HypothesisViolation, "delta >= 2m and m >= 0 required");
  const LevelData level = level_and_index(m, q.lambda, q.delta);
  if (!is_characteristic(m.form, q.w - q.lambda))
    throw Error(ErrorCode::HypothesisViolation, "w - lambda must be characteristic (w2 mod 2)");

  ReportJson out = ctx.header("relate", m);
  out["w"] = to_json(q.w);
  out["lambda"] = to_json(q.lambda);
  out["lambda_squared"] = square(m.form, q.lambda).str();
  out["delta"] = q.delta;
  out["m"] = q.m;
  out["r"] = to_json(r_lambda(m, q.lambda));
  out["i"] = to_json(i_lambda(m, q.lambda));
  out["level"] = to_json(level.level);
  out["dirac_index"] = to_json(level.dirac_index);
  out["degree_admissible"] = degree_admissible(m, q.w, q.delta);

  Jet value;
  if (dvanish_applies(m, q.lambda, q.delta)) {
    out["branch"] = "vanishing";
    value.ambient = m.form;
    value.order = static_cast<unsigned>(q.degree());
  } else {
    const DswrelValue v = dswrel_value(m, q);
    out["branch"] = "formula";
    out["prefactor"] = to_json(v.prefactor);
    out["sign"] = v.sign;
    value = v.polynomial;
  }
  out["value"] = to_json(value);
  if (!a.at.empty()) out["value_at"] = to_json(value.evaluate(parse_direction(a.at, m.form.rank())));
  print(ctx.out, out);
  return kExitOk;
}

int cmd_witten(Context& ctx, const std::string& file, const std::string& w_text, const std::string& direction,
               unsigned order) {
  const Manifest manifest = ctx.load(file);
  const FourManifold& m = manifest.manifold;
  const CohClass w = parse_coords(w_text, m.form.rank());
  const GaussianSeries series = witten_series(m, w);
  const UnivariateSeries along = evaluate_along(series, parse_direction(direction, m.form.rank()), order);
  ReportJson out = ctx.header("witten", m);
  out["w"] = to_json(w);
  out["prefactor"] = to_json(series.prefactor);
  out["quadratic_coefficient"] = to_json(series.quad_coeff);
  ReportJson coeffs = ReportJson::array();
  for (const auto& c : along.coefficients) coeffs.push_back(to_json(c));
  out["coefficients"] = coeffs;
  out["vanishing_order"] = to_json(vanishing_order(series.core, order));
  print(ctx.out, out);
  return kExitOk;
}

int cmd_bound(Context& ctx, const std::string& file, bool non_strict) {
  const Manifest manifest = ctx.load(file);
  const auto report = basic_class_bound(manifest.manifold, !non_strict);
  ReportJson out = ctx.header("bound", manifest.manifold);
  out.update(to_json(report));
  print(ctx.out, out);
  return exit_code_for(report.verdict);
}

int cmd_region(Context& ctx, const std::string& file, const std::string& w_text, const std::string& format,
               const std::string& window_spec) {
  const Manifest manifest = ctx.load(file);
  const FourManifold& m = manifest.manifold;
  const Window window = window_spec.empty() ? default_window(m) : parse_window(window_spec);
  const RegionDescription region = region_data(m, parse_coords(w_text, m.form.rank()), window);
  if (format == "svg") {
    ctx.out << render_svg(region);
  } else if (format == "ascii") {
    ctx.out << render_ascii(region);
  } else {
    ReportJson out = ctx.header("region", m);
    out.update(to_json(region));
    print(ctx.out, out);
  }
  return kExitOk;
}

int cmd_catalog(Context& ctx, const std::string& action, const std::string& name) {
  if (action == "list") {
    ReportJson out = report_header("catalog", ctx.argv, "");
    ReportJson entries = ReportJson::array();
    for (const auto& n : catalog_names()) {
      const FourManifold m = load_catalog(n).manifold;
      entries.push_back({{"name", n},
                         {"chi", m.chi.str()},
                         {"sigma", m.sigma.str()},
                         {"b_plus", m.b_plus.str()},
                         {"rank", m.form.rank()},
                         {"basic_classes", m.basic_classes.size()}});
    }
    out["entries"] = entries;
    print(ctx.out, out);
    return kExitOk;
  }
  if (name.empty()) throw Error(ErrorCode::Usage, "catalog show needs a NAME");
  ctx.out << serialize_manifest(load_catalog(name));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{args, out, err};
  CLI::App app{"Exact checks of Seiberg-Witten / Donaldson relations on four-manifold data", "swdon"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--lenient", ctx.lenient, "Warn about unknown manifest fields instead of rejecting them");

  std::string file, w, lambda0, lambda1, format = "json", window, action, name;
  int radius = 0;
  bool non_strict = false;
  unsigned order = 0;
  std::string direction;
  RelateArgs relate;

  auto* validate_cmd = app.add_subcommand("validate", "Run the manifest consistency checks");
  validate_cmd->add_option("FILE", file, "Manifest path or catalog name")->required();

  auto* invariants_cmd = app.add_subcommand("invariants", "Print c, chi_h, c1^2, b and the series parity");
  invariants_cmd->add_option("FILE", file)->required();
  invariants_cmd->add_option("--w", w, "Characteristic class (defaults to the manifest's or a computed one)");

  auto* abundance_cmd = app.add_subcommand("abundance", "Search B-perp for a hyperbolic pair");
  abundance_cmd->add_option("FILE", file)->required();
  abundance_cmd->add_option("--radius", radius, "Coordinate search radius")->check(CLI::Range(1, 1000));

  auto* sst_cmd = app.add_subcommand("sst", "Check the superconformal simple type bound");
  sst_cmd->add_option("FILE", file)->required();
  sst_cmd->add_option("--w", w);
  sst_cmd->add_option("--lambda0", lambda0);
  sst_cmd->add_option("--lambda1", lambda1);
  sst_cmd->add_option("--radius", radius)->check(CLI::Range(1, 1000));

  auto* dvanish_cmd = app.add_subcommand("dvanish", "Check Donaldson vanishing in degrees below c");
  dvanish_cmd->add_option("FILE", file)->required();
  dvanish_cmd->add_option("--w", w);
  dvanish_cmd->add_option("--radius", radius)->check(CLI::Range(1, 1000));

  auto* relate_cmd = app.add_subcommand("relate", "Evaluate D^w(h^(delta-2m) x^m) from the relation");
  relate_cmd->add_option("FILE", file)->required();
  relate_cmd->add_option("--lambda", relate.lambda)->required();
  relate_cmd->add_option("--w", relate.w)->required();
  relate_cmd->add_option("--delta", relate.delta)->required();
  relate_cmd->add_option("-m,--m", relate.m)->required();
  relate_cmd->add_option("--at", relate.at, "Evaluate at a rational direction");

  auto* witten_cmd = app.add_subcommand("witten", "Expand 2^(2-c) exp(h.h/2) SW^w along a direction");
  witten_cmd->add_option("FILE", file)->required();
  witten_cmd->add_option("--w", w)->required();
  witten_cmd->add_option("--direction", direction)->required();
  witten_cmd->add_option("--order", order)->required()->check(CLI::Range(0, 64));

  auto* bound_cmd = app.add_subcommand("bound", "Check the lower bound on the number of basic classes");
  bound_cmd->add_option("FILE", file)->required();
  bound_cmd->add_flag("--non-strict", non_strict, "Use b >= c/2 instead of b > c/2");

  auto* region_cmd = app.add_subcommand("region", "Draw the (lambda^2, delta) region");
  region_cmd->add_option("FILE", file)->required();
  region_cmd->add_option("--w", w)->required();
  region_cmd->add_option("--format", format)->check(CLI::IsMember({"svg", "ascii", "json"}));
  region_cmd->add_option("--window", window, "XMIN:XMAX,DMIN:DMAX");

  auto* catalog_cmd = app.add_subcommand("catalog", "List or show built-in manifolds");
  catalog_cmd->add_option("ACTION", action)->required()->check(CLI::IsMember({"list", "show"}));
  catalog_cmd->add_option("NAME", name);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (radius == 0) radius = default_search_radius();
    if (validate_cmd->parsed()) return cmd_validate(ctx, file);
    if (invariants_cmd->parsed()) return cmd_invariants(ctx, file, w);
    if (abundance_cmd->parsed()) return cmd_abundance(ctx, file, radius);
    if (sst_cmd->parsed()) return cmd_sst(ctx, file, w, lambda0, lambda1, radius);
    if (dvanish_cmd->parsed()) return cmd_dvanish(ctx, file, w, radius);
    if (relate_cmd->parsed()) return cmd_relate(ctx, file, relate);
    if (witten_cmd->parsed()) return cmd_witten(ctx, file, w, direction, order);
    if (bound_cmd->parsed()) return cmd_bound(ctx, file, non_strict);
    if (region_cmd->parsed()) return cmd_region(ctx, file, w, format, window);
    if (catalog_cmd->parsed()) return cmd_catalog(ctx, action, name);
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace swdon
