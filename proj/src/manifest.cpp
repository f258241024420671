#include "swdon/manifest.hpp"

#include <json.hpp>

#include <set>

namespace swdon {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ParseError, "manifest " + path + ": " + what);
}

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Integer integer_field(const Json& node, const std::string& path) {
  if (node.is_number_integer()) return node.is_number_unsigned() ? Integer(node.get<std::uint64_t>())
                                                                  : Integer(node.get<std::int64_t>());
  // Big integers may be written as decimal strings.
  if (node.is_string()) {
    try {
      return parse_integer(node.get<std::string>());
    } catch (const Error&) {
    }
  }
  schema_error(path, "expected an integer");
}

class ObjectReader {
 public:
  ObjectReader(const Json& node, std::string path, const ParseOptions& options, std::vector<std::string>* warnings)
      : node_(node), path_(std::move(path)), options_(options), warnings_(warnings) {
    if (!node.is_object()) schema_error(path_, "expected an object");
  }

  const Json* optional(const std::string& key) {
    seen_.insert(key);
    auto it = node_.find(key);
    return it == node_.end() ? nullptr : &*it;
  }

  const Json& required(const std::string& key) {
    const Json* v = optional(key);
    if (!v) schema_error(path_, "missing field \"" + key + "\"");
    return *v;
  }

  std::string child(const std::string& key) const { return path_ + "." + key; }

  void finish() {
    for (const auto& [key, value] : node_.items()) {
      if (seen_.count(key)) continue;
      if (!options_.lenient) schema_error(path_, "unknown field \"" + key + "\"");
      if (warnings_) warnings_->push_back("ignoring unknown field " + path_ + "." + key);
    }
  }

 private:
  const Json& node_;
  std::string path_;
  const ParseOptions& options_;
  std::vector<std::string>* warnings_;
  std::set<std::string> seen_;
};

CohClass coords_field(const Json& node, const std::string& path) {
  if (!node.is_array()) schema_error(path, "expected an integer array");
  IntVector v(static_cast<Index>(node.size()));
  for (std::size_t i = 0; i < node.size(); ++i)
    v(static_cast<Index>(i)) = integer_field(node[i], path + "[" + std::to_string(i) + "]");
  return CohClass(std::move(v));
}

Block block_field(const Json& node, const std::string& path, const ParseOptions& options,
                  std::vector<std::string>* warnings) {
  ObjectReader reader(node, path, options, warnings);
  const Json& type = reader.required("type");
  if (!type.is_string()) schema_error(reader.child("type"), "expected a string");
  const auto kind = type.get<std::string>();
  Block block;
  if (kind == "H") {
    block = Block::hyperbolic();
  } else if (kind == "E8") {
    const Integer sign = integer_field(reader.required("sign"), reader.child("sign"));
    if (sign != 1 && sign != -1) schema_error(reader.child("sign"), "must be 1 or -1");
    block = Block::e8(sign.convert_to<int>());
  } else if (kind == "diag") {
    const Json& entries = reader.required("entries");
    if (!entries.is_array() || entries.empty()) schema_error(reader.child("entries"), "expected a nonempty array");
    std::vector<Integer> values;
    for (std::size_t i = 0; i < entries.size(); ++i)
      values.push_back(integer_field(entries[i], reader.child("entries") + "[" + std::to_string(i) + "]"));
    block = Block::diagonal(std::move(values));
  } else {
    schema_error(reader.child("type"), "unknown block type \"" + kind + "\" (expected H, E8 or diag)");
  }
  reader.finish();
  return block;
}

OrderedJson integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

OrderedJson coords_json(const CohClass& c) {
  OrderedJson out = OrderedJson::array();
  for (Index i = 0; i < c.size(); ++i) out.push_back(integer_json(c[i]));
  return out;
}

}  // namespace

Manifest parse_manifest(std::string_view text, const ParseOptions& options, std::vector<std::string>* warnings) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "manifest syntax error at " + position_of(text, e.byte) + ": " + e.what());
  }

  ObjectReader reader(root, "$", options, warnings);
  if (const Json* version = reader.optional("schema_version")) {
    if (integer_field(*version, "$.schema_version") != kSchemaVersion)
      schema_error("$.schema_version", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
  }

  Manifest out;
  FourManifold& m = out.manifold;
  const Json& name = reader.required("name");
  if (!name.is_string()) schema_error("$.name", "expected a string");
  m.name = name.get<std::string>();
  m.chi = integer_field(reader.required("chi"), "$.chi");
  m.sigma = integer_field(reader.required("sigma"), "$.sigma");
  m.b_plus = integer_field(reader.required("b_plus"), "$.b_plus");

  const Json& form = reader.required("form");
  if (!form.is_array()) schema_error("$.form", "expected an array of blocks");
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < form.size(); ++i)
    blocks.push_back(block_field(form[i], "$.form[" + std::to_string(i) + "]", options, warnings));
  m.form = IntegralLattice(std::move(blocks));

  const Json& classes = reader.required("basic_classes");
  if (!classes.is_array()) schema_error("$.basic_classes", "expected an array");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string path = "$.basic_classes[" + std::to_string(i) + "]";
    ObjectReader entry(classes[i], path, options, warnings);
    BasicClassEntry e;
    e.k = coords_field(entry.required("coords"), entry.child("coords"));
    e.sw = integer_field(entry.required("sw"), entry.child("sw"));
    entry.finish();
    m.basic_classes.push_back(std::move(e));
  }

  if (const Json* flag = reader.optional("assume_conjecture")) {
    if (!flag->is_boolean()) schema_error("$.assume_conjecture", "expected a boolean");
    m.conjecture_assumed = flag->get<bool>();
  }
  if (const Json* w = reader.optional("w")) {
    out.w = coords_field(*w, "$.w");
    if (out.w->size() != m.form.rank())
      schema_error("$.w", "length " + std::to_string(out.w->size()) + " differs from form rank " +
                              std::to_string(m.form.rank()));
  }
  reader.finish();

  if (options.validate) require_valid(m);
  return out;
}

std::string serialize_manifest(const Manifest& manifest) {
  const FourManifold& m = manifest.manifold;
  OrderedJson root;
  root["schema_version"] = kSchemaVersion;
  root["name"] = m.name;
  root["chi"] = integer_json(m.chi);
  root["sigma"] = integer_json(m.sigma);
  root["b_plus"] = integer_json(m.b_plus);
  OrderedJson form = OrderedJson::array();
  for (const auto& b : m.form.blocks()) {
    OrderedJson block;
    switch (b.kind) {
      case Block::Kind::Hyperbolic:
        block["type"] = "H";
        break;
      case Block::Kind::E8:
        block["type"] = "E8";
        block["sign"] = b.sign;
        break;
      case Block::Kind::Diagonal: {
        block["type"] = "diag";
        OrderedJson entries = OrderedJson::array();
        for (const auto& e : b.entries) entries.push_back(integer_json(e));
        block["entries"] = entries;
        break;
      }
    }
    form.push_back(block);
  }
  root["form"] = form;
  OrderedJson classes = OrderedJson::array();
  for (const auto& e : m.basic_classes) {
    OrderedJson entry;
    entry["coords"] = coords_json(e.k);
    entry["sw"] = integer_json(e.sw);
    classes.push_back(entry);
  }
  root["basic_classes"] = classes;
  root["assume_conjecture"] = m.conjecture_assumed;
  if (manifest.w) root["w"] = coords_json(*manifest.w);
  return root.dump(2) + "\n";
}

}  // namespace swdon
