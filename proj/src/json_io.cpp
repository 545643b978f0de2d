#include "entroscope/json_io.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "entroscope/error.hpp"
#include "entroscope/parser.hpp"

namespace entroscope {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void format_error(const std::string& msg) { fail(ErrorCode::FormatError, msg); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    format_error(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object()) format_error("expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) format_error(std::string("missing field '") + name + "'");
  return *it;
}

template <class T>
T get(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  try {
    return v.get<T>();
  } catch (const Json::exception&) {
    format_error(std::string("field '") + name + "' has the wrong type");
  }
}

double get_number(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_number()) format_error(std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

std::uint64_t get_unsigned(const Json& v, const std::string& what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    format_error(what + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

Rational exact_rational(const Json& v) {
  static const std::regex kExact(R"(\s*-?\d+(\s*/\s*\d+)?\s*)");
  if (v.is_number_float()) format_error("exact rational required, got the float " + v.dump());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) format_error("exact rational required, got " + v.dump());
  const std::string s = v.get<std::string>();
  if (!std::regex_match(s, kExact)) format_error("exact rational required, got \"" + s + "\"");
  return Rational::parse(s);
}

std::string rational_text(const Rational& r) { return r.to_string(); }

std::vector<std::string> get_names(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_array()) format_error(std::string("field '") + name + "' must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) format_error(std::string("field '") + name + "' must hold strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Json coords_object(const std::vector<double>& coords, const std::vector<std::string>& names) {
  Json out = Json::object();
  for (SubsetMask s = 1; s <= coords.size(); ++s) out[coordinate_key(s, names)] = coords[s - 1];
  return out;
}

std::vector<double> read_coords(const Json& obj, const std::vector<std::string>& names) {
  if (!obj.is_object()) format_error("coordinates must be an object");
  const std::size_t dim = (std::size_t{1} << names.size()) - 1;
  if (obj.size() != dim) format_error("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(obj.size()));
  std::vector<double> out(dim);
  for (SubsetMask s = 1; s <= dim; ++s) out[s - 1] = get_number(obj, coordinate_key(s, names).c_str());
  return out;
}

std::vector<std::string> read_order(const Json& j) {
  auto names = get_names(j, "order");
  if (names.empty() || names.size() > kMaxVariables) format_error("bad variable order");
  return names;
}

Json profile_json(const EntropyProfile& p) {
  Json j;
  j["n"] = p.num_variables();
  j["order"] = p.variables();
  j["coords"] = coords_object(p.coords(), p.variables());
  return j;
}

const char* status_name(ConstraintStatus s) {
  switch (s) {
    case ConstraintStatus::CertifiedZero: return "certified-zero";
    case ConstraintStatus::NumericZero: return "numeric-zero";
    case ConstraintStatus::Violated: return "violated";
  }
  return "violated";
}

ConstraintStatus status_from(const std::string& s) {
  if (s == "certified-zero") return ConstraintStatus::CertifiedZero;
  if (s == "numeric-zero") return ConstraintStatus::NumericZero;
  if (s == "violated") return ConstraintStatus::Violated;
  format_error("unknown constraint status '" + s + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string coordinate_key(SubsetMask s, const std::vector<std::string>& names) {
  const bool single = std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });
  return subset_names(s, names, single ? "" : ",");
}

void write_distribution_json(std::ostream& out, const JointDistribution& d) {
  out << "{\n  \"variables\": [";
  for (int v = 0; v < d.num_variables(); ++v) {
    const auto& var = d.variables()[static_cast<std::size_t>(v)];
    out << (v ? ", " : "") << "{\"name\": " << Json(var.name).dump() << ", \"alphabet\": " << var.alphabet << "}";
  }
  out << "],\n  \"outcomes\": [";
  const std::string uniform = d.is_uniform() ? d.probability(0).to_string() : std::string();
  std::string line;
  for (std::size_t i = 0; i < d.support_size(); ++i) {
    line.clear();
    line += i ? ",\n    {\"values\": [" : "\n    {\"values\": [";
    for (int v = 0; v < d.num_variables(); ++v) {
      if (v) line += ", ";
      line += std::to_string(d.value(i, v));
    }
    line += "], \"p\": \"";
    line += d.is_uniform() ? uniform : d.probability(i).to_string();
    line += "\"}";
    out << line;
  }
  out << "\n  ]\n}\n";
}

std::string distribution_to_json(const JointDistribution& d) {
  std::ostringstream os;
  write_distribution_json(os, d);
  return os.str();
}

JointDistribution distribution_from_json(std::string_view text) {
  Json j = parse_json(text);
  if (j.is_object() && j.contains("distribution")) j = std::move(j["distribution"]);
  const Json& vars = field(j, "variables");
  if (!vars.is_array() || vars.empty()) format_error("'variables' must be a non-empty array");
  std::vector<Variable> variables;
  for (const auto& v : vars) {
    const Json& name = field(v, "name");
    if (!name.is_string()) format_error("variable name must be a string");
    variables.push_back({name.get<std::string>(), get_unsigned(field(v, "alphabet"), "alphabet")});
  }
  const Json& outcomes = field(j, "outcomes");
  if (!outcomes.is_array()) format_error("'outcomes' must be an array");
  std::vector<OutcomeProbability> entries;
  entries.reserve(outcomes.size());
  for (const auto& o : outcomes) {
    const Json& values = field(o, "values");
    if (!values.is_array()) format_error("'values' must be an array");
    Outcome out;
    for (const auto& x : values) {
      const std::uint64_t u = get_unsigned(x, "outcome value");
      if (u > 0xFFFFFFFFull) fail(ErrorCode::OutOfAlphabet, "outcome value " + std::to_string(u) + " out of range");
      out.push_back(static_cast<std::uint32_t>(u));
    }
    entries.push_back({std::move(out), exact_rational(field(o, "p"))});
  }
  return make_distribution(std::move(variables), entries);
}

std::string profile_to_json(const EntropyProfile& p) { return dump(profile_json(p)); }

EntropyProfile profile_from_json(std::string_view text) {
  Json j = parse_json(text);
  if (j.is_object() && j.contains("profile")) j = j["profile"];
  const auto names = read_order(j);
  if (get_unsigned(field(j, "n"), "n") != names.size()) format_error("'n' does not match 'order'");
  return EntropyProfile(names, read_coords(field(j, "coords"), names));
}

std::string profile_report_to_json(const EntropyProfile& p, const PolymatroidVerdict& v) {
  Json j;
  j["profile"] = profile_json(p);
  Json poly;
  poly["pass"] = v.polymatroid;
  poly["checked"] = v.checked;
  Json viol = Json::array();
  for (const auto& x : v.violations) viol.push_back(Json{{"label", x.label}, {"value", x.value}});
  poly["violations"] = viol;
  j["polymatroid"] = poly;
  return dump(j);
}

std::string shannon_to_json(const ShannonTypeVerdict& v, const InfoExpression& e) {
  Json j;
  j["decision"] = v.shannon_type ? "shannon-type" : "not-shannon-type";
  j["variables"] = v.variables;
  j["expression"] = print_canonical(e);
  if (v.shannon_type) {
    Json w = Json::object();
    for (const auto& [label, weight] : v.dual_weights) w[label] = rational_text(weight);
    j["dual_weights"] = w;
  } else {
    Json w = Json::object();
    for (SubsetMask s = 1; s <= v.witness.size(); ++s) w[coordinate_key(s, v.variables)] = rational_text(v.witness[s - 1]);
    j["witness"] = w;
    j["objective"] = rational_text(v.witness_value);
  }
  return dump(j);
}

ShannonTypeVerdict shannon_from_json(std::string_view text, InfoExpression* expression) {
  const Json j = parse_json(text);
  ShannonTypeVerdict v;
  const std::string decision = get<std::string>(j, "decision");
  if (decision != "shannon-type" && decision != "not-shannon-type") format_error("unknown decision '" + decision + "'");
  v.shannon_type = decision == "shannon-type";
  v.variables = get_names(j, "variables");
  if (v.variables.empty() || v.variables.size() > kMaxVariables) format_error("bad variable list");
  const InfoExpression e = parse_expression(get<std::string>(j, "expression"), v.variables);
  if (expression) *expression = e;
  if (v.shannon_type) {
    const Json& w = field(j, "dual_weights");
    if (!w.is_object()) format_error("'dual_weights' must be an object");
    for (const auto& [label, weight] : w.items()) v.dual_weights.emplace_back(label, exact_rational(weight));
  } else {
    const Json& w = field(j, "witness");
    if (!w.is_object()) format_error("'witness' must be an object");
    const std::size_t dim = (std::size_t{1} << v.variables.size()) - 1;
    if (w.size() != dim) format_error("witness must have " + std::to_string(dim) + " coordinates");
    for (SubsetMask s = 1; s <= dim; ++s) v.witness.push_back(exact_rational(field(w, coordinate_key(s, v.variables).c_str())));
    v.witness_value = exact_rational(field(j, "objective"));
  }
  return v;
}

std::string certificate_to_json(const ViolationCertificate& c) {
  Json j;
  j["target"] = c.target;
  j["q"] = c.q;
  j["gap"] = c.gap;
  j["half_width"] = c.half_width;
  j["zero_set"] = c.zero_set;
  j["provenance"] = c.provenance;
  Json bodies = Json::array();
  for (const auto& b : c.bodies)
    bodies.push_back(Json{{"name", b.name}, {"center_value", b.center_value}, {"perturbation", b.perturbation}, {"gap", b.gap}});
  j["bodies"] = bodies;
  j["variables"] = c.variables;
  j["center"] = coords_object(c.center, c.variables);
  j["half_widths"] = coords_object(c.half_widths, c.variables);
  return dump(j);
}

ViolationCertificate certificate_from_json(std::string_view text) {
  const Json j = parse_json(text);
  ViolationCertificate c;
  c.target = get<std::string>(j, "target");
  c.q = static_cast<std::uint32_t>(get_unsigned(field(j, "q"), "q"));
  c.gap = get_number(j, "gap");
  c.half_width = get_number(j, "half_width");
  c.zero_set = get_names(j, "zero_set");
  c.provenance = get_names(j, "provenance");
  const Json& bodies = field(j, "bodies");
  if (!bodies.is_array()) format_error("'bodies' must be an array");
  for (const auto& b : bodies)
    c.bodies.push_back({get<std::string>(b, "name"), get_number(b, "center_value"), get_number(b, "perturbation"),
                        get_number(b, "gap")});
  c.variables = get_names(j, "variables");
  if (c.variables.empty() || c.variables.size() > kMaxVariables) format_error("bad variable list");
  c.center = read_coords(field(j, "center"), c.variables);
  c.half_widths = read_coords(field(j, "half_widths"), c.variables);
  return c;
}

std::string example_report_to_json(const ExampleReport& r) {
  Json j;
  j["q"] = r.q;
  j["support_size"] = r.support_size;
  j["uniform"] = r.uniform;
  j["construction_holds"] = r.construction_holds;
  j["joint_entropy"] = r.joint_entropy;
  Json qs = Json::array();
  for (const auto& c : r.quantities)
    qs.push_back(Json{{"name", c.name}, {"brute_force", c.brute_force}, {"closed_form", c.closed_form}, {"matches", c.matches}});
  j["quantities"] = qs;
  Json st = Json::array();
  for (const auto& s : r.structure) st.push_back(Json{{"name", s.name}, {"expected", s.expected}, {"certified", s.certified}});
  j["structure"] = st;
  j["closed_forms_hold"] = r.closed_forms_hold;
  j["all_pass"] = r.all_pass;
  return dump(j);
}

ExampleReport example_report_from_json(std::string_view text) {
  const Json j = parse_json(text);
  ExampleReport r;
  r.q = static_cast<std::uint32_t>(get_unsigned(field(j, "q"), "q"));
  r.support_size = get_unsigned(field(j, "support_size"), "support_size");
  r.uniform = get<bool>(j, "uniform");
  r.construction_holds = get<bool>(j, "construction_holds");
  r.joint_entropy = get_number(j, "joint_entropy");
  for (const auto& c : field(j, "quantities"))
    r.quantities.push_back({get<std::string>(c, "name"), get_number(c, "brute_force"), get_number(c, "closed_form"),
                            get<bool>(c, "matches")});
  for (const auto& s : field(j, "structure"))
    r.structure.push_back({get<std::string>(s, "name"), get<bool>(s, "expected"), get<bool>(s, "certified")});
  r.closed_forms_hold = get<bool>(j, "closed_forms_hold");
  r.all_pass = get<bool>(j, "all_pass");
  return r;
}

std::string verdict_to_json(const ConditionalVerdict& v) {
  Json j;
  j["name"] = v.name;
  j["applicable"] = v.applicable;
  j["numeric_warning"] = v.numeric_warning;
  Json cs = Json::array();
  for (const auto& c : v.constraints)
    cs.push_back(Json{{"text", c.text}, {"status", status_name(c.status)}, {"value", c.value}});
  j["constraints"] = cs;
  j["body"] = v.body ? Json(*v.body) : Json(nullptr);
  j["holds"] = v.holds;
  return dump(j);
}

ConditionalVerdict verdict_from_json(std::string_view text) {
  const Json j = parse_json(text);
  ConditionalVerdict v;
  v.name = get<std::string>(j, "name");
  v.applicable = get<bool>(j, "applicable");
  v.numeric_warning = get<bool>(j, "numeric_warning");
  for (const auto& c : field(j, "constraints"))
    v.constraints.push_back({get<std::string>(c, "text"), status_from(get<std::string>(c, "status")), get_number(c, "value")});
  const Json& body = field(j, "body");
  if (!body.is_null()) {
    if (!body.is_number()) format_error("'body' must be a number or null");
    v.body = body.get<double>();
  }
  v.holds = get<bool>(j, "holds");
  return v;
}

}  // namespace entroscope
