#include "cli.hpp"

#include "sgcm/cohomology.hpp"
#include "sgcm/semigroup.hpp"
#include "sgcm/simplicial.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

namespace sgcm::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string located(std::size_t line, std::size_t column, const std::string& message) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_digits(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

Integer parse_entry(const Token& t, std::size_t line) {
  if (!t.text.empty() && t.text[0] == '-' && is_digits(std::string_view(t.text).substr(1)))
    throw ParseError(line, t.column, "negative entry " + t.text);
  if (!is_digits(t.text))
    throw ParseError(line, t.column, "expected a nonnegative integer, got '" + t.text + "'");
  return Integer(t.text);
}

InputDocument parse_text(std::string_view bytes) {
  InputDocument doc;
  std::optional<std::size_t> dim;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    const std::size_t end = std::min(bytes.find('\n', pos), bytes.size());
    const std::string_view line = bytes.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::vector<Token> tokens = split(line);
    if (tokens.empty() || tokens[0].text[0] == '#') continue;
    if (!dim) {
      if (tokens[0].text != "dim")
        throw ParseError(line_no, tokens[0].column, "expected 'dim <n>' header");
      if (tokens.size() != 2)
        throw ParseError(line_no, tokens.size() < 2 ? line.size() + 1 : tokens[2].column,
                         "expected 'dim <n>' header");
      const Integer n = parse_entry(tokens[1], line_no);
      if (n == 0 || n > 64) throw ParseError(line_no, tokens[1].column, "dimension must be in 1..64");
      dim = static_cast<std::size_t>(n);
      doc.generators = IntMatrix(0, *dim);
      continue;
    }
    if (tokens.size() != *dim)
      throw ParseError(line_no, tokens.size() > *dim ? tokens[*dim].column : line.size() + 1,
                       "expected " + std::to_string(*dim) + " entries, got " +
                           std::to_string(tokens.size()));
    IntVector row;
    for (const Token& t : tokens) row.push_back(parse_entry(t, line_no));
    doc.generators.append_row(row);
  }
  if (!dim) throw ParseError(1, 1, "empty input");
  if (doc.generators.rows() == 0) throw ParseError(line_no, 1, "no generators");
  return doc;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view bytes, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(offset, bytes.size()); ++i) {
    if (bytes[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

InputDocument parse_json(std::string_view bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(bytes, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    throw ParseError(line, column, colon == std::string::npos ? what : what.substr(colon + 2));
  }
  if (!j.is_object()) throw ParseError(0, 0, "json input must be an object");
  if (j.contains("version") && j["version"] != 1)
    throw ParseError(0, 0, "unsupported json version " + j["version"].dump());
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ParseError(0, 0, "json input needs a \"generators\" array");
  InputDocument doc;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError(0, 0, "\"label\" must be a string");
    doc.label = j["label"].get<std::string>();
  }
  const auto& gens = j["generators"];
  if (gens.empty()) throw ParseError(0, 0, "no generators");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string where = "generators[" + std::to_string(k) + "]";
    if (!gens[k].is_array() || gens[k].empty())
      throw ParseError(0, 0, where + ": expected a nonempty array");
    if (k == 0) doc.generators = IntMatrix(0, gens[0].size());
    if (gens[k].size() != doc.generators.cols())
      throw ParseError(0, 0, where + ": expected " + std::to_string(doc.generators.cols()) +
                                 " entries, got " + std::to_string(gens[k].size()));
    IntVector row;
    for (std::size_t c = 0; c < gens[k].size(); ++c) {
      const auto& v = gens[k][c];
      const std::string at = where + "[" + std::to_string(c) + "]";
      if (v.is_number_integer() && v.get<long long>() < 0 && !v.is_number_unsigned())
        throw ParseError(0, 0, at + ": negative entry " + v.dump());
      if (!v.is_number_unsigned() && !v.is_number_integer())
        throw ParseError(0, 0, at + ": expected a nonnegative integer, got " + v.dump());
      row.push_back(Integer(v.get<std::uint64_t>()));
    }
    doc.generators.append_row(row);
  }
  return doc;
}

Json number(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(v));
  return Json(v.str());
}

Json vec(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(number(x));
  return a;
}

Json mat(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec(m.row(r)));
  return a;
}

Json labels(VertexSet v) {
  Json a = Json::array();
  for (std::size_t l : vertex_list(v)) a.push_back(l);
  return a;
}

Json optional_vec(const std::optional<IntVector>& v) { return v ? vec(*v) : Json(nullptr); }

Json facets_json(const AffineSemigroup& s) {
  Json facets = Json::array();
  for (std::size_t f = 0; f < s.num_facets(); ++f) {
    Json on = Json::array();
    for (std::size_t g : s.facet_generators(f)) on.push_back(g + 1);
    facets.push_back(Json{{"index", f + 1}, {"normal", vec(s.cone().facet_normals.row(f))},
                          {"generators", on}});
  }
  return Json{{"rank", s.rank()},
              {"num_facets", s.num_facets()},
              {"degree_functional", vec(s.degree_functional())},
              {"lattice_basis", mat(s.lattice().basis())},
              {"facets", facets}};
}

Json standard_json(const StandardReport& r) {
  return Json{{"saturation_in_orthant", r.saturation_in_orthant},
              {"facets_distinct", r.facets_distinct},
              {"facet_ranks", r.facet_ranks},
              {"standard", r.standard()}};
}

Json transform_json(const HochsterTransform& t) {
  return Json{{"map", mat(t.map)},
              {"image_generators", mat(t.image.generators())},
              {"image_standard", is_standard(t.image).standard()}};
}

Json profile_json(const SemigroupProfile& p) {
  return Json{{"ambient_dim", p.ambient_dim},
              {"rank", p.rank},
              {"num_facets", p.num_facets},
              {"num_generators", p.num_generators},
              {"homogeneous", p.homogeneous},
              {"toric_surface_in_P4", p.is_toric_surface_in_P4}};
}

Json complex_json(const AffineSemigroup& s, const FieldSpec& field) {
  const SimplicialComplex pi = build_pi_S(s);
  Json faces = Json::array();
  for (VertexSet f : pi.faces()) faces.push_back(labels(f));
  Json missing = Json::array();
  const std::size_t m = s.num_facets();
  for (VertexSet j : non_faces(pi, m >= 2 ? m - 2 : 0)) {
    Json betti = Json::array();
    for (std::size_t b : reduced_betti_numbers(restrict(pi, j), field)) betti.push_back(b);
    missing.push_back(Json{{"J", labels(j)}, {"reduced_betti", betti}});
  }
  return Json{{"vertices", m}, {"faces", faces}, {"non_faces", missing}};
}

Json verdict_json(const CmVerdict& v) {
  return Json{{"verdict", to_string(v.kind)},
              {"bound", number(v.bound)},
              {"level", v.level ? Json(*v.level) : Json(nullptr)},
              {"J", v.j ? labels(*v.j) : Json(nullptr)},
              {"witness", optional_vec(v.witness)}};
}

Json cohomology_json(const CohomologyReport& r) {
  Json contributions = Json::array();
  for (const auto& c : r.contributions) {
    Json betti = Json::array();
    for (std::size_t b : c.betti) betti.push_back(b);
    contributions.push_back(Json{{"J", labels(c.j)},
                                 {"reduced_betti", betti},
                                 {"witness_count", c.witness_count},
                                 {"witness", optional_vec(c.witness)}});
  }
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json contributing = Json::array();
    for (std::size_t c : l.contributing) contributing.push_back(labels(r.contributions[c].j));
    levels.push_back(Json{{"level", l.level},
                          {"verdict", to_string(l.verdict)},
                          {"contributing", contributing},
                          {"dimension_in_box", l.dimension_in_box},
                          {"witness", optional_vec(l.witness)},
                          {"witness_J", l.witness_set ? labels(*l.witness_set) : Json(nullptr)}});
  }
  return Json{{"rank", r.rank},
              {"field", r.field.to_string()},
              {"bound", number(r.bound)},
              {"box_points", r.box_points},
              {"contributions", contributions},
              {"levels", levels}};
}

Json s2_json(const AffineSemigroup& s, const Integer& d) {
  const auto diff = sprime_minus_S_up_to(s, d);
  Json pts = Json::array();
  for (const auto& x : diff) pts.push_back(vec(x));
  return Json{{"degree", number(d)},
              {"count", diff.size()},
              {"equal_up_to_degree", diff.empty()},
              {"sprime_minus_s", pts}};
}

void render(const Json& v, int indent, std::ostringstream& os);

bool is_inline(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& e : v)
    if (e.is_object() || (e.is_array() && !is_inline(e))) return false;
  return true;
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render_member(const std::string& key, const Json& v, int indent, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(indent), ' ') << key << ":";
  if (is_inline(v)) {
    os << ' ' << scalar(v) << '\n';
    return;
  }
  os << '\n';
  render(v, indent + 2, os);
}

void render(const Json& v, int indent, std::ostringstream& os) {
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) render_member(k, e, indent, os);
  } else if (v.is_array()) {
    for (const auto& e : v) {
      os << std::string(static_cast<std::size_t>(indent), ' ') << "-";
      if (is_inline(e)) {
        os << ' ' << scalar(e) << '\n';
      } else {
        os << '\n';
        render(e, indent + 2, os);
      }
    }
  } else {
    os << std::string(static_cast<std::size_t>(indent), ' ') << scalar(v) << '\n';
  }
}

Integer parse_count(const std::string& text, const std::string& flag) {
  if (!is_digits(text)) throw InputError(flag + " expects a nonnegative integer, got '" + text + "'");
  return Integer(text);
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError(located(line, column, message)), line_(line), column_(column) {}

InputDocument parse_input(std::string_view bytes) {
  const std::size_t first = bytes.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError(1, 1, "empty input");
  if (bytes[first] == '{' || bytes[first] == '[') return parse_json(bytes);
  return parse_text(bytes);
}

FieldSpec parse_field(std::string_view text) {
  if (text == "rational") return FieldSpec::rationals();
  if (text.substr(0, 3) == "fp:" && is_digits(text.substr(3)) && text.size() < 16)
    return FieldSpec::prime_field(std::stoull(std::string(text.substr(3))));
  throw InputError("--field expects 'rational' or 'fp:<prime>', got '" + std::string(text) + "'");
}

Json evaluate(const std::string& command, const InputDocument& doc, const RunConfig& cfg) {
  const AffineSemigroup s = build_semigroup(doc.generators);
  const Integer bound = cfg.bound.value_or(default_bound(s));
  const Integer degree = cfg.degree.value_or(default_degree(s));
  const CohomologyOptions options{cfg.field, bound};

  Json out;
  out["version"] = 1;
  out["command"] = command;
  out["input"] = Json{{"label", doc.label ? Json(*doc.label) : Json(nullptr)},
                      {"ambient_dim", s.ambient_dim()},
                      {"generators", mat(s.generators())}};
  out["config"] = Json{{"field", cfg.field.to_string()}, {"bound", number(bound)},
                       {"degree", number(degree)}};

  Json result;
  if (command == "facets") {
    result = facets_json(s);
  } else if (command == "transform") {
    result = transform_json(hochster_transform(s));
  } else if (command == "standard") {
    result = standard_json(is_standard(s));
  } else if (command == "complex") {
    result = complex_json(s, cfg.field);
  } else if (command == "cohomology") {
    result = cohomology_json(analyze_cohomology(s, options));
  } else if (command == "s2") {
    result = s2_json(s, degree);
  } else if (command == "cm") {
    result = verdict_json(cm_verdict(s, options));
  } else if (command == "gw") {
    const GotoWatanabeReport r = goto_watanabe_check(s, degree, options);
    Json pts = Json::array();
    for (const auto& x : r.sprime_minus_s) pts.push_back(vec(x));
    result = Json{{"degree", number(r.degree)},
                  {"sprime_minus_s", pts},
                  {"cm", verdict_json(r.cm)},
                  {"consistent", r.consistent},
                  {"conclusion", r.conclusion}};
  } else if (command == "report") {
    const CohomologyReport report = analyze_cohomology(s, options);
    result = Json{{"profile", profile_json(classify(s))},
                  {"facets", facets_json(s)},
                  {"standard", standard_json(is_standard(s))},
                  {"transform", transform_json(hochster_transform(s))},
                  {"complex", complex_json(s, cfg.field)},
                  {"cohomology", cohomology_json(report)},
                  {"cm", verdict_json(cm_verdict(report))}};
  } else {
    throw InputError("unknown command '" + command + "'");
  }
  out["result"] = result;
  return out;
}

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render(doc, 0, os);
  return os.str();
}

CommandResult run_command(const std::string& command, const InputDocument& doc,
                          const RunConfig& cfg) {
  CommandResult res;
  try {
    const Json out = evaluate(command, doc, cfg);
    res.out = cfg.format == Format::Json ? out.dump(2) + "\n" : render_text(out);
  } catch (const InputError& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 1;
  } catch (const UnsupportedError& e) {
    res.err = std::string("unsupported: ") + e.what() + "\n";
    res.exit_code = 2;
  } catch (const std::exception& e) {
    res.err = std::string("internal error: ") + e.what() + "\n";
    res.exit_code = 3;
  }
  return res;
}

CommandResult run_main(int argc, const char* const* argv) {
  CLI::App app{"Affine semigroups, their S2-ification and Cohen-Macaulay tests"};
  app.name("sgcm");
  std::string command, path, field = "rational", bound, degree, format = "text";
  std::uint64_t seed = 0;
  app.add_option("command", command, "facets|transform|standard|complex|cohomology|s2|cm|gw|report")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("input", path, "input file, or - for stdin")->required();
  app.add_option("--field", field, "rational or fp:<p>");
  app.add_option("--bound", bound, "box half-width B (default 4 x max generator degree)");
  app.add_option("--degree", degree, "degree cap d (default 3 x max generator degree)");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for randomized checks");

  CommandResult res;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 1;
    return res;
  }

  RunConfig cfg;
  InputDocument doc;
  try {
    cfg.field = parse_field(field);
    if (!bound.empty()) cfg.bound = parse_count(bound, "--bound");
    if (!degree.empty()) cfg.degree = parse_count(degree, "--degree");
    cfg.format = format == "json" ? Format::Json : Format::Text;
    if (app.count("--seed")) cfg.seed = seed;
    std::string bytes;
    if (path == "-") {
      bytes.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw InputError("cannot open '" + path + "'");
      bytes.assign(std::istreambuf_iterator<char>(in), {});
    }
    doc = parse_input(bytes);
  } catch (const InputError& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 1;
    return res;
  }
  return run_command(command, doc, cfg);
}

}  // namespace sgcm::cli
