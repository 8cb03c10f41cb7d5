#pragma once

#include "sgcm/error.hpp"
#include "sgcm/int_matrix.hpp"
#include "sgcm/simplicial.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sgcm::cli {

struct InputDocument {
  IntMatrix generators;
  std::optional<std::string> label;
};

/// Malformed input file; line and column are 1-based, 0 when unknown.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Text (`dim n` then one generator per line) or JSON, chosen by the first
/// non-blank character.
InputDocument parse_input(std::string_view bytes);

enum class Format { Text, Json };

struct RunConfig {
  FieldSpec field = FieldSpec::rationals();
  std::optional<Integer> bound;
  std::optional<Integer> degree;
  Format format = Format::Text;
  std::optional<std::uint64_t> seed;
};

/// "rational" or "fp:<p>".
FieldSpec parse_field(std::string_view text);

inline const std::vector<std::string> kCommands{"facets", "transform", "standard", "complex", "cohomology",
                                                "s2",     "cm",        "gw",       "report"};

struct CommandResult {
  std::string out;
  std::string err;
  int exit_code = 0;
};

/// Result object of a command, before rendering. Throws the sgcm error types.
nlohmann::ordered_json evaluate(const std::string& command, const InputDocument& doc, const RunConfig& cfg);

/// Plain-text rendering of an evaluated document.
std::string render_text(const nlohmann::ordered_json& doc);

/// Evaluates and renders; maps InputError to 1, UnsupportedError to 2 and
/// anything else to 3.
CommandResult run_command(const std::string& command, const InputDocument& doc,
                          const RunConfig& cfg);

/// Full program: argv parsing, file reading, dispatch.
CommandResult run_main(int argc, const char* const* argv);

}  // namespace sgcm::cli
