#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "monoindex/monoindex.hpp"

namespace monoindex::cli {

/// Process exit statuses.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kOutputError = 3,
  kNotConverged = 4,
};

/// Bad flags, unreadable or malformed input data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output destination could not be written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { index, rearrange, table, converge };
enum class OutputFormat { json, csv, text };

struct BuiltinSource {
  FunctionKind kind = FunctionKind::SinM;
  double alpha = 0.0;
  double d = 0.0;
};

struct CsvSource {
  std::string path;
};

struct RunConfig {
  Command command = Command::index;
  std::variant<std::monostate, BuiltinSource, CsvSource> source;
  std::optional<double> M;          ///< frequency and domain length; from the data when absent
  std::size_t n = 1000;
  SampleRule rule = SampleRule::midpoint;
  OutputFormat format = OutputFormat::json;
  double tolerance = 1e-6;
  int max_doublings = 14;
  bool unit_domain = false;         ///< report indices of h(t) = f(tM) on [0, 1]
  std::optional<std::string> output_path;
};

/**
 * Reads samples from CSV: one value per line, or `t,value` pairs on a
 * uniform grid (spacing tolerance 1e-9). A non-numeric header on the first
 * line is skipped. For pairs the domain length is n times the spacing; for
 * bare values it is 1. `M_override` replaces either.
 *
 * Throws InputError naming the offending line.
 */
GridFunctiond read_samples_csv(std::istream& in, std::optional<double> M_override);
GridFunctiond read_samples_csv_file(const std::string& path, std::optional<double> M_override);

/**
 * JSON text with every floating-point number written to 17 significant
 * digits. Feeding the output back through nlohmann::json::parse and this
 * function reproduces it byte for byte.
 */
std::string to_json_text(const nlohmann::ordered_json& value);

/// One M row of the sin/cos tables.
struct TableRow {
  std::string label;
  double M = 0;
  double I_sin = 0;
  double I_cos = 0;
  double L_sin = 0;
  double L_cos = 0;
};

struct SinCosTables {
  std::size_t n = 0;
  std::vector<TableRow> unit;    ///< sin(tM), cos(tM) on [0, 1]
  std::vector<TableRow> scaled;  ///< sin, cos on [0, M]
};

/// Indices of sin and cos for M in {pi/2, pi, 3pi/2, 2pi}.
SinCosTables compute_sin_cos_tables(std::size_t n = 100000);

/// Parses arguments (without the program name) and runs the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoindex::cli
