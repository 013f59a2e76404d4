#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cli.hpp"

namespace monoindex::cli {
namespace {

constexpr double kSpacingTolerance = 1e-9;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_number(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty()) return std::nullopt;
  return value;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

bool looks_like_header(const std::vector<std::string_view>& fields) {
  for (auto f : fields) {
    if (f.empty() || !std::isalpha(static_cast<unsigned char>(f.front()))) return false;
    if (parse_number(f)) return false;  // "nan", "inf"
  }
  return true;
}

}  // namespace

GridFunctiond read_samples_csv(std::istream& in, std::optional<double> M_override) {
  if (M_override && !(*M_override > 0 && std::isfinite(*M_override)))
    throw InputError("--M must be positive and finite");

  std::vector<double> ts;
  std::vector<std::size_t> t_lines;
  std::vector<double> values;
  std::size_t columns = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty()) continue;
    const auto fields = split_fields(content);
    if (line_no == 1 && looks_like_header(fields)) continue;
    if (columns == 0) {
      if (fields.size() > 2) fail(line_no, "expected one value or a t,value pair");
      columns = fields.size();
    } else if (fields.size() != columns) {
      fail(line_no, "expected " + std::to_string(columns) + " field(s), found " +
                        std::to_string(fields.size()));
    }
    std::vector<double> parsed;
    for (auto f : fields) {
      const auto v = parse_number(f);
      if (!v) fail(line_no, "cannot parse '" + std::string(f) + "' as a number");
      if (!std::isfinite(*v)) fail(line_no, "non-finite value '" + std::string(f) + "'");
      parsed.push_back(*v);
    }
    if (columns == 2) {
      ts.push_back(parsed[0]);
      t_lines.push_back(line_no);
    }
    values.push_back(parsed.back());
  }
  if (in.bad()) throw InputError("read error");
  if (values.empty()) throw InputError("no samples in input");

  double M = 1.0;
  if (columns == 2 && ts.size() > 1) {
    const double spacing = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
    for (std::size_t i = 1; i < ts.size(); ++i)
      if (!(ts[i] > ts[i - 1])) fail(t_lines[i], "t values must be strictly increasing");
    for (std::size_t i = 1; i < ts.size(); ++i) {
      if (std::abs((ts[i] - ts[i - 1]) - spacing) > kSpacingTolerance)
        fail(t_lines[i], "t values do not form a uniform grid");
    }
    M = spacing * static_cast<double>(ts.size());
  }
  if (M_override) M = *M_override;
  return GridFunctiond::from_values(std::span<const double>(values), M);
}

GridFunctiond read_samples_csv_file(const std::string& path, std::optional<double> M_override) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return read_samples_csv(in, M_override);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

void write_number(std::string& out, double x) {
  if (x == 0) x = 0;  // no "-0": it would parse back as the integer 0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void write_value(std::string& out, const nlohmann::ordered_json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::object: {
      if (v.empty()) { out += "{}"; return; }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += nlohmann::ordered_json(key).dump();
        out += ": ";
        write_value(out, item, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) { out += "[]"; return; }
      out += "[\n";
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_value(out, item, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      write_number(out, v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

std::string to_json_text(const nlohmann::ordered_json& value) {
  std::string out;
  write_value(out, value, 0);
  out += '\n';
  return out;
}

}  // namespace monoindex::cli
