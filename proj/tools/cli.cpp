#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

namespace monoindex::cli {
namespace {

std::string fixed4(double x) {
  if (x == 0) x = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string full(double x) {
  if (x == 0) x = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

/// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) : out_(&fallback) {
    if (path) {
      file_.open(*path, std::ios::out | std::ios::trunc);
      if (!file_) throw OutputError("cannot open '" + *path + "' for writing");
      out_ = &file_;
      path_ = *path;
    }
  }
  std::ostream& stream() { return *out_; }
  void finish() {
    out_->flush();
    if (!*out_) throw OutputError(path_.empty() ? "write to stdout failed" : "write to '" + path_ + "' failed");
  }

 private:
  std::ofstream file_;
  std::ostream* out_;
  std::string path_;
};

AnalyticFunction make_function(const BuiltinSource& src, double M) {
  switch (src.kind) {
    case FunctionKind::SinM: return AnalyticFunction::sin_m(M);
    case FunctionKind::CosM: return AnalyticFunction::cos_m(M);
    case FunctionKind::HAlpha: return AnalyticFunction::h_alpha(src.alpha);
    case FunctionKind::Constant: return AnalyticFunction::constant(src.d);
    case FunctionKind::PiecewiseLinear: break;
  }
  throw InputError("unsupported built-in function");
}

/// Samples of the source together with the domain length they live on.
GridFunctiond load_samples(const RunConfig& cfg) {
  if (const auto* csv = std::get_if<CsvSource>(&cfg.source))
    return read_samples_csv_file(csv->path, cfg.M);
  const auto& builtin = std::get<BuiltinSource>(cfg.source);
  const double M = cfg.M.value_or(1.0);
  return sample(make_function(builtin, M), cfg.n, cfg.rule).with_domain_length(M);
}

double reporting_domain(const RunConfig& cfg, const GridFunctiond& g) {
  return cfg.unit_domain ? 1.0 : g.domain_length();
}

int cmd_index(const RunConfig& cfg, std::ostream& out) {
  const auto g = load_samples(cfg);
  const IndexReport report = compute_indices(g, reporting_domain(cfg, g));
  Sink sink(cfg.output_path, out);
  auto& os = sink.stream();
  switch (cfg.format) {
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["index_I"] = report.index_I;
      j["index_L"] = report.index_L;
      j["n"] = report.n;
      j["M"] = report.M;
      os << to_json_text(j);
      break;
    }
    case OutputFormat::csv:
      os << "index_I,index_L,n,M\n"
         << full(report.index_I) << ',' << full(report.index_L) << ',' << report.n << ','
         << full(report.M) << '\n';
      break;
    case OutputFormat::text:
      os << "index_I  " << fixed4(report.index_I) << '\n'
         << "index_L  " << fixed4(report.index_L) << '\n'
         << "n        " << report.n << '\n'
         << "M        " << fixed4(report.M) << '\n';
      break;
  }
  sink.finish();
  return kSuccess;
}

int cmd_rearrange(const RunConfig& cfg, std::ostream& out) {
  const auto g = load_samples(cfg);
  const auto r = rearrange(g);
  const auto pair = cumulative_pair(g, r);
  const std::size_t n = g.size();
  const double width = g.cell_width();

  Sink sink(cfg.output_path, out);
  auto& os = sink.stream();
  os << "t,h,rearranged,H,convex_rearranged\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    // Both cumulative integrals are linear on a cell, so their midpoint value
    // is the mean of the node values.
    const double H_mid = 0.5 * (pair.H[k] + pair.H[k + 1]);
    const double C_mid = 0.5 * (pair.C[k] + pair.C[k + 1]);
    os << full((static_cast<double>(i) + 0.5) * width) << ',' << full(g[i]) << ','
       << full(r[i]) << ',' << full(H_mid) << ',' << full(C_mid) << '\n';
  }
  sink.finish();
  return kSuccess;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const auto tables = compute_sin_cos_tables(cfg.n);
  Sink sink(cfg.output_path, out);
  auto& os = sink.stream();

  auto rows_json = [](const std::vector<TableRow>& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      j["M"] = r.label;
      j["M_value"] = r.M;
      j["I_sin"] = r.I_sin;
      j["I_cos"] = r.I_cos;
      j["L_sin"] = r.L_sin;
      j["L_cos"] = r.L_cos;
      arr.push_back(std::move(j));
    }
    return arr;
  };

  switch (cfg.format) {
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["n"] = tables.n;
      j["unit_domain"] = rows_json(tables.unit);
      j["domain_M"] = rows_json(tables.scaled);
      os << to_json_text(j);
      break;
    }
    case OutputFormat::csv:
      os << "table,M,M_value,I_sin,I_cos,L_sin,L_cos\n";
      for (const auto* rows : {&tables.unit, &tables.scaled}) {
        const char* name = rows == &tables.unit ? "unit_domain" : "domain_M";
        for (const auto& r : *rows)
          os << name << ',' << r.label << ',' << full(r.M) << ',' << full(r.I_sin) << ','
             << full(r.I_cos) << ',' << full(r.L_sin) << ',' << full(r.L_cos) << '\n';
      }
      break;
    case OutputFormat::text: {
      auto print = [&](const char* title, const std::vector<TableRow>& rows) {
        os << title << " (n = " << tables.n << ")\n";
        char line[128];
        std::snprintf(line, sizeof line, "%-7s %9s %9s %9s %9s\n", "M", "I_sin", "I_cos",
                      "L_sin", "L_cos");
        os << line;
        for (const auto& r : rows) {
          std::snprintf(line, sizeof line, "%-7s %9s %9s %9s %9s\n", r.label.c_str(),
                        fixed4(r.I_sin).c_str(), fixed4(r.I_cos).c_str(),
                        fixed4(r.L_sin).c_str(), fixed4(r.L_cos).c_str());
          os << line;
        }
      };
      print("sin(tM) and cos(tM) on [0,1]", tables.unit);
      os << '\n';
      print("sin(t) and cos(t) on [0,M]", tables.scaled);
      break;
    }
  }
  sink.finish();
  return kSuccess;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out) {
  if (!std::holds_alternative<BuiltinSource>(cfg.source))
    throw InputError("converge needs a built-in --function; sampled data cannot be refined");
  const auto& builtin = std::get<BuiltinSource>(cfg.source);
  const double M = cfg.M.value_or(1.0);
  const double domain = cfg.unit_domain ? 1.0 : M;
  ConvergenceResult result;
  try {
    result = converge(make_function(builtin, M), domain, cfg.n, cfg.tolerance,
                      cfg.max_doublings, cfg.rule);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  Sink sink(cfg.output_path, out);
  auto& os = sink.stream();
  const char* status = result.converged ? "converged" : "unconverged";
  switch (cfg.format) {
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      auto steps = nlohmann::ordered_json::array();
      for (const auto& s : result.steps) {
        nlohmann::ordered_json row;
        row["n"] = s.n;
        row["index_I"] = s.index_I;
        row["index_L"] = s.index_L;
        if (s.gap) {
          row["gap_I"] = s.gap->index_I;
          row["gap_L"] = s.gap->index_L;
        } else {
          row["gap_I"] = nullptr;
          row["gap_L"] = nullptr;
        }
        steps.push_back(std::move(row));
      }
      j["status"] = status;
      j["index_I"] = result.report.index_I;
      j["index_L"] = result.report.index_L;
      j["n"] = result.report.n;
      j["M"] = result.report.M;
      j["tolerance"] = cfg.tolerance;
      j["steps"] = std::move(steps);
      os << to_json_text(j);
      break;
    }
    case OutputFormat::csv:
      os << "n,index_I,index_L,gap_I,gap_L,status\n";
      for (std::size_t i = 0; i < result.steps.size(); ++i) {
        const auto& s = result.steps[i];
        os << s.n << ',' << full(s.index_I) << ',' << full(s.index_L) << ','
           << (s.gap ? full(s.gap->index_I) : "") << ',' << (s.gap ? full(s.gap->index_L) : "")
           << ',' << (i + 1 == result.steps.size() ? status : "") << '\n';
      }
      break;
    case OutputFormat::text:
      os << "n           index_I  index_L  gap_I      gap_L\n";
      for (const auto& s : result.steps) {
        std::string n = std::to_string(s.n);
        n.resize(10, ' ');
        os << n << "  " << fixed4(s.index_I) << "   " << fixed4(s.index_L) << "   "
           << (s.gap ? sci(s.gap->index_I) : "-        ") << "  "
           << (s.gap ? sci(s.gap->index_L) : "-") << '\n';
      }
      os << status << " at n = " << result.report.n << '\n';
      break;
  }
  sink.finish();
  return result.converged ? kSuccess : kNotConverged;
}

const std::map<std::string, FunctionKind> kFunctions{
    {"sin", FunctionKind::SinM},
    {"cos", FunctionKind::CosM},
    {"halpha", FunctionKind::HAlpha},
    {"constant", FunctionKind::Constant}};

const std::map<std::string, SampleRule> kRules{
    {"midpoint", SampleRule::midpoint}, {"left", SampleRule::left}, {"right", SampleRule::right}};

const std::map<std::string, OutputFormat> kFormats{
    {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}};

/// Flag values as parsed, before they are turned into a RunConfig.
struct RawFlags {
  std::optional<std::string> function;
  std::optional<std::string> csv;
  std::optional<double> M;
  double alpha = 0.0;
  double d = 0.0;
  std::optional<std::size_t> n;
  std::string rule = "midpoint";
  std::string format = "json";
  double tol = 1e-6;
  int max_doublings = 14;
  bool unit_domain = false;
  std::optional<std::string> output;
};

void add_source_flags(CLI::App& cmd, RawFlags& f) {
  auto* fn = cmd.add_option("--function", f.function, "Built-in function")
                 ->check(CLI::IsMember(kFunctions));
  auto* csv = cmd.add_option("--csv", f.csv, "Samples: one value per line, or t,value pairs");
  fn->excludes(csv);
  cmd.add_option("--M", f.M,
                 "Domain length [0,M]; also the frequency of sin/cos (default 1)");
  cmd.add_option("--alpha", f.alpha, "Parameter of halpha, in [0,1]")->capture_default_str();
  cmd.add_option("--d", f.d, "Value of the constant function")->capture_default_str();
  cmd.add_option("--n", f.n, "Grid size for built-in functions");
  cmd.add_option("--rule", f.rule, "Sample point inside each cell")
      ->check(CLI::IsMember(kRules))
      ->capture_default_str();
  cmd.add_flag("--unit", f.unit_domain,
               "Report indices of h(t) = f(tM) on [0,1] instead of f on [0,M]");
}

void add_output_flags(CLI::App& cmd, RawFlags& f) {
  cmd.add_option("--out", f.format, "Output format")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
  cmd.add_option("--output,-o", f.output, "Write to this file instead of stdout");
}

RunConfig to_config(Command command, const RawFlags& f) {
  RunConfig cfg;
  cfg.command = command;
  cfg.M = f.M;
  cfg.rule = kRules.at(f.rule);
  cfg.format = kFormats.at(f.format);
  cfg.tolerance = f.tol;
  cfg.max_doublings = f.max_doublings;
  cfg.unit_domain = f.unit_domain;
  cfg.output_path = f.output;

  if (f.M && !(*f.M > 0 && std::isfinite(*f.M))) throw InputError("--M must be positive");
  if (!(f.tol > 0)) throw InputError("--tol must be positive");

  if (command == Command::table) {
    cfg.n = f.n.value_or(100000);
    if (cfg.n < 1) throw InputError("--n must be at least 1");
    return cfg;
  }
  if (f.function) {
    BuiltinSource src;
    src.kind = kFunctions.at(*f.function);
    src.alpha = f.alpha;
    src.d = f.d;
    if (src.kind == FunctionKind::HAlpha && !(f.alpha >= 0 && f.alpha <= 1))
      throw InputError("--alpha must lie in [0, 1]");
    cfg.source = src;
    cfg.n = f.n.value_or(command == Command::converge ? 128 : 1000);
    if (cfg.n < 1) throw InputError("--n must be at least 1");
  } else if (f.csv) {
    if (f.n) throw InputError("--n does not apply to --csv input; n comes from the file");
    cfg.source = CsvSource{*f.csv};
  } else {
    throw InputError("one of --function or --csv is required");
  }
  return cfg;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::index: return cmd_index(cfg, out);
    case Command::rearrange: return cmd_rearrange(cfg, out);
    case Command::table: return cmd_table(cfg, out);
    case Command::converge: return cmd_converge(cfg, out);
  }
  return kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Indices of non-monotonicity for sampled and built-in functions", "monoindex"};
  app.require_subcommand(1);

  RawFlags index_flags, rearrange_flags, table_flags, converge_flags;

  auto* index = app.add_subcommand("index", "Compute both indices");
  add_source_flags(*index, index_flags);
  add_output_flags(*index, index_flags);

  auto* rearr = app.add_subcommand("rearrange",
                                   "Emit t,h,rearranged,H,convex_rearranged curves as CSV");
  add_source_flags(*rearr, rearrange_flags);
  rearr->add_option("--output,-o", rearrange_flags.output, "Write to this file instead of stdout");

  auto* table = app.add_subcommand("table", "Indices of sin and cos on the standard domains");
  table->add_option("--n", table_flags.n, "Grid size (default 100000)");
  add_output_flags(*table, table_flags);
  table_flags.format = "text";

  auto* conv = app.add_subcommand("converge", "Refine the grid by doubling until stable");
  add_source_flags(*conv, converge_flags);
  add_output_flags(*conv, converge_flags);
  conv->add_option("--tol", converge_flags.tol, "Doubling gap tolerance")->capture_default_str();
  conv->add_option("--max-doublings", converge_flags.max_doublings, "Doubling budget")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    RunConfig cfg;
    if (index->parsed()) cfg = to_config(Command::index, index_flags);
    else if (rearr->parsed()) cfg = to_config(Command::rearrange, rearrange_flags);
    else if (table->parsed()) cfg = to_config(Command::table, table_flags);
    else cfg = to_config(Command::converge, converge_flags);
    return dispatch(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kOutputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace monoindex::cli
