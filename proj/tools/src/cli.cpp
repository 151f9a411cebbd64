#include "alif/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "alif/counterexample.hpp"
#include "alif/decomposition.hpp"
#include "alif/parallel.hpp"
#include "alif/serialize.hpp"
#include "alif/spectral.hpp"
#include "alif/symbol.hpp"

namespace alif::cli {
namespace {

// Anything the user can fix by changing the invocation; maps to exit 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& p, const char* what) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ConfigError(std::string(what) + " file not found: " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

bool looks_inline(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  return first != std::string::npos && s[first] == '{';
}

Filter resolve_filter(const std::string& spec) {
  if (spec == "uniform") return make_uniform_filter();
  if (spec == "triangular") return make_triangular_filter();
  if (spec == "counterexample") return build_counterexample().filter_raw;
  if (spec == "counterexample-normalized") return build_counterexample().filter_normalized;
  const auto j = looks_inline(spec) ? parse_json(spec, "filter") : parse_json(read_file(spec, "filter"), "filter");
  return filter_from_json(j);
}

std::optional<double> as_number(const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  return std::nullopt;
}

LengthFunction resolve_length(const std::string& spec) {
  if (spec == "counterexample") return build_counterexample().length;
  if (const auto v = as_number(spec)) return make_constant_length(*v);
  const auto j = looks_inline(spec) ? parse_json(spec, "length") : parse_json(read_file(spec, "length"), "length");
  return length_from_json(j);
}

std::string default_length(Command c) { return c == Command::decompose ? "extrema" : "8"; }

void validate(const RunConfig& c) {
  if (c.n < 2) throw ConfigError("--n must be at least 2");
  if (c.grid_x < 2 || c.grid_theta < 2) throw ConfigError("--grid-x and --grid-theta must be at least 2");
  if (c.sizes.empty()) throw ConfigError("--sizes must not be empty");
  for (auto s : c.sizes)
    if (s < 2) throw ConfigError("--sizes entries must be at least 2");
  if (c.m.empty()) throw ConfigError("--m must not be empty");
  if (!(c.delta > 0.0) || c.max_inner == 0 || c.max_imfs == 0) throw ConfigError("sifting parameters must be positive");
  if (!(c.multiplier > 0.0)) throw ConfigError("--multiplier must be positive");
  if (c.command == Command::decompose) {
    if (c.signal.empty()) throw ConfigError("decompose needs --signal");
    if (!c.out) throw ConfigError("decompose needs --out");
  }
  if ((c.dump_nodes || c.dump_grid) && !c.out) throw ConfigError("--dump-nodes and --dump-grid need --out");
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Json config_json(const RunConfig& c, const Json& filter, const Json& length) {
  Json j;
  j["command"] = to_string(c.command);
  j["filter"] = filter;
  j["length"] = length;
  j["signal"] = c.signal.string();
  j["out"] = c.out ? c.out->string() : std::string("-");
  j["n"] = c.n;
  j["m"] = c.m;
  j["sizes"] = sorted_unique(c.sizes);
  j["grid_x"] = c.grid_x;
  j["grid_theta"] = c.grid_theta;
  j["delta"] = c.delta;
  j["max_inner"] = c.max_inner;
  j["max_imfs"] = c.max_imfs;
  j["multiplier"] = c.multiplier;
  j["seed"] = c.seed;
  return j;
}

// Collects named artifacts; writes them to --out or prints the primary one.
class Artifacts {
 public:
  Artifacts(const RunConfig& c, std::ostream& out) : dir_(c.out), out_(out) {}

  void add(std::string name, std::string content, bool primary = false) {
    if (primary) primary_ = name;
    files_.emplace_back(std::move(name), std::move(content));
  }

  void flush() {
    if (!dir_) {
      for (const auto& [name, content] : files_)
        if (name == primary_) out_ << content;
      return;
    }
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir_->string() + ": " + ec.message());
    for (const auto& [name, content] : files_) {
      std::ofstream f(*dir_ / name, std::ios::binary);
      if (!(f << content)) throw ConfigError("cannot write " + (*dir_ / name).string());
      out_ << "wrote " << (*dir_ / name).string() << '\n';
    }
  }

 private:
  std::optional<std::filesystem::path> dir_;
  std::ostream& out_;
  std::string primary_;
  std::vector<std::pair<std::string, std::string>> files_;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

double theta_point(std::size_t j, std::size_t count) {
  return -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count - 1);
}

std::string kappa_grid_csv(const Symbol& sym, std::size_t nx, std::size_t nt) {
  std::ostringstream os;
  os << "x,theta,kappa\n";
  for (std::size_t i = 0; i < nx; ++i) {
    const double x = grid_point(i, nx);
    for (std::size_t j = 0; j < nt; ++j) {
      const double t = theta_point(j, nt);
      os << format_double(x) << ',' << format_double(t) << ',' << format_double(eval_symbol(sym, x, t)) << '\n';
    }
  }
  return os.str();
}

Json range_json(const SymbolRange& r) {
  Json j;
  j["min"] = r.min;
  j["max"] = r.max;
  j["argmin"] = {{"x", r.argmin.x}, {"theta", r.argmin.theta}};
  j["argmax"] = {{"x", r.argmax.x}, {"theta", r.argmax.theta}};
  j["condition_ok"] = r.condition_ok;
  return j;
}

int run_decompose(const RunConfig& c, Artifacts& art) {
  const auto filter = resolve_filter(c.filter);
  Json length_json;
  LengthStrategy strategy;
  if (c.length) {
    const auto l = resolve_length(*c.length);
    length_json = length_to_json(l);
    strategy = fixed_length_strategy(l);
  } else {
    length_json = {{"type", "extrema"}, {"multiplier", c.multiplier}};
    strategy = extrema_length_strategy(c.multiplier);
  }
  std::istringstream in(read_file(c.signal, "signal"));
  const auto samples = read_signal_csv(in);
  if (samples.size() < 3) throw ConfigError("signal needs at least 3 samples");

  SiftingConfig sc;
  sc.delta = c.delta;
  sc.max_inner = c.max_inner;
  sc.max_imfs = c.max_imfs;
  const auto result = decompose(Signal(samples), filter, strategy, sc);

  Json j;
  j["config"] = config_json(c, filter_to_json(filter), length_json);
  j["samples"] = samples.size();
  j["imf_count"] = result.imfs.size();
  j["stop_reason"] = to_string(result.stop_reason);
  Json tel = Json::array();
  for (const auto& t : result.telemetry) tel.push_back(to_json(t));
  j["telemetry"] = std::move(tel);
  art.add("telemetry.json", dump(j), true);

  for (std::size_t k = 0; k < result.imfs.size(); ++k) {
    std::ostringstream os;
    write_vector_csv(os, result.imfs[k]);
    char name[32];
    std::snprintf(name, sizeof name, "imf_%03zu.csv", k + 1);
    art.add(name, os.str());
  }
  std::ostringstream trend;
  write_vector_csv(trend, result.trend);
  art.add("trend.csv", trend.str());
  return kExitOk;
}

int run_symbol(const RunConfig& c, Artifacts& art) {
  const auto filter = resolve_filter(c.filter);
  const auto length = resolve_length(c.length.value_or(default_length(c.command)));
  const Symbol sym(filter, length);
  art.add("symbol.csv", kappa_grid_csv(sym, c.grid_x, c.grid_theta), true);
  Json j;
  j["config"] = config_json(c, filter_to_json(filter), length_to_json(length));
  j["max_shift"] = sym.max_shift();
  j["range"] = range_json(symbol_range(sym, c.grid_x, c.grid_theta));
  art.add("symbol.json", dump(j));
  return kExitOk;
}

int run_spectrum(const RunConfig& c, Artifacts& art) {
  const auto filter = resolve_filter(c.filter);
  const auto length = resolve_length(c.length.value_or(default_length(c.command)));
  const auto k = build_K(filter, length, c.n);
  Json j;
  j["config"] = config_json(c, filter_to_json(filter), length_to_json(length));
  j["band_halfwidth"] = k.band_halfwidth();
  j["report"] = to_json(analyze_spectrum(k.entries()));
  art.add("spectrum.json", dump(j), true);
  std::ostringstream csv;
  write_matrix_csv(csv, k.entries());
  art.add("matrix.csv", csv.str());
  std::ostringstream bin(std::ios::binary);
  write_matrix_binary(bin, k.entries());
  art.add("matrix.bin", bin.str());
  return kExitOk;
}

int run_sweep(const RunConfig& c, Artifacts& art) {
  const auto filter = resolve_filter(c.filter);
  const auto length = resolve_length(c.length.value_or(default_length(c.command)));
  const Symbol sym(filter, length);
  const auto sizes = sorted_unique(c.sizes);

  struct Row {
    DistributionCheck dist;
    double defect = 0.0;
  };
  std::vector<Row> rows(sizes.size());
  parallel_for(sizes.size(), [&](std::size_t i) {
    const auto k = build_K(filter, length, sizes[i]);
    rows[i] = {distribution_check(k.entries(), sym), hermitian_defect(k.entries())};
  });
  // D_n(L) - D'_n(L): the two diagonal sampling grids differ by a zero-distributed sequence
  const auto witness = zero_distribution_witness(
      [&](std::size_t n) {
        const auto fn = [&](double x) { return length(x); };
        return Matrix(diag_sampling(fn, n, SamplingGrid::over_n) - diag_sampling(fn, n, SamplingGrid::over_n_minus_1));
      },
      sizes, 2.0);

  std::ostringstream csv;
  csv << "n,discrepancy,max_imag,outlier_fraction,test_function_gap,hermitian_defect,diag_grid_witness\n";
  Json jrows = Json::array();
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const auto& d = rows[i].dist;
    csv << sizes[i] << ',' << format_double(d.discrepancy) << ',' << format_double(d.max_imag) << ','
        << format_double(d.outlier_fraction) << ',' << format_double(d.test_function_gap) << ','
        << format_double(rows[i].defect) << ',' << format_double(witness[i].second) << '\n';
    Json r = to_json(d);
    r["hermitian_defect"] = rows[i].defect;
    r["diag_grid_witness"] = witness[i].second;
    jrows.push_back(std::move(r));
  }
  art.add("sweep.csv", csv.str(), true);
  Json j;
  j["config"] = config_json(c, filter_to_json(filter), length_to_json(length));
  j["rows"] = std::move(jrows);
  art.add("sweep.json", dump(j));
  return kExitOk;
}

int run_acs(const RunConfig& c, Artifacts& art) {
  const auto filter = resolve_filter(c.filter);
  const auto length = resolve_length(c.length.value_or(default_length(c.command)));
  std::ostringstream csv;
  csv << "n,m,empirical,bound,holds\n";
  Json jrows = Json::array();
  bool all_hold = true;
  for (auto n : sorted_unique(c.sizes)) {
    for (auto m : c.m) {
      const auto t = acs_truncation_error(filter, length, n, m);
      const bool holds = t.empirical <= t.bound + 1e-12;
      all_hold = all_hold && holds;
      csv << n << ',' << m << ',' << format_double(t.empirical) << ',' << format_double(t.bound) << ','
          << (holds ? 1 : 0) << '\n';
      jrows.push_back({{"n", n}, {"m", m}, {"empirical", t.empirical}, {"bound", t.bound}, {"holds", holds}});
    }
  }
  art.add("acs.csv", csv.str(), true);
  Json j;
  j["config"] = config_json(c, filter_to_json(filter), length_to_json(length));
  j["all_hold"] = all_hold;
  j["rows"] = std::move(jrows);
  art.add("acs.json", dump(j));
  return all_hold ? kExitOk : kExitCheckFailed;
}

int run_counterexample(const RunConfig& c, Artifacts& art) {
  const auto b = build_counterexample();
  const auto rep = verify_counterexample(b, c.seed);
  Json j;
  j["config"] = config_json(c, filter_to_json(b.filter_raw), length_to_json(b.length));
  j["report"] = to_json(rep);
  art.add("counterexample.json", dump(j), true);
  if (c.dump_nodes) {
    std::ostringstream os;
    os << "x,value,x_exact,value_exact\n";
    for (const auto& n : counterexample_filter_nodes())
      os << format_double(to_double(n.x)) << ',' << format_double(to_double(n.value)) << ',' << n.x.str() << ','
         << n.value.str() << '\n';
    art.add("filter_nodes.csv", os.str());
  }
  if (c.dump_grid) art.add("kappa_grid.csv", kappa_grid_csv(Symbol(b.filter_raw, b.length), c.grid_x, c.grid_theta));
  return rep.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::decompose: return "decompose";
    case Command::symbol: return "symbol";
    case Command::spectrum: return "spectrum";
    case Command::sweep: return "sweep";
    case Command::acs: return "acs";
    case Command::counterexample: return "counterexample";
  }
  return "unknown";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    Artifacts art(config, out);
    int code = kExitOk;
    switch (config.command) {
      case Command::decompose: code = run_decompose(config, art); break;
      case Command::symbol: code = run_symbol(config, art); break;
      case Command::spectrum: code = run_spectrum(config, art); break;
      case Command::sweep: code = run_sweep(config, art); break;
      case Command::acs: code = run_acs(config, art); break;
      case Command::counterexample: code = run_counterexample(config, art); break;
    }
    art.flush();
    if (code == kExitCheckFailed) err << "alif-spectra: " << to_string(config.command) << ": checks failed\n";
    return code;
  } catch (const ConfigError& e) {
    err << "alif-spectra: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "alif-spectra: invalid configuration: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "alif-spectra: invalid JSON input: " << e.what() << '\n';
  }
  return kExitBadConfig;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete ALIF decomposition and spectral analysis of its iteration matrices", "alif-spectra"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string length;
  std::string out_dir;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--filter", cfg.filter,
                    "Filter: inline JSON, JSON file, or uniform|triangular|counterexample|counterexample-normalized");
    sub->add_option("--length", length, "Length function: inline JSON, JSON file, a number, or counterexample");
    sub->add_option("--n", cfg.n, "Matrix size");
    sub->add_option("--m", cfg.m, "Truncation band(s), comma separated")->delimiter(',');
    sub->add_option("--sizes", cfg.sizes, "Matrix sizes, comma separated")->delimiter(',');
    sub->add_option("--grid-x", cfg.grid_x, "Symbol grid points in x");
    sub->add_option("--grid-theta", cfg.grid_theta, "Symbol grid points in theta");
    sub->add_option("--delta", cfg.delta, "Relative sifting tolerance");
    sub->add_option("--max-inner", cfg.max_inner, "Sifting iteration cap");
    sub->add_option("--max-imfs", cfg.max_imfs, "IMF cap");
    sub->add_option("--multiplier", cfg.multiplier, "Extrema-based length multiplier");
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--out", out_dir, "Output directory (default: primary artifact to stdout)");
  };

  auto* dec = app.add_subcommand("decompose", "Decompose a signal into IMFs");
  add_common(dec);
  dec->add_option("--signal", cfg.signal, "Signal CSV, one sample per line")->required();
  auto* sym = app.add_subcommand("symbol", "Symbol utilities");
  sym->require_subcommand(1);
  auto* symdump = sym->add_subcommand("dump", "Write (x, theta, kappa) on a grid as CSV");
  add_common(symdump);
  auto* spec = app.add_subcommand("spectrum", "Spectral report for K_n");
  add_common(spec);
  auto* sweep = app.add_subcommand("sweep", "Distribution diagnostics across sizes");
  add_common(sweep);
  auto* acs = app.add_subcommand("acs", "Truncation error against its bound");
  add_common(acs);
  auto* ce = app.add_subcommand("counterexample", "Verify the 3x3 counterexample");
  add_common(ce);
  ce->add_flag("--dump-nodes", cfg.dump_nodes, "Also write filter_nodes.csv");
  ce->add_flag("--dump-grid", cfg.dump_grid, "Also write kappa_grid.csv");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadConfig;
  }

  if (dec->parsed()) cfg.command = Command::decompose;
  if (symdump->parsed()) cfg.command = Command::symbol;
  if (spec->parsed()) cfg.command = Command::spectrum;
  if (sweep->parsed()) cfg.command = Command::sweep;
  if (acs->parsed()) cfg.command = Command::acs;
  if (ce->parsed()) cfg.command = Command::counterexample;
  if (!length.empty()) cfg.length = length;
  if (!out_dir.empty()) cfg.out = out_dir;
  return run(cfg, out, err);
}

}  // namespace alif::cli
