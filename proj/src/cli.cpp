#include "xyrc/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "xyrc/bijection.hpp"
#include "xyrc/json_io.hpp"
#include "xyrc/multigraph.hpp"
#include "xyrc/oracle.hpp"
#include "xyrc/parallel.hpp"
#include "xyrc/series.hpp"

namespace xyrc::cli {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct RunManifest {
  std::string command;
  std::string graph_path;
  std::optional<std::string> phi_text;
  std::optional<std::string> psi_text;
  std::optional<std::uint64_t> sum_cap;
  std::optional<std::uint64_t> degree_cap;
  std::optional<std::uint64_t> grid;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  std::string method = "multinomial";
  std::string out_path;
  unsigned threads = 1;
  double max_work = 1e9;
  bool force = false;
  bool no_meta = false;
  std::string kernel = "auto";
  bool full = false;
  double tolerance = 1e-6;
};

/// Everything parsed and validated before computation starts.
struct Inputs {
  Graph graph;
  std::optional<SourceFunction> phi;
  std::optional<SourceFunction> psi;
};

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json result;
  bool passed = true;
};

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

CountMethod parse_method(const std::string& text) {
  if (text == "direct") return CountMethod::Direct;
  if (text == "multinomial") return CountMethod::Multinomial;
  throw InputError("unknown --method '" + text + "' (expected direct or multinomial)");
}

const SourceFunction& require(const std::optional<SourceFunction>& f, const char* flag) {
  if (!f) throw InputError(std::string("missing required ") + flag);
  return *f;
}

std::uint64_t require(const std::optional<std::uint64_t>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing required ") + flag);
  return *v;
}

void require_mean_zero(const SourceFunction& f, const char* flag) {
  if (f.total() != 0)
    throw PreconditionError(std::string(flag) + " must sum to zero (sums to " + std::to_string(f.total()) + ")");
}

// --- work estimates -------------------------------------------------------

double product_over_edges(const EdgeAmplitude& n, double (*per_edge)(double)) {
  double p = 1;
  for (std::uint64_t v : n.values()) p *= per_edge(static_cast<double>(v));
  return p;
}

double tetrahedral(double n) { return (n + 1) * (n + 2) * (n + 3) / 6; }
double linear(double n) { return n + 1; }

double sweep_work(const Graph& g, std::uint64_t cap, double (*per_n)(const EdgeAmplitude&)) {
  // Count N vectors first so a huge sweep is refused before it is materialized.
  double vectors = 1;
  for (std::size_t i = 1; i <= g.num_edges(); ++i) vectors = vectors * static_cast<double>(cap + i) / static_cast<double>(i);
  if (vectors > 1e8) return vectors;
  double work = 0;
  for (const EdgeAmplitude& n : amplitude_vectors(g.num_edges(), cap)) work += per_n(n);
  return work;
}

double exhaustive(const EdgeAmplitude& n) { return std::pow(4.0, static_cast<double>(n.total())); }
double multinomial_work(const EdgeAmplitude& n) { return product_over_edges(n, tetrahedral); }
double one_color_work(const EdgeAmplitude& n) { return product_over_edges(n, linear); }

double estimate_work(const RunManifest& m, const Inputs& in) {
  const Graph& g = in.graph;
  const double free_dims = static_cast<double>(g.num_vertices()) - (m.full ? 0.0 : 1.0);
  const double quad = m.grid ? std::pow(static_cast<double>(*m.grid), std::max(0.0, free_dims)) *
                                   static_cast<double>(g.num_edges() + 1)
                             : 0.0;
  const std::string& c = m.command;
  if (c == "count") {
    const std::uint64_t cap = require(m.sum_cap, "--sum-cap");
    if (!in.psi) return sweep_work(g, cap, one_color_work);
    return sweep_work(g, cap, m.method == "direct" ? exhaustive : multinomial_work);
  }
  if (c == "verify-bijection") return 2 * sweep_work(g, require(m.sum_cap, "--sum-cap"), exhaustive);
  if (c == "check-goal") return 4 * sweep_work(g, require(m.sum_cap, "--sum-cap"), multinomial_work);
  if (c == "correlate") return 2 * sweep_work(g, require(m.degree_cap, "--degree-cap"), one_color_work);
  if (c == "check-ginibre") return 4 * sweep_work(g, require(m.degree_cap, "--degree-cap"), multinomial_work);
  if (c == "coeff-check")
    return sweep_work(g, require(m.degree_cap, "--degree-cap"), m.method == "direct" ? exhaustive : multinomial_work);
  if (c == "oracle") return m.grid ? quad : static_cast<double>(m.samples.value_or(0)) * (g.num_edges() + 1);
  if (c == "compare") return quad + 2 * sweep_work(g, require(m.degree_cap, "--degree-cap"), one_color_work);
  return 0;
}

// --- subcommands ------------------------------------------------------------

json row_amplitude(const EdgeAmplitude& n) { return amplitude_to_json(n); }

Outcome cmd_count(const RunManifest& m, const Inputs& in, std::ostream& err) {
  const SourceFunction& phi = require(in.phi, "--phi");
  const std::uint64_t cap = require(m.sum_cap, "--sum-cap");
  const CountMethod method = parse_method(m.method);
  const auto amplitudes = amplitude_vectors(in.graph.num_edges(), cap);
  std::vector<BigInt> counts(amplitudes.size());
  parallel_for(amplitudes.size(), m.threads, [&](std::size_t i) {
    counts[i] = in.psi ? count_two_color(in.graph, amplitudes[i], phi, *in.psi, method)
                       : count_one_color(in.graph, amplitudes[i], phi);
  });

  Outcome o;
  o.result["colors"] = in.psi ? 2 : 1;
  o.result["phi"] = source_to_json(phi);
  o.result["psi"] = in.psi ? source_to_json(*in.psi) : json(nullptr);
  o.result["method"] = in.psi ? m.method : "binomial";
  o.result["sum_cap"] = cap;
  o.result["per_N"] = json::array();
  BigInt total = 0;
  err << "N\tcount\n";
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    o.result["per_N"].push_back({{"N", row_amplitude(amplitudes[i])}, {"count", format_bigint(counts[i])}});
    total += counts[i];
    err << row_amplitude(amplitudes[i]).dump() << '\t' << counts[i] << '\n';
  }
  o.result["total"] = format_bigint(total);
  return o;
}

Outcome cmd_verify_bijection(const RunManifest& m, const Inputs& in, std::ostream& err) {
  const std::uint64_t cap = require(m.sum_cap, "--sum-cap");
  const auto amplitudes = amplitude_vectors(in.graph.num_edges(), cap);
  std::vector<BijectionReport> reports(amplitudes.size());
  parallel_for(amplitudes.size(), m.threads,
               [&](std::size_t i) { reports[i] = verify_bijection(in.graph, amplitudes[i]); });

  Outcome o;
  o.result["sum_cap"] = cap;
  o.result["per_N"] = json::array();
  o.result["failures"] = json::array();
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  err << "N\tconfigs\tpairs\tclasses\tfailures\n";
  for (const auto& r : reports) {
    checked += r.checked();
    failures += r.failure_count;
    o.result["per_N"].push_back({{"N", row_amplitude(r.amplitude)},
                                 {"configs", r.configs_checked},
                                 {"pairs", r.pairs_checked},
                                 {"classes", r.classes_checked},
                                 {"failures", r.failure_count}});
    for (const auto& f : r.failures)
      o.result["failures"].push_back({{"N", row_amplitude(r.amplitude)}, {"kind", to_string(f.kind)}, {"detail", f.detail}});
    err << row_amplitude(r.amplitude).dump() << '\t' << r.configs_checked << '\t' << r.pairs_checked << '\t'
        << r.classes_checked << '\t' << r.failure_count << '\n';
  }
  o.result["checked"] = checked;
  o.result["failure_count"] = failures;
  o.passed = failures == 0;
  return o;
}

Outcome cmd_check_goal(const RunManifest& m, const Inputs& in, std::ostream& err) {
  const SourceFunction& phi = require(in.phi, "--phi");
  const SourceFunction& psi = require(in.psi, "--psi");
  require_mean_zero(phi, "--phi");
  require_mean_zero(psi, "--psi");
  const std::uint64_t cap = require(m.sum_cap, "--sum-cap");
  const auto amplitudes = amplitude_vectors(in.graph.num_edges(), cap);
  const SourceFunction zero = in.graph.zero_source();

  struct Row {
    BigInt plus, minus, mixed, gap, one_plus, one_minus, square;
  };
  std::vector<Row> rows(amplitudes.size());
  parallel_for(amplitudes.size(), m.threads, [&](std::size_t i) {
    const EdgeAmplitude& n = amplitudes[i];
    Row& r = rows[i];
    r.plus = count_two_color(in.graph, n, phi + psi, zero);
    r.minus = count_two_color(in.graph, n, phi - psi, zero);
    r.mixed = count_two_color(in.graph, n, phi, psi);
    r.gap = r.plus + r.minus - 2 * r.mixed;
    r.one_plus = count_one_color(in.graph, n, phi + psi);
    r.one_minus = count_one_color(in.graph, n, phi - psi);
    r.square = (r.one_plus - r.one_minus) * (r.one_plus - r.one_minus);
  });

  Outcome o;
  o.result["phi"] = source_to_json(phi);
  o.result["psi"] = source_to_json(psi);
  o.result["sum_cap"] = cap;
  o.result["per_N"] = json::array();
  err << "N\tlhs\trhs\tgap\tsquare\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    const bool ok = r.gap == r.square && r.gap >= 0;
    o.passed = o.passed && ok;
    o.result["per_N"].push_back({{"N", row_amplitude(amplitudes[i])},
                                 {"count_phi_plus_psi", format_bigint(r.plus)},
                                 {"count_phi_minus_psi", format_bigint(r.minus)},
                                 {"count_phi_psi", format_bigint(r.mixed)},
                                 {"gap", format_bigint(r.gap)},
                                 {"one_color_plus", format_bigint(r.one_plus)},
                                 {"one_color_minus", format_bigint(r.one_minus)},
                                 {"square", format_bigint(r.square)},
                                 {"ok", ok}});
    err << row_amplitude(amplitudes[i]).dump() << '\t' << (r.plus + r.minus) << '\t' << 2 * r.mixed << '\t' << r.gap
        << '\t' << r.square << (ok ? "" : "\tFAIL") << '\n';
  }
  o.result["all_ok"] = o.passed;
  return o;
}

json correlation_json(const Graph& g, const SourceFunction& phi, const CorrelationResult& r) {
  json out;
  out["value"] = format_rational(r.value);
  out["approx"] = to_double(r.value);
  out["Z"] = format_rational(r.denominator.sum());
  out["relative_change"] = r.relative_change ? json(*r.relative_change) : json(nullptr);
  out["per_N"] = json::array();
  for (const auto& [n, coeff] : r.numerator.terms) {
    if (coeff == 0) continue;
    std::uint64_t currents = 0;
    for_each_current(g, n, phi, [&](const Current&) { ++currents; });
    out["per_N"].push_back({{"N", row_amplitude(n)}, {"count", std::to_string(currents)}, {"coeff", format_rational(coeff)}});
  }
  return out;
}

Outcome cmd_correlate(const RunManifest& m, const Inputs& in, std::ostream& err) {
  const SourceFunction& phi = require(in.phi, "--phi");
  const std::uint64_t cap = require(m.degree_cap, "--degree-cap");
  const CorrelationResult r = correlation_series(in.graph, phi, cap);
  Outcome o;
  o.result["phi"] = source_to_json(phi);
  o.result["D"] = cap;
  o.result.update(correlation_json(in.graph, phi, r));
  err << "<sigma^phi> (D=" << cap << ") = " << format_rational(r.value) << " ~ " << std::setprecision(15)
      << to_double(r.value) << '\n';
  return o;
}

Outcome cmd_check_ginibre(const RunManifest& m, const Inputs& in, std::ostream& err) {
  const SourceFunction& phi = require(in.phi, "--phi");
  const SourceFunction& psi = require(in.psi, "--psi");
  require_mean_zero(phi, "--phi");
  require_mean_zero(psi, "--psi");
  const std::uint64_t cap = require(m.degree_cap, "--degree-cap");
  const GapSeries series = ginibre_gap_terms(in.graph, phi, psi, cap);

  Outcome o;
  o.result["phi"] = source_to_json(phi);
  o.result["psi"] = source_to_json(psi);
  o.result["D"] = cap;
  o.result["value"] = format_rational(series.value);
  o.result["per_N"] = json::array();
  bool squares = true;
  bool nonnegative_terms = true;
  for (const GapTerm& t : series.terms) {
    squares = squares && t.gap == t.square;
    nonnegative_terms = nonnegative_terms && t.gap >= 0;
    o.result["per_N"].push_back(
        {{"N", row_amplitude(t.amplitude)}, {"count", format_bigint(t.gap)}, {"coeff", format_rational(t.coefficient)}});
  }
  const bool nonnegative = series.value >= 0;
  o.result["nonnegative"] = nonnegative;
  o.result["square_identity"] = squares;
  o.result["nonnegative_terms"] = nonnegative_terms;

  // Truncated correlations at the same cap, for reference only: separate
  // truncation of each sum is not the same grading as the gap series.
  const Rational c_plus = correlation(in.graph, phi + psi, cap);
  const Rational c_minus = correlation(in.graph, phi - psi, cap);
  const Rational c_phi = correlation(in.graph, phi, cap);
  const Rational c_psi = correlation(in.graph, psi, cap);
  const Rational lhs = c_plus + c_minus;
  const Rational rhs = 2 * c_phi * c_psi;
  o.result["correlations"] = {{"phi_plus_psi", format_rational(c_plus)}, {"phi_minus_psi", format_rational(c_minus)},
                              {"phi", format_rational(c_phi)},         {"psi", format_rational(c_psi)},
                              {"lhs", to_double(lhs)},                 {"rhs", to_double(rhs)},
                              {"holds", lhs >= rhs}};
  o.passed = nonnegative && squares && nonnegative_terms;
  err << "gap series (D=" << cap << ") = " << format_rational(series.value) << (o.passed ? "  >= 0 OK" : "  FAIL")
      << '\n'
      << "<s^(phi+psi)> + <s^(phi-psi)> = " << std::setprecision(15) << to_double(lhs)
      << ", 2<s^phi><s^psi> = " << to_double(rhs) << '\n';
  return o;
}

Outcome cmd_oracle(const RunManifest& m, const Inputs& in, std::ostream& err) {
  const SourceFunction& phi = require(in.phi, "--phi");
  if (m.grid.has_value() == m.samples.has_value()) throw InputError("oracle needs exactly one of --grid or --samples");
  const OracleOptions options{kernels::parse_kernel_choice(m.kernel), m.threads};
  Outcome o;
  o.result["phi"] = source_to_json(phi);
  if (m.grid) {
    const auto r = quadrature_correlation(in.graph, phi, *m.grid,
                                          m.full ? QuadratureMode::Full : QuadratureMode::GaugeFixed, options);
    o.result.update({{"method", "quadrature"}, {"estimate", r.estimate}, {"stderr", nullptr}, {"K", r.grid},
                     {"seed", nullptr}, {"mode", m.full ? "full" : "gauge-fixed"}, {"kernel", r.kernel}});
    err << "quadrature K=" << r.grid << ": " << std::setprecision(15) << r.estimate << '\n';
  } else {
    const auto r = mc_correlation(in.graph, phi, *m.samples, m.seed, options);
    o.result.update({{"method", "mc"}, {"estimate", r.estimate}, {"stderr", r.stderr_estimate},
                     {"samples", r.samples}, {"seed", r.seed}, {"kernel", r.kernel}});
    err << "mc samples=" << r.samples << ": " << std::setprecision(15) << r.estimate << " +- " << r.stderr_estimate
        << '\n';
  }
  return o;
}

Outcome cmd_compare(const RunManifest& m, const Inputs& in, std::ostream& err) {
  const SourceFunction& phi = require(in.phi, "--phi");
  const std::uint64_t cap = require(m.degree_cap, "--degree-cap");
  const std::uint64_t grid = require(m.grid, "--grid");
  const Rational series = correlation(in.graph, phi, cap);
  const OracleOptions options{kernels::parse_kernel_choice(m.kernel), m.threads};
  const auto quad = quadrature_correlation(in.graph, phi, grid,
                                           m.full ? QuadratureMode::Full : QuadratureMode::GaugeFixed, options);
  const double diff = std::abs(to_double(series) - quad.estimate);
  Outcome o;
  o.result = {{"phi", source_to_json(phi)},  {"D", cap},
              {"K", grid},                   {"series_exact", format_rational(series)},
              {"series", to_double(series)}, {"quadrature", quad.estimate},
              {"abs_diff", diff},            {"tolerance", m.tolerance},
              {"kernel", quad.kernel},       {"ok", diff <= m.tolerance}};
  o.passed = diff <= m.tolerance;
  err << std::setprecision(15) << "series " << to_double(series) << "  quadrature " << quad.estimate << "  |diff| "
      << diff << (o.passed ? "  OK" : "  FAIL") << '\n';
  return o;
}

Outcome cmd_coeff_check(const RunManifest& m, const Inputs& in, std::ostream& err) {
  const SourceFunction& phi = require(in.phi, "--phi");
  const SourceFunction psi = in.psi.value_or(in.graph.zero_source());
  const std::uint64_t cap = require(m.degree_cap, "--degree-cap");
  const CoefficientReport report = coefficient_identity_check(in.graph, phi, psi, cap, parse_method(m.method));
  Outcome o;
  o.result["phi"] = source_to_json(phi);
  o.result["psi"] = source_to_json(psi);
  o.result["D"] = cap;
  o.result["method"] = m.method;
  o.result["per_N"] = json::array();
  err << "N\tcount\tpair_sum\tmatch\n";
  for (const auto& row : report.rows) {
    o.result["per_N"].push_back({{"N", row_amplitude(row.amplitude)},
                                 {"count", format_bigint(row.count)},
                                 {"coeff", format_rational(row.coefficient)},
                                 {"pair_sum", format_rational(row.current_pair_sum)},
                                 {"match", row.match}});
    err << row_amplitude(row.amplitude).dump() << '\t' << row.count << '\t' << format_rational(row.current_pair_sum)
        << '\t' << (row.match ? "yes" : "NO") << '\n';
  }
  o.result["mismatches"] = report.mismatches;
  o.passed = report.passed();
  return o;
}

Outcome dispatch(const RunManifest& m, const Inputs& in, std::ostream& err) {
  if (m.command == "count") return cmd_count(m, in, err);
  if (m.command == "verify-bijection") return cmd_verify_bijection(m, in, err);
  if (m.command == "check-goal") return cmd_check_goal(m, in, err);
  if (m.command == "correlate") return cmd_correlate(m, in, err);
  if (m.command == "check-ginibre") return cmd_check_ginibre(m, in, err);
  if (m.command == "oracle") return cmd_oracle(m, in, err);
  if (m.command == "compare") return cmd_compare(m, in, err);
  if (m.command == "coeff-check") return cmd_coeff_check(m, in, err);
  throw InputError("unknown subcommand '" + m.command + "'");
}

struct FlagSet {
  bool sources = true;
  bool psi = false;
  bool sum_cap = false;
  bool degree_cap = false;
  bool method = false;
  bool grid = false;
  bool samples = false;
  bool tolerance = false;
};

void add_flags(CLI::App& sub, RunManifest& m, const FlagSet& f) {
  sub.add_option("--graph", m.graph_path, "Graph instance JSON file")->required();
  if (f.sources) sub.add_option("--phi", m.phi_text, "Source function phi as JSON {\"vertex\": int}");
  if (f.psi) sub.add_option("--psi", m.psi_text, "Source function psi as JSON {\"vertex\": int}");
  if (f.sum_cap) sub.add_option("--sum-cap", m.sum_cap, "Sweep every amplitude N with sum(N) <= cap");
  if (f.degree_cap) sub.add_option("--degree-cap", m.degree_cap, "Series truncation: total current degree <= D");
  if (f.method) sub.add_option("--method", m.method, "Counting method: direct | multinomial");
  if (f.grid) sub.add_option("--grid", m.grid, "Quadrature points per angle (K)");
  if (f.samples) {
    sub.add_option("--samples", m.samples, "Monte Carlo sample count");
    sub.add_option("--seed", m.seed, "Monte Carlo seed");
  }
  if (f.grid || f.samples) {
    sub.add_option("--kernel", m.kernel, "Numerical kernels: auto | scalar | avx2");
    sub.add_flag("--full", m.full, "Integrate all angles (no gauge fixing)");
  }
  if (f.tolerance) sub.add_option("--tolerance", m.tolerance, "Maximum |series - quadrature|");
  sub.add_option("--out", m.out_path, "Write JSON here instead of stdout");
  sub.add_option("--threads", m.threads, "Worker threads")->check(CLI::PositiveNumber);
  sub.add_option("--max-work", m.max_work, "Refuse runs whose work estimate exceeds this");
  sub.add_flag("--force", m.force, "Run even when the work estimate exceeds --max-work");
  sub.add_flag("--no-meta", m.no_meta, "Omit the meta block (timestamp) for byte-stable output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact random-current and multigraph verification for the XY model", "xyrc"};
  app.require_subcommand(1);
  RunManifest m;

  struct Spec {
    const char* name;
    const char* help;
    FlagSet flags;
  };
  const Spec specs[] = {
      {"count", "One-color (no --psi) or two-color multigraph counts over an N sweep",
       {.psi = true, .sum_cap = true, .method = true}},
      {"verify-bijection", "Exhaustively verify the split/merge bijection over an N sweep",
       {.sources = false, .sum_cap = true}},
      {"check-goal", "Count-level gap and perfect-square identity over an N sweep", {.psi = true, .sum_cap = true}},
      {"correlate", "Truncated random-current series for <sigma^phi>", {.degree_cap = true}},
      {"check-ginibre", "Exact truncated gap series for the correlation inequality", {.psi = true, .degree_cap = true}},
      {"oracle", "Numerical <cos(phi.theta)> by quadrature (--grid) or Monte Carlo (--samples)",
       {.grid = true, .samples = true}},
      {"compare", "Series value against quadrature", {.degree_cap = true, .grid = true, .tolerance = true}},
      {"coeff-check", "Per-amplitude current-pair sums against multigraph counts",
       {.psi = true, .degree_cap = true, .method = true}},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_flags(*sub, m, s.flags);
    sub->callback([&m, name = std::string(s.name)] { m.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  Inputs in;
  try {
    in.graph = read_graph_file(m.graph_path);
    if (m.phi_text) in.phi = parse_source(*m.phi_text, in.graph.num_vertices());
    if (m.psi_text) in.psi = parse_source(*m.psi_text, in.graph.num_vertices());
    parse_method(m.method);
    kernels::parse_kernel_choice(m.kernel);
    const double work = estimate_work(m, in);
    if (work > m.max_work && !m.force) {
      std::ostringstream os;
      os << "work estimate " << work << " exceeds --max-work " << m.max_work << "; rerun with --force";
      throw BudgetError(os.str());
    }
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "invalid graph: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }

  Outcome outcome;
  try {
    outcome = dispatch(m, in, err);
  } catch (const std::invalid_argument& e) {
    // InputError / PreconditionError / argument-shape problems found mid-run.
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  json doc;
  doc["command"] = m.command;
  doc["passed"] = outcome.passed;
  doc.update(outcome.result);
  if (!m.no_meta)
    doc["meta"] = {{"tool", "xyrc"}, {"version", kVersion}, {"timestamp", timestamp_utc()}, {"threads", m.threads}};
  const std::string text = doc.dump(2) + "\n";
  if (m.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(m.out_path, std::ios::binary);
    if (!file) {
      err << "input error: cannot write '" << m.out_path << "'\n";
      return kInputError;
    }
    file << text;
  }
  if (!outcome.passed) err << "assertion failed; see JSON output for details\n";
  return outcome.passed ? kOk : kAssertionFailed;
}

}  // namespace xyrc::cli
