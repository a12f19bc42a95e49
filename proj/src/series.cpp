#include "xyrc/series.hpp"

#include <cmath>

namespace xyrc {

namespace {

void require_mean_zero(const SourceFunction& phi, const SourceFunction& psi) {
  if (phi.total() != 0 || psi.total() != 0)
    throw PreconditionError("phi and psi must each sum to zero (got " + std::to_string(phi.total()) + " and " +
                            std::to_string(psi.total()) + ")");
}

void require_size(const Graph& graph, const SourceFunction& f) {
  if (f.size() != graph.num_vertices()) throw std::invalid_argument("source function has wrong number of vertices");
}

Rational fixed_amplitude_weight(const Graph& graph, const EdgeAmplitude& amplitude, const SourceFunction& phi) {
  Rational sum = 0;
  for_each_current(graph, amplitude, phi, [&](const Current& n) { sum += weight(n, graph); });
  return sum;
}

}  // namespace

Rational TruncatedSeries::sum() const {
  Rational total = 0;
  for (const auto& [amplitude, coeff] : terms) total += coeff;
  return total;
}

Rational amplitude_coefficient(const Graph& graph, const EdgeAmplitude& amplitude) {
  Rational c = 1;
  for (EdgeIndex e = 0; e < graph.num_edges(); ++e)
    if (amplitude[e] != 0) c *= pow(graph.edge(e).coupling / 2, amplitude[e]) / factorial(amplitude[e]);
  return c;
}

TruncatedSeries source_series(const Graph& graph, const SourceFunction& phi, std::uint64_t degree_cap) {
  require_size(graph, phi);
  TruncatedSeries series;
  series.degree_cap = degree_cap;
  for (const EdgeAmplitude& n : amplitude_vectors(graph.num_edges(), degree_cap))
    series.terms.emplace(n, fixed_amplitude_weight(graph, n, phi));
  return series;
}

Rational partition_function(const Graph& graph, std::uint64_t degree_cap) {
  return source_series(graph, graph.zero_source(), degree_cap).sum();
}

Rational correlation(const Graph& graph, const SourceFunction& phi, std::uint64_t degree_cap) {
  return correlation_series(graph, phi, degree_cap).value;
}

CorrelationResult correlation_series(const Graph& graph, const SourceFunction& phi, std::uint64_t degree_cap) {
  CorrelationResult r;
  r.numerator = source_series(graph, phi, degree_cap);
  r.denominator = source_series(graph, graph.zero_source(), degree_cap);
  r.value = r.numerator.sum() / r.denominator.sum();
  if (degree_cap > 0 && r.value != 0) {
    Rational num = 0;
    Rational den = 0;
    for (const auto& [n, c] : r.numerator.terms)
      if (n.total() < degree_cap) num += c;
    for (const auto& [n, c] : r.denominator.terms)
      if (n.total() < degree_cap) den += c;
    const Rational previous = num / den;
    r.relative_change = to_double(abs(r.value - previous) / abs(r.value));
  }
  return r;
}

BigInt ginibre_gap_counts(const TwoColorTable& table, const SourceFunction& phi, const SourceFunction& psi) {
  require_mean_zero(phi, psi);
  const SourceFunction zero(phi.size());
  return lookup(table, std::pair{phi + psi, zero}) + lookup(table, std::pair{phi - psi, zero}) -
         2 * lookup(table, std::pair{phi, psi});
}

BigInt ginibre_gap_counts(const Graph& graph, const EdgeAmplitude& amplitude, const SourceFunction& phi,
                          const SourceFunction& psi) {
  require_size(graph, phi);
  require_size(graph, psi);
  require_mean_zero(phi, psi);
  const SourceFunction zero = graph.zero_source();
  return count_two_color(graph, amplitude, phi + psi, zero) + count_two_color(graph, amplitude, phi - psi, zero) -
         2 * count_two_color(graph, amplitude, phi, psi);
}

BigInt ginibre_gap_square(const OneColorTable& table, const SourceFunction& phi, const SourceFunction& psi) {
  const BigInt d = lookup(table, phi + psi) - lookup(table, phi - psi);
  return d * d;
}

BigInt ginibre_gap_square(const Graph& graph, const EdgeAmplitude& amplitude, const SourceFunction& phi,
                          const SourceFunction& psi) {
  require_size(graph, phi);
  require_size(graph, psi);
  const BigInt d = count_one_color(graph, amplitude, phi + psi) - count_one_color(graph, amplitude, phi - psi);
  return d * d;
}

GapSeries ginibre_gap_terms(const Graph& graph, const SourceFunction& phi, const SourceFunction& psi,
                            std::uint64_t degree_cap) {
  require_size(graph, phi);
  require_size(graph, psi);
  require_mean_zero(phi, psi);
  GapSeries series;
  series.degree_cap = degree_cap;
  series.value = 0;
  for (const EdgeAmplitude& n : amplitude_vectors(graph.num_edges(), degree_cap)) {
    GapTerm term{n, ginibre_gap_counts(graph, n, phi, psi), ginibre_gap_square(graph, n, phi, psi),
                 amplitude_coefficient(graph, n)};
    series.value += term.coefficient * term.gap;
    series.terms.push_back(std::move(term));
  }
  return series;
}

Rational ginibre_gap_series(const Graph& graph, const SourceFunction& phi, const SourceFunction& psi,
                            std::uint64_t degree_cap) {
  return ginibre_gap_terms(graph, phi, psi, degree_cap).value;
}

CoefficientReport coefficient_identity_check(const Graph& graph, const SourceFunction& phi, const SourceFunction& psi,
                                             std::uint64_t degree_cap, CountMethod method) {
  require_size(graph, phi);
  require_size(graph, psi);
  CoefficientReport report;
  report.degree_cap = degree_cap;

  // Σ_{|n| = A, ∂n = source} w_J(n), memoized per (A, source).
  std::map<std::pair<EdgeAmplitude, bool>, Rational> memo;
  auto fixed = [&](const EdgeAmplitude& a, bool is_phi) -> const Rational& {
    auto [it, inserted] = memo.try_emplace({a, is_phi});
    if (inserted) it->second = fixed_amplitude_weight(graph, a, is_phi ? phi : psi);
    return it->second;
  };

  for (const EdgeAmplitude& n : amplitude_vectors(graph.num_edges(), degree_cap)) {
    CoefficientRow row;
    row.amplitude = n;
    row.current_pair_sum = 0;
    // Split N = A + B over every edge; n has amplitude A, m has amplitude B.
    EdgeAmplitude a(graph.num_edges());
    while (true) {
      EdgeAmplitude b(graph.num_edges());
      for (EdgeIndex e = 0; e < graph.num_edges(); ++e) b[e] = n[e] - a[e];
      const Rational& left = fixed(a, true);
      if (left != 0) row.current_pair_sum += left * fixed(b, false);
      EdgeIndex e = 0;
      while (e < graph.num_edges() && a[e] == n[e]) a[e++] = 0;
      if (e == graph.num_edges()) break;
      ++a[e];
    }
    row.count = count_two_color(graph, n, phi, psi, method);
    row.coefficient = amplitude_coefficient(graph, n);
    row.match = row.current_pair_sum == row.coefficient * row.count;
    if (!row.match) ++report.mismatches;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace xyrc
