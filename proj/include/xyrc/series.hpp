#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xyrc/current.hpp"
#include "xyrc/graph.hpp"
#include "xyrc/multigraph.hpp"
#include "xyrc/rational.hpp"

namespace xyrc {

/// Exact per-amplitude contributions to a series truncated at total degree D.
struct TruncatedSeries {
  std::map<EdgeAmplitude, Rational> terms;
  std::uint64_t degree_cap = 0;

  Rational sum() const;
};

/// Π_e (J_e/2)^{N_e} / N_e!.
Rational amplitude_coefficient(const Graph& graph, const EdgeAmplitude& amplitude);

/// Σ w_J(n) over currents with ∂n = phi, grouped by |n|, over every N with ΣN ≤ D.
/// Every N is present, zero terms included.
TruncatedSeries source_series(const Graph& graph, const SourceFunction& phi, std::uint64_t degree_cap);

/// Z truncated at total degree D.
Rational partition_function(const Graph& graph, std::uint64_t degree_cap);

/// Truncated ⟨σ^φ⟩ = Σ_{∂n=φ} w_J(n) / Σ_{∂n=0} w_J(n), both sums over Σ|n| ≤ D.
Rational correlation(const Graph& graph, const SourceFunction& phi, std::uint64_t degree_cap);

struct CorrelationResult {
  TruncatedSeries numerator;
  TruncatedSeries denominator;
  Rational value;
  /// |value(D) − value(D−1)| / |value(D)|; nullopt at D = 0 or when value(D) = 0.
  std::optional<double> relative_change;
};

CorrelationResult correlation_series(const Graph& graph, const SourceFunction& phi, std::uint64_t degree_cap);

/// #{∂r=φ+ψ, ∂b=0}_N + #{∂r=φ−ψ, ∂b=0}_N − 2·#{∂r=φ, ∂b=ψ}_N.
/// Throws PreconditionError unless Σφ = Σψ = 0.
BigInt ginibre_gap_counts(const Graph& graph, const EdgeAmplitude& amplitude, const SourceFunction& phi,
                          const SourceFunction& psi);

/// Same quantity read from a precomputed table for 𝔾_N.
BigInt ginibre_gap_counts(const TwoColorTable& table, const SourceFunction& phi, const SourceFunction& psi);

/// (#{∂r=φ+ψ}_N − #{∂r=φ−ψ}_N)², the closed form the gap must equal.
BigInt ginibre_gap_square(const Graph& graph, const EdgeAmplitude& amplitude, const SourceFunction& phi,
                          const SourceFunction& psi);
BigInt ginibre_gap_square(const OneColorTable& table, const SourceFunction& phi, const SourceFunction& psi);

struct GapTerm {
  EdgeAmplitude amplitude;
  BigInt gap;
  BigInt square;
  Rational coefficient;
};

struct GapSeries {
  std::uint64_t degree_cap = 0;
  Rational value;
  std::vector<GapTerm> terms;
};

/// Σ_{ΣN ≤ D} [Π_e (J_e/2)^{N_e}/N_e!] · gap(N, φ, ψ). Equals
/// Z_D²·(⟨σ^{φ+ψ}⟩ + ⟨σ^{φ−ψ}⟩ − 2⟨σ^φ⟩⟨σ^ψ⟩) up to degree D.
Rational ginibre_gap_series(const Graph& graph, const SourceFunction& phi, const SourceFunction& psi,
                            std::uint64_t degree_cap);
GapSeries ginibre_gap_terms(const Graph& graph, const SourceFunction& phi, const SourceFunction& psi,
                            std::uint64_t degree_cap);

struct CoefficientRow {
  EdgeAmplitude amplitude;
  Rational current_pair_sum;  // Σ_{∂n=φ, ∂m=ψ, |n+m|=N} w_J(n) w_J(m)
  BigInt count;               // #{∂r=φ, ∂b=ψ}_N
  Rational coefficient;       // Π (J/2)^N / N!
  bool match = false;
};

struct CoefficientReport {
  std::uint64_t degree_cap = 0;
  std::vector<CoefficientRow> rows;
  std::size_t mismatches = 0;
  bool passed() const noexcept { return mismatches == 0; }
};

/// For every N with ΣN ≤ D, compares the current-pair sum with the multigraph
/// count times the amplitude coefficient, exactly.
CoefficientReport coefficient_identity_check(const Graph& graph, const SourceFunction& phi, const SourceFunction& psi,
                                             std::uint64_t degree_cap, CountMethod method = CountMethod::Direct);

}  // namespace xyrc
