#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isocut/graphs.hpp"

namespace isocut {

/// One term a * L^b of an L-base decomposition.
struct LBaseTerm {
  std::uint64_t coefficient;
  std::uint32_t exponent;

  friend bool operator==(const LBaseTerm&, const LBaseTerm&) = default;
};

/// m = sum a_i L^{b_i} with 1 <= a_i <= L-1 and strictly decreasing b_i:
/// the base-L digits of m with zero digits omitted.
class LBaseDecomposition {
public:
  LBaseDecomposition(std::uint64_t radix, std::vector<LBaseTerm> terms);

  std::uint64_t radix() const { return radix_; }
  const std::vector<LBaseTerm>& terms() const { return terms_; }
  std::uint64_t value() const;
  std::uint64_t coefficient_sum() const;

  /// e.g. "2*3^1 + 2*3^0".
  std::string to_string() const;

  friend bool operator==(const LBaseDecomposition&, const LBaseDecomposition&) = default;

private:
  std::uint64_t radix_;
  std::vector<LBaseTerm> terms_;
};

LBaseDecomposition decompose(std::uint64_t m, std::uint64_t radix);

/// Edge count of the i-clique, i(i-1)/2.
std::uint64_t clique_edges(std::uint64_t i);
/// Increment I_i - I_{i-1} = i - 1 for i >= 1.
std::uint64_t clique_increment(std::uint64_t i);

/// I_0..I_L and delta_1..delta_L of the complete graph K_L.
struct CliqueTables {
  explicit CliqueTables(std::uint64_t arity);

  std::uint64_t arity;
  std::vector<std::uint64_t> edges;      // index 0..L
  std::vector<std::uint64_t> increments; // index 0..L, entry 0 unused
};

/// Twice the largest edge count of an m-vertex induced subgraph of K_L^n,
/// for 1 <= m <= L^n.
std::uint64_t ex(std::uint64_t m, const HammingParams& params);

/// Minimum edge cut over m-vertex sets with both sides connected,
/// (L-1) n m - ex(m), for 1 <= m <= floor(L^n / 2).
///
/// This is the whole evaluation pipeline: the cost is one pass over the
/// O(log_L m) terms of decompose(m) plus the pairwise cross terms. An
/// imperative accumulator that starts at (L-1) n m and subtracts the
/// per-term and cross-term contributions in decomposition order computes
/// exactly this value.
std::uint64_t xi(std::uint64_t m, const HammingParams& params);

/// ex(m) through the hypercube-only expression
/// sum b_i 2^{b_i} + sum 2 i 2^{b_i}; requires L = 2.
std::uint64_t ex_hypercube(std::uint64_t m, const HammingParams& params);
/// ex(m) through the ternary-only expression
/// sum [2 a_i b_i 3^{b_i} + 2 (a_i - 1) 3^{b_i}] + 2 sum_{i<j} a_i a_j 3^{b_j};
/// requires L = 3.
std::uint64_t ex_ternary(std::uint64_t m, const HammingParams& params);

/// g [(L-1)(n-t) - (g-1)] L^t, the cut isolating g consecutive
/// t-dimensional sub-layers. Requires 0 <= t <= n-1, 1 <= g <= L-1 and
/// g L^t <= floor(L^n / 2).
std::uint64_t lambda_gLt(std::uint64_t g, std::uint32_t t, const HammingParams& params);

/// Minimum of xi(m) over h <= m <= floor(L^n / 2) by direct scan. Throws
/// ScanBudgetExceeded when the range holds more than scan_cap values.
std::uint64_t lambda_extra_scan(std::uint64_t h, const HammingParams& params,
                                std::uint64_t scan_cap);

/// ex(h1) + ex(h2) + 2 (sum of h1's coefficients) h2, valid when every
/// exponent of h1 exceeds every exponent of h2.
std::uint64_t ex_additivity_split(std::uint64_t h1, std::uint64_t h2,
                                  const HammingParams& params);

/// The six conditional edge-connectivity properties.
class ConditionKind {
public:
  enum class Kind { extra, embedded, cyclic, super, average, isoperimetric };

  static ConditionKind extra(std::uint64_t h) { return {Kind::extra, h}; }
  static ConditionKind embedded(std::uint64_t t) { return {Kind::embedded, t}; }
  static ConditionKind cyclic() { return {Kind::cyclic, 0}; }
  static ConditionKind super(std::uint64_t k) { return {Kind::super, k}; }
  static ConditionKind average(std::uint64_t k) { return {Kind::average, k}; }
  static ConditionKind isoperimetric(std::uint64_t h) { return {Kind::isoperimetric, h}; }

  Kind kind() const { return kind_; }
  /// h for extra/isoperimetric, t for embedded, k for super/average.
  std::uint64_t parameter() const { return parameter_; }

  /// Smallest vertex count of a subgraph of K_L^n with the property.
  /// Throws UnsupportedError for super/average k not a multiple of L-1.
  std::uint64_t theta(const HammingParams& params) const;

  /// (g, t) with theta = g L^t for the structured kinds (embedded, cyclic,
  /// super, average); std::nullopt for extra/isoperimetric.
  std::optional<std::pair<std::uint64_t, std::uint32_t>>
  structure(const HammingParams& params) const;

  /// "extra(4)", "cyclic", ...
  std::string to_string() const;
  static std::string kind_name(Kind kind);
  static Kind parse_kind(const std::string& name);

  friend bool operator==(const ConditionKind&, const ConditionKind&) = default;

private:
  ConditionKind(Kind kind, std::uint64_t parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_;
  std::uint64_t parameter_;
};

/// lambda(P, K_L^n) for the six properties.
///
/// extra(h) and isoperimetric(h) resolve to xi(h) when h <= L^floor(n/2) or
/// h has the form g L^t; embedded(t), super((L-1)t) and average((L-1)t)
/// resolve to (L-1)(n-t) L^t; cyclic uses the girth table
/// (g, t) = (1, 2), (1, 1), (3, 0) for L = 2, 3, >= 4.
std::uint64_t conditional_connectivity(const ConditionKind& cond, const HammingParams& params);

/// Splits h into g L^t when possible (g in [1, L-1]).
std::optional<std::pair<std::uint64_t, std::uint32_t>> as_g_power(std::uint64_t h,
                                                                   std::uint64_t radix);

} // namespace isocut
