#include "isocut/closedform.hpp"

#include <algorithm>
#include <limits>

#include "isocut/checked.hpp"
#include "isocut/error.hpp"

namespace isocut {

using checked::wide;

LBaseDecomposition::LBaseDecomposition(std::uint64_t radix, std::vector<LBaseTerm> terms)
    : radix_(radix), terms_(std::move(terms)) {
  if (radix < 2) {
    throw DomainError("radix must be at least 2");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient < 1 || terms_[i].coefficient >= radix) {
      throw DomainError("coefficient out of range [1, L-1]");
    }
    if (i > 0 && terms_[i].exponent >= terms_[i - 1].exponent) {
      throw DomainError("exponents must be strictly decreasing");
    }
  }
}

std::uint64_t LBaseDecomposition::value() const {
  wide total = 0;
  for (const auto& term : terms_) {
    total = checked::add(total, checked::mul(term.coefficient,
                                             checked::pow(radix_, term.exponent)));
  }
  return checked::narrow(total);
}

std::uint64_t LBaseDecomposition::coefficient_sum() const {
  std::uint64_t total = 0;
  for (const auto& term : terms_) {
    total += term.coefficient;
  }
  return total;
}

std::string LBaseDecomposition::to_string() const {
  std::string out;
  for (const auto& term : terms_) {
    if (!out.empty()) {
      out += " + ";
    }
    out += std::to_string(term.coefficient) + "*" + std::to_string(radix_) + "^" +
           std::to_string(term.exponent);
  }
  return out.empty() ? "0" : out;
}

LBaseDecomposition decompose(std::uint64_t m, std::uint64_t radix) {
  if (radix < 2) {
    throw DomainError("radix must be at least 2");
  }
  if (m < 1) {
    throw DomainError("cannot decompose m < 1");
  }
  std::vector<LBaseTerm> terms;
  std::uint32_t exponent = 0;
  while (m != 0) {
    const std::uint64_t digit = m % radix;
    if (digit != 0) {
      terms.push_back({digit, exponent});
    }
    m /= radix;
    ++exponent;
  }
  std::reverse(terms.begin(), terms.end());
  return LBaseDecomposition(radix, std::move(terms));
}

std::uint64_t clique_edges(std::uint64_t i) {
  return i == 0 ? 0 : checked::narrow(checked::mul(i, i - 1) / 2);
}

std::uint64_t clique_increment(std::uint64_t i) {
  if (i < 1) {
    throw DomainError("clique increment is defined for i >= 1");
  }
  return i - 1;
}

CliqueTables::CliqueTables(std::uint64_t L) : arity(L) {
  if (L < 2) {
    throw DomainError("arity L must be at least 2");
  }
  edges.resize(L + 1);
  increments.assign(L + 1, 0);
  for (std::uint64_t i = 0; i <= L; ++i) {
    edges[i] = clique_edges(i);
    if (i >= 1) {
      increments[i] = clique_increment(i);
    }
  }
}

namespace {

void require_in_graph(std::uint64_t m, const HammingParams& params) {
  if (m < 1 || m > params.vertex_count()) {
    throw DomainError("m=" + std::to_string(m) + " outside [1, " +
                      std::to_string(params.vertex_count()) + "]");
  }
}

void require_in_half(std::uint64_t m, const HammingParams& params) {
  if (m < 1 || m > params.half()) {
    throw DomainError("m=" + std::to_string(m) + " outside [1, " +
                      std::to_string(params.half()) + "]");
  }
}

wide ex_wide(std::uint64_t m, const HammingParams& params) {
  const std::uint64_t L = params.arity();
  const auto decomposition = decompose(m, L);
  wide total = 0;
  wide coefficients_so_far = 0;
  for (const auto& [a, b] : decomposition.terms()) {
    const wide block = checked::pow(L, b);
    // a t-dimensional sub-layers: (L-1) b internal degree each, plus the
    // a-clique of matchings between them.
    total = checked::add(total, checked::mul(checked::mul(checked::mul(L - 1, a), b), block));
    total = checked::add(total, checked::mul(checked::mul(a - 1, a), block));
    // Every earlier family contributes one neighbour per earlier coefficient.
    total = checked::add(
        total, checked::mul(2, checked::mul(coefficients_so_far, checked::mul(a, block))));
    coefficients_so_far += a;
  }
  return total;
}

} // namespace

std::uint64_t ex(std::uint64_t m, const HammingParams& params) {
  require_in_graph(m, params);
  return checked::narrow(ex_wide(m, params));
}

std::uint64_t xi(std::uint64_t m, const HammingParams& params) {
  require_in_half(m, params);
  const wide full = checked::mul(params.degree(), m);
  return checked::narrow(checked::sub(full, ex_wide(m, params)));
}

std::uint64_t ex_hypercube(std::uint64_t m, const HammingParams& params) {
  if (params.arity() != 2) {
    throw DomainError("hypercube expression requires L = 2");
  }
  require_in_graph(m, params);
  const auto terms = decompose(m, 2).terms();
  wide total = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const wide block = checked::pow(2, terms[i].exponent);
    total = checked::add(total, checked::mul(terms[i].exponent, block));
    total = checked::add(total, checked::mul(2 * i, block));
  }
  return checked::narrow(total);
}

std::uint64_t ex_ternary(std::uint64_t m, const HammingParams& params) {
  if (params.arity() != 3) {
    throw DomainError("ternary expression requires L = 3");
  }
  require_in_graph(m, params);
  const auto terms = decompose(m, 3).terms();
  wide total = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const wide a = terms[i].coefficient;
    const wide block = checked::pow(3, terms[i].exponent);
    total = checked::add(total, checked::mul(2 * a * terms[i].exponent, block));
    total = checked::add(total, checked::mul(2 * (a - 1), block));
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      total = checked::add(total, checked::mul(2 * a * terms[j].coefficient,
                                               checked::pow(3, terms[j].exponent)));
    }
  }
  return checked::narrow(total);
}

std::uint64_t lambda_gLt(std::uint64_t g, std::uint32_t t, const HammingParams& params) {
  const std::uint64_t L = params.arity();
  const std::uint32_t n = params.dimension();
  if (t >= n) {
    throw DomainError("t=" + std::to_string(t) + " must be at most n-1=" +
                      std::to_string(n - 1));
  }
  if (g < 1 || g > L - 1) {
    throw DomainError("g=" + std::to_string(g) + " outside [1, L-1]");
  }
  const wide block = checked::pow(L, t);
  if (checked::mul(g, block) > params.half()) {
    throw DomainError("g L^t exceeds floor(L^n / 2)");
  }
  const wide per_block = checked::sub(checked::mul(L - 1, n - t), g - 1);
  return checked::narrow(checked::mul(checked::mul(g, per_block), block));
}

std::uint64_t lambda_extra_scan(std::uint64_t h, const HammingParams& params,
                                std::uint64_t scan_cap) {
  require_in_half(h, params);
  const std::uint64_t span = params.half() - h;
  if (span > scan_cap) {
    throw ScanBudgetExceeded("scan over " + std::to_string(span + 1) +
                             " values exceeds the cap of " + std::to_string(scan_cap));
  }
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t m = h; m <= params.half(); ++m) {
    best = std::min(best, xi(m, params));
  }
  return best;
}

std::uint64_t ex_additivity_split(std::uint64_t h1, std::uint64_t h2,
                                  const HammingParams& params) {
  if (h1 < 1 || h2 < 1) {
    throw DomainError("both parts of the split must be positive");
  }
  const auto high = decompose(h1, params.arity());
  const auto low = decompose(h2, params.arity());
  if (high.terms().back().exponent <= low.terms().front().exponent) {
    throw DomainError("exponent ranges of h1 and h2 interleave");
  }
  const wide cross = checked::mul(2, checked::mul(high.coefficient_sum(), h2));
  return checked::narrow(checked::add(checked::add(ex(h1, params), ex(h2, params)), cross));
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> as_g_power(std::uint64_t h,
                                                                   std::uint64_t radix) {
  if (h < 1) {
    return std::nullopt;
  }
  const auto decomposition = decompose(h, radix);
  if (decomposition.terms().size() != 1) {
    return std::nullopt;
  }
  const auto term = decomposition.terms().front();
  return std::pair{term.coefficient, term.exponent};
}

std::string ConditionKind::kind_name(Kind kind) {
  switch (kind) {
  case Kind::extra:
    return "extra";
  case Kind::embedded:
    return "embedded";
  case Kind::cyclic:
    return "cyclic";
  case Kind::super:
    return "super";
  case Kind::average:
    return "average";
  case Kind::isoperimetric:
    return "isoperimetric";
  }
  return "extra";
}

ConditionKind::Kind ConditionKind::parse_kind(const std::string& name) {
  for (const auto kind : {Kind::extra, Kind::embedded, Kind::cyclic, Kind::super, Kind::average,
                          Kind::isoperimetric}) {
    if (kind_name(kind) == name) {
      return kind;
    }
  }
  throw DomainError("unknown condition kind '" + name + "'");
}

std::string ConditionKind::to_string() const {
  if (kind_ == Kind::cyclic) {
    return "cyclic";
  }
  return kind_name(kind_) + "(" + std::to_string(parameter_) + ")";
}

namespace {

std::uint32_t layer_dimension_for_degree(std::uint64_t k, const HammingParams& params) {
  const std::uint64_t L = params.arity();
  if (k % (L - 1) != 0) {
    throw UnsupportedError("k=" + std::to_string(k) + " is not a multiple of L-1=" +
                           std::to_string(L - 1) + "; only k = (L-1)t is resolved");
  }
  const std::uint64_t t = k / (L - 1);
  if (t >= params.dimension()) {
    throw DomainError("k=" + std::to_string(k) + " needs t=" + std::to_string(t) +
                      " >= n; no such cut exists");
  }
  return static_cast<std::uint32_t>(t);
}

std::pair<std::uint64_t, std::uint32_t> cyclic_structure(const HammingParams& params) {
  switch (params.arity()) {
  case 2:
    return {1, 2};
  case 3:
    return {1, 1};
  default:
    return {3, 0};
  }
}

} // namespace

std::optional<std::pair<std::uint64_t, std::uint32_t>>
ConditionKind::structure(const HammingParams& params) const {
  switch (kind_) {
  case Kind::embedded:
    if (parameter_ >= params.dimension()) {
      throw DomainError("embedded t must be at most n-1");
    }
    return std::pair{std::uint64_t{1}, static_cast<std::uint32_t>(parameter_)};
  case Kind::super:
  case Kind::average:
    return std::pair{std::uint64_t{1}, layer_dimension_for_degree(parameter_, params)};
  case Kind::cyclic:
    return cyclic_structure(params);
  case Kind::extra:
  case Kind::isoperimetric:
    break;
  }
  return std::nullopt;
}

std::uint64_t ConditionKind::theta(const HammingParams& params) const {
  if (kind_ == Kind::extra || kind_ == Kind::isoperimetric) {
    return parameter_;
  }
  const auto [g, t] = *structure(params);
  return checked::narrow(checked::mul(g, checked::pow(params.arity(), t)));
}

std::uint64_t conditional_connectivity(const ConditionKind& cond, const HammingParams& params) {
  switch (cond.kind()) {
  case ConditionKind::Kind::extra:
  case ConditionKind::Kind::isoperimetric: {
    const std::uint64_t h = cond.parameter();
    if (h < 1 || h > params.half()) {
      throw DomainError("h=" + std::to_string(h) + " outside [1, " +
                        std::to_string(params.half()) + "]");
    }
    if (h > params.first_interval_end() && !as_g_power(h, params.arity())) {
      throw DomainError("h=" + std::to_string(h) + " exceeds L^floor(n/2)=" +
                        std::to_string(params.first_interval_end()) +
                        " and is not of the form g L^t; use a scan");
    }
    return xi(h, params);
  }
  case ConditionKind::Kind::cyclic: {
    const auto [g, t] = cyclic_structure(params);
    if (t >= params.dimension() ||
        checked::mul(g, checked::pow(params.arity(), t)) > params.half()) {
      throw DomainError("K_" + std::to_string(params.arity()) + "^" +
                        std::to_string(params.dimension()) +
                        " cannot be split into two sides that both contain a cycle");
    }
    return lambda_gLt(g, t, params);
  }
  case ConditionKind::Kind::embedded:
  case ConditionKind::Kind::super:
  case ConditionKind::Kind::average: {
    const auto [g, t] = *cond.structure(params);
    return lambda_gLt(g, t, params);
  }
  }
  throw DomainError("unknown condition kind");
}

} // namespace isocut
