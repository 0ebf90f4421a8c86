#pragma once

#include <string>
#include <vector>

#include "isocut/oracle.hpp"

// Self-check suites: reference tables, the layered-increase inequalities of
// xi, closed form against enumeration, and the bijective-connection transfer.

namespace isocut::verify {

enum class Scope { tables, lemmas, oracle, bc };

std::string to_string(Scope scope);
Scope parse_scope(const std::string& text);

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
  bool skipped = false; // not run, e.g. graph above the vertex cap
};

struct SuiteReport {
  Scope scope = Scope::tables;
  std::vector<Check> checks;
  double wall_seconds = 0.0;

  bool passed() const;
};

struct Options {
  /// Adds the slow tier: K_3^3 enumeration and the multi-part cut search.
  bool full = false;
  OracleBudget budget;
};

SuiteReport run(Scope scope, const Options& options = {});

} // namespace isocut::verify
