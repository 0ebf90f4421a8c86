#include <doctest.h>

#include "isocut/error.hpp"
#include "isocut/verify.hpp"

using namespace isocut;

namespace {

void require_pass(const verify::SuiteReport& report) {
  CHECK_FALSE(report.checks.empty());
  for (const auto& check : report.checks) {
    CAPTURE(check.name);
    CAPTURE(check.expected);
    CAPTURE(check.actual);
    CHECK(check.passed);
  }
  CHECK(report.passed());
}

} // namespace

TEST_CASE("scope names") {
  for (const auto scope : {verify::Scope::tables, verify::Scope::lemmas, verify::Scope::oracle,
                           verify::Scope::bc}) {
    CHECK(verify::parse_scope(verify::to_string(scope)) == scope);
  }
  CHECK_THROWS_AS(verify::parse_scope("everything"), DomainError);
}

TEST_CASE("tables suite") {
  const auto report = verify::run(verify::Scope::tables);
  CHECK(report.scope == verify::Scope::tables);
  require_pass(report);
}

TEST_CASE("bc suite") {
  require_pass(verify::run(verify::Scope::bc));
}

TEST_CASE("oracle suite fast tier") {
  const auto report = verify::run(verify::Scope::oracle);
  require_pass(report);
  bool any_skipped = false;
  for (const auto& check : report.checks) {
    any_skipped = any_skipped || check.skipped;
  }
  CHECK(any_skipped);
}

TEST_CASE("oracle suite reports skips under a small vertex cap") {
  verify::Options options;
  options.budget.max_vertices = 9;
  const auto report = verify::run(verify::Scope::oracle, options);
  std::size_t skipped = 0;
  for (const auto& check : report.checks) {
    skipped += check.skipped;
  }
  CHECK(skipped > 0);
  CHECK(report.passed());
}
