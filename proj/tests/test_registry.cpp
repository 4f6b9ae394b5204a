#include <doctest.h>

#include <set>

#include "eqs/combinatorics.hpp"
#include "eqs/registry.hpp"

using namespace eqs;

TEST_CASE("registry ids are unique and name their reports") {
  std::set<std::string> ids;
  for (const SuiteSpec& spec : suite_registry()) {
    CHECK(ids.insert(spec.id).second);
    CHECK(find_suite(spec.id) == &spec);
    Report rep = run_suite(spec);
    CHECK_MESSAGE(rep.suite == spec.id, spec.id);
    CHECK_MESSAGE(rep.ok(), spec.id);
    CHECK(!rep.items.empty());
  }
  CHECK(find_suite("missing") == nullptr);
}

TEST_CASE("registry bounds") {
  const SuiteSpec* s = find_suite("q-symmetry");
  REQUIRE(s != nullptr);
  CHECK(run_suite(*s, {{"nmax", 3}}).ok());
  CHECK_THROWS_AS(run_suite(*s, {{"zmax", 3}}), DomainError);
  CHECK_THROWS_AS(run_suite(*s, {{"nmax", -1}}), DomainError);
  CHECK_THROWS_AS(run_suite(*s, {{"nmax", 99}}), CapExceeded);
}
