#include <doctest.h>

#include "eqs/combinatorics.hpp"
#include "eqs/qseries.hpp"
#include "eqs/shelling.hpp"

using namespace eqs;

namespace {

void require_ok(const Report& rep) {
  const ReportItem* bad = rep.first_failure();
  std::string where;
  if (bad) {
    where = rep.suite + ": " + bad->id;
    for (const auto& [k, v] : bad->params) where += " " + k + "=" + v;
    where += ": " + bad->witness;
  }
  INFO(where);
  CHECK(rep.ok());
  CHECK_FALSE(rep.items.empty());
}

}  // namespace

TEST_CASE("ascent-free chain counts") {
  CHECK(ascent_free_chains(3, 1) == 1);
  CHECK(ascent_free_chains(3, 2) == 4);
  CHECK(ascent_free_chains(3, 3) == 1);
  CHECK(ascent_free_chains(4, 2) == 11);
  for (int n = 1; n <= 6; ++n) CHECK(ascent_free_chains(n, 1) == 1);
  CHECK(ascent_free_chains_in_poset(4, 2) == 11);
  CHECK_THROWS_AS(ascent_free_chains(8, 1), CapExceeded);
  CHECK_THROWS_AS(ascent_free_chains(3, 0), DomainError);
}

TEST_CASE("barred sets") {
  auto b10 = barred_set(1, 0);
  REQUIRE(b10.size() == 1);
  CHECK(word_str(b10.front()) == "1");
  auto b30 = barred_set(3, 0);
  REQUIRE(b30.size() == 1);
  CHECK(word_str(b30.front()) == "321");
  CHECK(barred_set_size(4, 1) == 11);
  CHECK(in_barred_set(parse_word("31'5")));
  CHECK_FALSE(in_barred_set(parse_word("1'3")));
  CHECK_FALSE(in_barred_set(parse_word("13")));
}

TEST_CASE("phi and psi") {
  CHECK(phi_map(parse_word("7")) == std::vector<int>{7});
  CHECK(phi_map(parse_word("21'3")) == std::vector<int>{3, 1, 2});
  CHECK(word_str(psi_map({3, 1, 2})) == "21'3");
  CHECK_THROWS_AS(phi_map(parse_word("1'2")), DomainError);
  CHECK_THROWS_AS(psi_map({2, 2}), DomainError);
}

TEST_CASE("admissible inversions") {
  CHECK(admissible_inversions({3, 1, 6, 7, 5, 4, 2}) == 2);
  CHECK(admissible_inversions({1, 2, 3, 4}) == 0);
  CHECK(aid({2, 1}) == 1);
}

TEST_CASE("aid is Mahonian") {
  for (int n = 0; n <= 6; ++n) CHECK(aid_des_enumerator(n).substitute(Var::t, 1L) == q_fact(n));
}

TEST_CASE("shelling suites at small bounds") {
  require_ok(verify_ascent_free_chains(5, 4));
  require_ok(verify_barred_bijection(5, 20, 3));
  require_ok(verify_equidist(5));
}
