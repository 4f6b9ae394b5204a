#include <doctest.h>

#include "eqs/eulerian.hpp"
#include "eqs/qseries.hpp"

using namespace eqs;

namespace {

SymElem h(std::initializer_list<int> parts, const MPoly& c = 1) {
  return SymElem::basis_element(Basis::h, Partition(std::vector<int>(parts)), c);
}

MPoly t(int e = 1) { return MPoly::var(Var::t, e); }
MPoly r(int e = 1) { return MPoly::var(Var::r, e); }

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

TEST_CASE("small Eulerian quasisymmetric functions") {
  CHECK(eulerian_q(0, 0, 0) == QSymElem::fundamental(0, 0));
  CHECK(eulerian_sym(1, 0, 1) == h({1}));
  CHECK(eulerian_sym(2, 1, 0) == h({2}));
  CHECK(eulerian_q(2, 1, 0) == QSymElem::fundamental(2, 0));
  CHECK(eulerian_sym(Partition({6}), 3) == h({4, 2}, 2) - h({4, 1, 1}) + h({3, 2, 1}) + h({5, 1}));
  auto sc = schur_expand_and_check_positive(eulerian_sym(Partition({6}), 3));
  CHECK(sc.positive);
  CHECK(sc.expansion.str() == "3*s[6] + 3*s[5,1] + 3*s[4,2] + s[3,3] + s[3,2,1]");
}

TEST_CASE("ornament and banner expansions") {
  auto e = q_via_ornaments(Partition({1}), 0, 1);
  CHECK(e.size() == 1);
  CHECK(e.at({1}) == MPoly(1));
  MonomialExpansion h2{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}};
  CHECK(q_via_ornaments(Partition({2}), 1, 2) == h2);
  CHECK(q_via_banners(Partition({2}), 1, 2) == h2);
  auto empty = banner_expansions(0, 2);
  CHECK(empty.size() == 1);
  CHECK(empty.begin()->first.first == Partition());
}

TEST_CASE("closed form in small degree") {
  CHECK(q_closed_form(0) == SymElem::one());
  CHECK(q_closed_form(2) == h({2}, r(2) + t()));
  CHECK(q_recurrence(2) == q_closed_form(2));
}

TEST_CASE("power sums, characters and the erasure operator") {
  CHECK(q_power_sum(1) == SymElem::basis_element(Basis::p, Partition({1})));
  CHECK(Partition({2, 1, 1}).z() == 4);
  MPoly f = MPoly(1) + t() + MPoly(2) * t(2) + MPoly(3) * t(3);
  CHECK(erase_noncoprime(f, 2) == t() + MPoly(3) * t(3));
  CharTable ct = char_table(6);
  REQUIRE(ct.rows.back() == Partition({1, 1, 1, 1, 1, 1}));
  CHECK(ct.values.back()[1] == 1);
  CHECK(ct.values.back()[2] == 26);
  CHECK(ct.values.back()[3] == 66);
}

TEST_CASE("sym_from_expansion recovers h_2") {
  MonomialExpansion e = expand_monomials(h({2}), 2);
  CHECK(sym_from_expansion(e, 2) == h({2}));
}

TEST_CASE("symmetric generating function") { require_ok(verify_symmetric_genfun(5)); }
TEST_CASE("stable specialization") { require_ok(verify_stable_specialization(5)); }
TEST_CASE("nonstable specialization") { require_ok(verify_nonstable_specialization(4)); }
TEST_CASE("three-way agreement") { require_ok(verify_three_way(4)); }
TEST_CASE("closed form and recurrence") { require_ok(verify_closed_form(6)); }
TEST_CASE("power-sum expansion") { require_ok(verify_power_sum(5)); }
TEST_CASE("character conjecture") { require_ok(verify_character_conjecture(6)); }
TEST_CASE("dimensions") { require_ok(verify_dimensions(5)); }
TEST_CASE("plethysm formula") { require_ok(verify_plethysm_formula(5)); }
TEST_CASE("cycle products") { require_ok(verify_cycle_product(5)); }
TEST_CASE("involutions") { require_ok(verify_involutions(4)); }
TEST_CASE("multiset derangements") { require_ok(verify_multiset_derangements(4, 4)); }
TEST_CASE("no-repeat words") { require_ok(verify_no_repeat_words(4)); }
TEST_CASE("double-descent words") { require_ok(verify_double_descent_words(4)); }
TEST_CASE("h-positivity") { require_ok(verify_h_positivity(5)); }
TEST_CASE("cycle-type symmetry") { require_ok(verify_cycle_type_symmetry(5)); }
TEST_CASE("Schur positivity") { require_ok(verify_schur_positivity(5, 6)); }
TEST_CASE("restriction") { require_ok(verify_restriction(5)); }
TEST_CASE("derangement homology") { require_ok(verify_derangement_homology(5)); }
