#include <doctest.h>

#include "eqs/combinatorics.hpp"
#include "eqs/poset.hpp"

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

TEST_CASE("chains and Boolean lattices") {
  CHECK(chain(1).mu_bounded() == 1);
  CHECK(chain(2).mu_bounded() == -1);
  CHECK(chain(4).mu_bounded() == 0);
  for (int n = 0; n <= 5; ++n) CHECK(boolean_lattice(n).mu_bounded() == (n % 2 == 0 ? 1 : -1));
  Poset b = boolean_lattice(3);
  CHECK(b.leq(*b.find("{1}"), *b.find("{1,3}")));
  CHECK_FALSE(b.leq(*b.find("{2}"), *b.find("{1,3}")));
  CHECK_THROWS_AS(b.mobius(*b.find("{2}"), *b.find("{1,3}")), DomainError);
}

TEST_CASE("constructor rejects covers that skip ranks") {
  CHECK_THROWS_AS(Poset({0, 2}, {{0, 1}}), DomainError);
}

TEST_CASE("Rees product of B_2 minus bottom with C_2") {
  Poset r = rees_product(minus(boolean_lattice(2)), chain(2));
  CHECK(r.size() == 4);
  for (const char* l : {"({1},1)", "({2},1)", "({1,2},1)", "({1,2},2)"}) CHECK(r.find(l).has_value());
  CHECK(r.maximal().size() == 2);
}

TEST_CASE("ideals of Boolean lattices") {
  CHECK(ideal_I_j(boolean_lattice(1), 1).poset.size() == 0);
  CHECK(ideal_mobius(boolean_lattice(1), 1) == -1);
  CHECK(ideal_mobius(boolean_lattice(3), 1) == -1);
  CHECK(ideal_mobius(boolean_lattice(3), 2) == -4);
  CHECK(ideal_mobius(boolean_lattice(4), 2) == 11);
  CHECK(rees_chain_mobius(boolean_lattice(5)) == 44);
  CHECK_THROWS_AS(ideal_I_j(boolean_lattice(3), 4), DomainError);
}

TEST_CASE("tree posets") {
  CHECK(tree(3, 2).size() == 13);
  CHECK(tree_mobius(boolean_lattice(2), 2) == -6);
  CHECK(tree_lemma_rhs(boolean_lattice(1), 2) == -2);
}

TEST_CASE("finite-field lattices") {
  CHECK(subspace_lattice(2, 4).whitney() == std::vector<long long>{1, 15, 35, 15, 1});
  CHECK(subspace_lattice(3, 2).whitney() == std::vector<long long>{1, 4, 1});
  CHECK(isotropic_lattice(2, 2).whitney() == std::vector<long long>{1, 15, 15});
  CHECK_THROWS_AS(subspace_lattice(2, 6), CapExceeded);
  CHECK_THROWS_AS(isotropic_lattice(2, 3), CapExceeded);
  CHECK_THROWS_AS(subspace_lattice(4, 2), DomainError);
  FqVectorConfig bad = FqVectorConfig::symplectic(2, 1);
  (*bad.form)[0][1] = 0;
  (*bad.form)[1][0] = 0;
  CHECK_THROWS_AS(isotropic_lattice(bad), DomainError);
}

TEST_CASE("crosspolytope and signed derangements") {
  CHECK(crosspolytope(2).whitney() == std::vector<long long>{1, 4, 4});
  CHECK(signed_derangement_formula(2) == 5);
  CHECK(signed_derangement_count(2) == 5);
  CHECK(bar_index({3, 2, 5, 4, 6, 1, 7}, {true, true, false, true, true, false, true}) == 16);
  CHECK_THROWS_AS(bar_index({1}, {false}), DomainError);
}

TEST_CASE("random bounded posets are reproducible") {
  Poset a = random_bounded_poset(7, 4, 3);
  Poset b = random_bounded_poset(7, 4, 3);
  CHECK(a.cover_pairs() == b.cover_pairs());
  CHECK(a.bounded());
  CHECK(a.length() == 4);
}

TEST_CASE("poset suites at small bounds") {
  require_ok(verify_poset_basics(4));
  require_ok(verify_rees_chain_mobius(4));
  require_ok(verify_q_rees_chain_mobius(2, 3, 4));
  require_ok(verify_tree_theorems(3, 2, 2));
  require_ok(verify_tree_lemma(3, 2, 5, 11));
  require_ok(verify_type_bc(4, 2, 4, 3));
}
