#include <doctest.h>

#include <set>

#include "eqs/combinatorics.hpp"

using namespace eqs;

TEST_CASE("statistics of a small permutation") {
  auto s = statistics(Permutation::parse("32541"));
  CHECK(s.des == 3);
  CHECK(s.maj == 1 + 3 + 4);
  CHECK(s.exc == 2);
  CHECK(s.fix == 2);
  CHECK(s.inv == 6);
  CHECK(s.Des == subset_from({1, 3, 4}));
  CHECK(s.Exc == subset_from({1, 3}));
}

TEST_CASE("comaj complements maj") {
  for_each_perm(5, [](const Permutation& p) {
    auto s = statistics(p);
    CHECK(s.comaj == s.n * (s.n - 1) / 2 - s.maj);
  });
}

TEST_CASE("excedance-descent set of 531462") {
  CHECK(exd_set(Permutation::parse("531462")) == subset_from({1, 4}));
}

TEST_CASE("cycle notation round trip") {
  auto p = Permutation::parse("32541");
  CHECK(Permutation::from_cycles(5, p.cycles()) == p);
  CHECK(p.inverse().inverse() == p);
  CHECK(cycle_type(p) == Partition({3, 1, 1}));
}

TEST_CASE("permutation enumeration counts") {
  int count = 0;
  std::set<std::vector<int>> seen;
  for_each_perm(5, [&](const Permutation& p) {
    ++count;
    seen.insert(p.one_line());
  });
  CHECK(count == 120);
  CHECK(seen.size() == 120);
  CHECK(enumerate_by(5, PermFilter::derangements()).size() == 44);
}

TEST_CASE("partition basics") {
  auto p = Partition::parse("4,2,2");
  CHECK(p.size() == 8);
  CHECK(p.z() == 4 * 2 * 2 * 2);
  CHECK(p.conjugate() == Partition({3, 3, 1, 1}));
  CHECK(partitions(6).size() == 11);
  CHECK(compositions(5).size() == 16);
}

TEST_CASE("subset and composition conversions") {
  Subset s = subset_from({2, 3});
  CHECK(subset_to_composition(s, 5) == std::vector<int>{2, 1, 2});
  CHECK(composition_to_subset({2, 1, 2}) == s);
  CHECK(subset_sum(s) == 5);
}

TEST_CASE("caps are enforced") {
  Caps c = Caps::current();
  c.perm_n = 4;
  ScopedCaps guard(c);
  CHECK_THROWS_AS(for_each_perm(5, [](const Permutation&) {}), CapExceeded);
}

TEST_CASE("barred words print with apostrophes") {
  Word w = parse_word("2'13");
  CHECK(word_str(w) == "2'13");
  CHECK(w[0].barred);
}
