#include <doctest.h>

#include "eqs/genfun.hpp"
#include "eqs/qseries.hpp"

using namespace eqs;

namespace {
MPoly q(int e) { return MPoly::var(Var::q, e); }
}  // namespace

TEST_CASE("gaussian binomial") {
  CHECK(gauss(4, 2) == 1 + q(1) + 2 * q(2) + q(3) + q(4));
  CHECK(gauss(5, 0) == MPoly(1));
  CHECK(gauss(3, 4).is_zero());
  CHECK(q_fact(3) == (1 + q(1)) * (1 + q(1) + q(2)));
}

TEST_CASE("q-multinomial agrees with a product of binomials") {
  CHECK(q_multinomial(5, {2, 2, 1}) == gauss(5, 2) * gauss(3, 2));
}

TEST_CASE("exact division") {
  MPoly a = q_fact(4);
  CHECK(exact_divide(a, q_int(3)) == q_int(2) * q_int(4));
  CHECK_THROWS(exact_divide(q_int(3), q_int(2)));
}

TEST_CASE("the two q-exponentials are inverse up to sign") {
  DividedSeries e = exp_q_series(6);
  DividedSeries E = cap_exp_q_series(6);
  DividedSeries prod = e * E.scaled(MPoly(-1));
  CHECK(prod[0] == MPoly(1));
  for (int n = 1; n <= 6; ++n) CHECK(prod[n].is_zero());
  DividedSeries quotient = DividedSeries(6);
  quotient[0] = 1;
  DividedSeries inv = quotient / e;
  for (int n = 0; n <= 6; ++n) CHECK(inv[n] == E.scaled(MPoly(-1))[n]);
}

TEST_CASE("power series division by a non-unit constant term") {
  PolySeries known(4), den(4);
  known[0] = 1;
  known[1] = q(2);
  known[3] = MPoly::var(Var::t);
  den[0] = 1 - MPoly::var(Var::t) * q(1);
  den[1] = -1;
  PolySeries num = known * den;
  PolySeries quo = num / den;
  for (int n = 0; n <= 4; ++n) CHECK(quo[n] == known[n]);
}

TEST_CASE("q-Eulerian enumerator for n = 3") {
  MPoly a3 = joint_enumerator(3, {{Stat::Maj, Var::q}, {Stat::Exc, Var::t}});
  MPoly t = MPoly::var(Var::t);
  CHECK(a3 == 1 + (2 * q(1) + q(2) + q(3)) * t + t * t * q(2));
  CHECK(a3.evaluate({1, 1, 1, 1, 1}) == 6);
}

TEST_CASE("generating function suites") {
  CHECK(verify_maj_exc_genfun(6).ok());
  CHECK(verify_fix_genfun(6).ok());
  CHECK(verify_four_stat_genfun(5, 4).ok());
  CHECK(verify_q_eulerian_formulas(6).ok());
  CHECK(verify_maj_exc_genfun(6).items.size() > 0);
  auto sym = verify_q_symmetry(6);
  CHECK(sym.ok());
  for (const auto& it : sym.items)
    if (it.status == Status::Fail) MESSAGE(it.id << " " << it.witness);
}

TEST_CASE("A_4 at t -> t/q against the printed table") {
  MPoly a4 = joint_enumerator(4, {{Stat::Maj, Var::q}, {Stat::Des, Var::p}, {Stat::Exc, Var::t}});
  MPoly shifted = a4.substitute(Var::t, MPoly::var(Var::q, -1) * MPoly::var(Var::t));
  MPoly q = MPoly::var(Var::q), p = MPoly::var(Var::p), t = MPoly::var(Var::t);
  MPoly shown = MPoly(1) +
                (3 * p + 2 * p * q + p * q.pow(2) + 2 * p.pow(2) * q.pow(2) + 2 * p.pow(2) * q.pow(3) +
                 p.pow(2) * q.pow(4)) * t +
                (3 * p + p * q + p.pow(2) * q + 3 * p.pow(2) * q.pow(2) + 2 * p.pow(2) * q.pow(3) +
                 p.pow(3) * q.pow(4)) * t.pow(2) +
                p * t.pow(3);
  CHECK(shifted == shown);
  CHECK_FALSE(a4 == shown);
}
