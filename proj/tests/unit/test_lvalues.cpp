#include "doctest.h"
#include "ffl/error.hpp"
#include "ffl/lvalues.hpp"
#include "oracles.hpp"

using namespace ffl;
using oracle::poly;

namespace {

struct Config {
  unsigned p;
  std::vector<std::vector<long long>> phi;
};

const std::vector<Config> kConfigs = {
    {2, {{1}}}, {3, {{1}}}, {3, {{0}, {1}}}, {5, {{1}, {1}}}, {2, {{0}, {1}}}, {3, {{1}, {2}}}, {5, {{0, 1}, {1}}},
};

}  // namespace

TEST_CASE("h_sum examples") {
  Field F = Field::make(3, 1);
  auto C = DrinfeldModule::carlitz(F);
  auto mu = mu_table(C, 3);
  CHECK(h_sum(mu, 0, {"z"}) == MultiPoly::constant(F, Vars{"theta", "z"}, 1));
  CHECK(h_sum(mu, 1, {"z"}).is_zero());
  auto phi = oracle::module(F, {{0}, {1}});
  CHECK(h_sum(mu_table(phi, 2), 2, {"z"}).is_zero());
  CHECK_THROWS_AS(h_sum(mu, 4, {"z"}), Error);
}

TEST_CASE("h_sum agrees with the direct sum") {
  for (const auto& c : kConfigs) {
    Field F = Field::make(c.p, 1);
    auto phi = oracle::module(F, c.phi);
    auto mu = mu_table(phi, c.p == 5 ? 3 : 4);
    for (unsigned n = 0; n <= 2; ++n)
      for (unsigned k = 0; k <= mu.max_degree(); ++k) {
        auto z = z_names(n);
        CHECK(h_sum(mu, k, z) == oracle::h_sum(mu, k, z));
      }
  }
}

TEST_CASE("H vanishes just past r(n+beta)/(q-1)") {
  for (const auto& c : kConfigs) {
    Field F = Field::make(c.p, 1);
    auto phi = oracle::module(F, c.phi);
    for (unsigned n = 1; n <= 2; ++n) {
      const unsigned b = static_cast<unsigned>(floor_q(vanishing_bound(phi, n)));
      if (std::pow(c.p, b + 3) > 4000) continue;
      auto mu = mu_table(phi, b + 3);
      for (unsigned k = b + 1; k <= b + 3; ++k) CHECK(h_sum(mu, k, z_names(n)).is_zero());
    }
  }
}

TEST_CASE("taelman_lvalue blocks") {
  Field F = Field::make(3, 1);
  auto C = DrinfeldModule::carlitz(F);
  auto mu = mu_table(C, 4);
  auto gamma = log_coeffs(C, 3).entries;
  CHECK(dirichlet_block(mu, 1, {}, 1, 10) == oracle::laurent(gamma[1], 10));
  auto phi = oracle::module(F, {{0}, {1}});
  auto mu2 = mu_table(phi, 3);
  auto g2 = log_coeffs(phi, 2).entries;
  CHECK(g2[2] == RatFunc(UniPoly::one(F), UniPoly::theta(F) - UniPoly::theta(F).pow(9)));
  CHECK(dirichlet_block(mu2, 2, {}, 1, 12) == oracle::laurent(g2[2], 12));
  for (unsigned d = 0; d <= 3; ++d)
    for (unsigned s = 1; s <= 2; ++s) {
      CHECK(dirichlet_block(mu2, d, {"z1"}, s, 8) == oracle::dirichlet_block(mu2, d, {"z1"}, s, 8));
      CHECK(dirichlet_block(mu, d, {"z1", "z2"}, s, 6) == oracle::dirichlet_block(mu, d, {"z1", "z2"}, s, 6));
    }
}

TEST_CASE("taelman_lvalue totals and cutoff") {
  Field F = Field::make(3, 1);
  auto C = DrinfeldModule::carlitz(F);
  CHECK(taelman_cutoff(1, 1, 10) == 10);
  CHECK(taelman_cutoff(2, 1, 8) == 17);
  CHECK(taelman_cutoff(1, 2, 7) == 3);
  auto L = taelman_lvalue(C, 0, 1, 6);
  CHECK(L.terms_used == 6);
  CHECK(L.series.precision() == 6);
  CHECK(L.series.top() == 0);
  CHECK(L.series.coeff(0) == MultiPoly::constant(F, Vars(), 1));
  CHECK(*L.tail_log_q == Rational(-7));
  // Brute sum over all blocks.
  auto mu = mu_table(C, 6);
  TateSeries sum(F, Vars(), 6);
  for (unsigned d = 0; d <= 6; ++d) sum += oracle::dirichlet_block(mu, d, {}, 1, 6);
  CHECK(L.series == sum);
  // A capped table lowers the certified precision instead of over-claiming.
  auto capped = taelman_lvalue(C, 1, 1, 10, 3u);
  CHECK(capped.terms_used == 3);
  CHECK(capped.series.precision() == 3);
  CHECK(*capped.tail_log_q == Rational(-4));
  auto full = taelman_lvalue(C, 1, 1, 10);
  CHECK(oracle::agree_from(capped.series, full.series, -3));
  auto phi = oracle::module(F, {{0}, {1}});
  auto L2 = taelman_lvalue(phi, 1, 1, 4);
  CHECK(L2.terms_used == 9);
  CHECK(L2.series.coeff(0) == MultiPoly::constant(F, Vars{"z1"}, 1));
}

TEST_CASE("Euler product equals the restricted Dirichlet sum") {
  Field F3 = Field::make(3, 1);
  auto C = DrinfeldModule::carlitz(F3);
  CHECK(euler_product_truncation(C, 0, 1, 0, 5).series == TateSeries::one(F3, Vars()).truncate(5));
  CHECK(euler_product_truncation(C, 0, 1, 1, 4).series == oracle::restricted_dirichlet(C, 0, 1, 1, 4));
  for (unsigned p : {2u, 3u}) {
    Field F = Field::make(p, 1);
    for (auto phi : {DrinfeldModule::carlitz(F), oracle::module(F, {{0}, {1}})})
      for (unsigned n = 0; n <= 1; ++n) {
        auto E = euler_product_truncation(phi, n, 1, 2, 5);
        CHECK(E.series == oracle::restricted_dirichlet(phi, n, 1, 2, 5));
      }
  }
  // The full product agrees with the Dirichlet sum on blocks of degree <= D.
  auto E = euler_product_truncation(C, 1, 2, 3, 7);
  auto L = taelman_lvalue(C, 1, 2, 7);
  CHECK(oracle::agree_from(E.series, L.series, -7));
}

TEST_CASE("special values at s <= 0") {
  Field F = Field::make(3, 1);
  auto C = DrinfeldModule::carlitz(F);
  auto mu = mu_table(C, 6);
  CHECK(special_value_nonpositive(mu, {"z"}, 0) == MultiPoly::constant(F, Vars{"theta", "z"}, 1));
  CHECK(special_value_nonpositive(mu, {}, 0) == MultiPoly::constant(F, Vars{"theta"}, 1));
  CHECK_THROWS_AS(special_value_nonpositive(mu_table(C, 0), {"z", "w"}, -4), Error);
  for (const auto& c : kConfigs) {
    Field G = Field::make(c.p, 1);
    auto phi = oracle::module(G, c.phi);
    for (unsigned n = 0; n <= 1; ++n)
      for (long s : {0L, -1L, -2L, -static_cast<long>(c.p)}) {
        const unsigned K = special_value_cutoff(phi, n, s);
        if (std::pow(c.p, K + 2) > 3000) continue;
        auto m = mu_table(phi, K + 2);
        auto z = z_names(n);
        auto v = special_value_nonpositive(m, z, s);
        CHECK(v == oracle::special_direct(m, z, s, K));
        CHECK(v == special_value_nonpositive(m, z, s, 2));
        CHECK(v == oracle::special_direct(m, z, s, K + 2));
      }
  }
}

TEST_CASE("Lucas binomials and bracket powers") {
  CHECK(lucas_binomial(3, oracle::digits(3, 4), 3) == 1);
  for (unsigned p : {2u, 3u, 5u}) {
    const unsigned M = p * p * p;
    auto c = oracle::pascal_mod(p, M);
    for (unsigned n = 0; n < M; ++n)
      for (unsigned k = 0; k < M; ++k) CHECK(lucas_binomial(p, oracle::digits(p, n), k) == (k <= n ? c[n][k] : 0));
  }
  Field F = Field::make(3, 1);
  auto a = poly(F, {1, 1});
  CHECK(bracket_pow(a, {}, 6) == TateSeries::one(F, Vars()).truncate(6));
  TateSeries expect(F, Vars(), 6);
  expect.add_term(0, MultiPoly::constant(F, Vars(), 1));
  expect.add_term(-1, MultiPoly::constant(F, Vars(), 2));
  expect.add_term(-2, MultiPoly::constant(F, Vars(), 1));
  CHECK(bracket_pow(a, {2}, 6) == expect);
  CHECK_THROWS_AS(bracket_pow(poly(F, {1, 2}), {1}, 4), Error);
  for (unsigned p : {2u, 3u}) {
    Field G = Field::make(p, 1);
    for (unsigned d = 1; d <= 3; ++d)
      for (const auto& b : monics(G, d))
        for (unsigned y = 0; y <= 8; ++y) {
          auto bp = bracket_pow(b, oracle::digits(p, y), 12);
          auto direct = (TateSeries::from_unipoly(b.pow(y), Vars()) * TateSeries::theta_power(G, Vars(), -static_cast<long>(d * y))).truncate(12);
          CHECK(bp == direct);
          CHECK(bp.top() == 0);
          CHECK(bp.coeff(0) == MultiPoly::constant(G, Vars(), 1));
        }
  }
}

TEST_CASE("p-adic integers") {
  auto m1 = PAdicInt::from_integer(3, -1);
  CHECK(m1.digits(3) == std::vector<unsigned>{2, 2, 2});
  auto m2 = PAdicInt::from_integer(3, -2);
  CHECK(m2.digits(3) == std::vector<unsigned>{1, 2, 2});
  auto m5 = PAdicInt::from_integer(2, -5);
  CHECK(m5.digits(5) == std::vector<unsigned>{1, 1, 0, 1, 1});
  auto p7 = PAdicInt::from_integer(2, 6);
  CHECK(p7.is_natural());
  CHECK(p7.digits(4) == std::vector<unsigned>{0, 1, 1, 0});
}

TEST_CASE("Goss tail estimate") {
  CHECK(goss_tail_threshold(1, 1, 0, 3) == 4);
  CHECK(goss_tail_log_q(1, 1, 0, 3, 4, 0) == Rational(-3));
  CHECK(goss_tail_log_q(1, 1, 0, 3, 4, -1) == Rational(-7));
  CHECK(goss_tail_log_q(2, 1, 0, 5, 7, -1) == Rational(-7) + Rational(7, 2) - 5);
  CHECK_THROWS_AS(goss_tail_log_q(1, 1, 0, 3, 3, 0), Error);
  CHECK_THROWS_AS(goss_tail_log_q(1, 0, 0, 3, 9, 0), Error);
}

TEST_CASE("Goss evaluation") {
  Field F = Field::make(3, 1);
  auto C = DrinfeldModule::carlitz(F);
  auto theta = TateSeries::theta_power(F, Vars(), 1);
  try {
    goss_eval(C, 0, {theta, PAdicInt::from_integer(3, -1)}, Rational(-5));
    FAIL("n = 0 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NZero);
  }
  auto zero = goss_eval(C, 1, {theta, PAdicInt::from_integer(3, 0)}, Rational(-5));
  CHECK(!zero.tail_log_q);
  CHECK(zero.series == TateSeries::one(F, Vars{"z1"}));
  auto g = goss_eval(C, 1, {theta, PAdicInt::from_integer(3, -1)}, Rational(-10));
  REQUIRE(g.tail_log_q);
  CHECK(*g.tail_log_q < Rational(-10));
  CHECK(g.terms_used == 4);
  CHECK(g.m == 3);
  auto L = taelman_lvalue(C, 1, 1, 10);
  CHECK(oracle::agree_from(g.series, L.series, -10));
  for (unsigned s = 1; s <= 2; ++s) {
    Field G = Field::make(2, 1);
    auto phi = DrinfeldModule::carlitz(G);
    auto x = TateSeries::theta_power(G, Vars(), s);
    auto r = goss_eval(phi, 1, {x, PAdicInt::from_integer(2, -static_cast<long long>(s))}, Rational(-8));
    auto t = taelman_lvalue(phi, 1, s, 8);
    const long lo = std::max<long>(-8, static_cast<long>(floor_q(*r.tail_log_q)) + 1);
    CHECK(oracle::agree_from(r.series, t.series, lo));
  }
  // A non-monomial x goes through series inversion.
  TateSeries x = theta + TateSeries::one(F, Vars());
  auto gx = goss_eval(C, 1, {x, PAdicInt::from_integer(3, -1)}, Rational(-6));
  CHECK(gx.series.precision() == 6);
  CHECK(gx.series.coeff(0) == MultiPoly::constant(F, Vars{"z1"}, 1));
}
