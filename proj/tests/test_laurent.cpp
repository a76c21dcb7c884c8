#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tqa/laurent.hpp"

using namespace tqa;

namespace {

Laurent random_laurent(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(-3, 3);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  Laurent f;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    ExpVec e{};
    e[VQ] = expo(rng);
    e[VU] = expo(rng) / 2;
    e[VLAM] = std::abs(expo(rng)) / 2;
    f += Laurent::monomial(make_rational(num(rng), den(rng)), e);
  }
  return f;
}

}  // namespace

TEST_CASE("additive inverse and identities") {
  Laurent q = Laurent::q();
  CHECK((q + (-q)).is_zero());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Laurent f = random_laurent(rng);
    CHECK(f * Laurent::one() == f);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("hand-expanded product") {
  // (q - q^-1)(q + q^-1) = q^2 - q^-2
  Laurent lhs = Laurent::q_minus_qinv() * (Laurent::q(1) + Laurent::q(-1));
  CHECK(lhs == Laurent::q(2) - Laurent::q(-2));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("exact division") {
  // (q^2 - 1) / (q - q^-1) = q
  CHECK((Laurent::q(2) - Laurent::one()).div_exact(Laurent::q_minus_qinv()) == Laurent::q());
  Laurent f = Laurent::q(3) + Laurent::u() - Laurent::one();
  CHECK(f.div_exact(Laurent::one()) == f);
  // (q - q^-1) / (1 - q) = -q^-1 - 1
  Laurent expect = -Laurent::q(-1) - Laurent::one();
  CHECK(Laurent::q_minus_qinv().div_exact(Laurent::one() - Laurent::q()) == expect);
  CHECK_THROWS_AS((Laurent::q() + Laurent::u()).div_exact(Laurent::q() - Laurent::u()),
                  NotDivisible);
}

TEST_CASE("div_exact(f*g, g) == f randomized") {
  std::mt19937_64 rng(29);
  int done = 0;
  while (done < 300) {
    Laurent f = random_laurent(rng), g = random_laurent(rng);
    if (g.is_zero()) continue;
    CHECK((f * g).div_exact(g) == f);
    ++done;
  }
}

TEST_CASE("evaluation at q = 1") {
  CHECK((Laurent::q(2) + Laurent::q(-1)).eval_q1() == Laurent(2));
  CHECK((Laurent::q_minus_qinv() * Laurent::u()).eval_q1().is_zero());
  Laurent f = Laurent(3) + Laurent::var(VLAM) * Laurent::q();
  CHECK(f.eval_q1() == Laurent(3) + Laurent::var(VLAM));
}

TEST_CASE("classical rate") {
  CHECK((Laurent::one() - Laurent::q()).classical_rate() == Laurent::one());
  CHECK(Laurent::q_minus_qinv().classical_rate() == Laurent(-2));
  CHECK((Laurent::q(2) - Laurent::q(-2)).classical_rate() == Laurent(-4));
  CHECK_THROWS_AS(Laurent::q().classical_rate(), NotDivisible);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    Laurent f = random_laurent(rng);
    CHECK((f * (Laurent::one() - Laurent::q())).classical_rate() == f.eval_q1());
  }
}

TEST_CASE("canonical text form") {
  Laurent f = Laurent::monomial(make_rational(-3, 2), VQ, -1) * Laurent::u(2) + Laurent::one();
  CHECK(f.to_string() == "-3/2 q^-1 u^2 + 1");
  CHECK(Laurent().to_string() == "0");
  CHECK(Laurent::q_minus_qinv().to_string() == "-q^-1 + q");
}

TEST_CASE("powers") {
  CHECK(Laurent::q().pow(-3) == Laurent::q(-3));
  CHECK((Laurent::q() + Laurent::one()).pow(2) ==
        Laurent::q(2) + Laurent(2) * Laurent::q() + Laurent::one());
  CHECK(Laurent::monomial(make_rational(2), VU, 1).pow(-1) ==
        Laurent::monomial(make_rational(1, 2), VU, -1));
}

TEST_CASE("coefficient extraction") {
  Laurent f = Laurent::u(-1) * Laurent::q(2) + Laurent::u() + Laurent(5);
  CHECK(f.coeff_of(VU, -1) == Laurent::q(2));
  CHECK(f.coeff_of(VU, 0) == Laurent(5));
  CHECK(f.min_exp(VU) == -1);
  CHECK(f.max_exp(VU) == 1);
}
