#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pfrob/oracle.hpp"

using namespace pfrob;

TEST_CASE("complement of the classical 14..29 instance") {
  ComplementSet cs(Generators({14, 17, 20, 23, 26, 29}), 0);
  const std::vector<std::uint64_t> expected{
      1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 15, 16, 18, 19,
      21, 22, 24, 25, 27, 30, 32, 33, 35, 36, 38, 39, 41, 44, 47, 50, 53,
      61, 64, 67};
  REQUIRE(cs.elements() == expected);
  REQUIRE(brute_frobenius(cs) == 67);
  REQUIRE(brute_genus(cs) == 37);
}

TEST_CASE("complement of 5,7,11") {
  ComplementSet cs0(Generators({5, 7, 11}), 0);
  REQUIRE(cs0.elements() ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9, 13});
  ComplementSet cs4(Generators({5, 7, 11}), 4);
  REQUIRE(brute_frobenius(cs4) == 48);
  REQUIRE(brute_genus(cs4) == 47);
  REQUIRE(brute_power_sum(cs4, 1) == 1129);
  REQUIRE(brute_power_sum(cs4, 6) == Int("79330369495"));
  REQUIRE(brute_power_sum(cs4, 0) == 47);
}

TEST_CASE("empty complement") {
  ComplementSet cs(Generators({1, 2}), 0);
  REQUIRE(cs.elements().empty());
  REQUIRE(brute_frobenius(cs) == -1);
  REQUIRE(brute_genus(cs) == 0);
  REQUIRE(brute_power_sum(cs, 3) == 0);
  REQUIRE(brute_weighted_sum(cs, 1, NumberFieldElement::rational(Rat(2)))
              .is_zero());
}

TEST_CASE("stopping rule leaves nothing behind") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::uint64_t> vals;
    for (;;) {
      vals.clear();
      std::set<std::uint64_t> s;
      int k = 2 + static_cast<int>(rng() % 3);
      while (static_cast<int>(s.size()) < k) s.insert(2 + rng() % 13);
      vals.assign(s.begin(), s.end());
      std::uint64_t g = 0;
      for (std::uint64_t v : vals) g = std::gcd(g, v);
      if (g == 1) break;
    }
    Generators gens(vals);
    std::uint64_t p = rng() % 5;
    ComplementSet cs(gens, p);
    std::uint64_t last = cs.elements().empty() ? 0 : cs.elements().back();
    DenumerantTable table(gens, last + 4 * gens.a1() + 20);
    for (std::uint64_t n = last + 1; n <= table.bound(); ++n) {
      INFO("gens = " << gens.to_string() << " p = " << p << " n = " << n);
      REQUIRE(table.at(n) > p);
    }
    // and every listed element really is in the complement
    for (std::uint64_t v : cs.elements()) REQUIRE(table.at(v) <= p);
  }
}

TEST_CASE("brute weighted sums on tiny instances by hand") {
  // complement of <2,3> at p = 0 is {1}
  ComplementSet cs(Generators({2, 3}), 0);
  REQUIRE(cs.elements() == std::vector<std::uint64_t>{1});
  NumberFieldElement two = NumberFieldElement::rational(Rat(2));
  REQUIRE(brute_weighted_sum(cs, 1, two).scalar_value() == 2);
  REQUIRE(brute_weighted_sum(cs, 5, two).scalar_value() == 2);
  // and the closed form agrees
  REQUIRE(weighted_sum_mu1(Generators({2, 3}), 0, two).scalar_value() == 2);

  ComplementSet cs35(Generators({3, 5}), 0);  // {1, 2, 4, 7}
  REQUIRE(cs35.elements() == std::vector<std::uint64_t>{1, 2, 4, 7});
  // sum of (-1)^n n over the gaps: -1 + 2 + 4 - 7 = -2
  REQUIRE(brute_alternating(cs35) == -2);
}

TEST_CASE("verification report is all green across p") {
  for (std::uint64_t p = 0; p <= 6; ++p) {
    VerificationReport rep =
        verify(Generators({5, 7, 11}), p, {0, 1, 2, 3},
               {NumberFieldElement::rational(Rat(2)),
                NumberFieldElement::rational(Rat(-1, 2))});
    INFO("p = " << p);
    REQUIRE(rep.all_match());
    // frobenius, genus, sylvester, 4 power sums, 2 lambdas x mu in {1,2,3},
    // alternating (a1 = 5 is odd)
    REQUIRE(rep.checks.size() == 3 + 4 + 6 + 1);
    for (const VerificationCheck& c : rep.checks) REQUIRE(c.formula == c.oracle);
  }
}

TEST_CASE("verification covers the root-of-unity weight") {
  VerificationReport rep =
      verify(Generators({5, 7}), 2, {1, 2},
             {NumberFieldElement::generator(std::vector<Int>(5, Int(1)))});
  REQUIRE(rep.all_match());
  // mu = 2 has no closed form for a root weight, so only mu = 1 appears
  std::size_t weighted = 0;
  for (const VerificationCheck& c : rep.checks)
    if (c.name.rfind("weighted_sum", 0) == 0) ++weighted;
  REQUIRE(weighted == 1);
}

TEST_CASE("verification skips degenerate weights, keeps parity rule") {
  VerificationReport even =
      verify(Generators({4, 7}), 1, {0, 1},
             {NumberFieldElement::rational(Rat(1)),
              NumberFieldElement::rational(Rat(0)),
              NumberFieldElement::rational(Rat(2))});
  REQUIRE(even.all_match());
  for (const VerificationCheck& c : even.checks) {
    REQUIRE(c.name != "alternating_sum");  // a1 = 4 is even
    REQUIRE(c.name.find("lambda=1") == std::string::npos);
    REQUIRE(c.name.find("lambda=0") == std::string::npos);
  }
}

TEST_CASE("report aggregation flags a mismatch") {
  VerificationReport rep;
  rep.checks.push_back({"a", "1", "1", true});
  REQUIRE(rep.all_match());
  rep.checks.push_back({"b", "1", "2", false});
  REQUIRE(!rep.all_match());
}

TEST_CASE("oracle matches formulas on randomized instances") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::uint64_t> vals;
    for (;;) {
      vals.clear();
      std::set<std::uint64_t> s;
      int k = 2 + static_cast<int>(rng() % 3);
      while (static_cast<int>(s.size()) < k) s.insert(2 + rng() % 14);
      vals.assign(s.begin(), s.end());
      std::uint64_t g = 0;
      for (std::uint64_t v : vals) g = std::gcd(g, v);
      if (g == 1) break;
    }
    Generators gens(vals);
    std::uint64_t p = rng() % 7;
    PAperySet ap(gens, p);
    ComplementSet cs(gens, p);
    INFO("gens = " << gens.to_string() << " p = " << p);
    REQUIRE(frobenius_from_apery(ap) == brute_frobenius(cs));
    REQUIRE(genus_from_apery(ap) == brute_genus(cs));
    REQUIRE(sylvester_from_apery(ap) == brute_power_sum(cs, 1));
    unsigned long mu = rng() % 6;
    REQUIRE(power_sum_from_apery(ap, mu) == brute_power_sum(cs, mu));
  }
}
