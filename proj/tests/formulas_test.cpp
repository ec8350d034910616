#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "pfrob/power_sums.hpp"

using namespace pfrob;

TEST_CASE("worked instance 5,7,11 at p = 4") {
  Generators g({5, 7, 11});
  PAperySet ap(g, 4);
  REQUIRE(frobenius_from_apery(ap) == 48);
  REQUIRE(genus_from_apery(ap) == 47);
  REQUIRE(sylvester_from_apery(ap) == 1129);
  REQUIRE(power_sum_from_apery(ap, 6) == Int("79330369495"));
  REQUIRE(power_sum_from_apery(ap, 0) == 47);   // mu = 0 is the genus
  REQUIRE(power_sum_from_apery(ap, 1) == 1129);  // mu = 1 the sylvester sum
}

TEST_CASE("worked instance 5,7,11 at p = 0") {
  Generators g({5, 7, 11});
  PAperySet ap(g, 0);
  REQUIRE(frobenius_from_apery(ap) == 13);
  REQUIRE(genus_from_apery(ap) == 8);
  // gaps: 1,2,3,4,6,8,9,13
  REQUIRE(sylvester_from_apery(ap) == 1 + 2 + 3 + 4 + 6 + 8 + 9 + 13);
  REQUIRE(power_sum_from_apery(ap, 2) ==
          1 + 4 + 9 + 16 + 36 + 64 + 81 + 169);
}

TEST_CASE("convenience wrappers agree with the apery-backed forms") {
  Generators g({3, 5});
  REQUIRE(frobenius(g, 1) == 22);
  REQUIRE(frobenius(g, 0) == 7);
  REQUIRE(genus(g, 0) == 4);
  REQUIRE(sylvester_sum(g, 0) == 1 + 2 + 4 + 7);
  PowerSumRequest req{g, 1, 2};
  PAperySet ap(g, 1);
  REQUIRE(power_sum(req) == power_sum_from_apery(ap, 2));
}

TEST_CASE("classical two-generator forms at p = 0") {
  for (std::uint64_t a = 2; a <= 30; ++a)
    for (std::uint64_t b = a + 1; b <= 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      TwoGenClosed closed = two_gen_closed(a, b, 0);
      Int A(a), B(b);
      INFO("a = " << a << " b = " << b);
      REQUIRE(closed.g == A * B - A - B);
      REQUIRE(closed.n == (A - 1) * (B - 1) / 2);
      REQUIRE(closed.s == (A - 1) * (B - 1) * (2 * A * B - A - B - 1) / 12);
    }
}

TEST_CASE("two-generator closed forms match the apery route") {
  for (std::uint64_t a = 2; a <= 20; ++a)
    for (std::uint64_t b = a + 1; b <= 20; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::uint64_t p = 0; p <= 5; ++p) {
        TwoGenClosed closed = two_gen_closed(a, b, p);
        PAperySet ap(Generators({a, b}), p);
        INFO("a = " << a << " b = " << b << " p = " << p);
        REQUIRE(closed.g == frobenius_from_apery(ap));
        REQUIRE(closed.n == genus_from_apery(ap));
        REQUIRE(closed.s == sylvester_from_apery(ap));
      }
    }
}

TEST_CASE("two-generator examples") {
  TwoGenClosed c = two_gen_closed(2, 3, 0);
  REQUIRE(c.g == 1);
  REQUIRE(c.n == 1);
  REQUIRE(c.s == 1);
  REQUIRE(two_gen_closed(5, 7, 0).g == 23);
  REQUIRE(two_gen_closed(3, 5, 1).g == 22);
  REQUIRE_THROWS_AS(two_gen_closed(4, 6, 0), coprimality_error);
  REQUIRE_THROWS_AS(two_gen_closed(1, 5, 0), domain_error);
}

TEST_CASE("higher power sums stay integral and sane on random instances") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    std::uint64_t a = 2 + rng() % 12, b = 2 + rng() % 12, c = 2 + rng() % 12;
    if (a == b || a == c || b == c) {
      --trial;
      continue;
    }
    if (std::gcd(std::gcd(a, b), c) != 1) {
      --trial;
      continue;
    }
    Generators g({a, b, c});
    std::uint64_t p = rng() % 5;
    PAperySet ap(g, p);
    Int genus = genus_from_apery(ap);
    REQUIRE(genus >= 0);
    REQUIRE(frobenius_from_apery(ap) >= -1);
    Int prev = genus;
    for (unsigned long mu = 1; mu <= 5; ++mu) {
      Int s = power_sum_from_apery(ap, mu);  // throws if non-integral
      REQUIRE(s >= 0);
      if (genus > 0) REQUIRE(s >= prev);  // terms are >= 1, powers grow
      prev = s;
    }
  }
}

TEST_CASE("degenerate generator 1 empties the complement") {
  Generators g({1, 5});
  PAperySet ap0(g, 0);
  REQUIRE(frobenius_from_apery(ap0) == -1);
  REQUIRE(genus_from_apery(ap0) == 0);
  REQUIRE(sylvester_from_apery(ap0) == 0);
  // for p >= 1, d(n) = floor(n/5) + 1, so the complement is {1, ..., 5p-1}
  PAperySet ap2(g, 2);
  REQUIRE(frobenius_from_apery(ap2) == 9);
  REQUIRE(genus_from_apery(ap2) == 9);
  REQUIRE(sylvester_from_apery(ap2) == 45);
}
