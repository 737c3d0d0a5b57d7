#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <random>

#include "polysum/practical.hpp"

using namespace polysum;

TEST_CASE("is_practical: fixed cases") {
  CHECK(is_practical(1).practical);
  CHECK(is_practical(2).practical);
  CHECK(is_practical(20).practical);

  PracticalityReport r14 = is_practical(14);
  CHECK_FALSE(r14.practical);
  REQUIRE(r14.failing_prime.has_value());
  CHECK(*r14.failing_prime == 7);  // sigma(2) + 1 = 4 < 7

  PracticalityReport r15 = is_practical(15);
  CHECK_FALSE(r15.practical);
  CHECK(*r15.failing_prime == 3);  // odd smallest prime factor fails
}

TEST_CASE("is_practical: report invariants") {
  for (u64 n = 1; n <= 3000; ++n) {
    PracticalityReport rep = is_practical(n);
    CHECK(rep.practical == !rep.failing_prime.has_value());
    Factorization f = factorize(n);
    if (n >= 2 && f.factors[0].first != 2) {
      CHECK_FALSE(rep.practical);
      CHECK(*rep.failing_prime == f.factors[0].first);
    }
    if (rep.practical) CHECK(rep.sigma_prefixes.size() == f.factors.size());
  }
}

TEST_CASE("is_practical_by_definition: fixed cases and bound") {
  CHECK(is_practical_by_definition(1));
  CHECK(is_practical_by_definition(6));   // 1,2,3,4=1+3,5=2+3,6
  CHECK_FALSE(is_practical_by_definition(3));   // 2 unreachable from {1,3}
  CHECK_FALSE(is_practical_by_definition(10));  // 4 not a subset sum of {1,2,5,10}
  CHECK_THROWS_AS(is_practical_by_definition(100001), std::invalid_argument);
}

TEST_CASE("characterization agrees with the subset-sum oracle on [1, 2*10^4]") {
  for (u64 n = 1; n <= 20000; ++n)
    CHECK(is_practical(n).practical == is_practical_by_definition(n));
}

TEST_CASE("generate_practicals: small bounds") {
  PracticalSieve s30 = generate_practicals(30);
  std::vector<u64> got;
  for (u64 i = 1; i <= 30; ++i)
    if (s30.test(i)) got.push_back(i);
  CHECK(got == std::vector<u64>{1, 2, 4, 6, 8, 12, 16, 18, 20, 24, 28, 30});

  PracticalSieve s1 = generate_practicals(1);
  CHECK(s1.test(1));
  CHECK(s1.count() == 1);

  PracticalSieve s2671 = generate_practicals(2671);
  CHECK_FALSE(s2671.test(2671));  // prime, hence not practical
}

TEST_CASE("sieve agrees with the per-index test") {
  PracticalSieve sieve = generate_practicals(1'000'000);
  for (u64 i = 1; i <= 1000; ++i)
    CHECK(sieve.test(i) == is_practical(i).practical);
  std::mt19937_64 rng(314159);
  for (int t = 0; t < 10000; ++t) {
    u64 i = rng() % 1'000'000 + 1;
    CHECK(sieve.test(i) == is_practical(i).practical);
  }

  SUBCASE("structure: 1 and 2 set, no odd index above 1") {
    CHECK(sieve.test(1));
    CHECK(sieve.test(2));
    u64 odd_hits = 0;
    for (u64 i = 3; i <= 1'000'000; i += 2)
      if (sieve.test(i)) ++odd_hits;
    CHECK(odd_hits == 0);
  }
}

TEST_CASE("sieve is identical across worker counts") {
  PracticalSieve multi = generate_practicals(200000);
  setenv("POLYSUM_THREADS", "1", 1);
  PracticalSieve single = generate_practicals(200000);
  unsetenv("POLYSUM_THREADS");
  CHECK(multi.bits == single.bits);
}

TEST_CASE("closure: practical m times n <= sigma(m)+1 stays practical") {
  PracticalSieve sieve = generate_practicals(10000);
  std::vector<u64> practicals;
  for (u64 i = 1; i <= 10000; ++i)
    if (sieve.test(i)) practicals.push_back(i);
  std::mt19937_64 rng(2718);
  for (int t = 0; t < 1000; ++t) {
    u64 m = practicals[rng() % practicals.size()];
    u64 sig = sigma(factorize(m));
    u64 n = rng() % (sig + 1) + 1;  // 1 <= n <= sigma(m) + 1
    CHECK(is_practical(m * n).practical);
  }
}

TEST_CASE("practical q with 3 and 4 both not dividing q forces q in {1, 2}") {
  PracticalSieve sieve = generate_practicals(1'000'000);
  for (u64 q = 1; q <= 1'000'000; ++q) {
    if (!sieve.test(q)) continue;
    if (q % 3 != 0 && q % 4 != 0) CHECK(q <= 2);
  }
}

TEST_CASE("every practical n >= 2 is even") {
  PracticalSieve sieve = generate_practicals(100000);
  for (u64 n = 2; n <= 100000; ++n)
    if (sieve.test(n)) CHECK(n % 2 == 0);
}

TEST_CASE("sieve file round trip") {
  PracticalSieve sieve = generate_practicals(12345);
  std::string path = "test_sieve_roundtrip.psieve";
  sieve.save(path);
  PracticalSieve loaded = PracticalSieve::load(path);
  CHECK(loaded.bound == sieve.bound);
  CHECK(loaded.bits == sieve.bits);
  std::remove(path.c_str());

  SUBCASE("bad header is rejected") {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    std::fputs("NOTASIEVEFILE", f);
    std::fclose(f);
    CHECK_THROWS_AS(PracticalSieve::load(path), std::runtime_error);
    std::remove(path.c_str());
  }
}

TEST_CASE("generate_practicals rejects out-of-range bounds") {
  CHECK_THROWS_AS(generate_practicals(0), std::invalid_argument);
  CHECK_THROWS_AS(generate_practicals(kSieveBoundCap + 1), std::invalid_argument);
}
