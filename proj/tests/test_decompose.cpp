#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "json.hpp"
#include "polysum/decompose.hpp"
#include "polysum/practical.hpp"

using namespace polysum;

TEST_CASE("decompose_practical_triangular: worked examples") {
  TriDecomposition d1 = decompose_practical_triangular(1);
  CHECK(d1.practical_part == 1);
  CHECK(d1.tri_index == 0);
  CHECK(d1.x == 1);
  CHECK(d1.m == 1);
  CHECK(d1.cofactor == 1);

  TriDecomposition d5 = decompose_practical_triangular(5);
  CHECK(d5.practical_part == 4);
  CHECK(d5.tri_index == 1);
  CHECK(d5.x == 3);
  CHECK(d5.m == 2);
  CHECK(d5.cofactor == 2);  // 41 - 9 = 32 = 2^4 * 2

  TriDecomposition d10 = decompose_practical_triangular(10);
  CHECK(d10.practical_part == 4);
  CHECK(d10.tri_index == 3);
  CHECK(d10.x == 7);
  CHECK(d10.m == 3);
  CHECK(d10.cofactor == 1);  // 81 - 49 = 32 = 2^5 * 1

  CHECK_THROWS_AS(decompose_practical_triangular(0), std::invalid_argument);
}

TEST_CASE("decompose_practical_triangular: total and sound on [1, 10^4]") {
  for (u64 n = 1; n <= 10000; ++n) {
    TriDecomposition d = decompose_practical_triangular(n);
    CHECK(verify(d));
    CHECK(d.cofactor <= (u64{1} << d.m));  // quotient bound feeding the closure rule
  }
}

TEST_CASE("decompose_practical_triangular: random large n") {
  std::mt19937_64 rng(987654);
  std::uniform_int_distribution<u64> dist(1'000'000'000ull, 1'000'000'000'000ull);
  for (int t = 0; t < 200; ++t) {
    TriDecomposition d = decompose_practical_triangular(dist(rng));
    CHECK(verify(d));
  }
}

TEST_CASE("pair_mod_p: examples and canonical choices") {
  PairCongruence a = pair_mod_p(7, 2, 5);  // 5 | (7-2)
  CHECK(a.x_res == 2);
  CHECK(a.y_res == 0);
  CHECK(a.modulus == 5);
  CHECK((polygonal_u128(7, 2) + polygonal_u128(7, 0)) % 5 == 2);

  PairCongruence b = pair_mod_p(6, 3, 5);
  CHECK((polygonal_u128(6, b.x_res) + polygonal_u128(6, b.y_res)) % 5 == 3);

  PairCongruence c = pair_mod_p(4, 0, 3);
  CHECK(c.x_res == 0);
  CHECK(c.y_res == 0);

  CHECK_THROWS_AS(pair_mod_p(5, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(pair_mod_p(5, 1, 9), std::invalid_argument);
}

TEST_CASE("pair_mod_p: congruence re-verified over an (s, n, p) grid") {
  std::vector<u64> odd_primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  std::mt19937_64 rng(333);
  for (u32 s = 4; s <= 20; ++s) {
    for (u64 p : odd_primes) {
      for (int t = 0; t < 10; ++t) {
        u64 n = rng() % 10000;
        PairCongruence pc = pair_mod_p(s, n, p);
        CHECK(pc.modulus == p);
        CHECK(pc.x_res < p);
        CHECK(pc.y_res < p);
        CHECK((polygonal_u128(s, pc.x_res) + polygonal_u128(s, pc.y_res)) % p ==
              n % p);
      }
    }
  }
}

TEST_CASE("pair_mod_p returns the lexicographically smallest pair when p does not divide s-2") {
  for (u32 s : {4u, 6u, 9u}) {
    for (u64 p : {5ull, 7ull}) {
      if ((s - 2) % p == 0) continue;
      for (u64 n = 0; n < p; ++n) {
        PairCongruence pc = pair_mod_p(s, n, p);
        bool smaller_exists = false;
        for (u64 x = 0; x <= pc.x_res && !smaller_exists; ++x) {
          for (u64 y = 0; y < p; ++y) {
            if (x == pc.x_res && y >= pc.y_res) break;
            if ((polygonal_u128(s, x) + polygonal_u128(s, y)) % p == n % p)
              smaller_exists = true;
          }
        }
        CHECK_FALSE(smaller_exists);
      }
    }
  }
}

TEST_CASE("pair_mod_2: representatives and the class guarantee") {
  PairCongruence even = pair_mod_2(5, 8);
  CHECK(even.x_res == 0);
  CHECK(even.y_res == 0);
  CHECK(even.modulus == 4);
  PairCongruence odd = pair_mod_2(5, 7);
  CHECK(odd.x_res == 0);
  CHECK(odd.y_res == 1);
  PairCongruence o8 = pair_mod_2(8, 7);
  CHECK(o8.y_res == 1);
  CHECK((polygonal_u128(8, 4) + polygonal_u128(8, 1)) % 2 == 7 % 2);

  // any lift of the residues keeps the parity
  for (u32 s = 4; s <= 12; ++s) {
    for (u64 n : {14ull, 27ull}) {
      PairCongruence pc = pair_mod_2(s, n);
      for (u64 x1 = pc.x_res; x1 <= 20; x1 += 4) {
        for (u64 y1 = pc.y_res; y1 <= 20; y1 += 4) {
          CHECK((polygonal_u128(s, x1) + polygonal_u128(s, y1)) % 2 == n % 2);
        }
      }
    }
  }
}

TEST_CASE("special_prime") {
  CHECK(special_prime(4) == 5);
  CHECK(special_prime(5) == 5);
  CHECK(special_prime(7) == 13);  // 5 | (7-2)
  CHECK(special_prime(27) == 13); // 5 | 25
  for (u32 s = 4; s <= 100; ++s) {
    u64 p = special_prime(s);
    CHECK(p % 4 == 1);
    CHECK(is_prime(p));
    CHECK((s - 2) % p != 0);
    for (u64 q = 5; q < p; q += 4)  // smallest such prime
      if (is_prime(q)) CHECK((s - 2) % q == 0);
  }
}

TEST_CASE("pair_mod_pk: examples") {
  PairCongruence a = pair_mod_pk(5, 2, 5, 1);
  CHECK(a.x_res == 3);
  CHECK(a.y_res == 2);  // 12 + 5 = 17 = 2 (mod 5)

  PairCongruence b = pair_mod_pk(4, 0, 5, 1);
  CHECK((polygonal_u128(4, b.x_res) + polygonal_u128(4, b.y_res)) % 5 == 0);

  PairCongruence c = pair_mod_pk(6, 7, 5, 2);
  CHECK(c.modulus == 25);
  CHECK((polygonal_u128(6, c.x_res) + polygonal_u128(6, c.y_res)) % 25 == 7);

  CHECK_THROWS_AS(pair_mod_pk(7, 1, 5, 1), std::invalid_argument);  // 5 | s-2
  CHECK_THROWS_AS(pair_mod_pk(5, 1, 7, 1), std::invalid_argument);  // 7 = 3 mod 4
}

TEST_CASE("pair_mod_pk: re-verified over the (s, p, k) grid") {
  std::mt19937_64 rng(444);
  for (u32 s = 4; s <= 20; ++s) {
    for (u64 p : {5ull, 13ull, 17ull, 29ull}) {
      if ((s - 2) % p == 0) continue;
      for (u32 k = 1; k <= 5; ++k) {
        u64 pk = 1;
        for (u32 i = 0; i < k; ++i) pk *= p;
        for (int t = 0; t < 5; ++t) {
          u64 n = rng() % 1000000;
          PairCongruence pc = pair_mod_pk(s, n, p, k);
          CHECK(pc.modulus == pk);
          CHECK((polygonal_u128(s, pc.x_res) + polygonal_u128(s, pc.y_res)) % pk ==
                n % pk);
        }
      }
    }
  }
}

TEST_CASE("constant_A: values and the ratio bound") {
  CHECK(constant_A(4) == 200);   // 4 * 2 * 5^2
  CHECK(constant_A(5) == 300);   // 4 * 3 * 5^2
  CHECK(constant_A(7) == 3380);  // 4 * 5 * 13^2

  for (u32 s = 4; s <= 30; ++s) {
    u64 A = constant_A(s);
    u64 p = special_prime(s);
    for (u64 x : {u64{1}, u64{2}, u64{3}, u64{100}, u64{10000}}) {
      u128 lhs = 2 * polygonal_u128(s, 2 * p * x);
      CHECK(lhs <= u128{A} * x * x);
    }
  }
}

TEST_CASE("constant_A is tight at x = 1 for s = 4") {
  // s = 4 has s-4 = 0: the ratio is exactly A for every x
  u64 p = special_prime(4);
  for (u64 x = 1; x <= 50; ++x)
    CHECK(2 * polygonal_u128(4, 2 * p * x) == u128{200} * x * x);
}

TEST_CASE("theorem2_params") {
  Theorem2Params a = theorem2_params(4, 1'000'000);
  CHECK(a.A == 200);
  CHECK(a.special_prime == 5);
  CHECK(a.special_prime_index == 3);
  CHECK_FALSE(a.r_exact.has_value());
  CHECK_FALSE(a.N_of_s.has_value());
  CHECK(a.r_estimate_ln_pr == doctest::Approx(184.713).epsilon(0.01));
  CHECK(a.product_at_cap > 3.0);
  CHECK(a.product_at_cap < 200.0);

  Theorem2Params b = theorem2_params(5, 1000);
  CHECK(b.A == 300);
  CHECK_FALSE(b.r_exact.has_value());

  Theorem2Params c = theorem2_params(11, 2);
  CHECK_FALSE(c.r_exact.has_value());  // product 1.5 < 200 <= A(s)
}

TEST_CASE("theorem2_decompose: verified decompositions for s = 5") {
  auto w = theorem2_decompose(5, 1'000'000, 3, 8);
  REQUIRE(w.has_value());
  CHECK(w->dec.n == 1'000'000);
  CHECK(verify(w->dec));
  CHECK(w->n_k % 2 == 0);
  // the congruence certificate itself
  for (const PairCongruence& pc : w->residues) {
    u64 guarantee = pc.modulus == 4 ? 2 : pc.modulus;
    CHECK((polygonal_u128(5, pc.x_res) + polygonal_u128(5, pc.y_res)) % guarantee ==
          w->dec.n % guarantee);
  }
}

TEST_CASE("theorem2_decompose: nonagonal 23 stays undecomposable") {
  CHECK_FALSE(theorem2_decompose(9, 23, 3, 8).has_value());
}

TEST_CASE("theorem2_decompose: boundary just above 2 P_4(n_1)") {
  // r = 3: n_1 = 2*2*3*5 = 60, 2 P_4(60) = 7200
  auto w = theorem2_decompose(4, 7202, 3, 8);
  REQUIRE(w.has_value());
  CHECK(w->k == 1);
  CHECK(w->n_k == 60);
  CHECK(verify(w->dec));
}

TEST_CASE("theorem2_decompose: r below i(s) is rejected") {
  CHECK_THROWS_AS(theorem2_decompose(7, 100000, 3, 8), std::invalid_argument);
}

TEST_CASE("theorem2_decompose: randomized soundness sweep") {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<u64> dist(20000, 100'000'000);
  for (u32 s : {5u, 6u, 8u}) {
    int found = 0;
    for (int t = 0; t < 40; ++t) {
      auto w = theorem2_decompose(s, dist(rng), 3, 8);
      if (!w) continue;
      ++found;
      CHECK(verify(w->dec));
      CHECK(w->dec.practical_part + static_cast<u64>(polygonal_u128(s, w->dec.x)) +
                static_cast<u64>(polygonal_u128(s, w->dec.y)) ==
            w->dec.n);
    }
    CHECK(found > 0);
  }
}

TEST_CASE("witness json schema") {
  TriDecomposition d = decompose_practical_triangular(10);
  auto jt = nlohmann::json::parse(witness_json(d));
  CHECK(jt["n"] == 10);
  CHECK(jt["kind"] == "tri");
  CHECK(jt["components"]["practical"] == 4);
  CHECK(jt["components"]["tri_index"] == 3);
  CHECK(jt["proof"]["x"] == 7);
  CHECK(jt["proof"]["m"] == 3);
  CHECK(jt["proof"]["s"] == 1);

  auto w = theorem2_decompose(5, 1'000'000, 3, 8);
  REQUIRE(w.has_value());
  auto jp = nlohmann::json::parse(witness_json(*w));
  CHECK(jp["kind"] == "poly");
  CHECK(jp["n"] == 1'000'000);
  CHECK(jp["components"].contains("practical"));
  CHECK(jp["components"]["s"] == 5);
  CHECK(jp["proof"]["r"] == 3);
  CHECK(jp["proof"]["n_k"] == w->n_k);
  CHECK(jp["proof"]["residues"].is_array());
}
