#include "polysum/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "polysum/practical.hpp"

namespace polysum {

TriDecomposition decompose_practical_triangular(u64 n) {
  if (n < 1)
    throw std::invalid_argument("decompose_practical_triangular: n must be >= 1");
  auto [x, m] = two_adic_sqrt_8n1(n);
  u128 a = u128{8} * n + 1;
  u128 num = a - u128{x} * x;  // positive, divisible by 2^{m+2}
  u64 s = narrow_u64(num >> (m + 2));
  TriDecomposition d;
  d.n = n;
  d.x = x;
  d.m = m;
  d.cofactor = s;
  d.practical_part = (u64{1} << (m - 1)) * s;
  d.tri_index = (x - 1) / 2;
  if (s < 1 || s > (u64{1} << m) ||
      d.practical_part + u128{d.tri_index} * (d.tri_index + 1) / 2 != n)
    throw std::logic_error("decompose_practical_triangular: construction failed");
  return d;
}

bool verify(const TriDecomposition& d) {
  if (d.n < 1 || d.x % 2 == 0 || d.m < 1 || d.cofactor < 1) return false;
  u128 a = u128{8} * d.n + 1;
  if (u128{d.x} * d.x >= a) return false;
  if (a - u128{d.x} * d.x != (u128{d.cofactor} << (d.m + 2))) return false;
  if (d.cofactor > (u64{1} << d.m)) return false;
  if (d.practical_part != (u64{1} << (d.m - 1)) * d.cofactor) return false;
  if (d.tri_index != (d.x - 1) / 2) return false;
  if (u128{d.practical_part} + u128{d.tri_index} * (d.tri_index + 1) / 2 != d.n)
    return false;
  return is_practical(d.practical_part).practical;
}

PairCongruence pair_mod_p(u32 s, u64 n, u64 p) {
  if (s < 4) throw std::invalid_argument("pair_mod_p: s must be >= 4");
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("pair_mod_p: p must be an odd prime");
  if (p > 1'000'000)
    throw std::invalid_argument("pair_mod_p: p above value-set scan limit");
  u64 np = n % p;
  PairCongruence pc{s, n, 0, 0, p};
  if ((s - 2) % p == 0) {
    // P_s(t) = t (mod p) here, and P_s(0) = 0 stands in for the index p.
    pc.x_res = np;
    pc.y_res = 0;
  } else {
    constexpr u64 kNone = std::numeric_limits<u64>::max();
    std::vector<u64> value(p);  // P_s(i) mod p
    std::vector<u64> min_y(p, kNone);
    for (u64 i = 0; i < p; ++i) {
      value[i] = static_cast<u64>(polygonal_u128(s, i) % p);
      if (min_y[value[i]] == kNone) min_y[value[i]] = i;
    }
    bool found = false;
    for (u64 x = 0; x < p && !found; ++x) {
      u64 need = (np + p - value[x]) % p;
      if (min_y[need] != kNone) {
        pc.x_res = x;
        pc.y_res = min_y[need];
        found = true;
      }
    }
    if (!found) throw std::logic_error("pair_mod_p: value sets do not intersect");
  }
  if ((polygonal_u128(s, pc.x_res) + polygonal_u128(s, pc.y_res)) % p != np)
    throw std::logic_error("pair_mod_p: verification failed");
  return pc;
}

PairCongruence pair_mod_2(u32 s, u64 n) {
  if (s < 4) throw std::invalid_argument("pair_mod_2: s must be >= 4");
  // Residues mod 4 of the classes (4,4) and (4,1); the guarantee is mod 2.
  return {s, n, 0, n % 2 == 0 ? u64{0} : u64{1}, 4};
}

u64 special_prime(u32 s) {
  if (s < 4) throw std::invalid_argument("special_prime: s must be >= 4");
  for (u64 p = 5;; p += 4) {
    if (is_prime(p) && (s - 2) % p != 0) return p;
  }
}

PairCongruence pair_mod_pk(u32 s, u64 n, u64 p, u32 k) {
  if (s < 4) throw std::invalid_argument("pair_mod_pk: s must be >= 4");
  if (p % 4 != 1 || !is_prime(p))
    throw std::invalid_argument("pair_mod_pk: p must be prime, p = 1 (mod 4)");
  if ((s - 2) % p == 0)
    throw std::invalid_argument("pair_mod_pk: p must not divide s - 2");
  u64 pk = checked_pow_u64(p, k);
  u64 s4 = u64{s} - 4;
  u64 target = static_cast<u64>(
      (u128{8} * (s - 2) % pk * (n % pk) + u128{2} * s4 % pk * s4) % pk);
  auto [x0, y0] = two_squares_mod_pk(target, p, k);
  u64 inv = mod_inverse(static_cast<i64>(u128{2} * (s - 2) % pk), pk);
  PairCongruence pc{s, n, 0, 0, pk};
  pc.x_res = mulmod((x0 + s4) % pk, inv, pk);
  pc.y_res = mulmod((y0 + s4) % pk, inv, pk);
  if ((polygonal_u128(s, pc.x_res) + polygonal_u128(s, pc.y_res)) % pk != n % pk)
    throw std::logic_error("pair_mod_pk: verification failed");
  return pc;
}

u64 constant_A(u32 s) {
  u64 p = special_prime(s);
  return narrow_u64(checked_mul(u128{4} * (s - 2), u128{p} * p));
}

namespace {

// zeta(2) and e^gamma for the Mertens-type estimate
// prod_{p <= x} (1 + 1/p) ~ e^gamma ln(x) / zeta(2).
constexpr double kZeta2 = 1.6449340668482264;
constexpr double kExpGamma = 1.7810724179901980;

u32 prime_index_of(u64 p) {
  u32 idx = 0;
  for (u64 q : sieve_primes(p)) {
    ++idx;
    if (q == p) return idx;
  }
  throw std::logic_error("prime_index_of: not a prime");
}

}  // namespace

Theorem2Params theorem2_params(u32 s, u64 prime_cap) {
  if (prime_cap > 100'000'000)
    throw std::invalid_argument("theorem2_params: prime cap above 10^8");
  Theorem2Params params;
  params.s_gon = s;
  params.special_prime = special_prime(s);
  params.special_prime_index = prime_index_of(params.special_prime);
  params.A = constant_A(s);
  params.prime_cap = prime_cap;
  params.r_estimate_ln_pr = static_cast<double>(params.A) * kZeta2 / kExpGamma;
  double product = 1.0;
  u32 r = 0;
  for (u64 p : sieve_primes(prime_cap)) {
    ++r;
    product *= 1.0 + 1.0 / static_cast<double>(p);
    if (r >= params.special_prime_index &&
        product >= static_cast<double>(params.A)) {
      params.r_exact = r;
      u128 primorial = 1;
      for (u64 q : first_primes(r)) primorial = checked_mul(primorial, q);
      params.N_of_s = narrow_u64(
          checked_mul(2, polygonal_u128(s, narrow_u64(2 * primorial))));
      break;
    }
  }
  params.product_at_cap = product;
  return params;
}

bool verify(const PolyDecomposition& d) {
  if (d.n < 1 || d.practical_part < 1) return false;
  if (polygonal_u128(d.s_gon, d.x) + polygonal_u128(d.s_gon, d.y) +
          d.practical_part !=
      d.n)
    return false;
  return is_practical(d.practical_part).practical;
}

namespace {

using Pair = std::pair<u64, u64>;

// All residue pairs mod 4 whose class fixes P_s(x) + P_s(y) = n (mod 2).
std::vector<Pair> mod4_pairs(u32 s, u64 n) {
  std::vector<Pair> out;
  for (u64 a = 0; a < 4; ++a)
    for (u64 b = 0; b < 4; ++b)
      if ((polygonal_u128(s, a) + polygonal_u128(s, b)) % 2 == n % 2)
        out.emplace_back(a, b);
  return out;
}

// All pairs in [0,p)^2 with P_s(x) + P_s(y) = n (mod p), lexicographic.
std::vector<Pair> modp_pairs(u32 s, u64 n, u64 p) {
  std::vector<u64> value(p);
  for (u64 i = 0; i < p; ++i)
    value[i] = static_cast<u64>(polygonal_u128(s, i) % p);
  u64 np = n % p;
  std::vector<Pair> out;
  for (u64 x = 0; x < p; ++x)
    for (u64 y = 0; y < p; ++y)
      if ((value[x] + value[y]) % p == np) out.emplace_back(x, y);
  return out;
}

// Canonical pair mod p^k plus its sign/swap variants, deduplicated.
std::vector<Pair> modpk_pairs(u32 s, u64 n, u64 p, u32 k) {
  u64 pk = checked_pow_u64(p, k);
  u64 s4 = u64{s} - 4;
  u64 target = static_cast<u64>(
      (u128{8} * (s - 2) % pk * (n % pk) + u128{2} * s4 % pk * s4) % pk);
  auto [x0, y0] = two_squares_mod_pk(target, p, k);
  u64 inv = mod_inverse(static_cast<i64>(u128{2} * (s - 2) % pk), pk);
  auto transform = [&](u64 u) { return mulmod((u + s4) % pk, inv, pk); };
  u64 np = n % pk;
  std::vector<Pair> out;
  for (Pair base : {Pair{x0, y0}, Pair{y0, x0}}) {
    for (u64 a : {base.first % pk, (pk - base.first % pk) % pk}) {
      for (u64 b : {base.second % pk, (pk - base.second % pk) % pk}) {
        u64 x = transform(a), y = transform(b);
        if ((polygonal_u128(s, x) + polygonal_u128(s, y)) % pk != np) continue;
        out.emplace_back(x, y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::optional<Theorem2Witness> theorem2_decompose(u32 s, u64 n, u32 r,
                                                  u32 max_k) {
  if (s < 4) throw std::invalid_argument("theorem2_decompose: s must be >= 4");
  if (n < 1 || max_k < 1 || r < 1)
    throw std::invalid_argument("theorem2_decompose: n, r, max_k must be >= 1");
  if (n > (u64{1} << 63))
    throw std::invalid_argument("theorem2_decompose: n must be <= 2^63");
  u64 special = special_prime(s);
  std::vector<u64> primes = first_primes(r);
  auto special_it = std::find(primes.begin(), primes.end(), special);
  if (special_it == primes.end())
    throw std::invalid_argument(
        "theorem2_decompose: r below the special prime's index i(s)");
  std::size_t special_pos = static_cast<std::size_t>(special_it - primes.begin());

  // n_k for k = 1 (special prime to the first power); grows by a factor of
  // the special prime per increment of k.
  u128 base = 2;
  for (u64 p : primes) base = checked_mul(base, p);

  // Largest usable k: n_k fits u64 and 2 P_s(n_k) < n.
  u32 k_start = 0;
  for (u32 k = 1; k <= max_k; ++k) {
    u128 nk = base;
    bool fits = true;
    for (u32 i = 1; i < k; ++i) {
      if (nk > std::numeric_limits<u64>::max() / special) {
        fits = false;
        break;
      }
      nk *= special;
    }
    if (!fits || nk > std::numeric_limits<u64>::max()) break;
    u128 two_ps;
    try {
      two_ps = checked_mul(2, polygonal_u128(s, static_cast<u64>(nk)));
    } catch (const std::overflow_error&) {
      break;
    }
    if (two_ps < n)
      k_start = k;
    else
      break;
  }
  if (k_start == 0) return std::nullopt;

  for (u32 k = k_start; k >= 1; --k) {
    u64 n_k = narrow_u64([&] {
      u128 nk = base;
      for (u32 i = 1; i < k; ++i) nk *= special;
      return nk;
    }());
    u64 half = n_k / 2;
    u128 sigma_half = sigma_u128(factorize(half));

    // Solution lists per modulus: 4, each odd non-special prime, special^k.
    std::vector<u64> moduli;
    std::vector<std::vector<Pair>> lists;
    moduli.push_back(4);
    lists.push_back(mod4_pairs(s, n));
    for (std::size_t i = 1; i < primes.size(); ++i) {
      if (i == special_pos) continue;
      moduli.push_back(primes[i]);
      lists.push_back(modp_pairs(s, n, primes[i]));
    }
    moduli.push_back(checked_pow_u64(special, k));
    lists.push_back(modpk_pairs(s, n, special, k));

    bool empty = false;
    for (const auto& l : lists)
      if (l.empty()) empty = true;
    if (empty) continue;

    // Mixed-radix walk: last list advances fastest; first combination is
    // the all-canonical one.
    std::vector<std::size_t> idx(lists.size(), 0);
    while (true) {
      std::vector<Congruence> xs, ys;
      xs.reserve(lists.size());
      ys.reserve(lists.size());
      for (std::size_t i = 0; i < lists.size(); ++i) {
        const Pair& pr = lists[i][idx[i]];
        xs.push_back({pr.first, moduli[i]});
        ys.push_back({pr.second, moduli[i]});
      }
      u64 x = crt_combine(xs).residue;
      u64 y = crt_combine(ys).residue;
      u128 px = polygonal_u128(s, x), py = polygonal_u128(s, y);
      if (px + py >= n)
        throw std::logic_error("theorem2_decompose: positivity bound violated");
      u64 q = n - static_cast<u64>(px + py);
      if (q % half != 0)
        throw std::logic_error("theorem2_decompose: quotient divisibility failed");
      u64 t = q / half;
      bool practical_q =
          u128{t} <= sigma_half + 1 || is_practical(q).practical;
      if (practical_q) {
        Theorem2Witness w;
        w.dec = {n, s, q, x, y};
        w.r = r;
        w.k = k;
        w.n_k = n_k;
        for (std::size_t i = 0; i < lists.size(); ++i) {
          const Pair& pr = lists[i][idx[i]];
          w.residues.push_back({s, n, pr.first, pr.second, moduli[i]});
        }
        if (!verify(w.dec))
          throw std::logic_error("theorem2_decompose: witness failed re-verification");
        return w;
      }
      // odometer increment
      bool exhausted = true;
      for (std::size_t pos = lists.size(); pos-- > 0;) {
        if (++idx[pos] < lists[pos].size()) {
          exhausted = false;
          break;
        }
        idx[pos] = 0;
      }
      if (exhausted) break;
    }
  }
  return std::nullopt;
}

std::string witness_json(const TriDecomposition& d) {
  nlohmann::json j{
      {"n", d.n},
      {"kind", "tri"},
      {"components", {{"practical", d.practical_part}, {"tri_index", d.tri_index}}},
      {"proof", {{"x", d.x}, {"m", d.m}, {"s", d.cofactor}}}};
  return j.dump();
}

std::string witness_json(const Theorem2Witness& w) {
  nlohmann::json residues = nlohmann::json::array();
  for (const PairCongruence& pc : w.residues)
    residues.push_back(
        {{"modulus", pc.modulus}, {"x", pc.x_res}, {"y", pc.y_res}});
  nlohmann::json j{{"n", w.dec.n},
                   {"kind", "poly"},
                   {"components",
                    {{"practical", w.dec.practical_part},
                     {"x", w.dec.x},
                     {"y", w.dec.y},
                     {"s", w.dec.s_gon}}},
                   {"proof",
                    {{"r", w.r}, {"k", w.k}, {"n_k", w.n_k}, {"residues", residues}}}};
  return j.dump();
}

}  // namespace polysum
