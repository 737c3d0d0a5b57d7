#include "polysum/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace polysum {

namespace {

constexpr u64 kFactorizeMax = u64{1} << 63;
constexpr u64 kTrialLimit = u64{1} << 21;
constexpr u64 kResidueScanLimit = 1'000'000;  // O(p) value-set scans

}  // namespace

int bit_length(u64 v) { return 64 - std::countl_zero(v); }

int bit_length(u128 v) {
  u64 hi = static_cast<u64>(v >> 64);
  return hi ? 64 + bit_length(hi) : bit_length(static_cast<u64>(v));
}

u64 isqrt(u128 n) {
  if (n == 0) return 0;
  u128 x = u128{1} << ((bit_length(n) + 1) / 2);  // x >= sqrt(n)
  while (true) {
    u128 y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  return static_cast<u64>(x);
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u128 checked_mul(u128 a, u128 b) {
  if (a != 0 && b > std::numeric_limits<u128>::max() / a)
    throw std::overflow_error("128-bit multiply overflow");
  return a * b;
}

u128 checked_add(u128 a, u128 b) {
  if (a > std::numeric_limits<u128>::max() - b)
    throw std::overflow_error("128-bit add overflow");
  return a + b;
}

u64 checked_pow_u64(u64 base, u32 exp) {
  u128 r = 1;
  for (u32 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return narrow_u64(r);
}

u64 narrow_u64(u128 v) {
  if (v > std::numeric_limits<u64>::max())
    throw std::overflow_error("value exceeds 64 bits");
  return static_cast<u64>(v);
}

std::string dec_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = std::countr_zero(d);
  d >>= r;
  // Witness set proving primality for all n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> sieve_primes(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<u64> first_primes(u32 count) {
  if (count == 0) return {};
  // p_n < n (ln n + ln ln n) for n >= 6
  double nd = std::max<u32>(count, 6);
  u64 limit = static_cast<u64>(nd * (std::log(nd) + std::log(std::log(nd)))) + 16;
  auto primes = sieve_primes(limit);
  while (primes.size() < count) {  // estimate slack; extend if ever short
    limit *= 2;
    primes = sieve_primes(limit);
  }
  primes.resize(count);
  return primes;
}

namespace {

u64 pollard_brent(u64 n) {
  // Brent's cycle-finding variant of Pollard rho, f(x) = x^2 + c.
  // Deterministic: c increases from 1 until a factor splits.
  for (u64 c = 1;; ++c) {
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    constexpr u64 kBatch = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

}  // namespace

Factorization factorize(u64 n) {
  if (n < 1 || n > kFactorizeMax)
    throw std::invalid_argument("factorize: n must be in [1, 2^63]");
  Factorization f;
  f.value = n;
  u64 rem = n;
  if (rem % 2 == 0) {
    u32 e = static_cast<u32>(std::countr_zero(rem));
    rem >>= e;
    f.factors.emplace_back(2, e);
  }
  for (u64 d = 3; d < kTrialLimit && d * d <= rem; d += 2) {
    if (rem % d) continue;
    u32 e = 0;
    while (rem % d == 0) {
      rem /= d;
      ++e;
    }
    f.factors.emplace_back(d, e);
  }
  if (rem > 1) {
    if (rem < kTrialLimit * kTrialLimit) {
      f.factors.emplace_back(rem, 1);  // no divisor below sqrt => prime
    } else {
      std::map<u64, u32> big;
      std::vector<u64> stack{rem};
      while (!stack.empty()) {
        u64 t = stack.back();
        stack.pop_back();
        if (is_prime(t)) {
          big[t] += 1;
          continue;
        }
        u64 g = pollard_brent(t);
        stack.push_back(g);
        stack.push_back(t / g);
      }
      for (auto [p, e] : big) f.factors.emplace_back(p, e);
    }
  }
  std::sort(f.factors.begin(), f.factors.end());
  return f;
}

u128 sigma_u128(const Factorization& f) {
  u128 total = 1;
  for (auto [p, e] : f.factors) {
    u128 term = 1;
    for (u32 i = 0; i < e; ++i) term = term * p + 1;  // 1 + p + ... + p^e
    total = checked_mul(total, term);
  }
  return total;
}

u64 sigma(const Factorization& f) { return narrow_u64(sigma_u128(f)); }

u64 mod_inverse(i64 a, u64 m) {
  if (m == 0) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
  if (m == 1) return 0;
  i64 r = static_cast<i64>(((a % static_cast<i64>(m)) + static_cast<i64>(m)) %
                           static_cast<i64>(m));
  i128 old_r = r, cur_r = static_cast<i64>(m);
  i128 old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    i128 q = old_r / cur_r;
    old_r -= q * cur_r;
    std::swap(old_r, cur_r);
    old_s -= q * cur_s;
    std::swap(old_s, cur_s);
  }
  if (old_r != 1) throw std::domain_error("mod_inverse: gcd(a, m) > 1");
  i128 inv = old_s % static_cast<i128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

Congruence crt_combine(const std::vector<Congruence>& cs) {
  Congruence acc{0, 1};
  for (const Congruence& c : cs) {
    if (c.modulus == 0)
      throw std::invalid_argument("crt_combine: modulus must be >= 1");
    u64 res = c.residue % c.modulus;
    if (std::gcd(acc.modulus, c.modulus) != 1)
      throw std::invalid_argument("crt_combine: moduli not pairwise coprime");
    u64 merged = narrow_u64(checked_mul(acc.modulus, c.modulus));
    // x = acc.residue + acc.modulus * t with t chosen so x = res (mod c.modulus)
    u64 diff = (res + c.modulus - acc.residue % c.modulus) % c.modulus;
    u64 t = mulmod(diff % c.modulus,
                   mod_inverse(static_cast<i64>(acc.modulus % c.modulus),
                               c.modulus),
                   c.modulus);
    acc.residue += acc.modulus * t;
    acc.modulus = merged;
  }
  return acc;
}

TwoAdicRoot two_adic_sqrt_8n1(u64 n) {
  if (n < 1) throw std::invalid_argument("two_adic_sqrt_8n1: n must be >= 1");
  u128 a = u128{8} * n + 1;
  u32 m = static_cast<u32>(bit_length(isqrt(a)) - 1);
  u64 mod = u64{1} << (m + 2);
  u64 am = static_cast<u64>(a % mod);
  // Lift x^2 = a from mod 8 upward one bit at a time; x stays odd.
  u64 x = 1;
  for (u32 j = 3; j <= m + 1; ++j) {
    u64 mask = (u64{1} << (j + 1)) - 1;
    if (((u128{x} * x) & mask) != (am & mask)) x += u64{1} << (j - 1);
  }
  // Fold the four roots {±x, ±x + 2^{m+1}} to the smallest in [1, 2^m - 1].
  u64 half = mod >> 1;
  u64 best = 0;
  for (u64 c : {x % mod, (mod - x % mod) % mod, (x + half) % mod,
                (mod - (x + half) % mod) % mod}) {
    if (c >= 1 && c <= (u64{1} << m) - 1 && (best == 0 || c < best)) best = c;
  }
  if (best == 0 || (u128{best} * best) % mod != am % mod)
    throw std::logic_error("two_adic_sqrt_8n1: lifting failed");
  return {best, m};
}

TwoSquares two_squares_mod_pk(u64 n, u64 p, u32 k) {
  if (p % 4 != 1 || !is_prime(p))
    throw std::invalid_argument("two_squares_mod_pk: p must be prime, p = 1 (mod 4)");
  if (k < 1) throw std::invalid_argument("two_squares_mod_pk: k must be >= 1");
  if (p > kResidueScanLimit)
    throw std::invalid_argument("two_squares_mod_pk: p above O(p) scan limit");
  u64 pk = checked_pow_u64(p, k);
  u64 np = n % p;
  u64 x = 0, y = 0;
  if (np == 0) {
    for (u64 a = 1; a < p; ++a) {
      if ((a * a + 1) % p == 0) {
        x = a;
        y = 1;
        break;
      }
    }
  } else {
    constexpr u64 kNone = std::numeric_limits<u64>::max();
    std::vector<u64> min_y(p, kNone);  // residue -> smallest y in [1, p-1]
    for (u64 yy = 1; yy < p; ++yy) {
      u64 r = yy * yy % p;
      if (min_y[r] == kNone) min_y[r] = yy;
    }
    bool found = false;
    for (u64 xx = 0; xx < p && !found; ++xx) {
      u64 need = (np + p - xx * xx % p) % p;
      if (min_y[need] != kNone) {
        x = xx;
        y = min_y[need];
        found = true;
      }
    }
    if (!found) throw std::logic_error("two_squares_mod_pk: no base solution");
  }
  u64 ps = p;
  for (u32 s = 1; s < k; ++s) {
    u64 ps1 = ps * p;
    u64 cur = static_cast<u64>((u128{x} * x + u128{y} * y) % ps1);
    u64 d = (n % ps1 + ps1 - cur) % ps1;
    u64 l = mulmod((d / ps) % p, mod_inverse(static_cast<i64>(y % p * 2 % p), p), p);
    y += ps * l;
    ps = ps1;
  }
  if ((u128{x} * x + u128{y} * y) % pk != n % pk || y % p == 0)
    throw std::logic_error("two_squares_mod_pk: lift verification failed");
  return {x, y};
}

}  // namespace polysum
