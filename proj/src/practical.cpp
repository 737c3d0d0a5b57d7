#include "polysum/practical.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "threads.hpp"

namespace polysum {

PracticalityReport is_practical(u64 n) {
  PracticalityReport rep;
  rep.n = n;
  Factorization f = factorize(n);  // validates range
  u128 sig = 1;
  rep.practical = true;
  for (auto [p, e] : f.factors) {
    if (u128{p} > sig + 1) {
      rep.practical = false;
      rep.failing_prime = p;
      break;
    }
    u128 term = 1;
    for (u32 i = 0; i < e; ++i) term = term * p + 1;
    sig *= term;
    rep.sigma_prefixes.push_back(
        sig > std::numeric_limits<u64>::max()
            ? std::numeric_limits<u64>::max()
            : static_cast<u64>(sig));
  }
  return rep;
}

bool is_practical_by_definition(u64 n) {
  if (n < 1) throw std::invalid_argument("is_practical_by_definition: n must be >= 1");
  if (n > kDefinitionOracleBound)
    throw std::invalid_argument("is_practical_by_definition: n above oracle bound");
  Bitmap reachable(n + 1);
  reachable.set(0);
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    reachable.or_shifted(reachable, d);
    u64 q = n / d;
    if (q != d) reachable.or_shifted(reachable, q);
  }
  return reachable.count() == n + 1;
}

namespace {

struct DfsNode {
  u64 value;
  u64 sigma;
  std::size_t next_prime_idx;
};

// Subtree walk marking every admissible value; used by the parallel phase.
void dfs_mark(const DfsNode& node, const std::vector<u64>& primes, u64 bound,
              Bitmap& bits, bool atomic) {
  for (std::size_t i = node.next_prime_idx; i < primes.size(); ++i) {
    u64 p = primes[i];
    if (p > node.sigma + 1) break;
    if (node.value > bound / p) break;
    u64 v = node.value * p;
    u64 term = 1 + p;
    while (true) {
      if (atomic)
        bits.set_atomic(v);
      else
        bits.set(v);
      dfs_mark({v, node.sigma * term, i + 1}, primes, bound, bits, atomic);
      if (v > bound / p) break;
      v *= p;
      term = term * p + 1;
    }
  }
}

// Marks nodes down to the split depth and collects the frontier.
void dfs_collect(const DfsNode& node, const std::vector<u64>& primes, u64 bound,
                 Bitmap& bits, int depth, int split_depth,
                 std::vector<DfsNode>& frontier) {
  for (std::size_t i = node.next_prime_idx; i < primes.size(); ++i) {
    u64 p = primes[i];
    if (p > node.sigma + 1) break;
    if (node.value > bound / p) break;
    u64 v = node.value * p;
    u64 term = 1 + p;
    while (true) {
      bits.set(v);
      DfsNode child{v, node.sigma * term, i + 1};
      if (depth + 1 >= split_depth)
        frontier.push_back(child);
      else
        dfs_collect(child, primes, bound, bits, depth + 1, split_depth, frontier);
      if (v > bound / p) break;
      v *= p;
      term = term * p + 1;
    }
  }
}

}  // namespace

PracticalSieve generate_practicals(u64 bound) {
  if (bound < 1) throw std::invalid_argument("generate_practicals: bound must be >= 1");
  if (bound > kSieveBoundCap)
    throw std::invalid_argument("generate_practicals: bound above sieve cap");
  PracticalSieve sieve;
  sieve.bound = bound;
  sieve.bits = Bitmap(bound + 1);
  sieve.bits.set(1);
  // A usable prime p satisfies p <= sigma(v) + 1 and v*p <= bound; with
  // sigma(v) < 6v below 10^9 this forces p(p-1) <= 6*bound.
  std::vector<u64> primes = sieve_primes(isqrt(u128{6} * bound) + 2);
  DfsNode root{1, 1, 0};
  std::vector<DfsNode> frontier;
  dfs_collect(root, primes, bound, sieve.bits, 0, 2, frontier);
  bool parallel = worker_count() > 1 && frontier.size() > 1;
  run_tasks(frontier.size(), [&](std::size_t i) {
    dfs_mark(frontier[i], primes, bound, sieve.bits, parallel);
  });
  return sieve;
}

namespace {

constexpr char kSieveMagic[8] = {'P', 'S', 'I', 'E', 'V', 'E', '0', '1'};

}  // namespace

void PracticalSieve::save(const std::string& path) const {
  u64 nbytes = (bound + 1 + 7) / 8;
  std::vector<unsigned char> buf(16 + nbytes);
  std::copy(kSieveMagic, kSieveMagic + 8, reinterpret_cast<char*>(buf.data()));
  for (int i = 0; i < 8; ++i)
    buf[8 + i] = static_cast<unsigned char>(bound >> (8 * i));
  for (u64 i = 0; i < nbytes; ++i)
    buf[16 + i] = static_cast<unsigned char>(bits.words()[i / 8] >> (8 * (i % 8)));
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open sieve file for writing: " + path);
  bool ok = std::fwrite(buf.data(), 1, buf.size(), f) == buf.size();
  std::fclose(f);
  if (!ok) throw std::runtime_error("short write to sieve file: " + path);
}

PracticalSieve PracticalSieve::load(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open sieve file: " + path);
  unsigned char header[16];
  if (std::fread(header, 1, 16, f) != 16 ||
      !std::equal(header, header + 8,
                  reinterpret_cast<const unsigned char*>(kSieveMagic))) {
    std::fclose(f);
    throw std::runtime_error("bad sieve file header: " + path);
  }
  u64 bound = 0;
  for (int i = 0; i < 8; ++i) bound |= u64{header[8 + i]} << (8 * i);
  if (bound > kSieveBoundCap) {
    std::fclose(f);
    throw std::runtime_error("sieve file bound above cap: " + path);
  }
  u64 nbytes = (bound + 1 + 7) / 8;
  std::vector<unsigned char> buf(nbytes);
  std::size_t got = std::fread(buf.data(), 1, nbytes, f);
  std::fclose(f);
  if (got != nbytes) throw std::runtime_error("truncated sieve file: " + path);
  PracticalSieve sieve;
  sieve.bound = bound;
  sieve.bits = Bitmap(bound + 1);
  for (u64 i = 0; i < nbytes; ++i)
    sieve.bits.words()[i / 8] |= u64{buf[i]} << (8 * (i % 8));
  sieve.bits.clear_tail();
  return sieve;
}

}  // namespace polysum
