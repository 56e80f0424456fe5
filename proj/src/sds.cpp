#include "dopt/sds.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace dopt {

std::vector<long long> difference_table(const Sds& s) {
  const int v = s.v();
  std::vector<long long> counts(static_cast<size_t>(v), 0);
  for (const Block& blk : s.blocks)
    for (int a : blk)
      for (int b : blk) {
        if (a == b) continue;
        if (a < 0 || a >= v || b < 0 || b >= v)
          throw std::domain_error("block element out of range [0," +
                                  std::to_string(v) + ")");
        int c = a - b;
        if (c < 0) c += v;
        ++counts[static_cast<size_t>(c)];
      }
  return counts;
}

Verdict verify_sds(const Sds& s) {
  const int v = s.v();
  if (static_cast<int>(s.blocks.size()) != s.params.t())
    return Verdict::fail("sds", "expected " + std::to_string(s.params.t()) +
                                    " blocks, got " +
                                    std::to_string(s.blocks.size()));
  for (size_t i = 0; i < s.blocks.size(); ++i) {
    const Block& blk = s.blocks[i];
    if (static_cast<int>(blk.size()) != s.params.block_sizes()[i])
      return Verdict::fail(
          "sds", "block " + std::to_string(i) + " has size " +
                     std::to_string(blk.size()) + ", parameters claim " +
                     std::to_string(s.params.block_sizes()[i]));
    std::set<int> seen;
    for (int e : blk) {
      if (e < 0 || e >= v)
        return Verdict::fail("sds", "block " + std::to_string(i) +
                                        " element " + std::to_string(e) +
                                        " out of range [0," +
                                        std::to_string(v) + ")");
      if (!seen.insert(e).second)
        return Verdict::fail("sds", "block " + std::to_string(i) +
                                        " repeats element " +
                                        std::to_string(e));
    }
  }
  if (!s.params.counts_consistent())
    return Verdict::fail("sds", "lambda*(v-1) != sum k_i*(k_i-1) for " +
                                    s.params.to_string());
  auto counts = difference_table(s);
  for (int c = 1; c < v; ++c)
    if (counts[static_cast<size_t>(c)] != s.params.lambda())
      return Verdict::fail(
          "sds", "difference " + std::to_string(c) + " occurs " +
                     std::to_string(counts[static_cast<size_t>(c)]) +
                     " times, want " + std::to_string(s.params.lambda()));
  return Verdict::pass("sds");
}

Verdict verify_doptimal(const Sds& s) {
  const int v = s.v();
  if (s.params.t() != 2)
    return Verdict::fail("doptimal", "needs exactly two blocks");
  if (v != 2 * s.params.n() + 1)
    return Verdict::fail("doptimal", "v = " + std::to_string(v) +
                                         " != 2n+1 with n = " +
                                         std::to_string(s.params.n()));
  auto a = BinarySequence::from_subset(s.x(), v).terms();
  auto b = BinarySequence::from_subset(s.y(), v).terms();
  auto pa = paf_all(a);
  auto pb = paf_all(b);
  for (int c = 1; c < v; ++c) {
    long long sum = pa[static_cast<size_t>(c)] + pb[static_cast<size_t>(c)];
    if (sum != 2)
      return Verdict::fail("doptimal",
                           "paf_A(" + std::to_string(c) + ") + paf_B(" +
                               std::to_string(c) + ") = " +
                               std::to_string(sum) + ", want 2");
  }
  return Verdict::pass("doptimal");
}

Verdict verify_matnorm(const Sds& s) {
  const int v = s.v();
  const int t = s.params.t();
  const long long diag = static_cast<long long>(t) * v;
  const long long off = diag - 4LL * s.params.n();
  // M = sum_i C_i C_i^T accumulated by straight triple-loop products.
  std::vector<std::vector<long long>> m(
      static_cast<size_t>(v), std::vector<long long>(static_cast<size_t>(v)));
  for (const Block& blk : s.blocks) {
    auto a = BinarySequence::from_subset(blk, v).terms();
    for (int i = 0; i < v; ++i)
      for (int j = 0; j < v; ++j) {
        long long dot = 0;
        for (int k = 0; k < v; ++k) {
          int ci = k - i, cj = k - j;
          if (ci < 0) ci += v;
          if (cj < 0) cj += v;
          dot += a[static_cast<size_t>(ci)] * a[static_cast<size_t>(cj)];
        }
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] += dot;
      }
  }
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      long long want = (i == j) ? diag : off;
      long long got = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (got != want)
        return Verdict::fail(
            "matnorm", "entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ") = " + std::to_string(got) +
                           ", want " + std::to_string(want));
    }
  return Verdict::pass("matnorm");
}

namespace {

// Lexicographically least sorted translate of a subset of Z_v.  Any
// candidate translate must send some element to 0, so only |blk| shifts
// need inspection.
Block min_translate(const Block& blk, int v) {
  if (blk.empty()) return {};
  Block best;
  for (int pivot : blk) {
    Block cand;
    cand.reserve(blk.size());
    for (int e : blk) {
      int x = e - pivot;
      if (x < 0) x += v;
      cand.push_back(x);
    }
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

Block multiply(const Block& blk, int u, int v) {
  Block out;
  out.reserve(blk.size());
  for (int e : blk)
    out.push_back(static_cast<int>((static_cast<long long>(u) * e) % v));
  return out;
}

}  // namespace

Sds canonical_form(const Sds& s) {
  const int v = s.v();
  const bool swappable =
      s.blocks.size() == 2 && s.blocks[0].size() == s.blocks[1].size();
  std::vector<Block> best;
  for (int u = 1; u < v; ++u) {
    if (std::gcd(u, v) != 1) continue;
    std::vector<Block> cand;
    cand.reserve(s.blocks.size());
    for (const Block& blk : s.blocks)
      cand.push_back(min_translate(multiply(blk, u, v), v));
    if (best.empty() || cand < best) best = cand;
    if (swappable) {
      std::swap(cand[0], cand[1]);
      if (cand < best) best = std::move(cand);
    }
  }
  if (v == 1) {
    // Z_1 has no units in [1, v); everything reduces to the zero block.
    best = s.blocks;
    for (Block& blk : best) std::sort(blk.begin(), blk.end());
  }
  return Sds{s.params, std::move(best)};
}

bool are_equivalent(const Sds& s1, const Sds& s2) {
  if (s1.params != s2.params)
    throw std::domain_error("equivalence compares like parameter sets only: " +
                            s1.params.to_string() + " vs " +
                            s2.params.to_string());
  return canonical_form(s1).blocks == canonical_form(s2).blocks;
}

}  // namespace dopt
