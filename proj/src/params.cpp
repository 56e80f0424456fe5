#include "dopt/params.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dopt {

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace

ParameterSet::ParameterSet(int v, std::vector<int> block_sizes, int lambda)
    : v_(v), sizes_(std::move(block_sizes)), lambda_(lambda) {
  if (v_ < 1) throw std::domain_error("order must be positive");
  if (sizes_.empty())
    throw std::domain_error("parameter set needs at least one block size");
  for (int k : sizes_)
    if (k < 0 || k > v_)
      throw std::domain_error("block size " + std::to_string(k) +
                              " out of range [0," + std::to_string(v_) + "]");
  if (lambda_ < 0) throw std::domain_error("lambda must be nonnegative");
  if (!counts_consistent())
    throw std::domain_error("difference counts inconsistent: lambda*(v-1) != "
                            "sum k_i*(k_i-1) for " + to_string());
}

ParameterSet ParameterSet::doptimal(int v, int r, int s, int lambda) {
  if (v % 2 == 0) throw std::domain_error("order must be odd");
  if (r < s)
    throw std::domain_error("block sizes must satisfy r >= s, got r = " +
                            std::to_string(r) + ", s = " + std::to_string(s));
  ParameterSet p(v, {r, s}, lambda);
  if (!p.is_doptimal())
    throw std::domain_error("not a normalized D-optimal parameter set: " +
                            p.to_string());
  return p;
}

int ParameterSet::n() const {
  long long sum = std::accumulate(sizes_.begin(), sizes_.end(), 0LL);
  return static_cast<int>(sum - lambda_);
}

int ParameterSet::r() const {
  if (t() != 2) throw std::domain_error("r/s defined only for two-block sets");
  return std::max(sizes_[0], sizes_[1]);
}

int ParameterSet::s() const {
  if (t() != 2) throw std::domain_error("r/s defined only for two-block sets");
  return std::min(sizes_[0], sizes_[1]);
}

bool ParameterSet::counts_consistent() const {
  long long lhs = static_cast<long long>(lambda_) * (v_ - 1);
  long long rhs = 0;
  for (int k : sizes_) rhs += static_cast<long long>(k) * (k - 1);
  return lhs == rhs;
}

bool ParameterSet::is_doptimal() const {
  if (t() != 2 || v_ % 2 == 0) return false;
  if (v_ != 2 * n() + 1) return false;
  // normalized: v/2 >= r >= s >= 0
  return 2 * r() < v_ && r() >= s() && s() >= 0;
}

std::string ParameterSet::to_string() const {
  std::ostringstream os;
  os << '(' << v_ << ';';
  for (size_t i = 0; i < sizes_.size(); ++i) {
    if (i) os << ',';
    os << sizes_[i];
  }
  os << ';' << lambda_ << ')';
  return os.str();
}

ParameterSet pair_to_params(PairXY p) {
  if (p.y < 0 || p.x < p.y)
    throw std::domain_error("pair requires x >= y >= 0");
  long long x = p.x, y = p.y;
  long long v = 1 + x * (x + 1) + y * (y + 1);
  long long r = choose2(x + 1) + choose2(y);
  long long s = choose2(x) + choose2(y + 1);
  long long lambda = choose2(x) + choose2(y);
  return ParameterSet::doptimal(static_cast<int>(v), static_cast<int>(r),
                                static_cast<int>(s), static_cast<int>(lambda));
}

std::optional<PairXY> try_params_to_pair(const ParameterSet& p) {
  if (!p.is_doptimal()) return std::nullopt;
  // v determines x+y via v = 1 + x(x+1) + y(y+1); r - s = x - y pins the rest.
  int diff = p.r() - p.s();
  for (int x = diff; ; ++x) {
    int y = x - diff;
    long long v = 1 + static_cast<long long>(x) * (x + 1) +
                  static_cast<long long>(y) * (y + 1);
    if (v > p.v()) return std::nullopt;
    if (v == p.v()) {
      PairXY cand{x, y};
      ParameterSet back = pair_to_params(cand);
      if (back == p) return cand;
      return std::nullopt;
    }
  }
}

PairXY params_to_pair(const ParameterSet& p) {
  auto res = try_params_to_pair(p);
  if (!res)
    throw std::domain_error("no (x,y) pair realizes " + p.to_string());
  return *res;
}

std::vector<ParameterSet> enumerate_params(int v_max) {
  std::vector<ParameterSet> out;
  for (int x = 0; 1 + x * (x + 1) <= v_max; ++x)
    for (int y = 0; y <= x; ++y) {
      long long v = 1 + static_cast<long long>(x) * (x + 1) +
                    static_cast<long long>(y) * (y + 1);
      if (v > v_max) break;
      if (v < 3) continue;
      out.push_back(pair_to_params({x, y}));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<TwoSquares> feasible_order(int v) {
  if (v < 1 || v % 2 == 0)
    throw std::domain_error("order must be odd and positive");
  long long target = 2LL * v - 1;
  for (long long b = 0; 2 * b * b <= target; ++b) {
    long long rem = target - b * b;
    long long a = static_cast<long long>(std::sqrt(static_cast<double>(rem)));
    while (a * a < rem) ++a;
    while (a * a > rem) --a;
    if (a * a == rem)
      return TwoSquares{static_cast<int>(a), static_cast<int>(b)};
  }
  return std::nullopt;
}

bool is_feasible_order(int v) { return feasible_order(v).has_value(); }

std::vector<int> infeasible_orders(int v_max) {
  std::vector<int> out;
  for (int v = 3; v <= v_max; v += 2)
    if (!is_feasible_order(v)) out.push_back(v);
  return out;
}

}  // namespace dopt
