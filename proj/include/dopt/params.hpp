#pragma once

#include <optional>
#include <string>
#include <vector>

// Feasible-parameter theory for D-optimal supplementary difference sets:
// the (x, y) <-> (v; r, s; lambda) bijection, enumeration by order, and
// order feasibility via sums of two squares.

namespace dopt {

// Ordered pair x >= y >= 0 indexing the normalized feasible D-optimal
// parameter sets.
struct PairXY {
  int x = 0;
  int y = 0;
  friend bool operator==(const PairXY&, const PairXY&) = default;
};

// SDS parameters (v; k_1,...,k_t; lambda).  The D-optimal flavor has t = 2
// blocks of sizes r >= s with v = 2n + 1, n = r + s - lambda.  Construction
// checks only basic ranges; the counting identity is a separate query so
// that deliberately inconsistent claims remain representable for verifiers.
class ParameterSet {
 public:
  ParameterSet(int v, std::vector<int> block_sizes, int lambda);
  static ParameterSet doptimal(int v, int r, int s, int lambda);

  int v() const { return v_; }
  int lambda() const { return lambda_; }
  int t() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& block_sizes() const { return sizes_; }
  int n() const;  // sum k_i - lambda

  // Two-block accessors; throw std::domain_error unless t == 2.
  int r() const;
  int s() const;

  // lambda * (v - 1) == sum k_i * (k_i - 1)
  bool counts_consistent() const;
  // t == 2, counts consistent, v == 2n + 1 and v/2 >= r >= s >= 0
  bool is_doptimal() const;

  std::string to_string() const;  // "(v;r,s;lambda)" for t == 2

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
  friend auto operator<=>(const ParameterSet&, const ParameterSet&) = default;

 private:
  int v_;
  std::vector<int> sizes_;
  int lambda_;
};

// v = 1 + x(x+1) + y(y+1), r = C(x+1,2) + C(y,2), s = C(x,2) + C(y+1,2),
// lambda = C(x,2) + C(y,2).  Requires x >= y >= 0.
ParameterSet pair_to_params(PairXY p);

// Inverse of pair_to_params by bounded enumeration; nullopt when q is not in
// the image of the map.
std::optional<PairXY> try_params_to_pair(const ParameterSet& q);

// Throwing flavor of the inverse (std::domain_error when infeasible).
PairXY params_to_pair(const ParameterSet& q);

// All normalized D-optimal parameter sets with 3 <= v <= v_max, sorted by
// (v, r).  A given order can contribute several sets.
std::vector<ParameterSet> enumerate_params(int v_max);

// Decomposition 2v - 1 = a^2 + b^2 with a >= b >= 0.
struct TwoSquares {
  int a = 0;
  int b = 0;
  friend bool operator==(const TwoSquares&, const TwoSquares&) = default;
};

// Whether 2v - 1 is a sum of two squares (the necessary existence condition
// for a D-optimal design of order 2v); v must be odd.  Returns a
// decomposition when one exists.
std::optional<TwoSquares> feasible_order(int v);
bool is_feasible_order(int v);

// Odd v in [3, v_max] failing the sum-of-two-squares condition.
std::vector<int> infeasible_orders(int v_max);

}  // namespace dopt
