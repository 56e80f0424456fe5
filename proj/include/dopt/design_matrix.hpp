#pragma once

#include <gmpxx.h>

#include <vector>

#include "dopt/sds.hpp"
#include "dopt/verdict.hpp"

// Circulant and two-circulant ±1 matrices, the Gram identity certificate,
// the Ehlich-Wojtas determinant bound and exact determinants.

namespace dopt {

// Cyclic matrix of order v: row i is the first row shifted right i places.
class Circulant {
 public:
  // First row = the binary sequence associated to x (entry -1 on x).
  Circulant(const Block& x, int v);
  explicit Circulant(std::vector<int> first_row);

  int order() const { return static_cast<int>(row_.size()); }
  int at(int i, int j) const;
  const std::vector<int>& first_row() const { return row_; }

 private:
  std::vector<int> row_;
};

// Dense square ±1 matrix, row-major.
class SignMatrix {
 public:
  SignMatrix(int order, std::vector<int> entries);  // validates ±1 entries

  int order() const { return n_; }
  int at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  int n_;
  std::vector<int> e_;
};

// The 2v x 2v block matrix [[C_X, C_Y], [-C_Y^T, C_X^T]] and the pair it
// was built from.
struct DesignMatrix {
  SignMatrix mat;
  Sds source;
  int v() const { return mat.order() / 2; }
};

// Builds the two-circulant design; requires exactly two blocks.
DesignMatrix build_design(const Sds& s);

// Checks M M^T = diag((2v-2)I + 2J, (2v-2)I + 2J) with zero off-diagonal
// blocks, in exact integers.  This is the working D-optimality certificate
// at every order.
Verdict verify_gram(const SignMatrix& m);
inline Verdict verify_gram(const DesignMatrix& d) { return verify_gram(d.mat); }

// Ehlich-Wojtas bound 2^v (2v-1) (v-1)^(v-1) for ±1 matrices of order 2v,
// v odd; a design is D-optimal iff |det| attains it.
mpz_class bound_value(int v);

// Default order cap for exact_determinant; beyond it the Gram certificate
// is the intended tool.
inline constexpr int kDetOrderGuard = 64;

// Exact determinant by fraction-free (Bareiss) elimination over arbitrary-
// precision integers.  Refuses orders above max_order with a
// std::domain_error pointing at verify_gram.
mpz_class exact_determinant(const SignMatrix& m, int max_order = kDetOrderGuard);
inline mpz_class exact_determinant(const DesignMatrix& d,
                                   int max_order = kDetOrderGuard) {
  return exact_determinant(d.mat, max_order);
}

}  // namespace dopt
