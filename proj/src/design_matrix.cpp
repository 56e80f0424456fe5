#include "dopt/design_matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace dopt {

namespace {

std::vector<int> row_from_block(const Block& x, int v) {
  auto terms = BinarySequence::from_subset(x, v).terms();
  return {terms.begin(), terms.end()};
}

void check_signs(const std::vector<int>& e) {
  for (int x : e)
    if (x != 1 && x != -1)
      throw std::domain_error("matrix entry not +1/-1: " + std::to_string(x));
}

}  // namespace

Circulant::Circulant(const Block& x, int v) : row_(row_from_block(x, v)) {}

Circulant::Circulant(std::vector<int> first_row) : row_(std::move(first_row)) {
  if (row_.empty()) throw std::domain_error("circulant order must be positive");
  check_signs(row_);
}

int Circulant::at(int i, int j) const {
  const int v = order();
  int c = j - i;
  if (c < 0) c += v;
  return row_[static_cast<size_t>(c)];
}

SignMatrix::SignMatrix(int order, std::vector<int> entries)
    : n_(order), e_(std::move(entries)) {
  if (n_ < 1) throw std::domain_error("matrix order must be positive");
  if (e_.size() != static_cast<size_t>(n_) * n_)
    throw std::domain_error("entry count " + std::to_string(e_.size()) +
                            " does not fill an order-" + std::to_string(n_) +
                            " matrix");
  check_signs(e_);
}

DesignMatrix build_design(const Sds& s) {
  if (s.blocks.size() != 2)
    throw std::domain_error("two-circulant design wants exactly two blocks");
  const int v = s.v();
  Circulant cx(s.x(), v), cy(s.y(), v);
  std::vector<int> e(static_cast<size_t>(2 * v) * (2 * v));
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      e[static_cast<size_t>(i) * 2 * v + j] = cx.at(i, j);
      e[static_cast<size_t>(i) * 2 * v + v + j] = cy.at(i, j);
      e[static_cast<size_t>(v + i) * 2 * v + j] = -cy.at(j, i);
      e[static_cast<size_t>(v + i) * 2 * v + v + j] = cx.at(j, i);
    }
  return DesignMatrix{SignMatrix(2 * v, std::move(e)), s};
}

Verdict verify_gram(const SignMatrix& m) {
  const int order = m.order();
  if (order % 2 != 0)
    return Verdict::fail("gram", "order " + std::to_string(order) +
                                     " is odd, want 2v");
  const int v = order / 2;
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      long long dot = 0;
      for (int k = 0; k < order; ++k)
        dot += static_cast<long long>(m.at(i, k)) * m.at(j, k);
      long long want;
      if ((i < v) != (j < v))
        want = 0;
      else
        want = (i == j) ? 2LL * v : 2;
      if (dot != want)
        return Verdict::fail(
            "gram", "M M^T entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") = " + std::to_string(dot) +
                        ", want " + std::to_string(want));
    }
  return Verdict::pass("gram");
}

mpz_class bound_value(int v) {
  if (v < 1 || v % 2 == 0)
    throw std::domain_error("bound is for odd v, got " + std::to_string(v));
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(v));
  out *= 2 * v - 1;
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(v - 1),
                static_cast<unsigned long>(v - 1));
  out *= pw;
  return out;
}

mpz_class exact_determinant(const SignMatrix& m, int max_order) {
  const int n = m.order();
  if (n > max_order)
    throw std::domain_error(
        "order " + std::to_string(n) + " exceeds the exact-determinant cap " +
        std::to_string(max_order) + "; use the Gram certificate instead");
  std::vector<std::vector<mpz_class>> a(static_cast<size_t>(n),
                                        std::vector<mpz_class>(
                                            static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);

  // Bareiss fraction-free elimination: every division below is exact.
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                          a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                      a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                          a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(t);
      }
      a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
    }
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  mpz_class det = a[static_cast<size_t>(n) - 1][static_cast<size_t>(n) - 1];
  return sign < 0 ? mpz_class(-det) : det;
}

}  // namespace dopt
