#include "dopt/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dopt {

BinarySequence::BinarySequence(IntSeq terms) : terms_(std::move(terms)) {
  if (terms_.empty())
    throw std::domain_error("binary sequence must have positive length");
  for (long long t : terms_)
    if (t != 1 && t != -1)
      throw std::domain_error("binary sequence entry not +1/-1: " +
                              std::to_string(t));
}

BinarySequence BinarySequence::from_subset(const std::vector<int>& x, int v) {
  if (v < 1) throw std::domain_error("length must be positive");
  IntSeq terms(static_cast<size_t>(v), 1);
  for (int e : x) {
    if (e < 0 || e >= v)
      throw std::domain_error("subset element " + std::to_string(e) +
                              " out of range [0," + std::to_string(v) + ")");
    terms[static_cast<size_t>(e)] = -1;
  }
  return BinarySequence(std::move(terms));
}

std::vector<int> BinarySequence::to_subset() const {
  std::vector<int> x;
  for (int i = 0; i < length(); ++i)
    if (terms_[static_cast<size_t>(i)] == -1) x.push_back(i);
  return x;
}

long long paf(const IntSeq& a, int shift) {
  const int v = static_cast<int>(a.size());
  if (shift < 0 || shift >= v)
    throw std::domain_error("paf shift " + std::to_string(shift) +
                            " out of range [0," + std::to_string(v) + ")");
  long long sum = 0;
  for (int i = 0; i < v; ++i) {
    int j = i + shift;
    if (j >= v) j -= v;
    sum += a[static_cast<size_t>(i)] * a[static_cast<size_t>(j)];
  }
  return sum;
}

IntSeq paf_all(const IntSeq& a) {
  IntSeq out(a.size());
  for (int s = 0; s < static_cast<int>(a.size()); ++s)
    out[static_cast<size_t>(s)] = paf(a, s);
  return out;
}

std::vector<std::complex<double>> dft(const IntSeq& a) {
  const int v = static_cast<int>(a.size());
  std::vector<std::complex<double>> out(a.size());
  const double w = 2.0 * std::numbers::pi / v;
  for (int k = 0; k < v; ++k) {
    std::complex<double> sum = 0.0;
    for (int j = 0; j < v; ++j) {
      // omega^(j*k) with the exponent reduced mod v keeps the angle small
      long long e = (static_cast<long long>(j) * k) % v;
      sum += static_cast<double>(a[static_cast<size_t>(j)]) *
             std::polar(1.0, w * static_cast<double>(e));
    }
    out[static_cast<size_t>(k)] = sum;
  }
  return out;
}

std::vector<double> psd(const IntSeq& a) {
  std::vector<double> out(a.size());
  auto f = dft(a);
  for (size_t k = 0; k < a.size(); ++k) out[k] = std::norm(f[k]);
  return out;
}

IntSeq compress(const IntSeq& a, int d) {
  const int v = static_cast<int>(a.size());
  if (d < 1 || v % d != 0)
    throw std::domain_error("compression length " + std::to_string(d) +
                            " does not divide " + std::to_string(v));
  const int m = v / d;
  IntSeq out(static_cast<size_t>(d), 0);
  for (int j = 0; j < d; ++j)
    for (int l = 0; l < m; ++l)
      out[static_cast<size_t>(j)] += a[static_cast<size_t>(j + l * d)];
  return out;
}

std::vector<double> psd_at_multiples(const IntSeq& a, int d) {
  const int v = static_cast<int>(a.size());
  if (d < 1 || v % d != 0)
    throw std::domain_error("d = " + std::to_string(d) +
                            " does not divide " + std::to_string(v));
  const int m = v / d;
  auto full = psd(a);
  std::vector<double> out(static_cast<size_t>(d));
  for (int s = 0; s < d; ++s)
    out[static_cast<size_t>(s)] = full[static_cast<size_t>((m * s) % v)];
  return out;
}

}  // namespace dopt
