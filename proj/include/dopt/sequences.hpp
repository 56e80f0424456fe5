#pragma once

#include <complex>
#include <vector>

// Cyclic sequence machinery: subset/sequence duality, periodic
// autocorrelation, discrete Fourier transform, power spectral density and
// m-compression.  All index arithmetic is modulo the sequence length.

namespace dopt {

// Integer sequence indexed cyclically.  Entries stay small (at most the
// compression factor in absolute value), sums fit comfortably in 64 bits.
using IntSeq = std::vector<long long>;

// Absolute tolerance for all floating-point spectral comparisons.  Lengths
// stay below 10^4, which keeps accumulated DFT error orders of magnitude
// smaller.
inline constexpr double kSpectralTol = 1e-6;

// A ±1 sequence of length v, dual to the subset {i in Z_v : a_i = -1}.
class BinarySequence {
 public:
  // Validates that every entry is +1 or -1 and the length is positive.
  explicit BinarySequence(IntSeq terms);

  // Entry i is -1 iff i is in x; elements must lie in [0, v).
  static BinarySequence from_subset(const std::vector<int>& x, int v);

  // Inverse of from_subset: the positions holding -1, sorted ascending.
  std::vector<int> to_subset() const;

  int length() const { return static_cast<int>(terms_.size()); }
  const IntSeq& terms() const { return terms_; }
  long long operator[](int i) const { return terms_[i]; }

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

 private:
  IntSeq terms_;
};

// Periodic autocorrelation sum_i a_i * a_{(i+shift) mod v}, exact.
// shift must lie in [0, length).
long long paf(const IntSeq& a, int shift);

// All shifts 0..v-1 at once.
IntSeq paf_all(const IntSeq& a);

// dft(a)[k] = sum_j a_j * omega^(j*k), omega = exp(2*pi*i/v).
// Direct O(v^2) summation; lengths here never warrant a fast transform.
std::vector<std::complex<double>> dft(const IntSeq& a);

// psd(a)[k] = |dft(a)[k]|^2.
std::vector<double> psd(const IntSeq& a);

// m-compression: entry j is a_j + a_{j+d} + ... + a_{j+(m-1)d} where
// m = length/d.  d must divide the length; d = length and d = 1 give the
// identity and the total-sum compressions.
IntSeq compress(const IntSeq& a, int d);

// [psd(a)[m*s] for s = 0..d-1]; by the compression theorem this equals
// psd(compress(a, d)) up to roundoff.
std::vector<double> psd_at_multiples(const IntSeq& a, int d);

}  // namespace dopt
