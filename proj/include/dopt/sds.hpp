#pragma once

#include <vector>

#include "dopt/params.hpp"
#include "dopt/sequences.hpp"
#include "dopt/verdict.hpp"

// Supplementary difference sets over Z_v: exact verification by difference
// counting, the D-optimal PAF criterion, the circulant norm identity, and
// equivalence via a canonical form.

namespace dopt {

// Subset of Z_v, kept sorted ascending.
using Block = std::vector<int>;

// Base blocks claimed to form an SDS for the given parameters.  The claim
// is not trusted anywhere; the verify_* functions check it.
struct Sds {
  ParameterSet params;
  std::vector<Block> blocks;

  int v() const { return params.v(); }
  // Two-block accessors (D-optimal flavor).
  const Block& x() const { return blocks.at(0); }
  const Block& y() const { return blocks.at(1); }

  friend bool operator==(const Sds&, const Sds&) = default;
  friend auto operator<=>(const Sds&, const Sds&) = default;
};

// counts[c] = number of ordered triples (a, b, i) with {a,b} in block i and
// a - b = c (mod v), for c != 0; counts[0] is left at zero.  Entries must
// lie in [0, v).
std::vector<long long> difference_table(const Sds& s);

// Full SDS check: block sizes match the claimed k_i, elements are in-range
// and distinct, the counting identity lambda(v-1) = sum k_i(k_i-1) holds,
// and every nonzero difference occurs exactly lambda times.  Works for any
// number of blocks.
Verdict verify_sds(const Sds& s);

// D-optimal criterion for two blocks: v = 2n+1 and
// paf_A(c) + paf_B(c) = 2 for every c != 0, with A, B the associated
// binary sequences.  Exact integer arithmetic throughout.
Verdict verify_doptimal(const Sds& s);

// Circulant norm identity sum_i C_i C_i^T = 4n I + (tv - 4n) J, checked by
// direct matrix multiplication in exact integers (independent of the PAF
// route used by verify_doptimal).
Verdict verify_matnorm(const Sds& s);

// Canonical representative under the equivalence group generated by
// independent block translations, a common unit multiplier of Z_v, and the
// block swap when r = s.  Idempotent and constant on orbits; equality of
// canonical forms decides equivalence (for this group).
Sds canonical_form(const Sds& s);

// canonical_form(s1) == canonical_form(s2).  Throws std::domain_error when
// the parameter sets differ.
bool are_equivalent(const Sds& s1, const Sds& s2);

}  // namespace dopt
