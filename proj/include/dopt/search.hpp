#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dopt/sds.hpp"

// Two-stage compression search for D-optimal SDS pairs: enumerate compressed
// candidate pairs of length d = v/m, filter them by their power spectral
// density, then lift survivors back to full ±1 pairs column by column.
// A direct exhaustive search doubles as an independent oracle at tiny v.

namespace dopt {

// Compressed candidate: integer sequences of length d with entries in
// {m, m-2, ..., -m}, claimed to be the m-compressions of a D-optimal pair.
struct CompressedPair {
  IntSeq a, b;
  int m = 0;
  ParameterSet target;

  int d() const { return static_cast<int>(a.size()); }
  friend bool operator==(const CompressedPair&, const CompressedPair&) = default;
  friend auto operator<=>(const CompressedPair&, const CompressedPair&) = default;
};

struct SearchConfig {
  ParameterSet params;
  int m = 0;  // compression factor; v = m * d
  double psd_tolerance = kSpectralTol;
  bool normalize_candidates = true;  // emit canonical rotations only
  int workers = 1;
  std::uint64_t max_candidates = 0;          // 0 = unlimited
  std::uint64_t max_solutions = 0;           // 0 = unlimited
  std::optional<double> budget_seconds;      // unset = unlimited; 0 stops at once

  int d() const { return params.v() / m; }
  // Full preflight for the driver: feasible D-optimal parameters and a
  // nontrivial factorization v = m*d with m, d > 1.  Throws std::domain_error.
  void validate() const;
};

struct SearchReport {
  std::vector<Sds> solutions;      // canonical forms, in discovery order
  std::uint64_t candidates = 0;    // stage-1 pairs emitted
  std::uint64_t psd_rejected = 0;  // complete sequences cut by the PSD bound
  std::uint64_t lift_nodes = 0;    // stage-2 backtracking column assignments
  std::uint64_t duplicates = 0;    // lifted solutions equal to a known class
  bool exhausted = false;          // ran the whole enumeration to the end
  double wall_seconds = 0;         // measured; excluded from to_string()

  // Stable text form (no timing), byte-identical across reruns of the same
  // single-worker configuration.
  std::string to_string() const;
};

// The stage-1 membership predicate: entry set, block sums, the PAF-sum
// targets and the PSD filter.  stage1_enumerate emits exactly the pairs
// accepted here (up to rotation normalization), so corpus compressions can
// be tested for membership without running the full enumeration.
bool stage1_accepts(const CompressedPair& c, double psd_tol = kSpectralTol);

// PSD filter alone: psd(a)[s] and psd(b)[s] <= 2v - 2 + tol for
// s = 1..d-1.  Sound: any liftable pair passes, by the compression theorem
// plus nonnegativity of the partner spectrum.
bool psd_filter(const CompressedPair& c, double psd_tol = kSpectralTol);

// Depth-first enumeration of all compressed candidate pairs for cfg
// (a first, then b against exact PAF targets, with running partial-sum
// pruning).  Calls emit for each candidate; emit returning false stops the
// walk.  Returns true when the enumeration ran to completion.  Degenerate
// factorizations (m = 1 or d = 1) are permitted here for testing; the
// driver rejects them via SearchConfig::validate.
bool stage1_enumerate(const SearchConfig& cfg,
                      const std::function<bool(const CompressedPair&)>& emit);

// Materialized convenience wrapper.
std::vector<CompressedPair> stage1_candidates(const SearchConfig& cfg);

// Lifts one compressed candidate to every full pair (X, Y) whose binary
// sequences compress to it and which satisfy the D-optimal PAF criterion.
// Invariant-violating candidates are rejected at entry (empty result).
// emit returning false stops the lift.  Returns true when run to the end.
bool stage2_lift(const CompressedPair& c, const SearchConfig& cfg,
                 const std::function<bool(const Sds&)>& emit);
std::vector<Sds> stage2_lift(const CompressedPair& c, const SearchConfig& cfg);

// Direct search over blocks fixed to contain 0 (one representative per
// translation class); emits canonical forms, deduplicated and sorted.
// Refuses v above the guard.
std::vector<Sds> exhaustive_search(const ParameterSet& p, int v_guard = 25);

// stage1 -> psd filter -> stage2, deduplicating by canonical form and
// honoring limits.  Deterministic for workers == 1; more workers may
// reorder discoveries but never change the solution set.
SearchReport search_driver(const SearchConfig& cfg);

// Compresses both blocks of a two-block SDS (helper for oracles and tests).
CompressedPair compress_pair(const Sds& s, int d);

// Lexicographically smallest among the d simultaneous rotations of (a, b).
CompressedPair canonical_rotation(const CompressedPair& c);

}  // namespace dopt
