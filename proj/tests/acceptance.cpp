// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Time limits and tolerances are pinned here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dopt/corpus.hpp"
#include "dopt/design_matrix.hpp"
#include "dopt/params.hpp"
#include "dopt/search.hpp"
#include "dopt/sds.hpp"
#include "dopt/sequences.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(int number, const std::string& title, bool ok,
            const std::string& detail) {
  if (!ok) ++g_failures;
  std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", number,
              title.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// --- 1: every embedded solution passes all four verifiers -------------------

void criterion_corpus_verification() {
  constexpr double kLimitSeconds = 30.0;
  constexpr std::size_t kExpectedEntries = 64;
  const auto t0 = Clock::now();

  const auto& corpus = dopt::builtin_corpus();
  std::ostringstream bad;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& e = corpus[i];
    const std::pair<const char*, dopt::Verdict> checks[] = {
        {"sds", dopt::verify_sds(e.sds)},
        {"doptimal", dopt::verify_doptimal(e.sds)},
        {"matnorm", dopt::verify_matnorm(e.sds)},
        {"gram", dopt::verify_gram(dopt::build_design(e.sds))},
    };
    for (const auto& [name, v] : checks)
      if (!v.ok)
        bad << " [record " << i << ' ' << e.sds.params.to_string() << ' '
            << name << ": " << v.detail << ']';
    ++checked;
  }
  const double secs = seconds_since(t0);

  std::ostringstream d;
  d << checked << " entries x 4 verifiers in " << fmt_seconds(secs);
  bool ok = checked == kExpectedEntries && bad.str().empty() &&
            secs < kLimitSeconds;
  if (checked != kExpectedEntries)
    d << "; expected " << kExpectedEntries << " entries";
  if (!bad.str().empty()) d << "; failures:" << bad.str();
  if (secs >= kLimitSeconds) d << "; over the " << kLimitSeconds << "s limit";
  report(1, "embedded corpus verifies", ok, d.str());
}

// --- 2: the multi-solution parameter sets are pairwise nonequivalent --------

void criterion_nonequivalence() {
  struct Group {
    dopt::ParameterSet params;
    std::size_t expected;
  };
  const std::vector<Group> groups = {
      {dopt::ParameterSet::doptimal(59, 28, 22, 21), 3},
      {dopt::ParameterSet::doptimal(69, 31, 27, 24), 19},
      {dopt::ParameterSet::doptimal(75, 36, 29, 28), 3},
      {dopt::ParameterSet::doptimal(87, 38, 36, 31), 3},
  };

  std::ostringstream d;
  bool ok = true;
  std::size_t total = 0;
  for (const auto& g : groups) {
    std::vector<dopt::Sds> members;
    for (const auto& e : dopt::builtin_corpus())
      if (e.sds.params == g.params) members.push_back(e.sds);
    if (members.size() != g.expected) {
      ok = false;
      d << g.params.to_string() << ": found " << members.size() << ", expected "
        << g.expected << "; ";
      continue;
    }
    std::set<std::vector<dopt::Block>> forms;
    for (const auto& s : members)
      forms.insert(dopt::canonical_form(s).blocks);
    if (forms.size() != members.size()) {
      ok = false;
      d << g.params.to_string() << ": only " << forms.size() << " of "
        << members.size() << " canonical forms distinct; ";
    }
    total += members.size();
  }
  if (ok) {
    d << total << " solutions in 4 groups, all pairwise nonequivalent";
  }
  report(2, "known solution classes distinct", ok, d.str());
}

// --- 3: parameter enumeration, bijection round trip, infeasible orders ------

void criterion_parameter_theory() {
  struct Row {
    int v, r, s, lambda;
  };
  // Every normalized feasible parameter set with v <= 99, frozen by hand
  // from the (x, y) map.
  const std::vector<Row> expected = {
      {3, 1, 0, 0},     {5, 1, 1, 0},     {7, 3, 1, 1},     {9, 3, 2, 1},
      {13, 4, 4, 2},    {13, 6, 3, 3},    {15, 6, 4, 3},    {19, 7, 6, 4},
      {21, 10, 6, 6},   {23, 10, 7, 6},   {25, 9, 9, 6},    {27, 11, 9, 7},
      {31, 15, 10, 10}, {33, 13, 12, 9},  {33, 15, 11, 10}, {37, 16, 13, 11},
      {41, 16, 16, 12}, {43, 18, 16, 13}, {43, 21, 15, 15}, {45, 21, 16, 15},
      {49, 22, 18, 16}, {51, 21, 20, 16}, {55, 24, 21, 18}, {57, 28, 21, 21},
      {59, 28, 22, 21}, {61, 25, 25, 20}, {63, 27, 25, 21}, {63, 29, 24, 22},
      {69, 31, 27, 24}, {73, 31, 30, 25}, {73, 36, 28, 28}, {75, 36, 29, 28},
      {77, 34, 31, 27}, {79, 37, 31, 29}, {85, 36, 36, 30}, {85, 39, 34, 31},
      {87, 38, 36, 31}, {91, 45, 36, 36}, {93, 42, 38, 34}, {93, 45, 37, 36},
      {97, 46, 39, 37}, {99, 43, 42, 36},
  };
  const std::vector<int> expected_infeasible = {11, 17, 29, 35, 39, 47, 53,
                                                65, 67, 71, 81, 83, 89, 95};

  std::ostringstream d;
  bool ok = true;

  const auto enumerated = dopt::enumerate_params(99);
  if (enumerated.size() != expected.size()) {
    ok = false;
    d << "enumerate_params(99) returned " << enumerated.size() << " sets, not "
      << expected.size() << "; ";
  } else {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const auto& row = expected[i];
      const auto want =
          dopt::ParameterSet::doptimal(row.v, row.r, row.s, row.lambda);
      if (!(enumerated[i] == want)) {
        ok = false;
        d << "row " << i << " is " << enumerated[i].to_string() << ", not "
          << want.to_string() << "; ";
        break;
      }
    }
  }

  int round_trips = 0;
  for (int x = 0;; ++x) {
    if (1 + x * (x + 1) > 1000) break;
    for (int y = 0; y <= x; ++y) {
      if (1 + x * (x + 1) + y * (y + 1) > 1000) break;
      const dopt::PairXY p{x, y};
      const auto q = dopt::pair_to_params(p);
      const auto back = dopt::try_params_to_pair(q);
      if (!back || !(*back == p)) {
        ok = false;
        d << "round trip failed at x=" << x << " y=" << y << "; ";
      }
      ++round_trips;
    }
  }

  const auto infeasible = dopt::infeasible_orders(99);
  if (infeasible != expected_infeasible) {
    ok = false;
    d << "infeasible_orders(99) mismatch (" << infeasible.size()
      << " entries); ";
  }

  if (ok) {
    d << expected.size() << " parameter sets, " << round_trips
      << " bijection round trips, " << expected_infeasible.size()
      << " infeasible orders";
  }
  report(3, "parameter theory", ok, d.str());
}

// --- 4: small designs attain the determinant bound exactly ------------------

void criterion_determinants() {
  constexpr double kLimitSeconds = 10.0;
  const std::set<int> orders = {3, 5, 7, 9, 13, 15};
  const auto t0 = Clock::now();

  std::ostringstream d;
  bool ok = true;
  int designs = 0;
  for (const auto& e : dopt::builtin_corpus()) {
    if (!orders.count(e.sds.v())) continue;
    const auto design = dopt::build_design(e.sds);
    mpz_class det = dopt::exact_determinant(design);
    if (det < 0) det = -det;
    if (det != dopt::bound_value(e.sds.v())) {
      ok = false;
      d << e.sds.params.to_string() << ": |det| " << det.get_str()
        << " != bound; ";
    }
    ++designs;
  }
  const double secs = seconds_since(t0);
  if (designs != 7) {
    ok = false;
    d << "expected 7 designs at these orders, found " << designs << "; ";
  }
  if (secs >= kLimitSeconds) {
    ok = false;
    d << "over the " << kLimitSeconds << "s limit; ";
  }
  if (ok) {
    d << designs << " designs attain the bound exactly in " << fmt_seconds(secs);
  }
  report(4, "exact determinants attain the bound", ok, d.str());
}

// --- 5: compression identities on random sequences --------------------------

void criterion_compression() {
  constexpr int kSequences = 1000;
  constexpr int kMaxLength = 60;
  constexpr double kTol = 1e-6;

  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<int> len(2, kMaxLength);
  std::uniform_int_distribution<int> sign(0, 1);

  std::ostringstream d;
  bool ok = true;
  double worst = 0;
  long long paf_checks = 0;
  for (int t = 0; t < kSequences && ok; ++t) {
    const int v = len(rng);
    dopt::IntSeq a(v);
    for (auto& x : a) x = sign(rng) ? 1 : -1;
    for (int dd = 1; dd <= v && ok; ++dd) {
      if (v % dd != 0) continue;
      const int m = v / dd;
      const auto comp = dopt::compress(a, dd);
      const auto direct = dopt::psd(comp);
      const auto sampled = dopt::psd_at_multiples(a, dd);
      const auto full = dopt::paf_all(a);
      for (int s = 0; s < dd; ++s) {
        const double err = std::abs(direct[s] - sampled[s]);
        worst = std::max(worst, err);
        if (err >= kTol) {
          ok = false;
          d << "psd gap " << err << " at v=" << v << " d=" << dd << " s=" << s
            << "; ";
          break;
        }
        long long folded = 0;
        for (int j = 0; j < m; ++j) folded += full[(s + j * dd) % v];
        if (dopt::paf(comp, s) != folded) {
          ok = false;
          d << "paf identity broken at v=" << v << " d=" << dd << " s=" << s
            << "; ";
          break;
        }
        ++paf_checks;
      }
    }
  }
  if (ok) {
    d << kSequences << " random sequences, " << paf_checks
      << " shift checks, worst psd gap "
      << worst << " < " << kTol;
  }
  report(5, "compression identities", ok, d.str());
}

// --- 6: the searches reproduce known solutions ------------------------------

bool fully_verified(const dopt::Sds& s, std::ostringstream& d) {
  for (const dopt::Verdict& v :
       {dopt::verify_sds(s), dopt::verify_doptimal(s),
        dopt::verify_gram(dopt::build_design(s))}) {
    if (!v.ok) {
      d << s.params.to_string() << " solution fails " << v.check << "; ";
      return false;
    }
  }
  return true;
}

void criterion_search() {
  std::ostringstream d;
  bool ok = true;

  struct ExhaustiveCase {
    dopt::ParameterSet params;
    double limit;
  };
  const std::vector<ExhaustiveCase> small = {
      {dopt::ParameterSet::doptimal(7, 3, 1, 1), 60.0},
      {dopt::ParameterSet::doptimal(9, 3, 2, 1), 60.0},
      {dopt::ParameterSet::doptimal(13, 4, 4, 2), 60.0},
      {dopt::ParameterSet::doptimal(13, 6, 3, 3), 60.0},
  };
  for (const auto& c : small) {
    const auto t0 = Clock::now();
    const auto found = dopt::exhaustive_search(c.params);
    const double secs = seconds_since(t0);
    if (found.empty()) {
      ok = false;
      d << c.params.to_string() << ": exhaustive search found nothing; ";
    }
    for (const auto& s : found)
      if (!fully_verified(s, d)) ok = false;
    if (secs >= c.limit) {
      ok = false;
      d << c.params.to_string() << ": " << fmt_seconds(secs) << " over "
        << c.limit << "s; ";
    }
  }

  struct DriverCase {
    dopt::ParameterSet params;
    double limit;
  };
  const std::vector<DriverCase> compressed = {
      {dopt::ParameterSet::doptimal(15, 6, 4, 3), 60.0},
      {dopt::ParameterSet::doptimal(21, 10, 6, 6), 300.0},
  };
  for (const auto& c : compressed) {
    dopt::SearchConfig cfg{c.params, 3};
    const auto t0 = Clock::now();
    const auto rep = dopt::search_driver(cfg);
    const double secs = seconds_since(t0);
    if (rep.solutions.empty() || !rep.exhausted) {
      ok = false;
      d << c.params.to_string() << ": driver found " << rep.solutions.size()
        << " solutions, exhausted=" << (rep.exhausted ? "yes" : "no") << "; ";
    }
    for (const auto& s : rep.solutions)
      if (!fully_verified(s, d)) ok = false;
    if (secs >= c.limit) {
      ok = false;
      d << c.params.to_string() << ": " << fmt_seconds(secs) << " over "
        << c.limit << "s; ";
    }
  }

  if (ok) {
    d << "4 exhaustive and 2 compression searches, all solutions verified";
  }
  report(6, "searches reproduce known solutions", ok, d.str());
}

// --- 7: no compressed corpus solution is ever filtered out ------------------

void criterion_filter_soundness() {
  // Every emitted pair equals some stage1_accepts-passing pair, so accepts +
  // psd_filter is the exact emission predicate; direct enumeration membership
  // is additionally confirmed where the compressed space is small.
  constexpr int kEnumerateUpTo = 33;

  std::ostringstream d;
  bool ok = true;
  int filter_checks = 0;
  int membership_checks = 0;
  for (const auto& e : dopt::builtin_corpus()) {
    const int v = e.sds.v();
    for (int m = 3; m < v; m += 2) {
      if (v % m != 0 || v / m <= 1) continue;
      const auto c = dopt::compress_pair(e.sds, v / m);
      if (!dopt::psd_filter(c)) {
        ok = false;
        d << e.sds.params.to_string() << " m=" << m << ": psd_filter rejects; ";
        continue;
      }
      if (!dopt::stage1_accepts(c)) {
        ok = false;
        d << e.sds.params.to_string() << " m=" << m
          << ": stage1_accepts rejects; ";
        continue;
      }
      ++filter_checks;
      if (v > kEnumerateUpTo) continue;
      dopt::SearchConfig cfg{e.sds.params, m};
      const auto rep = dopt::canonical_rotation(c);
      bool found = false;
      dopt::stage1_enumerate(cfg, [&](const dopt::CompressedPair& cand) {
        if (cand == rep) found = true;
        return !found;
      });
      if (!found) {
        ok = false;
        d << e.sds.params.to_string() << " m=" << m
          << ": compression not emitted; ";
      }
      ++membership_checks;
    }
  }
  if (ok) {
    d << filter_checks << " compressions accepted, " << membership_checks
      << " found by direct enumeration, zero false rejections";
  }
  report(7, "stage-1 filters never reject a true solution", ok, d.str());
}

}  // namespace

int main() {
  criterion_corpus_verification();
  criterion_nonequivalence();
  criterion_parameter_theory();
  criterion_determinants();
  criterion_compression();
  criterion_search();
  criterion_filter_soundness();
  std::printf("%s\n", g_failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES PRESENT");
  return g_failures == 0 ? 0 : 1;
}
