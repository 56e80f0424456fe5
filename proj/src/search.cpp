#include "dopt/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dopt/sds_io.hpp"

namespace dopt {

void SearchConfig::validate() const {
  if (!try_params_to_pair(params))
    throw std::domain_error("not a feasible normalized D-optimal parameter "
                            "set: " + params.to_string());
  if (m < 2 || params.v() % m != 0 || params.v() / m < 2)
    throw std::domain_error("need a nontrivial factorization v = m*d, got "
                            "m = " + std::to_string(m) + " for v = " +
                            std::to_string(params.v()));
  if (psd_tolerance < 0)
    throw std::domain_error("psd tolerance must be nonnegative");
  if (workers < 1) throw std::domain_error("workers must be at least 1");
}

std::string SearchReport::to_string() const {
  std::ostringstream os;
  os << "solutions: " << solutions.size() << '\n';
  for (const Sds& s : solutions)
    os << "  " << print_record(SdsRecord{s, {}}) << '\n';
  os << "candidates: " << candidates << '\n'
     << "psd_rejected: " << psd_rejected << '\n'
     << "lift_nodes: " << lift_nodes << '\n'
     << "duplicates: " << duplicates << '\n'
     << "exhausted: " << (exhausted ? "yes" : "no") << '\n';
  return os.str();
}

bool psd_filter(const CompressedPair& c, double psd_tol) {
  const double bound = 2.0 * c.target.v() - 2.0 + psd_tol;
  auto pa = psd(c.a);
  for (size_t k = 1; k < pa.size(); ++k)
    if (pa[k] > bound) return false;
  auto pb = psd(c.b);
  for (size_t k = 1; k < pb.size(); ++k)
    if (pb[k] > bound) return false;
  return true;
}

bool stage1_accepts(const CompressedPair& c, double psd_tol) {
  const int m = c.m;
  const int d = c.d();
  if (m < 1 || d < 1 || static_cast<int>(c.b.size()) != d) return false;
  if (!c.target.is_doptimal()) return false;
  const int v = c.target.v();
  if (m * d != v) return false;
  long long suma = 0, sumb = 0;
  for (long long e : c.a) {
    if (e > m || e < -m || (e - m) % 2 != 0) return false;
    suma += e;
  }
  for (long long e : c.b) {
    if (e > m || e < -m || (e - m) % 2 != 0) return false;
    sumb += e;
  }
  if (suma != v - 2LL * c.target.r()) return false;
  if (sumb != v - 2LL * c.target.s()) return false;
  auto pa = paf_all(c.a);
  auto pb = paf_all(c.b);
  if (pa[0] + pb[0] != 2LL * v + 2 * (m - 1)) return false;
  for (int s = 1; s < d; ++s)
    if (pa[static_cast<size_t>(s)] + pb[static_cast<size_t>(s)] != 2LL * m)
      return false;
  return psd_filter(c, psd_tol);
}

CompressedPair compress_pair(const Sds& s, int d) {
  if (s.blocks.size() != 2)
    throw std::domain_error("compression wants exactly two blocks");
  const int v = s.v();
  if (d < 1 || v % d != 0)
    throw std::domain_error("d = " + std::to_string(d) +
                            " does not divide v = " + std::to_string(v));
  auto a = compress(BinarySequence::from_subset(s.x(), v).terms(), d);
  auto b = compress(BinarySequence::from_subset(s.y(), v).terms(), d);
  return CompressedPair{std::move(a), std::move(b), v / d, s.params};
}

CompressedPair canonical_rotation(const CompressedPair& c) {
  const int d = c.d();
  CompressedPair best = c;
  CompressedPair cand = c;
  for (int r = 1; r < d; ++r) {
    for (int j = 0; j < d; ++j) {
      cand.a[static_cast<size_t>(j)] = c.a[static_cast<size_t>((j + r) % d)];
      cand.b[static_cast<size_t>(j)] = c.b[static_cast<size_t>((j + r) % d)];
    }
    if (cand < best) best = cand;
  }
  return best;
}

namespace {

// Depth-first walk over compressed pairs: a against sum/square-sum windows,
// then b against the exact PAF targets induced by a.
class Stage1Walk {
 public:
  Stage1Walk(const SearchConfig& cfg,
             const std::function<bool(const CompressedPair&)>& emit,
             std::uint64_t* psd_cut)
      : cfg_(cfg), emit_(emit), psd_cut_(psd_cut) {
    v_ = cfg.params.v();
    m_ = cfg.m;
    if (m_ < 1 || v_ % m_ != 0)
      throw std::domain_error("compression factor " + std::to_string(m_) +
                              " does not divide v = " + std::to_string(v_));
    d_ = v_ / m_;
    sum_a_ = v_ - 2LL * cfg.params.r();
    sum_b_ = v_ - 2LL * cfg.params.s();
    p0_ = 2LL * v_ + 2 * (m_ - 1);
    sq_min_ = (m_ % 2 != 0) ? 1 : 0;
    min_bsq_ = std::max<long long>(static_cast<long long>(d_) * sq_min_,
                                   (sum_b_ * sum_b_ + d_ - 1) / d_);
    a_.assign(static_cast<size_t>(d_), 0);
    b_.assign(static_cast<size_t>(d_), 0);
    partial_.assign(static_cast<size_t>(d_), 0);
    target_.assign(static_cast<size_t>(d_), 0);
    psd_bound_ = 2.0 * v_ - 2.0 + cfg.psd_tolerance;
  }

  // True when the walk ran to completion (no emit stop).
  bool run() {
    walk_a(0, 0, 0);
    return !stopped_;
  }

 private:
  void walk_a(int i, long long sum, long long sq) {
    if (stopped_) return;
    if (i == d_) {
      complete_a(sq);
      return;
    }
    const long long rem = d_ - 1 - i;
    for (long long val = m_; val >= -m_; val -= 2) {
      const long long ns = sum + val;
      const long long nq = sq + val * val;
      if (std::llabs(sum_a_ - ns) > rem * m_) continue;
      if (nq + rem * sq_min_ > p0_ - min_bsq_) continue;
      if (nq + rem * m_ * m_ <
          p0_ - static_cast<long long>(d_) * m_ * m_)
        continue;
      a_[static_cast<size_t>(i)] = val;
      walk_a(i + 1, ns, nq);
      if (stopped_) return;
    }
  }

  void complete_a(long long sq) {
    auto pa = psd(a_);
    for (int k = 1; k < d_; ++k)
      if (pa[static_cast<size_t>(k)] > psd_bound_) {
        if (psd_cut_) ++*psd_cut_;
        return;
      }
    target_[0] = p0_ - sq;  // required square sum of b
    if (target_[0] < static_cast<long long>(d_) * sq_min_ ||
        target_[0] > static_cast<long long>(d_) * m_ * m_)
      return;
    if (sum_b_ * sum_b_ > static_cast<long long>(d_) * target_[0]) return;
    auto paf_a = paf_all(a_);
    for (int s = 1; s < d_; ++s) {
      target_[static_cast<size_t>(s)] = 2LL * m_ - paf_a[static_cast<size_t>(s)];
      if (std::llabs(target_[static_cast<size_t>(s)]) >
          static_cast<long long>(d_) * m_ * m_)
        return;
    }
    walk_b(0, 0, 0);
  }

  // Ordered PAF terms of shift s completed once the prefix 0..p-1 is placed.
  long long done_terms(int s, int p) const {
    return std::max(0, p - s) + std::max(0, p - (d_ - s));
  }

  void walk_b(int i, long long sum, long long sq) {
    if (stopped_) return;
    if (i == d_) {
      complete_pair();
      return;
    }
    const long long rem = d_ - 1 - i;
    for (long long val = m_; val >= -m_; val -= 2) {
      const long long ns = sum + val;
      const long long nq = sq + val * val;
      if (std::llabs(sum_b_ - ns) > rem * m_) continue;
      const long long sq_left = target_[0] - nq;
      if (sq_left < rem * sq_min_ || sq_left > rem * m_ * m_) continue;
      if ((sum_b_ - ns) * (sum_b_ - ns) > rem * sq_left) continue;
      b_[static_cast<size_t>(i)] = val;
      bool viable = true;
      for (int s = 1; s < d_; ++s) {
        auto& p = partial_[static_cast<size_t>(s)];
        if (i >= s) p += b_[static_cast<size_t>(i - s)] * val;
        if (i >= d_ - s) p += val * b_[static_cast<size_t>(i + s - d_)];
      }
      for (int s = 1; s < d_ && viable; ++s) {
        const long long left = d_ - done_terms(s, i + 1);
        if (std::llabs(target_[static_cast<size_t>(s)] -
                       partial_[static_cast<size_t>(s)]) >
            left * m_ * m_)
          viable = false;
      }
      if (viable) walk_b(i + 1, ns, nq);
      for (int s = 1; s < d_; ++s) {
        auto& p = partial_[static_cast<size_t>(s)];
        if (i >= s) p -= b_[static_cast<size_t>(i - s)] * val;
        if (i >= d_ - s) p -= val * b_[static_cast<size_t>(i + s - d_)];
      }
      if (stopped_) return;
    }
  }

  void complete_pair() {
    auto pb = psd(b_);
    for (int k = 1; k < d_; ++k)
      if (pb[static_cast<size_t>(k)] > psd_bound_) {
        if (psd_cut_) ++*psd_cut_;
        return;
      }
    CompressedPair c{a_, b_, m_, cfg_.params};
    if (cfg_.normalize_candidates && canonical_rotation(c) != c) return;
    if (!emit_(c)) stopped_ = true;
  }

  const SearchConfig& cfg_;
  const std::function<bool(const CompressedPair&)>& emit_;
  std::uint64_t* psd_cut_;
  int v_ = 0, m_ = 0, d_ = 0;
  long long sum_a_ = 0, sum_b_ = 0, p0_ = 0, sq_min_ = 0, min_bsq_ = 0;
  double psd_bound_ = 0;
  IntSeq a_, b_, partial_, target_;
  bool stopped_ = false;
};

bool enumerate_core(const SearchConfig& cfg,
                    const std::function<bool(const CompressedPair&)>& emit,
                    std::uint64_t* psd_cut) {
  Stage1Walk walk(cfg, emit, psd_cut);
  return walk.run();
}

// All ways to place the required number of -1 signs in a column of m slots,
// as slot masks.
std::vector<std::vector<char>> sign_patterns(int m, int negatives) {
  std::vector<std::vector<char>> out;
  std::vector<char> pick(static_cast<size_t>(m), 0);
  std::fill(pick.begin(), pick.begin() + negatives, 1);
  std::sort(pick.begin(), pick.end());
  do {
    out.push_back(pick);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// Column-by-column lift of one compressed candidate.
class LiftWalk {
 public:
  LiftWalk(const CompressedPair& c, const SearchConfig& cfg,
           const std::function<bool(const Sds&)>& emit, std::uint64_t* nodes)
      : c_(c), cfg_(cfg), emit_(emit), nodes_(nodes) {
    v_ = c.target.v();
    m_ = c.m;
    d_ = c.d();
  }

  bool run() {
    if (!stage1_accepts(c_, cfg_.psd_tolerance)) return true;
    cols_a_ = column_plan(c_.a);
    cols_b_ = column_plan(c_.b);
    seq_a_.assign(static_cast<size_t>(v_), 0);
    seq_b_.assign(static_cast<size_t>(v_), 0);
    partial_.assign(static_cast<size_t>(v_), 0);
    terms_.assign(static_cast<size_t>(v_), 0);
    target_.assign(static_cast<size_t>(v_), 0);
    placed_.clear();
    placed_.reserve(static_cast<size_t>(v_));
    walk_a(0);
    return !stopped_;
  }

 private:
  struct ColumnChoices {
    int col = 0;
    std::vector<std::vector<char>> patterns;
  };

  // Columns ordered fewest-choices-first; the number of -1 signs in column
  // j is pinned by the compressed entry.
  std::vector<ColumnChoices> column_plan(const IntSeq& compressed) const {
    std::vector<ColumnChoices> plan;
    for (int j = 0; j < d_; ++j) {
      int neg = static_cast<int>(m_ - compressed[static_cast<size_t>(j)]) / 2;
      plan.push_back(ColumnChoices{j, sign_patterns(m_, neg)});
    }
    std::stable_sort(plan.begin(), plan.end(),
                     [](const ColumnChoices& l, const ColumnChoices& r) {
                       return l.patterns.size() < r.patterns.size();
                     });
    return plan;
  }

  void apply(IntSeq& seq, const ColumnChoices& col,
             const std::vector<char>& pattern) {
    for (int l = 0; l < m_; ++l)
      seq[static_cast<size_t>(col.col + l * d_)] =
          pattern[static_cast<size_t>(l)] ? -1 : 1;
  }

  void walk_a(int idx) {
    if (stopped_) return;
    if (idx == d_) {
      complete_a();
      return;
    }
    for (const auto& pattern : cols_a_[static_cast<size_t>(idx)].patterns) {
      if (nodes_) ++*nodes_;
      apply(seq_a_, cols_a_[static_cast<size_t>(idx)], pattern);
      walk_a(idx + 1);
      if (stopped_) return;
    }
  }

  void complete_a() {
    // Any partner spectrum is nonnegative, so a liftable A obeys the same
    // pointwise bound as the compressed filter.
    const double bound = 2.0 * v_ - 2.0 + cfg_.psd_tolerance;
    auto pw = psd(seq_a_);
    for (int k = 1; k < v_; ++k)
      if (pw[static_cast<size_t>(k)] > bound) return;
    auto paf_a = paf_all(seq_a_);
    for (int c = 1; c < v_; ++c)
      target_[static_cast<size_t>(c)] = 2 - paf_a[static_cast<size_t>(c)];
    walk_b(0);
  }

  bool place_column(const ColumnChoices& col, const std::vector<char>& pattern) {
    for (int l = 0; l < m_; ++l) {
      const int q = col.col + l * d_;
      const long long val = pattern[static_cast<size_t>(l)] ? -1 : 1;
      for (int p : placed_) {
        int d1 = q - p;
        if (d1 < 0) d1 += v_;
        const int d2 = d1 == 0 ? 0 : v_ - d1;
        const long long prod = val * seq_b_[static_cast<size_t>(p)];
        partial_[static_cast<size_t>(d1)] += prod;
        partial_[static_cast<size_t>(d2)] += prod;
        ++terms_[static_cast<size_t>(d1)];
        ++terms_[static_cast<size_t>(d2)];
      }
      seq_b_[static_cast<size_t>(q)] = val;
      placed_.push_back(q);
    }
    for (int c = 1; c < v_; ++c)
      if (std::llabs(target_[static_cast<size_t>(c)] -
                     partial_[static_cast<size_t>(c)]) >
          v_ - terms_[static_cast<size_t>(c)])
        return false;
    return true;
  }

  void unplace_column(const ColumnChoices& col) {
    for (int l = m_ - 1; l >= 0; --l) {
      const int q = col.col + l * d_;
      placed_.pop_back();
      const long long val = seq_b_[static_cast<size_t>(q)];
      seq_b_[static_cast<size_t>(q)] = 0;
      for (int p : placed_) {
        int d1 = q - p;
        if (d1 < 0) d1 += v_;
        const int d2 = d1 == 0 ? 0 : v_ - d1;
        const long long prod = val * seq_b_[static_cast<size_t>(p)];
        partial_[static_cast<size_t>(d1)] -= prod;
        partial_[static_cast<size_t>(d2)] -= prod;
        --terms_[static_cast<size_t>(d1)];
        --terms_[static_cast<size_t>(d2)];
      }
    }
  }

  void walk_b(int idx) {
    if (stopped_) return;
    if (idx == d_) {
      emit_solution();
      return;
    }
    for (const auto& pattern : cols_b_[static_cast<size_t>(idx)].patterns) {
      if (nodes_) ++*nodes_;
      const bool viable = place_column(cols_b_[static_cast<size_t>(idx)], pattern);
      if (viable) walk_b(idx + 1);
      unplace_column(cols_b_[static_cast<size_t>(idx)]);
      if (stopped_) return;
    }
  }

  void emit_solution() {
    Block x, y;
    for (int i = 0; i < v_; ++i) {
      if (seq_a_[static_cast<size_t>(i)] == -1) x.push_back(i);
      if (seq_b_[static_cast<size_t>(i)] == -1) y.push_back(i);
    }
    Sds sol{c_.target, {std::move(x), std::move(y)}};
    if (!emit_(sol)) stopped_ = true;
  }

  const CompressedPair& c_;
  const SearchConfig& cfg_;
  const std::function<bool(const Sds&)>& emit_;
  std::uint64_t* nodes_;
  int v_ = 0, m_ = 0, d_ = 0;
  std::vector<ColumnChoices> cols_a_, cols_b_;
  IntSeq seq_a_, seq_b_, partial_, target_;
  std::vector<int> terms_;
  std::vector<int> placed_;
  bool stopped_ = false;
};

bool lift_core(const CompressedPair& c, const SearchConfig& cfg,
               const std::function<bool(const Sds&)>& emit,
               std::uint64_t* nodes) {
  LiftWalk walk(c, cfg, emit, nodes);
  return walk.run();
}

}  // namespace

bool stage1_enumerate(const SearchConfig& cfg,
                      const std::function<bool(const CompressedPair&)>& emit) {
  return enumerate_core(cfg, emit, nullptr);
}

std::vector<CompressedPair> stage1_candidates(const SearchConfig& cfg) {
  std::vector<CompressedPair> out;
  stage1_enumerate(cfg, [&](const CompressedPair& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

bool stage2_lift(const CompressedPair& c, const SearchConfig& cfg,
                 const std::function<bool(const Sds&)>& emit) {
  return lift_core(c, cfg, emit, nullptr);
}

std::vector<Sds> stage2_lift(const CompressedPair& c, const SearchConfig& cfg) {
  std::vector<Sds> out;
  stage2_lift(c, cfg, [&](const Sds& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Sds> exhaustive_search(const ParameterSet& p, int v_guard) {
  if (!p.is_doptimal())
    throw std::domain_error("exhaustive search wants a normalized D-optimal "
                            "parameter set, got " + p.to_string());
  const int v = p.v();
  if (v > v_guard)
    throw std::domain_error("order " + std::to_string(v) +
                            " above the exhaustive-search guard " +
                            std::to_string(v_guard));
  const int half = (v - 1) / 2;
  auto diff_counts = [&](const Block& blk) {
    std::vector<int> counts(static_cast<size_t>(half) + 1, 0);
    for (int a : blk)
      for (int b : blk) {
        if (a == b) continue;
        int c = a - b;
        if (c < 0) c += v;
        if (c <= half) ++counts[static_cast<size_t>(c)];
      }
    return counts;
  };
  // One representative per translation class: nonempty blocks contain 0.
  auto subsets = [&](int size) {
    std::vector<Block> out;
    if (size == 0) {
      out.push_back({});
      return out;
    }
    std::vector<int> idx(static_cast<size_t>(size) - 1);
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i) + 1;
    while (true) {
      Block blk{0};
      blk.insert(blk.end(), idx.begin(), idx.end());
      out.push_back(std::move(blk));
      int i = static_cast<int>(idx.size()) - 1;
      while (i >= 0 &&
             idx[static_cast<size_t>(i)] ==
                 v - static_cast<int>(idx.size()) + i)
        --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (size_t j = static_cast<size_t>(i) + 1; j < idx.size(); ++j)
        idx[j] = idx[j - 1] + 1;
    }
    return out;
  };

  std::map<std::vector<int>, std::vector<Block>> partners;
  for (Block& y : subsets(p.s())) {
    auto key = diff_counts(y);
    partners[std::move(key)].push_back(std::move(y));
  }
  std::set<Sds> classes;
  for (Block& x : subsets(p.r())) {
    auto counts = diff_counts(x);
    std::vector<int> need(counts.size());
    bool ok = true;
    for (size_t c = 1; c < counts.size(); ++c) {
      need[c] = p.lambda() - counts[c];
      if (need[c] < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    auto it = partners.find(need);
    if (it == partners.end()) continue;
    for (const Block& y : it->second)
      classes.insert(canonical_form(Sds{p, {x, y}}));
  }
  return {classes.begin(), classes.end()};
}

SearchReport search_driver(const SearchConfig& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  };
  SearchReport rep;
  if (cfg.budget_seconds && *cfg.budget_seconds <= 0) {
    rep.wall_seconds = elapsed();
    return rep;
  }
  std::set<std::vector<Block>> seen;
  auto record = [&](const Sds& sol) {
    Sds canon = canonical_form(sol);
    if (seen.insert(canon.blocks).second)
      rep.solutions.push_back(std::move(canon));
    else
      ++rep.duplicates;
    return !(cfg.max_solutions != 0 &&
             rep.solutions.size() >= cfg.max_solutions);
  };

  if (cfg.workers == 1) {
    bool complete = enumerate_core(
        cfg,
        [&](const CompressedPair& c) {
          ++rep.candidates;
          if (!lift_core(c, cfg, record, &rep.lift_nodes)) return false;
          if (cfg.max_candidates != 0 && rep.candidates >= cfg.max_candidates)
            return false;
          if (cfg.budget_seconds && elapsed() >= *cfg.budget_seconds)
            return false;
          return true;
        },
        &rep.psd_rejected);
    rep.exhausted = complete;
    rep.wall_seconds = elapsed();
    return rep;
  }

  // Parallel flavor: stage 1 runs up front, lifts are farmed out.  Discovery
  // order may differ between runs; the deduplicated solution set cannot.
  std::vector<CompressedPair> cands;
  bool stage1_complete = enumerate_core(
      cfg,
      [&](const CompressedPair& c) {
        cands.push_back(c);
        ++rep.candidates;
        if (cfg.max_candidates != 0 && rep.candidates >= cfg.max_candidates)
          return false;
        if (cfg.budget_seconds && elapsed() >= *cfg.budget_seconds)
          return false;
        return true;
      },
      &rep.psd_rejected);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::vector<std::uint64_t> node_counts(static_cast<size_t>(cfg.workers), 0);
  auto work = [&](int id) {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cands.size()) return;
      bool ran = lift_core(
          cands[i], cfg,
          [&](const Sds& sol) {
            std::lock_guard<std::mutex> lock(mu);
            if (stop.load()) return false;
            if (!record(sol)) {
              stop.store(true);
              return false;
            }
            return true;
          },
          &node_counts[static_cast<size_t>(id)]);
      if (!ran) stop.store(true);
      if (cfg.budget_seconds && elapsed() >= *cfg.budget_seconds)
        stop.store(true);
    }
  };
  std::vector<std::thread> pool;
  for (int id = 0; id < cfg.workers; ++id) pool.emplace_back(work, id);
  for (auto& t : pool) t.join();
  for (std::uint64_t n : node_counts) rep.lift_nodes += n;
  rep.exhausted = stage1_complete && !stop.load();
  rep.wall_seconds = elapsed();
  return rep;
}

}  // namespace dopt
