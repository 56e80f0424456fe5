#include "dopt/sds.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "dopt/corpus.hpp"

using namespace dopt;

namespace {

Sds small_73() {
  return Sds{ParameterSet::doptimal(7, 3, 1, 1), {{0, 1, 3}, {0}}};
}

const Sds& corpus_entry(const std::string& params, int skip = 0) {
  for (const auto& e : builtin_corpus())
    if (e.sds.params.to_string() == params && skip-- == 0) return e.sds;
  throw std::runtime_error("no corpus entry " + params);
}

Block translate(const Block& blk, int t, int v) {
  Block out;
  for (int e : blk) out.push_back((e + t) % v);
  std::sort(out.begin(), out.end());
  return out;
}

Block unit_multiply(const Block& blk, int u, int v) {
  Block out;
  for (int e : blk) out.push_back(static_cast<int>((1LL * u * e) % v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("difference table counts ordered differences") {
  auto counts = difference_table(small_73());
  CHECK(counts[0] == 0);
  for (int c = 1; c < 7; ++c) CHECK(counts[static_cast<size_t>(c)] == 1);

  // both blocks {0,1}: differences 1 and 4 picked up twice, others never
  auto t = difference_table(Sds{ParameterSet(5, {2, 2}, 1), {{0, 1}, {0, 1}}});
  CHECK(t == std::vector<long long>{0, 2, 0, 0, 2});
  CHECK_THROWS_AS(
      difference_table(Sds{ParameterSet(5, {2, 2}, 1), {{0, 9}, {0, 1}}}),
      std::domain_error);
}

TEST_CASE("verify_sds accepts the known small solutions") {
  CHECK(verify_sds(small_73()).ok);
  CHECK(verify_sds(corpus_entry("(9;3,2;1)")).ok);
  CHECK(verify_sds(corpus_entry("(13;4,4;2)")).ok);
}

TEST_CASE("verify_sds pinpoints the failure") {
  SUBCASE("wrong block size") {
    Sds s{ParameterSet::doptimal(7, 3, 1, 1), {{0, 1}, {0}}};
    auto verdict = verify_sds(s);
    CHECK(!verdict.ok);
    CHECK(verdict.detail.find("size") != std::string::npos);
  }
  SUBCASE("element out of range") {
    Sds s{ParameterSet::doptimal(7, 3, 1, 1), {{0, 1, 7}, {0}}};
    auto verdict = verify_sds(s);
    CHECK(!verdict.ok);
    CHECK(verdict.detail.find("range") != std::string::npos);
  }
  SUBCASE("repeated element") {
    Sds s{ParameterSet::doptimal(7, 3, 1, 1), {{0, 1, 1}, {0}}};
    auto verdict = verify_sds(s);
    CHECK(!verdict.ok);
    CHECK(verdict.detail.find("repeats") != std::string::npos);
  }
  SUBCASE("mutated block breaks a difference count") {
    Sds s{ParameterSet::doptimal(7, 3, 1, 1), {{0, 1, 2}, {0}}};
    auto verdict = verify_sds(s);
    CHECK(!verdict.ok);
    CHECK(verdict.detail.find("difference") != std::string::npos);
  }
  SUBCASE("wrong number of blocks") {
    Sds s{ParameterSet::doptimal(7, 3, 1, 1), {{0, 1, 3}}};
    CHECK(!verify_sds(s).ok);
  }
}

TEST_CASE("verify_doptimal checks the PAF criterion") {
  CHECK(verify_doptimal(small_73()).ok);
  CHECK(verify_doptimal(corpus_entry("(15;6,4;3)")).ok);

  Sds bad{ParameterSet::doptimal(7, 3, 1, 1), {{0, 1, 2}, {0}}};
  auto verdict = verify_doptimal(bad);
  CHECK(!verdict.ok);
  CHECK(verdict.check == "doptimal");
  CHECK(verdict.detail.find("paf") != std::string::npos);
}

TEST_CASE("verify_matnorm agrees with the PAF route") {
  CHECK(verify_matnorm(small_73()).ok);
  CHECK(verify_matnorm(corpus_entry("(13;6,3;3)")).ok);
  Sds bad{ParameterSet::doptimal(9, 3, 2, 1), {{0, 1, 2}, {0, 2}}};
  CHECK(verify_matnorm(bad).ok == verify_doptimal(bad).ok);
  CHECK(!verify_matnorm(bad).ok);
}

TEST_CASE("canonical form is idempotent and orbit-constant") {
  std::mt19937 rng(4242);
  for (const char* name : {"(7;3,1;1)", "(13;4,4;2)", "(15;6,4;3)",
                           "(21;10,6;6)"}) {
    const Sds& s = corpus_entry(name);
    const int v = s.v();
    Sds canon = canonical_form(s);
    CHECK(canonical_form(canon) == canon);
    for (int trial = 0; trial < 20; ++trial) {
      int u;
      do {
        u = 1 + static_cast<int>(rng() % (v - 1));
      } while (std::gcd(u, v) != 1);
      Sds moved{s.params,
                {translate(unit_multiply(s.x(), u, v),
                           static_cast<int>(rng() % v), v),
                 translate(unit_multiply(s.y(), u, v),
                           static_cast<int>(rng() % v), v)}};
      CHECK(canonical_form(moved) == canon);
      CHECK(are_equivalent(moved, s));
    }
  }
}

TEST_CASE("canonical form honors the swap only at equal sizes") {
  const Sds& eq = corpus_entry("(13;4,4;2)");
  Sds swapped{eq.params, {eq.y(), eq.x()}};
  CHECK(are_equivalent(eq, swapped));

  const Sds& uneq = corpus_entry("(15;6,4;3)");
  Sds c = canonical_form(uneq);
  CHECK(c.x().size() == 6);
  CHECK(c.y().size() == 4);
}

TEST_CASE("equivalence distinguishes genuinely different solutions") {
  const Sds& first = corpus_entry("(69;31,27;24)", 0);
  const Sds& second = corpus_entry("(69;31,27;24)", 1);
  CHECK(!are_equivalent(first, second));
  CHECK_THROWS_AS(
      are_equivalent(corpus_entry("(7;3,1;1)"), corpus_entry("(9;3,2;1)")),
      std::domain_error);
}

TEST_CASE("canonical forms verify like their originals") {
  const Sds& s = corpus_entry("(19;7,6;4)");
  Sds canon = canonical_form(s);
  CHECK(verify_sds(canon).ok);
  CHECK(verify_doptimal(canon).ok);
}
