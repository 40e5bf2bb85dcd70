#include <doctest.h>

#include "oracles.hpp"
#include "wsub/error.hpp"
#include "wsub/subset_sum.hpp"

using namespace wsub;

namespace {

bool contiguous(const SubsetWitness& w) {
  for (std::size_t i = 1; i < w.indices.size(); ++i) {
    if (w.indices[i] != w.indices[i - 1] + 1) return false;
  }
  return true;
}

Multiset ms(std::vector<Weight> v) { return Multiset(std::move(v)); }

}  // namespace

TEST_CASE("multisets") {
  CHECK(ms({3, 1, 1}).total() == 5);
  CHECK_THROWS_AS(ms({}), Error);
  CHECK_THROWS_AS(ms({1, 0}), Error);
  CHECK(parse_multiset("3,1 1\n2").values() == std::vector<Weight>{3, 1, 1, 2});
  CHECK_THROWS_AS(parse_multiset("3,x"), Error);
  CHECK_THROWS_AS(parse_multiset("  "), Error);
}

TEST_CASE("dense SubsetSum") {
  auto a = subset_sum_dense(ms({1, 1, 1, 1}), 3);
  REQUIRE(a.decision == Decision::yes);
  CHECK(a.witness->sum == 3);
  CHECK(contiguous(*a.witness));

  a = subset_sum_dense(ms({2, 1, 1, 2}), 4);
  REQUIRE(a.decision == Decision::yes);
  CHECK(a.witness->sum == 4);
  CHECK(contiguous(*a.witness));

  CHECK(subset_sum_dense(ms({2, 2, 2}), 3).decision == Decision::not_applicable);
  CHECK(oracle_subset_sum(ms({2, 2, 2}), 3).decision == Decision::no);
}

TEST_CASE("dense Partition") {
  auto a = partition_dense(ms({3, 1, 1, 1, 1, 1}));
  REQUIRE(a.decision == Decision::yes);
  CHECK(a.witness->sum == 4);
  CHECK(partition_dense(ms({5, 1, 1, 1})).decision == Decision::not_applicable);
  CHECK(partition_dense(ms({2, 2, 2})).decision == Decision::not_applicable);
  CHECK(oracle_subset_sum(ms({2, 2, 2}), 3).decision == Decision::no);
  CHECK(partition_dense(ms({4, 1, 1})).decision == Decision::not_applicable);
  CHECK(partition_dense(ms({3, 1, 1, 1, 1, 1, 1, 1})).decision == Decision::yes);
  // at the threshold the largest value can reach half exactly
  a = partition_dense(ms({1, 1, 1, 1, 1, 1, 6}));
  REQUIRE(a.decision == Decision::yes);
  CHECK(a.witness->sum == 6);

  try {
    partition_dense(ms({1, 2}));
    FAIL("expected odd_total");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::odd_total);
  }
}

TEST_CASE("SubsetSum through Partition") {
  auto a = subset_sum_via_partition(ms({1, 1, 1, 2}), 2);
  REQUIRE(a.decision == Decision::yes);
  CHECK(a.witness->sum == 2);

  CHECK(subset_sum_via_partition(ms({4, 1}), 2).decision == Decision::not_applicable);
  CHECK(subset_sum_via_partition(ms({3, 1}), 2).decision == Decision::no);

  const auto m = ms({3, 1, 1, 1});
  a = subset_sum_via_partition(m, 3);
  REQUIRE(a.decision == Decision::yes);
  CHECK(verify_witness(m, *a.witness, 3));

  try {
    subset_sum_via_partition(ms({1, 1, 1}), 2);
    FAIL("expected k_too_large");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::k_too_large);
  }
}

TEST_CASE("DP oracle") {
  CHECK(oracle_subset_sum(ms({2, 2, 2}), 3).decision == Decision::no);
  const auto m = ms({2, 1, 1, 2});
  const auto a = oracle_subset_sum(m, 4);
  REQUIRE(a.decision == Decision::yes);
  CHECK(verify_witness(m, *a.witness, 4));
  const auto single = oracle_subset_sum(ms({7}), 7);
  REQUIRE(single.decision == Decision::yes);
  CHECK(single.witness->indices == std::vector<int>{0});
  CHECK(oracle_subset_sum(ms({7}), 0).decision == Decision::yes);
  CHECK(oracle_subset_sum(ms({7}), 8).decision == Decision::no);
  CHECK_THROWS_AS(oracle_subset_sum(Multiset(std::vector<Weight>(20'000, 1'000)), 5), Error);
}

TEST_CASE("witness verifier") {
  const auto m = ms({3, 1, 2});
  CHECK(verify_witness(m, {{0, 2}, 5}, 5));
  CHECK_FALSE(verify_witness(m, {{2, 0}, 5}, 5));
  CHECK_FALSE(verify_witness(m, {{0, 0}, 6}, 6));
  CHECK_FALSE(verify_witness(m, {{0, 3}, 3}, 3));
  CHECK_FALSE(verify_witness(m, {{0}, 4}, 4));
}

TEST_CASE("solvers agree with subset enumeration on small multisets") {
  // all multisets of length <= 6 over values 1..4, in every order for the solvers that care
  std::vector<Weight> a;
  auto rec = [&](auto&& self, int len) -> void {
    if (!a.empty()) {
      const Multiset m(a);
      const auto sums = brute::subset_sums(a);
      for (Weight k = 1; k <= m.total(); ++k) {
        const bool truth = sums.contains(k);
        const auto oracle = oracle_subset_sum(m, k);
        REQUIRE((oracle.decision == Decision::yes) == truth);
        if (truth) REQUIRE(verify_witness(m, *oracle.witness, k));
        const auto dense = subset_sum_dense(m, k);
        if (dense.decision != Decision::not_applicable) {
          REQUIRE(dense.decision == Decision::yes);
          REQUIRE(truth);
          REQUIRE(contiguous(*dense.witness));
        }
        if (2 * k <= m.total()) {
          const auto via = subset_sum_via_partition(m, k);
          if (via.decision != Decision::not_applicable) REQUIRE((via.decision == Decision::yes) == truth);
          if (via.decision == Decision::yes) REQUIRE(verify_witness(m, *via.witness, k));
        }
      }
    }
    if (len == 6) return;
    for (Weight v = 1; v <= 4; ++v) {
      a.push_back(v);
      self(self, len + 1);
      a.pop_back();
    }
  };
  rec(rec, 0);
}
