#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "wsub/tree.hpp"

namespace wsub {

/// Non-empty list of positive integers; order matters to the dense solvers
/// since their witnesses are contiguous runs.
class Multiset {
 public:
  explicit Multiset(std::vector<Weight> values);

  std::size_t size() const { return values_.size(); }
  Weight operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Weight>& values() const { return values_; }
  Weight total() const { return total_; }
  Weight max() const { return max_; }

 private:
  std::vector<Weight> values_;
  Weight total_ = 0;
  Weight max_ = 0;
};

struct SubsetWitness {
  std::vector<int> indices;  // ascending positions in the multiset
  Weight sum = 0;
};

enum class Decision { yes, no, not_applicable };

std::string_view to_string(Decision decision);

struct SubsetAnswer {
  Decision decision = Decision::not_applicable;
  std::optional<SubsetWitness> witness;  // present iff decision == yes
  std::size_t steps = 0;
};

/// Dense SubsetSum: when sum <= 2N - 2, sum - N + 1 <= k <= N and every value
/// is <= k, a contiguous run summing to exactly k exists and is returned.
/// Outside those bounds the answer is not_applicable.
SubsetAnswer subset_sum_dense(const Multiset& a, Weight k);

/// Dense Partition (sum must be even, else odd_total): with N >= sum/2 + 1
/// the answer is yes iff every value is <= sum/2.
SubsetAnswer partition_dense(const Multiset& a);

/// SubsetSum through Partition of A plus one element sum - 2k. Needs
/// 2k <= sum (else k_too_large); applies when N >= sum - k.
SubsetAnswer subset_sum_via_partition(const Multiset& a, Weight k);

/// Pseudo-polynomial DP over reachable sums, for cross-checking. Throws
/// instance_too_large when N * sum exceeds kOracleCellLimit.
SubsetAnswer oracle_subset_sum(const Multiset& a, Weight k);

/// Indices distinct, in range, ascending, and summing to `k`.
bool verify_witness(const Multiset& a, const SubsetWitness& witness, Weight k);

/// Integers separated by spaces, tabs, commas or newlines.
Multiset parse_multiset(std::string_view text);

}  // namespace wsub
