#include "wsub/subset_sum.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "wsub/error.hpp"
#include "wsub/euler_subtree.hpp"

namespace wsub {

Multiset::Multiset(std::vector<Weight> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorKind::invalid_argument, "multiset is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Weight v = values_[i];
    if (v < 1) {
      throw Error(ErrorKind::nonpositive_weight, "value #" + std::to_string(i) + " is " + std::to_string(v));
    }
    if (v > kMaxTotalWeight - total_) throw Error(ErrorKind::weight_overflow, "multiset total overflows");
    total_ += v;
    max_ = std::max(max_, v);
  }
}

std::string_view to_string(Decision decision) {
  switch (decision) {
    case Decision::yes: return "true";
    case Decision::no: return "false";
    case Decision::not_applicable: return "not-applicable";
  }
  return "unknown";
}

SubsetAnswer subset_sum_dense(const Multiset& a, Weight k) {
  const auto n = static_cast<Weight>(a.size());
  const Weight total = a.total();
  SubsetAnswer out;
  if (total > 2 * n - 2 || k < total - n + 1 || k > n || a.max() > k) return out;

  // The path special case with g = 1 always succeeds under these bounds.
  const auto path = WeightedTree::path(a.values());
  const auto search = find_subtree(path, k, 1);
  WSUB_CHECK(search.found(), "dense SubsetSum hypotheses hold but the path search failed");
  out.decision = Decision::yes;
  out.steps = search.steps;
  out.witness = SubsetWitness{search.subtree->vertices, search.subtree->weight};
  WSUB_CHECK(verify_witness(a, *out.witness, k), "dense SubsetSum witness does not sum to k");
  return out;
}

SubsetAnswer partition_dense(const Multiset& a) {
  if (a.total() % 2 != 0) {
    throw Error(ErrorKind::odd_total, "Partition needs an even total, got " + std::to_string(a.total()));
  }
  const Weight half = a.total() / 2;
  SubsetAnswer out;
  if (static_cast<Weight>(a.size()) < half + 1) return out;
  if (a.max() > half) {
    out.decision = Decision::no;
    return out;
  }
  out = subset_sum_dense(a, half);
  WSUB_CHECK(out.decision == Decision::yes, "dense Partition threshold holds but SubsetSum did not apply");
  return out;
}

SubsetAnswer subset_sum_via_partition(const Multiset& a, Weight k) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "target k must be >= 1");
  if (2 * k > a.total()) {
    throw Error(ErrorKind::k_too_large, "reduction needs 2k <= total (k = " + std::to_string(k) +
                                            ", total = " + std::to_string(a.total()) + ")");
  }
  SubsetAnswer out;
  if (static_cast<Weight>(a.size()) < a.total() - k) return out;
  if (a.max() > a.total() - k) {
    out.decision = Decision::no;
    return out;
  }
  const Weight extra = a.total() - 2 * k;
  // A zero element is not a legal weight; Partition on A alone is the same question.
  if (extra == 0) return partition_dense(a);

  std::vector<Weight> values = a.values();
  values.push_back(extra);
  const int extra_index = static_cast<int>(a.size());
  const auto part = partition_dense(Multiset(std::move(values)));
  WSUB_CHECK(part.decision == Decision::yes, "reduced Partition instance should be a yes-instance");

  // The side holding the extra element has A-part k; the other side has total - k.
  const auto& side = part.witness->indices;
  const bool has_extra = std::find(side.begin(), side.end(), extra_index) != side.end();
  SubsetWitness w;
  if (has_extra) {
    for (int i : side) {
      if (i != extra_index) w.indices.push_back(i);
    }
  } else {
    std::vector<char> in_side(a.size(), 0);
    for (int i : side) in_side[i] = 1;
    for (int i = 0; i < extra_index; ++i) {
      if (!in_side[i]) w.indices.push_back(i);
    }
  }
  for (int i : w.indices) w.sum += a[i];
  WSUB_CHECK(verify_witness(a, w, k), "mapped-back witness does not sum to k");
  out.decision = Decision::yes;
  out.witness = std::move(w);
  out.steps = part.steps;
  return out;
}

SubsetAnswer oracle_subset_sum(const Multiset& a, Weight k) {
  const Weight total = a.total();
  if (static_cast<Weight>(a.size()) > kOracleCellLimit / (total + 1)) {
    throw Error(ErrorKind::instance_too_large, "oracle table N * total exceeds " + std::to_string(kOracleCellLimit));
  }
  SubsetAnswer out;
  out.decision = Decision::no;
  if (k < 0 || k > total) return out;

  // from[s]: the item that first made s reachable; earlier items reach s - a[from[s]].
  std::vector<int> from(static_cast<std::size_t>(total) + 1, -1);
  std::vector<char> reach(static_cast<std::size_t>(total) + 1, 0);
  reach[0] = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (Weight s = total; s >= a[i]; --s) {
      if (!reach[s] && reach[s - a[i]]) {
        reach[s] = 1;
        from[s] = static_cast<int>(i);
      }
    }
  }
  if (!reach[k]) return out;
  SubsetWitness w;
  for (Weight s = k; s > 0; s -= a[from[s]]) w.indices.push_back(from[s]);
  std::reverse(w.indices.begin(), w.indices.end());
  w.sum = k;
  out.decision = Decision::yes;
  out.witness = std::move(w);
  return out;
}

bool verify_witness(const Multiset& a, const SubsetWitness& witness, Weight k) {
  Weight sum = 0;
  for (std::size_t j = 0; j < witness.indices.size(); ++j) {
    const int i = witness.indices[j];
    if (i < 0 || static_cast<std::size_t>(i) >= a.size()) return false;
    if (j > 0 && witness.indices[j - 1] >= i) return false;
    sum += a[i];
  }
  return sum == k && witness.sum == k;
}

Multiset parse_multiset(std::string_view text) {
  std::vector<Weight> values;
  std::size_t pos = 0;
  auto separator = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    if (separator(text[pos])) {
      ++pos;
      continue;
    }
    Weight v = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || (ptr != end && !separator(*ptr))) {
      throw Error(ErrorKind::syntax, "column " + std::to_string(pos + 1) + ": expected an integer");
    }
    values.push_back(v);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return Multiset(std::move(values));
}

}  // namespace wsub
