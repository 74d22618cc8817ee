#include "schmidt/partition.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace schmidt {

bool is_weakly_decreasing(std::span<const Part> seq) noexcept {
  return std::adjacent_find(seq.begin(), seq.end(), std::less<>{}) ==
         seq.end();
}

bool is_strictly_decreasing(std::span<const Part> seq) noexcept {
  return std::adjacent_find(seq.begin(), seq.end(), std::less_equal<>{}) ==
         seq.end();
}

Part sum(std::span<const Part> seq) noexcept {
  return std::accumulate(seq.begin(), seq.end(), Part{0});
}

Part alternating_sum(std::span<const Part> seq) noexcept {
  Part total = 0;
  for (std::size_t i = 0; i < seq.size(); i += 2) total += seq[i];
  return total;
}

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  if (!is_weakly_decreasing(parts_))
    throw InvalidPartition("partition parts must be weakly decreasing");
  if (!parts_.empty() && parts_.back() < 1)
    throw InvalidPartition("partition parts must be positive");
}

Partition Partition::trimmed(std::vector<Part> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Part Partition::weight() const noexcept { return sum(parts_); }

Partition conjugate(const Partition& p) {
  std::vector<Part> out(static_cast<std::size_t>(p.largest()), 0);
  for (Part row : p.parts())
    for (Part c = 0; c < row; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

namespace {

struct ColoredProfile {
  std::vector<Part> sizes;
  std::vector<int> colors;  // 0 red, 1 green
};

ColoredProfile profile(const TwoColorPartition& x) {
  std::vector<std::pair<Part, int>> cells;
  for (Part v : x.red.parts()) cells.emplace_back(v, 0);
  for (Part v : x.green.parts()) cells.emplace_back(v, 1);
  std::stable_sort(cells.begin(), cells.end(), [](auto& a, auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  ColoredProfile out;
  for (auto [size, color] : cells) {
    out.sizes.push_back(size);
    out.colors.push_back(color);
  }
  return out;
}

}  // namespace

bool canonical_less(const TwoColorPartition& a, const TwoColorPartition& b) {
  const ColoredProfile pa = profile(a);
  const ColoredProfile pb = profile(b);
  if (pa.sizes != pb.sizes) return pa.sizes > pb.sizes;
  return std::lexicographical_compare(pa.colors.rbegin(), pa.colors.rend(),
                                      pb.colors.rbegin(), pb.colors.rend());
}

void RefinedQuery::validate() const {
  if (n < 0) throw std::invalid_argument("refined query: n must be >= 0");
  if (r < 1 || l < 1 || p < 1 || q < 1)
    throw std::invalid_argument("refined query: r, l, p, q must be >= 1");
}

BoundedVector::BoundedVector(std::vector<Part> entries)
    : entries_(std::move(entries)) {
  if (!is_weakly_decreasing(entries_))
    throw InvalidPartition("bounded vector must be weakly decreasing");
  if (!entries_.empty() && entries_.back() < 0)
    throw InvalidPartition("bounded vector entries must be nonnegative");
}

}  // namespace schmidt
