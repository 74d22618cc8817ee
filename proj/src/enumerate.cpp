#include "schmidt/enumerate.hpp"

#include <algorithm>

namespace schmidt {

namespace {

using PartitionVisitor = std::function<void(const Partition&)>;

void partitions_rec(Part rem, Part bound, std::vector<Part>& prefix,
                    const PartitionVisitor& visit) {
  if (rem == 0) {
    visit(Partition(prefix));
    return;
  }
  for (Part a = std::min(rem, bound); a >= 1; --a) {
    prefix.push_back(a);
    partitions_rec(rem - a, a, prefix, visit);
    prefix.pop_back();
  }
}

void partitions_with_length_rec(Part rem, Part left, Part bound,
                                std::vector<Part>& prefix,
                                const PartitionVisitor& visit) {
  if (left == 0) {
    if (rem == 0) visit(Partition(prefix));
    return;
  }
  const Part hi = std::min(bound, rem - (left - 1));
  const Part lo = std::max<Part>(1, (rem + left - 1) / left);
  for (Part a = hi; a >= lo; --a) {
    prefix.push_back(a);
    partitions_with_length_rec(rem - a, left - 1, a, prefix, visit);
    prefix.pop_back();
  }
}

// `prefix` always has even length on entry.
void schmidt_rec(Part rem, Part bound, std::vector<Part>& prefix,
                 const PartitionVisitor& visit) {
  if (rem == 0) {
    visit(Partition(prefix));
    return;
  }
  for (Part odd = std::min(rem, bound); odd >= 1; --odd) {
    prefix.push_back(odd);
    for (Part even = odd; even >= 1; --even) {
      prefix.push_back(even);
      schmidt_rec(rem - odd, even, prefix, visit);
      prefix.pop_back();
    }
    if (odd == rem) visit(Partition(prefix));
    prefix.pop_back();
  }
}

void literal_rec(std::size_t pos, std::size_t length, Part bound, Part rem,
                 std::vector<Part>& prefix, std::vector<BoundedVector>& out) {
  if (pos == length) {
    if (rem == 0) out.emplace_back(prefix);
    return;
  }
  const bool odd_slot = pos % 2 == 0;
  // odd-indexed slots after this one
  const auto later_odd = static_cast<Part>((length - pos - 1) / 2);
  for (Part v = bound; v >= 0; --v) {
    if (odd_slot) {
      if (v > rem) continue;
      if (rem - v > v * later_odd) break;
    } else if (rem > v * later_odd) {
      break;
    }
    prefix.push_back(v);
    literal_rec(pos + 1, length, v, odd_slot ? rem - v : rem, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(Part n, Part max_part, const PartitionVisitor& visit) {
  if (n < 0) return;
  std::vector<Part> prefix;
  partitions_rec(n, max_part, prefix, visit);
}

void for_each_partition_with_length(Part n, Part count, Part max_part,
                                    const PartitionVisitor& visit) {
  if (n < 0 || count < 0) return;
  std::vector<Part> prefix;
  partitions_with_length_rec(n, count, max_part, prefix, visit);
}

std::vector<Partition> partitions_of(Part n) {
  std::vector<Partition> out;
  for_each_partition(n, n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_schmidt(Part n, const PartitionVisitor& visit) {
  if (n < 0) return;
  std::vector<Part> prefix;
  schmidt_rec(n, n, prefix, visit);
}

std::vector<Partition> enumerate_schmidt(Part n) {
  std::vector<Partition> out;
  for_each_schmidt(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

BigInt count_schmidt(Part n) {
  BigInt count = 0;
  for_each_schmidt(n, [&](const Partition&) { ++count; });
  return count;
}

void for_each_two_color(
    Part n, const std::function<void(const TwoColorPartition&)>& visit) {
  if (n < 0) return;
  for (Part red_weight = n; red_weight >= 0; --red_weight) {
    const auto greens = partitions_of(n - red_weight);
    for_each_partition(red_weight, red_weight, [&](const Partition& red) {
      for (const auto& green : greens) visit(TwoColorPartition{red, green});
    });
  }
}

std::vector<TwoColorPartition> enumerate_two_color(Part n) {
  std::vector<TwoColorPartition> out;
  for_each_two_color(n, [&](const TwoColorPartition& x) { out.push_back(x); });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

BigInt count_two_color(Part n) {
  BigInt count = 0;
  for_each_two_color(n, [&](const TwoColorPartition&) { ++count; });
  return count;
}

std::vector<TwoColorPartition> enumerate_two_color_refined(
    const RefinedQuery& rq) {
  rq.validate();
  std::vector<TwoColorPartition> out;
  for (Part red_weight = rq.n; red_weight >= 0; --red_weight) {
    std::vector<Partition> greens;
    for_each_partition_with_length(
        rq.n - red_weight, rq.l, rq.q,
        [&](const Partition& g) { greens.push_back(g); });
    if (greens.empty()) continue;
    for_each_partition_with_length(
        red_weight, rq.r, rq.p, [&](const Partition& red) {
          for (const auto& green : greens)
            out.push_back(TwoColorPartition{red, green});
        });
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<BoundedVector> enumerate_schmidt_refined_literal(
    const RefinedQuery& rq) {
  rq.validate();
  const auto length = static_cast<std::size_t>(2 * std::max(rq.r, rq.l));
  std::vector<BoundedVector> out;
  std::vector<Part> prefix;
  literal_rec(0, length, rq.p + rq.q, rq.n, prefix, out);
  return out;
}

}  // namespace schmidt
