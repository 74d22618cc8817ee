#pragma once

#include <functional>
#include <vector>

#include "schmidt/partition.hpp"

namespace schmidt {

/// Visits every partition of `n` with all parts <= `max_part`, in descending
/// lexicographic order.
void for_each_partition(Part n, Part max_part,
                        const std::function<void(const Partition&)>& visit);

/// Same, restricted to partitions with exactly `count` parts.
void for_each_partition_with_length(
    Part n, Part count, Part max_part,
    const std::function<void(const Partition&)>& visit);

std::vector<Partition> partitions_of(Part n);

/**
 * Visits every partition whose odd-indexed parts (1st, 3rd, ...) sum to `n`,
 * in descending lexicographic order.
 *
 * Built pair by pair: each odd-indexed part is chosen first out of what is
 * left of `n`, then the even-indexed part that follows it is chosen between 1
 * and that odd part. The next odd part is bounded by the even part before
 * it, so the search is finite without any weight cap.
 */
void for_each_schmidt(Part n,
                      const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_schmidt(Part n);
BigInt count_schmidt(Part n);

/// Visits every pair (red, green) of total weight `n`. Order: red weight
/// descending, then red and green partitions in descending lexicographic
/// order. `enumerate_two_color` returns the canonical listing order instead.
void for_each_two_color(
    Part n, const std::function<void(const TwoColorPartition&)>& visit);
std::vector<TwoColorPartition> enumerate_two_color(Part n);
BigInt count_two_color(Part n);

/// Two-colour partitions of rq.n with exactly rq.r red parts, all <= rq.p, and
/// exactly rq.l green parts, all <= rq.q. Canonical order.
std::vector<TwoColorPartition> enumerate_two_color_refined(
    const RefinedQuery& rq);

/// Weakly decreasing vectors of length exactly 2*max(r, l) with entries in
/// [0, p + q] and alternating sum n. Descending lexicographic order.
std::vector<BoundedVector> enumerate_schmidt_refined_literal(
    const RefinedQuery& rq);

}  // namespace schmidt
