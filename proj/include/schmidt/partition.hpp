#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schmidt {

using Part = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// Thrown when a sequence violates the partition invariants.
class InvalidPartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * An ordinary integer partition: a weakly decreasing sequence of positive
 * parts. The empty sequence is the partition of zero. Canonical form never
 * carries zeros; fixed-length vectors that may contain zeros live in
 * BoundedVector and the bijection intermediates instead.
 */
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts)
      : Partition(std::vector<Part>(parts)) {}

  // Drops trailing zeros, then validates.
  static Partition trimmed(std::vector<Part> parts);

  const std::vector<Part>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Part largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  Part weight() const noexcept;

  Part operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
};

bool is_weakly_decreasing(std::span<const Part> seq) noexcept;
bool is_strictly_decreasing(std::span<const Part> seq) noexcept;
Part sum(std::span<const Part> seq) noexcept;

/// Sum of the parts in positions 1, 3, 5, ... (one-based).
Part alternating_sum(std::span<const Part> seq) noexcept;
inline Part alternating_sum(const Partition& p) noexcept {
  return alternating_sum(std::span<const Part>(p.parts()));
}

Partition conjugate(const Partition& p);

/// A partition whose parts each carry one of two colours, stored as the
/// pair (red, green).
struct TwoColorPartition {
  Partition red;
  Partition green;

  Part weight() const noexcept { return red.weight() + green.weight(); }
  std::size_t red_count() const noexcept { return red.length(); }
  std::size_t green_count() const noexcept { return green.length(); }
  bool empty() const noexcept { return red.empty() && green.empty(); }

  friend bool operator==(const TwoColorPartition&,
                         const TwoColorPartition&) = default;
};

/// Canonical listing order for two-colour partitions of a fixed weight.
///
/// Size profiles (all parts merged, descending) are compared in descending
/// lexicographic order. Within one size profile the colour word, written with
/// red before green among equal sizes, is compared starting from its smallest
/// part, red first. For weight 3 this gives
/// 3r, 3g, 2r+1r, 2g+1r, 2r+1g, 2g+1g, 1r+1r+1r, 1r+1r+1g, 1r+1g+1g, 1g+1g+1g.
bool canonical_less(const TwoColorPartition& a, const TwoColorPartition& b);

/// Statistics (n, r, l, p, q) of the four-variable refinement.
struct RefinedQuery {
  Part n = 0;
  Part r = 1;
  Part l = 1;
  Part p = 1;
  Part q = 1;

  // Throws std::invalid_argument unless n >= 0 and r, l, p, q >= 1.
  void validate() const;

  friend bool operator==(const RefinedQuery&, const RefinedQuery&) = default;
  friend auto operator<=>(const RefinedQuery&, const RefinedQuery&) = default;
};

/// Fixed-length weakly decreasing vector of nonnegative integers. Trailing
/// zeros are significant.
class BoundedVector {
 public:
  explicit BoundedVector(std::vector<Part> entries);

  const std::vector<Part>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const BoundedVector&, const BoundedVector&) = default;
  friend auto operator<=>(const BoundedVector&, const BoundedVector&) = default;

 private:
  std::vector<Part> entries_;
};

}  // namespace schmidt
