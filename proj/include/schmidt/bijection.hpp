#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "schmidt/partition.hpp"

namespace schmidt {

// A step of the bijection was asked to act on something it never produces.
class NotInImage : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class EmptyInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Wright's cell set did not form a Young diagram.
class MalformedPair : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The red and green sequences padded with zeros to the common length
/// m = max(r, l).
struct PaddedPair {
  std::vector<Part> red;
  std::vector<Part> green;

  std::size_t m() const noexcept { return red.size(); }

  friend bool operator==(const PaddedPair&, const PaddedPair&) = default;
};

/// Two strictly decreasing nonnegative sequences of a common length m >= 1:
/// arm lengths (alpha_bar) and leg lengths (beta_bar) of the diagonal cells.
class DistinctPair {
 public:
  // Throws std::invalid_argument if the invariants fail.
  DistinctPair(std::vector<Part> arms, std::vector<Part> legs);

  const std::vector<Part>& arms() const noexcept { return arms_; }
  const std::vector<Part>& legs() const noexcept { return legs_; }
  std::size_t m() const noexcept { return arms_.size(); }

  friend bool operator==(const DistinctPair&, const DistinctPair&) = default;

 private:
  std::vector<Part> arms_;
  std::vector<Part> legs_;
};

/// Young diagram given by its row lengths. The 2-modular reading of a row of
/// length k is k-1 twos followed by a single 1.
struct Shape {
  Partition rows;

  std::size_t durfee_size() const noexcept;

  friend bool operator==(const Shape&, const Shape&) = default;
};

/// (cells in hook 1, twos in hook 1, cells in hook 2, twos in hook 2, ...).
/// Strictly decreasing, nonnegative, even length 2m with m >= 1.
class HookVector {
 public:
  // Throws NotInImage if the sequence is not a valid hook vector.
  static HookVector from(std::vector<Part> mu);

  const std::vector<Part>& values() const noexcept { return mu_; }
  std::size_t m() const noexcept { return mu_.size() / 2; }
  Part cells(std::size_t hook) const { return mu_[2 * hook]; }
  Part twos(std::size_t hook) const { return mu_[2 * hook + 1]; }
  Part ones(std::size_t hook) const { return cells(hook) - twos(hook); }

  friend bool operator==(const HookVector&, const HookVector&) = default;

 private:
  explicit HookVector(std::vector<Part> mu) : mu_(std::move(mu)) {}
  std::vector<Part> mu_;
};

PaddedPair pad_colors(const TwoColorPartition& lambda);

/// Adds the staircase (m-1, ..., 1, 0) to both padded sequences.
DistinctPair add_staircase(const PaddedPair& pp);

/// Result of stripping the staircase from a DistinctPair.
struct Unstaircased {
  TwoColorPartition lambda;
  bool red_longer = false;  // r > l; otherwise green was (weakly) longer
};

Unstaircased remove_staircase(const DistinctPair& dp);

/// Diagonal of m cells, arm j of length arms[j] to its right and leg j of
/// length legs[j] below it.
Shape wright_build(const DistinctPair& dp);
DistinctPair wright_split(const Shape& s);

HookVector hook_decompose(const Shape& s);

/**
 * Inverse of hook_decompose on diagrams produced by wright_build.
 *
 * In such diagrams the rows of length exactly j (j <= m) all lie below the
 * diagonal, so hook j holds 1 + #{rows of length j below row m} ones. Summing
 * those counts from the innermost hook outward recovers the legs:
 *
 *   legs[j] = (m - 1 - j) + sum_{k >= j} (ones_k - 1)       (zero-based j)
 *   arms[j] = cells_j - 1 - legs[j]
 *
 * The result is decomposed again and compared with the input before being
 * returned; any disagreement is reported as NotInImage.
 */
Shape hook_compose(const HookVector& hv);

/// Subtracts (2m-1, 2m-2, ..., 1) from all but the last entry and trims
/// trailing zeros.
Partition gamma_from_mu(const HookVector& hv);
HookVector mu_from_gamma(const Partition& gamma);

/// The full map from two-colour partitions of n to partitions whose
/// odd-indexed parts sum to n. phi of the empty pair is the empty partition.
Partition phi(const TwoColorPartition& lambda);
TwoColorPartition phi_inverse(const Partition& gamma);

/// Every intermediate object produced by phi, for display.
struct PhiTrace {
  TwoColorPartition input;
  PaddedPair padded;
  DistinctPair distinct;
  Shape shape;
  HookVector mu;
  Partition gamma;
};

// Throws EmptyInput for the empty pair.
PhiTrace trace_phi(const TwoColorPartition& lambda);

}  // namespace schmidt
