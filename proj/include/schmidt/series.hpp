#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "schmidt/partition.hpp"

namespace schmidt {

/// Power series in q truncated after q^N, with exact integer coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  explicit TruncatedSeries(std::vector<BigInt> coefficients);
  TruncatedSeries(std::initializer_list<long long> coefficients);

  // 1 - q^k truncated at `order`.
  static TruncatedSeries one_minus_q_power(std::size_t k, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t k) const { return coeffs_[k]; }
  BigInt& operator[](std::size_t k) { return coeffs_[k]; }

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Throws std::invalid_argument when the truncation orders differ.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Throws std::domain_error unless the constant term is 1 or -1.
TruncatedSeries series_recip(const TruncatedSeries& a);

/// Coefficients of prod_{k>=1} (1 - q^k)^-2 through q^N.
std::vector<BigInt> two_color_coefficients(std::size_t order);

}  // namespace schmidt
