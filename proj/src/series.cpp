#include "schmidt/series.hpp"

#include <stdexcept>
#include <utility>

namespace schmidt {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty())
    throw std::invalid_argument("truncated series needs at least one term");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long long> coefficients)
    : coeffs_(coefficients.begin(), coefficients.end()) {
  if (coeffs_.empty())
    throw std::invalid_argument("truncated series needs at least one term");
}

TruncatedSeries TruncatedSeries::one_minus_q_power(std::size_t k,
                                                   std::size_t order) {
  TruncatedSeries s(order);
  s[0] = 1;
  if (k <= order) s[k] -= 1;
  return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series_mul: truncation orders differ");
  const std::size_t order = a.order();
  TruncatedSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries series_recip(const TruncatedSeries& a) {
  const BigInt& c0 = a[0];
  if (c0 != 1 && c0 != -1)
    throw std::domain_error("series_recip: constant term is not a unit");
  const std::size_t order = a.order();
  TruncatedSeries out(order);
  out[0] = c0;  // 1/c0 == c0 for units
  for (std::size_t k = 1; k <= order; ++k) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * out[k - i];
    out[k] = -acc * c0;
  }
  return out;
}

std::vector<BigInt> two_color_coefficients(std::size_t order) {
  TruncatedSeries euler(order);
  euler[0] = 1;
  for (std::size_t k = 1; k <= order; ++k)
    euler = series_mul(euler, TruncatedSeries::one_minus_q_power(k, order));
  return series_recip(series_mul(euler, euler)).coefficients();
}

}  // namespace schmidt
