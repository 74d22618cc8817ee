#include "schmidt/bijection.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace schmidt {

namespace {

Part staircase(std::size_t m, std::size_t j) {
  return static_cast<Part>(m - 1 - j);
}

std::vector<Part> padded(const Partition& p, std::size_t m) {
  std::vector<Part> out = p.parts();
  out.resize(m, 0);
  return out;
}

std::size_t positive_prefix(const std::vector<Part>& seq) {
  return static_cast<std::size_t>(
      std::count_if(seq.begin(), seq.end(), [](Part v) { return v > 0; }));
}

}  // namespace

DistinctPair::DistinctPair(std::vector<Part> arms, std::vector<Part> legs)
    : arms_(std::move(arms)), legs_(std::move(legs)) {
  if (arms_.empty() || arms_.size() != legs_.size())
    throw std::invalid_argument(
        "distinct pair: sequences must share a positive length");
  if (!is_strictly_decreasing(arms_) || !is_strictly_decreasing(legs_))
    throw std::invalid_argument(
        "distinct pair: sequences must be strictly decreasing");
  if (arms_.back() < 0 || legs_.back() < 0)
    throw std::invalid_argument("distinct pair: entries must be nonnegative");
}

std::size_t Shape::durfee_size() const noexcept {
  std::size_t d = 0;
  while (d < rows.length() && rows[d] >= static_cast<Part>(d + 1)) ++d;
  return d;
}

HookVector HookVector::from(std::vector<Part> mu) {
  if (mu.empty() || mu.size() % 2 != 0)
    throw NotInImage("hook vector must have positive even length");
  if (!is_strictly_decreasing(mu))
    throw NotInImage("hook vector entries must be distinct and decreasing");
  if (mu.back() < 0) throw NotInImage("hook vector entries must be >= 0");
  return HookVector(std::move(mu));
}

PaddedPair pad_colors(const TwoColorPartition& lambda) {
  if (lambda.empty()) throw EmptyInput("pad_colors: empty two-colour partition");
  const std::size_t m = std::max(lambda.red_count(), lambda.green_count());
  return PaddedPair{padded(lambda.red, m), padded(lambda.green, m)};
}

DistinctPair add_staircase(const PaddedPair& pp) {
  const std::size_t m = pp.m();
  if (m == 0 || pp.green.size() != m)
    throw std::invalid_argument("add_staircase: malformed padded pair");
  std::vector<Part> arms(m), legs(m);
  for (std::size_t j = 0; j < m; ++j) {
    arms[j] = pp.red[j] + staircase(m, j);
    legs[j] = pp.green[j] + staircase(m, j);
  }
  return DistinctPair(std::move(arms), std::move(legs));
}

Unstaircased remove_staircase(const DistinctPair& dp) {
  const std::size_t m = dp.m();
  std::vector<Part> red(m), green(m);
  for (std::size_t j = 0; j < m; ++j) {
    red[j] = dp.arms()[j] - staircase(m, j);
    green[j] = dp.legs()[j] - staircase(m, j);
    if (red[j] < 0 || green[j] < 0)
      throw NotInImage("remove_staircase: negative entry after subtraction");
  }
  const std::size_t r = positive_prefix(red);
  const std::size_t l = positive_prefix(green);
  if (std::max(r, l) != m)
    throw NotInImage("remove_staircase: neither colour has m parts (m=" +
                     std::to_string(m) + ")");
  return Unstaircased{
      TwoColorPartition{Partition::trimmed(std::move(red)),
                        Partition::trimmed(std::move(green))},
      r > l};
}

Shape wright_build(const DistinctPair& dp) {
  const std::size_t m = dp.m();
  std::size_t height = m, width = m;
  for (std::size_t j = 0; j < m; ++j) {
    height = std::max(height, j + 1 + static_cast<std::size_t>(dp.legs()[j]));
    width = std::max(width, j + 1 + static_cast<std::size_t>(dp.arms()[j]));
  }
  std::vector<std::vector<int>> grid(height, std::vector<int>(width, 0));
  for (std::size_t j = 0; j < m; ++j) {
    ++grid[j][j];
    for (Part k = 1; k <= dp.arms()[j]; ++k) ++grid[j][j + k];
    for (Part k = 1; k <= dp.legs()[j]; ++k) ++grid[j + k][j];
  }
  std::vector<Part> rows;
  for (const auto& line : grid) {
    const auto first_empty = std::find(line.begin(), line.end(), 0);
    if (std::any_of(line.begin(), line.end(), [](int c) { return c > 1; }) ||
        std::any_of(first_empty, line.end(), [](int c) { return c != 0; }))
      throw MalformedPair("wright_build: cells are not left-justified");
    rows.push_back(first_empty - line.begin());
  }
  try {
    return Shape{Partition(std::move(rows))};
  } catch (const InvalidPartition&) {
    throw MalformedPair("wright_build: row lengths are not a partition");
  }
}

DistinctPair wright_split(const Shape& s) {
  if (s.rows.empty()) throw EmptyInput("wright_split: empty shape");
  const std::size_t m = s.durfee_size();
  const Partition cols = conjugate(s.rows);
  std::vector<Part> arms(m), legs(m);
  for (std::size_t j = 0; j < m; ++j) {
    arms[j] = s.rows[j] - static_cast<Part>(j + 1);
    legs[j] = cols[j] - static_cast<Part>(j + 1);
  }
  return DistinctPair(std::move(arms), std::move(legs));
}

HookVector hook_decompose(const Shape& s) {
  if (s.rows.empty()) throw EmptyInput("hook_decompose: empty shape");
  const std::size_t m = s.durfee_size();
  const Partition cols = conjugate(s.rows);
  const auto& rows = s.rows.parts();
  std::vector<Part> mu;
  mu.reserve(2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto diag = static_cast<Part>(j + 1);
    const Part cells = (rows[j] - diag + 1) + (cols[j] - diag);
    // the arm always ends its row; leg cells end theirs when the row is j+1 long
    const auto leg_ones =
        std::count(rows.begin() + static_cast<std::ptrdiff_t>(j + 1),
                   rows.end(), diag);
    mu.push_back(cells);
    mu.push_back(cells - 1 - leg_ones);
  }
  return HookVector::from(std::move(mu));
}

Shape hook_compose(const HookVector& hv) {
  const std::size_t m = hv.m();
  std::vector<Part> arms(m), legs(m);
  Part tail = 0;
  for (std::size_t j = m; j-- > 0;) {
    tail += hv.ones(j) - 1;
    legs[j] = staircase(m, j) + tail;
    arms[j] = hv.cells(j) - 1 - legs[j];
  }
  Shape shape;
  try {
    shape = wright_build(DistinctPair(std::move(arms), std::move(legs)));
  } catch (const std::invalid_argument& e) {
    throw NotInImage(std::string("hook_compose: ") + e.what());
  } catch (const MalformedPair& e) {
    throw NotInImage(std::string("hook_compose: ") + e.what());
  }
  if (hook_decompose(shape) != hv)
    throw NotInImage("hook_compose: reconstruction does not decompose back");
  return shape;
}

Partition gamma_from_mu(const HookVector& hv) {
  const auto& mu = hv.values();
  const std::size_t len = mu.size();
  std::vector<Part> gamma(len);
  for (std::size_t i = 0; i < len; ++i) {
    gamma[i] = i + 1 < len ? mu[i] - static_cast<Part>(len - 1 - i) : mu[i];
    if (gamma[i] < 0) throw NotInImage("gamma_from_mu: negative entry");
  }
  try {
    return Partition::trimmed(std::move(gamma));
  } catch (const InvalidPartition& e) {
    throw NotInImage(std::string("gamma_from_mu: ") + e.what());
  }
}

HookVector mu_from_gamma(const Partition& gamma) {
  if (gamma.empty()) throw EmptyInput("mu_from_gamma: empty partition");
  const std::size_t len = 2 * ((gamma.length() + 1) / 2);
  std::vector<Part> mu = gamma.parts();
  mu.resize(len, 0);
  for (std::size_t i = 0; i + 1 < len; ++i)
    mu[i] += static_cast<Part>(len - 1 - i);
  return HookVector::from(std::move(mu));
}

Partition phi(const TwoColorPartition& lambda) {
  if (lambda.empty()) return Partition{};
  return gamma_from_mu(
      hook_decompose(wright_build(add_staircase(pad_colors(lambda)))));
}

TwoColorPartition phi_inverse(const Partition& gamma) {
  if (gamma.empty()) return TwoColorPartition{};
  try {
    return remove_staircase(wright_split(hook_compose(mu_from_gamma(gamma))))
        .lambda;
  } catch (const NotInImage& e) {
    throw std::logic_error(std::string("phi_inverse invariant broken: ") +
                           e.what());
  }
}

PhiTrace trace_phi(const TwoColorPartition& lambda) {
  PaddedPair padded_pair = pad_colors(lambda);
  DistinctPair distinct = add_staircase(padded_pair);
  Shape shape = wright_build(distinct);
  HookVector mu = hook_decompose(shape);
  Partition gamma = gamma_from_mu(mu);
  return PhiTrace{lambda,         std::move(padded_pair), std::move(distinct),
                  std::move(shape), std::move(mu),        std::move(gamma)};
}

}  // namespace schmidt
