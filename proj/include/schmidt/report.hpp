#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/partition.hpp"

namespace schmidt {

enum class ReportFormat { text, csv, json };

struct VerifyOptions {
  Part max_n = 20;
  Part roundtrip_cutoff = 12;
  unsigned workers = 1;
};

struct VerifyRecord {
  Part n = 0;
  BigInt s_count;
  BigInt t_count;
  BigInt series_count;
  std::size_t round_trips_checked = 0;
  bool pass = false;
  std::optional<std::string> witness;  // first failure seen for this n
};

struct VerifyReport {
  std::vector<VerifyRecord> records;  // ascending n
  bool pass = false;
};

/// For each 1 <= n <= max_n compares both enumeration counts with the series
/// coefficient and, up to the cutoff, checks phi and phi_inverse against each
/// other on every object of weight n.
VerifyReport run_verify(const VerifyOptions& options);

struct RefinedBounds {
  Part max_n = 8;
  Part max_r = 3;
  Part max_l = 3;
  Part max_p = 3;
  Part max_q = 3;
  unsigned workers = 1;
};

struct RefinedRecord {
  RefinedQuery query;
  BigInt t_refined;
  BigInt s_literal;
  BigInt transported;
  bool literal_match = false;
  bool transported_match = false;
};

struct RefinedReport {
  std::vector<RefinedRecord> records;  // ascending (n, r, l, p, q)
  bool pass = false;                   // every transported_match holds
};

/// Evaluates every query with 1 <= n, r, l, p, q <= the bounds.
///
/// t_refined comes from the refined two-colour enumerator and s_literal from
/// the fixed-length vector enumerator. `transported` counts partitions with
/// alternating sum n whose phi_inverse has exactly r red parts (all <= p) and
/// exactly l green parts (all <= q).
RefinedReport run_refined(const RefinedBounds& bounds);

void write_report(std::ostream& out, const VerifyReport& report,
                  ReportFormat format);
void write_report(std::ostream& out, const RefinedReport& report,
                  ReportFormat format);

}  // namespace schmidt
