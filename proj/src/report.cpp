#include "schmidt/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "schmidt/bijection.hpp"
#include "schmidt/enumerate.hpp"
#include "schmidt/series.hpp"
#include "schmidt/text.hpp"

namespace schmidt {

namespace {

// Runs task(i) for i in [0, count). Each task writes only its own slot, so
// the merged output does not depend on scheduling.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& task) {
  workers = std::max(1u, std::min<unsigned>(
                             workers, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
}

const char* flag(bool b) { return b ? "true" : "false"; }

nlohmann::json big_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() &&
      v >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(v);
  return v.str();
}

void check_round_trips(Part n, VerifyRecord& rec) {
  auto fail = [&](std::string what) {
    rec.pass = false;
    if (!rec.witness) rec.witness = std::move(what);
  };
  for_each_two_color(n, [&](const TwoColorPartition& lambda) {
    ++rec.round_trips_checked;
    try {
      const Partition gamma = phi(lambda);
      if (alternating_sum(gamma) != n)
        fail("phi(" + format_colored(lambda) + ") = " +
             format_partition(gamma) + " has the wrong alternating sum");
      else if (phi_inverse(gamma) != lambda)
        fail("phi_inverse(phi(" + format_colored(lambda) + ")) = " +
             format_colored(phi_inverse(gamma)));
    } catch (const std::exception& e) {
      fail(format_colored(lambda) + ": " + e.what());
    }
  });
  for_each_schmidt(n, [&](const Partition& gamma) {
    ++rec.round_trips_checked;
    try {
      const TwoColorPartition lambda = phi_inverse(gamma);
      if (lambda.weight() != n)
        fail("phi_inverse(" + format_partition(gamma) + ") = " +
             format_colored(lambda) + " has the wrong weight");
      else if (phi(lambda) != gamma)
        fail("phi(phi_inverse(" + format_partition(gamma) + ")) = " +
             format_partition(phi(lambda)));
    } catch (const std::exception& e) {
      fail(format_partition(gamma) + ": " + e.what());
    }
  });
}

struct PreimageStats {
  Part r, l, largest_red, largest_green;
};

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.max_n < 1)
    throw std::invalid_argument("verify: max_n must be at least 1");
  const auto series =
      two_color_coefficients(static_cast<std::size_t>(options.max_n));
  VerifyReport report;
  report.records.resize(static_cast<std::size_t>(options.max_n));
  parallel_for(report.records.size(), options.workers, [&](std::size_t i) {
    VerifyRecord& rec = report.records[i];
    rec.n = static_cast<Part>(i + 1);
    rec.s_count = count_schmidt(rec.n);
    rec.t_count = count_two_color(rec.n);
    rec.series_count = series[i + 1];
    rec.pass = rec.s_count == rec.t_count && rec.t_count == rec.series_count;
    if (!rec.pass)
      rec.witness = "count mismatch s=" + rec.s_count.str() +
                    " t=" + rec.t_count.str() +
                    " series=" + rec.series_count.str();
    if (rec.n <= options.roundtrip_cutoff) check_round_trips(rec.n, rec);
  });
  report.pass = std::all_of(report.records.begin(), report.records.end(),
                            [](const VerifyRecord& r) { return r.pass; });
  return report;
}

RefinedReport run_refined(const RefinedBounds& b) {
  if (std::min({b.max_n, b.max_r, b.max_l, b.max_p, b.max_q}) < 1)
    throw std::invalid_argument("refined: all bounds must be at least 1");

  std::vector<std::vector<PreimageStats>> stats(
      static_cast<std::size_t>(b.max_n));
  parallel_for(stats.size(), b.workers, [&](std::size_t i) {
    for_each_schmidt(static_cast<Part>(i + 1), [&](const Partition& gamma) {
      const TwoColorPartition pre = phi_inverse(gamma);
      stats[i].push_back({static_cast<Part>(pre.red_count()),
                          static_cast<Part>(pre.green_count()),
                          pre.red.largest(), pre.green.largest()});
    });
  });

  RefinedReport report;
  for (Part n = 1; n <= b.max_n; ++n)
    for (Part r = 1; r <= b.max_r; ++r)
      for (Part l = 1; l <= b.max_l; ++l)
        for (Part p = 1; p <= b.max_p; ++p)
          for (Part q = 1; q <= b.max_q; ++q)
            report.records.push_back(RefinedRecord{{n, r, l, p, q}, 0, 0, 0});

  parallel_for(report.records.size(), b.workers, [&](std::size_t i) {
    RefinedRecord& rec = report.records[i];
    const RefinedQuery& rq = rec.query;
    rec.t_refined = enumerate_two_color_refined(rq).size();
    rec.s_literal = enumerate_schmidt_refined_literal(rq).size();
    const auto& pool = stats[static_cast<std::size_t>(rq.n - 1)];
    rec.transported = std::count_if(
        pool.begin(), pool.end(), [&](const PreimageStats& s) {
          return s.r == rq.r && s.l == rq.l && s.largest_red <= rq.p &&
                 s.largest_green <= rq.q;
        });
    rec.literal_match = rec.s_literal == rec.t_refined;
    rec.transported_match = rec.transported == rec.t_refined;
  });
  report.pass =
      std::all_of(report.records.begin(), report.records.end(),
                  [](const RefinedRecord& r) { return r.transported_match; });
  return report;
}

void write_report(std::ostream& out, const VerifyReport& report,
                  ReportFormat format) {
  switch (format) {
    case ReportFormat::text: {
      const VerifyRecord* first_failure = nullptr;
      for (const auto& r : report.records) {
        out << "n=" << r.n << " s=" << r.s_count << " t=" << r.t_count
            << " series=" << r.series_count
            << " round_trips=" << r.round_trips_checked << ' '
            << (r.pass ? "pass" : "FAIL") << '\n';
        if (!r.pass && !first_failure) first_failure = &r;
      }
      if (first_failure)
        out << "first failure: n=" << first_failure->n << ": "
            << first_failure->witness.value_or("unknown") << '\n';
      out << "overall: " << (report.pass ? "PASS" : "FAIL") << '\n';
      break;
    }
    case ReportFormat::csv:
      out << "n,s,t,series,pass\n";
      for (const auto& r : report.records)
        out << r.n << ',' << r.s_count << ',' << r.t_count << ','
            << r.series_count << ',' << flag(r.pass) << '\n';
      break;
    case ReportFormat::json: {
      nlohmann::json records = nlohmann::json::array();
      for (const auto& r : report.records) {
        nlohmann::json j{{"n", r.n},
                         {"s_count", big_json(r.s_count)},
                         {"t_count", big_json(r.t_count)},
                         {"series_count", big_json(r.series_count)},
                         {"round_trip_checked", r.round_trips_checked},
                         {"pass", r.pass}};
        if (r.witness) j["witness"] = *r.witness;
        records.push_back(std::move(j));
      }
      out << nlohmann::json{{"records", records}, {"pass", report.pass}}.dump(2)
          << '\n';
      break;
    }
  }
}

void write_report(std::ostream& out, const RefinedReport& report,
                  ReportFormat format) {
  switch (format) {
    case ReportFormat::text: {
      std::size_t literal_matches = 0;
      for (const auto& rec : report.records) {
        const auto& q = rec.query;
        out << "n=" << q.n << " r=" << q.r << " l=" << q.l << " p=" << q.p
            << " q=" << q.q << " t_refined=" << rec.t_refined
            << " s_literal=" << rec.s_literal
            << " transported=" << rec.transported
            << " literal_match=" << flag(rec.literal_match)
            << " transported_match=" << flag(rec.transported_match) << '\n';
        literal_matches += rec.literal_match;
      }
      out << "literal matches: " << literal_matches << " of "
          << report.records.size() << '\n';
      out << "overall: " << (report.pass ? "PASS" : "FAIL") << '\n';
      break;
    }
    case ReportFormat::csv:
      out << "n,r,l,p,q,t_refined,s_literal,transported,literal_match\n";
      for (const auto& rec : report.records) {
        const auto& q = rec.query;
        out << q.n << ',' << q.r << ',' << q.l << ',' << q.p << ',' << q.q
            << ',' << rec.t_refined << ',' << rec.s_literal << ','
            << rec.transported << ',' << flag(rec.literal_match) << '\n';
      }
      break;
    case ReportFormat::json: {
      nlohmann::json records = nlohmann::json::array();
      for (const auto& rec : report.records) {
        const auto& q = rec.query;
        records.push_back({{"n", q.n},
                           {"r", q.r},
                           {"l", q.l},
                           {"p", q.p},
                           {"q", q.q},
                           {"t_refined", big_json(rec.t_refined)},
                           {"s_literal", big_json(rec.s_literal)},
                           {"transported_count", big_json(rec.transported)},
                           {"literal_match", rec.literal_match},
                           {"transported_match", rec.transported_match}});
      }
      out << nlohmann::json{{"records", records}, {"pass", report.pass}}.dump(2)
          << '\n';
      break;
    }
  }
}

}  // namespace schmidt
