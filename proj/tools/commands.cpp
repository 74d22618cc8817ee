#include "commands.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "schmidt/bijection.hpp"
#include "schmidt/enumerate.hpp"
#include "schmidt/report.hpp"
#include "schmidt/text.hpp"

namespace schmidt::cli {

namespace {

const std::map<std::string, ReportFormat> kFormats{
    {"text", ReportFormat::text},
    {"csv", ReportFormat::csv},
    {"json", ReportFormat::json}};

unsigned default_workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::string correspondence_table(Part n) {
  std::string out;
  for (const auto& lambda : enumerate_two_color(n)) {
    if (lambda.empty()) continue;
    out += format_colored(lambda) + " <-> " + format_partition(phi(lambda)) +
           '\n';
  }
  return out;
}

std::string render_pipeline(const TwoColorPartition& lambda) {
  std::ostringstream os;
  os << "input: " << format_colored(lambda) << '\n';
  if (lambda.empty()) {
    os << "gamma = 0\n";
    return os.str();
  }
  const PhiTrace t = trace_phi(lambda);
  os << "red (alpha) = " << format_sequence(lambda.red.parts()) << '\n'
     << "green (beta) = " << format_sequence(lambda.green.parts()) << '\n'
     << "m = " << t.padded.m() << '\n'
     << "padded alpha = " << format_sequence(t.padded.red) << '\n'
     << "padded beta = " << format_sequence(t.padded.green) << '\n'
     << "alpha_bar = " << format_sequence(t.distinct.arms()) << '\n'
     << "beta_bar = " << format_sequence(t.distinct.legs()) << '\n'
     << "shape = " << format_sequence(t.shape.rows.parts()) << '\n'
     << "young diagram (* marks the diagonal):\n"
     << render_young(t.shape) << "2-modular diagram:\n"
     << render_two_modular(t.shape)
     << "mu = " << format_sequence(t.mu.values()) << '\n'
     << "gamma = " << format_partition(t.gamma) << '\n';
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bijection between two-colour partitions and partitions "
               "counted by their odd-indexed parts"};
  app.require_subcommand(1);

  std::string colored_text, plain_text;
  auto* map_cmd = app.add_subcommand("map", "apply phi to a two-colour partition");
  map_cmd->add_option("colored", colored_text, "e.g. 2r+1g")->required();

  auto* unmap_cmd = app.add_subcommand("unmap", "apply the inverse map");
  unmap_cmd->add_option("partition", plain_text, "e.g. 3+1")->required();

  Part table_n = 0;
  auto* table_cmd =
      app.add_subcommand("table", "list every pair of a given weight");
  table_cmd->add_option("--n", table_n, "weight")->required();

  Part max_n = 20, cutoff = 12;
  Part max_r = 3, max_l = 3, max_p = 3, max_q = 3;
  std::string format = "text";
  unsigned workers = default_workers();

  auto* verify_cmd =
      app.add_subcommand("verify", "check counts and round trips up to max-n");
  verify_cmd->add_option("--max-n", max_n, "largest weight")->capture_default_str();
  verify_cmd->add_option("--roundtrip-cutoff", cutoff,
                         "largest weight checked by round trips")
      ->capture_default_str();
  verify_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"text", "csv", "json"}));
  verify_cmd->add_option("--jobs", workers, "worker threads");

  Part refined_n = 8;
  auto* refined_cmd = app.add_subcommand(
      "refined", "tabulate the four-variable refinement over a grid");
  refined_cmd->add_option("--max-n", refined_n)->capture_default_str();
  refined_cmd->add_option("--max-r", max_r)->capture_default_str();
  refined_cmd->add_option("--max-l", max_l)->capture_default_str();
  refined_cmd->add_option("--max-p", max_p)->capture_default_str();
  refined_cmd->add_option("--max-q", max_q)->capture_default_str();
  refined_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"text", "csv", "json"}));
  refined_cmd->add_option("--jobs", workers, "worker threads");

  auto* render_cmd =
      app.add_subcommand("render", "print every intermediate of the map");
  render_cmd->add_option("colored", colored_text)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*map_cmd) {
      out << format_partition(phi(parse_colored(colored_text))) << '\n';
    } else if (*unmap_cmd) {
      out << format_colored(phi_inverse(parse_partition(plain_text))) << '\n';
    } else if (*table_cmd) {
      if (table_n < 0) throw ParseError("--n must be nonnegative");
      out << correspondence_table(table_n);
    } else if (*verify_cmd) {
      if (max_n < 1) throw ParseError("--max-n must be at least 1");
      const auto report = run_verify({max_n, cutoff, workers});
      write_report(out, report, kFormats.at(format));
      return report.pass ? kOk : kVerificationFailed;
    } else if (*refined_cmd) {
      if (std::min({refined_n, max_r, max_l, max_p, max_q}) < 1)
        throw ParseError("all refined bounds must be at least 1");
      const auto report =
          run_refined({refined_n, max_r, max_l, max_p, max_q, workers});
      write_report(out, report, kFormats.at(format));
      return report.pass ? kOk : kVerificationFailed;
    } else if (*render_cmd) {
      out << render_pipeline(parse_colored(colored_text));
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace schmidt::cli
