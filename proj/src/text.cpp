#include "schmidt/text.hpp"

#include <algorithm>
#include <charconv>
#include <utility>
#include <vector>

namespace schmidt {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_plus(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find('+', start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Part parse_positive(std::string_view token, std::string_view whole) {
  Part value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end || value < 1)
    throw ParseError("bad part '" + std::string(token) + "' in '" +
                     std::string(whole) + "'");
  return value;
}

std::vector<std::pair<Part, char>> colored_cells(const TwoColorPartition& x) {
  std::vector<std::pair<Part, char>> cells;
  for (Part v : x.red.parts()) cells.emplace_back(v, 'r');
  for (Part v : x.green.parts()) cells.emplace_back(v, 'g');
  std::stable_sort(cells.begin(), cells.end(), [](auto& a, auto& b) {
    return a.first != b.first ? a.first > b.first
                              : (a.second == 'r' && b.second == 'g');
  });
  return cells;
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected an array of parts");
  std::vector<Part> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("parts must be integers");
    parts.push_back(v.get<Part>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const InvalidPartition& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Partition parse_partition(std::string_view text) {
  const auto body = trim(text);
  if (body == "0") return Partition{};
  std::vector<Part> parts;
  for (auto token : split_plus(body)) parts.push_back(parse_positive(token, body));
  if (!is_weakly_decreasing(parts))
    throw ParseError("parts of '" + std::string(body) +
                     "' are not weakly decreasing");
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += '+';
    out += std::to_string(p[i]);
  }
  return out;
}

TwoColorPartition parse_colored(std::string_view text) {
  const auto body = trim(text);
  if (body == "0") return TwoColorPartition{};
  std::vector<Part> red, green;
  for (auto token : split_plus(body)) {
    if (token.empty() || (token.back() != 'r' && token.back() != 'g'))
      throw ParseError("part '" + std::string(token) +
                       "' needs a colour suffix r or g");
    const Part v = parse_positive(token.substr(0, token.size() - 1), body);
    (token.back() == 'r' ? red : green).push_back(v);
  }
  std::sort(red.rbegin(), red.rend());
  std::sort(green.rbegin(), green.rend());
  return TwoColorPartition{Partition(std::move(red)),
                           Partition(std::move(green))};
}

std::string format_colored(const TwoColorPartition& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [size, color] : colored_cells(x)) {
    if (!out.empty()) out += '+';
    out += std::to_string(size);
    out += color;
  }
  return out;
}

std::string format_sequence(std::span<const Part> seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  return out + ")";
}

std::string render_two_modular(const Shape& s) {
  std::string out;
  for (Part len : s.rows.parts()) {
    for (Part c = 1; c < len; ++c) out += "2 ";
    out += "1\n";
  }
  return out;
}

std::string render_young(const Shape& s) {
  std::string out;
  const auto& rows = s.rows.parts();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Part c = 0; c < rows[i]; ++c) {
      if (c) out += ' ';
      out += static_cast<std::size_t>(c) == i ? '*' : '#';
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const TwoColorPartition& x) {
  return nlohmann::json{{"red", x.red.parts()}, {"green", x.green.parts()}};
}

TwoColorPartition two_color_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("red") || !j.contains("green"))
    throw ParseError("expected an object with 'red' and 'green' arrays");
  return TwoColorPartition{partition_from_json(j.at("red")),
                           partition_from_json(j.at("green"))};
}

}  // namespace schmidt
