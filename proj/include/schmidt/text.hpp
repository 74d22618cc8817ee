#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "schmidt/bijection.hpp"
#include "schmidt/partition.hpp"

namespace schmidt {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "3+2+1"; the empty partition is written "0".
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

// "3g+2g+1r": each part followed by its colour. Parts may come in any order.
TwoColorPartition parse_colored(std::string_view text);
// Parts by size descending, red before green on ties.
std::string format_colored(const TwoColorPartition& x);

// "(3,2,0)"
std::string format_sequence(std::span<const Part> seq);

/// One line per row: "2 " for every cell but the last, which is "1".
std::string render_two_modular(const Shape& s);
/// One line per row: "*" on diagonal cells, "#" elsewhere, space separated.
std::string render_young(const Shape& s);

nlohmann::json to_json(const TwoColorPartition& x);
TwoColorPartition two_color_from_json(const nlohmann::json& j);

}  // namespace schmidt
