#pragma once

#include <iosfwd>
#include <string>

#include "femtonc/model.hpp"

namespace femtonc {

// Line-oriented scenario text:
//   files <F>
//   mbs_radius <r>
//   seed <u64>                       (optional)
//   fc <id> <x> <y> r=<radius> cache=<k1,k2,...>
//   client <id> <x> <y> wants=<k> has=<k1,k2,...>
// '#' starts a comment. Ids and file indices are zero-based.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_string(const std::string& text);
Scenario load_scenario(const std::string& path);

void write_scenario(std::ostream& out, const Scenario& s);
std::string format_scenario(const Scenario& s);

}  // namespace femtonc
