#include "femtonc/fixtures.hpp"

#include "femtonc/error.hpp"
#include "femtonc/scenario_io.hpp"
#include "fixtures_data.hpp"

namespace femtonc {

std::vector<std::string> fixture_names()
{
  std::vector<std::string> out;
  for (const auto& f : detail::fixture_sources()) out.push_back(f.name);
  return out;
}

const std::string& fixture_text(const std::string& name)
{
  for (const auto& f : detail::fixture_sources())
    if (f.name == name) return f.text;
  throw InvalidInput("unknown fixture '" + name + "'");
}

Scenario load_fixture(const std::string& name) { return parse_scenario_string(fixture_text(name)); }

}  // namespace femtonc
