#pragma once

#include <string>
#include <vector>

namespace femtonc::detail {

struct FixtureSource {
  std::string name;
  std::string text;
};

const std::vector<FixtureSource>& fixture_sources();

}  // namespace femtonc::detail
