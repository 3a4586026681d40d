#pragma once

#include <string>
#include <vector>

#include "femtonc/model.hpp"

namespace femtonc {

std::vector<std::string> fixture_names();
// Raw scenario text. Throws InvalidInput for unknown names.
const std::string& fixture_text(const std::string& name);
Scenario load_fixture(const std::string& name);

}  // namespace femtonc
