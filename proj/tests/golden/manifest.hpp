#pragma once

// Structural facts about the preset corpus over small prime fields.

#include <nlohmann/json.hpp>

namespace manifest {

/// Values computed by the brute-force oracle only.
nlohmann::json from_oracle();
/// The same fields computed by the library.
nlohmann::json from_library();

}  // namespace manifest
