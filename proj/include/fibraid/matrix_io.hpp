#pragma once

#include <string>

#include "json.hpp"

#include "fibraid/representation.hpp"

namespace fibraid {

/// {"dim": d, "blocks": [{"charge", "begin", "end"}], "entries": [[[re, im], ...], ...]}
nlohmann::json to_json(const BlockUnitary& u);
nlohmann::json matrix_entries_json(const Matrix& m);

/// Accepts the object above (blocks optional) or a bare array of rows.
/// Throws std::invalid_argument on malformed input.
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace fibraid
