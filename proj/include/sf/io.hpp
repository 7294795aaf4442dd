#pragma once

#include "sf/construct.hpp"
#include "sf/evaluate.hpp"
#include "sf/params.hpp"
#include "sf/recurrence.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sf {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// key = value lines, # comments, quoted strings, numbers, booleans; [tables] are ignored.
Config parse_toml(std::string_view text);
Config config_from_json(const nlohmann::json& j);
// Chooses the JSON reader for *.json, the TOML reader otherwise.
Params load_params(const std::string& path);

nlohmann::json params_to_json(const Params& p);
// Midpoint printed to about `digits` places after the point.
nlohmann::json ball_to_json(const BallReal& b, int digits);

// {"a", "n", "b", "c": [[...]], "tail": [...]}, integers as decimal strings.
nlohmann::json table_to_json(const CoeffTable& t, const TailExpansion* tail = nullptr);
CoeffTable table_from_json(const nlohmann::json& j);

// Entries keyed "k,i,j,i',j'" with rational values as strings.
nlohmann::json theta_to_json(const ThetaTable& t, const ThetaShape& shape, long k);

nlohmann::json form_record_to_json(const FormRecord& r);

} // namespace sf
