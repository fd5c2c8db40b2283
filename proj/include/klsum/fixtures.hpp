#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace klsum::fixtures {

// Frozen regression values: a JSON array of
// {"experiment": ..., "config_hash": ..., "value": ...} records keyed by
// (experiment, config_hash). `value` may be a number or an object.
class FixtureSet {
public:
    FixtureSet() = default;

    // io_error when the file exists but cannot be parsed; a missing file
    // yields an empty set (first run)
    static FixtureSet load(const std::string& path);

    std::optional<nlohmann::json> find(const std::string& experiment,
                                       const std::string& config_hash) const;
    void set(const std::string& experiment, const std::string& config_hash,
             nlohmann::json value);
    void save(const std::string& path) const;

    std::size_t size() const { return records_.size(); }

private:
    nlohmann::json records_ = nlohmann::json::array();
};

// FNV-1a 64-bit digest of a canonical key=value rendering of a JSON
// object (keys sorted, values in JSON form), as 16 hex digits. Execution
// parameters (threads, output paths) must not be part of the hashed
// object: the hash identifies the experiment, not the run.
std::string config_hash(const nlohmann::json& params);

} // namespace klsum::fixtures
