#include "klsum/fixtures.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include "klsum/errors.hpp"

namespace klsum::fixtures {

FixtureSet FixtureSet::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return FixtureSet{}; // first run: nothing frozen yet
    FixtureSet fs;
    try {
        in >> fs.records_;
    } catch (const nlohmann::json::exception& e) {
        throw io_error("fixtures: cannot parse " + path + ": " + e.what());
    }
    if (!fs.records_.is_array()) throw io_error("fixtures: " + path + " is not a JSON array");
    return fs;
}

std::optional<nlohmann::json> FixtureSet::find(const std::string& experiment,
                                               const std::string& hash) const {
    for (const auto& rec : records_)
        if (rec.value("experiment", "") == experiment && rec.value("config_hash", "") == hash)
            return rec.at("value");
    return std::nullopt;
}

void FixtureSet::set(const std::string& experiment, const std::string& hash,
                     nlohmann::json value) {
    for (auto& rec : records_) {
        if (rec.value("experiment", "") == experiment && rec.value("config_hash", "") == hash) {
            rec["value"] = std::move(value);
            return;
        }
    }
    records_.push_back({{"experiment", experiment},
                        {"config_hash", hash},
                        {"value", std::move(value)}});
}

void FixtureSet::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw io_error("fixtures: cannot open " + path + " for writing");
    out << records_.dump(2) << "\n";
    if (!out) throw io_error("fixtures: write to " + path + " failed");
}

std::string config_hash(const nlohmann::json& params) {
    // nlohmann objects iterate in sorted key order, so dumping the whole
    // object is already canonical
    std::string canon = params.dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace klsum::fixtures
