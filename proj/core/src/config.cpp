#include "fgbm/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fgbm {

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "hurst", "sigma_lo", "sigma_hi", "grid.n", "horizon", "seed", "scenarios.m",
    };
    return keys;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::defaults() {
    Config c;
    c.set("hurst", "0.5");
    c.set("sigma_lo", "0.1");
    c.set("sigma_hi", "0.3");
    c.set("grid.n", "256");
    c.set("horizon", "1.0");
    c.set("seed", "1");
    c.set("scenarios.m", "2");
    return c;
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    Config c;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: " + path + ":" + std::to_string(lineno) +
                                     ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::runtime_error("config: " + path + ":" + std::to_string(lineno) +
                                     ": empty key or value");
        c.set(key, value);
    }
    return c;
}

void Config::merge(const Config& other) {
    for (const auto& [k, v] : other.entries_) entries_[k] = v;
}

void Config::set(const std::string& key, const std::string& value) {
    if (!known_keys().count(key))
        throw std::invalid_argument("config: unknown key '" + key + "'");
    entries_[key] = value;
}

bool Config::has(const std::string& key) const { return entries_.count(key) != 0; }

double Config::get_double(const std::string& key) const {
    const std::string& v = get_string(key);
    std::size_t pos = 0;
    double d;
    try {
        d = std::stod(v, &pos);
    } catch (...) {
        throw std::runtime_error("config: key '" + key + "' is not a number: " + v);
    }
    if (pos != v.size())
        throw std::runtime_error("config: key '" + key + "' is not a number: " + v);
    return d;
}

std::uint64_t Config::get_u64(const std::string& key) const {
    const std::string& v = get_string(key);
    try {
        return std::stoull(v);
    } catch (...) {
        throw std::runtime_error("config: key '" + key + "' is not an integer: " + v);
    }
}

std::size_t Config::get_size(const std::string& key) const {
    return static_cast<std::size_t>(get_u64(key));
}

std::string Config::get_string(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw std::runtime_error("config: missing key '" + key + "'");
    return it->second;
}

std::string Config::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : entries_) j[k] = v;
    return j.dump();
}

}  // namespace fgbm
