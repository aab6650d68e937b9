#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace fgbm {

// Flat key/value configuration. File format: one `key = value` pair per
// line, `#` starts a comment, blank lines ignored. Keys are dotted names
// (e.g. grid.n). Unknown keys are rejected so typos fail loudly.
class Config {
  public:
    static Config defaults();
    static Config from_file(const std::string& path);

    // Overlays `other` on top of *this (other wins).
    void merge(const Config& other);

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    double get_double(const std::string& key) const;
    std::uint64_t get_u64(const std::string& key) const;
    std::size_t get_size(const std::string& key) const;
    std::string get_string(const std::string& key) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

    // Resolved configuration as a JSON object string (keys sorted).
    std::string to_json() const;

  private:
    std::map<std::string, std::string> entries_;
};

}  // namespace fgbm
