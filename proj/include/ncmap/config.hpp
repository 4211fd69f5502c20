#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncmap/vec.hpp"

namespace ncmap {

/// Malformed or semantically invalid configuration. Messages carry
/// "<name>:<line>:" prefixes where a source line is known.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flat key = value file with [section] headers. Blank lines and lines
/// starting with '#' or ';' are ignored. Values keep embedded spaces;
/// list values are comma-separated.
class ConfigFile {
public:
    struct Entry {
        std::string value;
        int line = 0;
    };

    static ConfigFile parse(std::string_view text, std::string name);
    static ConfigFile load(const std::filesystem::path& path);

    const std::string& name() const { return name_; }

    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    std::uint64_t get_u64(const std::string& section, const std::string& key,
                          std::uint64_t fallback) const;
    bool get_bool(const std::string& section, const std::string& key,
                  bool fallback) const;
    Vec get_vector(const std::string& section, const std::string& key,
                   const Vec& fallback) const;
    std::vector<std::string> get_list(const std::string& section, const std::string& key,
                                      const std::vector<std::string>& fallback) const;
    std::vector<std::uint64_t> get_u64_list(const std::string& section,
                                            const std::string& key,
                                            const std::vector<std::uint64_t>& fallback) const;

    const std::map<std::string, std::map<std::string, Entry>>& sections() const {
        return sections_;
    }

    [[noreturn]] void fail(const std::string& section, const std::string& key,
                           const std::string& message) const;

private:
    const Entry* find(const std::string& section, const std::string& key) const;

    std::string name_;
    std::map<std::string, std::map<std::string, Entry>> sections_;
};

} // namespace ncmap
