#include "ncmap/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ncmap {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= value.size()) {
        const std::size_t comma = value.find(',', start);
        const std::string_view piece =
            comma == std::string_view::npos ? value.substr(start)
                                            : value.substr(start, comma - start);
        items.emplace_back(trim(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return items;
}

} // namespace

ConfigFile ConfigFile::parse(std::string_view text, std::string name) {
    ConfigFile cfg;
    cfg.name_ = std::move(name);
    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view raw =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        ++line_no;
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;

        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3)
                throw ConfigError(cfg.name_ + ":" + std::to_string(line_no) +
                                  ": malformed section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(cfg.name_ + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        if (section.empty())
            throw ConfigError(cfg.name_ + ":" + std::to_string(line_no) +
                              ": key outside of any [section]");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            throw ConfigError(cfg.name_ + ":" + std::to_string(line_no) + ": empty key");
        cfg.sections_[section][key] = Entry{value, line_no};
    }
    return cfg;
}

ConfigFile ConfigFile::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.filename().string());
}

const ConfigFile::Entry* ConfigFile::find(const std::string& section,
                                          const std::string& key) const {
    const auto sit = sections_.find(section);
    if (sit == sections_.end()) return nullptr;
    const auto kit = sit->second.find(key);
    return kit == sit->second.end() ? nullptr : &kit->second;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
}

void ConfigFile::fail(const std::string& section, const std::string& key,
                      const std::string& message) const {
    const Entry* e = find(section, key);
    const std::string where =
        e ? name_ + ":" + std::to_string(e->line) : name_;
    throw ConfigError(where + ": [" + section + "] " + key + ": " + message);
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
    const Entry* e = find(section, key);
    return e ? e->value : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key,
                              double fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    try {
        std::size_t used = 0;
        const double v = std::stod(e->value, &used);
        if (used != e->value.size()) fail(section, key, "trailing characters after number");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(section, key, "expected a number, got '" + e->value + "'");
    }
}

std::uint64_t ConfigFile::get_u64(const std::string& section, const std::string& key,
                                  std::uint64_t fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    std::uint64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(e->value.data(), e->value.data() + e->value.size(), v);
    if (ec != std::errc{} || ptr != e->value.data() + e->value.size())
        fail(section, key, "expected a nonnegative integer, got '" + e->value + "'");
    return v;
}

bool ConfigFile::get_bool(const std::string& section, const std::string& key,
                          bool fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    if (e->value == "true" || e->value == "1" || e->value == "yes") return true;
    if (e->value == "false" || e->value == "0" || e->value == "no") return false;
    fail(section, key, "expected true/false, got '" + e->value + "'");
}

Vec ConfigFile::get_vector(const std::string& section, const std::string& key,
                           const Vec& fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    Vec out;
    for (const std::string& item : split_list(e->value)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(section, key, "expected comma-separated numbers, got '" + e->value + "'");
        }
    }
    if (out.empty()) fail(section, key, "empty list");
    return out;
}

std::vector<std::string> ConfigFile::get_list(
    const std::string& section, const std::string& key,
    const std::vector<std::string>& fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    std::vector<std::string> items = split_list(e->value);
    if (items.empty() || (items.size() == 1 && items[0].empty()))
        fail(section, key, "empty list");
    return items;
}

std::vector<std::uint64_t> ConfigFile::get_u64_list(
    const std::string& section, const std::string& key,
    const std::vector<std::uint64_t>& fallback) const {
    const Entry* e = find(section, key);
    if (!e) return fallback;
    std::vector<std::uint64_t> out;
    for (const std::string& item : split_list(e->value)) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            fail(section, key, "expected comma-separated integers, got '" + e->value + "'");
        out.push_back(v);
    }
    if (out.empty()) fail(section, key, "empty list");
    return out;
}

} // namespace ncmap
