#include "ncmap/fields.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ncmap {

GeneratingPair pair_simple() {
    return GeneratingPair{
        [](double j) { return j; },
        [](double) { return 1.0; },
        "simple",
        /*valid_for_euler=*/false,
        /*valid_for_heun=*/true,
    };
}

GeneratingPair pair_sincos() {
    return GeneratingPair{
        [](double j) { return std::sin(j); },
        [](double j) { return std::cos(j); },
        "sincos",
        /*valid_for_euler=*/true,
        /*valid_for_heun=*/true,
    };
}

namespace {

std::mutex registry_mutex;

std::map<std::string, GeneratingPair>& registry() {
    static std::map<std::string, GeneratingPair> pairs = {
        {"simple", pair_simple()},
        {"sincos", pair_sincos()},
    };
    return pairs;
}

} // namespace

GeneratingPair pair_by_name(const std::string& name) {
    std::lock_guard lock(registry_mutex);
    auto& pairs = registry();
    auto it = pairs.find(name);
    if (it == pairs.end()) {
        std::string known;
        for (const auto& [label, _] : pairs) {
            if (!known.empty()) known += ", ";
            known += label;
        }
        throw std::invalid_argument("unknown generating pair '" + name +
                                    "' (known: " + known + ")");
    }
    return it->second;
}

void register_pair(GeneratingPair pair) {
    if (pair.label.empty())
        throw std::invalid_argument("register_pair: pair label is empty");
    if (!pair.f1 || !pair.f2)
        throw std::invalid_argument("register_pair: scalar maps must be non-empty");
    std::lock_guard lock(registry_mutex);
    auto& pairs = registry();
    if (pairs.contains(pair.label))
        throw std::invalid_argument("register_pair: '" + pair.label + "' already exists");
    pairs.emplace(pair.label, std::move(pair));
}

std::vector<std::string> known_pair_names() {
    std::lock_guard lock(registry_mutex);
    std::vector<std::string> names;
    for (const auto& [label, _] : registry()) names.push_back(label);
    return names;
}

SwitchedField::SwitchedField(GeneratingPair pair, std::size_t dimension)
    : pair_(std::move(pair)), dim_(dimension) {
    if (dim_ == 0)
        throw std::invalid_argument("SwitchedField: dimension must be positive");
}

double SwitchedField::apply_phase(int phase, double j_value) const {
    switch (phase) {
        case 0: return pair_.f1(j_value);
        case 1: return pair_.f2(j_value);
        case 2: return -pair_.f1(j_value);
        case 3: return -pair_.f2(j_value);
        default: throw std::invalid_argument("SwitchedField: phase out of range");
    }
}

void SwitchedField::check_dims(std::size_t obj_dim, std::size_t x_dim) const {
    if (obj_dim != dim_ || x_dim != dim_)
        throw std::invalid_argument("SwitchedField: dimension mismatch (field " +
                                    std::to_string(dim_) + ", objective " +
                                    std::to_string(obj_dim) + ", point " +
                                    std::to_string(x_dim) + ")");
}

const char* phase_label(int phase) {
    switch (phase) {
        case 0: return "+f1";
        case 1: return "+f2";
        case 2: return "-f1";
        case 3: return "-f2";
        default: return "?";
    }
}

} // namespace ncmap
