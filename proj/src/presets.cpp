#include "ncmap/bench.hpp"

#include <map>

namespace ncmap::bench {

namespace {

// Shipped presets. The files under presets/ carry identical text; a test
// keeps them in sync.

constexpr const char* kFig2 = R"(# 1-D study: J(x) = (x - 2)^2 + 6, both methods at a large step size.
# Iterates oscillate in a band around x* = 2; the filtered series settles.
[problem]
id = quadratic
dimension = 1
center = 2.0
offset = 6.0

[algorithm]
pair = sincos
methods = euler, heun
h = 0.5
x0 = 0.5
max_steps = 400

[noise]
sigma = 0.0
seeds = 1

[baselines]
exact_gd = true

[output]
dir = out/fig2
band_window = 200
)";

constexpr const char* kFig3 = R"(# 2-D problem: J(x) = (x1 - 2)^2 + (x2 - 2)^2 + 6.
[problem]
id = quadratic
dimension = 2
center = 2.0, 2.0
offset = 6.0

[algorithm]
pair = sincos
methods = euler
h = 0.1
x0 = 0.5, 0.5
max_steps = 4000

[noise]
sigma = 0.0
seeds = 1

[output]
dir = out/fig3
band_window = 400
)";

constexpr const char* kFig4 = R"(# Step-size sweep: smaller h, smaller limit band around x*.
[problem]
id = quadratic
dimension = 1
center = 2.0
offset = 6.0

[algorithm]
pair = sincos
methods = euler
h = 0.5, 0.1, 0.01, 0.001
x0 = 0.5
max_steps = 20000

[noise]
sigma = 0.0
seeds = 1

[output]
dir = out/fig4
band_window = 4000
)";

constexpr const char* kFig5 = R"(# Noise robustness: every query perturbed by N(0, 0.04), i.e. sigma = 0.2.
# Compares the switched-map iteration against forward-difference descent,
# which divides that noise by h in every gradient estimate.
[problem]
id = quadratic
dimension = 1
center = 2.0
offset = 6.0

[algorithm]
pair = sincos
methods = heun
h = 0.01
x0 = 0.5
max_steps = 2000

[noise]
sigma = 0.2
seeds = 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20

[baselines]
exact_gd = true
fd_gd = true

[output]
dir = out/fig5
band_window = 200
)";

constexpr const char* kVerify = R"(# Residual-order verification defaults (ncmap verify uses these built in).
# h grid 2^-2 .. 2^-9, ten base points per (pair, method, dimension) case.
[verify]
h_exp_lo = 2
h_exp_hi = 9
points_per_case = 10
sample_seed = 20260811
)";

const std::map<std::string, const char*>& table() {
    static const std::map<std::string, const char*> presets = {
        {"fig2", kFig2}, {"fig3", kFig3}, {"fig4", kFig4},
        {"fig5", kFig5}, {"verify", kVerify},
    };
    return presets;
}

} // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : table()) names.push_back(name);
    return names;
}

bool is_preset(const std::string& name) { return table().contains(name); }

std::string preset_text(const std::string& name) {
    const auto it = table().find(name);
    if (it == table().end()) {
        std::string known;
        for (const auto& [n, _] : table()) {
            if (!known.empty()) known += ", ";
            known += n;
        }
        throw ConfigError("unknown preset '" + name + "' (known: " + known + ")");
    }
    return it->second;
}

ScenarioConfig preset_config(const std::string& name) {
    ScenarioConfig cfg =
        ScenarioConfig::from_config(ConfigFile::parse(preset_text(name), name));
    cfg.name = name;
    return cfg;
}

} // namespace ncmap::bench
