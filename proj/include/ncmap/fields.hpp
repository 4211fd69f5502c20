#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ncmap/objective.hpp"
#include "ncmap/vec.hpp"

namespace ncmap {

/// Pair of scalar maps applied to the measured objective value. The
/// composed fields x -> f1(J(x)), x -> f2(J(x)) generate the switched
/// dynamics; by construction they depend on x only through J(x).
///
/// The validity flags state whether the pair's Euler respectively Heun
/// macro drift equals exactly -grad J. For built-ins they are fixed by
/// algebra; for user-registered pairs they are measured empirically
/// (oracle::classify_pair), never trusted from the caller.
struct GeneratingPair {
    std::function<double(double)> f1;
    std::function<double(double)> f2;
    std::string label;
    bool valid_for_euler = false;
    bool valid_for_heun = false;
};

/// f1 = J, f2 = 1. Heun drift is -grad J; Euler drift picks up the extra
/// term -grad J * J, so it is not a pure gradient step.
GeneratingPair pair_simple();

/// f1 = sin(J), f2 = cos(J). Both drifts equal -grad J.
GeneratingPair pair_sincos();

/// Lookup by label: "simple", "sincos", or a registered custom pair.
/// Throws std::invalid_argument for unknown names, listing what exists.
GeneratingPair pair_by_name(const std::string& name);

/// Register a custom pair under pair.label. Flags should come from
/// oracle::classify_pair; see oracle::register_classified_pair for the
/// one-call variant. Throws on empty/duplicate labels.
void register_pair(GeneratingPair pair);

std::vector<std::string> known_pair_names();

/// The periodic switched vector field: step index k selects a signed
/// field (+f1, +f2, -f1, -f2 as k mod 4 = 0,1,2,3) acting on the single
/// active coordinate floor(k/4) mod n. Period 4n in k.
class SwitchedField {
public:
    SwitchedField(GeneratingPair pair, std::size_t dimension);

    std::size_t dimension() const { return dim_; }
    const GeneratingPair& pair() const { return pair_; }

    static int phase(std::uint64_t k) { return static_cast<int>(k % 4); }
    std::size_t active_coordinate(std::uint64_t k) const { return (k / 4) % dim_; }

    /// Signed scalar map for a phase applied to an objective value.
    double apply_phase(int phase, double j_value) const;

    /// Field magnitude along the active coordinate; costs one counted
    /// objective evaluation.
    template <ObjectiveLike O>
    double magnitude(const O& obj, std::uint64_t k, std::span<const double> x) const {
        check_dims(obj.dimension(), x.size());
        return apply_phase(phase(k), obj.value(x));
    }

    /// Full field vector g_k(x): exactly one nonzero component.
    template <ObjectiveLike O>
    Vec at(const O& obj, std::uint64_t k, std::span<const double> x) const {
        Vec g(dim_, 0.0);
        g[active_coordinate(k)] = magnitude(obj, k, x);
        return g;
    }

private:
    void check_dims(std::size_t obj_dim, std::size_t x_dim) const;

    GeneratingPair pair_;
    std::size_t dim_;
};

/// Human-readable phase labels in switching order: +f1, +f2, -f1, -f2.
const char* phase_label(int phase);

} // namespace ncmap
