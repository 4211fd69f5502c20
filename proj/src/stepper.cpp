#include "ncmap/stepper.hpp"

#include <stdexcept>
#include <string>

namespace ncmap {

StepMethod parse_step_method(std::string_view name) {
    if (name == "euler") return StepMethod::euler;
    if (name == "heun") return StepMethod::heun;
    throw std::invalid_argument("unknown step method '" + std::string(name) +
                                "' (expected euler or heun)");
}

} // namespace ncmap
