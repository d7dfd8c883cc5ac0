#pragma once

#include <string>

#include "posbvp/nonlinearity.hpp"
#include "posbvp/weight.hpp"

namespace posbvp {

// The Dirichlet problem u'' + a(x) g(u) = 0, u(0) = u(L) = 0.
struct ProblemSpec {
    Weight weight;
    Nonlinearity g;
    std::string name;
};

}  // namespace posbvp
