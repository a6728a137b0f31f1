#pragma once
#include <stdexcept>

namespace paulilab {

// Thrown when a packet construction or center search is attempted for a
// (field, potential) pair outside the regime of the requested theorem.
struct regime_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a quadrature refinement loop fails to stabilize.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace paulilab
