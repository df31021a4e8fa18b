#pragma once

#include <stdexcept>
#include <string>

namespace besov {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid cannot represent the requested frequency content.
struct UnresolvedBlockError : Error { using Error::Error; };
// Fields on incompatible grids.
struct GridMismatchError : Error { using Error::Error; };
// Construction parameter outside its admissible set.
struct InvalidParamError : Error { using Error::Error; };
// Envelope bump too close to the periodic boundary.
struct CoverageError : Error { using Error::Error; };
// Slope ceiling hit: approaching wave breaking, outside the operating regime.
struct BlowupError : Error { using Error::Error; };
// Flow jacobian left its admissible window.
struct JacobianBoundError : Error { using Error::Error; };
// Oscillatory quadrature would exceed the configured sample budget.
struct QuadratureBudgetError : Error { using Error::Error; };

} // namespace besov
