#pragma once

#include <stdexcept>

namespace tetsym {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error { using Error::Error; };
struct DegenerateTetrahedron : Error { using Error::Error; };
struct InvalidTriangle : Error { using Error::Error; };
struct NotRealizable : Error { using Error::Error; };
struct NonPositiveEdge : Error { using Error::Error; };
struct ClosureViolation : Error { using Error::Error; };
struct DegenerateNormals : Error { using Error::Error; };
struct NonPositiveArea : Error { using Error::Error; };
struct GenerationFailed : Error { using Error::Error; };

} // namespace tetsym
