#pragma once

#include <stdexcept>
#include <string>

namespace beflow {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input / validation
struct MalformedInput : Error { using Error::Error; };
struct NotCubic : Error { using Error::Error; };
struct LoopEdge : Error { using Error::Error; };
struct OddVertexCount : Error { using Error::Error; };
struct OddN : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };

// orientation / bisection
struct NotBisection : Error { using Error::Error; };
struct NotOrientable : Error { using Error::Error; };
struct BadK : Error { using Error::Error; };

// flow / region
struct BadBounds : Error { using Error::Error; };
struct AlphaOutOfRange : Error { using Error::Error; };
struct MismatchedGraph : Error { using Error::Error; };
struct UndefinedTrace : Error { using Error::Error; };
struct EmptyBelowOne : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct UnknownConjecture : Error { using Error::Error; };

// weak5 pipeline
struct FactorInvalid : Error { using Error::Error; };
struct Inconsistent : Error { using Error::Error; };
struct StructureViolation : Error { using Error::Error; };
struct InternalVerificationFailed : Error { using Error::Error; };

}  // namespace beflow
