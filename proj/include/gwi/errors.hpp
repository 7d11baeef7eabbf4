#pragma once

#include <stdexcept>
#include <string>

namespace gwi {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- model validation ---
struct NegativeCoefficient : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct SubcriticalOrCritical : Error { using Error::Error; };
struct NotSchroder : Error { using Error::Error; };
struct NoImmigrationGap : Error { using Error::Error; };

// --- iteration / limit evaluation ---
struct Overflow : Error { using Error::Error; };
struct Diverged : Error { using Error::Error; };
struct NotInBasin : Error { using Error::Error; };

// --- truncated series ---
struct CompositionNeedsZeroConstant : Error { using Error::Error; };
struct DivisionByZeroConstant : Error { using Error::Error; };

// --- density evaluation ---
struct NonPositiveX : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct InsufficientCoverage : Error { using Error::Error; };

}  // namespace gwi
