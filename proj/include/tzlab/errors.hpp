#pragma once

#include <stdexcept>
#include <string>

namespace tzlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// symbol layer
struct EvaluationAtAtom : Error { using Error::Error; };
struct TailNotResolved : Error { using Error::Error; };

// operator layer
struct DimensionMismatch : Error { using Error::Error; };
struct NotAnIsometry : Error { using Error::Error; };
struct NotCommuting : Error { using Error::Error; };
struct SymbolMismatch : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct SafeSubspaceEmpty : Error { using Error::Error; };

// word layer
struct PiExtensionViolation : Error { using Error::Error; };

// exact semigroup layer
struct IndeterminateSign : Error { using Error::Error; };
struct ElementOutsideWindow : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct UnsupportedSignPattern : Error { using Error::Error; };

struct ConfigError : Error { using Error::Error; };

}  // namespace tzlab
