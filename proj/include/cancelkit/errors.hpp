#pragma once

#include <stdexcept>
#include <string>

namespace cancelkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Presentation file / word text problems.
struct SyntaxError : Error { using Error::Error; };
struct AlphabetError : Error { using Error::Error; };
struct RelatorError : Error { using Error::Error; };

// The presentation is not in a class the strip machinery supports.
struct UnsupportedPresentation : Error { using Error::Error; };

// Word alphabet / model disagreements and oracle limits.
struct ModelMismatch : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

struct InvalidArg : Error { using Error::Error; };
struct IdentityInput : Error { using Error::Error; };

// A strip certificate failed schema validation.
struct CertificateError : Error { using Error::Error; };

}  // namespace cancelkit
