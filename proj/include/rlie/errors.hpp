#pragma once

#include <stdexcept>
#include <string>

namespace rlie {

/// Malformed input document (unknown name, bad field, non-prime p).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An algebra axiom or a structural precondition failed.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured enumeration cap or budget was exceeded.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Internal consistency assertion failed (signals a bug, not bad input).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Runtime caps. All enumerations are guarded by these; exceeding one is a
/// hard CapExceeded error, never a silent fallback.
struct Caps {
  int max_p = 7;               // largest supported prime field
  long max_env_dim = 19683;    // largest p^dim for building u(L)
  long max_elements = 65536;   // largest element scan (cyclicity, seeding, witnesses)
  long max_lattice = 1L << 20; // largest ideal lattice
};

}  // namespace rlie
