#pragma once

#include <stdexcept>
#include <string>

namespace qvt {

// Raised when a computation contradicts an identity the library relies on:
// a polynomial division that should be exact leaves a remainder, a closed
// form disagrees with its own divisibility constraint, or a decoder finds
// two codewords within one deletion of the same received word. These are
// never recoverable input errors; they mean arithmetic is broken and the
// caller must abort loudly.
class integrity_error : public std::logic_error {
 public:
  explicit integrity_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qvt
