#pragma once

#include <stdexcept>

namespace kronspec {

/// Raised when an identity that must hold by construction fails (e.g. a class
/// sum that is not divisible by k!). Signals a bug, not bad input.
class internal_consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace kronspec
