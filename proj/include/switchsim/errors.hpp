#ifndef SWITCHSIM_ERRORS_HPP
#define SWITCHSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace switchsim {

/// Thrown when a request would exceed a configured resource cap
/// (dense dimension, flat monomial size, state amplitudes, search depth).
/// The CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace switchsim

#endif
