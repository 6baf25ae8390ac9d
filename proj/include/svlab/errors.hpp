#ifndef SVLAB_ERRORS_HPP
#define SVLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace svlab {

/* Malformed or inconsistent input: schema violations, precondition
 * failures, unsupported parameter combinations. Maps to exit status 2. */
struct InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* An exact identity that must hold did not. Maps to exit status 1. */
struct CheckFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace svlab

#endif
