#ifndef LPM_ERRORS_HPP
#define LPM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpm {

/// Malformed user input: bad path words, monomial text, dimension
/// mismatches, degree constraints. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural guarantee failed (exchange property, fiber completeness,
/// certificate exactness). Signals a bug or a falsified claim; maps to
/// CLI exit code 1 with a dump.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace lpm

#endif
