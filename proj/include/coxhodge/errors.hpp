#ifndef COXHODGE_ERRORS_HPP
#define COXHODGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxhodge {

// Mathematical precondition failures. `kind` is a stable machine-readable tag
// (e.g. "NotSemiample"); the CLI maps these to exit code 1, while I/O and
// parse problems use plain std::runtime_error and exit code 2.
class MathError : public std::runtime_error {
public:
    MathError(std::string kind_, const std::string& msg)
        : std::runtime_error(kind_ + ": " + msg), kind(std::move(kind_)) {}
    std::string kind;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw MathError(kind, msg);
}

} // namespace coxhodge

#endif
