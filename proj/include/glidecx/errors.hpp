#ifndef GLIDECX_ERRORS_HPP
#define GLIDECX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glidecx {

// Invalid input or violated precondition. CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured enumeration budget (cubes, cycles) was exhausted.
// CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace glidecx

#endif
