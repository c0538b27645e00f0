#ifndef HEATBOX_ERRORS_HPP
#define HEATBOX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heatbox {

// Invalid argument outside the mathematical domain of an operation.
using domain_error = std::domain_error;

// A truncated sum or series would need more terms than the caller allows.
class resource_error : public std::runtime_error {
public:
    resource_error(const std::string& msg, long long needed)
        : std::runtime_error(msg), needed_terms(needed) {}
    long long needed_terms;
};

// A quadrature or iteration failed to reach the requested tolerance.
class numerical_error : public std::runtime_error {
public:
    numerical_error(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_error(achieved) {}
    double achieved_error;
};

} // namespace heatbox

#endif
