#pragma once

#include <stdexcept>
#include <string>

namespace mbar {

// Raised for unstable (g,n), out-of-range indices and ill-posed series
// operations. The CLI maps it to exit code 2.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when a brute-force computation would exceed its configured budget.
// The CLI maps it to exit code 3.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_stable(int g, int n) { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

inline void require_stable(int g, int n) {
    if (!is_stable(g, n)) {
        throw DomainError("unstable type (g,n) = (" + std::to_string(g) + "," + std::to_string(n) +
                          "): need 2g-2+n > 0");
    }
}

}  // namespace mbar
