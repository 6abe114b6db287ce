#ifndef GHW_DEBUG_HPP
#define GHW_DEBUG_HPP

#include <stdexcept>
#include <string>

namespace ghw {

// Raised when a runtime invariant check fails. The CLI maps it to exit code 3.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// True when GHW_DEBUG_ASSERT=1 is set in the environment, or when forced on
// via set_debug_checks (tests use this).
bool debug_checks_enabled();
void set_debug_checks(bool enabled);

inline void check_invariant(bool condition, const char* what) {
    if (!condition) throw InvariantViolation(what);
}

// Only evaluated when debug checks are on.
template <class F>
void debug_check(F&& predicate, const char* what) {
    if (debug_checks_enabled() && !predicate()) throw InvariantViolation(what);
}

}  // namespace ghw

#endif  // GHW_DEBUG_HPP
