#ifndef UHG_ERRORS_HPP
#define UHG_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uhg {

/// A configured budget (candidate count, search nodes, vertex count, ...) was
/// exceeded. `estimate` carries the offending count when known.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, long long estimate = -1)
        : std::runtime_error(what), estimate(estimate) {}
    long long estimate;
};

/// A randomized generator ran out of retries.
class generation_error : public std::runtime_error {
public:
    generation_error(const std::string& what, long long attempts)
        : std::runtime_error(what), attempts(attempts) {}
    long long attempts;
};

/// Countdown used by bounded backtracking searches. `tick()` returns false
/// once the budget is spent.
struct SearchBudget {
    long long remaining;
    explicit SearchBudget(long long nodes = 1'000'000) : remaining(nodes) {}
    bool tick() { return --remaining >= 0; }
    bool exhausted() const { return remaining < 0; }
};

}  // namespace uhg

#endif
