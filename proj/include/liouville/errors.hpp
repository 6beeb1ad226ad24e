#pragma once

#include <stdexcept>
#include <string>

namespace liouville {

/// Argument outside the domain of an arithmetic function or operation.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A configured size limit (sieve block, memo budget) would be exceeded.
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

/// A caller-side contract was violated, e.g. a hyperbola split with a*b != x.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// The arithmetic function handed to a runner does not satisfy the
/// hypotheses |a(n)| <= 1 and A(x) = O(sqrt(x)).
struct hypothesis_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact integer accumulation overflowed 64 bits.
struct arithmetic_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// A real-valued computation produced a non-finite value.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An unconditional check inside an experiment runner did not hold.
struct assertion_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace liouville
