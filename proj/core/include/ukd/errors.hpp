#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ukd {

using BigInt = mpz_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: duplicate entries, out-of-range values or positions,
/// objects that violate an operation's precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a configured enumeration or memory budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// No rational generating function of the requested degree fits the data.
class FitFailure : public Error {
 public:
  using Error::Error;
};

// Default budgets. Every operation that enumerates takes its limit as an
// argument defaulting to one of these.
inline constexpr int kDefaultExhaustiveMaxN = 10;
inline constexpr int kDefaultHamiltonianMaxN = 24;
inline constexpr int kDefaultPosetMaxN = 20;
inline constexpr int kDefaultProhibitionMaxK = 5;
inline constexpr std::uint64_t kDefaultGraphMaxCandidates = 362880;  // 9!
inline constexpr std::uint64_t kDefaultNodeTransferMaxCandidates = 5040;  // (2*4-1)!
inline constexpr std::uint64_t kDefaultArcTransferMaxCandidates = 362880;  // (2*5-1)!
inline constexpr std::size_t kDefaultHamiltonianMaxStates = std::size_t{1} << 23;

}  // namespace ukd
