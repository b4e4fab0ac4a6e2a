#pragma once

// Exact number types shared by every module. Nothing in the core touches
// floating point.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagcoh {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<std::int64_t>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inadmissible input (bad Cartan type, element outside W^P, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

#define FLAGCOH_CHECK(cond, msg)                                          \
  do {                                                                    \
    if (!(cond)) throw ::flagcoh::InternalError(std::string(msg) + " (" + \
                                                #cond + ")");             \
  } while (0)

/// "p/q" (or "p" when q == 1), the wire format for rationals.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses "p", "-p" or "p/q". Throws InvalidInput on malformed text.
Rational parse_rational(const std::string& text);

RatVector to_rational(const IntVector& v);

/// Exact inverse of a square rational matrix. Throws InvalidInput if singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace flagcoh
