#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace e6kit {

using Int = mpz_class;
using Rat = mpq_class;

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;

// Error categories. The CLI maps InputError subclasses to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
  ParseError(const std::string& msg, int line = 0, int column = 0);
  int line;
  int column;
};

// Roots that do not span E6 over Z. elementary_divisors holds the Smith
// diagonal of the coordinate matrix.
struct GenerationError : InputError {
  GenerationError(const std::string& msg, std::vector<Int> divisors);
  std::vector<Int> elementary_divisors;
};

struct PartitionError : InputError {
  using InputError::InputError;
};

struct DegenerateInput : InputError {
  using InputError::InputError;
};

struct CyclicRules : std::logic_error {
  using std::logic_error::logic_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

// Parses "p", "-p" or "p/q" into a canonical rational.
Rat parse_rational(const std::string& text);

}  // namespace e6kit
