#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace polyconf {

/// Arbitrary-precision integer. Configuration coefficients, lattice math and
/// Beatty floors all run on this type; there is no floating point anywhere.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form by gmpxx.
using Rat = mpq_class;

/// floor(a/b) rounding toward -infinity, any sign of b != 0.
Int floor_div(const Int& a, const Int& b);

/// floor(sqrt(a)), a >= 0.
Int floor_sqrt(const Int& a);

bool is_perfect_square(const Int& a);

/// Exact primality for machine-word inputs (trial division).
bool is_prime_u64(std::uint64_t n);

/// Checked narrowing; throws std::overflow_error when out of range.
std::int64_t to_i64(const Int& v);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::string to_string(const Int& v);
std::string to_string(const Rat& q);

}  // namespace polyconf
