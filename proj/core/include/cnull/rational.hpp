#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cnull {

/// Exact rational number. gmpxx keeps it canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses "p" or "p/q" in base 10. Throws Error{SchemaError} on bad input or
/// a zero denominator.
Rat parse_rat(std::string_view text);

/// Inverse of parse_rat: "p" for integers, "p/q" otherwise.
std::string format_rat(const Rat& value);

/// max(|numerator|, denominator)
BigInt height(const Rat& value);

}  // namespace cnull
