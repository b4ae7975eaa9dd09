#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace torgit {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Integers print as "n", non-integral rationals as "p/q".
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Accepts "n", "-n" and "p/q"; throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);

RatVector to_rational(const IntVector& v);

/// Positive multiple of v with coprime integer entries; zero stays zero.
IntVector primitive(const RatVector& v);
IntVector primitive(const IntVector& v);

Integer gcd_of(const IntVector& v);
Integer lcm(const Integer& a, const Integer& b);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

int sign(const Integer& v);
int sign(const Rational& v);

/// floor(sqrt(q)) for q >= 0.
Integer floor_sqrt(const Rational& q);

std::string to_string(const IntVector& v);

}  // namespace torgit
