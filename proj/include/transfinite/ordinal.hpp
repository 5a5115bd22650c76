// Copyright 2026 The Transfinite Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Ordinals below epsilon_0 in Cantor normal form.
//
// An Ordinal is a strictly decreasing sum  w^e1*c1 + w^e2*c2 + ... + w^en*cn
// where every exponent is itself an Ordinal and every coefficient is a
// positive arbitrary-precision integer. Because exponents nest finitely, every
// representable value is below epsilon_0; there is no way to build one that
// is not. The empty sum is zero.
//
// Text form (used on the command line and in reports):
//
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := INT | 'w' ['^' atom] | '(' expr ')'
//   atom   := INT | 'w' ['^' atom] | '(' expr ')'
//
// so "w^2*3+w+7", "w^w", "w^(w+1)*2" are all accepted. Parsing normalizes:
// "1+w" denotes w and "2*w" denotes w.

#ifndef TRANSFINITE_ORDINAL_HPP_
#define TRANSFINITE_ORDINAL_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace transfinite {

using Natural = boost::multiprecision::cpp_int;

struct OrdinalTerm;

class Ordinal {
 public:
  // Zero.
  Ordinal();

  static Ordinal from_natural(const Natural& n);
  static Ordinal from_natural(std::uint64_t n) { return from_natural(Natural(n)); }
  static Ordinal omega();
  // w^exponent * coefficient; coefficient zero yields zero.
  static Ordinal power_of_omega(const Ordinal& exponent, const Natural& coefficient = 1);

  // Builds from a term list; throws DomainError unless the list is already
  // canonical (strictly decreasing exponents, positive coefficients).
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  std::span<const OrdinalTerm> terms() const;

  bool is_zero() const;
  bool is_finite() const;
  // The value as a natural, when finite.
  std::optional<Natural> finite_value() const;

  Ordinal successor() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  Natural coefficient;

  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

Ordinal operator+(const Ordinal& a, const Ordinal& b);
Ordinal operator*(const Ordinal& a, const Ordinal& b);

struct ZeroOrdinal {
  friend bool operator==(const ZeroOrdinal&, const ZeroOrdinal&) = default;
};
struct SuccessorOrdinal {
  Ordinal predecessor;
  friend bool operator==(const SuccessorOrdinal&, const SuccessorOrdinal&) = default;
};
struct LimitOrdinal {
  friend bool operator==(const LimitOrdinal&, const LimitOrdinal&) = default;
};
using OrdinalClass = std::variant<ZeroOrdinal, SuccessorOrdinal, LimitOrdinal>;

OrdinalClass classify(const Ordinal& a);

// Throws ParseError carrying the offending byte offset.
Ordinal parse_ordinal(std::string_view text);
std::string to_string(const Ordinal& a);

// "zero", "limit" or "successor of <pred>".
std::string describe(const OrdinalClass& c);

}  // namespace transfinite

#endif  // TRANSFINITE_ORDINAL_HPP_
