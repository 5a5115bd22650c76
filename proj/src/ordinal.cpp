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

#include "transfinite/ordinal.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "transfinite/errors.hpp"

namespace transfinite {

Ordinal::Ordinal() = default;

Ordinal Ordinal::from_natural(const Natural& n) {
  Ordinal result;
  if (n > 0) result.terms_.push_back(OrdinalTerm{Ordinal(), n});
  return result;
}

Ordinal Ordinal::omega() { return power_of_omega(from_natural(1)); }

Ordinal Ordinal::power_of_omega(const Ordinal& exponent, const Natural& coefficient) {
  Ordinal result;
  if (coefficient > 0) result.terms_.push_back(OrdinalTerm{exponent, coefficient});
  return result;
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient <= 0) throw DomainError("ordinal coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw DomainError("ordinal exponents must strictly decrease");
    }
  }
  Ordinal result;
  result.terms_ = std::move(terms);
  return result;
}

std::span<const OrdinalTerm> Ordinal::terms() const { return terms_; }

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
}

std::optional<Natural> Ordinal::finite_value() const {
  if (terms_.empty()) return Natural(0);
  if (!is_finite()) return std::nullopt;
  return terms_.front().coefficient;
}

Ordinal Ordinal::successor() const { return *this + from_natural(1); }

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const OrdinalTerm& x = a.terms_[i];
    const OrdinalTerm& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0) return c;
    if (x.coefficient != y.coefficient) {
      return x.coefficient < y.coefficient ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
  }
  return a.terms_.size() <=> b.terms_.size();
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto rhs = b.terms();
  const Ordinal& lead = rhs.front().exponent;
  std::vector<OrdinalTerm> out;
  Natural carried = 0;
  for (const OrdinalTerm& t : a.terms()) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else {
      // Terms below the leading exponent of b are absorbed; an equal
      // exponent merges its coefficient into b's leading term.
      if (t.exponent == lead) carried = t.coefficient;
      break;
    }
  }
  out.push_back(OrdinalTerm{lead, rhs.front().coefficient + carried});
  out.insert(out.end(), rhs.begin() + 1, rhs.end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const auto lhs = a.terms();
  const Ordinal& lead = lhs.front().exponent;
  Ordinal result;
  // a * (sum of terms) = sum of a * term, by left distributivity.
  for (const OrdinalTerm& t : b.terms()) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      // a * k: the leading coefficient scales, lower terms are kept once.
      std::vector<OrdinalTerm> scaled(lhs.begin(), lhs.end());
      scaled.front().coefficient *= t.coefficient;
      piece = Ordinal::from_terms(std::move(scaled));
    } else {
      piece = Ordinal::power_of_omega(lead + t.exponent, t.coefficient);
    }
    result = result + piece;
  }
  return result;
}

OrdinalClass classify(const Ordinal& a) {
  const auto terms = a.terms();
  if (terms.empty()) return ZeroOrdinal{};
  const OrdinalTerm& last = terms.back();
  if (!last.exponent.is_zero()) return LimitOrdinal{};
  std::vector<OrdinalTerm> pred(terms.begin(), terms.end());
  if (pred.back().coefficient == 1) {
    pred.pop_back();
  } else {
    pred.back().coefficient -= 1;
  }
  return SuccessorOrdinal{Ordinal::from_terms(std::move(pred))};
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    skip_space();
    if (at_end()) fail("empty ordinal expression");
    Ordinal value = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return value;
  }

 private:
  Ordinal expr() {
    Ordinal value = term();
    while (consume('+')) value = value + term();
    return value;
  }

  Ordinal term() {
    Ordinal value = factor();
    while (consume('*')) value = value * factor();
    return value;
  }

  Ordinal factor() {
    skip_space();
    if (consume('(')) {
      Ordinal inner = expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (consume('w')) {
      Ordinal exponent = Ordinal::from_natural(1);
      if (consume('^')) exponent = factor();
      return Ordinal::power_of_omega(exponent);
    }
    return Ordinal::from_natural(integer());
  }

  Natural integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      if (at_end()) fail("unexpected end of input");
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    return Natural(std::string(text_.substr(start, pos_ - start)));
  }

  bool consume(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_atomic(const Ordinal& a) {
  const auto terms = a.terms();
  return terms.size() <= 1 && (terms.empty() || terms.front().exponent.is_zero() ||
                               terms.front().coefficient == 1);
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const OrdinalTerm& t : a.terms()) {
    if (!first) out << '+';
    first = false;
    if (t.exponent.is_zero()) {
      out << t.coefficient;
      continue;
    }
    out << 'w';
    if (t.exponent != Ordinal::from_natural(1)) {
      out << '^';
      if (is_atomic(t.exponent)) {
        out << to_string(t.exponent);
      } else {
        out << '(' << to_string(t.exponent) << ')';
      }
    }
    if (t.coefficient != 1) out << '*' << t.coefficient;
  }
  return out.str();
}

std::string describe(const OrdinalClass& c) {
  if (std::holds_alternative<ZeroOrdinal>(c)) return "zero";
  if (std::holds_alternative<LimitOrdinal>(c)) return "limit";
  return "successor of " + to_string(std::get<SuccessorOrdinal>(c).predecessor);
}

}  // namespace transfinite
