#pragma once

// Ordinals below omega^omega in Cantor normal form, extended by a top value
// INF that compares greater than every ordinal.
//
// Only natural-number exponents are supported: every ordinal handled here is
// strictly smaller than omega^omega. Multiplication and exponentiation are not
// provided.
//
// Text notation (whitespace is ignored):
//
//   expr := "INF" | "0" | term ("+" term)*
//   term := "w" ("^" nat)? ("*" nat)? | nat
//
// A sum is evaluated with ordinal addition, so "3+w" denotes omega. The
// canonical spelling of omega*2+5 is "w*2+5" and that of omega^2 is "w^2".

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace geodometer {

  // One summand omega^exponent * coefficient of a Cantor normal form.
  struct CnfTerm {
    std::uint32_t exponent    = 0;
    std::uint64_t coefficient = 1;

    friend bool operator==(CnfTerm const&, CnfTerm const&) = default;
  };

  class ExtOrdinal {
    struct Infinity {
      friend bool operator==(Infinity, Infinity) noexcept {
        return true;
      }
    };
    // Strictly decreasing exponents, positive coefficients; empty means 0.
    using Terms = std::vector<CnfTerm>;

   public:
    ExtOrdinal() = default;

    static ExtOrdinal zero() {
      return {};
    }

    static ExtOrdinal inf() {
      ExtOrdinal result;
      result.value_ = Infinity{};
      return result;
    }

    static ExtOrdinal natural(std::uint64_t n) {
      return omega_power(0, n);
    }

    static ExtOrdinal omega() {
      return omega_power(1, 1);
    }

    static ExtOrdinal omega_power(std::uint32_t exponent,
                                  std::uint64_t coefficient = 1) {
      ExtOrdinal result;
      if (coefficient != 0) {
        result.value_ = Terms{{exponent, coefficient}};
      }
      return result;
    }

    // Builds an ordinal from arbitrary terms: they are summed left to right
    // with ordinal addition, so non-canonical input is normalized.
    static ExtOrdinal from_terms(std::span<CnfTerm const> terms) {
      ExtOrdinal result;
      for (auto const& t : terms) {
        result = result + omega_power(t.exponent, t.coefficient);
      }
      return result;
    }

    [[nodiscard]] bool is_inf() const noexcept {
      return std::holds_alternative<Infinity>(value_);
    }

    [[nodiscard]] bool is_zero() const noexcept {
      return !is_inf() && cnf().empty();
    }

    // True for 0, 1, 2, ...
    [[nodiscard]] bool is_natural() const noexcept {
      return !is_inf() && (cnf().empty() || cnf().front().exponent == 0);
    }

    [[nodiscard]] bool is_successor() const noexcept {
      return !is_inf() && !cnf().empty() && cnf().back().exponent == 0;
    }

    // Nonzero ordinals that are not successors.
    [[nodiscard]] bool is_limit() const noexcept {
      return !is_inf() && !cnf().empty() && cnf().back().exponent > 0;
    }

    [[nodiscard]] std::optional<std::uint64_t> as_natural() const noexcept {
      if (!is_natural()) {
        return std::nullopt;
      }
      return cnf().empty() ? 0 : cnf().front().coefficient;
    }

    // The CNF terms, highest exponent first. Empty for 0 and for INF.
    [[nodiscard]] std::span<CnfTerm const> terms() const noexcept {
      if (is_inf()) {
        return {};
      }
      return cnf();
    }

    [[nodiscard]] std::uint32_t leading_exponent() const noexcept {
      return terms().empty() ? 0 : terms().front().exponent;
    }

    // this + 1
    [[nodiscard]] ExtOrdinal successor() const {
      return *this + natural(1);
    }

    // The ordinal xi with xi + 1 == *this; requires is_successor().
    [[nodiscard]] ExtOrdinal predecessor() const {
      if (!is_successor()) {
        throw InvalidArgument("predecessor of a non-successor ordinal");
      }
      ExtOrdinal result = *this;
      auto&      t      = std::get<Terms>(result.value_);
      if (--t.back().coefficient == 0) {
        t.pop_back();
      }
      return result;
    }

    friend ExtOrdinal operator+(ExtOrdinal const& a, ExtOrdinal const& b) {
      if (a.is_inf() || b.is_inf()) {
        return inf();
      }
      auto const& rhs = b.cnf();
      if (rhs.empty()) {
        return a;
      }
      // Terms of a below the leading exponent of b are absorbed.
      auto const lead = rhs.front().exponent;
      Terms      sum;
      for (auto const& t : a.cnf()) {
        if (t.exponent > lead) {
          sum.push_back(t);
        } else {
          if (t.exponent == lead) {
            sum.push_back(
                {lead, checked_add(t.coefficient, rhs.front().coefficient)});
          }
          break;
        }
      }
      if (sum.empty() || sum.back().exponent != lead) {
        sum.push_back(rhs.front());
      }
      sum.insert(sum.end(), rhs.begin() + 1, rhs.end());
      ExtOrdinal result;
      result.value_ = std::move(sum);
      return result;
    }

    ExtOrdinal& operator+=(ExtOrdinal const& other) {
      return *this = *this + other;
    }

    friend bool operator==(ExtOrdinal const&, ExtOrdinal const&) = default;

    friend std::strong_ordering operator<=>(ExtOrdinal const& a,
                                            ExtOrdinal const& b) {
      if (a.is_inf() || b.is_inf()) {
        return a.is_inf() <=> b.is_inf();
      }
      auto const& x = a.cnf();
      auto const& y = b.cnf();
      for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i].exponent != y[i].exponent) {
          return x[i].exponent <=> y[i].exponent;
        }
        if (x[i].coefficient != y[i].coefficient) {
          return x[i].coefficient <=> y[i].coefficient;
        }
      }
      return x.size() <=> y.size();
    }

    [[nodiscard]] std::string to_string() const {
      if (is_inf()) {
        return "INF";
      }
      if (cnf().empty()) {
        return "0";
      }
      std::string out;
      for (auto const& t : cnf()) {
        if (!out.empty()) {
          out += '+';
        }
        if (t.exponent == 0) {
          out += std::to_string(t.coefficient);
          continue;
        }
        out += 'w';
        if (t.exponent > 1) {
          out += '^' + std::to_string(t.exponent);
        }
        if (t.coefficient > 1) {
          out += '*' + std::to_string(t.coefficient);
        }
      }
      return out;
    }

   private:
    [[nodiscard]] Terms const& cnf() const noexcept {
      return *std::get_if<Terms>(&value_);
    }

    static std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
      if (x > std::numeric_limits<std::uint64_t>::max() - y) {
        throw std::overflow_error("ordinal coefficient overflow");
      }
      return x + y;
    }

    std::variant<Terms, Infinity> value_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Named operations
  ////////////////////////////////////////////////////////////////////////

  inline std::strong_ordering compare(ExtOrdinal const& a,
                                      ExtOrdinal const& b) {
    return a <=> b;
  }

  inline ExtOrdinal add(ExtOrdinal const& a, ExtOrdinal const& b) {
    return a + b;
  }

  inline std::string format(ExtOrdinal const& a) {
    return a.to_string();
  }

  // sup{x + 1 : x in values}: the least ordinal strictly above every member.
  // Empty input gives 0; any INF member gives INF.
  inline ExtOrdinal sup_plus(std::span<ExtOrdinal const> values) {
    ExtOrdinal result;
    for (auto const& v : values) {
      if (v.is_inf()) {
        return ExtOrdinal::inf();
      }
      result = std::max(result, v.successor());
    }
    return result;
  }

  // Plain supremum of a finite set (its maximum); 0 when empty.
  inline ExtOrdinal sup(std::span<ExtOrdinal const> values) {
    ExtOrdinal result;
    for (auto const& v : values) {
      result = std::max(result, v);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    class OrdinalParser {
     public:
      explicit OrdinalParser(std::string_view text) : text_(text) {}

      ExtOrdinal parse() {
        skip_space();
        if (text_.substr(pos_).starts_with("INF")) {
          pos_ += 3;
          expect_end();
          return ExtOrdinal::inf();
        }
        ExtOrdinal sum = term();
        skip_space();
        while (pos_ < text_.size() && text_[pos_] == '+') {
          ++pos_;
          sum = sum + term();
          skip_space();
        }
        expect_end();
        return sum;
      }

     private:
      ExtOrdinal term() {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == 'w') {
          ++pos_;
          std::uint64_t exponent    = 1;
          std::uint64_t coefficient = 1;
          skip_space();
          if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            exponent = natural();
            if (exponent > std::numeric_limits<std::uint32_t>::max()) {
              throw ParseError("exponent too large", pos_);
            }
            skip_space();
          }
          if (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            coefficient = natural();
          }
          return ExtOrdinal::omega_power(
              static_cast<std::uint32_t>(exponent), coefficient);
        }
        return ExtOrdinal::natural(natural());
      }

      std::uint64_t natural() {
        skip_space();
        auto const start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          auto const digit = static_cast<std::uint64_t>(text_[pos_] - '0');
          if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
            throw ParseError("number too large", start);
          }
          value = value * 10 + digit;
          ++pos_;
        }
        if (pos_ == start) {
          throw ParseError("expected a natural number or 'w'", start);
        }
        return value;
      }

      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      void expect_end() {
        skip_space();
        if (pos_ != text_.size()) {
          throw ParseError("unexpected character '"
                               + std::string(1, text_[pos_]) + "'",
                           pos_);
        }
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace detail

  inline ExtOrdinal parse_ordinal(std::string_view text) {
    return detail::OrdinalParser(text).parse();
  }

}  // namespace geodometer
