#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathdepth/errors.hpp"

namespace pathdepth {

using Exponent = std::uint32_t;

/// A monomial x_1^{a_1} ... x_N^{a_N} stored as its exponent vector.
///
/// Element access is 0-based; everything user facing (text, variable
/// arguments, supports) is 1-based, matching the x1, x2, ... naming.
class Monomial {
 public:
  Monomial() = default;

  /// The identity monomial in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  /// x_var^e in `nvars` variables; `var` is 1-based.
  static Monomial variable(std::size_t nvars, std::size_t var, Exponent e = 1);

  /// Parses "x1^2*x3" (or "1" for the identity).
  static Monomial parse(std::string_view text, std::size_t nvars);

  [[nodiscard]] std::size_t nvars() const noexcept { return exps_.size(); }
  [[nodiscard]] Exponent operator[](std::size_t i) const { return exps_[i]; }
  [[nodiscard]] std::span<const Exponent> exponents() const noexcept {
    return exps_;
  }

  [[nodiscard]] bool is_identity() const noexcept;
  [[nodiscard]] std::uint64_t total_degree() const noexcept;
  /// 1-based indices of the variables with positive exponent.
  [[nodiscard]] std::vector<int> support() const;

  [[nodiscard]] std::string to_string() const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial lhs, const Monomial& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// Multiplies in x_var^e (1-based `var`).
  Monomial& multiply_variable(std::size_t var, Exponent e);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic on exponent vectors; this is the canonical generator order.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
};

/// True iff m1 divides m2.
[[nodiscard]] bool divides(const Monomial& m1, const Monomial& m2);
[[nodiscard]] Monomial lcm(const Monomial& m1, const Monomial& m2);
[[nodiscard]] Monomial gcd(const Monomial& m1, const Monomial& m2);
/// g / gcd(g, f): the generator of (g) : f.
[[nodiscard]] Monomial colon(const Monomial& g, const Monomial& f);
/// Exact quotient; throws DomainError unless `divisor` divides `m`.
[[nodiscard]] Monomial divide(const Monomial& m, const Monomial& divisor);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace pathdepth
