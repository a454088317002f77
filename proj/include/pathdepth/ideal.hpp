#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathdepth/monomial.hpp"

namespace pathdepth {

/// A monomial ideal held by its minimal generating set.
///
/// Generators are an antichain under divisibility, kept in lexicographic
/// order, so two ideals are equal exactly when their generator lists are.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// The zero ideal in `nvars` variables.
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}

  /// Ideal generated by an arbitrary list; redundant generators are dropped.
  static MonomialIdeal minimalize(std::size_t nvars,
                                  std::vector<Monomial> gens);
  static MonomialIdeal unit(std::size_t nvars);
  /// Parses a comma separated generator list, e.g. "x1*x2, x2^3". The text
  /// "0" (or an empty string) is the zero ideal.
  static MonomialIdeal parse(std::string_view text, std::size_t nvars);

  [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
  [[nodiscard]] std::span<const Monomial> generators() const noexcept {
    return gens_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return gens_.empty(); }
  [[nodiscard]] bool is_unit() const noexcept;

  [[nodiscard]] bool contains(const Monomial& m) const;
  /// Componentwise max over all generators.
  [[nodiscard]] Monomial lcm_of_generators() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// I^t; I^0 is the unit ideal.
[[nodiscard]] MonomialIdeal power(const MonomialIdeal& ideal, unsigned t);
/// (I : f), generated by g / gcd(g, f) over the generators g of I.
[[nodiscard]] MonomialIdeal colon(const MonomialIdeal& ideal,
                                  const Monomial& f);
[[nodiscard]] MonomialIdeal intersection(const MonomialIdeal& lhs,
                                         const MonomialIdeal& rhs);
[[nodiscard]] MonomialIdeal sum(const MonomialIdeal& lhs,
                                const MonomialIdeal& rhs);
[[nodiscard]] MonomialIdeal product(const MonomialIdeal& lhs,
                                    const MonomialIdeal& rhs);
/// Sum of a list of ideals over the same ring.
[[nodiscard]] MonomialIdeal sum(std::size_t nvars,
                                std::span<const MonomialIdeal> ideals);

/// True iff `lhs` is contained in `rhs`.
[[nodiscard]] bool is_subset(const MonomialIdeal& lhs,
                             const MonomialIdeal& rhs);

}  // namespace pathdepth
