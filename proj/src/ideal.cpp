#include "pathdepth/ideal.hpp"

#include <algorithm>

namespace pathdepth {
namespace {

void check_same(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch(a.nvars(), b.nvars());
}

}  // namespace

MonomialIdeal MonomialIdeal::minimalize(std::size_t nvars,
                                        std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw DimensionMismatch(nvars, g.nvars());
  }
  // A proper divisor has strictly smaller degree, so scanning by degree lets
  // each candidate be tested against the survivors only.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal out(nvars);
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(out.gens_.begin(), out.gens_.end(),
                    [&](const Monomial& kept) { return divides(kept, g); });
    if (!redundant) out.gens_.push_back(std::move(g));
  }
  std::sort(out.gens_.begin(), out.gens_.end());
  return out;
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  MonomialIdeal out(nvars);
  out.gens_.emplace_back(nvars);
  return out;
}

MonomialIdeal MonomialIdeal::parse(std::string_view text, std::size_t nvars) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return MonomialIdeal(nvars);
  const auto last = text.find_last_not_of(" \t");
  if (text.substr(first, last - first + 1) == "0") return MonomialIdeal(nvars);

  std::vector<Monomial> gens;
  while (true) {
    const auto comma = text.find(',');
    gens.push_back(Monomial::parse(text.substr(0, comma), nvars));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return minimalize(nvars, std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_identity();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != nvars_) throw DimensionMismatch(nvars_, m.nvars());
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

Monomial MonomialIdeal::lcm_of_generators() const {
  Monomial out(nvars_);
  for (const auto& g : gens_) out = lcm(out, g);
  return out;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned t) {
  MonomialIdeal out = MonomialIdeal::unit(ideal.nvars());
  for (unsigned k = 0; k < t; ++k) out = product(out, ideal);
  return out;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
  if (f.nvars() != ideal.nvars()) throw DimensionMismatch(ideal.nvars(), f.nvars());
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(colon(g, f));
  return MonomialIdeal::minimalize(ideal.nvars(), std::move(gens));
}

MonomialIdeal intersection(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  check_same(lhs, rhs);
  std::vector<Monomial> gens;
  gens.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs.generators()) {
    for (const auto& b : rhs.generators()) gens.push_back(lcm(a, b));
  }
  return MonomialIdeal::minimalize(lhs.nvars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  check_same(lhs, rhs);
  std::vector<Monomial> gens(lhs.generators().begin(), lhs.generators().end());
  gens.insert(gens.end(), rhs.generators().begin(), rhs.generators().end());
  return MonomialIdeal::minimalize(lhs.nvars(), std::move(gens));
}

MonomialIdeal sum(std::size_t nvars, std::span<const MonomialIdeal> ideals) {
  std::vector<Monomial> gens;
  for (const auto& ideal : ideals) {
    if (ideal.nvars() != nvars) throw DimensionMismatch(nvars, ideal.nvars());
    gens.insert(gens.end(), ideal.generators().begin(), ideal.generators().end());
  }
  return MonomialIdeal::minimalize(nvars, std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  check_same(lhs, rhs);
  std::vector<Monomial> gens;
  gens.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs.generators()) {
    for (const auto& b : rhs.generators()) gens.push_back(a * b);
  }
  return MonomialIdeal::minimalize(lhs.nvars(), std::move(gens));
}

bool is_subset(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  check_same(lhs, rhs);
  return std::all_of(lhs.generators().begin(), lhs.generators().end(),
                     [&](const Monomial& g) { return rhs.contains(g); });
}

}  // namespace pathdepth
