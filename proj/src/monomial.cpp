#include "pathdepth/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

namespace pathdepth {
namespace {

void check_same(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch(a.nvars(), b.nvars());
}

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ExponentOverflow();
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

unsigned long parse_unsigned(std::string_view s, std::string_view context) {
  unsigned long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + std::string(s) + "' in '" +
                     std::string(context) + "'");
  }
  return value;
}

}  // namespace

Monomial Monomial::variable(std::size_t nvars, std::size_t var, Exponent e) {
  if (var == 0 || var > nvars) {
    throw DomainError("variable x" + std::to_string(var) + " outside x1..x" +
                      std::to_string(nvars));
  }
  Monomial m(nvars);
  m.exps_[var - 1] = e;
  return m;
}

Monomial Monomial::parse(std::string_view text, std::size_t nvars) {
  const std::string_view whole = text;
  text = trim(text);
  Monomial m(nvars);
  if (text == "1") return m;
  while (true) {
    const auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    if (factor.size() < 2 || factor.front() != 'x') {
      throw ParseError("bad monomial factor in '" + std::string(whole) + "'");
    }
    factor.remove_prefix(1);
    unsigned long exponent = 1;
    const auto caret = factor.find('^');
    if (caret != std::string_view::npos) {
      exponent = parse_unsigned(factor.substr(caret + 1), whole);
      factor = factor.substr(0, caret);
    }
    const unsigned long var = parse_unsigned(factor, whole);
    if (exponent > std::numeric_limits<Exponent>::max()) throw ExponentOverflow();
    m.multiply_variable(var, static_cast<Exponent>(exponent));
    if (star == std::string_view::npos) break;
    text = text.substr(star + 1);
  }
  return m;
}

bool Monomial::is_identity() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  check_same(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    exps_[i] = checked_add(exps_[i], other.exps_[i]);
  }
  return *this;
}

Monomial& Monomial::multiply_variable(std::size_t var, Exponent e) {
  if (var == 0 || var > exps_.size()) {
    throw DomainError("variable x" + std::to_string(var) + " outside x1..x" +
                      std::to_string(exps_.size()));
  }
  exps_[var - 1] = checked_add(exps_[var - 1], e);
  return *this;
}

bool divides(const Monomial& m1, const Monomial& m2) {
  check_same(m1, m2);
  const auto a = m1.exponents();
  const auto b = m2.exponents();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& m1, const Monomial& m2) {
  check_same(m1, m2);
  std::vector<Exponent> out(m1.nvars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(m1[i], m2[i]);
  return Monomial(std::move(out));
}

Monomial gcd(const Monomial& m1, const Monomial& m2) {
  check_same(m1, m2);
  std::vector<Exponent> out(m1.nvars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(m1[i], m2[i]);
  return Monomial(std::move(out));
}

Monomial colon(const Monomial& g, const Monomial& f) {
  check_same(g, f);
  std::vector<Exponent> out(g.nvars());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = g[i] > f[i] ? g[i] - f[i] : 0;
  }
  return Monomial(std::move(out));
}

Monomial divide(const Monomial& m, const Monomial& divisor) {
  if (!divides(divisor, m)) {
    throw DomainError(divisor.to_string() + " does not divide " + m.to_string());
  }
  return colon(m, divisor);
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace pathdepth
