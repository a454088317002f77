#include "pathdepth/path_delta.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <stdexcept>

namespace pathdepth {
namespace {

void check_index_set(std::span<const int> indices) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || (i > 0 && indices[i] <= indices[i - 1])) {
      throw DomainError("index set must be strictly increasing positive integers");
    }
  }
}

IndexSet without(std::span<const int> delta, auto&& drop) {
  IndexSet out;
  for (int i : delta) {
    if (!drop(i)) out.push_back(i);
  }
  return out;
}

}  // namespace

WeightVector::WeightVector(std::vector<Exponent> weights, Monotonicity mode)
    : w_(std::move(weights)) {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] == 0) throw DomainError("edge weights must be positive");
    if (i == 0) continue;
    if (w_[i] < w_[i - 1]) throw DomainError("edge weights must be nondecreasing");
    if (mode == Monotonicity::Strict && w_[i] == w_[i - 1]) {
      throw DomainError("edge weights must be strictly increasing");
    }
  }
}

WeightVector WeightVector::parse(std::string_view text, Monotonicity mode) {
  std::vector<Exponent> weights;
  const std::string_view whole = text;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view piece = text.substr(0, comma);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    Exponent value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw ParseError("bad weight list '" + std::string(whole) + "'");
    }
    weights.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (text.empty()) throw ParseError("bad weight list '" + std::string(whole) + "'");
  }
  if (weights.empty()) throw ParseError("empty weight list");
  return WeightVector(std::move(weights), mode);
}

Exponent WeightVector::operator()(int i) const {
  if (i < 1 || i > edges()) {
    throw DomainError("edge index " + std::to_string(i) + " outside [1," +
                      std::to_string(edges()) + "]");
  }
  return w_[static_cast<std::size_t>(i - 1)];
}

bool WeightVector::strictly_increasing() const noexcept {
  return std::adjacent_find(w_.begin(), w_.end()) == w_.end();
}

std::string WeightVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w_[i]);
  }
  return out;
}

Monomial edge_monomial(const WeightVector& w, int i) {
  const Exponent weight = w(i);
  Monomial f(w.nvars());
  f.multiply_variable(static_cast<std::size_t>(i), weight);
  f.multiply_variable(static_cast<std::size_t>(i + 1), weight);
  return f;
}

MonomialIdeal path_ideal(const WeightVector& w) {
  return induced_subpath_ideal(w, 1, w.edges() + 1);
}

MonomialIdeal induced_subpath_ideal(const WeightVector& w, int i, int j) {
  const int nv = static_cast<int>(w.nvars());
  if (i < 1 || j < 1 || i > nv + 1 || j > nv) {
    throw DomainError("subpath [" + std::to_string(i) + "," + std::to_string(j) +
                      "] outside the vertex range [1," + std::to_string(nv) + "]");
  }
  std::vector<Monomial> gens;
  for (int k = i; k <= j - 1; ++k) gens.push_back(edge_monomial(w, k));
  return MonomialIdeal::minimalize(w.nvars(), std::move(gens));
}

IndexSet compute_delta(const WeightVector& w) {
  IndexSet out;
  for (int i = 1; i <= w.edges() - 2; ++i) {
    if (w(i) == w(i + 1)) out.push_back(i);
  }
  return out;
}

bool gluable(const Block& prev, const Block& next) noexcept {
  return prev.type() != 0 && next.type() != 0 && next.first - prev.last == 2;
}

std::vector<Block> block_decomposition(std::span<const int> indices) {
  check_index_set(indices);
  std::vector<Block> out;
  for (int i : indices) {
    if (!out.empty() && out.back().last + 1 == i) {
      out.back().last = i;
    } else {
      out.push_back({i, i});
    }
  }
  return out;
}

std::vector<ExtendedGroup> extended_decomposition(std::span<const Block> blocks) {
  std::vector<ExtendedGroup> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    const bool extend = i > 0 && gluable(blocks[i - 1], b);
    if (!extend) out.emplace_back();
    ExtendedGroup& group = out.back();
    group.blocks.push_back(b);
    if (b.type() == 1) ++group.ones;
    if (b.type() == 2) ++group.twos;
    group.residue = group.ones % 2;
  }
  return out;
}

BlockCounts block_counts(std::span<const int> delta) {
  const auto blocks = block_decomposition(delta);
  BlockCounts out;
  for (const auto& group : extended_decomposition(blocks)) {
    out.a += group.residue;
    out.b += group.twos + (group.ones - group.residue) / 2;
  }
  const int rest = static_cast<int>(delta.size()) - out.a - 2 * out.b;
  if (rest < 0 || rest % 3 != 0) {
    throw std::logic_error("block counts do not partition delta");
  }
  out.c = rest / 3;
  out.k = out.a + out.b + out.c;
  return out;
}

AbcPartition abc_partition(std::span<const int> delta) {
  std::deque<Block> pending;
  for (const auto& b : block_decomposition(delta)) pending.push_back(b);

  AbcPartition out;
  while (!pending.empty()) {
    const Block first = pending.front();
    pending.pop_front();
    switch (first.type()) {
      case 0:
        break;
      case 2:
        out.b_part.push_back(first.last - 1);
        out.b_part.push_back(first.last);
        break;
      default:
        if (pending.empty() || !gluable(first, pending.front())) {
          out.a_part.push_back(first.last);
          break;
        }
        // Pair the end of this block with the start of the next one and
        // continue on what remains of the next block.
        out.b_part.push_back(first.last);
        out.b_part.push_back(pending.front().first);
        if (pending.front().size() == 1) {
          pending.pop_front();
        } else {
          ++pending.front().first;
        }
        break;
    }
  }
  std::sort(out.a_part.begin(), out.a_part.end());
  std::sort(out.b_part.begin(), out.b_part.end());
  out.c_part = without(delta, [&](int i) {
    return std::binary_search(out.a_part.begin(), out.a_part.end(), i) ||
           std::binary_search(out.b_part.begin(), out.b_part.end(), i);
  });
  return out;
}

std::vector<int> mu_labeling(const AbcPartition& partition) {
  std::vector<int> out;
  for (const IndexSet* part :
       {&partition.a_part, &partition.b_part, &partition.c_part}) {
    out.insert(out.end(), part->rbegin(), part->rend());
  }
  return out;
}

DeltaProfile delta_profile(std::span<const int> delta) {
  DeltaProfile out;
  out.delta.assign(delta.begin(), delta.end());
  out.blocks = block_decomposition(delta);
  out.groups = extended_decomposition(out.blocks);
  out.counts = block_counts(delta);
  out.partition = abc_partition(delta);
  out.mu = mu_labeling(out.partition);

  const auto& c = out.counts;
  if (static_cast<int>(out.partition.a_part.size()) != c.a ||
      static_cast<int>(out.partition.b_part.size()) != 2 * c.b ||
      static_cast<int>(out.partition.c_part.size()) != 3 * c.c) {
    throw std::logic_error("A/B/C partition disagrees with block counts");
  }
  return out;
}

int d_function(const BlockCounts& counts, int delta_size, int t) {
  if (t < 1) throw DomainError("d(delta, t) needs t >= 1");
  const auto [a, b, c, k] = counts;
  if (t <= a) return k - t + 2;
  if (t <= a + 2 * b) return k + 1 - (t + a - 1) / 2;
  if (t <= delta_size) return k + 1 - (t + 2 * a + b - 1) / 3;
  return 1;
}

int d_function(std::span<const int> delta, int t) {
  return d_function(block_counts(delta), static_cast<int>(delta.size()), t);
}

int depth_formula(const WeightVector& w, int t) {
  if (t < 1) throw DomainError("depth formula needs t >= 1");
  if (w.edges() <= 2) return 1;
  const IndexSet delta = compute_delta(w);
  if (delta.empty()) return 1;
  return d_function(delta, t);
}

InequalityCheck d_inequality_lemmas(std::span<const int> delta, int t) {
  if (delta.empty()) throw DomainError("inequalities need a nonempty delta");
  InequalityCheck out;
  const int d = d_function(delta, t);
  if (t >= 2) {
    const IndexSet rest(delta.begin() + 1, delta.end());
    out.drop_min = d <= std::min(d_function(rest, t - 1), d_function(rest, t) + 1);
  }
  if (delta.front() == 1) {
    const IndexSet from3 = without(delta, [](int i) { return i < 3; });
    const IndexSet from4 = without(delta, [](int i) { return i < 4; });
    out.drop_below3 = d <= d_function(from3, t) + 1;
    out.drop_below4 = d <= d_function(from4, t) + 1;
  }
  return out;
}

}  // namespace pathdepth
