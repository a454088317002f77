#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace pathdepth {

/// Column-major sparse integer matrix; each column lists (row, value) pairs
/// sorted by row with nonzero values.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;

  [[nodiscard]] std::size_t cols() const noexcept { return columns.size(); }
};

/// Rank over the rationals. Column reduction with fraction-free updates
/// (c <- p*c - q*pivot, then divided by its content) on checked 64-bit
/// integers; restarts on GMP integers if anything overflows.
[[nodiscard]] std::size_t rank_exact(const SparseMatrix& m);

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

/// Rank over Z/pZ. `prime` must be below 2^31.
[[nodiscard]] std::size_t rank_mod_p(const SparseMatrix& m,
                                     std::uint64_t prime = kDefaultPrime);

}  // namespace pathdepth
