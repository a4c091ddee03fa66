#pragma once

// Dense GF(2) linear systems. Used for the coefficient-bit systems that arise
// from Artin-Schreier equations and bounded quadratic-form searches.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace asq2 {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t i) const noexcept { return w_[i / 64] >> (i % 64) & 1u; }
  void set(std::size_t i, bool v = true) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (i % 64);
    if (v) {
      w_[i / 64] |= m;
    } else {
      w_[i / 64] &= ~m;
    }
  }
  void flip(std::size_t i) noexcept { w_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVec& operator^=(const BitVec& o) noexcept {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  bool any() const noexcept {
    for (auto w : w_) {
      if (w) return true;
    }
    return false;
  }
  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Solution set of A x = b: particular + span(kernel).
struct AffineSolution {
  BitVec particular;
  std::vector<BitVec> kernel;
};

/// Solves sum_j x_j * columns[j] = target, every vector of length `rows`.
inline std::optional<AffineSolution> solve_gf2(const std::vector<BitVec>& columns, std::size_t rows,
                                               const BitVec& target) {
  const std::size_t n = columns.size();
  std::vector<BitVec> m(rows, BitVec(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      if (columns[j].get(i)) m[i].set(j);
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (target.get(i)) m[i].set(n);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && !m[p].get(c)) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && m[i].get(c)) m[i] ^= m[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i].get(n)) return std::nullopt;
  }

  AffineSolution sol{BitVec(n), {}};
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < r; ++i) {
    is_pivot[pivot_col[i]] = true;
    if (m[i].get(n)) sol.particular.set(pivot_col[i]);
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVec k(n);
    k.set(f);
    for (std::size_t i = 0; i < r; ++i) {
      if (m[i].get(f)) k.set(pivot_col[i]);
    }
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

}  // namespace asq2
