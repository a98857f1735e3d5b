#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace spaf {

/// Dense index of a distinct capacity value, 1..d. See FlowRank.
using Rank = std::uint32_t;
/// No edge / no flow.
inline constexpr Rank kNoFlow = 0;
/// Identity of the (max,min) semiring; used on capacity-matrix diagonals.
inline constexpr Rank kInfiniteFlow = std::numeric_limits<Rank>::max();

/// Path length in edges.
using Length = std::uint32_t;
inline constexpr Length kUnreachable = std::numeric_limits<Length>::max();

/// Saturating length addition: kUnreachable absorbs.
constexpr Length add_lengths(Length a, Length b) {
  if (a == kUnreachable || b == kUnreachable) return kUnreachable;
  return a + b;
}

/// Square row-major matrix. Vertices are 0-indexed here.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t n, T fill) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

/// Entries are capacity ranks: kNoFlow off the edge set, kInfiniteFlow on the
/// diagonal.
using CapacityMatrix = Matrix<Rank>;
/// Entries are lengths or kUnreachable; diagonal 0.
using DistanceMatrix = Matrix<Length>;
using BoolMatrix = Matrix<std::uint8_t>;
/// Intermediate vertex per entry of a product.
using WitnessMatrix = Matrix<std::uint32_t>;

/// (max,min) identity: kInfiniteFlow diagonal, kNoFlow elsewhere.
inline CapacityMatrix capacity_identity(std::size_t n) {
  CapacityMatrix m(n, kNoFlow);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kInfiniteFlow;
  return m;
}

/// (min,+) identity: 0 diagonal, kUnreachable elsewhere.
inline DistanceMatrix distance_identity(std::size_t n) {
  DistanceMatrix m(n, kUnreachable);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 0;
  return m;
}

template <typename A, typename B>
void require_same_size(const Matrix<A>& a, const Matrix<B>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace spaf
