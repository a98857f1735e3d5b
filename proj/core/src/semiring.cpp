#include "spaf/semiring.hpp"

#include <algorithm>
#include <cstdint>

namespace spaf {

namespace {

// Row-major i-k-j order keeps the inner loop streaming over rows of b and q.
void maxmin_kernel(const CapacityMatrix& a, const CapacityMatrix& b, CapacityMatrix& q,
                   WitnessMatrix* witness) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto qrow = q.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const Rank aik = a(i, k);
      if (aik == kNoFlow) continue;
      auto brow = b.row(k);
      if (witness) {
        auto wrow = witness->row(i);
        for (std::size_t j = 0; j < n; ++j) {
          const Rank v = std::min(aik, brow[j]);
          if (v > qrow[j]) {
            qrow[j] = v;
            wrow[j] = static_cast<std::uint32_t>(k);
          }
        }
      } else {
        for (std::size_t j = 0; j < n; ++j) qrow[j] = std::max(qrow[j], std::min(aik, brow[j]));
      }
    }
  }
}

}  // namespace

MaxMinProduct maxmin_product(const CapacityMatrix& a, const CapacityMatrix& b) {
  require_same_size(a, b);
  MaxMinProduct out{CapacityMatrix(a.size(), kNoFlow), WitnessMatrix(a.size(), 0)};
  maxmin_kernel(a, b, out.value, &out.witness);
  return out;
}

CapacityMatrix maxmin_closure(const CapacityMatrix& c) {
  const std::size_t n = c.size();
  CapacityMatrix x = c;
  for (std::size_t i = 0; i < n; ++i) x(i, i) = kInfiniteFlow;
  // x covers all paths of length <= covered; squaring doubles that.
  for (std::size_t covered = 1; covered + 1 < n; covered *= 2) {
    CapacityMatrix sq(n, kNoFlow);
    maxmin_kernel(x, x, sq, nullptr);
    x = std::move(sq);
  }
  return x;
}

DistanceMatrix minplus_product(const DistanceMatrix& a, const DistanceMatrix& b,
                               const RowIndexSets* bridges) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  if (bridges && bridges->size() != n) throw std::invalid_argument("index set count mismatch");
  DistanceMatrix q(n, kUnreachable);

  auto relax_through = [&](std::size_t i, std::size_t k) {
    const Length aik = a(i, k);
    if (aik == kUnreachable) return;
    const Length* __restrict brow = b.row(k).data();
    Length* __restrict qrow = q.row(i).data();
    // aik is finite, so the sum saturates exactly when it wraps.
    for (std::size_t j = 0; j < n; ++j) {
      const Length sum = aik + brow[j];
      qrow[j] = std::min(qrow[j], sum < aik ? kUnreachable : sum);
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (bridges) {
      for (std::uint32_t k : (*bridges)[i]) relax_through(i, k);
    } else {
      for (std::size_t k = 0; k < n; ++k) relax_through(i, k);
    }
    q(i, i) = 0;
  }
  return q;
}

BoolMatrix bool_closure(const BoolMatrix& b) {
  const std::size_t n = b.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> bits(n * words, 0);
  auto row = [&](std::size_t i) { return bits.data() + i * words; };
  auto test = [&](std::size_t i, std::size_t j) { return (row(i)[j / 64] >> (j % 64)) & 1U; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b(i, j) || i == j) row(i)[j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  // Warshall over 64-bit words.
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t* rk = row(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (!test(i, k)) continue;
      std::uint64_t* ri = row(i);
      for (std::size_t w = 0; w < words; ++w) ri[w] |= rk[w];
    }
  }

  BoolMatrix out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = static_cast<std::uint8_t>(test(i, j));
  }
  return out;
}

}  // namespace spaf
