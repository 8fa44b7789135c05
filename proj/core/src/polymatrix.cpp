#include "algstat/polymatrix.hpp"

#include <cstdint>
#include <unordered_map>

#include "algstat/error.hpp"

namespace algstat {

namespace {

class MinorCache {
 public:
  MinorCache(const PolyMatrix& m, const Ring& ring) : m_(m), ring_(ring) {
    if (m.size() > 31) throw Error(ErrorCode::IndexOutOfRange, "matrix too large for cofactor expansion");
  }

  // Determinant of the submatrix on the given row/column bitmasks (equal popcount).
  const MultiPoly& minor(std::uint32_t rows, std::uint32_t cols) {
    const std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    MultiPoly value(ring_);
    if (rows == 0) {
      value = MultiPoly::constant(ring_, 1);
    } else {
      const int r = __builtin_ctz(rows);
      const std::uint32_t rest = rows & (rows - 1);
      int sign = 1;
      for (std::uint32_t c = cols; c != 0; c &= c - 1) {
        const int k = __builtin_ctz(c);
        const MultiPoly& entry = m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
        if (!entry.is_zero()) {
          MultiPoly t = entry * minor(rest, cols & ~(1U << k));
          if (sign > 0) value += t;
          else value -= t;
        }
        sign = -sign;
      }
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  const PolyMatrix& m_;
  const Ring& ring_;
  std::unordered_map<std::uint64_t, MultiPoly> memo_;
};

void require_square(const PolyMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error(ErrorCode::IndexOutOfRange, "matrix is not square");
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m, const Ring& ring) {
  require_square(m);
  MinorCache cache(m, ring);
  const std::uint32_t all = m.empty() ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << m.size()) - 1);
  return cache.minor(all, all);
}

PolyMatrix adjugate(const PolyMatrix& m, const Ring& ring) {
  require_square(m);
  const std::size_t n = m.size();
  MinorCache cache(m, ring);
  const std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  PolyMatrix adj(n, std::vector<MultiPoly>(n, MultiPoly(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly v = cache.minor(all & ~(1U << j), all & ~(1U << i));
      adj[i][j] = (i + j) % 2 == 0 ? v : -v;
    }
  return adj;
}

}  // namespace algstat
