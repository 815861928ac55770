#ifndef TFORGE_RANDOM_HPP
#define TFORGE_RANDOM_HPP

#include "tforge/exactlin.hpp"

#include <cstdint>
#include <random>

namespace tforge
{

  /// Seeded generator with platform-independent integer and rational draws.
  class Rng
  {
  public:
    explicit Rng(std::uint64_t seed) : m_engine(seed) {}

    /// Uniform-ish integer in [lo, hi] by reduction modulo the range width.
    long integer(long lo, long hi)
    {
      const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
      return lo + static_cast<long>(m_engine() % width);
    }

    /// p/q with |p| <= max_num and 1 <= q <= max_den.
    Rational rational(long max_num, long max_den)
    {
      const long p = integer(-max_num, max_num);
      const long q = integer(1, max_den);
      return make_rational(p, q);
    }

    Rational nonzero_rational(long max_num, long max_den)
    {
      Rational r;
      do
        r = rational(max_num, max_den);
      while (sgn(r) == 0);
      return r;
    }

    QVector vector(std::size_t n, long max_num, long max_den = 1)
    {
      QVector v;
      for (std::size_t i = 0; i < n; ++i)
        v.push_back(rational(max_num, max_den));
      return v;
    }

    QMatrix matrix(std::size_t rows, std::size_t cols, long max_num, long max_den = 1)
    {
      QMatrix m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          m(i, j) = rational(max_num, max_den);
      return m;
    }

    bool coin() { return (m_engine() & 1U) != 0; }
    std::uint64_t raw() { return m_engine(); }

  private:
    std::mt19937_64 m_engine;
  };

} // namespace tforge

#endif
