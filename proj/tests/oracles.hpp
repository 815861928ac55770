// Independent reference computations used to check library results.
#ifndef TFORGE_TESTS_ORACLES_HPP
#define TFORGE_TESTS_ORACLES_HPP

#include "tforge/exactlin.hpp"

#include <set>
#include <vector>

namespace oracle
{

  using tforge::QMatrix;
  using tforge::QVector;
  using tforge::Rational;

  /// Truncated product of two coefficient sequences.
  inline std::vector<Rational> series_product(const std::vector<Rational> &a, const std::vector<Rational> &b,
                                              std::size_t degree)
  {
    std::vector<Rational> c(degree + 1);
    for (std::size_t i = 0; i < a.size() && i <= degree; ++i)
      for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j)
        c[i + j] += a[i] * b[j];
    return c;
  }

  /// exp(X) = sum X^k / k! for nilpotent X, summed until the term vanishes.
  inline QMatrix exp_series(const QMatrix &x)
  {
    const std::size_t n = x.rows();
    QMatrix sum(n, n), term(n, n);
    for (std::size_t i = 0; i < n; ++i)
      sum(i, i) = term(i, i) = 1;
    for (unsigned k = 1; k <= n + 1; ++k)
    {
      term = term * x;
      term = tforge::make_rational(1, k) * term;
      sum += term;
    }
    return sum;
  }

  /// log(U) = sum_{k >= 1} (-1)^{k+1} (U - I)^k / k for unipotent U.
  inline QMatrix log_series(const QMatrix &u)
  {
    const std::size_t n = u.rows();
    QMatrix y = u;
    for (std::size_t i = 0; i < n; ++i)
      y(i, i) -= 1;
    QMatrix sum(n, n), term(n, n);
    for (std::size_t i = 0; i < n; ++i)
      term(i, i) = 1;
    for (unsigned k = 1; k <= n + 1; ++k)
    {
      term = term * y;
      sum += tforge::make_rational(k % 2 == 1 ? 1 : -1, k) * term;
    }
    return sum;
  }

  /// Coefficients (ascending) of the unique polynomial of degree < n through n points.
  inline std::vector<Rational> interpolate(const std::vector<Rational> &xs, const std::vector<Rational> &ys)
  {
    const std::size_t n = xs.size();
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i)
    {
      // Basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j).
      std::vector<Rational> basis{Rational(1)};
      Rational denom = 1;
      for (std::size_t j = 0; j < n; ++j)
      {
        if (j == i)
          continue;
        std::vector<Rational> next(basis.size() + 1);
        for (std::size_t k = 0; k < basis.size(); ++k)
        {
          next[k + 1] += basis[k];
          next[k] -= xs[j] * basis[k];
        }
        basis = std::move(next);
        denom *= xs[i] - xs[j];
      }
      for (std::size_t k = 0; k < basis.size(); ++k)
        out[k] += ys[i] * basis[k] / denom;
    }
    while (!out.empty() && sgn(out.back()) == 0)
      out.pop_back();
    return out;
  }

  /// {A in gl_2 : w(Av, u) + w(v, Au) = 0} for w(v, u) = v_0 u_1 - v_1 u_0, solved entry by entry.
  /// Writing A = [[a, b], [c, d]], the condition is A^T J + J A = 0 with J = [[0, 1], [-1, 0]],
  /// which reduces to a + d = 0 with b and c free.
  inline std::vector<QMatrix> symplectic_algebra_2()
  {
    return {QMatrix{{1, 0}, {0, -1}}, QMatrix{{0, 1}, {0, 0}}, QMatrix{{0, 0}, {1, 0}}};
  }

  using Point = std::vector<long>;

  /// All sums of generators with coefficients in [0, k].
  inline std::set<Point> bounded_span(const std::vector<Point> &gens, std::size_t rank, long k)
  {
    std::set<Point> out{Point(rank, 0)};
    for (const auto &g : gens)
    {
      std::set<Point> next;
      for (const auto &p : out)
        for (long c = 0; c <= k; ++c)
        {
          Point q = p;
          for (std::size_t i = 0; i < rank; ++i)
            q[i] += c * g[i];
          next.insert(q);
        }
      out = std::move(next);
    }
    return out;
  }

  /// Generator subsets S, closed under the generators of their submonoid F, such that F satisfies the face axiom
  /// a + b in F  =>  a, b in F on all pairs of bounded monoid elements.
  inline std::vector<std::vector<std::size_t>> brute_force_faces(const std::vector<Point> &gens, std::size_t rank,
                                                                 long k)
  {
    const auto all = bounded_span(gens, rank, k);
    std::vector<std::vector<std::size_t>> faces;
    for (unsigned mask = 0; mask < (1U << gens.size()); ++mask)
    {
      std::vector<Point> sub;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (mask >> i & 1U)
        {
          sub.push_back(gens[i]);
          idx.push_back(i);
        }
      const auto f = bounded_span(sub, rank, 2 * k);
      // The subset must already contain every generator of its submonoid.
      bool ok = true;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (!(mask >> i & 1U) && f.count(gens[i]))
          ok = false;
      for (const auto &a : all)
      {
        for (const auto &b : all)
        {
          Point s = a;
          for (std::size_t i = 0; i < rank; ++i)
            s[i] += b[i];
          if (f.count(s) && (!f.count(a) || !f.count(b)))
          {
            ok = false;
            break;
          }
        }
        if (!ok)
          break;
      }
      if (ok)
        faces.push_back(idx);
    }
    return faces;
  }

} // namespace oracle

#endif
