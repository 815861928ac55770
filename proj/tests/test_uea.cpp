#include "tforge/errors.hpp"
#include "tforge/uea.hpp"
#include "tforge/random.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace tforge;

namespace
{
  AlgebraPtr sl2_ptr() { return std::make_shared<const LieAlgebra>(examples::sl2()); }

  QVector kron_vector(const QVector &a, const QVector &b)
  {
    QVector out;
    for (const auto &x : a)
      for (const auto &y : b)
        out.push_back(x * y);
    return out;
  }

  TruncatedDual random_dual(Rng &rng, std::size_t n, unsigned bound)
  {
    TruncatedDual h(n, bound);
    for (const auto &e : multi_indices_up_to(n, bound))
      if (rng.coin())
        h.set(e, rng.rational(4, 3));
    return h;
  }
} // namespace

TEST_CASE("multi-index order and enumeration")
{
  const auto all = multi_indices_up_to(2, 2);
  REQUIRE(all.size() == 6);
  CHECK(all.front() == MultiIndex::zero(2));
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(all[i - 1] < all[i]);
  CHECK(all.back().degree() == 2);
  CHECK(MultiIndex({1, 0}) < MultiIndex({0, 2}));
  CHECK((MultiIndex({1, 2}) + MultiIndex({0, 1})) == MultiIndex({1, 3}));
  CHECK(multi_indices_up_to(3, 3).size() == 20);
}

TEST_CASE("PBW monomials act with divided powers in basis order")
{
  const auto g = sl2_ptr();
  const Module v = examples::sl2_irrep(g, 2);
  const QMatrix &h = v.action(0), &e = v.action(1), &f = v.action(2);
  CHECK(pbw_matrix(v, MultiIndex({1, 1, 0})) == h * e);
  CHECK(pbw_matrix(v, MultiIndex({0, 1, 1})) == e * f);
  CHECK(pbw_matrix(v, MultiIndex({0, 0, 2})) == make_rational(1, 2) * (f * f));
  CHECK(pbw_matrix(v, MultiIndex::zero(3)) == QMatrix::identity(3));
  const QVector x{0, 0, 1};
  CHECK(apply_pbw(v, MultiIndex({1, 1, 0}), x) == h * (e * x));
  CHECK(apply_word(v, {1, 2}, x) == e * (f * x));
}

TEST_CASE("coproduct of PBW monomials")
{
  const MultiIndex f({2, 1, 0});
  const auto terms = coproduct_pbw(f);
  CHECK(terms.size() == 6);
  for (const auto &[a, b] : terms)
    CHECK((a + b) == f);
  CHECK(antipode_generator(QVector{1, -2, 0}) == QVector{-1, 2, 0});
}

TEST_CASE("truncated duals")
{
  TruncatedDual h(2, 2);
  h.set(MultiIndex({1, 0}), 3);
  h.add(MultiIndex({1, 0}), -3);
  CHECK(h.is_zero());
  CHECK_THROWS(h.set(MultiIndex({2, 1}), 1));
  const TruncatedDual eps = TruncatedDual::counit(2, 2);
  CHECK(valuation(eps) == 0u);
  CHECK_FALSE(valuation(h));
  const TruncatedDual x = TruncatedDual::basis_element(MultiIndex({0, 1}), 2);
  CHECK(dual_multiply(eps, x) == x);
  CHECK(dual_multiply(x, x).coeff(MultiIndex({0, 2})) == 1);
  CHECK(valuation(dual_multiply(x, x)) == 2u);
  CHECK(x.truncated(0).is_zero());
}

TEST_CASE("convolution in one variable agrees with truncated series multiplication")
{
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial)
  {
    const unsigned bound = 5;
    const TruncatedDual a = random_dual(rng, 1, bound), b = random_dual(rng, 1, bound);
    std::vector<Rational> sa(bound + 1), sb(bound + 1);
    for (unsigned k = 0; k <= bound; ++k)
    {
      sa[k] = a.coeff(MultiIndex({k}));
      sb[k] = b.coeff(MultiIndex({k}));
    }
    const auto expected = oracle::series_product(sa, sb, bound);
    const TruncatedDual c = dual_multiply(a, b);
    for (unsigned k = 0; k <= bound; ++k)
      CHECK(c.coeff(MultiIndex({k})) == expected[k]);
  }
}

TEST_CASE("matrix coefficients of a nilpotent action are exponential Taylor coefficients")
{
  const auto g = sl2_ptr();
  const Module v = examples::sl2_irrep(g, 2);
  const QVector phi{1, 0, 0}, x{0, 0, 1};
  const TruncatedDual c = matrix_coefficient(v, phi, x, 4);
  // phi(e^2/2 v_{-2}) with e v_{-2} = v_0, e v_0 = 2 v_2.
  CHECK(c.coeff(MultiIndex({0, 2, 0})) == 1);
  CHECK(c.coeff(MultiIndex({0, 1, 0})) == 0);
  CHECK(c.coeff(MultiIndex::zero(3)) == 0);
  CHECK(valuation(c) == 2u);
}

TEST_CASE("property: matrix coefficients are multiplicative on tensor products")
{
  const auto g = sl2_ptr();
  Rng rng(42);
  for (int trial = 0; trial < 8; ++trial)
  {
    const Module a = examples::sl2_irrep(g, static_cast<unsigned>(rng.integer(1, 2)));
    const Module b = examples::sl2_irrep(g, static_cast<unsigned>(rng.integer(0, 2)));
    const QVector pa = rng.vector(a.dim(), 3), xa = rng.vector(a.dim(), 3);
    const QVector pb = rng.vector(b.dim(), 3), xb = rng.vector(b.dim(), 3);
    const unsigned bound = 3;
    const TruncatedDual lhs = matrix_coefficient(tensor(a, b), kron_vector(pa, pb), kron_vector(xa, xb), bound);
    const TruncatedDual rhs =
        dual_multiply(matrix_coefficient(a, pa, xa, bound), matrix_coefficient(b, pb, xb, bound));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: convolution is commutative and associative")
{
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial)
  {
    const TruncatedDual a = random_dual(rng, 2, 3), b = random_dual(rng, 2, 3), c = random_dual(rng, 2, 3);
    CHECK(dual_multiply(a, b) == dual_multiply(b, a));
    CHECK(dual_multiply(dual_multiply(a, b), c) == dual_multiply(a, dual_multiply(b, c)));
  }
}
