#include "tforge/errors.hpp"
#include "tforge/jordan.hpp"
#include "tforge/oneparam.hpp"
#include "tforge/random.hpp"

#include <doctest.h>

using namespace tforge;

namespace
{
  QMatrix random_invertible(Rng &rng, std::size_t n)
  {
    while (true)
    {
      QMatrix p = rng.matrix(n, n, 3);
      if (inverse(p))
        return p;
    }
  }

  // Ground truth by construction: S diagonal in a random basis, N nilpotent inside the 1-eigenspace.
  std::pair<QMatrix, QMatrix> constructed_pair(Rng &rng)
  {
    const QMatrix p = random_invertible(rng, 4);
    const QMatrix pinv = *inverse(p);
    QMatrix n(4, 4);
    n(0, 1) = rng.integer(0, 3);
    return {p * QMatrix::diagonal(QVector{1, 1, 2, 3}) * pinv, p * n * pinv};
  }
} // namespace

TEST_CASE("additive decomposition examples")
{
  const auto a = additive_jc(QMatrix{{1, 1}, {0, 1}});
  CHECK(a.s == QMatrix::identity(2));
  CHECK(a.n == QMatrix{{0, 1}, {0, 0}});
  const QMatrix d = QMatrix::diagonal(QVector{1, 2});
  const auto b = additive_jc(d);
  CHECK(b.s == d);
  CHECK(b.n.is_zero());
  const QMatrix x{{2, 1, 0}, {0, 2, 0}, {0, 0, 5}};
  const auto c = additive_jc(x);
  CHECK(c.s_poly(x) == c.s);
  CHECK(c.s == QMatrix::diagonal(QVector{2, 2, 5}));
}

TEST_CASE("multiplicative decomposition examples")
{
  const auto m = multiplicative_jc(QMatrix{{2, 1}, {0, 2}}, QMatrix::identity(2));
  CHECK(m.s == Rational(2) * QMatrix::identity(2));
  CHECK(m.u == QMatrix{{1, make_rational(1, 2)}, {0, 1}});
  const QMatrix e = QMatrix::diagonal(QVector{1, 0});
  const auto c = multiplicative_jc(e, e);
  CHECK(c.s == e);
  CHECK(c.u == e);
  CHECK_THROWS_AS(multiplicative_jc(QMatrix{{1, 1}, {1, 1}}, QMatrix::identity(2)), Rejection);
  CHECK_THROWS_AS(multiplicative_jc(QMatrix::identity(2), Rational(2) * QMatrix{{1, 1}, {0, 0}}), InputError);
  CHECK_THROWS_AS(multiplicative_jc(QMatrix::identity(2), e), InputError);
}

TEST_CASE("classification")
{
  const auto a = classify(QMatrix::diagonal(QVector{1, 0}));
  CHECK(a.semisimple);
  CHECK(a.weak_locally_unipotent);
  CHECK_FALSE(a.unipotent);
  const auto b = classify(QMatrix{{0, 1}, {0, 0}});
  CHECK(b.nilpotent);
  CHECK_FALSE(b.semisimple);
  CHECK_FALSE(b.weak_locally_unipotent);
  const auto c = classify(QMatrix::identity(3));
  CHECK(c.semisimple);
  CHECK(c.unipotent);
  CHECK(c.weak_locally_unipotent);
  CHECK_FALSE(c.nilpotent);
  CHECK_FALSE(classify(QMatrix{{0, -1}, {1, 0}}).nilpotent);
  CHECK(classify(QMatrix{{0, -1}, {1, 0}}).semisimple);
}

TEST_CASE("tensor compatibility")
{
  const QMatrix j{{1, 1}, {0, 1}};
  CHECK(tensor_jc_check(j, j).ok());
  CHECK(tensor_jc_check(j, j).multiplicative_applicable);
  CHECK(tensor_jc_check(QMatrix::diagonal(QVector{1, 2}), QMatrix::diagonal(QVector{3, 0})).ok());
  CHECK(tensor_jc_check(QMatrix{{0, 1}, {0, 0}}, QMatrix{{0, 1}, {0, 0}}).additive);
}

TEST_CASE("property: constructed instances are recovered exactly")
{
  Rng rng(61);
  for (int trial = 0; trial < 15; ++trial)
  {
    const auto [s, n] = constructed_pair(rng);
    const auto r = additive_jc(s + n);
    CHECK(r.s == s);
    CHECK(r.n == n);
    CHECK(r.s * r.n == r.n * r.s);
    CHECK(r.s_poly(s + n) == r.s);
    CHECK(classify(r.s).semisimple);
    CHECK(classify(r.n).nilpotent);
    // A commuting nonzero nilpotent perturbation of s is no longer semisimple.
    if (!n.is_zero())
      CHECK_FALSE(classify(s + n).semisimple);
  }
}

TEST_CASE("property: restriction to invariant subspaces commutes with the decomposition")
{
  Rng rng(62);
  const auto line = std::make_shared<const LieAlgebra>(examples::abelian(1));
  for (int trial = 0; trial < 10; ++trial)
  {
    const auto [s, n] = constructed_pair(rng);
    const QMatrix x = s + n;
    const Module v = Module::create(line, "X", {x});
    const auto sub = submodule_generated(v, {rng.vector(4, 2)});
    if (sub.empty())
      continue;
    const auto r = additive_jc(restrict_matrix(x, sub.basis));
    CHECK(r.s == restrict_matrix(s, sub.basis));
    CHECK(r.n == restrict_matrix(n, sub.basis));
  }
}

TEST_CASE("property: tensor compatibility on random pairs")
{
  Rng rng(63);
  for (int trial = 0; trial < 6; ++trial)
  {
    QMatrix x = rng.matrix(2, 2, 2), y = rng.matrix(2, 2, 2);
    CHECK(tensor_jc_check(x, y).ok());
  }
}

TEST_CASE("family decompositions stay in Lie(M) and M")
{
  const auto g = std::make_shared<const LieAlgebra>(examples::sl2());
  ClosureOptions opt;
  opt.depth = 2;
  const CategoryClosure c = build_closure(g, {examples::sl2_irrep(g, 1)}, opt);
  const auto basis = lie_m_solve(c);
  const NatFamily x = NatFamily::from_lie_element(c, QVector{1, 1, 0});
  const auto [s, n] = family_additive_jc(x);
  CHECK(in_family_span(basis, s));
  CHECK(in_family_span(basis, n));
  const NatFamily m = compose(torus_family(c, certify_torus(c, QVector{1, 0, 0}), 2),
                              exp_family(c, certify_unipotent(c, QVector{0, 1, 0}), 1));
  const auto [ms, mu] = family_multiplicative_jc(m, NatFamily::identity(c));
  CHECK(m_membership(c, ms).certified);
  CHECK(m_membership(c, mu).certified);
  CHECK(compose(ms, mu) == m);
}
