#include "tforge/errors.hpp"
#include "tforge/liealg.hpp"
#include "tforge/random.hpp"

#include <doctest.h>

using namespace tforge;

namespace
{
  std::vector<std::vector<QVector>> table_of(const LieAlgebra &g)
  {
    std::vector<std::vector<QVector>> t(g.dim(), std::vector<QVector>(g.dim()));
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        t[i][j] = g.structure(i, j);
    return t;
  }

  QVector nested_bracket(const LieAlgebra &g, const std::vector<std::size_t> &word)
  {
    QVector acc = g.basis_vector(word.front());
    for (std::size_t k = 1; k < word.size(); ++k)
      acc = g.bracket(g.basis_vector(word[k]), acc);
    return acc;
  }
} // namespace

TEST_CASE("bundled algebras satisfy the axioms")
{
  CHECK(validate(examples::sl2()).ok());
  CHECK(validate(examples::heisenberg()).ok());
  CHECK(validate(examples::unitriangular4()).ok());
  CHECK(validate(examples::abelian(3)).ok());
}

TEST_CASE("sl2 brackets")
{
  const LieAlgebra g = examples::sl2();
  const QVector h = g.basis_vector(0), e = g.basis_vector(1), f = g.basis_vector(2);
  CHECK(g.bracket(h, e) == Rational(2) * e);
  CHECK(g.bracket(h, f) == Rational(-2) * f);
  CHECK(g.bracket(e, f) == h);
  CHECK(g.index_of("f") == 2);
}

TEST_CASE("from_matrices reproduces the bundled tables")
{
  CHECK(LieAlgebra::from_matrices({"h", "e", "f"}, examples::sl2_defining_matrices()) == examples::sl2());
  CHECK(LieAlgebra::from_matrices({"x", "y", "z"}, examples::heisenberg_matrices()) == examples::heisenberg());
  CHECK_THROWS(LieAlgebra::from_matrices({"a", "b"}, {QMatrix{{0, 1}, {0, 0}}, QMatrix{{0, 1}, {0, 0}}}));
  CHECK_THROWS(LieAlgebra::from_matrices({"a", "b"}, {QMatrix{{0, 1}, {0, 0}}, QMatrix{{0, 0}, {1, 0}}}));
}

TEST_CASE("single-entry perturbations are rejected")
{
  Rng rng(5);
  for (const LieAlgebra &g : {examples::sl2(), examples::heisenberg(), examples::unitriangular4()})
    for (int trial = 0; trial < 20; ++trial)
    {
      auto t = table_of(g);
      const auto i = static_cast<std::size_t>(rng.integer(0, static_cast<long>(g.dim()) - 1));
      const auto j = static_cast<std::size_t>(rng.integer(0, static_cast<long>(g.dim()) - 1));
      const auto k = static_cast<std::size_t>(rng.integer(0, static_cast<long>(g.dim()) - 1));
      t[i][j][k] += rng.nonzero_rational(3, 2);
      CHECK_FALSE(validate(LieAlgebra(g.basis_names(), t)).ok());
    }
}

TEST_CASE("antisymmetric perturbation breaking Jacobi is caught")
{
  // [h, e] = 2e + h keeps antisymmetry but breaks Jacobi.
  auto g = examples::sl2();
  g.set_bracket(0, 1, QVector{1, 2, 0});
  const auto v = validate(g);
  CHECK(v.antisymmetry.empty());
  CHECK_FALSE(v.jacobi.empty());
}

TEST_CASE("lower central series and nilpotency class")
{
  const auto h = lower_central_series(examples::heisenberg());
  CHECK(h.nilpotent);
  CHECK(h.nilpotency_class == 2);
  const auto n = lower_central_series(examples::unitriangular4());
  CHECK(n.nilpotent);
  CHECK(n.nilpotency_class == 3);
  CHECK(lower_central_series(examples::abelian(2)).nilpotency_class == 1);
  CHECK_FALSE(lower_central_series(examples::sl2()).nilpotent);
}

TEST_CASE("subalgebras")
{
  const LieAlgebra g = examples::sl2();
  const Subalgebra b = make_subalgebra(g, {g.basis_vector(0), g.basis_vector(1)});
  CHECK(b.dim() == 2);
  CHECK_THROWS(make_subalgebra(g, {g.basis_vector(1), g.basis_vector(2)}));
  const auto s = lower_central_series(make_subalgebra(g, {g.basis_vector(1)}));
  CHECK(s.nilpotent);
  CHECK(s.nilpotency_class == 1);
  CHECK_FALSE(lower_central_series(b).nilpotent);
}

TEST_CASE("property: Jacobi identity on random triples")
{
  Rng rng(21);
  for (const LieAlgebra &g : {examples::sl2(), examples::heisenberg(), examples::unitriangular4()})
    for (int trial = 0; trial < 30; ++trial)
    {
      const QVector x = rng.vector(g.dim(), 4, 3), y = rng.vector(g.dim(), 4, 3), z = rng.vector(g.dim(), 4, 3);
      const QVector sum = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
      CHECK(is_zero(sum));
    }
}

TEST_CASE("property: series terms are ideals and (c+1)-fold brackets vanish")
{
  for (const LieAlgebra &g : {examples::heisenberg(), examples::unitriangular4()})
  {
    const auto s = lower_central_series(g);
    const auto whole = Subalgebra::whole(g).span;
    for (const auto &term : s.terms)
      for (const auto &t : term)
        for (const auto &a : whole)
          CHECK(in_span(term, g.bracket(a, t)));
    const std::size_t c = s.nilpotency_class;
    std::vector<std::size_t> word(c + 1, 0);
    while (true)
    {
      CHECK(is_zero(nested_bracket(g, word)));
      std::size_t k = 0;
      while (k < word.size() && word[k] == g.dim() - 1)
        word[k++] = 0;
      if (k == word.size())
        break;
      ++word[k];
    }
  }
}
