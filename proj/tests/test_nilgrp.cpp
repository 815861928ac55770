#include "tforge/errors.hpp"
#include "tforge/nilgrp.hpp"
#include "tforge/random.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace tforge;

namespace
{
  QMatrix to_matrix(const std::vector<QMatrix> &basis, const QVector &x)
  {
    QMatrix m(basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
      m += x[i] * basis[i];
    return m;
  }

  // log(exp(X) exp(Y)) expressed back in the matrix basis.
  QVector matrix_bch(const std::vector<QMatrix> &basis, const QVector &x, const QVector &y)
  {
    const QMatrix z = oracle::log_series(oracle::exp_series(to_matrix(basis, x)) * oracle::exp_series(to_matrix(basis, y)));
    std::vector<QVector> cols;
    for (const auto &b : basis)
      cols.push_back(b.flatten());
    const auto coords = solve(QMatrix::from_columns(cols, z.rows() * z.cols()), z.flatten());
    REQUIRE(coords);
    return *coords;
  }
} // namespace

TEST_CASE("Dynkin table")
{
  const auto &t = dynkin_table();
  REQUIRE(t.size() == 6);
  CHECK(t[2].coefficient == make_rational(1, 2));
  CHECK(t[5].word == "yxxy");
  CHECK(t[5].coefficient == make_rational(-1, 24));
}

TEST_CASE("Heisenberg group law")
{
  const LieAlgebra g = examples::heisenberg();
  const BCHGroup grp(Subalgebra::whole(g));
  CHECK(grp.nilpotency_class() == 2);
  const QVector x{1, 0, 0}, y{0, 1, 0};
  CHECK(grp.bch(x, y) == QVector{1, 1, make_rational(1, 2)});
  CHECK(grp.bch(x, y) == matrix_bch(examples::heisenberg_matrices(), x, y));
  CHECK(grp.bch(x, grp.inverse(x)) == zero_vector(3));
}

TEST_CASE("non-nilpotent and non-closed inputs")
{
  const LieAlgebra g = examples::sl2();
  CHECK_THROWS_AS(BCHGroup(Subalgebra::whole(g)), Rejection);
  CHECK_THROWS_AS(BCHGroup(Subalgebra{&g, {QVector{0, 1, 0}, QVector{0, 0, 1}}}), InputError);
  const BCHGroup line(make_subalgebra(g, {QVector{0, 1, 0}}));
  CHECK(line.nilpotency_class() == 1);
  CHECK(line.bch(QVector{0, 1, 0}, QVector{0, 2, 0}) == QVector{0, 3, 0});
  CHECK_THROWS_AS(line.bch(QVector{1, 0, 0}, QVector{0, 1, 0}), InputError);
}

TEST_CASE("property: class-3 group law matches the matrix logarithm")
{
  const LieAlgebra g = examples::unitriangular4();
  const BCHGroup grp(Subalgebra::whole(g));
  CHECK(grp.nilpotency_class() == 3);
  Rng rng(81);
  for (int trial = 0; trial < 15; ++trial)
  {
    const QVector x = rng.vector(6, 3, 2), y = rng.vector(6, 3, 2), z = rng.vector(6, 3, 2);
    CHECK(grp.bch(x, y) == matrix_bch(examples::unitriangular4_matrices(), x, y));
    CHECK(grp.bch(grp.bch(x, y), z) == grp.bch(x, grp.bch(y, z)));
    CHECK(grp.bch(grp.inverse(x), x) == zero_vector(6));
    CHECK(grp.bch(x, zero_vector(6)) == x);
  }
}

TEST_CASE("filtrations and annihilator ideals")
{
  const auto g = std::make_shared<const LieAlgebra>(examples::heisenberg());
  const Module v = examples::matrix_module(g, examples::heisenberg_matrices(), "V");
  const Subalgebra n = Subalgebra::whole(*g);
  const ModuleFiltration f = filtration(v, n);
  REQUIRE(f.levels.size() == 3);
  CHECK(f.levels[0].size() == 1);
  CHECK(f.levels[1].size() == 2);
  CHECK(f.levels[2].size() == 3);
  ClosureOptions opt;
  opt.depth = 1;
  const CategoryClosure c = build_closure(g, {v}, opt);
  CHECK(annihilator_ideal(c, n, 0).size() == 3);
  // V_1 = span(e1, e2): y = E23 and z = E13 kill it, x = E12 does not.
  CHECK(annihilator_ideal(c, n, 1) == canonical_span({QVector{0, 1, 0}, QVector{0, 0, 1}}, 3));
  CHECK(annihilator_ideal(c, n, 2).empty());

  const auto s = std::make_shared<const LieAlgebra>(examples::sl2());
  CHECK_THROWS_AS(filtration(examples::sl2_irrep(s, 1), Subalgebra::whole(*s)), Rejection);
}

TEST_CASE("property: exp compatibility on closure objects")
{
  const auto g = std::make_shared<const LieAlgebra>(examples::unitriangular4());
  const Module v = examples::matrix_module(g, examples::unitriangular4_matrices(), "V");
  ClosureOptions opt;
  opt.depth = 2;
  const CategoryClosure c = build_closure(g, {v}, opt);
  const BCHGroup grp(Subalgebra::whole(*g));
  Rng rng(82);
  for (int trial = 0; trial < 4; ++trial)
    CHECK(exp_compat_check(grp, c, rng.vector(6, 2, 2), rng.vector(6, 2, 2)));
}
