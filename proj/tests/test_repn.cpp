#include "tforge/errors.hpp"
#include "tforge/repn.hpp"
#include "tforge/random.hpp"

#include <doctest.h>

#include <map>

using namespace tforge;

namespace
{
  AlgebraPtr sl2_ptr() { return std::make_shared<const LieAlgebra>(examples::sl2()); }

  // Multiset of h-eigenvalues read off a diagonal h action.
  std::map<Rational, int> h_character(const Module &v)
  {
    std::map<Rational, int> out;
    const QMatrix &h = v.action(0);
    for (std::size_t i = 0; i < v.dim(); ++i)
      ++out[h(i, i)];
    return out;
  }

  bool is_diagonal(const QMatrix &m)
  {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (i != j && sgn(m(i, j)) != 0)
          return false;
    return true;
  }
} // namespace

TEST_CASE("sl2 irreps are modules and absolutely irreducible")
{
  const auto g = sl2_ptr();
  for (unsigned n = 0; n <= 4; ++n)
  {
    const Module v = examples::sl2_irrep(g, n);
    CHECK(v.dim() == n + 1);
    CHECK(check_module(*g, v.action()).empty());
    const auto cert = certify_irreducible(v);
    CHECK(cert.irreducible);
    CHECK(cert.commutant_dim == 1);
  }
}

TEST_CASE("create rejects a non-representation")
{
  const auto g = sl2_ptr();
  const QMatrix z(2, 2);
  CHECK_THROWS_AS(Module::create(g, "bad", {QMatrix{{1, 0}, {0, -1}}, QMatrix{{0, 1}, {0, 0}}, z}), Rejection);
  CHECK_THROWS_AS(Module::create(g, "short", {z, z}), InputError);
  CHECK_THROWS_AS(Module::create(g, "shape", {z, z, QMatrix(2, 3)}), InputError);
}

TEST_CASE("Clebsch-Gordan: L1 (x) L1 = L0 + L2")
{
  const auto g = sl2_ptr();
  const Module l0 = examples::sl2_irrep(g, 0), l1 = examples::sl2_irrep(g, 1), l2 = examples::sl2_irrep(g, 2);
  const Module t = tensor(l1, l1);
  CHECK(t.dim() == 4);
  CHECK(check_module(*g, t.action()).empty());
  CHECK(hom_space(l0, t).size() == 1);
  CHECK(hom_space(l2, t).size() == 1);
  CHECK(hom_space(l1, t).empty());
  CHECK(endomorphisms(t).size() == 2);
  CHECK_FALSE(certify_irreducible(t).irreducible);
  // The weights of a tensor product add.
  std::map<Rational, int> expected{{Rational(-2), 1}, {Rational(0), 2}, {Rational(2), 1}};
  CHECK(h_character(t) == expected);
}

TEST_CASE("duals and direct sums")
{
  const auto g = sl2_ptr();
  const Module l1 = examples::sl2_irrep(g, 1), l2 = examples::sl2_irrep(g, 2);
  const Module d = dual_module(l1);
  CHECK(d.action(1) == -l1.action(1).transpose());
  CHECK(hom_space(l1, d).size() == 1);
  const Module s = direct_sum(l1, l2);
  CHECK(s.dim() == 5);
  CHECK(endomorphisms(s).size() == 2);
  CHECK(hom_space(l1, l2).empty());
}

TEST_CASE("generated submodules")
{
  const auto g = sl2_ptr();
  const Module t = tensor(examples::sl2_irrep(g, 1), examples::sl2_irrep(g, 1));
  // v_1 (x) v_{-1} - v_{-1} (x) v_1 spans the invariant line.
  const auto line = submodule_generated(t, {QVector{0, 1, -1, 0}});
  CHECK(line.basis.size() == 1);
  REQUIRE(line.module);
  CHECK(line.module->action(0).is_zero());
  REQUIRE(line.inclusion);
  CHECK(is_intertwiner(*line.module, t, line.inclusion->matrix));
  CHECK(submodule_generated(t, {QVector{1, 0, 0, 0}}).basis.size() == 3);
  CHECK(submodule_generated(t, {QVector{0, 0, 0, 0}}).empty());
  CHECK(is_invariant_subspace(t, line.basis));
  CHECK_FALSE(is_invariant_subspace(t, {QVector{0, 1, 0, 0}}));
}

TEST_CASE("Heisenberg defining module is indecomposable but reducible")
{
  const auto h = std::make_shared<const LieAlgebra>(examples::heisenberg());
  const Module v = examples::matrix_module(h, examples::heisenberg_matrices(), "V");
  const auto cert = certify_irreducible(v);
  CHECK_FALSE(cert.irreducible);
  CHECK(submodule_generated(v, {QVector{1, 0, 0}}).basis.size() == 1);
}

TEST_CASE("property: constructions stay modules and homs intertwine")
{
  const auto g = sl2_ptr();
  Rng rng(31);
  for (int trial = 0; trial < 12; ++trial)
  {
    const Module a = examples::sl2_irrep(g, static_cast<unsigned>(rng.integer(0, 2)));
    const Module b = examples::sl2_irrep(g, static_cast<unsigned>(rng.integer(0, 2)));
    const Module t = tensor(a, b), s = direct_sum(a, dual_module(b));
    CHECK(check_module(*g, t.action()).empty());
    CHECK(check_module(*g, s.action()).empty());
    CHECK(is_diagonal(t.action(0)));
    for (const auto &phi : hom_space(t, s))
      CHECK(is_intertwiner(t, s, phi));
    const QVector seed = rng.vector(t.dim(), 3);
    const auto sub = submodule_generated(t, {seed});
    CHECK(is_invariant_subspace(t, sub.basis));
    CHECK((is_zero(seed) || in_span(sub.basis, seed)));
  }
}
