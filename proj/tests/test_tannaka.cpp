#include "tforge/errors.hpp"
#include "tforge/oneparam.hpp"
#include "tforge/random.hpp"
#include "tforge/tannaka.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace tforge;

namespace
{
  AlgebraPtr sl2_ptr() { return std::make_shared<const LieAlgebra>(examples::sl2()); }

  CategoryClosure sl2_closure(unsigned depth)
  {
    const auto g = sl2_ptr();
    ClosureOptions opt;
    opt.depth = depth;
    return build_closure(g, {examples::sl2_irrep(g, 1)}, opt);
  }

  std::vector<Module> sl2_irreps(const AlgebraPtr &g)
  {
    return {examples::sl2_irrep(g, 0), examples::sl2_irrep(g, 1), examples::sl2_irrep(g, 2)};
  }
} // namespace

TEST_CASE("closure of sl2 generated by L1")
{
  const CategoryClosure c = sl2_closure(2);
  REQUIRE(c.size() >= 3);
  CHECK(c.object(0).provenance.origin == ObjectOrigin::trivial);
  const auto l1 = c.find("L1");
  REQUIRE(l1);
  CHECK(c.object(*l1).provenance.origin == ObjectOrigin::generator);
  bool has_tensor = false;
  for (const auto &o : c.objects())
  {
    CHECK(check_module(c.algebra(), o.module.action()).empty());
    has_tensor = has_tensor || (o.provenance.origin == ObjectOrigin::tensor && o.module.dim() == 4);
  }
  CHECK(has_tensor);
  CHECK_FALSE(c.tensor_pairs().empty());
  for (const auto &m : c.morphisms())
    CHECK(is_intertwiner(c.object(m.source).module, c.object(m.target).module, m.matrix));
  ClosureOptions small;
  small.max_objects = 2;
  CHECK_THROWS_AS(build_closure(sl2_ptr(), {examples::sl2_irrep(sl2_ptr(), 1)}, small), Rejection);
}

TEST_CASE("Lie(M) of sl2 from L1 is the symplectic algebra on L1")
{
  const auto g = sl2_ptr();
  ClosureOptions opt;
  opt.depth = 2;
  const LieMReport r = lie_m_report(g, {examples::sl2_irrep(g, 1)}, opt);
  CHECK(r.dim == 3);
  const std::size_t l1 = r.closure.index_of("L1");
  std::vector<QVector> on_l1;
  for (const auto &f : r.basis)
    on_l1.push_back(f.entries[l1].flatten());
  std::vector<QVector> symplectic;
  for (const auto &a : oracle::symplectic_algebra_2())
    symplectic.push_back(a.flatten());
  CHECK(same_span(on_l1, symplectic, 4));
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(in_family_span(r.basis, NatFamily::from_lie_element(r.closure, g->basis_vector(i))));

  opt.depth = 3;
  const LieMReport r3 = lie_m_report(g, {examples::sl2_irrep(g, 1)}, opt);
  CHECK(r3.dim == 3);
  CHECK(r3.stabilized);
}

TEST_CASE("membership of exponentials and rejection of non-multiplicative families")
{
  const CategoryClosure c = sl2_closure(2);
  const QVector e{0, 1, 0};
  const NatFamily m = exp_family(c, certify_unipotent(c, e), make_rational(3, 2));
  CHECK(m_membership(c, m).certified);
  CHECK(m_membership(c, NatFamily::identity(c)).certified);
  const NatFamily twice = Rational(2) * NatFamily::identity(c);
  const auto r = m_membership(c, twice);
  CHECK_FALSE(r.certified);
  CHECK_FALSE(r.violations.empty());
  CHECK(naturality_check(c, twice).certified);
  NatFamily bad = NatFamily::identity(c);
  bad.entries.pop_back();
  CHECK_THROWS_AS(m_membership(c, bad), InputError);
}

TEST_CASE("evaluation functionals reconstruct M-elements")
{
  const CategoryClosure c = sl2_closure(2);
  const auto up = certify_unipotent(c, QVector{0, 1, 0});
  const auto down = certify_unipotent(c, QVector{0, 0, 1});
  Rng rng(51);
  for (int trial = 0; trial < 5; ++trial)
  {
    const NatFamily m =
        compose(exp_family(c, up, rng.rational(3, 2)), exp_family(c, down, rng.rational(3, 2)));
    const auto alpha = evaluation_functional(c, m);
    CHECK(specm_point_to_nat(c, alpha) == m);
  }
  auto alpha = evaluation_functional(c, Rational(2) * NatFamily::identity(c));
  CHECK_THROWS_AS(specm_point_to_nat(c, alpha), Rejection);
  alpha.pop_back();
  CHECK_THROWS_AS(specm_point_to_nat(c, alpha), InputError);
}

TEST_CASE("centrality")
{
  const CategoryClosure c = sl2_closure(2);
  const auto basis = lie_m_solve(c);
  CHECK(is_central(c, basis, NatFamily::identity(c)));
  CHECK_FALSE(is_central(c, basis, NatFamily::from_lie_element(c, QVector{1, 0, 0})));
}

TEST_CASE("Peter-Weyl count for sl2 irreducibles")
{
  const auto g = sl2_ptr();
  const PeterWeylReport r = peter_weyl_check(sl2_irreps(g), 6);
  CHECK(r.expected_dim == 14);
  CHECK(r.achieved_rank == 14);
  CHECK(r.stabilized);
  CHECK(r.success);
  CHECK_THROWS_AS(peter_weyl_check({examples::sl2_irrep(g, 1), examples::sl2_irrep(g, 1)}, 4), Rejection);
  CHECK_THROWS_AS(peter_weyl_check({tensor(examples::sl2_irrep(g, 1), examples::sl2_irrep(g, 1))}, 4), Rejection);
}

TEST_CASE("isotypic splitting of L1 (x) L1")
{
  const auto g = sl2_ptr();
  const Module t = tensor(examples::sl2_irrep(g, 1), examples::sl2_irrep(g, 1));
  const auto s = isotypic_splitting(t, sl2_irreps(g));
  CHECK(s.copies == std::vector<std::size_t>{0, 2});
  CHECK(rank(s.iso) == 4);
  CHECK_THROWS_AS(isotypic_splitting(t, {examples::sl2_irrep(g, 1)}), Rejection);
}

TEST_CASE("property: irreducible components round-trip through families")
{
  const auto g = sl2_ptr();
  const CategoryClosure c = sl2_closure(2);
  const auto irr = sl2_irreps(g);
  Rng rng(52);
  for (int trial = 0; trial < 5; ++trial)
  {
    std::vector<QMatrix> comps;
    for (const auto &l : irr)
      comps.push_back(rng.matrix(l.dim(), l.dim(), 3, 2));
    const NatFamily n = nat_from_irr_components(c, irr, comps);
    CHECK(irr_components(c, irr, n) == comps);
  }
}

TEST_CASE("family algebra")
{
  const CategoryClosure c = sl2_closure(1);
  const NatFamily x = NatFamily::from_lie_element(c, QVector{0, 1, 0});
  const NatFamily y = NatFamily::from_lie_element(c, QVector{0, 0, 1});
  CHECK(commutator(x, y) == NatFamily::from_lie_element(c, QVector{1, 0, 0}));
  CHECK(NatFamily::unflatten(c, x.flatten()) == x);
  CHECK((x + NatFamily::zero(c)) == x);
  CHECK_FALSE(invert(x));
  const auto inv = invert(exp_family(x));
  REQUIRE(inv);
  CHECK(compose(*inv, exp_family(x)) == NatFamily::identity(c));
}
