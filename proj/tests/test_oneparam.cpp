#include "tforge/errors.hpp"
#include "tforge/oneparam.hpp"
#include "tforge/random.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace tforge;

namespace
{
  CategoryClosure sl2_closure(unsigned depth)
  {
    const auto g = std::make_shared<const LieAlgebra>(examples::sl2());
    ClosureOptions opt;
    opt.depth = depth;
    return build_closure(g, {examples::sl2_irrep(g, 1)}, opt);
  }

  const QVector kH{1, 0, 0}, kE{0, 1, 0}, kF{0, 0, 1};
} // namespace

TEST_CASE("exp and log of nilpotent and unipotent matrices")
{
  const QMatrix n{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  CHECK(exp_nilpotent(n) == oracle::exp_series(n));
  CHECK(exp_nilpotent(n) == QMatrix{{1, 1, make_rational(1, 2)}, {0, 1, 1}, {0, 0, 1}});
  CHECK(log_unipotent(exp_nilpotent(n)) == n);
  CHECK_THROWS_AS(exp_nilpotent(QMatrix::identity(2)), Rejection);
  CHECK_THROWS_AS(log_unipotent(Rational(2) * QMatrix::identity(2)), Rejection);
  CHECK(rational_pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(rational_pow(5, 0) == 1);
}

TEST_CASE("integer monoids")
{
  const IntMonoid m({2, 3});
  CHECK(m.contains(0));
  CHECK_FALSE(m.contains(1));
  CHECK(m.contains(5));
  CHECK_FALSE(m.contains(-2));
  CHECK_FALSE(m.is_group());
  const IntMonoid z({-2, 3});
  CHECK(z.is_group());
  CHECK(z.contains(1));
  CHECK(IntMonoid({-1, 1}).contains(-7));
}

TEST_CASE("certification of unipotent and torus elements")
{
  const CategoryClosure c = sl2_closure(2);
  CHECK_NOTHROW(certify_unipotent(c, kE));
  CHECK_THROWS_AS(certify_unipotent(c, kH), Rejection);
  const TorusParam t = certify_torus(c, kH);
  CHECK(t.eigendata.size() == c.size());
  CHECK(t.eigenvalue_monoid.is_group());
  CHECK(t.eigenvalue_monoid.contains(2));
  CHECK_THROWS_AS(certify_torus(c, kE), Rejection);
  CHECK_THROWS_AS(certify_torus(c, make_rational(1, 2) * kH), Rejection);
}

TEST_CASE("group laws")
{
  const CategoryClosure c = sl2_closure(2);
  const auto e = certify_unipotent(c, kE);
  const auto h = certify_torus(c, kH);
  Rng rng(71);
  for (int trial = 0; trial < 5; ++trial)
  {
    const Rational a = rng.rational(4, 3), b = rng.rational(4, 3);
    CHECK(compose(exp_family(c, e, a), exp_family(c, e, b)) == exp_family(c, e, a + b));
    const Rational s = rng.nonzero_rational(4, 3), u = rng.nonzero_rational(4, 3);
    CHECK(compose(torus_family(c, h, s), torus_family(c, h, u)) == torus_family(c, h, s * u));
    CHECK(conjugation_check(torus_family(c, h, s), Rational(a) * NatFamily::from_lie_element(c, kE)));
  }
  CHECK(torus_family(c, h, 1) == NatFamily::identity(c));
  const std::size_t l1 = c.index_of("L1");
  CHECK(torus_family(c, h, 3).entries[l1] == QMatrix::diagonal(QVector{3, make_rational(1, 3)}));
}

TEST_CASE("restricted matrix coefficients match interpolation")
{
  const auto g = std::make_shared<const LieAlgebra>(examples::sl2());
  const Module v = examples::sl2_irrep(g, 2);
  const QVector phi{1, 1, 0}, x{0, 1, 1};
  const QVector z = kE + Rational(2) * kF;
  const QPoly p = mc_restrict_unipotent(v, phi, x, kE);
  std::vector<Rational> ts, ys;
  for (long t = 0; t < 4; ++t)
  {
    ts.push_back(t);
    ys.push_back(dot(phi, oracle::exp_series(Rational(t) * v.act(kE)) * x));
  }
  CHECK(p.coeffs() == oracle::interpolate(ts, ys));
  CHECK_THROWS(mc_restrict_unipotent(v, phi, x, z));
}

TEST_CASE("torus coefficients match interpolation of s^2 times the values")
{
  const CategoryClosure c = sl2_closure(2);
  const TorusParam h = certify_torus(c, kH);
  const std::size_t l1 = c.index_of("L1");
  const QVector phi{2, 3}, v{1, 1};
  const auto coeffs = torus_coefficient(h, l1, phi, v);
  // s^-1 and s^1 terms only; multiply by s to get a polynomial.
  std::vector<Rational> ss, ys;
  for (long s = 1; s <= 3; ++s)
  {
    ss.push_back(s);
    ys.push_back(Rational(s) * dot(phi, torus_family(c, h, s).entries[l1] * v));
  }
  const auto poly = oracle::interpolate(ss, ys);
  REQUIRE(poly.size() == 3);
  CHECK(coeffs.at(-1) == poly[0]);
  CHECK(coeffs.at(1) == poly[2]);
  for (const auto &[k, coeff] : coeffs)
    CHECK(h.eigenvalue_monoid.contains(k));
}

TEST_CASE("words generate certified M-elements")
{
  const CategoryClosure c = sl2_closure(2);
  const std::vector<OneParam> params{certify_unipotent(c, kE), certify_unipotent(c, kF), certify_torus(c, kH)};
  const std::vector<std::vector<Rational>> samples{{1, -1}, {2}, {make_rational(1, 2)}};
  const auto words = all_words(samples, 2);
  CHECK(words.size() == 1 + 4 + 16);
  CHECK(words.front().empty());
  const auto ms = generate_ME(c, params, words, true);
  REQUIRE(ms.size() == words.size());
  CHECK(ms.front() == NatFamily::identity(c));
  CHECK(ms[1] == instantiate(c, params[0], 1));
  const Word w{{0, 1}, {2, make_rational(1, 2)}};
  CHECK(generate_ME(c, params, {w}).front()
        == compose(instantiate(c, params[0], 1), instantiate(c, params[2], make_rational(1, 2))));
}
