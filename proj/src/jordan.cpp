#include "tforge/jordan.hpp"

#include "tforge/errors.hpp"

namespace tforge
{

  AdditiveJC additive_jc(const QMatrix &x)
  {
    if (!x.is_square())
      throw InputError("additive_jc: non-square matrix");
    const std::size_t dim = x.rows();
    if (dim == 0)
      return {x, x, QPoly()};
    const QPoly m = minimal_polynomial(x);
    const QPoly p = squarefree_part(m);
    const QPoly dp = p.derivative();
    QPoly s = QPoly::monomial(1) % m;
    // Quadratic convergence: the nilpotency index of p(x) is at most dim.
    for (std::size_t iter = 0;; ++iter)
    {
      const QPoly value = compose_mod(p, s, m);
      if (value.is_zero())
        break;
      if (iter > dim + 1)
        throw std::logic_error("additive_jc: Newton lift did not terminate");
      auto inv = inverse_mod(compose_mod(dp, s, m), m);
      if (!inv)
        throw std::logic_error("additive_jc: p'(s) not invertible modulo the minimal polynomial");
      s = (s - value * *inv) % m;
    }
    QMatrix sm = s(x);
    return {sm, x - sm, s};
  }

  MultiplicativeJC multiplicative_jc(const QMatrix &x, const QMatrix &e)
  {
    if (!x.is_square() || !e.is_square() || x.rows() != e.rows())
      throw InputError("multiplicative_jc: shape mismatch");
    if (!(e * e == e))
      throw InputError("multiplicative_jc: e is not idempotent");
    if (!(x * e == x) || !(e * x == x))
      throw InputError("multiplicative_jc: x is not in e End e");
    const std::size_t n = x.rows();
    const std::vector<QVector> im = canonical_span(e.columns(), n);
    const std::vector<QVector> ker = kernel_basis(e);
    std::vector<QVector> cols = im;
    cols.insert(cols.end(), ker.begin(), ker.end());
    const QMatrix p = QMatrix::from_columns(cols, n);
    const QMatrix pinv = *inverse(p);
    const std::size_t r = im.size();

    QMatrix xr(r, r);
    const QMatrix conj = pinv * x * p;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        xr(i, j) = conj(i, j);

    const AdditiveJC a = additive_jc(xr);
    auto s0inv = inverse(a.s);
    if (!s0inv)
    {
      const QVector k = kernel_basis(xr).front();
      const QVector w = QMatrix::from_columns(im, n) * k;
      std::string witness;
      for (const auto &q : w)
        witness += (witness.empty() ? "" : ",") + to_string(q);
      throw Rejection("multiplicative_jc: x is not invertible on image(e)", "[" + witness + "]");
    }
    const QMatrix u0 = QMatrix::identity(r) + *s0inv * a.n;
    auto extend = [&](const QMatrix &block) {
      QMatrix big(n, n);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          big(i, j) = block(i, j);
      return p * big * pinv;
    };
    MultiplicativeJC out{e, extend(a.s), extend(u0)};
    if (!(out.s * out.u == x) || !(out.u * out.s == x))
      throw std::logic_error("multiplicative_jc: factorization check failed");
    return out;
  }

  Classification classify(const QMatrix &x)
  {
    if (!x.is_square())
      throw InputError("classify: non-square matrix");
    const std::size_t n = x.rows();
    Classification c;
    const QPoly m = minimal_polynomial(x);
    c.semisimple = gcd(m, m.derivative()).degree() == 0;
    c.nilpotent = power(x, static_cast<unsigned>(n)).is_zero();
    c.unipotent = power(x - QMatrix::identity(n), static_cast<unsigned>(n)).is_zero();
    const std::size_t rk = rank(x);
    if (rank(x * x) == rk)
    {
      const std::vector<QVector> im = canonical_span(x.columns(), n);
      if (im.empty())
        c.weak_locally_unipotent = true;
      else
      {
        const QMatrix xr = restrict_matrix(x, im);
        c.weak_locally_unipotent
            = power(xr - QMatrix::identity(im.size()), static_cast<unsigned>(im.size())).is_zero();
      }
    }
    return c;
  }

  TensorJCReport tensor_jc_check(const QMatrix &x, const QMatrix &y)
  {
    if (!x.is_square() || !y.is_square())
      throw InputError("tensor_jc_check: non-square input");
    TensorJCReport r;
    const QMatrix ix = QMatrix::identity(x.rows()), iy = QMatrix::identity(y.rows());
    const AdditiveJC ax = additive_jc(x), ay = additive_jc(y);
    const AdditiveJC sum = additive_jc(kron(x, iy) + kron(ix, y));
    r.additive = sum.s == kron(ax.s, iy) + kron(ix, ay.s) && sum.n == kron(ax.n, iy) + kron(ix, ay.n);
    r.multiplicative_applicable = inverse(x).has_value() && inverse(y).has_value();
    if (r.multiplicative_applicable)
    {
      const MultiplicativeJC mx = multiplicative_jc(x, ix), my = multiplicative_jc(y, iy);
      const MultiplicativeJC mt = multiplicative_jc(kron(x, y), kron(ix, iy));
      r.multiplicative = mt.s == kron(mx.s, my.s) && mt.u == kron(mx.u, my.u);
    }
    return r;
  }

  std::pair<NatFamily, NatFamily> family_additive_jc(const NatFamily &x)
  {
    NatFamily s, n;
    for (const auto &m : x.entries)
    {
      AdditiveJC a = additive_jc(m);
      s.entries.push_back(std::move(a.s));
      n.entries.push_back(std::move(a.n));
    }
    return {s, n};
  }

  std::pair<NatFamily, NatFamily> family_multiplicative_jc(const NatFamily &m, const NatFamily &e)
  {
    if (m.entries.size() != e.entries.size())
      throw InputError("family_multiplicative_jc: families over different closures");
    NatFamily s, u;
    for (std::size_t i = 0; i < m.entries.size(); ++i)
    {
      MultiplicativeJC j = multiplicative_jc(m.entries[i], e.entries[i]);
      s.entries.push_back(std::move(j.s));
      u.entries.push_back(std::move(j.u));
    }
    return {s, u};
  }

} // namespace tforge
