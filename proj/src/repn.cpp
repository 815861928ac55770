#include "tforge/repn.hpp"

#include "tforge/errors.hpp"

#include <deque>

namespace tforge
{

  Module::Module(AlgebraPtr g, std::string id, std::size_t dim, std::vector<QMatrix> action)
      : m_algebra(std::move(g)), m_id(std::move(id)), m_dim(dim), m_action(std::move(action))
  {
  }

  Module make_unchecked(AlgebraPtr g, std::string id, std::size_t dim, std::vector<QMatrix> action)
  {
    return Module(std::move(g), std::move(id), dim, std::move(action));
  }

  namespace
  {
    void require_same_algebra(const Module &v, const Module &w)
    {
      if (v.algebra_ptr() != w.algebra_ptr() && !(v.algebra() == w.algebra()))
        throw InputError("modules \"" + v.id() + "\" and \"" + w.id() + "\" belong to different Lie algebras");
    }

    void check_shapes(const LieAlgebra &g, const std::vector<QMatrix> &action)
    {
      if (action.size() != g.dim())
        throw InputError("expected one action matrix per basis element (" + std::to_string(g.dim()) + "), got "
                         + std::to_string(action.size()));
      for (const auto &m : action)
        if (!m.is_square() || m.rows() != action.front().rows())
          throw InputError("action matrices must be square and of equal size");
    }
  } // namespace

  std::vector<std::array<std::size_t, 2>> check_module(const LieAlgebra &g, const std::vector<QMatrix> &action)
  {
    check_shapes(g, action);
    std::vector<std::array<std::size_t, 2>> bad;
    const std::size_t m = action.empty() ? 0 : action.front().rows();
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = i + 1; j < g.dim(); ++j)
      {
        QMatrix lhs(m, m);
        const QVector &c = g.structure(i, j);
        for (std::size_t k = 0; k < g.dim(); ++k)
          if (sgn(c[k]) != 0)
            lhs += c[k] * action[k];
        if (!(lhs == commutator(action[i], action[j])))
          bad.push_back({i, j});
      }
    return bad;
  }

  Module Module::create(AlgebraPtr g, std::string id, std::vector<QMatrix> action)
  {
    if (!g)
      throw InputError("module \"" + id + "\" has no Lie algebra");
    const auto bad = check_module(*g, action);
    if (!bad.empty())
    {
      std::string w;
      for (const auto &p : bad)
        w += (w.empty() ? "" : ", ") + std::string("(") + g->basis_names()[p[0]] + "," + g->basis_names()[p[1]] + ")";
      throw Rejection("module \"" + id + "\" violates the bracket-commutator identity", w);
    }
    const std::size_t dim = action.empty() ? 0 : action.front().rows();
    return Module(std::move(g), std::move(id), dim, std::move(action));
  }

  QMatrix Module::act(const QVector &x) const
  {
    if (x.size() != m_action.size())
      throw InputError("act: coefficient vector has wrong length");
    QMatrix r(m_dim, m_dim);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (sgn(x[i]) != 0)
        r += x[i] * m_action[i];
    return r;
  }

  Module Module::renamed(std::string id) const
  {
    return Module(m_algebra, std::move(id), m_dim, m_action);
  }

  Module trivial_module(AlgebraPtr g, std::size_t dim, std::string id)
  {
    std::vector<QMatrix> action(g->dim(), QMatrix(dim, dim));
    return make_unchecked(std::move(g), std::move(id), dim, std::move(action));
  }

  Module tensor(const Module &v, const Module &w, std::optional<std::string> id)
  {
    require_same_algebra(v, w);
    const QMatrix iv = QMatrix::identity(v.dim()), iw = QMatrix::identity(w.dim());
    std::vector<QMatrix> action;
    for (std::size_t i = 0; i < v.action().size(); ++i)
      action.push_back(kron(v.action(i), iw) + kron(iv, w.action(i)));
    return make_unchecked(v.algebra_ptr(), id.value_or("(" + v.id() + "*" + w.id() + ")"), v.dim() * w.dim(),
                          std::move(action));
  }

  Module direct_sum(const Module &v, const Module &w, std::optional<std::string> id)
  {
    require_same_algebra(v, w);
    std::vector<QMatrix> action;
    for (std::size_t i = 0; i < v.action().size(); ++i)
      action.push_back(block_diag(v.action(i), w.action(i)));
    return make_unchecked(v.algebra_ptr(), id.value_or("(" + v.id() + "+" + w.id() + ")"), v.dim() + w.dim(),
                          std::move(action));
  }

  Module dual_module(const Module &v, std::optional<std::string> id)
  {
    std::vector<QMatrix> action;
    for (const auto &a : v.action())
      action.push_back(-a.transpose());
    return make_unchecked(v.algebra_ptr(), id.value_or(v.id() + "^*"), v.dim(), std::move(action));
  }

  QMatrix restrict_matrix(const QMatrix &x, const std::vector<QVector> &basis)
  {
    const QMatrix b = QMatrix::from_columns(basis, x.rows());
    auto r = solve_left(b, x * b);
    if (!r)
      throw Rejection("subspace is not invariant under the given matrix");
    return *r;
  }

  Module restrict_module(const Module &v, const std::vector<QVector> &basis, std::string id)
  {
    std::vector<QMatrix> action;
    for (const auto &a : v.action())
      action.push_back(restrict_matrix(a, basis));
    return make_unchecked(v.algebra_ptr(), std::move(id), basis.size(), std::move(action));
  }

  GeneratedSubmodule submodule_generated(const Module &v, const std::vector<QVector> &seeds,
                                         std::optional<std::string> id)
  {
    GeneratedSubmodule out;
    std::deque<QVector> queue;
    auto consider = [&](const QVector &x) {
      if (x.size() != v.dim())
        throw InputError("submodule_generated: seed of wrong length");
      if (is_zero(x) || in_span(out.basis, x))
        return;
      out.basis.push_back(x);
      queue.push_back(x);
    };
    for (const auto &s : seeds)
      consider(s);
    while (!queue.empty())
    {
      const QVector x = queue.front();
      queue.pop_front();
      for (const auto &a : v.action())
        consider(a * x);
    }
    if (out.basis.empty())
      return out;
    const std::string name = id.value_or("<" + v.id() + ">");
    out.module = restrict_module(v, out.basis, name);
    out.inclusion = Morphism{name, v.id(), QMatrix::from_columns(out.basis, v.dim())};
    return out;
  }

  bool is_intertwiner(const Module &source, const Module &target, const QMatrix &a)
  {
    if (a.rows() != target.dim() || a.cols() != source.dim())
      return false;
    for (std::size_t i = 0; i < source.action().size(); ++i)
      if (!(a * source.action(i) == target.action(i) * a))
        return false;
    return true;
  }

  std::vector<QMatrix> hom_space(const Module &v, const Module &w)
  {
    require_same_algebra(v, w);
    const std::size_t n = v.dim(), m = w.dim();
    if (n == 0 || m == 0)
      return {};
    // Unknown A (m x n) flattened row-major; rows of the system: (a, r, c) for A rho_V(a) - rho_W(a) A.
    QMatrix sys(v.action().size() * m * n, m * n);
    for (std::size_t a = 0; a < v.action().size(); ++a)
    {
      const QMatrix &rv = v.action(a), &rw = w.action(a);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
        {
          const std::size_t row = (a * m + r) * n + c;
          for (std::size_t k = 0; k < n; ++k)
            if (sgn(rv(k, c)) != 0)
              sys(row, r * n + k) += rv(k, c);
          for (std::size_t k = 0; k < m; ++k)
            if (sgn(rw(r, k)) != 0)
              sys(row, k * n + c) -= rw(r, k);
        }
    }
    std::vector<QMatrix> basis;
    for (const auto &k : kernel_basis(sys))
      basis.push_back(QMatrix::unflatten(k, m, n));
    return basis;
  }

  bool is_invariant_subspace(const std::vector<QVector> &subspace, const std::vector<QMatrix> &actors)
  {
    if (subspace.empty() || actors.empty())
      return true;
    const std::size_t n = subspace.front().size();
    const auto basis = canonical_span(subspace, n);
    if (basis.empty())
      return true;
    // U is invariant under a iff every annihilating covector of U kills a U.
    const auto ann = kernel_basis(QMatrix::from_rows(basis, n));
    if (ann.empty())
      return true;
    const QMatrix left = QMatrix::from_rows(ann, n);
    const QMatrix right = QMatrix::from_columns(basis, n);
    for (const auto &a : actors)
      if (!(left * a * right).is_zero())
        return false;
    return true;
  }

  bool is_invariant_subspace(const Module &v, const std::vector<QVector> &subspace)
  {
    return is_invariant_subspace(subspace, v.action());
  }

  IrreducibilityCertificate certify_irreducible(const Module &v)
  {
    IrreducibilityCertificate cert;
    cert.commutant_dim = endomorphisms(v).size();
    for (std::size_t i = 0; i < v.dim(); ++i)
      cert.generated_dims.push_back(submodule_generated(v, {unit_vector(v.dim(), i)}).basis.size());
    cert.irreducible = v.dim() > 0 && cert.commutant_dim == 1;
    for (auto d : cert.generated_dims)
      cert.irreducible = cert.irreducible && d == v.dim();
    return cert;
  }

  namespace examples
  {
    Module sl2_irrep(AlgebraPtr sl2, unsigned n)
    {
      const std::size_t d = n + 1;
      QMatrix h(d, d), e(d, d), f(d, d);
      for (std::size_t k = 0; k < d; ++k)
      {
        h(k, k) = static_cast<long>(n) - 2 * static_cast<long>(k);
        if (k + 1 < d)
        {
          f(k + 1, k) = static_cast<long>(k + 1);
          e(k, k + 1) = static_cast<long>(n - k);
        }
      }
      return Module::create(std::move(sl2), "L" + std::to_string(n), {h, e, f});
    }

    Module matrix_module(AlgebraPtr g, const std::vector<QMatrix> &matrices, std::string id)
    {
      return Module::create(std::move(g), std::move(id), matrices);
    }
  } // namespace examples

} // namespace tforge
