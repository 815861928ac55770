#include "tforge/liealg.hpp"

#include <stdexcept>

namespace tforge
{

  LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, std::vector<std::vector<QVector>> structure)
      : m_names(std::move(basis_names)), m_table(std::move(structure))
  {
    const std::size_t n = m_names.size();
    if (m_table.size() != n)
      throw std::invalid_argument("structure table has wrong number of rows");
    for (const auto &row : m_table)
    {
      if (row.size() != n)
        throw std::invalid_argument("structure table has wrong number of columns");
      for (const auto &v : row)
        if (v.size() != n)
          throw std::invalid_argument("structure constant vector has wrong length");
    }
  }

  LieAlgebra LieAlgebra::with_basis(std::vector<std::string> basis_names)
  {
    const std::size_t n = basis_names.size();
    return LieAlgebra(std::move(basis_names),
                      std::vector<std::vector<QVector>>(n, std::vector<QVector>(n, zero_vector(n))));
  }

  LieAlgebra LieAlgebra::from_matrices(std::vector<std::string> basis_names, const std::vector<QMatrix> &matrices)
  {
    if (basis_names.size() != matrices.size())
      throw std::invalid_argument("from_matrices: one name per matrix required");
    if (matrices.empty())
      return with_basis({});
    const std::size_t rows = matrices.front().rows();
    std::vector<QVector> flat;
    for (const auto &m : matrices)
    {
      if (!m.is_square() || m.rows() != rows)
        throw std::invalid_argument("from_matrices: matrices must be square and of equal size");
      flat.push_back(m.flatten());
    }
    const QMatrix span = QMatrix::from_columns(flat, rows * rows);
    if (rank(span) != matrices.size())
      throw std::invalid_argument("from_matrices: matrices are linearly dependent");
    LieAlgebra g = with_basis(std::move(basis_names));
    for (std::size_t i = 0; i < matrices.size(); ++i)
      for (std::size_t j = i + 1; j < matrices.size(); ++j)
      {
        auto c = solve(span, commutator(matrices[i], matrices[j]).flatten());
        if (!c)
          throw std::invalid_argument("from_matrices: span is not closed under the commutator ("
                                      + g.m_names[i] + ", " + g.m_names[j] + ")");
        g.set_bracket(i, j, *c);
      }
    return g;
  }

  void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const QVector &value)
  {
    if (value.size() != dim())
      throw std::invalid_argument("set_bracket: wrong vector length");
    m_table.at(i).at(j) = value;
    m_table.at(j).at(i) = Rational(-1) * value;
  }

  std::size_t LieAlgebra::index_of(const std::string &name) const
  {
    for (std::size_t i = 0; i < m_names.size(); ++i)
      if (m_names[i] == name)
        return i;
    throw std::invalid_argument("unknown basis element \"" + name + "\"");
  }

  QVector LieAlgebra::bracket(const QVector &x, const QVector &y) const
  {
    if (x.size() != dim() || y.size() != dim())
      throw std::invalid_argument("bracket: dimension mismatch");
    QVector r = zero_vector(dim());
    for (std::size_t i = 0; i < dim(); ++i)
    {
      if (sgn(x[i]) == 0)
        continue;
      for (std::size_t j = 0; j < dim(); ++j)
      {
        if (sgn(y[j]) == 0)
          continue;
        const Rational c = x[i] * y[j];
        const QVector &s = m_table[i][j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (sgn(s[k]) != 0)
            r[k] += c * s[k];
      }
    }
    return r;
  }

  AxiomViolations validate(const LieAlgebra &g)
  {
    AxiomViolations out;
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (!is_zero(g.structure(i, j) + g.structure(j, i)))
          out.antisymmetry.push_back({i, j});
    // All ordered triples: without antisymmetry the Jacobi sum is not alternating.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
        {
          const QVector x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
          const QVector sum = g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(y, z), x)
                              + g.bracket(g.bracket(z, x), y);
          if (!is_zero(sum))
            out.jacobi.push_back({i, j, k});
        }
    return out;
  }

  Subalgebra Subalgebra::whole(const LieAlgebra &g)
  {
    std::vector<QVector> span;
    for (std::size_t i = 0; i < g.dim(); ++i)
      span.push_back(g.basis_vector(i));
    return {&g, std::move(span)};
  }

  bool is_bracket_closed(const LieAlgebra &g, const std::vector<QVector> &span)
  {
    for (std::size_t i = 0; i < span.size(); ++i)
      for (std::size_t j = i + 1; j < span.size(); ++j)
        if (!in_span(span, g.bracket(span[i], span[j])))
          return false;
    return true;
  }

  Subalgebra make_subalgebra(const LieAlgebra &g, const std::vector<QVector> &spanning)
  {
    auto basis = canonical_span(spanning, g.dim());
    if (!is_bracket_closed(g, basis))
      throw std::invalid_argument("make_subalgebra: span is not closed under the bracket");
    return {&g, std::move(basis)};
  }

  std::vector<QVector> bracket_span(const LieAlgebra &g, const std::vector<QVector> &a, const std::vector<QVector> &b)
  {
    std::vector<QVector> out;
    for (const auto &x : a)
      for (const auto &y : b)
        out.push_back(g.bracket(x, y));
    return canonical_span(out, g.dim());
  }

  CentralSeries lower_central_series(const Subalgebra &s)
  {
    if (s.parent == nullptr)
      throw std::invalid_argument("lower_central_series: subalgebra without parent");
    const LieAlgebra &g = *s.parent;
    CentralSeries out;
    out.terms.push_back(canonical_span(s.span, g.dim()));
    while (!out.terms.back().empty())
    {
      auto next = bracket_span(g, out.terms.front(), out.terms.back());
      if (same_span(next, out.terms.back(), g.dim()))
        break;
      out.terms.push_back(std::move(next));
    }
    out.nilpotent = out.terms.back().empty();
    if (out.nilpotent)
      out.nilpotency_class = out.terms.size() - 1;
    return out;
  }

  CentralSeries lower_central_series(const LieAlgebra &g)
  {
    return lower_central_series(Subalgebra::whole(g));
  }

  namespace examples
  {
    namespace
    {
      QVector coords(std::initializer_list<long> c)
      {
        QVector v;
        for (long x : c)
          v.emplace_back(x);
        return v;
      }

      QMatrix elementary(std::size_t n, std::size_t i, std::size_t j)
      {
        QMatrix m(n, n);
        m(i, j) = 1;
        return m;
      }
    } // namespace

    LieAlgebra sl2()
    {
      LieAlgebra g = LieAlgebra::with_basis({"h", "e", "f"});
      g.set_bracket(0, 1, coords({0, 2, 0}));
      g.set_bracket(0, 2, coords({0, 0, -2}));
      g.set_bracket(1, 2, coords({1, 0, 0}));
      return g;
    }

    LieAlgebra heisenberg()
    {
      LieAlgebra g = LieAlgebra::with_basis({"x", "y", "z"});
      g.set_bracket(0, 1, coords({0, 0, 1}));
      return g;
    }

    std::vector<QMatrix> unitriangular4_matrices()
    {
      return {elementary(4, 0, 1), elementary(4, 0, 2), elementary(4, 0, 3),
              elementary(4, 1, 2), elementary(4, 1, 3), elementary(4, 2, 3)};
    }

    LieAlgebra unitriangular4()
    {
      return LieAlgebra::from_matrices({"e12", "e13", "e14", "e23", "e24", "e34"}, unitriangular4_matrices());
    }

    LieAlgebra abelian(std::size_t n)
    {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i)
        names.push_back("a" + std::to_string(i + 1));
      return LieAlgebra::with_basis(std::move(names));
    }

    std::vector<QMatrix> sl2_defining_matrices()
    {
      return {QMatrix{{1, 0}, {0, -1}}, QMatrix{{0, 1}, {0, 0}}, QMatrix{{0, 0}, {1, 0}}};
    }

    std::vector<QMatrix> heisenberg_matrices()
    {
      return {elementary(3, 0, 1), elementary(3, 1, 2), elementary(3, 0, 2)};
    }
  } // namespace examples

} // namespace tforge
