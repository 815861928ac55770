#include "tforge/nilgrp.hpp"

#include "tforge/errors.hpp"
#include "tforge/oneparam.hpp"

namespace tforge
{

  const std::vector<DynkinTerm> &dynkin_table()
  {
    static const std::vector<DynkinTerm> table{
        {Rational(1), "x"},
        {Rational(1), "y"},
        {Rational(1, 2), "xy"},
        {Rational(1, 12), "xxy"},
        {Rational(-1, 12), "yxy"},
        {Rational(-1, 24), "yxxy"},
    };
    return table;
  }

  BCHGroup::BCHGroup(Subalgebra n) : m_n(std::move(n))
  {
    if (m_n.parent == nullptr)
      throw InputError("BCHGroup: subalgebra without parent");
    if (!is_bracket_closed(*m_n.parent, m_n.span))
      throw InputError("BCHGroup: span is not a subalgebra");
    const CentralSeries series = lower_central_series(m_n);
    if (!series.nilpotent)
      throw Rejection("BCHGroup: subalgebra is not nilpotent",
                      "lower central series stops at dimension " + std::to_string(series.terms.back().size()));
    m_class = series.nilpotency_class;
    if (m_class > kDynkinTableDepth)
      throw Rejection("BCHGroup: nilpotency class " + std::to_string(m_class) + " exceeds the Dynkin table depth "
                      + std::to_string(kDynkinTableDepth));
  }

  QVector BCHGroup::bch(const QVector &x, const QVector &y) const
  {
    const LieAlgebra &g = parent();
    if (x.size() != g.dim() || y.size() != g.dim())
      throw InputError("bch: dimension mismatch");
    if (!contains(x) || !contains(y))
      throw InputError("bch: argument outside the nilpotent subalgebra");
    QVector z = zero_vector(g.dim());
    for (const auto &term : dynkin_table())
    {
      if (term.word.size() > std::max<std::size_t>(m_class, 1))
        continue;
      // Right-nested: start from the last letter and bracket from the left.
      QVector acc = term.word.back() == 'x' ? x : y;
      for (std::size_t i = term.word.size() - 1; i-- > 0;)
        acc = g.bracket(term.word[i] == 'x' ? x : y, acc);
      z = z + term.coefficient * acc;
    }
    return z;
  }

  ModuleFiltration filtration(const Module &v, const Subalgebra &n)
  {
    const std::size_t d = v.dim();
    std::vector<QMatrix> actors;
    for (const auto &x : n.span)
      actors.push_back(v.act(x));
    ModuleFiltration f{v.id(), {}};
    std::vector<QVector> prev;
    while (true)
    {
      // Covectors annihilating V_{j-1}; all of V* when V_{j-1} = 0.
      std::vector<QVector> ann = prev.empty() ? QMatrix::identity(d).columns()
                                              : kernel_basis(QMatrix::from_rows(prev, d));
      std::vector<QVector> rows;
      for (const auto &a : actors)
      {
        if (ann.empty())
          break;
        const QMatrix block = QMatrix::from_rows(ann, d) * a;
        for (std::size_t r = 0; r < block.rows(); ++r)
          rows.push_back(block.row(r));
      }
      std::vector<QVector> level = rows.empty() ? QMatrix::identity(d).columns()
                                                : kernel_basis(QMatrix::from_rows(rows, d));
      level = canonical_span(level, d);
      if (!f.levels.empty() && level.size() == prev.size() && level.size() < d)
        throw Rejection("subalgebra does not act nilpotently", v.id());
      f.levels.push_back(level);
      if (level.size() == d)
        return f;
      prev = std::move(level);
    }
  }

  std::vector<QVector> annihilator_ideal(const CategoryClosure &c, const Subalgebra &n, std::size_t k)
  {
    const std::size_t m = n.span.size();
    if (m == 0)
      return {};
    std::vector<QVector> rows;
    for (const auto &o : c.objects())
    {
      const ModuleFiltration f = filtration(o.module, n);
      const auto &level = k < f.levels.size() ? f.levels[k] : f.levels.back();
      std::vector<QMatrix> actors;
      for (const auto &x : n.span)
        actors.push_back(o.module.act(x));
      for (const auto &v : level)
      {
        // sum_j c_j rho(n_j) v = 0, one row per coordinate.
        std::vector<QVector> images;
        for (const auto &a : actors)
          images.push_back(a * v);
        for (std::size_t i = 0; i < o.module.dim(); ++i)
        {
          QVector row(m);
          for (std::size_t j = 0; j < m; ++j)
            row[j] = images[j][i];
          rows.push_back(std::move(row));
        }
      }
    }
    std::vector<QVector> coeffs = rows.empty() ? QMatrix::identity(m).columns()
                                               : kernel_basis(QMatrix::from_rows(rows, m));
    std::vector<QVector> out;
    const std::size_t gdim = n.parent->dim();
    for (const auto &cvec : coeffs)
    {
      QVector x = zero_vector(gdim);
      for (std::size_t j = 0; j < m; ++j)
        if (sgn(cvec[j]) != 0)
          x = x + cvec[j] * n.span[j];
      out.push_back(std::move(x));
    }
    return canonical_span(out, gdim);
  }

  bool exp_compat_check(const BCHGroup &g, const CategoryClosure &c, const QVector &x, const QVector &y)
  {
    const QVector z = g.bch(x, y);
    for (const auto &o : c.objects())
    {
      const QMatrix lhs = exp_nilpotent(o.module.act(z));
      const QMatrix rhs = exp_nilpotent(o.module.act(x)) * exp_nilpotent(o.module.act(y));
      if (!(lhs == rhs))
        return false;
    }
    return true;
  }

} // namespace tforge
