#include "tforge/uea.hpp"

#include "tforge/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tforge
{

  MultiIndex MultiIndex::unit(std::size_t n, std::size_t i, unsigned k)
  {
    std::vector<unsigned> e(n, 0);
    e.at(i) = k;
    return MultiIndex(std::move(e));
  }

  unsigned MultiIndex::degree() const
  {
    return std::accumulate(m_exp.begin(), m_exp.end(), 0u);
  }

  std::vector<std::size_t> MultiIndex::support() const
  {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m_exp.size(); ++i)
      if (m_exp[i] != 0)
        s.push_back(i);
    return s;
  }

  MultiIndex MultiIndex::operator+(const MultiIndex &o) const
  {
    if (o.size() != size())
      throw InputError("multi-index length mismatch");
    std::vector<unsigned> e(size());
    for (std::size_t i = 0; i < size(); ++i)
      e[i] = m_exp[i] + o.m_exp[i];
    return MultiIndex(std::move(e));
  }

  std::strong_ordering operator<=>(const MultiIndex &a, const MultiIndex &b)
  {
    if (auto c = a.degree() <=> b.degree(); c != 0)
      return c;
    return a.m_exp <=> b.m_exp;
  }

  std::vector<MultiIndex> multi_indices_up_to(std::size_t n, unsigned max_degree)
  {
    std::vector<MultiIndex> out;
    std::vector<unsigned> e(n, 0);
    // Odometer over exponents with a running degree budget.
    auto rec = [&](auto &&self, std::size_t pos, unsigned budget) -> void {
      if (pos == n)
      {
        out.emplace_back(e);
        return;
      }
      for (unsigned k = 0; k <= budget; ++k)
      {
        e[pos] = k;
        self(self, pos + 1, budget - k);
      }
      e[pos] = 0;
    };
    rec(rec, 0, max_degree);
    std::sort(out.begin(), out.end());
    return out;
  }

  QMatrix pbw_matrix(const Module &v, const MultiIndex &e)
  {
    if (e.size() != v.action().size())
      throw InputError("apply_pbw: multi-index length does not match the Lie algebra");
    QMatrix r = QMatrix::identity(v.dim());
    for (std::size_t i = 0; i < e.size(); ++i)
    {
      const QMatrix &a = v.action(i);
      for (unsigned k = 1; k <= e[i]; ++k)
      {
        r = r * a;
        r *= Rational(1, k);
      }
    }
    return r;
  }

  QVector apply_pbw(const Module &v, const MultiIndex &e, const QVector &x)
  {
    if (x.size() != v.dim())
      throw InputError("apply_pbw: vector has wrong length");
    if (e.size() != v.action().size())
      throw InputError("apply_pbw: multi-index length does not match the Lie algebra");
    QVector y = x;
    for (std::size_t i = e.size(); i-- > 0;)
      for (unsigned k = 1; k <= e[i]; ++k)
        y = Rational(1, k) * (v.action(i) * y);
    return y;
  }

  QVector apply_word(const Module &v, const std::vector<std::size_t> &word, const QVector &x)
  {
    QVector y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      y = v.action(*it) * y;
    return y;
  }

  std::vector<std::pair<MultiIndex, MultiIndex>> coproduct_pbw(const MultiIndex &f)
  {
    std::vector<std::pair<MultiIndex, MultiIndex>> out;
    std::vector<unsigned> left(f.size(), 0);
    auto rec = [&](auto &&self, std::size_t pos) -> void {
      if (pos == f.size())
      {
        std::vector<unsigned> right(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
          right[i] = f[i] - left[i];
        out.emplace_back(MultiIndex(left), MultiIndex(std::move(right)));
        return;
      }
      for (unsigned k = 0; k <= f[pos]; ++k)
      {
        left[pos] = k;
        self(self, pos + 1);
      }
      left[pos] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  QVector antipode_generator(const QVector &x)
  {
    return Rational(-1) * x;
  }

  TruncatedDual TruncatedDual::counit(std::size_t n, unsigned bound)
  {
    TruncatedDual h(n, bound);
    h.set(MultiIndex::zero(n), 1);
    return h;
  }

  TruncatedDual TruncatedDual::basis_element(const MultiIndex &e, unsigned bound)
  {
    TruncatedDual h(e.size(), bound);
    h.set(e, 1);
    return h;
  }

  Rational TruncatedDual::coeff(const MultiIndex &e) const
  {
    auto it = m_terms.find(e);
    return it == m_terms.end() ? Rational(0) : it->second;
  }

  void TruncatedDual::set(const MultiIndex &e, const Rational &c)
  {
    if (e.size() != m_n)
      throw InputError("truncated dual: multi-index length mismatch");
    if (e.degree() > m_bound)
      throw InputError("truncated dual: degree " + std::to_string(e.degree()) + " exceeds bound "
                       + std::to_string(m_bound));
    if (sgn(c) == 0)
      m_terms.erase(e);
    else
      m_terms[e] = c;
  }

  void TruncatedDual::add(const MultiIndex &e, const Rational &c)
  {
    set(e, coeff(e) + c);
  }

  TruncatedDual TruncatedDual::operator+(const TruncatedDual &o) const
  {
    if (o.m_bound != m_bound || o.m_n != m_n)
      throw InputError("truncated dual: bound mismatch");
    TruncatedDual r = *this;
    for (const auto &[e, c] : o.m_terms)
      r.add(e, c);
    return r;
  }

  TruncatedDual TruncatedDual::scaled(const Rational &s) const
  {
    TruncatedDual r(m_n, m_bound);
    if (sgn(s) == 0)
      return r;
    for (const auto &[e, c] : m_terms)
      r.m_terms.emplace(e, s * c);
    return r;
  }

  TruncatedDual TruncatedDual::truncated(unsigned bound) const
  {
    if (bound > m_bound)
      throw InputError("truncated dual: cannot raise the bound");
    TruncatedDual r(m_n, bound);
    for (const auto &[e, c] : m_terms)
      if (e.degree() <= bound)
        r.m_terms.emplace(e, c);
    return r;
  }

  TruncatedDual dual_multiply(const TruncatedDual &a, const TruncatedDual &b)
  {
    if (a.bound() != b.bound() || a.basis_size() != b.basis_size())
      throw InputError("dual_multiply: bound mismatch");
    std::map<MultiIndex, Rational> acc;
    for (const auto &[e, c] : a.terms())
      for (const auto &[f, d] : b.terms())
      {
        if (e.degree() + f.degree() > a.bound())
          continue;
        acc[e + f] += c * d;
      }
    TruncatedDual out(a.basis_size(), a.bound());
    for (const auto &[e, c] : acc)
      out.set(e, c);
    return out;
  }

  std::optional<unsigned> valuation(const TruncatedDual &h)
  {
    if (h.is_zero())
      return std::nullopt;
    // Canonical order is degree-first.
    return h.terms().begin()->first.degree();
  }

  TruncatedDual matrix_coefficient(const Module &v, const QVector &phi, const QVector &x, unsigned bound)
  {
    if (phi.size() != v.dim() || x.size() != v.dim())
      throw InputError("matrix_coefficient: covector/vector length mismatch");
    const std::size_t n = v.action().size();
    TruncatedDual h(n, bound);
    for (const auto &e : multi_indices_up_to(n, bound))
      h.set(e, dot(phi, apply_pbw(v, e, x)));
    return h;
  }

} // namespace tforge
