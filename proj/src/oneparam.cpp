#include "tforge/oneparam.hpp"

#include "tforge/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tforge
{

  QMatrix exp_nilpotent(const QMatrix &x)
  {
    if (!x.is_square())
      throw InputError("exp_nilpotent: non-square matrix");
    const std::size_t n = x.rows();
    QMatrix sum = QMatrix::identity(n);
    QMatrix term = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k)
    {
      term = term * x;
      term *= Rational(1, static_cast<unsigned long>(k));
      if (term.is_zero())
        return sum;
      sum += term;
    }
    if (!(term * x).is_zero())
      throw Rejection("exp_nilpotent: matrix is not nilpotent");
    return sum;
  }

  QMatrix log_unipotent(const QMatrix &u)
  {
    if (!u.is_square())
      throw InputError("log_unipotent: non-square matrix");
    const std::size_t n = u.rows();
    const QMatrix y = u - QMatrix::identity(n);
    if (!power(y, static_cast<unsigned>(n)).is_zero())
      throw Rejection("log_unipotent: matrix is not unipotent");
    QMatrix sum(n, n), term = QMatrix::identity(n);
    for (std::size_t k = 1; k < std::max<std::size_t>(n, 1); ++k)
    {
      term = term * y;
      const Rational c(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k));
      sum += c * term;
    }
    return sum;
  }

  Rational rational_pow(const Rational &s, long k)
  {
    if (sgn(s) == 0 && k < 0)
      throw InputError("rational_pow: zero to a negative power");
    Rational base = k < 0 ? Rational(1 / s) : s;
    Rational r = 1;
    for (long i = 0; i < std::labs(k); ++i)
      r *= base;
    return r;
  }

  //------------------------------------------------------------------------------
  // IntMonoid
  //------------------------------------------------------------------------------

  IntMonoid::IntMonoid(std::vector<long> generators) : m_gens(std::move(generators))
  {
    m_gens.erase(std::remove(m_gens.begin(), m_gens.end(), 0L), m_gens.end());
    std::sort(m_gens.begin(), m_gens.end());
    m_gens.erase(std::unique(m_gens.begin(), m_gens.end()), m_gens.end());
  }

  bool IntMonoid::is_group() const
  {
    return m_gens.empty() || (m_gens.front() < 0 && m_gens.back() > 0);
  }

  bool IntMonoid::contains(long b) const
  {
    if (b == 0)
      return true;
    if (m_gens.empty())
      return false;
    if (is_group())
    {
      long g = 0;
      for (long x : m_gens)
        g = std::gcd(g, x);
      return b % g == 0;
    }
    // One-signed generators: reachability by dynamic programming on |b|.
    const long sign = m_gens.front() > 0 ? 1 : -1;
    if (b * sign < 0)
      return false;
    const long target = std::labs(b);
    std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
    reach[0] = 1;
    for (long v = 1; v <= target; ++v)
      for (long x : m_gens)
      {
        const long a = std::labs(x);
        if (a <= v && reach[static_cast<std::size_t>(v - a)])
        {
          reach[static_cast<std::size_t>(v)] = 1;
          break;
        }
      }
    return reach[static_cast<std::size_t>(target)] != 0;
  }

  //------------------------------------------------------------------------------
  // Parameters
  //------------------------------------------------------------------------------

  UnipotentParam certify_unipotent(const CategoryClosure &c, const QVector &x)
  {
    for (const auto &o : c.objects())
    {
      const QMatrix a = o.module.act(x);
      if (!power(a, static_cast<unsigned>(a.rows())).is_zero())
        throw Rejection("Lie element does not act nilpotently", o.module.id());
    }
    return {x};
  }

  TorusParam certify_torus(const CategoryClosure &c, const QVector &h)
  {
    TorusParam t;
    t.generator = h;
    std::vector<long> all;
    for (const auto &o : c.objects())
    {
      const QMatrix a = o.module.act(h);
      const std::size_t n = a.rows();
      Eigendata d;
      if (n == 0)
      {
        t.eigendata.push_back(std::move(d));
        continue;
      }
      const QPoly m = minimal_polynomial(a);
      const auto roots = rational_roots(m);
      if (static_cast<long>(roots.size()) != m.degree())
        throw Rejection("action is not diagonalizable over Q", o.module.id());
      std::vector<QVector> cols;
      for (const auto &lambda : roots)
      {
        if (lambda.get_den() != 1 || !lambda.get_num().fits_slong_p())
          throw Rejection("non-integer eigenvalue " + to_string(lambda), o.module.id());
        for (auto &v : kernel_basis(a - lambda * QMatrix::identity(n)))
        {
          cols.push_back(std::move(v));
          d.eigenvalues.push_back(lambda.get_num().get_si());
        }
      }
      d.basis = QMatrix::from_columns(cols, n);
      d.basis_inverse = *inverse(d.basis);
      all.insert(all.end(), d.eigenvalues.begin(), d.eigenvalues.end());
      t.eigendata.push_back(std::move(d));
    }
    t.eigenvalue_monoid = IntMonoid(std::move(all));
    return t;
  }

  NatFamily exp_family(const CategoryClosure &c, const UnipotentParam &x, const Rational &t)
  {
    NatFamily f;
    for (const auto &o : c.objects())
    {
      try
      {
        f.entries.push_back(exp_nilpotent(t * o.module.act(x.generator)));
      }
      catch (const Rejection &)
      {
        throw Rejection("Lie element does not act nilpotently", o.module.id());
      }
    }
    return f;
  }

  NatFamily exp_family(const NatFamily &x)
  {
    NatFamily f;
    for (const auto &e : x.entries)
      f.entries.push_back(exp_nilpotent(e));
    return f;
  }

  NatFamily torus_family(const CategoryClosure &c, const TorusParam &h, const Rational &s)
  {
    if (sgn(s) == 0)
      throw InputError("torus_family: s must be nonzero");
    if (h.eigendata.size() != c.size())
      throw InputError("torus_family: eigendata does not match the closure");
    NatFamily f;
    for (const auto &d : h.eigendata)
    {
      QVector diag;
      for (long lambda : d.eigenvalues)
        diag.push_back(rational_pow(s, lambda));
      if (diag.empty())
        f.entries.emplace_back(0, 0);
      else
        f.entries.push_back(d.basis * QMatrix::diagonal(diag) * d.basis_inverse);
    }
    return f;
  }

  QPoly mc_restrict_unipotent(const Module &v, const QVector &phi, const QVector &x, const QVector &lie_element)
  {
    const QMatrix a = v.act(lie_element);
    if (!power(a, static_cast<unsigned>(a.rows())).is_zero())
      throw Rejection("Lie element does not act nilpotently", v.id());
    std::vector<Rational> coeffs;
    QVector w = x;
    for (std::size_t k = 0; k <= v.dim(); ++k)
    {
      coeffs.push_back(dot(phi, w));
      w = Rational(1, static_cast<unsigned long>(k + 1)) * (a * w);
    }
    return QPoly(std::move(coeffs));
  }

  std::map<long, Rational> torus_coefficient(const TorusParam &h, std::size_t object, const QVector &phi,
                                             const QVector &v)
  {
    const Eigendata &d = h.eigendata.at(object);
    const QVector coords = d.basis_inverse * v;
    std::map<long, Rational> out;
    for (std::size_t k = 0; k < d.eigenvalues.size(); ++k)
    {
      if (sgn(coords[k]) == 0)
        continue;
      out[d.eigenvalues[k]] += coords[k] * dot(phi, d.basis.column(k));
    }
    std::erase_if(out, [](const auto &kv) { return sgn(kv.second) == 0; });
    return out;
  }

  bool conjugation_check(const NatFamily &m, const NatFamily &x)
  {
    auto minv = invert(m);
    if (!minv)
      throw InputError("conjugation_check: family is not invertible");
    NatFamily conj;
    for (std::size_t i = 0; i < m.entries.size(); ++i)
      conj.entries.push_back(m.entries[i] * x.entries[i] * minv->entries[i]);
    return compose(compose(m, exp_family(x)), *minv) == exp_family(conj);
  }

  NatFamily instantiate(const CategoryClosure &c, const OneParam &p, const Rational &value)
  {
    if (const auto *u = std::get_if<UnipotentParam>(&p))
      return exp_family(c, *u, value);
    return torus_family(c, std::get<TorusParam>(p), value);
  }

  std::vector<Word> all_words(const std::vector<std::vector<Rational>> &samples, std::size_t max_length)
  {
    std::vector<Letter> letters;
    for (std::size_t p = 0; p < samples.size(); ++p)
      for (const auto &v : samples[p])
        letters.push_back({p, v});
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len)
    {
      const std::size_t end = out.size();
      for (std::size_t w = begin; w < end; ++w)
        for (const auto &l : letters)
        {
          Word next = out[w];
          next.push_back(l);
          out.push_back(std::move(next));
        }
      begin = end;
    }
    return out;
  }

  std::vector<NatFamily> generate_ME(const CategoryClosure &c, const std::vector<OneParam> &params,
                                     const std::vector<Word> &words, bool certify)
  {
    std::map<std::pair<std::size_t, std::string>, NatFamily> cache;
    auto letter = [&](const Letter &l) -> const NatFamily & {
      const auto key = std::make_pair(l.param, to_string(l.value));
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(key, instantiate(c, params.at(l.param), l.value)).first;
      return it->second;
    };
    std::vector<NatFamily> out;
    out.reserve(words.size());
    for (const auto &w : words)
    {
      NatFamily f = NatFamily::identity(c);
      for (const auto &l : w)
        f = compose(f, letter(l));
      if (certify)
      {
        const MembershipReport r = m_membership(c, f, 1);
        if (!r.certified)
          throw Rejection("generated word is not in M", r.violations.front());
      }
      out.push_back(std::move(f));
    }
    return out;
  }

} // namespace tforge
