#include "tforge/exactlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace tforge
{

  //------------------------------------------------------------------------------
  // Scalars and vectors
  //------------------------------------------------------------------------------

  Rational make_rational(long num, long den)
  {
    if (den == 0)
      throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string to_string(const Rational &q)
  {
    return q.get_str();
  }

  Rational parse_rational(const std::string &text)
  {
    auto is_int = [](const std::string &s) {
      std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (start == s.size())
        return false;
      return std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!num.empty() && num[0] == '+')
      num.erase(0, 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
      throw std::invalid_argument("not a rational: \"" + text + "\"");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
      throw std::invalid_argument("zero denominator: \"" + text + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  QVector zero_vector(std::size_t n) { return QVector(n, Rational(0)); }

  QVector unit_vector(std::size_t n, std::size_t i)
  {
    QVector v(n, Rational(0));
    v.at(i) = 1;
    return v;
  }

  bool is_zero(const QVector &v)
  {
    return std::all_of(v.begin(), v.end(), [](const Rational &x) { return sgn(x) == 0; });
  }

  QVector operator+(const QVector &a, const QVector &b)
  {
    if (a.size() != b.size())
      throw std::invalid_argument("vector size mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r[i] = a[i] + b[i];
    return r;
  }

  QVector operator-(const QVector &a, const QVector &b)
  {
    if (a.size() != b.size())
      throw std::invalid_argument("vector size mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r[i] = a[i] - b[i];
    return r;
  }

  QVector operator*(const Rational &s, const QVector &v)
  {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      r[i] = s * v[i];
    return r;
  }

  Rational dot(const QVector &a, const QVector &b)
  {
    if (a.size() != b.size())
      throw std::invalid_argument("vector size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
        s += a[i] * b[i];
    return s;
  }

  //------------------------------------------------------------------------------
  // QMatrix
  //------------------------------------------------------------------------------

  QMatrix::QMatrix(std::size_t rows, std::size_t cols)
      : m_rows(rows), m_cols(cols), m_data(rows * cols, Rational(0))
  {
  }

  QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
  {
    m_rows = rows.size();
    m_cols = m_rows == 0 ? 0 : rows.begin()->size();
    m_data.reserve(m_rows * m_cols);
    for (const auto &r : rows)
    {
      if (r.size() != m_cols)
        throw std::invalid_argument("QMatrix: ragged initializer");
      m_data.insert(m_data.end(), r.begin(), r.end());
    }
  }

  QMatrix QMatrix::identity(std::size_t n)
  {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  QMatrix QMatrix::diagonal(const QVector &d)
  {
    QMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      m(i, i) = d[i];
    return m;
  }

  QMatrix QMatrix::from_columns(const std::vector<QVector> &cols, std::size_t rows)
  {
    QMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      m.set_column(j, cols[j]);
    return m;
  }

  QMatrix QMatrix::from_rows(const std::vector<QVector> &rows, std::size_t cols)
  {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
      if (rows[i].size() != cols)
        throw std::invalid_argument("from_rows: row length mismatch");
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  bool QMatrix::is_zero() const
  {
    return tforge::is_zero(m_data);
  }

  QVector QMatrix::row(std::size_t i) const
  {
    return QVector(m_data.begin() + static_cast<long>(i * m_cols), m_data.begin() + static_cast<long>((i + 1) * m_cols));
  }

  QVector QMatrix::column(std::size_t j) const
  {
    QVector c(m_rows);
    for (std::size_t i = 0; i < m_rows; ++i)
      c[i] = (*this)(i, j);
    return c;
  }

  std::vector<QVector> QMatrix::columns() const
  {
    std::vector<QVector> cs;
    cs.reserve(m_cols);
    for (std::size_t j = 0; j < m_cols; ++j)
      cs.push_back(column(j));
    return cs;
  }

  void QMatrix::set_column(std::size_t j, const QVector &v)
  {
    if (v.size() != m_rows)
      throw std::invalid_argument("set_column: length mismatch");
    for (std::size_t i = 0; i < m_rows; ++i)
      (*this)(i, j) = v[i];
  }

  QMatrix QMatrix::transpose() const
  {
    QMatrix t(m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i)
      for (std::size_t j = 0; j < m_cols; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Rational QMatrix::trace() const
  {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(m_rows, m_cols); ++i)
      t += (*this)(i, i);
    return t;
  }

  QMatrix QMatrix::unflatten(const QVector &v, std::size_t rows, std::size_t cols)
  {
    if (v.size() != rows * cols)
      throw std::invalid_argument("unflatten: size mismatch");
    QMatrix m(rows, cols);
    m.m_data = v;
    return m;
  }

  QMatrix &QMatrix::operator+=(const QMatrix &o)
  {
    if (m_rows != o.m_rows || m_cols != o.m_cols)
      throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < m_data.size(); ++k)
      m_data[k] += o.m_data[k];
    return *this;
  }

  QMatrix &QMatrix::operator-=(const QMatrix &o)
  {
    if (m_rows != o.m_rows || m_cols != o.m_cols)
      throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < m_data.size(); ++k)
      m_data[k] -= o.m_data[k];
    return *this;
  }

  QMatrix &QMatrix::operator*=(const Rational &s)
  {
    for (auto &x : m_data)
      x *= s;
    return *this;
  }

  bool operator==(const QMatrix &a, const QMatrix &b)
  {
    return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
  }

  QMatrix operator+(QMatrix a, const QMatrix &b) { return a += b; }
  QMatrix operator-(QMatrix a, const QMatrix &b) { return a -= b; }
  QMatrix operator-(const QMatrix &a) { return Rational(-1) * a; }
  QMatrix operator*(const Rational &s, QMatrix a) { return a *= s; }

  QMatrix operator*(const QMatrix &a, const QMatrix &b)
  {
    if (a.cols() != b.rows())
      throw std::invalid_argument("matrix product shape mismatch");
    QMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k)
      {
        const Rational &aik = a(i, k);
        if (sgn(aik) == 0)
          continue;
        for (std::size_t j = 0; j < b.cols(); ++j)
          if (sgn(b(k, j)) != 0)
            c(i, j) += aik * b(k, j);
      }
    return c;
  }

  QVector operator*(const QMatrix &a, const QVector &v)
  {
    if (a.cols() != v.size())
      throw std::invalid_argument("matrix-vector shape mismatch");
    QVector r(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0)
          r[i] += a(i, j) * v[j];
    return r;
  }

  QMatrix commutator(const QMatrix &a, const QMatrix &b)
  {
    return a * b - b * a;
  }

  QMatrix kron(const QMatrix &a, const QMatrix &b)
  {
    QMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
      {
        if (sgn(a(i, j)) == 0)
          continue;
        for (std::size_t p = 0; p < b.rows(); ++p)
          for (std::size_t q = 0; q < b.cols(); ++q)
            k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
      }
    return k;
  }

  QMatrix block_diag(const QMatrix &a, const QMatrix &b)
  {
    QMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
  }

  QMatrix power(const QMatrix &m, unsigned k)
  {
    if (!m.is_square())
      throw std::invalid_argument("power: non-square matrix");
    QMatrix r = QMatrix::identity(m.rows());
    for (unsigned i = 0; i < k; ++i)
      r = r * m;
    return r;
  }

  //------------------------------------------------------------------------------
  // Elimination
  //------------------------------------------------------------------------------

  RowEchelon rref(QMatrix m)
  {
    RowEchelon out;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col)
    {
      std::size_t piv = prow;
      while (piv < m.rows() && sgn(m(piv, col)) == 0)
        ++piv;
      if (piv == m.rows())
        continue;
      if (piv != prow)
        for (std::size_t j = 0; j < m.cols(); ++j)
          std::swap(m(piv, j), m(prow, j));
      const Rational inv = 1 / m(prow, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(prow, j) *= inv;
      for (std::size_t i = 0; i < m.rows(); ++i)
      {
        if (i == prow || sgn(m(i, col)) == 0)
          continue;
        const Rational f = m(i, col);
        for (std::size_t j = col; j < m.cols(); ++j)
          if (sgn(m(prow, j)) != 0)
            m(i, j) -= f * m(prow, j);
      }
      out.pivots.push_back(col);
      ++prow;
    }
    out.reduced = std::move(m);
    return out;
  }

  std::size_t rank(const QMatrix &m)
  {
    return rref(m).pivots.size();
  }

  std::vector<QVector> kernel_basis(const QMatrix &m)
  {
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
      is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free)
    {
      if (is_pivot[free])
        continue;
      QVector v(m.cols(), Rational(0));
      v[free] = 1;
      for (std::size_t r = 0; r < e.pivots.size(); ++r)
        v[e.pivots[r]] = -e.reduced(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::optional<QVector> solve(const QMatrix &m, const QVector &b)
  {
    if (b.size() != m.rows())
      throw std::invalid_argument("solve: rhs length mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
    {
      for (std::size_t j = 0; j < m.cols(); ++j)
        aug(i, j) = m(i, j);
      aug(i, m.cols()) = b[i];
    }
    const RowEchelon e = rref(std::move(aug));
    QVector x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
    {
      if (e.pivots[r] == m.cols())
        return std::nullopt;
      x[e.pivots[r]] = e.reduced(r, m.cols());
    }
    return x;
  }

  std::optional<QMatrix> solve_left(const QMatrix &a, const QMatrix &b)
  {
    if (a.rows() != b.rows())
      throw std::invalid_argument("solve_left: row mismatch");
    QMatrix aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
    {
      for (std::size_t j = 0; j < a.cols(); ++j)
        aug(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols(); ++j)
        aug(i, a.cols() + j) = b(i, j);
    }
    const RowEchelon e = rref(std::move(aug));
    if (e.pivots.size() != a.cols())
      return std::nullopt;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (e.pivots[r] != r)
        return std::nullopt;
    QMatrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < a.cols(); ++r)
      for (std::size_t j = 0; j < b.cols(); ++j)
        x(r, j) = e.reduced(r, a.cols() + j);
    return x;
  }

  std::optional<QMatrix> inverse(const QMatrix &m)
  {
    if (!m.is_square())
      throw std::invalid_argument("inverse: non-square matrix");
    return solve_left(m, QMatrix::identity(m.rows()));
  }

  std::vector<QVector> canonical_span(const std::vector<QVector> &vectors, std::size_t dim)
  {
    if (vectors.empty())
      return {};
    const RowEchelon e = rref(QMatrix::from_rows(vectors, dim));
    std::vector<QVector> basis;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis.push_back(e.reduced.row(r));
    return basis;
  }

  std::size_t span_rank(const std::vector<QVector> &vectors, std::size_t dim)
  {
    if (vectors.empty())
      return 0;
    return rank(QMatrix::from_rows(vectors, dim));
  }

  bool in_span(const std::vector<QVector> &basis, const QVector &v)
  {
    if (is_zero(v))
      return true;
    if (basis.empty())
      return false;
    auto with = basis;
    with.push_back(v);
    return span_rank(with, v.size()) == span_rank(basis, v.size());
  }

  bool same_span(const std::vector<QVector> &a, const std::vector<QVector> &b, std::size_t dim)
  {
    return canonical_span(a, dim) == canonical_span(b, dim);
  }

  std::vector<QVector> intersect_spans(const std::vector<QVector> &a, const std::vector<QVector> &b,
                                       std::size_t dim)
  {
    if (a.empty() || b.empty())
      return {};
    // Solve sum x_i a_i = sum y_j b_j.
    QMatrix m(dim, a.size() + b.size());
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i)
        m(i, j) = a[j][i];
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i)
        m(i, a.size() + j) = -b[j][i];
    std::vector<QVector> out;
    for (const auto &k : kernel_basis(m))
    {
      QVector v = zero_vector(dim);
      for (std::size_t j = 0; j < a.size(); ++j)
        if (sgn(k[j]) != 0)
          v = v + k[j] * a[j];
      out.push_back(std::move(v));
    }
    return canonical_span(out, dim);
  }

  //------------------------------------------------------------------------------
  // QPoly
  //------------------------------------------------------------------------------

  QPoly::QPoly(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs))
  {
    trim();
  }

  void QPoly::trim()
  {
    while (!m_coeffs.empty() && sgn(m_coeffs.back()) == 0)
      m_coeffs.pop_back();
  }

  QPoly QPoly::monomial(std::size_t degree, const Rational &c)
  {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return QPoly(std::move(v));
  }

  QPoly QPoly::constant(const Rational &c)
  {
    return QPoly(std::vector<Rational>{c});
  }

  QPoly QPoly::from_roots(const std::vector<Rational> &roots)
  {
    QPoly p = constant(1);
    for (const auto &r : roots)
      p = p * QPoly({-r, Rational(1)});
    return p;
  }

  Rational QPoly::coeff(std::size_t k) const
  {
    return k < m_coeffs.size() ? m_coeffs[k] : Rational(0);
  }

  Rational QPoly::leading() const
  {
    return m_coeffs.empty() ? Rational(0) : m_coeffs.back();
  }

  QPoly QPoly::monic() const
  {
    if (is_zero())
      return *this;
    return (1 / leading()) * *this;
  }

  QPoly QPoly::derivative() const
  {
    if (m_coeffs.size() <= 1)
      return QPoly();
    std::vector<Rational> d(m_coeffs.size() - 1);
    for (std::size_t k = 1; k < m_coeffs.size(); ++k)
      d[k - 1] = Rational(static_cast<long>(k)) * m_coeffs[k];
    return QPoly(std::move(d));
  }

  Rational QPoly::operator()(const Rational &t) const
  {
    Rational acc = 0;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it)
      acc = acc * t + *it;
    return acc;
  }

  QMatrix QPoly::operator()(const QMatrix &m) const
  {
    if (!m.is_square())
      throw std::invalid_argument("polynomial evaluation at non-square matrix");
    QMatrix acc(m.rows(), m.cols());
    const QMatrix id = QMatrix::identity(m.rows());
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it)
      acc = acc * m + *it * id;
    return acc;
  }

  std::string QPoly::to_string(const std::string &var) const
  {
    if (is_zero())
      return "0";
    std::string s;
    for (std::size_t k = m_coeffs.size(); k-- > 0;)
    {
      const Rational &c = m_coeffs[k];
      if (sgn(c) == 0)
        continue;
      if (!s.empty())
        s += sgn(c) > 0 ? " + " : " - ";
      else if (sgn(c) < 0)
        s += "-";
      const Rational a = abs(c);
      if (k == 0 || a != 1)
        s += tforge::to_string(a);
      if (k >= 1)
        s += var;
      if (k >= 2)
        s += "^" + std::to_string(k);
    }
    return s;
  }

  QPoly operator+(const QPoly &a, const QPoly &b)
  {
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] = a.coeff(k) + b.coeff(k);
    return QPoly(std::move(c));
  }

  QPoly operator-(const QPoly &a, const QPoly &b)
  {
    return a + Rational(-1) * b;
  }

  QPoly operator*(const QPoly &a, const QPoly &b)
  {
    if (a.is_zero() || b.is_zero())
      return QPoly();
    std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
      for (std::size_t j = 0; j < b.coeffs().size(); ++j)
        c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return QPoly(std::move(c));
  }

  QPoly operator*(const Rational &s, const QPoly &p)
  {
    std::vector<Rational> c = p.coeffs();
    for (auto &x : c)
      x *= s;
    return QPoly(std::move(c));
  }

  PolyDivision divmod(const QPoly &a, const QPoly &b)
  {
    if (b.is_zero())
      throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    if (r.size() <= db)
      return {QPoly(), a};
    std::vector<Rational> q(r.size() - db, Rational(0));
    const Rational lead_inv = 1 / b.leading();
    for (std::size_t k = r.size(); k-- > db;)
    {
      const Rational f = r[k] * lead_inv;
      q[k - db] = f;
      if (sgn(f) == 0)
        continue;
      for (std::size_t j = 0; j <= db; ++j)
        r[k - db + j] -= f * b.coeffs()[j];
    }
    r.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
  }

  QPoly operator%(const QPoly &a, const QPoly &b)
  {
    return divmod(a, b).remainder;
  }

  QPoly gcd(const QPoly &a, const QPoly &b)
  {
    QPoly x = a, y = b;
    while (!y.is_zero())
    {
      QPoly r = x % y;
      x = std::move(y);
      y = std::move(r);
    }
    return x.monic();
  }

  ExtendedGcd extended_gcd(const QPoly &a, const QPoly &b)
  {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(1), s1;
    QPoly t0, t1 = QPoly::constant(1);
    while (!r1.is_zero())
    {
      const PolyDivision d = divmod(r0, r1);
      QPoly r2 = d.remainder;
      QPoly s2 = s0 - d.quotient * s1;
      QPoly t2 = t0 - d.quotient * t1;
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero())
      return {QPoly(), QPoly(), QPoly()};
    const Rational inv = 1 / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
  }

  std::optional<QPoly> inverse_mod(const QPoly &a, const QPoly &m)
  {
    const ExtendedGcd e = extended_gcd(a % m, m);
    if (e.g.degree() != 0)
      return std::nullopt;
    return e.u % m;
  }

  QPoly compose_mod(const QPoly &p, const QPoly &q, const QPoly &m)
  {
    QPoly acc;
    const QPoly qm = q % m;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
      acc = (acc * qm + QPoly::constant(*it)) % m;
    return acc;
  }

  QPoly minimal_polynomial(const QMatrix &m)
  {
    if (!m.is_square())
      throw std::invalid_argument("minimal_polynomial: non-square matrix");
    const std::size_t n = m.rows();
    std::vector<QVector> powers{QMatrix::identity(n).flatten()};
    QMatrix current = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k)
    {
      current = current * m;
      const QVector target = current.flatten();
      if (auto c = solve(QMatrix::from_columns(powers, n * n), target))
      {
        std::vector<Rational> coeffs(k + 1);
        for (std::size_t i = 0; i < k; ++i)
          coeffs[i] = -(*c)[i];
        coeffs[k] = 1;
        return QPoly(std::move(coeffs));
      }
      powers.push_back(target);
    }
    throw std::logic_error("minimal_polynomial: no dependence found (Cayley-Hamilton violated)");
  }

  QPoly squarefree_part(const QPoly &p)
  {
    if (p.is_zero())
      throw std::invalid_argument("squarefree_part: zero polynomial");
    return divmod(p, gcd(p, p.derivative())).quotient.monic();
  }

  namespace
  {
    std::vector<mpz_class> positive_divisors(mpz_class n)
    {
      n = abs(n);
      std::vector<mpz_class> small, large;
      for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0)
        {
          small.push_back(d);
          if (d * d != n)
            large.push_back(n / d);
        }
      small.insert(small.end(), large.rbegin(), large.rend());
      return small;
    }
  } // namespace

  std::vector<Rational> rational_roots(const QPoly &p)
  {
    if (p.is_zero())
      throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    std::vector<Rational> c = p.coeffs();
    std::size_t shift = 0;
    while (shift < c.size() && sgn(c[shift]) == 0)
      ++shift;
    if (shift > 0)
      roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + static_cast<long>(shift));
    if (c.size() > 1)
    {
      mpz_class l = 1;
      for (const auto &x : c)
        l = lcm(l, x.get_den());
      std::vector<mpz_class> ints;
      for (const auto &x : c)
        ints.push_back(mpz_class(x * l));
      const QPoly reduced(std::move(c));
      for (const auto &num : positive_divisors(ints.front()))
        for (const auto &den : positive_divisors(ints.back()))
          for (int sign : {1, -1})
          {
            Rational cand(sign * num, den);
            cand.canonicalize();
            if (sgn(reduced(cand)) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
              roots.push_back(cand);
          }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }

} // namespace tforge
