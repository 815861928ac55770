#ifndef TFORGE_EXACTLIN_HPP
#define TFORGE_EXACTLIN_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace tforge
{

  /// Exact rational number. GMP keeps numerator/denominator coprime with a positive denominator.
  using Rational = mpq_class;
  using QVector = std::vector<Rational>;

  Rational make_rational(long num, long den = 1);
  /// "p/q", or "p" when q = 1.
  std::string to_string(const Rational &q);
  /// Accepts "p", "p/q" and "-p/q"; throws std::invalid_argument otherwise.
  Rational parse_rational(const std::string &text);

  QVector zero_vector(std::size_t n);
  QVector unit_vector(std::size_t n, std::size_t i);
  bool is_zero(const QVector &v);
  QVector operator+(const QVector &a, const QVector &b);
  QVector operator-(const QVector &a, const QVector &b);
  QVector operator*(const Rational &s, const QVector &v);
  Rational dot(const QVector &a, const QVector &b);

  /// Dense row-major rational matrix.
  class QMatrix
  {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
    static QMatrix diagonal(const QVector &d);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static QMatrix from_columns(const std::vector<QVector> &cols, std::size_t rows);
    static QMatrix from_rows(const std::vector<QVector> &rows, std::size_t cols);

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }
    bool is_square() const { return m_rows == m_cols; }
    bool is_zero() const;

    Rational &operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const Rational &operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }
    const std::vector<Rational> &data() const { return m_data; }

    QVector row(std::size_t i) const;
    QVector column(std::size_t j) const;
    std::vector<QVector> columns() const;
    void set_column(std::size_t j, const QVector &v);

    QMatrix transpose() const;
    Rational trace() const;
    /// Row-major flattening, used when matrices are treated as vectors.
    QVector flatten() const { return m_data; }
    static QMatrix unflatten(const QVector &v, std::size_t rows, std::size_t cols);

    QMatrix &operator+=(const QMatrix &o);
    QMatrix &operator-=(const QMatrix &o);
    QMatrix &operator*=(const Rational &s);

    friend bool operator==(const QMatrix &a, const QMatrix &b);

  private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Rational> m_data;
  };

  QMatrix operator+(QMatrix a, const QMatrix &b);
  QMatrix operator-(QMatrix a, const QMatrix &b);
  QMatrix operator-(const QMatrix &a);
  QMatrix operator*(const QMatrix &a, const QMatrix &b);
  QMatrix operator*(const Rational &s, QMatrix a);
  QVector operator*(const QMatrix &a, const QVector &v);

  /// a*b - b*a
  QMatrix commutator(const QMatrix &a, const QMatrix &b);
  /// Kronecker product; the row/column index of `a` is the major index.
  QMatrix kron(const QMatrix &a, const QMatrix &b);
  QMatrix block_diag(const QMatrix &a, const QMatrix &b);
  QMatrix power(const QMatrix &m, unsigned k);

  /// Reduced row echelon form together with the pivot column of each nonzero row.
  struct RowEchelon
  {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
  };
  RowEchelon rref(QMatrix m);

  std::size_t rank(const QMatrix &m);
  /// Basis of the right null space; one vector per free column, in column order.
  std::vector<QVector> kernel_basis(const QMatrix &m);
  /// Some solution of m x = b, or nullopt.
  std::optional<QVector> solve(const QMatrix &m, const QVector &b);
  /// Unique X with a X = b when a has full column rank and a solution exists.
  std::optional<QMatrix> solve_left(const QMatrix &a, const QMatrix &b);
  std::optional<QMatrix> inverse(const QMatrix &m);

  /// Canonical basis of span(vectors): the nonzero rows of the RREF. Equal spans give identical output.
  std::vector<QVector> canonical_span(const std::vector<QVector> &vectors, std::size_t dim);
  std::size_t span_rank(const std::vector<QVector> &vectors, std::size_t dim);
  bool in_span(const std::vector<QVector> &basis, const QVector &v);
  bool same_span(const std::vector<QVector> &a, const std::vector<QVector> &b, std::size_t dim);
  /// Subspace intersection, returned as a canonical basis.
  std::vector<QVector> intersect_spans(const std::vector<QVector> &a, const std::vector<QVector> &b,
                                       std::size_t dim);

  /// Polynomial with rational coefficients, ascending degree, no trailing zeros.
  class QPoly
  {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    static QPoly monomial(std::size_t degree, const Rational &c = 1);
    static QPoly constant(const Rational &c);
    /// Monic polynomial with the given roots, each taken once.
    static QPoly from_roots(const std::vector<Rational> &roots);

    bool is_zero() const { return m_coeffs.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(m_coeffs.size()) - 1; }
    const std::vector<Rational> &coeffs() const { return m_coeffs; }
    Rational coeff(std::size_t k) const;
    Rational leading() const;

    QPoly monic() const;
    QPoly derivative() const;
    Rational operator()(const Rational &t) const;
    QMatrix operator()(const QMatrix &m) const;

    friend bool operator==(const QPoly &a, const QPoly &b) { return a.m_coeffs == b.m_coeffs; }
    std::string to_string(const std::string &var = "t") const;

  private:
    void trim();
    std::vector<Rational> m_coeffs;
  };

  QPoly operator+(const QPoly &a, const QPoly &b);
  QPoly operator-(const QPoly &a, const QPoly &b);
  QPoly operator*(const QPoly &a, const QPoly &b);
  QPoly operator*(const Rational &s, const QPoly &p);

  struct PolyDivision
  {
    QPoly quotient;
    QPoly remainder;
  };
  PolyDivision divmod(const QPoly &a, const QPoly &b);
  QPoly operator%(const QPoly &a, const QPoly &b);
  /// Monic gcd; gcd(0, 0) = 0.
  QPoly gcd(const QPoly &a, const QPoly &b);

  /// g = u*a + v*b with g the monic gcd.
  struct ExtendedGcd
  {
    QPoly g;
    QPoly u;
    QPoly v;
  };
  ExtendedGcd extended_gcd(const QPoly &a, const QPoly &b);
  /// Inverse of a modulo m; nullopt when gcd(a, m) != 1.
  std::optional<QPoly> inverse_mod(const QPoly &a, const QPoly &m);
  /// p(q(t)) mod m
  QPoly compose_mod(const QPoly &p, const QPoly &q, const QPoly &m);

  /// Monic polynomial of least degree annihilating m (first dependence among I, m, m^2, ...).
  QPoly minimal_polynomial(const QMatrix &m);
  /// p / gcd(p, p'), monic.
  QPoly squarefree_part(const QPoly &p);
  /// Distinct rational roots in ascending order.
  std::vector<Rational> rational_roots(const QPoly &p);

} // namespace tforge

#endif
