#ifndef TFORGE_LIEALG_HPP
#define TFORGE_LIEALG_HPP

#include "tforge/exactlin.hpp"

#include <array>
#include <string>
#include <vector>

namespace tforge
{

  /// Lie algebra over Q given by structure constants in an ordered basis.
  ///
  /// The basis order given at construction is the global total order used by
  /// every PBW computation downstream.
  class LieAlgebra
  {
  public:
    LieAlgebra() = default;
    /// `structure[i][j]` holds [a_i, a_j] in basis coordinates. No validation is
    /// performed here; call validate().
    LieAlgebra(std::vector<std::string> basis_names, std::vector<std::vector<QVector>> structure);

    /// Zero table of the given dimension; fill with set_bracket().
    static LieAlgebra with_basis(std::vector<std::string> basis_names);
    /// Ingest a matrix Lie algebra: brackets of the supplied matrices are
    /// expanded in the span of the matrices themselves. Throws if the span is
    /// not closed or the matrices are linearly dependent.
    static LieAlgebra from_matrices(std::vector<std::string> basis_names, const std::vector<QMatrix> &matrices);

    /// Sets [a_i, a_j] = value and [a_j, a_i] = -value.
    void set_bracket(std::size_t i, std::size_t j, const QVector &value);

    std::size_t dim() const { return m_names.size(); }
    const std::vector<std::string> &basis_names() const { return m_names; }
    std::size_t index_of(const std::string &name) const;
    const QVector &structure(std::size_t i, std::size_t j) const { return m_table[i][j]; }

    QVector bracket(const QVector &x, const QVector &y) const;
    QVector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

    friend bool operator==(const LieAlgebra &a, const LieAlgebra &b)
    {
      return a.m_names == b.m_names && a.m_table == b.m_table;
    }

  private:
    std::vector<std::string> m_names;
    std::vector<std::vector<QVector>> m_table;
  };

  struct AxiomViolations
  {
    /// (i, j) with c[i][j] != -c[j][i]
    std::vector<std::array<std::size_t, 2>> antisymmetry;
    /// (i, j, k) whose Jacobi sum is nonzero
    std::vector<std::array<std::size_t, 3>> jacobi;

    bool ok() const { return antisymmetry.empty() && jacobi.empty(); }
  };

  /// Exact check of antisymmetry on all pairs and of Jacobi on all ordered triples.
  AxiomViolations validate(const LieAlgebra &g);

  /// Subspace of a Lie algebra, spanned by coordinate vectors in the parent basis.
  struct Subalgebra
  {
    const LieAlgebra *parent = nullptr;
    std::vector<QVector> span;

    static Subalgebra whole(const LieAlgebra &g);
    std::size_t dim() const { return span.size(); }
  };

  /// Builds a subalgebra from spanning vectors; throws if the span is not bracket-closed.
  Subalgebra make_subalgebra(const LieAlgebra &g, const std::vector<QVector> &spanning);
  bool is_bracket_closed(const LieAlgebra &g, const std::vector<QVector> &span);

  /// [A, B] as a canonical basis of span{[a, b]}.
  std::vector<QVector> bracket_span(const LieAlgebra &g, const std::vector<QVector> &a, const std::vector<QVector> &b);

  struct CentralSeries
  {
    /// l^0 = s, l^{k+1} = [s, l^k]; stops once two consecutive terms span the same space.
    std::vector<std::vector<QVector>> terms;
    bool nilpotent = false;
    /// Least c with l^c = 0 when nilpotent: brackets of c+1 elements vanish.
    std::size_t nilpotency_class = 0;
  };

  CentralSeries lower_central_series(const Subalgebra &s);
  CentralSeries lower_central_series(const LieAlgebra &g);

  /// Standard examples used across the test suites and bundled with the CLI.
  namespace examples
  {
    LieAlgebra sl2();
    LieAlgebra heisenberg();
    /// Strictly upper triangular 4x4 matrices (class 3).
    LieAlgebra unitriangular4();
    LieAlgebra abelian(std::size_t n);
    /// sl2 in its defining 2x2 matrices, ordered like the basis of sl2() (h, e, f).
    std::vector<QMatrix> sl2_defining_matrices();
    std::vector<QMatrix> heisenberg_matrices();
    std::vector<QMatrix> unitriangular4_matrices();
  } // namespace examples

} // namespace tforge

#endif
