#ifndef TFORGE_UEA_HPP
#define TFORGE_UEA_HPP

#include "tforge/exactlin.hpp"
#include "tforge/repn.hpp"

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tforge
{

  /// Exponent vector e: basis index -> multiplicity, dense over the Lie basis.
  class MultiIndex
  {
  public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> exponents) : m_exp(std::move(exponents)) {}
    static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0)); }
    static MultiIndex unit(std::size_t n, std::size_t i, unsigned k = 1);

    std::size_t size() const { return m_exp.size(); }
    unsigned operator[](std::size_t i) const { return m_exp[i]; }
    const std::vector<unsigned> &exponents() const { return m_exp; }
    unsigned degree() const;
    std::vector<std::size_t> support() const;

    MultiIndex operator+(const MultiIndex &o) const;

    /// Canonical order: by degree, then lexicographically on the exponent vector.
    friend std::strong_ordering operator<=>(const MultiIndex &a, const MultiIndex &b);
    friend bool operator==(const MultiIndex &a, const MultiIndex &b) = default;

  private:
    std::vector<unsigned> m_exp;
  };

  /// All exponent vectors over `n` basis elements of degree <= max_degree, in canonical order.
  std::vector<MultiIndex> multi_indices_up_to(std::size_t n, unsigned max_degree);

  /// rho(b_e) with b_e = prod_i a_i^{e_i} / e_i! in basis order.
  QMatrix pbw_matrix(const Module &v, const MultiIndex &e);
  /// b_e . v; the last basis factor acts first.
  QVector apply_pbw(const Module &v, const MultiIndex &e, const QVector &x);
  /// Word action a_{w_0} a_{w_1} ... a_{w_k} v (rightmost letter first), no divided powers.
  QVector apply_word(const Module &v, const std::vector<std::size_t> &word, const QVector &x);

  /// Delta(b_f) = sum over e + e' = f of b_e (x) b_{e'}, every coefficient 1.
  std::vector<std::pair<MultiIndex, MultiIndex>> coproduct_pbw(const MultiIndex &f);

  /// Antipode on generators: S(x) = -x. S is not implemented on higher PBW monomials.
  QVector antipode_generator(const QVector &x);

  /// Element of U(g)* known up to PBW degree `bound`: sum of c_e h_e with h_e(b_e') = delta.
  class TruncatedDual
  {
  public:
    TruncatedDual(std::size_t n, unsigned bound) : m_n(n), m_bound(bound) {}
    /// The unit epsilon = h_0.
    static TruncatedDual counit(std::size_t n, unsigned bound);
    static TruncatedDual basis_element(const MultiIndex &e, unsigned bound);

    std::size_t basis_size() const { return m_n; }
    unsigned bound() const { return m_bound; }
    const std::map<MultiIndex, Rational> &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    Rational coeff(const MultiIndex &e) const;
    /// Sets the coefficient; zero removes the term. Degrees above the bound are rejected.
    void set(const MultiIndex &e, const Rational &c);
    void add(const MultiIndex &e, const Rational &c);

    TruncatedDual operator+(const TruncatedDual &o) const;
    TruncatedDual scaled(const Rational &s) const;
    /// Same element known to a smaller bound.
    TruncatedDual truncated(unsigned bound) const;

    friend bool operator==(const TruncatedDual &a, const TruncatedDual &b) = default;

  private:
    std::size_t m_n = 0;
    unsigned m_bound = 0;
    std::map<MultiIndex, Rational> m_terms;
  };

  /// Convolution product: coefficient of h_f is sum_{e + e' = f} c_e c'_{e'}.
  TruncatedDual dual_multiply(const TruncatedDual &a, const TruncatedDual &b);

  /// Least degree in the support; nullopt stands for +infinity (zero element).
  std::optional<unsigned> valuation(const TruncatedDual &h);

  /// g_{phi v}(b_e) = phi(b_e v) for all deg(e) <= bound.
  TruncatedDual matrix_coefficient(const Module &v, const QVector &phi, const QVector &x, unsigned bound);

} // namespace tforge

#endif
