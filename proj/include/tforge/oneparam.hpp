#ifndef TFORGE_ONEPARAM_HPP
#define TFORGE_ONEPARAM_HPP

#include "tforge/exactlin.hpp"
#include "tforge/tannaka.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace tforge
{

  /// exp of a nilpotent matrix as the finite sum; throws Rejection if x is not nilpotent.
  QMatrix exp_nilpotent(const QMatrix &x);
  /// Matrix logarithm of a unipotent matrix as the finite series; throws Rejection otherwise.
  QMatrix log_unipotent(const QMatrix &u);
  /// s^k for nonzero s and any integer k.
  Rational rational_pow(const Rational &s, long k);

  /// Lie element acting nilpotently on every object of a closure.
  struct UnipotentParam
  {
    QVector generator;
  };

  /// Rational eigenbasis of rho_V(h) with integer eigenvalues.
  struct Eigendata
  {
    /// Columns are eigenvectors.
    QMatrix basis;
    QMatrix basis_inverse;
    std::vector<long> eigenvalues;
  };

  /// Submonoid of Z generated by finitely many integers.
  class IntMonoid
  {
  public:
    IntMonoid() = default;
    explicit IntMonoid(std::vector<long> generators);
    const std::vector<long> &generators() const { return m_gens; }
    bool contains(long b) const;
    /// True when the monoid is a subgroup of Z (generators of both signs, or none).
    bool is_group() const;

  private:
    std::vector<long> m_gens;
  };

  /// Lie element acting diagonalizably over Q with integer eigenvalues on every object.
  struct TorusParam
  {
    QVector generator;
    /// Aligned with the closure objects.
    std::vector<Eigendata> eigendata;
    /// Monoid generated by every eigenvalue occurring in the closure.
    IntMonoid eigenvalue_monoid;
  };

  /// Throws Rejection naming the first object where rho_V(x) is not nilpotent.
  UnipotentParam certify_unipotent(const CategoryClosure &c, const QVector &x);
  /// Throws Rejection naming the first object where rho_V(h) is not rationally
  /// diagonalizable with integer eigenvalues.
  TorusParam certify_torus(const CategoryClosure &c, const QVector &h);

  /// exp(t rho_V(x)) on every object.
  NatFamily exp_family(const CategoryClosure &c, const UnipotentParam &x, const Rational &t);
  /// Object-wise exp of a nilpotent family.
  NatFamily exp_family(const NatFamily &x);
  /// s^lambda on each lambda-eigenspace. s must be nonzero.
  NatFamily torus_family(const CategoryClosure &c, const TorusParam &h, const Rational &s);

  /// sum_k phi(rho(x)^k v / k!) tau^k, the restriction of g_{phi v} to the line through x.
  QPoly mc_restrict_unipotent(const Module &v, const QVector &phi, const QVector &x, const QVector &lie_element);

  /// Exponent -> coefficient of s |-> phi((s^h)_V v), a Laurent polynomial in s.
  std::map<long, Rational> torus_coefficient(const TorusParam &h, std::size_t object, const QVector &phi,
                                             const QVector &v);

  /// m exp(x) m^-1 == exp(m x m^-1) on every object. m must be invertible object-wise.
  bool conjugation_check(const NatFamily &m, const NatFamily &x);

  using OneParam = std::variant<UnipotentParam, TorusParam>;

  struct Letter
  {
    std::size_t param = 0;
    Rational value;
  };
  using Word = std::vector<Letter>;

  NatFamily instantiate(const CategoryClosure &c, const OneParam &p, const Rational &value);
  /// Every word of length <= max_length over (param, sample value) letters, shortest first.
  std::vector<Word> all_words(const std::vector<std::vector<Rational>> &samples, std::size_t max_length);
  /// Products of the instantiated letters, left factor first; the empty word is the identity.
  /// With `certify`, each product is checked by m_membership (Rejection on failure).
  std::vector<NatFamily> generate_ME(const CategoryClosure &c, const std::vector<OneParam> &params,
                                     const std::vector<Word> &words, bool certify = true);

} // namespace tforge

#endif
