#ifndef TFORGE_NILGRP_HPP
#define TFORGE_NILGRP_HPP

#include "tforge/liealg.hpp"
#include "tforge/repn.hpp"
#include "tforge/tannaka.hpp"

#include <string>
#include <vector>

namespace tforge
{

  /// One term c [w_0, [w_1, [..., w_{k-1}]]] of the Dynkin series, letters 'x' or 'y'.
  struct DynkinTerm
  {
    Rational coefficient;
    std::string word;
  };

  /// Dynkin coefficients through bracket degree 4.
  const std::vector<DynkinTerm> &dynkin_table();
  constexpr std::size_t kDynkinTableDepth = 4;

  /// Unipotent group on a nilpotent subalgebra n, with group law given by the
  /// Baker-Campbell-Hausdorff series truncated at the nilpotency class.
  class BCHGroup
  {
  public:
    /// Throws Rejection if n is not nilpotent or its class exceeds the table depth.
    explicit BCHGroup(Subalgebra n);

    const Subalgebra &algebra() const { return m_n; }
    const LieAlgebra &parent() const { return *m_n.parent; }
    std::size_t nilpotency_class() const { return m_class; }

    /// x * y = log(exp(x) exp(y)); inputs and result in parent coordinates.
    QVector bch(const QVector &x, const QVector &y) const;
    QVector inverse(const QVector &x) const { return Rational(-1) * x; }
    bool contains(const QVector &x) const { return in_span(m_n.span, x); }

  private:
    Subalgebra m_n;
    std::size_t m_class = 0;
  };

  /// V_{-1} = 0 subset V_0 subset ... subset V_k = V with V_j = { v : n v in V_{j-1} }.
  struct ModuleFiltration
  {
    std::string module;
    /// levels[j] is a basis of V_j.
    std::vector<std::vector<QVector>> levels;
  };

  /// Throws Rejection if n does not act nilpotently on V.
  ModuleFiltration filtration(const Module &v, const Subalgebra &n);

  /// I_k = { x in n : x V_k = 0 for every closure object }, in parent coordinates.
  std::vector<QVector> annihilator_ideal(const CategoryClosure &c, const Subalgebra &n, std::size_t k);

  /// exp(rho_V(bch(x, y))) == exp(rho_V(x)) exp(rho_V(y)) on every closure object.
  bool exp_compat_check(const BCHGroup &g, const CategoryClosure &c, const QVector &x, const QVector &y);

} // namespace tforge

#endif
