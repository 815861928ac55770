#ifndef TFORGE_JORDAN_HPP
#define TFORGE_JORDAN_HPP

#include "tforge/exactlin.hpp"
#include "tforge/tannaka.hpp"

namespace tforge
{

  /// x = s + n, s semisimple, n nilpotent, [s, n] = 0.
  struct AdditiveJC
  {
    QMatrix s;
    QMatrix n;
    /// s = s_poly(x); certifies that s (and n) are polynomials in x.
    QPoly s_poly;
  };

  /// x = s u = u s inside the corner monoid e End e, with e idempotent.
  struct MultiplicativeJC
  {
    QMatrix e;
    QMatrix s;
    QMatrix u;
  };

  /// Newton lift over Q: with p the squarefree part of the minimal polynomial m of x,
  /// S <- S - p(S) / p'(S) computed in Q[t]/(m) starting from S = t, until p(S) = 0.
  AdditiveJC additive_jc(const QMatrix &x);

  /// Throws Rejection (with a kernel vector as witness) when x is not invertible on image(e),
  /// InputError when e is not idempotent or x is not inside e End e.
  MultiplicativeJC multiplicative_jc(const QMatrix &x, const QMatrix &e);

  struct Classification
  {
    bool semisimple = false;
    bool nilpotent = false;
    bool unipotent = false;
    /// kernel(x) (+) image(x) = V and x restricted to image(x) is unipotent.
    bool weak_locally_unipotent = false;
  };

  Classification classify(const QMatrix &x);

  struct TensorJCReport
  {
    bool additive = false;
    /// Only meaningful when both inputs are invertible.
    bool multiplicative_applicable = false;
    bool multiplicative = false;

    bool ok() const { return additive && (!multiplicative_applicable || multiplicative); }
  };

  /// additive_jc(x (x) I + I (x) y) against the tensor of the parts and, for
  /// invertible inputs, multiplicative_jc(x (x) y, I) against (s_x (x) s_y, u_x (x) u_y).
  TensorJCReport tensor_jc_check(const QMatrix &x, const QMatrix &y);

  /// Object-wise additive decomposition of a family.
  std::pair<NatFamily, NatFamily> family_additive_jc(const NatFamily &x);
  /// Object-wise multiplicative decomposition relative to an idempotent family.
  std::pair<NatFamily, NatFamily> family_multiplicative_jc(const NatFamily &m, const NatFamily &e);

} // namespace tforge

#endif
