#ifndef TFORGE_TORIC_HPP
#define TFORGE_TORIC_HPP

#include "tforge/exactlin.hpp"
#include "tforge/repn.hpp"
#include "tforge/tannaka.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tforge
{

  using IntVector = std::vector<long>;

  //------------------------------------------------------------------------------
  // Weight spaces
  //------------------------------------------------------------------------------

  /// Simultaneous eigenspaces of rho_V(h_1), ..., rho_V(h_r), keyed by the eigenvalue tuple.
  struct WeightDecomposition
  {
    std::string module;
    std::map<QVector, std::vector<QVector>> spaces;
  };

  /// Throws InputError if h is not abelian, Rejection if the actions are not
  /// simultaneously diagonalizable over Q.
  WeightDecomposition weight_decomposition(const Module &v, const std::vector<QVector> &h);

  /// Decomposition of every closure object, aligned with the objects.
  std::vector<WeightDecomposition> closure_weights(const CategoryClosure &c, const std::vector<QVector> &h);

  //------------------------------------------------------------------------------
  // Weight monoids and faces
  //------------------------------------------------------------------------------

  /// Submonoid of Z^r generated by finitely many nonzero vectors.
  struct WeightMonoid
  {
    std::size_t rank = 0;
    std::vector<IntVector> generators;
    /// Lattice basis of { c in Z^m : sum c_i g_i = 0 }.
    std::vector<IntVector> relations;
    /// Rational weights are `denominator` times smaller than the integer ones.
    long denominator = 1;
  };

  /// Sorts and deduplicates the generators, drops zero, and computes the relation lattice.
  WeightMonoid make_weight_monoid(std::size_t rank, std::vector<IntVector> generators, long denominator = 1);

  /// Generators are the weights of the generator and dual objects, scaled to integers
  /// by a common denominator. Throws Rejection if a tensor object violates
  /// P(V (x) W) = P(V) + P(W).
  WeightMonoid weight_monoid(const CategoryClosure &c, const std::vector<QVector> &h);

  /// Integer basis of the kernel lattice of the integer matrix with the given columns.
  std::vector<IntVector> integer_kernel(const std::vector<IntVector> &columns, std::size_t rows);
  /// Membership of b in the Z-span of the given vectors.
  bool in_lattice(const std::vector<IntVector> &vectors, const IntVector &b);
  /// Membership of b in the rational cone spanned by the generators.
  bool in_cone(const WeightMonoid &a, const IntVector &b);
  /// Nonnegative integer coefficients with sum c_i g_i = b and sum c_i <= max_total.
  std::optional<IntVector> representation(const WeightMonoid &a, const IntVector &b, unsigned max_total = 16);

  /// A feasible point of { t : a_k . t >= c_k }, or nullopt. Exact Fourier-Motzkin.
  struct Inequality
  {
    QVector a;
    Rational c;
  };
  std::optional<QVector> feasible_point(const std::vector<Inequality> &system, std::size_t vars);

  struct Face
  {
    /// Indices into WeightMonoid::generators, increasing.
    std::vector<std::size_t> members;
    /// Functional vanishing on the members and positive on the other generators.
    QVector witness;
  };

  struct FaceLattice
  {
    std::vector<Face> faces;
    bool pointed = false;

    std::optional<std::size_t> find(const std::vector<std::size_t> &members) const;
    bool contains(std::size_t outer, std::size_t inner) const;
    /// Face spanned by the common generators; throws if it is not in the lattice.
    std::size_t meet(std::size_t f, std::size_t g) const;
  };

  struct FaceOptions
  {
    std::size_t max_generators = 12;
    std::size_t max_rank = 4;
  };

  /// Faces ordered by size, then lexicographically. Throws InputError above the caps.
  FaceLattice faces(const WeightMonoid &a, const FaceOptions &options = {});

  //------------------------------------------------------------------------------
  // Points of Hom(A, (Q, *))
  //------------------------------------------------------------------------------

  /// One value per generator.
  struct AtildePoint
  {
    QVector values;
    friend bool operator==(const AtildePoint &, const AtildePoint &) = default;
  };

  /// The support is a face and the relations hold on it.
  bool is_valid_point(const WeightMonoid &a, const FaceLattice &l, const AtildePoint &p);
  AtildePoint multiply(const AtildePoint &p, const AtildePoint &q);
  /// prod values^c for nonnegative c.
  Rational evaluate(const AtildePoint &p, const IntVector &coefficients);
  /// Value at a weight; throws Rejection if the weight is not representable.
  Rational evaluate_weight(const WeightMonoid &a, const AtildePoint &p, const IntVector &weight);

  AtildePoint idempotent_of_face(const WeightMonoid &a, const FaceLattice &l, std::size_t face);
  /// lambda |-> prod s_k^{lambda_k} on members of the face, 0 elsewhere.
  AtildePoint torus_point(const WeightMonoid &a, const FaceLattice &l, std::size_t face, const QVector &s);
  /// Index of the face the point is supported on; nullopt if the support is not a face.
  std::optional<std::size_t> support_face(const FaceLattice &l, const AtildePoint &p);

  struct Factorization
  {
    AtildePoint unit;
    std::size_t face = 0;
  };
  /// p = unit * e(face) with unit in T(A); nullopt if no such unit was found.
  std::optional<Factorization> factor_point(const WeightMonoid &a, const FaceLattice &l, const AtildePoint &p);

  struct ToricReport
  {
    std::size_t face_count = 0;
    std::size_t idempotent_count = 0;
    bool pointed = false;
    bool idempotents_ok = false;
    bool meet_ok = false;
    bool factorization_ok = false;
    bool unit_group_ok = false;
    bool d_lambda_ok = false;
    bool saturated = false;
    std::size_t samples = 0;
    std::vector<std::string> warnings;

    bool ok() const { return idempotents_ok && meet_ok && factorization_ok && unit_group_ok && d_lambda_ok; }
  };

  /// Structural checks on the face lattice with `samples` random points per face.
  ToricReport toric_structure_report(const WeightMonoid &a, const FaceLattice &l, std::uint64_t seed,
                                     std::size_t samples = 3);

  /// Bounded search: every integer vector of the box |b_k| <= bound that lies in the
  /// lattice and the cone is representable.
  bool is_saturated(const WeightMonoid &a, long bound);

  /// alpha(lambda) on each lambda-weight space. Throws Rejection if some weight is not
  /// representable in A.
  NatFamily torus_action_family(const CategoryClosure &c, const std::vector<QVector> &h, const WeightMonoid &a,
                                const AtildePoint &alpha);

} // namespace tforge

#endif
