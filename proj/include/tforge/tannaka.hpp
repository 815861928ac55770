#ifndef TFORGE_TANNAKA_HPP
#define TFORGE_TANNAKA_HPP

#include "tforge/exactlin.hpp"
#include "tforge/repn.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tforge
{

  //------------------------------------------------------------------------------
  // Category closures
  //------------------------------------------------------------------------------

  enum class ObjectOrigin
  {
    trivial,
    generator,
    dual,
    tensor,
    sum,
    submodule
  };

  const char *to_string(ObjectOrigin o);

  struct Provenance
  {
    ObjectOrigin origin = ObjectOrigin::generator;
    /// tensor/sum: the factor objects; dual: left is the source; submodule: left is the parent.
    std::size_t left = 0;
    std::size_t right = 0;
    /// Free-form detail, e.g. which morphism cut out a submodule.
    std::string detail;
  };

  struct ClosureObject
  {
    Module module;
    Provenance provenance;
  };

  struct ClosureMorphism
  {
    std::size_t source = 0;
    std::size_t target = 0;
    QMatrix matrix;
  };

  struct TensorPair
  {
    std::size_t left = 0;
    std::size_t right = 0;
    std::size_t product = 0;
  };

  struct ClosureOptions
  {
    /// Maximal number of tensor factors in a product of base objects.
    unsigned depth = 2;
    bool include_duals = false;
    /// Add images, kernels and rational eigenspaces of all hom-space basis elements.
    bool extract_submodules = true;
    /// build_closure fails rather than truncating when this is exceeded.
    std::size_t max_objects = 64;
  };

  /// Finite fragment of the module category: objects, a basis of every hom space
  /// between them, and the recorded tensor factorizations.
  class CategoryClosure
  {
  public:
    CategoryClosure(AlgebraPtr g, unsigned depth) : m_algebra(std::move(g)), m_depth(depth) {}

    const LieAlgebra &algebra() const { return *m_algebra; }
    const AlgebraPtr &algebra_ptr() const { return m_algebra; }
    unsigned depth() const { return m_depth; }

    const std::vector<ClosureObject> &objects() const { return m_objects; }
    const ClosureObject &object(std::size_t i) const { return m_objects.at(i); }
    std::size_t size() const { return m_objects.size(); }
    const std::vector<ClosureMorphism> &morphisms() const { return m_morphisms; }
    std::vector<TensorPair> tensor_pairs() const;
    std::optional<std::size_t> find(const std::string &id) const;
    std::size_t index_of(const std::string &id) const;

    /// Appends an object; ids must be unique.
    std::size_t add_object(Module m, Provenance p);
    /// Recomputes hom_space bases between every ordered pair of objects.
    void compute_morphisms();

  private:
    AlgebraPtr m_algebra;
    unsigned m_depth = 0;
    std::vector<ClosureObject> m_objects;
    std::vector<ClosureMorphism> m_morphisms;
  };

  /// Objects: trivial, generators, optional duals, tensor words of length 2..depth over
  /// the generators (and duals), then one round of submodules cut out by hom-space
  /// elements. Deterministic order. Throws Rejection when max_objects is exceeded.
  CategoryClosure build_closure(AlgebraPtr g, const std::vector<Module> &generators, const ClosureOptions &options = {});

  //------------------------------------------------------------------------------
  // Natural families
  //------------------------------------------------------------------------------

  /// One square matrix per closure object, aligned with CategoryClosure::objects().
  struct NatFamily
  {
    std::vector<QMatrix> entries;

    static NatFamily identity(const CategoryClosure &c);
    static NatFamily zero(const CategoryClosure &c);
    /// Family x_V = rho_V(x) of a Lie algebra element.
    static NatFamily from_lie_element(const CategoryClosure &c, const QVector &x);

    /// Concatenation of the row-major entries.
    QVector flatten() const;
    static NatFamily unflatten(const CategoryClosure &c, const QVector &v);

    friend bool operator==(const NatFamily &a, const NatFamily &b) = default;
  };

  /// Object-wise product a_V b_V.
  NatFamily compose(const NatFamily &a, const NatFamily &b);
  NatFamily operator+(const NatFamily &a, const NatFamily &b);
  NatFamily operator*(const Rational &s, const NatFamily &a);
  NatFamily commutator(const NatFamily &a, const NatFamily &b);
  /// Object-wise inverse, or nullopt if some entry is singular.
  std::optional<NatFamily> invert(const NatFamily &a);

  /// True iff `x` lies in the span of `basis` (as flattened families).
  bool in_family_span(const std::vector<NatFamily> &basis, const NatFamily &x);

  //------------------------------------------------------------------------------
  // Lie(M)
  //------------------------------------------------------------------------------

  /// Basis of the families satisfying naturality with every closure morphism,
  /// x_{V(x)W} = x_V (x) I + I (x) x_W on recorded tensor pairs and x = 0 on
  /// trivial objects.
  std::vector<NatFamily> lie_m_solve(const CategoryClosure &c);

  struct LieMReport
  {
    unsigned depth = 0;
    std::size_t dim = 0;
    /// Same dimension and same restriction to the generators one depth lower.
    bool stabilized = false;
    std::vector<NatFamily> basis;
    CategoryClosure closure;
  };

  /// Solves at `depth` and at depth - 1 (when depth >= 2) and compares.
  LieMReport lie_m_report(AlgebraPtr g, const std::vector<Module> &generators, const ClosureOptions &options);

  //------------------------------------------------------------------------------
  // The monoid M
  //------------------------------------------------------------------------------

  struct MembershipReport
  {
    bool certified = true;
    /// First few violations with provenance, e.g. "tensor (L1*L1) != L1 (x) L1".
    std::vector<std::string> violations;
  };

  /// Naturality, multiplicativity on tensor pairs, identity on trivial objects.
  /// Throws InputError when the family does not cover every object.
  MembershipReport m_membership(const CategoryClosure &c, const NatFamily &cand, std::size_t max_violations = 8);
  /// Only the naturality conditions.
  MembershipReport naturality_check(const CategoryClosure &c, const NatFamily &cand, std::size_t max_violations = 8);

  /// One value alpha(f_{phi v}) of a functional on matrix coefficients.
  struct CoefficientValue
  {
    std::size_t object = 0;
    QVector covector;
    QVector vector;
    Rational value;
  };

  /// alpha(f_{e_i^* e_j}) = m_V(i, j) for every object and index pair.
  std::vector<CoefficientValue> evaluation_functional(const CategoryClosure &c, const NatFamily &m);

  /// Rebuilds alpha_V from the coefficient values (alpha_V v = sum_i alpha(f_{e_i^* v}) e_i).
  /// Throws InputError when the values do not determine some alpha_V and Rejection when
  /// they are inconsistent or the reconstructed family is not in M.
  NatFamily specm_point_to_nat(const CategoryClosure &c, const std::vector<CoefficientValue> &alpha);

  /// cand commutes with every Lie(M) basis family on every object.
  bool is_central(const CategoryClosure &c, const std::vector<NatFamily> &lie_basis, const NatFamily &cand);

  //------------------------------------------------------------------------------
  // Peter-Weyl and isotypic reassembly
  //------------------------------------------------------------------------------

  struct PeterWeylReport
  {
    std::size_t expected_dim = 0;
    std::size_t achieved_rank = 0;
    std::size_t previous_rank = 0;
    unsigned degree = 0;
    bool stabilized = false;
    bool success = false;
  };

  /// Rank of the evaluation matrix of all f_{e_i^* e_j} on PBW monomials of degree <= d
  /// against sum dim(V)^2 / dim End_g(V). Throws Rejection if an input is not
  /// irreducible or two inputs are isomorphic.
  PeterWeylReport peter_weyl_check(const std::vector<Module> &irreducibles, unsigned degree);

  /// Isomorphism from a direct sum of irreducibles onto a module.
  struct IsotypicSplitting
  {
    /// Columns: images of the basis of each copy, grouped by irreducible.
    QMatrix iso;
    /// (irreducible index) for each copy, in column-block order.
    std::vector<std::size_t> copies;
  };

  /// Throws Rejection when the module is not a direct sum of the listed irreducibles.
  IsotypicSplitting isotypic_splitting(const Module &v, const std::vector<Module> &irreducibles);

  /// n_V := iso o (direct sum of n_L) o iso^-1 on every closure object. Each n_L must
  /// commute with End_g(L) (Rejection otherwise).
  NatFamily nat_from_irr_components(const CategoryClosure &c, const std::vector<Module> &irreducibles,
                                    const std::vector<QMatrix> &components);
  /// n_L recovered through an embedding of L into the first closure object that contains it.
  std::vector<QMatrix> irr_components(const CategoryClosure &c, const std::vector<Module> &irreducibles,
                                      const NatFamily &n);

} // namespace tforge

#endif
