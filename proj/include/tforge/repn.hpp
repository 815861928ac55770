#ifndef TFORGE_REPN_HPP
#define TFORGE_REPN_HPP

#include "tforge/exactlin.hpp"
#include "tforge/liealg.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tforge
{

  using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

  /// Finite-dimensional g-module: one action matrix per Lie basis element.
  ///
  /// Modules are immutable. create() verifies the representation identity
  /// rho([a_i, a_j]) = [rho(a_i), rho(a_j)]; the constructors below produce
  /// modules for which it holds by construction.
  class Module
  {
  public:
    /// Throws Rejection listing the violating pairs, InputError on shape problems.
    static Module create(AlgebraPtr g, std::string id, std::vector<QMatrix> action);

    const std::string &id() const { return m_id; }
    std::size_t dim() const { return m_dim; }
    const LieAlgebra &algebra() const { return *m_algebra; }
    const AlgebraPtr &algebra_ptr() const { return m_algebra; }
    const std::vector<QMatrix> &action() const { return m_action; }
    const QMatrix &action(std::size_t i) const { return m_action.at(i); }
    /// rho(x) for x in Lie basis coordinates.
    QMatrix act(const QVector &x) const;

    Module renamed(std::string id) const;

  private:
    Module(AlgebraPtr g, std::string id, std::size_t dim, std::vector<QMatrix> action);
    friend Module make_unchecked(AlgebraPtr, std::string, std::size_t, std::vector<QMatrix>);

    AlgebraPtr m_algebra;
    std::string m_id;
    std::size_t m_dim = 0;
    std::vector<QMatrix> m_action;
  };

  /// Linear map between modules, target.dim x source.dim.
  struct Morphism
  {
    std::string source;
    std::string target;
    QMatrix matrix;
  };

  /// Pairs (i, j), i < j, where rho([a_i, a_j]) != [rho(a_i), rho(a_j)].
  std::vector<std::array<std::size_t, 2>> check_module(const LieAlgebra &g, const std::vector<QMatrix> &action);

  Module trivial_module(AlgebraPtr g, std::size_t dim = 1, std::string id = "1");
  /// Action rho_V(a) (x) I + I (x) rho_W(a); V's index is the major index.
  Module tensor(const Module &v, const Module &w, std::optional<std::string> id = std::nullopt);
  Module direct_sum(const Module &v, const Module &w, std::optional<std::string> id = std::nullopt);
  /// Contragredient module: action -rho(a)^T.
  Module dual_module(const Module &v, std::optional<std::string> id = std::nullopt);

  struct GeneratedSubmodule
  {
    /// Basis of the submodule in V coordinates, in discovery order.
    std::vector<QVector> basis;
    /// Absent when the seeds span zero.
    std::optional<Module> module;
    std::optional<Morphism> inclusion;

    bool empty() const { return basis.empty(); }
  };

  /// Smallest invariant subspace containing the seeds: breadth-first over the
  /// basis actions, keeping each vector that raises the rank.
  GeneratedSubmodule submodule_generated(const Module &v, const std::vector<QVector> &seeds,
                                         std::optional<std::string> id = std::nullopt);
  /// Module structure on an invariant subspace, expressed in the given basis.
  Module restrict_module(const Module &v, const std::vector<QVector> &basis, std::string id);
  /// Restriction of an endomorphism to an invariant subspace with the given basis.
  QMatrix restrict_matrix(const QMatrix &x, const std::vector<QVector> &basis);

  bool is_intertwiner(const Module &source, const Module &target, const QMatrix &a);
  /// Basis of Hom_g(V, W) (each W.dim x V.dim).
  std::vector<QMatrix> hom_space(const Module &v, const Module &w);
  inline std::vector<QMatrix> endomorphisms(const Module &v) { return hom_space(v, v); }

  bool is_invariant_subspace(const std::vector<QVector> &subspace, const std::vector<QMatrix> &actors);
  bool is_invariant_subspace(const Module &v, const std::vector<QVector> &subspace);

  struct IrreducibilityCertificate
  {
    std::size_t commutant_dim = 0;
    /// dim of the submodule generated by each standard basis vector
    std::vector<std::size_t> generated_dims;
    bool irreducible = false;
  };

  /// Absolute irreducibility: End_g(V) is 1-dimensional and every basis vector generates V.
  IrreducibilityCertificate certify_irreducible(const Module &v);

  namespace examples
  {
    /// Irreducible sl2-module of highest weight n in the basis v_n, v_{n-2}, ..., v_{-n}
    /// with e v_k = v_{k+2} (up to scaling) and h diagonal; basis order of the algebra is (h, e, f).
    Module sl2_irrep(AlgebraPtr sl2, unsigned n);
    /// Defining representation by the matrices the algebra was built from.
    Module matrix_module(AlgebraPtr g, const std::vector<QMatrix> &matrices, std::string id);
  } // namespace examples

} // namespace tforge

#endif
