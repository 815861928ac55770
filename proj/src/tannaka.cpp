#include "tforge/tannaka.hpp"

#include "tforge/errors.hpp"
#include "tforge/uea.hpp"

#include <algorithm>
#include <map>

namespace tforge
{

  const char *to_string(ObjectOrigin o)
  {
    switch (o)
    {
    case ObjectOrigin::trivial:
      return "trivial";
    case ObjectOrigin::generator:
      return "generator";
    case ObjectOrigin::dual:
      return "dual";
    case ObjectOrigin::tensor:
      return "tensor";
    case ObjectOrigin::sum:
      return "sum";
    case ObjectOrigin::submodule:
      return "submodule";
    }
    return "unknown";
  }

  //------------------------------------------------------------------------------
  // CategoryClosure
  //------------------------------------------------------------------------------

  std::vector<TensorPair> CategoryClosure::tensor_pairs() const
  {
    std::vector<TensorPair> pairs;
    for (std::size_t i = 0; i < m_objects.size(); ++i)
      if (m_objects[i].provenance.origin == ObjectOrigin::tensor)
        pairs.push_back({m_objects[i].provenance.left, m_objects[i].provenance.right, i});
    return pairs;
  }

  std::optional<std::size_t> CategoryClosure::find(const std::string &id) const
  {
    for (std::size_t i = 0; i < m_objects.size(); ++i)
      if (m_objects[i].module.id() == id)
        return i;
    return std::nullopt;
  }

  std::size_t CategoryClosure::index_of(const std::string &id) const
  {
    if (auto i = find(id))
      return *i;
    throw InputError("no closure object with id \"" + id + "\"");
  }

  std::size_t CategoryClosure::add_object(Module m, Provenance p)
  {
    if (find(m.id()))
      throw InputError("duplicate closure object id \"" + m.id() + "\"");
    if (m.algebra_ptr() != m_algebra && !(m.algebra() == *m_algebra))
      throw InputError("object \"" + m.id() + "\" belongs to a different Lie algebra");
    m_objects.push_back({std::move(m), std::move(p)});
    return m_objects.size() - 1;
  }

  void CategoryClosure::compute_morphisms()
  {
    m_morphisms.clear();
    for (std::size_t s = 0; s < m_objects.size(); ++s)
      for (std::size_t t = 0; t < m_objects.size(); ++t)
        for (auto &h : hom_space(m_objects[s].module, m_objects[t].module))
          m_morphisms.push_back({s, t, std::move(h)});
  }

  namespace
  {
    void guard(const CategoryClosure &c, const ClosureOptions &o)
    {
      if (c.size() > o.max_objects)
        throw Rejection("closure exceeds the object cap of " + std::to_string(o.max_objects),
                        "object count " + std::to_string(c.size()));
    }

    std::vector<QVector> image_of(const QMatrix &m)
    {
      return canonical_span(m.columns(), m.rows());
    }
  } // namespace

  CategoryClosure build_closure(AlgebraPtr g, const std::vector<Module> &generators, const ClosureOptions &options)
  {
    CategoryClosure c(g, options.depth);
    c.add_object(trivial_module(g), {ObjectOrigin::trivial, 0, 0, ""});
    std::vector<std::size_t> base;
    for (const auto &m : generators)
      base.push_back(c.add_object(m, {ObjectOrigin::generator, 0, 0, ""}));
    if (options.include_duals)
    {
      const auto gens = base;
      for (auto i : gens)
        base.push_back(c.add_object(dual_module(c.object(i).module), {ObjectOrigin::dual, i, 0, ""}));
    }
    guard(c, options);

    // Tensor words of length 2..depth, built left to right.
    std::vector<std::size_t> previous = base;
    for (unsigned len = 2; len <= options.depth; ++len)
    {
      std::vector<std::size_t> current;
      for (auto left : previous)
        for (auto right : base)
        {
          Module t = tensor(c.object(left).module, c.object(right).module);
          current.push_back(c.add_object(std::move(t), {ObjectOrigin::tensor, left, right, ""}));
          guard(c, options);
        }
      previous = std::move(current);
    }

    if (options.extract_submodules)
    {
      const std::size_t snapshot = c.size();
      std::vector<std::vector<std::vector<QVector>>> known(snapshot);
      std::vector<std::size_t> counter(snapshot, 0);
      auto add_sub = [&](std::size_t parent, std::vector<QVector> span, const std::string &detail) {
        const Module &p = c.object(parent).module;
        if (span.empty() || span.size() == p.dim())
          return;
        for (const auto &k : known[parent])
          if (k == span)
            return;
        known[parent].push_back(span);
        const std::string id = p.id() + "/" + std::to_string(++counter[parent]);
        Module sub = restrict_module(p, span, id);
        c.add_object(std::move(sub), {ObjectOrigin::submodule, parent, 0, detail});
        guard(c, options);
      };
      for (std::size_t s = 0; s < snapshot; ++s)
        for (std::size_t t = 0; t < snapshot; ++t)
        {
          const auto homs = hom_space(c.object(s).module, c.object(t).module);
          for (std::size_t k = 0; k < homs.size(); ++k)
          {
            const QMatrix &phi = homs[k];
            const std::string tag = "hom(" + c.object(s).module.id() + "," + c.object(t).module.id() + ")#"
                                    + std::to_string(k);
            add_sub(t, image_of(phi), "image of " + tag);
            add_sub(s, canonical_span(kernel_basis(phi), phi.cols()), "kernel of " + tag);
            if (s == t)
              for (const auto &lambda : rational_roots(minimal_polynomial(phi)))
              {
                const QMatrix shifted = phi - lambda * QMatrix::identity(phi.rows());
                add_sub(s, canonical_span(kernel_basis(shifted), phi.cols()),
                        "eigenspace " + to_string(lambda) + " of " + tag);
              }
          }
        }
    }
    c.compute_morphisms();
    return c;
  }

  //------------------------------------------------------------------------------
  // NatFamily
  //------------------------------------------------------------------------------

  NatFamily NatFamily::identity(const CategoryClosure &c)
  {
    NatFamily f;
    for (const auto &o : c.objects())
      f.entries.push_back(QMatrix::identity(o.module.dim()));
    return f;
  }

  NatFamily NatFamily::zero(const CategoryClosure &c)
  {
    NatFamily f;
    for (const auto &o : c.objects())
      f.entries.push_back(QMatrix(o.module.dim(), o.module.dim()));
    return f;
  }

  NatFamily NatFamily::from_lie_element(const CategoryClosure &c, const QVector &x)
  {
    NatFamily f;
    for (const auto &o : c.objects())
      f.entries.push_back(o.module.act(x));
    return f;
  }

  QVector NatFamily::flatten() const
  {
    QVector v;
    for (const auto &e : entries)
      v.insert(v.end(), e.data().begin(), e.data().end());
    return v;
  }

  NatFamily NatFamily::unflatten(const CategoryClosure &c, const QVector &v)
  {
    NatFamily f;
    std::size_t offset = 0;
    for (const auto &o : c.objects())
    {
      const std::size_t d = o.module.dim();
      if (offset + d * d > v.size())
        throw InputError("NatFamily::unflatten: vector too short");
      f.entries.push_back(QMatrix::unflatten(QVector(v.begin() + static_cast<long>(offset),
                                                     v.begin() + static_cast<long>(offset + d * d)),
                                             d, d));
      offset += d * d;
    }
    if (offset != v.size())
      throw InputError("NatFamily::unflatten: vector too long");
    return f;
  }

  namespace
  {
    void require_aligned(const NatFamily &a, const NatFamily &b)
    {
      if (a.entries.size() != b.entries.size())
        throw InputError("families over different closures");
    }
  } // namespace

  NatFamily compose(const NatFamily &a, const NatFamily &b)
  {
    require_aligned(a, b);
    NatFamily r;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      r.entries.push_back(a.entries[i] * b.entries[i]);
    return r;
  }

  NatFamily operator+(const NatFamily &a, const NatFamily &b)
  {
    require_aligned(a, b);
    NatFamily r;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      r.entries.push_back(a.entries[i] + b.entries[i]);
    return r;
  }

  NatFamily operator*(const Rational &s, const NatFamily &a)
  {
    NatFamily r;
    for (const auto &e : a.entries)
      r.entries.push_back(s * e);
    return r;
  }

  NatFamily commutator(const NatFamily &a, const NatFamily &b)
  {
    require_aligned(a, b);
    NatFamily r;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      r.entries.push_back(commutator(a.entries[i], b.entries[i]));
    return r;
  }

  std::optional<NatFamily> invert(const NatFamily &a)
  {
    NatFamily r;
    for (const auto &e : a.entries)
    {
      auto inv = inverse(e);
      if (!inv)
        return std::nullopt;
      r.entries.push_back(std::move(*inv));
    }
    return r;
  }

  bool in_family_span(const std::vector<NatFamily> &basis, const NatFamily &x)
  {
    std::vector<QVector> flat;
    for (const auto &b : basis)
      flat.push_back(b.flatten());
    return in_span(flat, x.flatten());
  }

  //------------------------------------------------------------------------------
  // Lie(M)
  //------------------------------------------------------------------------------

  namespace
  {
    using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

    /// Solution space of a growing homogeneous system, refined one block at a time.
    class IncrementalNullspace
    {
    public:
      explicit IncrementalNullspace(std::size_t n) : m_n(n)
      {
        for (std::size_t i = 0; i < n; ++i)
          m_basis.push_back(unit_vector(n, i));
      }

      void add_block(const std::vector<SparseRow> &rows)
      {
        const std::size_t k = m_basis.size();
        if (k == 0 || rows.empty())
          return;
        QMatrix p(rows.size(), k);
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (const auto &[col, coef] : rows[r])
            for (std::size_t j = 0; j < k; ++j)
              if (sgn(m_basis[j][col]) != 0)
                p(r, j) += coef * m_basis[j][col];
        if (p.is_zero())
          return;
        std::vector<QVector> next;
        for (const auto &kv : kernel_basis(p))
        {
          QVector v = zero_vector(m_n);
          for (std::size_t j = 0; j < k; ++j)
          {
            if (sgn(kv[j]) == 0)
              continue;
            for (std::size_t i = 0; i < m_n; ++i)
              if (sgn(m_basis[j][i]) != 0)
                v[i] += kv[j] * m_basis[j][i];
          }
          next.push_back(std::move(v));
        }
        m_basis = std::move(next);
      }

      const std::vector<QVector> &basis() const { return m_basis; }

    private:
      std::size_t m_n;
      std::vector<QVector> m_basis;
    };
  } // namespace

  std::vector<NatFamily> lie_m_solve(const CategoryClosure &c)
  {
    std::vector<std::size_t> offset, dim;
    std::size_t total = 0;
    for (const auto &o : c.objects())
    {
      offset.push_back(total);
      dim.push_back(o.module.dim());
      total += o.module.dim() * o.module.dim();
    }
    auto var = [&](std::size_t obj, std::size_t i, std::size_t j) { return offset[obj] + i * dim[obj] + j; };

    IncrementalNullspace ns(total);
    for (std::size_t o = 0; o < c.size(); ++o)
      if (c.object(o).provenance.origin == ObjectOrigin::trivial)
      {
        std::vector<SparseRow> rows;
        for (std::size_t i = 0; i < dim[o]; ++i)
          for (std::size_t j = 0; j < dim[o]; ++j)
            rows.push_back({{var(o, i, j), Rational(1)}});
        ns.add_block(rows);
      }

    for (const auto &tp : c.tensor_pairs())
    {
      const std::size_t a = dim[tp.left], b = dim[tp.right];
      std::vector<SparseRow> rows;
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t p = 0; p < b; ++p)
          for (std::size_t j = 0; j < a; ++j)
            for (std::size_t q = 0; q < b; ++q)
            {
              SparseRow row{{var(tp.product, i * b + p, j * b + q), Rational(1)}};
              if (p == q)
                row.emplace_back(var(tp.left, i, j), Rational(-1));
              if (i == j)
                row.emplace_back(var(tp.right, p, q), Rational(-1));
              rows.push_back(std::move(row));
            }
      ns.add_block(rows);
    }

    for (const auto &m : c.morphisms())
    {
      const std::size_t ds = dim[m.source], dt = dim[m.target];
      std::vector<SparseRow> rows;
      // phi x_s - x_t phi = 0, entry (r, col)
      for (std::size_t r = 0; r < dt; ++r)
        for (std::size_t col = 0; col < ds; ++col)
        {
          std::map<std::size_t, Rational> acc;
          for (std::size_t k = 0; k < ds; ++k)
            if (sgn(m.matrix(r, k)) != 0)
              acc[var(m.source, k, col)] += m.matrix(r, k);
          for (std::size_t k = 0; k < dt; ++k)
            if (sgn(m.matrix(k, col)) != 0)
              acc[var(m.target, r, k)] -= m.matrix(k, col);
          SparseRow row;
          for (auto &[v, coef] : acc)
            if (sgn(coef) != 0)
              row.emplace_back(v, coef);
          if (!row.empty())
            rows.push_back(std::move(row));
        }
      ns.add_block(rows);
    }

    std::vector<NatFamily> basis;
    for (const auto &v : canonical_span(ns.basis(), total))
      basis.push_back(NatFamily::unflatten(c, v));
    return basis;
  }

  LieMReport lie_m_report(AlgebraPtr g, const std::vector<Module> &generators, const ClosureOptions &options)
  {
    CategoryClosure closure = build_closure(g, generators, options);
    std::vector<NatFamily> basis = lie_m_solve(closure);
    bool stabilized = false;
    if (options.depth >= 2)
    {
      ClosureOptions lower = options;
      lower.depth = options.depth - 1;
      const CategoryClosure prev = build_closure(g, generators, lower);
      const auto prev_basis = lie_m_solve(prev);
      // Generators occupy the same leading positions in both closures.
      auto restrict = [&](const std::vector<NatFamily> &b) {
        std::vector<QVector> out;
        for (const auto &f : b)
        {
          QVector v;
          for (std::size_t i = 1; i <= generators.size(); ++i)
            v.insert(v.end(), f.entries[i].data().begin(), f.entries[i].data().end());
          out.push_back(std::move(v));
        }
        return out;
      };
      std::size_t width = 0;
      for (const auto &m : generators)
        width += m.dim() * m.dim();
      stabilized = prev_basis.size() == basis.size() && same_span(restrict(prev_basis), restrict(basis), width);
    }
    const std::size_t dim = basis.size();
    return LieMReport{options.depth, dim, stabilized, std::move(basis), std::move(closure)};
  }

  //------------------------------------------------------------------------------
  // Membership
  //------------------------------------------------------------------------------

  namespace
  {
    void require_cover(const CategoryClosure &c, const NatFamily &cand)
    {
      if (cand.entries.size() != c.size())
        throw InputError("family has " + std::to_string(cand.entries.size()) + " entries, closure has "
                         + std::to_string(c.size()) + " objects");
      for (std::size_t i = 0; i < c.size(); ++i)
      {
        const std::size_t d = c.object(i).module.dim();
        if (cand.entries[i].rows() != d || cand.entries[i].cols() != d)
          throw InputError("family entry for \"" + c.object(i).module.id() + "\" has the wrong shape");
      }
    }

    void note(MembershipReport &r, std::size_t max, std::string what)
    {
      r.certified = false;
      if (r.violations.size() < max)
        r.violations.push_back(std::move(what));
    }

    void check_naturality(const CategoryClosure &c, const NatFamily &cand, MembershipReport &r, std::size_t max)
    {
      for (std::size_t k = 0; k < c.morphisms().size(); ++k)
      {
        const auto &m = c.morphisms()[k];
        if (!(cand.entries[m.target] * m.matrix == m.matrix * cand.entries[m.source]))
          note(r, max,
               "naturality fails for morphism #" + std::to_string(k) + " " + c.object(m.source).module.id() + " -> "
                   + c.object(m.target).module.id());
      }
    }
  } // namespace

  MembershipReport naturality_check(const CategoryClosure &c, const NatFamily &cand, std::size_t max_violations)
  {
    require_cover(c, cand);
    MembershipReport r;
    check_naturality(c, cand, r, max_violations);
    return r;
  }

  MembershipReport m_membership(const CategoryClosure &c, const NatFamily &cand, std::size_t max_violations)
  {
    require_cover(c, cand);
    MembershipReport r;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c.object(i).provenance.origin == ObjectOrigin::trivial
          && !(cand.entries[i] == QMatrix::identity(c.object(i).module.dim())))
        note(r, max_violations, "not the identity on trivial object " + c.object(i).module.id());
    for (const auto &tp : c.tensor_pairs())
      if (!(cand.entries[tp.product] == kron(cand.entries[tp.left], cand.entries[tp.right])))
        note(r, max_violations,
             "tensor " + c.object(tp.product).module.id() + " != " + c.object(tp.left).module.id() + " (x) "
                 + c.object(tp.right).module.id());
    check_naturality(c, cand, r, max_violations);
    return r;
  }

  std::vector<CoefficientValue> evaluation_functional(const CategoryClosure &c, const NatFamily &m)
  {
    require_cover(c, m);
    std::vector<CoefficientValue> out;
    for (std::size_t o = 0; o < c.size(); ++o)
    {
      const std::size_t d = c.object(o).module.dim();
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          out.push_back({o, unit_vector(d, i), unit_vector(d, j), m.entries[o](i, j)});
    }
    return out;
  }

  NatFamily specm_point_to_nat(const CategoryClosure &c, const std::vector<CoefficientValue> &alpha)
  {
    std::vector<std::vector<const CoefficientValue *>> per_object(c.size());
    for (const auto &a : alpha)
    {
      if (a.object >= c.size())
        throw InputError("coefficient value refers to a missing object");
      const std::size_t d = c.object(a.object).module.dim();
      if (a.covector.size() != d || a.vector.size() != d)
        throw InputError("coefficient value has the wrong length for " + c.object(a.object).module.id());
      per_object[a.object].push_back(&a);
    }
    NatFamily f;
    for (std::size_t o = 0; o < c.size(); ++o)
    {
      const std::size_t d = c.object(o).module.dim();
      const auto &vals = per_object[o];
      QMatrix sys(vals.size(), d * d);
      QVector rhs(vals.size());
      for (std::size_t r = 0; r < vals.size(); ++r)
      {
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            sys(r, i * d + j) = vals[r]->covector[i] * vals[r]->vector[j];
        rhs[r] = vals[r]->value;
      }
      if (rank(sys) < d * d)
        throw InputError("coefficient values do not span the matrix coefficients of " + c.object(o).module.id());
      auto x = solve(sys, rhs);
      if (!x)
        throw Rejection("inconsistent functional: values on " + c.object(o).module.id() + " are not linear",
                        c.object(o).module.id());
      f.entries.push_back(QMatrix::unflatten(*x, d, d));
    }
    const MembershipReport r = m_membership(c, f, 1);
    if (!r.certified)
      throw Rejection("functional is not multiplicative on matrix coefficients", r.violations.front());
    return f;
  }

  bool is_central(const CategoryClosure &c, const std::vector<NatFamily> &lie_basis, const NatFamily &cand)
  {
    require_cover(c, cand);
    for (const auto &x : lie_basis)
    {
      require_cover(c, x);
      for (std::size_t o = 0; o < c.size(); ++o)
        if (!(cand.entries[o] * x.entries[o] == x.entries[o] * cand.entries[o]))
          return false;
    }
    return true;
  }

  //------------------------------------------------------------------------------
  // Peter-Weyl
  //------------------------------------------------------------------------------

  namespace
  {
    void require_irreducible_family(const std::vector<Module> &irreducibles)
    {
      for (const auto &v : irreducibles)
        if (!certify_irreducible(v).irreducible)
          throw Rejection("module is not (absolutely) irreducible", v.id());
      for (std::size_t i = 0; i < irreducibles.size(); ++i)
        for (std::size_t j = i + 1; j < irreducibles.size(); ++j)
          if (!hom_space(irreducibles[i], irreducibles[j]).empty())
            throw Rejection("irreducibles are pairwise isomorphic",
                            irreducibles[i].id() + " ~ " + irreducibles[j].id());
    }

    std::size_t coefficient_rank(const std::vector<Module> &irreducibles, unsigned degree)
    {
      if (irreducibles.empty())
        return 0;
      const auto monomials = multi_indices_up_to(irreducibles.front().action().size(), degree);
      std::vector<QVector> rows;
      std::vector<std::vector<QMatrix>> values;
      for (const auto &v : irreducibles)
      {
        std::vector<QMatrix> mats;
        for (const auto &e : monomials)
          mats.push_back(pbw_matrix(v, e));
        for (std::size_t i = 0; i < v.dim(); ++i)
          for (std::size_t j = 0; j < v.dim(); ++j)
          {
            QVector row(monomials.size());
            for (std::size_t k = 0; k < monomials.size(); ++k)
              row[k] = mats[k](i, j);
            rows.push_back(std::move(row));
          }
      }
      return span_rank(rows, monomials.size());
    }
  } // namespace

  PeterWeylReport peter_weyl_check(const std::vector<Module> &irreducibles, unsigned degree)
  {
    require_irreducible_family(irreducibles);
    PeterWeylReport r;
    r.degree = degree;
    for (const auto &v : irreducibles)
      r.expected_dim += v.dim() * v.dim() / endomorphisms(v).size();
    r.achieved_rank = coefficient_rank(irreducibles, degree);
    r.previous_rank = degree == 0 ? 0 : coefficient_rank(irreducibles, degree - 1);
    r.stabilized = degree > 0 && r.previous_rank == r.achieved_rank;
    r.success = r.stabilized && r.achieved_rank == r.expected_dim;
    return r;
  }

  //------------------------------------------------------------------------------
  // Isotypic reassembly
  //------------------------------------------------------------------------------

  IsotypicSplitting isotypic_splitting(const Module &v, const std::vector<Module> &irreducibles)
  {
    IsotypicSplitting s;
    std::vector<QVector> cols;
    for (std::size_t k = 0; k < irreducibles.size(); ++k)
      for (const auto &psi : hom_space(irreducibles[k], v))
      {
        for (std::size_t j = 0; j < psi.cols(); ++j)
          cols.push_back(psi.column(j));
        s.copies.push_back(k);
      }
    if (cols.size() != v.dim() || span_rank(cols, v.dim()) != v.dim())
      throw Rejection("module is not a direct sum of the listed irreducibles", v.id());
    s.iso = QMatrix::from_columns(cols, v.dim());
    return s;
  }

  NatFamily nat_from_irr_components(const CategoryClosure &c, const std::vector<Module> &irreducibles,
                                    const std::vector<QMatrix> &components)
  {
    if (components.size() != irreducibles.size())
      throw InputError("one component matrix per irreducible required");
    for (std::size_t k = 0; k < irreducibles.size(); ++k)
    {
      const Module &l = irreducibles[k];
      if (components[k].rows() != l.dim() || components[k].cols() != l.dim())
        throw InputError("component for " + l.id() + " has the wrong shape");
      for (const auto &s : endomorphisms(l))
        if (!(s * components[k] == components[k] * s))
          throw Rejection("component does not commute with the commutant End_g", l.id());
    }
    NatFamily f;
    for (const auto &o : c.objects())
    {
      const IsotypicSplitting s = isotypic_splitting(o.module, irreducibles);
      QMatrix block(0, 0);
      for (auto k : s.copies)
        block = block_diag(block, components[k]);
      f.entries.push_back(s.iso * block * *inverse(s.iso));
    }
    return f;
  }

  std::vector<QMatrix> irr_components(const CategoryClosure &c, const std::vector<Module> &irreducibles,
                                      const NatFamily &n)
  {
    require_cover(c, n);
    std::vector<QMatrix> out;
    for (const auto &l : irreducibles)
    {
      std::optional<QMatrix> found;
      for (std::size_t o = 0; o < c.size() && !found; ++o)
      {
        const auto homs = hom_space(l, c.object(o).module);
        if (homs.empty())
          continue;
        const QMatrix &psi = homs.front();
        found = solve_left(psi, n.entries[o] * psi);
        if (!found)
          throw Rejection("family does not preserve the image of " + l.id(), c.object(o).module.id());
      }
      if (!found)
        throw InputError("irreducible " + l.id() + " does not occur in the closure");
      out.push_back(std::move(*found));
    }
    return out;
  }

} // namespace tforge
