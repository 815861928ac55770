#include "tforge/toric.hpp"

#include "tforge/errors.hpp"
#include "tforge/oneparam.hpp"
#include "tforge/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tforge
{

  namespace
  {
    using ZRow = std::vector<mpz_class>;

    /// Unimodular row reduction of the first `cols` columns; returns the number of nonzero rows.
    std::size_t integer_echelon(std::vector<ZRow> &rows, std::size_t cols)
    {
      std::size_t pivot = 0;
      for (std::size_t c = 0; c < cols && pivot < rows.size(); ++c)
      {
        while (true)
        {
          std::size_t best = rows.size();
          for (std::size_t i = pivot; i < rows.size(); ++i)
            if (sgn(rows[i][c]) != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
              best = i;
          if (best == rows.size())
            break;
          std::swap(rows[pivot], rows[best]);
          bool done = true;
          for (std::size_t i = pivot + 1; i < rows.size(); ++i)
          {
            if (sgn(rows[i][c]) == 0)
              continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[pivot][c].get_mpz_t());
            for (std::size_t k = 0; k < rows[i].size(); ++k)
              rows[i][k] -= q * rows[pivot][k];
            if (sgn(rows[i][c]) != 0)
              done = false;
          }
          if (done)
          {
            ++pivot;
            break;
          }
        }
      }
      return pivot;
    }

    long to_long(const mpz_class &z)
    {
      if (!z.fits_slong_p())
        throw std::overflow_error("integer exceeds long range");
      return z.get_si();
    }

    QVector to_qvector(const IntVector &v)
    {
      QVector out;
      for (long x : v)
        out.emplace_back(x);
      return out;
    }

    Rational qdot(const QVector &a, const IntVector &b)
    {
      Rational s = 0;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0)
          s += a[i] * b[i];
      return s;
    }

    std::vector<std::size_t> support(const AtildePoint &p)
    {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < p.values.size(); ++i)
        if (sgn(p.values[i]) != 0)
          s.push_back(i);
      return s;
    }

    /// Integer c with sum c_i v_i = b, or nullopt when b is outside the lattice.
    std::optional<IntVector> lattice_coordinates(const std::vector<IntVector> &vectors, const IntVector &b)
    {
      const std::size_t r = b.size(), n = vectors.size();
      std::vector<ZRow> work;
      for (std::size_t i = 0; i < n; ++i)
      {
        ZRow row(r + n);
        for (std::size_t k = 0; k < r; ++k)
          row[k] = vectors[i][k];
        row[r + i] = 1;
        work.push_back(std::move(row));
      }
      const std::size_t rank = integer_echelon(work, r);
      ZRow rest(r);
      for (std::size_t k = 0; k < r; ++k)
        rest[k] = b[k];
      std::vector<mpz_class> coef(n);
      std::size_t col = 0;
      for (std::size_t i = 0; i < rank; ++i)
      {
        while (sgn(work[i][col]) == 0)
          ++col;
        if (!mpz_divisible_p(rest[col].get_mpz_t(), work[i][col].get_mpz_t()))
          return std::nullopt;
        const mpz_class q = rest[col] / work[i][col];
        for (std::size_t k = 0; k < r; ++k)
          rest[k] -= q * work[i][k];
        for (std::size_t k = 0; k < n; ++k)
          coef[k] += q * work[i][r + k];
      }
      if (!std::all_of(rest.begin(), rest.end(), [](const mpz_class &z) { return sgn(z) == 0; }))
        return std::nullopt;
      IntVector out;
      for (const auto &c : coef)
        out.push_back(to_long(c));
      return out;
    }

    /// Exact rational d-th root, or nullopt.
    std::optional<Rational> rational_root(const Rational &v, long d)
    {
      if (d == 1)
        return v;
      if (sgn(v) < 0 && d % 2 == 0)
        return std::nullopt;
      mpz_class num = abs(v.get_num()), den = v.get_den(), rn, rd;
      if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(d)) == 0
          || mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(d)) == 0)
        return std::nullopt;
      Rational r(rn, rd);
      r.canonicalize();
      return sgn(v) < 0 ? Rational(-r) : r;
    }

    bool relations_hold(const std::vector<IntVector> &relations, const std::vector<Rational> &values)
    {
      for (const auto &rel : relations)
      {
        Rational lhs = 1, rhs = 1;
        for (std::size_t i = 0; i < rel.size(); ++i)
        {
          if (rel[i] > 0)
            lhs *= rational_pow(values[i], rel[i]);
          else if (rel[i] < 0)
            rhs *= rational_pow(values[i], -rel[i]);
        }
        if (lhs != rhs)
          return false;
      }
      return true;
    }
  } // namespace

  //------------------------------------------------------------------------------
  // Weight spaces
  //------------------------------------------------------------------------------

  WeightDecomposition weight_decomposition(const Module &v, const std::vector<QVector> &h)
  {
    const LieAlgebra &g = v.algebra();
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j)
        if (!is_zero(g.bracket(h[i], h[j])))
          throw InputError("weight_decomposition: h is not abelian");
    const std::size_t n = v.dim();
    std::map<QVector, std::vector<QVector>> current;
    if (n > 0)
      current[QVector{}] = QMatrix::identity(n).columns();
    for (const auto &x : h)
    {
      const QMatrix a = v.act(x);
      std::map<QVector, std::vector<QVector>> next;
      for (const auto &[key, basis] : current)
      {
        const QMatrix r = restrict_matrix(a, basis);
        const QPoly m = minimal_polynomial(r);
        const auto roots = rational_roots(m);
        if (static_cast<long>(roots.size()) != m.degree())
          throw Rejection("weight_decomposition: action is not diagonalizable over Q", v.id());
        for (const auto &lambda : roots)
        {
          std::vector<QVector> space;
          for (const auto &c : kernel_basis(r - lambda * QMatrix::identity(r.rows())))
          {
            QVector w = zero_vector(n);
            for (std::size_t j = 0; j < c.size(); ++j)
              if (sgn(c[j]) != 0)
                w = w + c[j] * basis[j];
            space.push_back(std::move(w));
          }
          QVector k = key;
          k.push_back(lambda);
          next.emplace(std::move(k), std::move(space));
        }
      }
      current = std::move(next);
    }
    return {v.id(), std::move(current)};
  }

  std::vector<WeightDecomposition> closure_weights(const CategoryClosure &c, const std::vector<QVector> &h)
  {
    std::vector<WeightDecomposition> out;
    for (const auto &o : c.objects())
      out.push_back(weight_decomposition(o.module, h));
    return out;
  }

  //------------------------------------------------------------------------------
  // Lattices and cones
  //------------------------------------------------------------------------------

  std::vector<IntVector> integer_kernel(const std::vector<IntVector> &columns, std::size_t rows)
  {
    const std::size_t m = columns.size();
    std::vector<ZRow> work;
    for (std::size_t i = 0; i < m; ++i)
    {
      ZRow row(rows + m);
      for (std::size_t k = 0; k < rows; ++k)
        row[k] = columns[i].at(k);
      row[rows + i] = 1;
      work.push_back(std::move(row));
    }
    const std::size_t rank = integer_echelon(work, rows);
    std::vector<IntVector> out;
    for (std::size_t i = rank; i < m; ++i)
    {
      IntVector rel;
      for (std::size_t k = 0; k < m; ++k)
        rel.push_back(to_long(work[i][rows + k]));
      out.push_back(std::move(rel));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool in_lattice(const std::vector<IntVector> &vectors, const IntVector &b)
  {
    const std::size_t r = b.size();
    std::vector<ZRow> work;
    for (const auto &v : vectors)
      work.emplace_back(v.begin(), v.end());
    const std::size_t rank = integer_echelon(work, r);
    ZRow rest(b.begin(), b.end());
    std::size_t col = 0;
    for (std::size_t i = 0; i < rank; ++i)
    {
      while (sgn(work[i][col]) == 0)
        ++col;
      if (!mpz_divisible_p(rest[col].get_mpz_t(), work[i][col].get_mpz_t()))
        return false;
      const mpz_class q = rest[col] / work[i][col];
      for (std::size_t k = 0; k < r; ++k)
        rest[k] -= q * work[i][k];
    }
    return std::all_of(rest.begin(), rest.end(), [](const mpz_class &z) { return sgn(z) == 0; });
  }

  std::optional<QVector> feasible_point(const std::vector<Inequality> &system, std::size_t vars)
  {
    // stages[s] constrains variables 0 .. vars - 1 - s.
    std::vector<std::vector<Inequality>> stages{system};
    for (std::size_t k = vars; k-- > 0;)
    {
      const auto &cur = stages.back();
      std::vector<Inequality> next;
      std::set<std::pair<QVector, Rational>> seen;
      auto push = [&](Inequality q) -> bool {
        Rational scale = 0;
        for (const auto &x : q.a)
          if (abs(x) > scale)
            scale = abs(x);
        if (sgn(scale) == 0)
          return sgn(q.c) <= 0;
        for (auto &x : q.a)
          x /= scale;
        q.c /= scale;
        if (seen.emplace(q.a, q.c).second)
          next.push_back(std::move(q));
        return true;
      };
      std::vector<const Inequality *> pos, neg;
      for (const auto &q : cur)
      {
        const int s = sgn(q.a[k]);
        if (s > 0)
          pos.push_back(&q);
        else if (s < 0)
          neg.push_back(&q);
        else if (!push(q))
          return std::nullopt;
      }
      for (const auto *p : pos)
        for (const auto *n : neg)
        {
          const Rational wp = -n->a[k], wn = p->a[k];
          Inequality q{wp * p->a + wn * n->a, wp * p->c + wn * n->c};
          q.a[k] = 0;
          if (!push(std::move(q)))
            return std::nullopt;
        }
      stages.push_back(std::move(next));
    }
    for (const auto &q : stages.back())
      if (sgn(q.c) > 0)
        return std::nullopt;
    QVector t = zero_vector(vars);
    for (std::size_t k = 0; k < vars; ++k)
    {
      std::optional<Rational> lower, upper;
      for (const auto &q : stages[vars - 1 - k])
      {
        if (sgn(q.a[k]) == 0)
          continue;
        Rational rhs = q.c;
        for (std::size_t j = 0; j < k; ++j)
          rhs -= q.a[j] * t[j];
        const Rational bound = rhs / q.a[k];
        if (sgn(q.a[k]) > 0)
        {
          if (!lower || bound > *lower)
            lower = bound;
        }
        else if (!upper || bound < *upper)
          upper = bound;
      }
      if (lower)
        t[k] = *lower;
      else if (upper)
        t[k] = std::min(*upper, Rational(0));
    }
    return t;
  }

  //------------------------------------------------------------------------------
  // Weight monoids
  //------------------------------------------------------------------------------

  WeightMonoid make_weight_monoid(std::size_t rank, std::vector<IntVector> generators, long denominator)
  {
    for (const auto &g : generators)
      if (g.size() != rank)
        throw InputError("weight monoid generator of wrong rank");
    std::erase_if(generators, [](const IntVector &g) { return std::all_of(g.begin(), g.end(), [](long x) { return x == 0; }); });
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    WeightMonoid a;
    a.rank = rank;
    a.relations = integer_kernel(generators, rank);
    a.generators = std::move(generators);
    a.denominator = denominator;
    return a;
  }

  WeightMonoid weight_monoid(const CategoryClosure &c, const std::vector<QVector> &h)
  {
    const auto dec = closure_weights(c, h);
    mpz_class den = 1;
    for (const auto &d : dec)
      for (const auto &[w, _] : d.spaces)
        for (const auto &x : w)
          mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    auto integral = [&](const QVector &w) {
      IntVector out;
      for (const auto &x : w)
      {
        const Rational y = x * den;
        out.push_back(to_long(y.get_num()));
      }
      return out;
    };
    auto weight_set = [&](std::size_t i) {
      std::set<IntVector> s;
      for (const auto &[w, _] : dec[i].spaces)
        s.insert(integral(w));
      return s;
    };
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < c.size(); ++i)
    {
      const auto origin = c.object(i).provenance.origin;
      if (origin == ObjectOrigin::generator || origin == ObjectOrigin::dual)
        for (const auto &w : weight_set(i))
          gens.push_back(w);
    }
    for (const auto &tp : c.tensor_pairs())
    {
      std::set<IntVector> sums;
      for (const auto &l : weight_set(tp.left))
        for (const auto &r : weight_set(tp.right))
        {
          IntVector s(h.size());
          for (std::size_t k = 0; k < h.size(); ++k)
            s[k] = l[k] + r[k];
          sums.insert(std::move(s));
        }
      if (sums != weight_set(tp.product))
        throw Rejection("weights of a tensor product are not the sums of the factor weights",
                        c.object(tp.product).module.id());
    }
    return make_weight_monoid(h.size(), std::move(gens), to_long(den));
  }

  bool in_cone(const WeightMonoid &a, const IntVector &b)
  {
    // Farkas: b lies outside iff some l has l(g) >= 0 on generators and l(b) <= -1.
    std::vector<Inequality> sys;
    for (const auto &g : a.generators)
      sys.push_back({to_qvector(g), Rational(0)});
    IntVector nb;
    for (long x : b)
      nb.push_back(-x);
    sys.push_back({to_qvector(nb), Rational(1)});
    return !feasible_point(sys, a.rank).has_value();
  }

  std::optional<IntVector> representation(const WeightMonoid &a, const IntVector &b, unsigned max_total)
  {
    const std::size_t m = a.generators.size();
    if (std::all_of(b.begin(), b.end(), [](long x) { return x == 0; }))
      return IntVector(m, 0);
    std::map<IntVector, IntVector> seen{{IntVector(a.rank, 0), IntVector(m, 0)}};
    std::vector<IntVector> frontier{IntVector(a.rank, 0)};
    constexpr std::size_t kMaxStates = 200000;
    for (unsigned t = 1; t <= max_total && !frontier.empty(); ++t)
    {
      std::vector<IntVector> next;
      for (const auto &v : frontier)
        for (std::size_t i = 0; i < m; ++i)
        {
          IntVector w = v;
          for (std::size_t k = 0; k < a.rank; ++k)
            w[k] += a.generators[i][k];
          if (seen.count(w))
            continue;
          IntVector coeff = seen.at(v);
          ++coeff[i];
          if (w == b)
            return coeff;
          seen.emplace(w, std::move(coeff));
          next.push_back(std::move(w));
          if (seen.size() > kMaxStates)
            return std::nullopt;
        }
      frontier = std::move(next);
    }
    return std::nullopt;
  }

  bool is_saturated(const WeightMonoid &a, long bound)
  {
    const std::size_t r = a.rank;
    if (r == 0)
      return true;
    IntVector b(r, -bound);
    while (true)
    {
      if (in_lattice(a.generators, b) && in_cone(a, b)
          && !representation(a, b, static_cast<unsigned>(4 * bound * static_cast<long>(r) + 4)))
        return false;
      std::size_t k = 0;
      while (k < r && b[k] == bound)
        b[k++] = -bound;
      if (k == r)
        return true;
      ++b[k];
    }
  }

  //------------------------------------------------------------------------------
  // Faces
  //------------------------------------------------------------------------------

  std::optional<std::size_t> FaceLattice::find(const std::vector<std::size_t> &members) const
  {
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (faces[i].members == members)
        return i;
    return std::nullopt;
  }

  bool FaceLattice::contains(std::size_t outer, std::size_t inner) const
  {
    const auto &o = faces.at(outer).members;
    const auto &i = faces.at(inner).members;
    return std::includes(o.begin(), o.end(), i.begin(), i.end());
  }

  std::size_t FaceLattice::meet(std::size_t f, std::size_t g) const
  {
    const auto &a = faces.at(f).members;
    const auto &b = faces.at(g).members;
    std::vector<std::size_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    const auto idx = find(common);
    if (!idx)
      throw std::logic_error("face lattice is not closed under intersection");
    return *idx;
  }

  FaceLattice faces(const WeightMonoid &a, const FaceOptions &options)
  {
    const std::size_t m = a.generators.size(), r = a.rank;
    if (m > options.max_generators)
      throw InputError("faces: " + std::to_string(m) + " generators exceed the cap of "
                       + std::to_string(options.max_generators));
    if (r > options.max_rank)
      throw InputError("faces: rank " + std::to_string(r) + " exceeds the cap of " + std::to_string(options.max_rank));
    FaceLattice l;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
    {
      std::vector<std::size_t> members;
      std::vector<QVector> inside;
      std::vector<const IntVector *> outside;
      for (std::size_t i = 0; i < m; ++i)
      {
        if (mask >> i & 1U)
        {
          members.push_back(i);
          inside.push_back(to_qvector(a.generators[i]));
        }
        else
          outside.push_back(&a.generators[i]);
      }
      if (outside.empty())
      {
        l.faces.push_back({members, zero_vector(r)});
        continue;
      }
      const auto kernel = inside.empty() ? QMatrix::identity(r).columns() : kernel_basis(QMatrix::from_rows(inside, r));
      if (kernel.empty())
        continue;
      std::vector<Inequality> sys;
      for (const auto *g : outside)
      {
        QVector row;
        for (const auto &k : kernel)
          row.push_back(qdot(k, *g));
        sys.push_back({std::move(row), Rational(1)});
      }
      const auto t = feasible_point(sys, kernel.size());
      if (!t)
        continue;
      QVector ell = zero_vector(r);
      for (std::size_t j = 0; j < kernel.size(); ++j)
        ell = ell + (*t)[j] * kernel[j];
      l.faces.push_back({std::move(members), std::move(ell)});
    }
    std::sort(l.faces.begin(), l.faces.end(), [](const Face &x, const Face &y) {
      if (x.members.size() != y.members.size())
        return x.members.size() < y.members.size();
      return x.members < y.members;
    });
    l.pointed = !l.faces.empty() && l.faces.front().members.empty();
    return l;
  }

  //------------------------------------------------------------------------------
  // Points
  //------------------------------------------------------------------------------

  bool is_valid_point(const WeightMonoid &a, const FaceLattice &l, const AtildePoint &p)
  {
    if (p.values.size() != a.generators.size())
      return false;
    const auto s = support(p);
    if (!l.find(s))
      return false;
    std::vector<IntVector> cols;
    std::vector<Rational> vals;
    for (auto i : s)
    {
      cols.push_back(a.generators[i]);
      vals.push_back(p.values[i]);
    }
    return relations_hold(integer_kernel(cols, a.rank), vals);
  }

  AtildePoint multiply(const AtildePoint &p, const AtildePoint &q)
  {
    if (p.values.size() != q.values.size())
      throw InputError("multiply: points of different length");
    AtildePoint r;
    for (std::size_t i = 0; i < p.values.size(); ++i)
      r.values.push_back(p.values[i] * q.values[i]);
    return r;
  }

  Rational evaluate(const AtildePoint &p, const IntVector &coefficients)
  {
    Rational r = 1;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
    {
      if (coefficients[i] < 0)
        throw InputError("evaluate: negative coefficient");
      r *= rational_pow(p.values.at(i), coefficients[i]);
    }
    return r;
  }

  Rational evaluate_weight(const WeightMonoid &a, const AtildePoint &p, const IntVector &weight)
  {
    const auto c = representation(a, weight);
    if (!c)
    {
      std::string w;
      for (long x : weight)
        w += (w.empty() ? "" : ",") + std::to_string(x);
      throw Rejection("weight is not representable in the weight monoid", "(" + w + ")");
    }
    return evaluate(p, *c);
  }

  AtildePoint idempotent_of_face(const WeightMonoid &a, const FaceLattice &l, std::size_t face)
  {
    AtildePoint p{QVector(a.generators.size(), Rational(0))};
    for (auto i : l.faces.at(face).members)
      p.values[i] = 1;
    return p;
  }

  AtildePoint torus_point(const WeightMonoid &a, const FaceLattice &l, std::size_t face, const QVector &s)
  {
    if (s.size() != a.rank)
      throw InputError("torus_point: parameter of wrong rank");
    AtildePoint p{QVector(a.generators.size(), Rational(0))};
    for (auto i : l.faces.at(face).members)
    {
      Rational v = 1;
      for (std::size_t k = 0; k < a.rank; ++k)
        v *= rational_pow(s[k], a.generators[i][k]);
      p.values[i] = v;
    }
    return p;
  }

  std::optional<std::size_t> support_face(const FaceLattice &l, const AtildePoint &p)
  {
    return l.find(support(p));
  }

  std::optional<Factorization> factor_point(const WeightMonoid &a, const FaceLattice &l, const AtildePoint &p)
  {
    const auto f = support_face(l, p);
    if (!f || !is_valid_point(a, l, p))
      return std::nullopt;
    const std::size_t m = a.generators.size(), r = a.rank;
    const auto &members = l.faces[*f].members;

    // Integer covectors cutting out span(F).
    std::vector<QVector> face_rows;
    for (auto i : members)
      face_rows.push_back(to_qvector(a.generators[i]));
    const std::vector<QVector> ann =
        face_rows.empty() ? QMatrix::identity(r).columns() : kernel_basis(QMatrix::from_rows(face_rows, r));
    const std::size_t t = ann.size();

    // Rows [q(g_j) | e_j]; after reduction the rows with zero q-part span the tags landing in span(F).
    std::vector<ZRow> work;
    for (std::size_t j = 0; j < m; ++j)
    {
      ZRow row(t + m);
      for (std::size_t k = 0; k < t; ++k)
      {
        mpz_class den = 1;
        for (const auto &x : ann[k])
          mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        const Rational v = Rational(den) * qdot(ann[k], a.generators[j]);
        row[k] = v.get_num();
      }
      row[t + j] = 1;
      work.push_back(std::move(row));
    }
    const std::size_t rank = integer_echelon(work, t);

    std::vector<IntVector> face_gens;
    for (auto i : members)
      face_gens.push_back(a.generators[i]);
    QMatrix tags(m, m);
    std::vector<Rational> row_value(m, Rational(1));
    for (std::size_t i = 0; i < m; ++i)
    {
      IntVector weight(r, 0);
      for (std::size_t j = 0; j < m; ++j)
      {
        tags(i, j) = Rational(work[i][t + j]);
        const long c = to_long(work[i][t + j]);
        for (std::size_t k = 0; k < r; ++k)
          weight[k] += c * a.generators[j][k];
      }
      if (i < rank)
        continue;
      // The weight lies in span(F); d * weight lies in the face lattice for some d >= 1.
      std::optional<IntVector> coords;
      long d = 1;
      for (; d <= 64 && !coords; ++d)
      {
        IntVector scaled = weight;
        for (auto &x : scaled)
          x *= d;
        coords = lattice_coordinates(face_gens, scaled);
      }
      --d;
      if (!coords)
        return std::nullopt;
      Rational value = 1;
      for (std::size_t k = 0; k < members.size(); ++k)
        value *= rational_pow(p.values[members[k]], (*coords)[k]);
      const auto root = rational_root(value, d);
      if (!root)
        return std::nullopt;
      row_value[i] = *root;
    }
    const auto inv = inverse(tags);
    if (!inv)
      return std::nullopt;
    AtildePoint unit{QVector(m, Rational(1))};
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < m; ++i)
        if (sgn((*inv)(j, i)) != 0)
          unit.values[j] *= rational_pow(row_value[i], to_long((*inv)(j, i).get_num()));
    if (!is_valid_point(a, l, unit) || !(multiply(unit, idempotent_of_face(a, l, *f)) == p))
      return std::nullopt;
    return Factorization{std::move(unit), *f};
  }

  ToricReport toric_structure_report(const WeightMonoid &a, const FaceLattice &l, std::uint64_t seed,
                                     std::size_t samples)
  {
    ToricReport rep;
    const std::size_t m = a.generators.size();
    const std::size_t nf = l.faces.size();
    rep.face_count = nf;
    rep.pointed = l.pointed;

    std::vector<AtildePoint> idem;
    rep.idempotents_ok = true;
    for (std::size_t f = 0; f < nf; ++f)
    {
      idem.push_back(idempotent_of_face(a, l, f));
      rep.idempotents_ok = rep.idempotents_ok && is_valid_point(a, l, idem.back())
                           && multiply(idem.back(), idem.back()) == idem.back();
    }
    // Every 0/1 point of Hom(A, (Q, *)) is idempotent; these must be exactly the e(F).
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
    {
      AtildePoint p{QVector(m, Rational(0))};
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1U)
          p.values[i] = 1;
      if (is_valid_point(a, l, p))
      {
        ++rep.idempotent_count;
        rep.idempotents_ok = rep.idempotents_ok && std::find(idem.begin(), idem.end(), p) != idem.end();
      }
    }
    rep.idempotents_ok = rep.idempotents_ok && rep.idempotent_count == nf;

    rep.meet_ok = true;
    for (std::size_t f = 0; f < nf; ++f)
      for (std::size_t g = 0; g < nf; ++g)
        rep.meet_ok = rep.meet_ok && multiply(idem[f], idem[g]) == idem[l.meet(f, g)];

    // lambda_F = sum of the generators of F lies in the relative interior of F.
    std::vector<IntVector> interior;
    for (const auto &face : l.faces)
    {
      IntVector c(m, 0);
      for (auto i : face.members)
        c[i] = 1;
      interior.push_back(std::move(c));
    }
    rep.d_lambda_ok = true;
    for (std::size_t f = 0; f < nf; ++f)
      for (std::size_t g = 0; g < nf; ++g)
        rep.d_lambda_ok = rep.d_lambda_ok && ((sgn(evaluate(idem[g], interior[f])) != 0) == l.contains(g, f));

    const std::size_t full = nf - 1;
    rep.unit_group_ok = nf > 0 && l.faces[full].members.size() == m;
    for (std::size_t f = 0; f + 1 < nf; ++f)
      rep.unit_group_ok = rep.unit_group_ok && support(idem[f]).size() < m;

    Rng rng(seed);
    rep.factorization_ok = true;
    for (std::size_t f = 0; f < nf; ++f)
      for (std::size_t k = 0; k < samples; ++k)
      {
        QVector s;
        for (std::size_t j = 0; j < a.rank; ++j)
          s.push_back(rng.nonzero_rational(5, 3));
        const AtildePoint p = torus_point(a, l, f, s);
        ++rep.samples;
        const auto fac = factor_point(a, l, p);
        rep.factorization_ok = rep.factorization_ok && is_valid_point(a, l, p) && fac && fac->face == f
                               && support(fac->unit).size() == m;
        for (std::size_t g = 0; g < nf; ++g)
          rep.d_lambda_ok = rep.d_lambda_ok && ((sgn(evaluate(p, interior[g])) != 0) == l.contains(f, g));
        if (f == full)
        {
          AtildePoint inv;
          for (const auto &v : p.values)
            inv.values.push_back(1 / v);
          rep.unit_group_ok = rep.unit_group_ok && is_valid_point(a, l, inv) && multiply(p, inv) == idem[full];
        }
      }

    long bound = 1;
    for (const auto &g : a.generators)
      for (long x : g)
        bound = std::max(bound, std::labs(x));
    rep.saturated = is_saturated(a, std::min(bound, 3L));
    if (!rep.saturated)
      rep.warnings.push_back("weight monoid is not saturated; faces describe its cone");
    return rep;
  }

  NatFamily torus_action_family(const CategoryClosure &c, const std::vector<QVector> &h, const WeightMonoid &a,
                                const AtildePoint &alpha)
  {
    const auto dec = closure_weights(c, h);
    NatFamily fam;
    for (std::size_t i = 0; i < c.size(); ++i)
    {
      const std::size_t n = c.object(i).module.dim();
      if (n == 0)
      {
        fam.entries.emplace_back(0, 0);
        continue;
      }
      std::vector<QVector> cols;
      QVector diag;
      for (const auto &[w, space] : dec[i].spaces)
      {
        IntVector iw;
        for (const auto &x : w)
        {
          const Rational y = x * a.denominator;
          if (y.get_den() != 1)
            throw Rejection("weight is not integral for the monoid denominator", c.object(i).module.id());
          iw.push_back(to_long(y.get_num()));
        }
        const Rational value = evaluate_weight(a, alpha, iw);
        for (const auto &v : space)
        {
          cols.push_back(v);
          diag.push_back(value);
        }
      }
      const QMatrix b = QMatrix::from_columns(cols, n);
      fam.entries.push_back(b * QMatrix::diagonal(diag) * *inverse(b));
    }
    return fam;
  }

} // namespace tforge
