#include "tforge/io.hpp"

#include "tforge/errors.hpp"

#include <fstream>
#include <sstream>

namespace tforge::io
{

  namespace
  {
    [[noreturn]] void fail(const std::string &where, const std::string &what)
    {
      throw InputError(where + ": " + what);
    }

    const Json &field(const Json &j, const char *key, const std::string &where)
    {
      if (!j.is_object())
        fail(where, "expected an object");
      const auto it = j.find(key);
      if (it == j.end())
        fail(where, std::string("missing field \"") + key + "\"");
      return *it;
    }

    std::size_t size_from_json(const Json &j, const std::string &where)
    {
      if (!j.is_number_integer() || j.get<long long>() < 0)
        fail(where, "expected a nonnegative integer");
      return j.get<std::size_t>();
    }

    long integer_from_json(const Json &j, const std::string &where)
    {
      if (!j.is_number_integer())
        fail(where, "expected an integer");
      return j.get<long>();
    }

    std::size_t basis_index(const Json &j, const LieAlgebra &g, const std::string &where)
    {
      if (j.is_string())
      {
        const auto &names = g.basis_names();
        for (std::size_t i = 0; i < names.size(); ++i)
          if (names[i] == j.get<std::string>())
            return i;
        fail(where, "unknown basis element \"" + j.get<std::string>() + "\"");
      }
      const std::size_t i = size_from_json(j, where);
      if (i >= g.dim())
        fail(where, "basis index out of range");
      return i;
    }
  } // namespace

  Json parse_text(const std::string &text, const std::string &source)
  {
    try
    {
      return Json::parse(text);
    }
    catch (const Json::parse_error &e)
    {
      std::size_t line = 1, column = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
      {
        if (text[i] == '\n')
        {
          ++line;
          column = 1;
        }
        else
          ++column;
      }
      throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
    }
  }

  Json parse_file(const std::string &path)
  {
    std::ifstream in(path);
    if (!in)
      throw InputError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
  }

  std::string canonical_dump(const Json &j)
  {
    return j.dump(2) + "\n";
  }

  Json with_schema(Json report)
  {
    report["schema"] = kSchema;
    return report;
  }

  Json to_json(const Rational &q)
  {
    return to_string(q);
  }

  Rational rational_from_json(const Json &j, const std::string &where)
  {
    if (j.is_number_integer())
      return Rational(mpz_class(std::to_string(j.get<long long>())));
    if (!j.is_string())
      fail(where, "expected a rational as \"p/q\" or an integer");
    try
    {
      return parse_rational(j.get<std::string>());
    }
    catch (const std::invalid_argument &)
    {
      fail(where, "malformed rational \"" + j.get<std::string>() + "\"");
    }
  }

  Json to_json(const QVector &v)
  {
    Json out = Json::array();
    for (const auto &x : v)
      out.push_back(to_json(x));
    return out;
  }

  QVector vector_from_json(const Json &j, const std::string &where, std::size_t expected_size)
  {
    if (!j.is_array())
      fail(where, "expected an array");
    if (j.size() != expected_size)
      fail(where, "expected " + std::to_string(expected_size) + " entries, got " + std::to_string(j.size()));
    QVector v;
    for (std::size_t i = 0; i < j.size(); ++i)
      v.push_back(rational_from_json(j[i], where + "/" + std::to_string(i)));
    return v;
  }

  Json to_json(const QMatrix &m)
  {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
      out.push_back(to_json(m.row(i)));
    return out;
  }

  QMatrix matrix_from_json(const Json &j, const std::string &where)
  {
    if (!j.is_array())
      fail(where, "expected an array of rows");
    if (j.empty())
      return {};
    if (!j[0].is_array())
      fail(where + "/0", "expected a row array");
    const std::size_t cols = j[0].size();
    QMatrix m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r)
    {
      const QVector row = vector_from_json(j[r], where + "/" + std::to_string(r), cols);
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) = row[c];
    }
    return m;
  }

  Json algebra_to_json(const LieAlgebra &g)
  {
    Json brackets = Json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = i + 1; j < g.dim(); ++j)
        if (!is_zero(g.structure(i, j)))
          brackets.push_back({{"i", g.basis_names()[i]}, {"j", g.basis_names()[j]}, {"value", to_json(g.structure(i, j))}});
    return {{"dim", g.dim()}, {"basis", g.basis_names()}, {"brackets", brackets}};
  }

  LieAlgebra algebra_from_json(const Json &j, const std::string &where)
  {
    const std::size_t dim = size_from_json(field(j, "dim", where), where + ":/dim");
    const Json &basis = field(j, "basis", where);
    if (!basis.is_array() || basis.size() != dim)
      fail(where + ":/basis", "expected " + std::to_string(dim) + " basis names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i)
    {
      if (!basis[i].is_string())
        fail(where + ":/basis/" + std::to_string(i), "expected a string");
      names.push_back(basis[i].get<std::string>());
      for (std::size_t k = 0; k < i; ++k)
        if (names[k] == names[i])
          fail(where + ":/basis/" + std::to_string(i), "duplicate basis name \"" + names[i] + "\"");
    }
    const LieAlgebra empty = LieAlgebra::with_basis(names);
    const auto it = j.find("brackets");
    if (it == j.end())
      return empty;
    if (!it->is_array())
      fail(where + ":/brackets", "expected an array");
    std::vector<std::vector<QVector>> table(dim, std::vector<QVector>(dim, zero_vector(dim)));
    std::vector<std::vector<char>> seen(dim, std::vector<char>(dim, 0));
    for (std::size_t k = 0; k < it->size(); ++k)
    {
      const std::string w = where + ":/brackets/" + std::to_string(k);
      const Json &b = (*it)[k];
      const std::size_t i = basis_index(field(b, "i", w), empty, w + "/i");
      const std::size_t jj = basis_index(field(b, "j", w), empty, w + "/j");
      const QVector value = vector_from_json(field(b, "value", w), w + "/value", dim);
      if (seen[i][jj])
        fail(w, "pair listed twice");
      seen[i][jj] = 1;
      table[i][jj] = value;
      // An explicitly listed reverse pair is kept as given, so validation can see asymmetry.
      if (!seen[jj][i])
        table[jj][i] = Rational(-1) * value;
    }
    return LieAlgebra(names, std::move(table));
  }

  Json module_to_json(const Module &v)
  {
    Json action = Json::object();
    for (std::size_t i = 0; i < v.action().size(); ++i)
      action[v.algebra().basis_names()[i]] = to_json(v.action(i));
    return {{"id", v.id()}, {"dim", v.dim()}, {"action", action}};
  }

  RawModule raw_module_from_json(const Json &j, const LieAlgebra &g, const std::string &where)
  {
    RawModule m;
    const Json &id = field(j, "id", where);
    if (!id.is_string() || id.get<std::string>().empty())
      fail(where + "/id", "expected a nonempty string");
    m.id = id.get<std::string>();
    const std::size_t dim = size_from_json(field(j, "dim", where), where + "/dim");
    m.action.assign(g.dim(), QMatrix(dim, dim));
    const Json &action = field(j, "action", where);
    if (!action.is_object())
      fail(where + "/action", "expected an object keyed by basis names");
    for (const auto &[name, mat] : action.items())
    {
      const std::size_t i = basis_index(Json(name), g, where + "/action");
      const QMatrix a = matrix_from_json(mat, where + "/action/" + name);
      if (a.rows() != dim || a.cols() != dim)
        fail(where + "/action/" + name, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
      m.action[i] = a;
    }
    return m;
  }

  std::vector<RawModule> raw_modules_from_json(const Json &j, const LieAlgebra &g, const std::string &where)
  {
    if (j.is_object() && j.contains("modules"))
    {
      const Json &list = j["modules"];
      if (!list.is_array())
        fail(where + ":/modules", "expected an array");
      std::vector<RawModule> out;
      for (std::size_t i = 0; i < list.size(); ++i)
        out.push_back(raw_module_from_json(list[i], g, where + ":/modules/" + std::to_string(i)));
      return out;
    }
    return {raw_module_from_json(j, g, where + ":")};
  }

  Json dual_to_json(const TruncatedDual &h, const LieAlgebra &g)
  {
    Json terms = Json::array();
    for (const auto &[e, c] : h.terms())
    {
      Json exp = Json::object();
      for (auto i : e.support())
        exp[g.basis_names()[i]] = e[i];
      terms.push_back({{"exp", exp}, {"coeff", to_json(c)}});
    }
    return {{"bound", h.bound()}, {"terms", terms}};
  }

  TruncatedDual dual_from_json(const Json &j, const LieAlgebra &g, const std::string &where)
  {
    const unsigned bound = static_cast<unsigned>(size_from_json(field(j, "bound", where), where + "/bound"));
    TruncatedDual h(g.dim(), bound);
    const Json &terms = field(j, "terms", where);
    if (!terms.is_array())
      fail(where + "/terms", "expected an array");
    for (std::size_t k = 0; k < terms.size(); ++k)
    {
      const std::string w = where + "/terms/" + std::to_string(k);
      const Json &exp = field(terms[k], "exp", w);
      if (!exp.is_object())
        fail(w + "/exp", "expected an object");
      std::vector<unsigned> e(g.dim(), 0);
      for (const auto &[name, power] : exp.items())
        e[basis_index(Json(name), g, w + "/exp")] = static_cast<unsigned>(size_from_json(power, w + "/exp/" + name));
      const MultiIndex mi(e);
      if (mi.degree() > bound)
        fail(w, "exponent degree exceeds the bound");
      h.add(mi, rational_from_json(field(terms[k], "coeff", w), w + "/coeff"));
    }
    return h;
  }

  Json family_to_json(const CategoryClosure &c, const NatFamily &f)
  {
    Json out = Json::object();
    for (std::size_t i = 0; i < c.size(); ++i)
      out[c.object(i).module.id()] = to_json(f.entries.at(i));
    return out;
  }

  NatFamily family_from_json(const Json &j, const CategoryClosure &c, const std::string &where)
  {
    if (!j.is_object())
      fail(where, "expected an object keyed by object id");
    NatFamily f;
    for (const auto &o : c.objects())
    {
      const auto it = j.find(o.module.id());
      if (it == j.end())
        fail(where, "no entry for object \"" + o.module.id() + "\"");
      const QMatrix m = matrix_from_json(*it, where + "/" + o.module.id());
      const std::size_t d = o.module.dim();
      if (d == 0 ? !(m.rows() == 0) : (m.rows() != d || m.cols() != d))
        fail(where + "/" + o.module.id(), "expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
      f.entries.push_back(d == 0 ? QMatrix(0, 0) : m);
    }
    for (const auto &[key, _] : j.items())
      if (!c.find(key))
        fail(where, "unknown object \"" + key + "\"");
    return f;
  }

  Json monoid_to_json(const WeightMonoid &a)
  {
    return {{"rank", a.rank}, {"generators", a.generators}, {"relations", a.relations}, {"denominator", a.denominator}};
  }

  WeightMonoid monoid_from_json(const Json &j, const std::string &where)
  {
    const std::size_t rank = size_from_json(field(j, "rank", where), where + "/rank");
    const Json &gens = field(j, "generators", where);
    if (!gens.is_array())
      fail(where + "/generators", "expected an array");
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
    {
      const std::string w = where + "/generators/" + std::to_string(i);
      if (!gens[i].is_array() || gens[i].size() != rank)
        fail(w, "expected " + std::to_string(rank) + " integers");
      IntVector g;
      for (std::size_t k = 0; k < rank; ++k)
        g.push_back(integer_from_json(gens[i][k], w + "/" + std::to_string(k)));
      out.push_back(std::move(g));
    }
    return make_weight_monoid(rank, std::move(out));
  }

} // namespace tforge::io
