#include "tforge/cli.hpp"

#include "tforge/errors.hpp"
#include "tforge/io.hpp"
#include "tforge/jordan.hpp"
#include "tforge/nilgrp.hpp"
#include "tforge/oneparam.hpp"
#include "tforge/tannaka.hpp"
#include "tforge/toric.hpp"
#include "tforge/uea.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <ostream>

namespace tforge::cli
{

  namespace
  {
    using io::Json;

    struct Settings
    {
      std::string algebra;
      std::vector<std::string> modules;
      std::string input;
      std::string out;
      unsigned depth = 2;
      unsigned degree = 6;
      std::uint64_t seed = 1;
      bool duals = false;
    };

    struct Workspace
    {
      AlgebraPtr algebra;
      std::vector<Module> modules;
    };

    AlgebraPtr load_algebra(const Settings &s)
    {
      if (s.algebra.empty())
        throw InputError("--algebra is required");
      auto g = std::make_shared<const LieAlgebra>(io::algebra_from_json(io::parse_file(s.algebra), s.algebra));
      const AxiomViolations v = validate(*g);
      if (!v.ok())
        throw InputError(s.algebra + ": structure constants violate the Lie algebra axioms (run validate)");
      return g;
    }

    Workspace load_workspace(const Settings &s, bool need_modules = true)
    {
      Workspace w{load_algebra(s), {}};
      for (const auto &path : s.modules)
        for (auto &raw : io::raw_modules_from_json(io::parse_file(path), *w.algebra, path))
        {
          try
          {
            w.modules.push_back(Module::create(w.algebra, raw.id, std::move(raw.action)));
          }
          catch (const Rejection &r)
          {
            throw InputError(path + ": " + r.what() + " " + r.witness());
          }
        }
      if (need_modules && w.modules.empty())
        throw InputError("--modules is required");
      for (std::size_t i = 0; i < w.modules.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (w.modules[i].id() == w.modules[j].id())
            throw InputError("duplicate module id \"" + w.modules[i].id() + "\"");
      return w;
    }

    Json load_input(const Settings &s)
    {
      if (s.input.empty())
        throw InputError("--input is required");
      return io::parse_file(s.input);
    }

    CategoryClosure make_closure(const Settings &s, const Workspace &w)
    {
      ClosureOptions o;
      o.depth = s.depth;
      o.include_duals = s.duals;
      return build_closure(w.algebra, w.modules, o);
    }

    /// Coefficient array, or an object { basis name: rational } with omitted names zero.
    QVector element_from_json(const Json &j, const LieAlgebra &g, const std::string &where)
    {
      if (j.is_array())
        return io::vector_from_json(j, where, g.dim());
      if (!j.is_object())
        throw InputError(where + ": expected a coefficient array or an object keyed by basis names");
      QVector x = zero_vector(g.dim());
      for (const auto &[name, value] : j.items())
      {
        const auto &names = g.basis_names();
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
          throw InputError(where + ": unknown basis element \"" + name + "\"");
        x[static_cast<std::size_t>(it - names.begin())] = io::rational_from_json(value, where + "/" + name);
      }
      return x;
    }

    const Json &require(const Json &j, const char *key, const std::string &where)
    {
      if (!j.is_object() || !j.contains(key))
        throw InputError(where + ": missing field \"" + key + "\"");
      return j.at(key);
    }

    Json names_of(const LieAlgebra &g, const std::vector<std::array<std::size_t, 2>> &pairs)
    {
      Json out = Json::array();
      for (const auto &p : pairs)
        out.push_back({g.basis_names()[p[0]], g.basis_names()[p[1]]});
      return out;
    }

    /// A report plus whether the computation ended in a mathematical rejection.
    struct Outcome
    {
      Json report;
      bool rejected = false;
      std::string witness;
    };

    //------------------------------------------------------------------------------
    // Subcommands
    //------------------------------------------------------------------------------

    Outcome cmd_validate(const Settings &s)
    {
      if (s.algebra.empty())
        throw InputError("--algebra is required");
      const LieAlgebra g = io::algebra_from_json(io::parse_file(s.algebra), s.algebra);
      const AxiomViolations v = validate(g);
      Json jac = Json::array();
      for (const auto &t : v.jacobi)
        jac.push_back({g.basis_names()[t[0]], g.basis_names()[t[1]], g.basis_names()[t[2]]});
      Outcome o;
      o.report["algebra"] = {{"dim", g.dim()},
                             {"ok", v.ok()},
                             {"antisymmetry_violations", names_of(g, v.antisymmetry)},
                             {"jacobi_violations", jac}};
      bool ok = v.ok();
      if (!v.ok())
        o.witness = !v.antisymmetry.empty() ? "antisymmetry " + names_of(g, {v.antisymmetry.front()})[0].dump()
                                            : "jacobi " + jac[0].dump();
      Json mods = Json::array();
      for (const auto &path : s.modules)
        for (const auto &raw : io::raw_modules_from_json(io::parse_file(path), g, path))
        {
          const auto bad = check_module(g, raw.action);
          const std::size_t dim = raw.action.empty() ? 0 : raw.action.front().rows();
          mods.push_back({{"id", raw.id}, {"dim", dim}, {"ok", bad.empty()}, {"violations", names_of(g, bad)}});
          if (!bad.empty() && ok)
            o.witness = "module " + raw.id + " " + names_of(g, {bad.front()})[0].dump();
          ok = ok && bad.empty();
        }
      o.report["modules"] = mods;
      o.report["ok"] = ok;
      o.rejected = !ok;
      return o;
    }

    Json closure_json(const CategoryClosure &c)
    {
      Json objs = Json::array();
      for (const auto &obj : c.objects())
      {
        const auto &p = obj.provenance;
        Json e = {{"id", obj.module.id()}, {"dim", obj.module.dim()}, {"origin", to_string(p.origin)}};
        if (p.origin == ObjectOrigin::tensor || p.origin == ObjectOrigin::sum)
          e["factors"] = {c.object(p.left).module.id(), c.object(p.right).module.id()};
        if (p.origin == ObjectOrigin::dual || p.origin == ObjectOrigin::submodule)
          e["parent"] = c.object(p.left).module.id();
        if (!p.detail.empty())
          e["detail"] = p.detail;
        objs.push_back(std::move(e));
      }
      return objs;
    }

    Outcome cmd_closure(const Settings &s)
    {
      const Workspace w = load_workspace(s);
      const CategoryClosure c = make_closure(s, w);
      Json pairs = Json::array();
      for (const auto &tp : c.tensor_pairs())
        pairs.push_back({c.object(tp.left).module.id(), c.object(tp.right).module.id(), c.object(tp.product).module.id()});
      Outcome o;
      o.report = {{"depth", s.depth}, {"objects", closure_json(c)}, {"morphism_count", c.morphisms().size()},
                  {"tensor_pairs", pairs}};
      return o;
    }

    Outcome cmd_lie_m(const Settings &s)
    {
      const Workspace w = load_workspace(s);
      ClosureOptions opts;
      opts.depth = s.depth;
      opts.include_duals = s.duals;
      const LieMReport r = lie_m_report(w.algebra, w.modules, opts);
      Json basis = Json::array();
      for (const auto &f : r.basis)
        basis.push_back(io::family_to_json(r.closure, f));
      Json ids = Json::array();
      for (const auto &obj : r.closure.objects())
        ids.push_back(obj.module.id());
      // The image of g: which basis elements of the algebra give families in the solution span.
      bool image = true;
      for (std::size_t i = 0; i < w.algebra->dim(); ++i)
        image = image && in_family_span(r.basis, NatFamily::from_lie_element(r.closure, w.algebra->basis_vector(i)));
      Outcome o;
      o.report = {{"depth", r.depth},       {"lie_m_dim", r.dim}, {"stabilized", r.stabilized},
                  {"basis", basis},         {"objects", ids},     {"algebra_image_contained", image}};
      return o;
    }

    Outcome cmd_membership(const Settings &s)
    {
      const Workspace w = load_workspace(s);
      const CategoryClosure c = make_closure(s, w);
      const Json in = load_input(s);
      const Json &fam = in.is_object() && in.contains("family") ? in.at("family") : in;
      const NatFamily f = io::family_from_json(fam, c, s.input);
      const MembershipReport r = m_membership(c, f);
      Outcome o;
      o.report = {{"depth", s.depth}, {"certified", r.certified}, {"violations", r.violations}};
      o.rejected = !r.certified;
      if (!r.certified)
        o.witness = r.violations.front();
      return o;
    }

    Json classification_json(const Classification &c)
    {
      return {{"semisimple", c.semisimple},
              {"nilpotent", c.nilpotent},
              {"unipotent", c.unipotent},
              {"weak_locally_unipotent", c.weak_locally_unipotent}};
    }

    Outcome cmd_jordan(const Settings &s)
    {
      const Json in = load_input(s);
      const Json &mj = in.is_object() ? require(in, "matrix", s.input) : in;
      const QMatrix x = io::matrix_from_json(mj, s.input + ":/matrix");
      if (!x.is_square())
        throw InputError(s.input + ":/matrix: expected a square matrix");
      Outcome o;
      o.report["classification"] = classification_json(classify(x));
      if (in.is_object() && in.contains("idempotent"))
      {
        const QMatrix e = io::matrix_from_json(in.at("idempotent"), s.input + ":/idempotent");
        const MultiplicativeJC m = multiplicative_jc(x, e);
        o.report["e"] = io::to_json(m.e);
        o.report["s"] = io::to_json(m.s);
        o.report["u"] = io::to_json(m.u);
      }
      else
      {
        const AdditiveJC a = additive_jc(x);
        o.report["s"] = io::to_json(a.s);
        o.report["n"] = io::to_json(a.n);
        o.report["s_poly"] = io::to_json(QVector(a.s_poly.coeffs()));
      }
      return o;
    }

    Outcome cmd_exp(const Settings &s)
    {
      const Workspace w = load_workspace(s);
      const CategoryClosure c = make_closure(s, w);
      const Json in = load_input(s);
      Outcome o;
      o.report["depth"] = s.depth;
      if (in.contains("element"))
      {
        const QVector x = element_from_json(in.at("element"), *w.algebra, s.input + ":/element");
        const Rational t = in.contains("t") ? io::rational_from_json(in.at("t"), s.input + ":/t") : Rational(1);
        const UnipotentParam p = certify_unipotent(c, x);
        const NatFamily f = exp_family(c, p, t);
        const MembershipReport r = m_membership(c, f);
        o.report["element"] = io::to_json(x);
        o.report["t"] = io::to_json(t);
        o.report["family"] = io::family_to_json(c, f);
        o.report["certified"] = r.certified;
        if (!r.certified)
        {
          o.rejected = true;
          o.witness = r.violations.front();
        }
      }
      if (in.contains("params"))
      {
        // params: { id: { "kind": "unipotent" | "torus", "element": ... } }; words: [[{param_id, value}]]
        const Json &params = in.at("params");
        if (!params.is_object())
          throw InputError(s.input + ":/params: expected an object");
        std::vector<std::string> ids;
        std::vector<OneParam> ps;
        for (const auto &[id, spec] : params.items())
        {
          const std::string where = s.input + ":/params/" + id;
          const QVector x = element_from_json(require(spec, "element", where), *w.algebra, where + "/element");
          const Json &kind = require(spec, "kind", where);
          if (kind == "unipotent")
            ps.emplace_back(certify_unipotent(c, x));
          else if (kind == "torus")
            ps.emplace_back(certify_torus(c, x));
          else
            throw InputError(where + "/kind: expected \"unipotent\" or \"torus\"");
          ids.push_back(id);
        }
        const Json &words = require(in, "words", s.input);
        if (!words.is_array())
          throw InputError(s.input + ":/words: expected an array of words");
        std::vector<Word> ws;
        for (std::size_t k = 0; k < words.size(); ++k)
        {
          const std::string where = s.input + ":/words/" + std::to_string(k);
          if (!words[k].is_array())
            throw InputError(where + ": expected an array of letters");
          Word word;
          for (std::size_t l = 0; l < words[k].size(); ++l)
          {
            const std::string lw = where + "/" + std::to_string(l);
            const Json &pid = require(words[k][l], "param_id", lw);
            const auto it = pid.is_string() ? std::find(ids.begin(), ids.end(), pid.get<std::string>()) : ids.end();
            if (it == ids.end())
              throw InputError(lw + "/param_id: unknown parameter");
            word.push_back({static_cast<std::size_t>(it - ids.begin()),
                            io::rational_from_json(require(words[k][l], "value", lw), lw + "/value")});
          }
          ws.push_back(std::move(word));
        }
        Json out = Json::array();
        for (std::size_t k = 0; k < ws.size(); ++k)
        {
          Json letters = Json::array();
          for (const auto &l : ws[k])
            letters.push_back({{"param_id", ids[l.param]}, {"value", io::to_json(l.value)}});
          const auto fam = generate_ME(c, ps, {ws[k]}, true);
          out.push_back({{"word", letters}, {"family", io::family_to_json(c, fam.front())}});
        }
        o.report["words"] = out;
      }
      if (!o.report.contains("family") && !o.report.contains("words"))
        throw InputError(s.input + ": expected \"element\" or \"params\" with \"words\"");
      return o;
    }

    Outcome cmd_torus(const Settings &s)
    {
      const Workspace w = load_workspace(s);
      const CategoryClosure c = make_closure(s, w);
      const Json in = load_input(s);
      const QVector h = element_from_json(require(in, "element", s.input), *w.algebra, s.input + ":/element");
      const Rational v = in.contains("s") ? io::rational_from_json(in.at("s"), s.input + ":/s") : Rational(2);
      if (sgn(v) == 0)
        throw InputError(s.input + ":/s: must be nonzero");
      const TorusParam t = certify_torus(c, h);
      const NatFamily f = torus_family(c, t, v);
      const MembershipReport r = m_membership(c, f);
      Json ev = Json::object();
      for (std::size_t i = 0; i < c.size(); ++i)
        ev[c.object(i).module.id()] = t.eigendata[i].eigenvalues;
      Outcome o;
      o.report = {{"depth", s.depth},
                  {"element", io::to_json(h)},
                  {"s", io::to_json(v)},
                  {"eigenvalues", ev},
                  {"eigenvalue_monoid", {{"generators", t.eigenvalue_monoid.generators()}, {"is_group", t.eigenvalue_monoid.is_group()}}},
                  {"family", io::family_to_json(c, f)},
                  {"certified", r.certified}};
      if (!r.certified)
      {
        o.rejected = true;
        o.witness = r.violations.front();
      }
      return o;
    }

    Outcome cmd_bch(const Settings &s)
    {
      const Workspace w = load_workspace(s, false);
      const LieAlgebra &g = *w.algebra;
      const Json in = load_input(s);
      Subalgebra n = Subalgebra::whole(g);
      if (in.contains("subalgebra"))
      {
        const Json &span = in.at("subalgebra");
        if (!span.is_array())
          throw InputError(s.input + ":/subalgebra: expected an array of elements");
        std::vector<QVector> vs;
        for (std::size_t i = 0; i < span.size(); ++i)
          vs.push_back(element_from_json(span[i], g, s.input + ":/subalgebra/" + std::to_string(i)));
        if (!is_bracket_closed(g, vs))
          throw InputError(s.input + ":/subalgebra: span is not closed under the bracket");
        n = make_subalgebra(g, vs);
      }
      const BCHGroup grp(std::move(n));
      const QVector x = element_from_json(require(in, "x", s.input), g, s.input + ":/x");
      const QVector y = element_from_json(require(in, "y", s.input), g, s.input + ":/y");
      if (!grp.contains(x) || !grp.contains(y))
        throw InputError(s.input + ": x and y must lie in the nilpotent subalgebra");
      Outcome o;
      o.report = {{"x", io::to_json(x)},
                  {"y", io::to_json(y)},
                  {"result", io::to_json(grp.bch(x, y))},
                  {"nilpotency_class", grp.nilpotency_class()}};
      if (!w.modules.empty())
      {
        const CategoryClosure c = make_closure(s, w);
        const bool ok = exp_compat_check(grp, c, x, y);
        o.report["depth"] = s.depth;
        o.report["exp_compatible"] = ok;
        o.rejected = !ok;
        o.witness = ok ? "" : "exp(rho(x*y)) != exp(rho(x)) exp(rho(y))";
      }
      return o;
    }

    Outcome cmd_toric_faces(const Settings &s)
    {
      const Json in = load_input(s);
      WeightMonoid a;
      Outcome o;
      if (in.contains("h"))
      {
        const Workspace w = load_workspace(s);
        const CategoryClosure c = make_closure(s, w);
        const Json &hj = in.at("h");
        if (!hj.is_array())
          throw InputError(s.input + ":/h: expected an array of elements");
        std::vector<QVector> h;
        for (std::size_t i = 0; i < hj.size(); ++i)
          h.push_back(element_from_json(hj[i], *w.algebra, s.input + ":/h/" + std::to_string(i)));
        a = weight_monoid(c, h);
        o.report["depth"] = s.depth;
      }
      else
        a = io::monoid_from_json(in, s.input);
      const FaceLattice l = faces(a);
      const ToricReport r = toric_structure_report(a, l, s.seed);
      Json fs = Json::array();
      for (std::size_t f = 0; f < l.faces.size(); ++f)
      {
        Json gens = Json::array();
        for (auto i : l.faces[f].members)
          gens.push_back(a.generators[i]);
        Json contained = Json::array();
        for (std::size_t g = 0; g < l.faces.size(); ++g)
          if (g != f && l.contains(f, g))
            contained.push_back(g);
        fs.push_back({{"index", f},
                      {"generators", gens},
                      {"witness", io::to_json(l.faces[f].witness)},
                      {"idempotent", io::to_json(idempotent_of_face(a, l, f).values)},
                      {"contains", contained}});
      }
      o.report["monoid"] = io::monoid_to_json(a);
      o.report["faces"] = fs;
      o.report["pointed"] = l.pointed;
      o.report["report"] = {{"face_count", r.face_count},
                            {"idempotent_count", r.idempotent_count},
                            {"idempotents_ok", r.idempotents_ok},
                            {"meet_ok", r.meet_ok},
                            {"factorization_ok", r.factorization_ok},
                            {"unit_group_ok", r.unit_group_ok},
                            {"d_lambda_ok", r.d_lambda_ok},
                            {"saturated", r.saturated},
                            {"samples", r.samples},
                            {"warnings", r.warnings}};
      if (!r.ok())
      {
        o.rejected = true;
        o.witness = "toric structure checks failed";
      }
      return o;
    }

    Outcome cmd_peter_weyl(const Settings &s)
    {
      const Workspace w = load_workspace(s);
      const PeterWeylReport r = peter_weyl_check(w.modules, s.degree);
      Outcome o;
      o.report = {{"degree", r.degree},
                  {"expected_dim", r.expected_dim},
                  {"achieved_rank", r.achieved_rank},
                  {"previous_rank", r.previous_rank},
                  {"stabilized", r.stabilized},
                  {"success", r.success}};
      if (!r.success)
      {
        o.rejected = true;
        o.witness = "rank " + std::to_string(r.achieved_rank) + " of expected " + std::to_string(r.expected_dim);
      }
      return o;
    }

    Outcome cmd_mc(const Settings &s)
    {
      const Workspace w = load_workspace(s);
      const Json in = load_input(s);
      const Module *v = &w.modules.front();
      if (in.contains("module"))
      {
        const Json &id = in.at("module");
        v = nullptr;
        for (const auto &m : w.modules)
          if (id.is_string() && m.id() == id.get<std::string>())
            v = &m;
        if (v == nullptr)
          throw InputError(s.input + ":/module: unknown module");
      }
      const QVector phi = io::vector_from_json(require(in, "covector", s.input), s.input + ":/covector", v->dim());
      const QVector x = io::vector_from_json(require(in, "vector", s.input), s.input + ":/vector", v->dim());
      const TruncatedDual h = matrix_coefficient(*v, phi, x, s.degree);
      const auto val = valuation(h);
      Outcome o;
      o.report = {{"module", v->id()},
                  {"basis_order", w.algebra->basis_names()},
                  {"coefficient", io::dual_to_json(h, *w.algebra)},
                  {"valuation", val ? Json(*val) : Json(nullptr)}};
      return o;
    }

    void emit(const Settings &s, const std::string &text, std::ostream &out)
    {
      if (s.out.empty())
      {
        out << text;
        return;
      }
      std::ofstream f(s.out, std::ios::binary);
      if (!f)
        throw InputError(s.out + ": cannot open for writing");
      f << text;
    }
  } // namespace

  int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
  {
    CLI::App app{"Exact Tannaka reconstruction for Lie algebras", "tannaka-forge"};
    app.require_subcommand(1);
    Settings s;
    using Handler = Outcome (*)(const Settings &);
    const std::vector<std::tuple<const char *, const char *, Handler>> commands{
        {"validate", "Check Lie algebra axioms and module identities", cmd_validate},
        {"closure", "Build the category closure", cmd_closure},
        {"lie-m", "Solve for Lie(M) on the closure", cmd_lie_m},
        {"membership", "Certify a family as an element of M", cmd_membership},
        {"jordan", "Additive or multiplicative Jordan-Chevalley decomposition", cmd_jordan},
        {"exp", "exp(t x) families and products of one-parameter elements", cmd_exp},
        {"torus", "s^h families of a rationally diagonalizable element", cmd_torus},
        {"bch", "Baker-Campbell-Hausdorff product on a nilpotent subalgebra", cmd_bch},
        {"toric-faces", "Faces, idempotents and structure checks of a weight monoid", cmd_toric_faces},
        {"peter-weyl", "Peter-Weyl rank check for irreducible modules", cmd_peter_weyl},
        {"mc", "Matrix coefficient as a truncated element of U(g)*", cmd_mc},
    };
    std::string chosen;
    Handler handler = nullptr;
    for (const auto &[name, help, h] : commands)
    {
      CLI::App *sub = app.add_subcommand(name, help);
      sub->add_option("--algebra", s.algebra, "Lie algebra JSON");
      sub->add_option("--modules", s.modules, "Module JSON files")->expected(1, -1);
      sub->add_option("--input", s.input, "Command-specific JSON input");
      sub->add_option("--depth", s.depth, "Tensor depth of the closure")->check(CLI::Range(1U, 8U));
      sub->add_option("--degree", s.degree, "PBW truncation degree")->check(CLI::Range(0U, 16U));
      sub->add_option("--seed", s.seed, "Seed for sampled checks");
      sub->add_option("--out", s.out, "Write the report here instead of stdout");
      sub->add_flag("--duals", s.duals, "Include duals of the generators in the closure");
      sub->callback([&chosen, &handler, name = std::string(name), h = h] {
        chosen = name;
        handler = h;
      });
    }

    std::vector<std::string> argv_store{"tannaka-forge"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &a : argv_store)
      argv.push_back(a.data());
    try
    {
      app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError &e)
    {
      const int code = app.exit(e, out, err);
      return code == 0 ? kSuccess : kInputError;
    }

    auto header = [&](Json report) {
      report["command"] = chosen;
      report["seed"] = s.seed;
      return io::with_schema(std::move(report));
    };
    try
    {
      Outcome o = handler(s);
      Json report = header(std::move(o.report));
      report["status"] = o.rejected ? "rejected" : "ok";
      if (o.rejected)
        report["witness"] = o.witness;
      emit(s, io::canonical_dump(report), out);
      if (o.rejected)
        err << "rejected: " << o.witness << "\n";
      return o.rejected ? kRejected : kSuccess;
    }
    catch (const Rejection &r)
    {
      Json report = header({{"status", "rejected"}, {"error", r.what()}, {"witness", r.witness()}});
      try
      {
        emit(s, io::canonical_dump(report), out);
      }
      catch (const InputError &)
      {
      }
      err << "rejected: " << r.what() << (r.witness().empty() ? "" : " [" + r.witness() + "]") << "\n";
      return kRejected;
    }
    catch (const std::exception &e)
    {
      err << "input error: " << e.what() << "\n";
      return kInputError;
    }
  }

} // namespace tforge::cli
