#pragma once

// The hopflim command line tool. `run` parses arguments, writes one JSON
// report to `out`, and returns the process exit code, so the tool can be
// exercised in-process.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopflim/io.hpp"
#include "hopflim/testkit.hpp"
#include "hopflim/zoo.hpp"

namespace hopflim::cli {

using io::json;

struct Options {
  std::string file;
  std::string f, g, method = "remark1", level = "coalg";
  std::string objects;
  bool conilpotent = false;
  std::size_t degree = 0;
  std::string diagram;
  std::string object, phi, s;
  std::string recipe, output;
  std::string group = "Z2", field = "Q";
  std::size_t n = 2;
  std::string query;
  bool timings = false;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

inline const char* error_kind(const Error& e) {
  if (dynamic_cast<const AxiomError*>(&e)) return "axiom";
  if (dynamic_cast<const UnsupportedFragment*>(&e)) return "unsupported-fragment";
  if (dynamic_cast<const FieldMismatch*>(&e)) return "field-mismatch";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "dimension-mismatch";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const InternalConsistencyError*>(&e)) return "internal-consistency";
  if (dynamic_cast<const MalformedInput*>(&e)) return "malformed-input";
  return "parse";
}

template <class Obj>
json certificates(const std::vector<Morphism<Obj>>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_string(m.certificate));
  return out;
}

inline json closure_json(const ClosureReport& c) {
  return {{"mult_closed", c.mult_closed}, {"unit_in", c.unit_in}, {"antipode_stable", c.antipode_stable}};
}

inline json factor_index_json(const std::vector<std::pair<std::string, std::size_t>>& idx) {
  json out = json::array();
  for (const auto& [name, pos] : idx) out.push_back({{"name", name}, {"position", pos}});
  return out;
}

/// Runs fn<Obj>() with Obj chosen by a level name.
template <Field F, class Fn>
json at_level(const std::string& level, Fn&& fn) {
  switch (io::parse_level(level)) {
    case Certificate::coalgebra: return fn(std::type_identity<Coalgebra<F>>{});
    case Certificate::bialgebra: return fn(std::type_identity<Bialgebra<F>>{});
    case Certificate::hopf: return fn(std::type_identity<HopfAlgebra<F>>{});
    default: throw PreconditionError("level must be coalg, bialg or hopf");
  }
}

template <Field F>
json cmd_check(const io::Document<F>& doc, int& code) {
  json objs = json::array(), morphs = json::array();
  bool pass = true;
  for (const auto& o : doc.objects) {
    const auto& r = o.report();
    json rec{{"name", o.name}, {"level", io::level_name(o.level())}, {"dim", o.coalgebra.dim()}, {"pass", r.pass},
             {"cocommutative", o.coalgebra.cocommutative()}};
    if (!r.pass) {
      rec["identity"] = r.identity;
      if (r.basis_index) rec["basis_index"] = *r.basis_index;
      rec["message"] = "object '" + o.name + "': " + r.message();
      pass = false;
    }
    objs.push_back(rec);
  }
  for (const auto& m : doc.morphisms) {
    json rec{{"name", m.name}, {"level", io::level_name(m.level)}};
    Report r;
    if (m.level != Certificate::linear_only) {
      const auto& dom = doc.object(m.dom);
      const auto& cod = doc.object(*m.cod);
      if (!dom.report().pass || !cod.report().pass) {
        r = Report::fail("object axioms");
      } else {
        switch (m.level) {
          case Certificate::coalgebra: r = check_coalgebra_map(dom.coalgebra, cod.coalgebra, m.matrix); break;
          case Certificate::bialgebra:
            if (!dom.bialgebra || !cod.bialgebra) throw PreconditionError("morphism '" + m.name + "': objects lack mult");
            r = check_bialgebra_map(*dom.bialgebra, *cod.bialgebra, m.matrix);
            break;
          case Certificate::hopf:
            if (!dom.hopf || !cod.hopf) throw PreconditionError("morphism '" + m.name + "': objects lack an antipode");
            r = check_hopf_map(*dom.hopf, *cod.hopf, m.matrix);
            break;
          default: break;
        }
      }
    }
    rec["pass"] = r.pass;
    if (!r.pass) {
      rec["identity"] = r.identity;
      if (r.basis_index) rec["basis_index"] = *r.basis_index;
      pass = false;
    }
    morphs.push_back(rec);
  }
  code = pass ? 0 : static_cast<int>(ExitCode::axiom_violation);
  return {{"status", pass ? "pass" : "fail"}, {"field", doc.field.name()}, {"objects", objs}, {"morphisms", morphs}};
}

template <Field F>
json cmd_equalize(const io::Document<F>& doc, const Options& opt) {
  if (opt.method != "remark1" && opt.method != "theorem1" && opt.method != "both")
    throw PreconditionError("--method must be remark1, theorem1 or both");
  return at_level<F>(opt.level, [&](auto tag) {
    using Obj = typename decltype(tag)::type;
    auto f = io::morphism_at<Obj>(doc, opt.f);
    auto g = io::morphism_at<Obj>(doc, opt.g);
    auto method = opt.method == "theorem1" ? EqualizerMethod::theorem1 : EqualizerMethod::remark1;
    auto eq = equalize(f, g, method, opt.method == "both");
    json out{{"status", "ok"},
             {"method", opt.method},
             {"level", opt.level},
             {"dims", {{"domain", f.dom.dim()}, {"carrier", eq.carrier.carrier.dim()}}},
             {"carrier_basis", io::subspace_json(eq.carrier.carrier)},
             {"iterations", eq.carrier.iterations},
             {"certificates", {{"f", to_string(f.certificate)}, {"g", to_string(g.certificate)},
                               {"inclusion", to_string(eq.inclusion.certificate)}}}};
    if (opt.method == "both") out["methods_agree"] = eq.cross_checked;
    if (eq.closure) out["closure"] = closure_json(*eq.closure);
    return out;
  });
}

template <Field F>
json cmd_product(const io::Document<F>& doc, const Options& opt) {
  auto names = split(opt.objects, ',');
  if (opt.conilpotent) {
    if (opt.degree == 0) throw PreconditionError("--conilpotent needs --degree N with N >= 1");
    std::vector<CoaugmentedCoalgebra<F>> factors;
    for (const auto& n : names) factors.push_back(io::coaugmented_at(doc, n));
    auto p = product_conilpotent(factors, opt.degree, doc.field);
    return {{"status", "ok"},
            {"level", "coalg"},
            {"conilpotent", true},
            {"degree", opt.degree},
            {"dims", {{"cofree", p.cofree.dim()}, {"product", p.product.object.dim()}}},
            {"factor_index", factor_index_json(p.product.factor_index)},
            {"carrier_basis", io::subspace_json(p.carrier.carrier)},
            {"certificates", certificates(p.product.projections)}};
  }
  return at_level<F>(opt.level, [&](auto tag) {
    using Obj = typename decltype(tag)::type;
    std::vector<Obj> objs;
    for (const auto& n : names) objs.push_back(io::object_at<Obj>(doc, n));
    auto p = product_of(objs, doc.field);
    json out{{"status", "ok"},
             {"level", opt.level},
             {"dims", {{"product", p.object.dim()}}},
             {"factor_index", factor_index_json(p.factor_index)},
             {"certificates", certificates(p.projections)},
             {"cocommutative", p.object.cocommutative()}};
    if constexpr (level_of<Obj>() != Certificate::coalgebra) out["unit_mult_diagrams"] = p.unit_mult_diagrams;
    if constexpr (level_of<Obj>() == Certificate::hopf) {
      out["antipode_diagram"] = p.antipode_diagram;
      out["antipode_opcop_map"] = p.antipode_is_opcop_map;
      out["antipode_core_full"] = p.antipode_core_full;
    }
    return out;
  });
}

template <class Obj, Field F>
Diagram<Obj> build_diagram(const io::Document<F>& doc, const io::DiagramRecord& rec) {
  Diagram<Obj> d;
  for (const auto& o : rec.objects) d.add_object(o.name, io::object_at<Obj>(doc, o.object));
  for (const auto& a : rec.arrows) d.add_arrow(a.name, a.dom, a.cod, io::morphism_at<Obj>(doc, a.morphism));
  return d;
}

template <Field F>
json cmd_limit(const io::Document<F>& doc, const Options& opt) {
  const auto& rec = doc.diagram(opt.diagram);
  return at_level<F>(io::level_name(rec.level), [&](auto tag) {
    using Obj = typename decltype(tag)::type;
    auto d = build_diagram<Obj>(doc, rec);
    auto l = limit(d);
    json cone = json::array();
    for (std::size_t j = 0; j < l.cone.size(); ++j)
      cone.push_back({{"object", rec.objects[j].name}, {"certificate", to_string(l.cone[j].certificate)},
                      {"matrix", io::matrix_json(l.cone[j].matrix)}});
    json out{{"status", "ok"},
             {"level", io::level_name(rec.level)},
             {"dims",
              {{"objects_product", l.objects_product.object.dim()},
               {"arrows_product", l.arrows_product.object.dim()},
               {"limit", l.equalizer.carrier.carrier.dim()}}},
             {"carrier_basis", io::subspace_json(l.equalizer.carrier.carrier)},
             {"methods_agree", l.equalizer.cross_checked},
             {"cone_commutes", l.cone_commutes},
             {"cone", cone}};
    if (l.equalizer.closure) out["closure"] = closure_json(*l.equalizer.closure);
    return out;
  });
}

template <Field F>
json cmd_lift(const io::Document<F>& doc, const Options& opt) {
  if (opt.degree == 0) throw PreconditionError("lift needs --degree N with N >= 1");
  auto d = io::coaugmented_at(doc, opt.object);
  const auto& phi = doc.morphism(opt.phi);
  if (phi.dom != opt.object) throw PreconditionError("phi must start at '" + opt.object + "'");
  auto lift = lift_to_cofree(d, phi.matrix, opt.degree);
  return {{"status", "ok"},
          {"dims", {{"domain", d.dim()}, {"v", lift.cofree.v_dim}, {"cofree", lift.cofree.dim()}}},
          {"rank", rank(lift.map.matrix)},
          {"certificate", to_string(lift.map.certificate)},
          {"projection_recovers_phi", lift.cofree.p * lift.map.matrix == phi.matrix},
          {"matrix", io::matrix_json(lift.map.matrix)}};
}

template <Field F>
json cmd_antipode_core(const io::Document<F>& doc, const Options& opt) {
  auto b = io::object_at<Bialgebra<F>>(doc, opt.object);
  const auto& s = doc.morphism(opt.s);
  if (s.dom != opt.object || (s.cod && *s.cod != opt.object))
    throw PreconditionError("S must be an endomorphism of '" + opt.object + "'");
  auto core = antipode_core(b, s.matrix);
  return {{"status", "ok"},
          {"dims", {{"object", b.dim()}, {"agreement", core.agreement.dim()}, {"core", core.core.carrier.dim()}}},
          {"full", core.full()},
          {"carrier_basis", io::subspace_json(core.core.carrier)},
          {"closure", closure_json(core.closure)}};
}

inline GroupTable parse_group(const std::string& text) {
  auto parts = split(text, 'x');
  if (parts.empty()) throw PreconditionError("empty group name");
  auto one = [](const std::string& p) {
    if (p.size() < 2) throw PreconditionError("unknown group '" + p + "'");
    std::size_t n = 0;
    try {
      n = std::stoul(p.substr(1));
    } catch (const std::exception&) {
      throw PreconditionError("unknown group '" + p + "'");
    }
    switch (p[0]) {
      case 'Z': return cyclic_group(n);
      case 'S': return symmetric_group(n);
      case 'D': return dihedral_group(n);
      default: throw PreconditionError("unknown group '" + p + "'");
    }
  };
  auto g = one(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, one(parts[i]));
  return g;
}

template <Field F>
io::Document<F> make_document(const Options& opt, const F& k) {
  io::Document<F> doc{k, {}, {}, {}};
  auto add_hopf_morphisms = [&](const HopfAlgebra<F>& h, bool powers) {
    doc.morphisms.push_back(io::record_of(std::string("id"), h.name(), h.name(), Matrix<F>::identity(k, h.dim()),
                                          powers ? Certificate::hopf : Certificate::coalgebra));
    if (powers) {
      doc.morphisms.push_back(io::record_of(std::string("S"), h.name(), h.name(), h.antipode(), Certificate::linear_only));
      doc.morphisms.push_back(
          io::record_of(std::string("S2"), h.name(), h.name(), h.antipode() * h.antipode(), Certificate::hopf));
    }
  };
  const auto& r = opt.recipe;
  if (r == "group") {
    auto h = group_algebra(parse_group(opt.group), k);
    doc.objects.push_back(io::record_of(h));
    add_hopf_morphisms(h, false);
    doc.morphisms.push_back(
        io::record_of(std::string("inv"), h.name(), h.name(), inverse_morphism(h).matrix, Certificate::coalgebra));
  } else if (r == "h4" || r == "sweedler") {
    auto h = sweedler_h4(k);
    doc.objects.push_back(io::record_of(h));
    add_hopf_morphisms(h, true);
  } else if (r == "taft") {
    auto h = taft(opt.n, k);
    doc.objects.push_back(io::record_of(h));
    add_hopf_morphisms(h, true);
  } else if (r == "divided-powers") {
    auto rec = io::record_of(divided_powers(opt.n, k));
    Vector<F> u(opt.n + 1, k.zero());
    u[0] = k.one();
    rec.coaugmentation = u;
    doc.objects.push_back(rec);
  } else if (r == "cofree") {
    auto t = truncated_cofree(opt.n, std::max<std::size_t>(opt.degree, 1), k);
    auto rec = io::record_of(t.coalgebra);
    rec.coaugmentation = t.unit;
    doc.objects.push_back(rec);
    doc.morphisms.push_back({"p", rec.name, std::nullopt, t.v_dim, t.p, Certificate::linear_only});
  } else if (r == "comatrix") {
    doc.objects.push_back(io::record_of(matrix_coalgebra(opt.n, k)));
  } else if (r == "monoid") {
    doc.objects.push_back(io::record_of(monoid_bialgebra(k)));
  } else {
    throw PreconditionError("unknown recipe '" + r + "' (group, h4, taft, divided-powers, cofree, comatrix, monoid)");
  }
  return doc;
}

inline json cmd_make(const Options& opt) {
  if (opt.output.empty()) throw PreconditionError("make needs -o FILE");
  json doc;
  if (opt.field == "Q") {
    doc = io::serialize(make_document(opt, Rationals{}));
  } else if (opt.field.size() > 1 && opt.field[0] == 'F') {
    doc = io::serialize(make_document(opt, PrimeField(static_cast<std::uint32_t>(std::stoul(opt.field.substr(1))))));
  } else {
    throw PreconditionError("--field must be Q or Fp (e.g. F5)");
  }
  std::ofstream out(opt.output);
  if (!out) throw PreconditionError("cannot write '" + opt.output + "'");
  out << doc.dump(2) << "\n";
  return {{"status", "ok"}, {"recipe", opt.recipe}, {"output", opt.output}, {"objects", doc["objects"].size()}};
}

/// "family=group-algebra;seed=3;field=F5;max-dim=6" compares the two
/// equalizer methods on a generated pair; "brute;coalgebra=NAME" compares
/// largest_subcoalgebra with the enumeration oracle on every subspace of a
/// curated F_2 coalgebra.
inline json cmd_oracle(const std::string& query) {
  std::map<std::string, std::string> kv;
  bool brute = false;
  for (const auto& part : split(query, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) {
      if (part == "brute") brute = true;
      else throw ParseError("oracle query: bad entry '" + part + "'");
    } else {
      kv[part.substr(0, eq)] = part.substr(eq + 1);
    }
  }
  auto get = [&](const std::string& key, const std::string& fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  };
  auto number = [&](const std::string& key, const std::string& fallback) {
    try {
      return std::stoull(get(key, fallback));
    } catch (const std::exception&) {
      throw ParseError("oracle query: '" + key + "' must be a number");
    }
  };
  if (brute) {
    const auto name = get("coalgebra", "kZ2");
    for (const auto& c : testkit::curated_f2_coalgebras()) {
      if (c.name() != name) continue;
      auto ws = testkit::enumerate_subspaces(c.field(), c.dim());
      std::size_t agree = 0;
      for (const auto& w : ws)
        if (largest_subcoalgebra(c, w).carrier == testkit::brute_force_sum_of_subcoalgebras(c, w)) ++agree;
      return {{"status", agree == ws.size() ? "ok" : "mismatch"}, {"oracle", "brute"}, {"coalgebra", name},
              {"subspaces", ws.size()}, {"agree", agree}};
    }
    throw PreconditionError("oracle: no curated coalgebra named '" + name + "'");
  }
  testkit::InstanceParams is{number("seed", "0"), testkit::parse_family(get("family", "group-algebra")),
                           static_cast<std::size_t>(number("max-dim", "8"))};
  auto run_pair = [&](const auto& k) -> json {
    auto [f, g] = testkit::random_parallel_pair(is, k);
    auto t1 = equalize(f, g, EqualizerMethod::theorem1, false);
    auto r1 = equalize(f, g, EqualizerMethod::remark1, false);
    bool agree = t1.carrier.carrier == r1.carrier.carrier;
    return {{"status", agree ? "ok" : "mismatch"},
            {"oracle", "methods"},
            {"family", to_string(is.family)},
            {"seed", is.seed},
            {"dims", {{"domain", f.dom.dim()}, {"codomain", f.cod.dim()}, {"carrier", r1.carrier.carrier.dim()}}},
            {"domain", f.dom.name()},
            {"methods_agree", agree},
            {"carrier_basis", io::subspace_json(r1.carrier.carrier)}};
  };
  const auto field = get("field", "Q");
  if (field == "Q") return run_pair(Rationals{});
  if (field.size() > 1 && field[0] == 'F') return run_pair(PrimeField(static_cast<std::uint32_t>(std::stoul(field.substr(1)))));
  throw ParseError("oracle query: field must be Q or Fp");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact equalizers, products and limits of coalgebras, bialgebras and Hopf algebras", "hopflim"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--timings", opt.timings, "Add wall-clock timings to the report");

  auto* check = app.add_subcommand("check", "Run the axiom checks of every object and morphism");
  check->add_option("file", opt.file)->required();

  auto* eq = app.add_subcommand("equalize", "Equalizer of a parallel pair");
  eq->add_option("file", opt.file)->required();
  eq->add_option("--f", opt.f)->required();
  eq->add_option("--g", opt.g)->required();
  eq->add_option("--method", opt.method, "remark1, theorem1 or both");
  eq->add_option("--level", opt.level, "coalg, bialg or hopf");

  auto* prod = app.add_subcommand("product", "Product of cocommutative or conilpotent objects");
  prod->add_option("file", opt.file)->required();
  prod->add_option("--objects", opt.objects)->required();
  prod->add_option("--level", opt.level);
  prod->add_flag("--conilpotent", opt.conilpotent);
  prod->add_option("--degree", opt.degree);

  auto* lim = app.add_subcommand("limit", "Limit of a finite diagram");
  lim->add_option("file", opt.file)->required();
  lim->add_option("--diagram", opt.diagram)->required();

  auto* lift = app.add_subcommand("lift", "Lift a linear map into the truncated cofree coalgebra");
  lift->add_option("file", opt.file)->required();
  lift->add_option("--object", opt.object)->required();
  lift->add_option("--phi", opt.phi)->required();
  lift->add_option("--degree", opt.degree)->required();

  auto* core = app.add_subcommand("antipode-core", "Largest subcoalgebra where S is a convolution inverse of id");
  core->add_option("file", opt.file)->required();
  core->add_option("--object", opt.object)->required();
  core->add_option("--s", opt.s)->required();

  auto* make = app.add_subcommand("make", "Write a zoo object to a document");
  make->add_option("recipe", opt.recipe, "group, h4, taft, divided-powers, cofree, comatrix, monoid")->required();
  make->add_option("--group", opt.group, "e.g. Z4, S3, D4, Z2xZ2");
  make->add_option("--field", opt.field, "Q or Fp, e.g. F5");
  make->add_option("--n", opt.n, "parameter of taft, divided-powers, cofree (v_dim), comatrix");
  make->add_option("--degree", opt.degree, "degree bound for cofree");
  make->add_option("-o,--output", opt.output)->required();

  auto* oracle = app.add_subcommand("oracle", "Reproduce an oracle comparison");
  oracle->add_option("query", opt.query)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << json{{"status", "error"}, {"error", "usage"}, {"exit_code", 5}, {"message", e.what()}}.dump(2) << "\n";
    return static_cast<int>(ExitCode::parse);
  }

  const auto start = std::chrono::steady_clock::now();
  json report;
  int code = 0;
  try {
    auto on_document = [&](auto body) {
      return io::with_document(detail::read_file(opt.file), [&](const auto& doc) { return body(doc); });
    };
    if (check->parsed()) {
      report = on_document([&](const auto& doc) { return detail::cmd_check(doc, code); });
    } else if (eq->parsed()) {
      report = on_document([&](const auto& doc) { return detail::cmd_equalize(doc, opt); });
    } else if (prod->parsed()) {
      report = on_document([&](const auto& doc) { return detail::cmd_product(doc, opt); });
    } else if (lim->parsed()) {
      report = on_document([&](const auto& doc) { return detail::cmd_limit(doc, opt); });
    } else if (lift->parsed()) {
      report = on_document([&](const auto& doc) { return detail::cmd_lift(doc, opt); });
    } else if (core->parsed()) {
      report = on_document([&](const auto& doc) { return detail::cmd_antipode_core(doc, opt); });
    } else if (make->parsed()) {
      report = detail::cmd_make(opt);
    } else if (oracle->parsed()) {
      report = detail::cmd_oracle(opt.query);
      if (report["status"] != "ok") code = static_cast<int>(ExitCode::internal_consistency);
    }
  } catch (const Error& e) {
    code = static_cast<int>(e.exit_code());
    report = {{"status", "error"}, {"error", detail::error_kind(e)}, {"exit_code", code}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
  }
  if (opt.timings) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["timings"] = {{"total_ms", ms}};
  }
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace hopflim::cli
