#pragma once

// JSON document format "hopflim/1".
//
//   {
//     "format": "hopflim/1",
//     "field": {"kind": "Q"} | {"kind": "Fp", "p": 5},
//     "objects": [
//       {"name": "kZ2", "dim": 2,
//        "delta": [[i, j, k, "c"], ...],      // delta(e_i) has c at e_j (x) e_k
//        "epsilon": ["1", "1"],
//        "mult": [[i, j, k, "c"], ...],       // optional: e_i e_j has c at e_k
//        "unit": ["1", "0"],                  // required with mult
//        "antipode": [[i, j, "c"], ...],      // optional: S(e_i) has c at e_j
//        "coaugmentation": ["1", "0"]}        // optional group-like unit
//     ],
//     "morphisms": [
//       {"name": "f", "dom": "kZ2", "cod": "kZ2", "level": "coalg",
//        "matrix": [["1", "0"], ["0", "1"]]}  // rows indexed by cod
//       // a linear map into k^n uses "v_dim": n instead of "cod"
//     ],
//     "diagrams": [
//       {"name": "d", "level": "coalg",
//        "objects": ["kZ2", {"name": "B", "object": "kZ2"}],
//        "arrows": [{"name": "u", "dom": "kZ2", "cod": "B", "morphism": "f"}]}
//     ]
//   }
//
// Scalars are strings ("3/4" over Q, integers reduced mod p over F_p);
// plain JSON integers are accepted as well.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hopflim/cofree.hpp"
#include "hopflim/products.hpp"

namespace hopflim::io {

using json = nlohmann::ordered_json;

inline constexpr const char* format_version = "hopflim/1";

template <Field F>
struct ObjectRecord {
  std::string name;
  Coalgebra<F> coalgebra;
  std::optional<Bialgebra<F>> bialgebra;
  std::optional<HopfAlgebra<F>> hopf;
  std::optional<Vector<F>> coaugmentation;

  Certificate level() const {
    return hopf ? Certificate::hopf : bialgebra ? Certificate::bialgebra : Certificate::coalgebra;
  }
  const Report& report() const {
    return hopf ? hopf->axiom_report() : bialgebra ? bialgebra->axiom_report() : coalgebra.axiom_report();
  }
};

template <Field F>
struct MorphismRecord {
  std::string name;
  std::string dom;
  std::optional<std::string> cod;     // absent for linear maps into k^v_dim
  std::optional<std::size_t> v_dim;
  Matrix<F> matrix;
  Certificate level = Certificate::linear_only;
};

struct DiagramObject {
  std::string name;
  std::string object;
};

struct DiagramArrow {
  std::string name, dom, cod, morphism;
};

struct DiagramRecord {
  std::string name;
  Certificate level = Certificate::coalgebra;
  std::vector<DiagramObject> objects;
  std::vector<DiagramArrow> arrows;
};

template <Field F>
struct Document {
  F field;
  std::vector<ObjectRecord<F>> objects;
  std::vector<MorphismRecord<F>> morphisms;
  std::vector<DiagramRecord> diagrams;

  const ObjectRecord<F>& object(const std::string& name) const {
    for (const auto& o : objects)
      if (o.name == name) return o;
    throw MalformedInput("unknown object '" + name + "'");
  }
  const MorphismRecord<F>& morphism(const std::string& name) const {
    for (const auto& m : morphisms)
      if (m.name == name) return m;
    throw MalformedInput("unknown morphism '" + name + "'");
  }
  const DiagramRecord& diagram(const std::string& name) const {
    for (const auto& d : diagrams)
      if (d.name == name) return d;
    throw MalformedInput("unknown diagram '" + name + "'");
  }
};

inline Certificate parse_level(const std::string& s) {
  if (s == "linear") return Certificate::linear_only;
  if (s == "coalg" || s == "coalgebra") return Certificate::coalgebra;
  if (s == "bialg" || s == "bialgebra") return Certificate::bialgebra;
  if (s == "hopf") return Certificate::hopf;
  throw MalformedInput("unknown level '" + s + "'");
}

inline const char* level_name(Certificate c) {
  switch (c) {
    case Certificate::linear_only: return "linear";
    case Certificate::coalgebra: return "coalg";
    case Certificate::bialgebra: return "bialg";
    case Certificate::hopf: return "hopf";
  }
  return "?";
}

namespace detail {

inline std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(where + ": missing '" + key + "'");
  return j.at(key);
}

inline std::size_t index_value(const json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw MalformedInput(where + ": index must be a non-negative integer");
  auto v = j.get<std::size_t>();
  if (v >= bound) throw MalformedInput(where + ": index " + std::to_string(v) + " out of range");
  return v;
}

template <Field F>
typename F::value_type scalar(const F& k, const json& j, const std::string& where) {
  if (j.is_string()) return k.parse(j.get<std::string>());
  if (j.is_number_integer()) return k.from_int(j.get<long long>());
  throw MalformedInput(where + ": scalars must be strings or integers");
}

template <Field F>
Vector<F> vector_value(const F& k, const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw MalformedInput(where + ": expected a list of " + std::to_string(n) + " scalars");
  Vector<F> v;
  for (const auto& e : j) v.push_back(scalar(k, e, where));
  return v;
}

/// Triplets [a, b, c, s] with a < n and b, c < n, placed at (row, col) by `place`.
template <Field F, class Place>
SparseMatrix<F> triplet_matrix(const F& k, const json& j, std::size_t n, std::size_t rows, std::size_t cols,
                               std::size_t arity, Place place, const std::string& where) {
  if (!j.is_array()) throw MalformedInput(where + ": expected a list of triplets");
  std::vector<std::tuple<std::size_t, std::size_t, typename F::value_type>> t;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != arity + 1)
      throw MalformedInput(where + ": each entry needs " + std::to_string(arity) + " indices and a scalar");
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < arity; ++a) idx.push_back(index_value(e[a], n, where));
    auto [r, c] = place(idx);
    t.emplace_back(r, c, scalar(k, e[arity], where));
  }
  return SparseMatrix<F>::from_triplets(k, rows, cols, t);
}

template <Field F>
ObjectRecord<F> parse_object(const F& k, const json& j) {
  const std::string name = member(j, "name", "object").template get<std::string>();
  const std::string where = "object '" + name + "'";
  const auto n = index_value(member(j, "dim", where), 1u << 20, where);
  ObjectRecord<F> rec;
  rec.name = name;
  auto delta = triplet_matrix(
      k, member(j, "delta", where), n, n * n, n, 3,
      [n](const std::vector<std::size_t>& i) { return std::pair{i[1] * n + i[2], i[0]}; }, where + " delta");
  auto eps = vector_value(k, member(j, "epsilon", where), n, where + " epsilon");
  rec.coalgebra = Coalgebra<F>::make(name, std::move(delta), std::move(eps));
  if (j.contains("mult") || j.contains("unit")) {
    auto mult = triplet_matrix(
        k, member(j, "mult", where), n, n, n * n, 3,
        [n](const std::vector<std::size_t>& i) { return std::pair{i[2], i[0] * n + i[1]}; }, where + " mult");
    auto unit = vector_value(k, member(j, "unit", where), n, where + " unit");
    rec.bialgebra = Bialgebra<F>::make(rec.coalgebra, std::move(mult), std::move(unit));
  }
  if (j.contains("antipode")) {
    if (!rec.bialgebra) throw MalformedInput(where + ": an antipode needs mult and unit");
    auto s = triplet_matrix(
        k, j.at("antipode"), n, n, n, 2,
        [](const std::vector<std::size_t>& i) { return std::pair{i[1], i[0]}; }, where + " antipode");
    rec.hopf = HopfAlgebra<F>::make(*rec.bialgebra, s.to_dense());
  }
  if (j.contains("coaugmentation")) rec.coaugmentation = vector_value(k, j.at("coaugmentation"), n, where + " coaugmentation");
  return rec;
}

template <Field F>
MorphismRecord<F> parse_morphism(const F& k, const json& j, const Document<F>& doc) {
  MorphismRecord<F> rec;
  rec.name = member(j, "name", "morphism").template get<std::string>();
  const std::string where = "morphism '" + rec.name + "'";
  rec.dom = member(j, "dom", where).template get<std::string>();
  std::size_t rows = 0;
  const std::size_t cols = doc.object(rec.dom).coalgebra.dim();
  if (j.contains("cod")) {
    rec.cod = j.at("cod").template get<std::string>();
    rows = doc.object(*rec.cod).coalgebra.dim();
  } else {
    rec.v_dim = index_value(member(j, "v_dim", where), 1u << 20, where);
    rows = *rec.v_dim;
  }
  rec.level = parse_level(j.value("level", std::string(rec.cod ? "coalg" : "linear")));
  if (!rec.cod && rec.level != Certificate::linear_only) throw MalformedInput(where + ": a map into k^n can only be linear");
  const auto& m = member(j, "matrix", where);
  if (!m.is_array() || m.size() != rows)
    throw MalformedInput(where + ": matrix must have " + std::to_string(rows) + " rows");
  rec.matrix = Matrix<F>(k, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = vector_value(k, m[r], cols, where + " matrix row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) rec.matrix(r, c) = row[c];
  }
  return rec;
}

template <Field F>
DiagramRecord parse_diagram(const json& j, const Document<F>& doc) {
  DiagramRecord rec;
  rec.name = member(j, "name", "diagram").template get<std::string>();
  const std::string where = "diagram '" + rec.name + "'";
  rec.level = parse_level(j.value("level", std::string("coalg")));
  if (rec.level == Certificate::linear_only) throw MalformedInput(where + ": level must be coalg, bialg or hopf");
  for (const auto& o : member(j, "objects", where)) {
    DiagramObject d;
    if (o.is_string()) {
      d.name = d.object = o.template get<std::string>();
    } else {
      d.name = member(o, "name", where).template get<std::string>();
      d.object = member(o, "object", where).template get<std::string>();
    }
    doc.object(d.object);
    for (const auto& e : rec.objects)
      if (e.name == d.name) throw MalformedInput(where + ": duplicate object '" + d.name + "'");
    rec.objects.push_back(std::move(d));
  }
  if (j.contains("arrows"))
    for (const auto& a : j.at("arrows")) {
      DiagramArrow d{member(a, "name", where).template get<std::string>(), member(a, "dom", where).template get<std::string>(),
                     member(a, "cod", where).template get<std::string>(),
                     member(a, "morphism", where).template get<std::string>()};
      doc.morphism(d.morphism);
      for (const auto& e : rec.arrows)
        if (e.name == d.name) throw MalformedInput(where + ": duplicate arrow '" + d.name + "'");
      rec.arrows.push_back(std::move(d));
    }
  return rec;
}

template <class Records>
void require_unique(const Records& records, const char* kind) {
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (records[i].name == records[j].name)
        throw MalformedInput(std::string("duplicate ") + kind + " name '" + records[i].name + "'");
}

}  // namespace detail

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("JSON syntax error at " + detail::position(text, e.byte) + ": " + e.what());
  }
}

/// The field named by the document, as a runtime descriptor.
struct FieldChoice {
  bool rational = true;
  std::uint32_t p = 0;
};

inline FieldChoice field_choice(const json& doc) {
  const auto& f = detail::member(doc, "field", "document");
  const auto kind = detail::member(f, "kind", "field").get<std::string>();
  if (kind == "Q") return {true, 0};
  if (kind == "Fp") {
    const auto& p = detail::member(f, "p", "field");
    if (!p.is_number_unsigned() && !p.is_number_integer()) throw MalformedInput("field: p must be an integer");
    auto v = p.get<long long>();
    if (v < 2 || v > 65535) throw MalformedInput("field: p out of range");
    return {false, static_cast<std::uint32_t>(v)};
  }
  throw MalformedInput("field: unknown kind '" + kind + "'");
}

template <Field F>
Document<F> parse_document(const json& j, const F& k) {
  try {
    if (!j.is_object()) throw MalformedInput("document must be a JSON object");
    if (j.contains("format") && j.at("format") != format_version)
      throw MalformedInput("unsupported format '" + j.at("format").dump() + "'");
    Document<F> doc{k, {}, {}, {}};
    if (j.contains("objects"))
      for (const auto& o : j.at("objects")) doc.objects.push_back(detail::parse_object(k, o));
    detail::require_unique(doc.objects, "object");
    if (j.contains("morphisms"))
      for (const auto& m : j.at("morphisms")) doc.morphisms.push_back(detail::parse_morphism(k, m, doc));
    detail::require_unique(doc.morphisms, "morphism");
    if (j.contains("diagrams"))
      for (const auto& d : j.at("diagrams")) doc.diagrams.push_back(detail::parse_diagram(d, doc));
    detail::require_unique(doc.diagrams, "diagram");
    return doc;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("malformed document: ") + e.what());
  }
}

/// Calls fn with the parsed document over the field it declares.
template <class Fn>
decltype(auto) with_document(std::string_view text, Fn&& fn) {
  auto j = parse_json(text);
  auto choice = [&] {
    try {
      return field_choice(j);
    } catch (const json::exception& e) {
      throw MalformedInput(std::string("malformed field: ") + e.what());
    }
  }();
  if (choice.rational) return fn(parse_document(j, Rationals{}));
  return fn(parse_document(j, PrimeField(choice.p)));
}

// Typed views of records.

template <Field F>
Coalgebra<F> object_as(const ObjectRecord<F>& rec, std::type_identity<Coalgebra<F>>) {
  return rec.coalgebra;
}
template <Field F>
Bialgebra<F> object_as(const ObjectRecord<F>& rec, std::type_identity<Bialgebra<F>>) {
  if (!rec.bialgebra) throw PreconditionError("object '" + rec.name + "' has no multiplication");
  return *rec.bialgebra;
}
template <Field F>
HopfAlgebra<F> object_as(const ObjectRecord<F>& rec, std::type_identity<HopfAlgebra<F>>) {
  if (!rec.hopf) throw PreconditionError("object '" + rec.name + "' has no antipode");
  return *rec.hopf;
}

/// The object at level Obj; axiom failures raise AxiomError.
template <class Obj, Field F>
Obj object_at(const Document<F>& doc, const std::string& name) {
  const auto& rec = doc.object(name);
  auto obj = object_as(rec, std::type_identity<Obj>{});
  if (!obj.axiom_report()) throw AxiomError("object '" + name + "': " + obj.axiom_report().message());
  return obj;
}

/// The morphism certified at level Obj; a failed certificate raises AxiomError.
template <class Obj, Field F>
Morphism<Obj> morphism_at(const Document<F>& doc, const std::string& name) {
  const auto& rec = doc.morphism(name);
  if (!rec.cod) throw PreconditionError("morphism '" + name + "' is a linear map into k^n, not a structure map");
  Morphism<Obj> m{object_at<Obj>(doc, rec.dom), object_at<Obj>(doc, *rec.cod), rec.matrix, Certificate::linear_only};
  if (auto r = certify(m); !r) throw AxiomError("morphism '" + name + "': " + r.message());
  return m;
}

template <Field F>
CoaugmentedCoalgebra<F> coaugmented_at(const Document<F>& doc, const std::string& name) {
  const auto& rec = doc.object(name);
  auto c = object_at<Coalgebra<F>>(doc, name);
  if (rec.coaugmentation) return CoaugmentedCoalgebra<F>::make(c, *rec.coaugmentation);
  if (rec.bialgebra) return CoaugmentedCoalgebra<F>::make(c, rec.bialgebra->unit());
  return coaugment(c, 0);
}

// Serialization.

template <Field F>
json scalar_json(const F& k, const typename F::value_type& v) {
  return k.format(v);
}

template <Field F>
json vector_json(const F& k, const Vector<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(k.format(x));
  return out;
}

template <Field F>
json matrix_json(const Matrix<F>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.field(), m.row_vector(r)));
  return out;
}

template <Field F>
json subspace_json(const Subspace<F>& s) {
  return matrix_json(s.basis());
}

inline json field_json(const Rationals&) { return {{"kind", "Q"}}; }
inline json field_json(const PrimeField& k) { return {{"kind", "Fp"}, {"p", k.characteristic()}}; }

template <Field F>
json object_json(const ObjectRecord<F>& rec) {
  const auto& c = rec.coalgebra;
  const F& k = c.field();
  const std::size_t n = c.dim();
  json o{{"name", rec.name}, {"dim", n}};
  json delta = json::array();
  for (const auto& [r, col, v] : c.delta().triplets()) delta.push_back({col, r / n, r % n, k.format(v)});
  o["delta"] = delta;
  o["epsilon"] = vector_json(k, c.counit());
  if (rec.bialgebra) {
    json mult = json::array();
    for (const auto& [r, col, v] : rec.bialgebra->mult().triplets()) mult.push_back({col / n, col % n, r, k.format(v)});
    o["mult"] = mult;
    o["unit"] = vector_json(k, rec.bialgebra->unit());
  }
  if (rec.hopf) {
    json s = json::array();
    for (const auto& [r, col, v] : rec.hopf->antipode().triplets()) s.push_back({col, r, k.format(v)});
    o["antipode"] = s;
  }
  if (rec.coaugmentation) o["coaugmentation"] = vector_json(k, *rec.coaugmentation);
  return o;
}

template <Field F>
json morphism_json(const MorphismRecord<F>& m) {
  json o{{"name", m.name}, {"dom", m.dom}};
  if (m.cod) o["cod"] = *m.cod;
  else o["v_dim"] = *m.v_dim;
  o["level"] = level_name(m.level);
  o["matrix"] = matrix_json(m.matrix);
  return o;
}

inline json diagram_json(const DiagramRecord& d) {
  json objs = json::array(), arrows = json::array();
  for (const auto& o : d.objects)
    objs.push_back(o.name == o.object ? json(o.name) : json{{"name", o.name}, {"object", o.object}});
  for (const auto& a : d.arrows) arrows.push_back({{"name", a.name}, {"dom", a.dom}, {"cod", a.cod}, {"morphism", a.morphism}});
  return {{"name", d.name}, {"level", level_name(d.level)}, {"objects", objs}, {"arrows", arrows}};
}

template <Field F>
json serialize(const Document<F>& doc) {
  json out{{"format", format_version}, {"field", field_json(doc.field)}};
  out["objects"] = json::array();
  for (const auto& o : doc.objects) out["objects"].push_back(object_json(o));
  out["morphisms"] = json::array();
  for (const auto& m : doc.morphisms) out["morphisms"].push_back(morphism_json(m));
  out["diagrams"] = json::array();
  for (const auto& d : doc.diagrams) out["diagrams"].push_back(diagram_json(d));
  return out;
}

template <Field F>
ObjectRecord<F> record_of(const Coalgebra<F>& c) {
  return {c.name(), c, std::nullopt, std::nullopt, std::nullopt};
}
template <Field F>
ObjectRecord<F> record_of(const Bialgebra<F>& b) {
  return {b.name(), b.coalgebra(), b, std::nullopt, std::nullopt};
}
template <Field F>
ObjectRecord<F> record_of(const HopfAlgebra<F>& h) {
  return {h.name(), h.coalgebra(), h.bialgebra(), h, std::nullopt};
}

template <Field F>
MorphismRecord<F> record_of(std::string name, const std::string& dom, const std::string& cod, Matrix<F> m, Certificate level) {
  return {std::move(name), dom, cod, std::nullopt, std::move(m), level};
}

}  // namespace hopflim::io
