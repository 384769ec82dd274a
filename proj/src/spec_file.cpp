#include "rbalg/spec_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rbalg {

using json = nlohmann::ordered_json;

std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::assoc: return "assoc";
    case StructureKind::dend: return "dend";
    case StructureKind::tridend: return "tridend";
    case StructureKind::quadri: return "quadri";
  }
  return "assoc";
}

StructureKind parse_structure_kind(const std::string& name) {
  for (auto k : {StructureKind::assoc, StructureKind::dend, StructureKind::tridend, StructureKind::quadri}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown structure kind '" + name + "' (expected assoc, dend, tridend or quadri)");
}

const std::vector<std::string>& operation_names(StructureKind k) {
  static const std::vector<std::string> assoc{"mu"}, dend{"prec", "succ"}, tri{"prec", "succ", "dot"},
      quadri{"nw", "sw", "ne", "se"};
  switch (k) {
    case StructureKind::assoc: return assoc;
    case StructureKind::dend: return dend;
    case StructureKind::tridend: return tri;
    case StructureKind::quadri: return quadri;
  }
  return assoc;
}

// ------------------------------------------------------------- conversions

namespace {

void require_kind(const AlgebraSpec& s, StructureKind k) {
  if (s.kind != k) throw KindMismatch("document holds a " + to_string(s.kind) + " structure, not " + to_string(k));
}

AlgebraSpec base_spec(const Field& f, StructureKind k, const LinearMap& alpha, const LinearMap& beta) {
  return AlgebraSpec{f, k, alpha.rows(), {}, alpha, beta, {}, std::nullopt, std::nullopt, std::nullopt, {}};
}

}  // namespace

BiHomAssociativeAlgebra AlgebraSpec::as_assoc() const {
  require_kind(*this, StructureKind::assoc);
  return {operations.at("mu"), alpha, beta};
}

BiHomDendriform AlgebraSpec::as_dend() const {
  require_kind(*this, StructureKind::dend);
  return {operations.at("prec"), operations.at("succ"), alpha, beta};
}

BiHomTridendriform AlgebraSpec::as_tridend() const {
  require_kind(*this, StructureKind::tridend);
  return {operations.at("prec"), operations.at("succ"), operations.at("dot"), alpha, beta};
}

BiHomQuadri AlgebraSpec::as_quadri() const {
  require_kind(*this, StructureKind::quadri);
  return {operations.at("nw"), operations.at("sw"), operations.at("ne"), operations.at("se"), alpha, beta};
}

AlgebraSpec AlgebraSpec::from(const BiHomAssociativeAlgebra& a) {
  auto s = base_spec(a.field(), StructureKind::assoc, a.alpha, a.beta);
  s.operations.emplace("mu", a.mu);
  return s;
}

AlgebraSpec AlgebraSpec::from(const BiHomDendriform& d) {
  auto s = base_spec(d.field(), StructureKind::dend, d.alpha, d.beta);
  s.operations.emplace("prec", d.prec);
  s.operations.emplace("succ", d.succ);
  return s;
}

AlgebraSpec AlgebraSpec::from(const BiHomTridendriform& t) {
  auto s = base_spec(t.field(), StructureKind::tridend, t.alpha, t.beta);
  s.operations.emplace("prec", t.prec);
  s.operations.emplace("succ", t.succ);
  s.operations.emplace("dot", t.dot);
  return s;
}

AlgebraSpec AlgebraSpec::from(const BiHomQuadri& q) {
  auto s = base_spec(q.field(), StructureKind::quadri, q.alpha, q.beta);
  s.operations.emplace("nw", q.nw);
  s.operations.emplace("sw", q.sw);
  s.operations.emplace("ne", q.ne);
  s.operations.emplace("se", q.se);
  return s;
}

WeakPseudotwistor AlgebraSpec::weak_twistor(std::size_t index) const {
  if (index >= twistors.size()) throw ParseError("document has no twistor #" + std::to_string(index));
  const TwistorBlock& t = twistors[index];
  if (!t.companion) throw ParseError("twistors[" + std::to_string(index) + "] has no weak companion");
  return {TensorSquareMap(dim, t.T), TensorCubeMap(dim, *t.companion), t.atilde, t.btilde};
}

PseudotwistorWithCompanions AlgebraSpec::twistor_with_companions(std::size_t index) const {
  if (index >= twistors.size()) throw ParseError("document has no twistor #" + std::to_string(index));
  const TwistorBlock& t = twistors[index];
  if (!t.T1 || !t.T2) throw ParseError("twistors[" + std::to_string(index) + "] has no companions T1, T2");
  return {TensorSquareMap(dim, t.T), TensorCubeMap(dim, *t.T1), TensorCubeMap(dim, *t.T2), t.atilde, t.btilde};
}

namespace {

template <class T>
bool same_optional(const std::optional<T>& a, const std::optional<T>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || *a == *b;
}

}  // namespace

bool AlgebraSpec::operator==(const AlgebraSpec& o) const {
  if (field != o.field || kind != o.kind || dim != o.dim || operations != o.operations || alpha != o.alpha ||
      beta != o.beta || rota_baxter.size() != o.rota_baxter.size() || twistors.size() != o.twistors.size()) {
    return false;
  }
  for (std::size_t i = 0; i < rota_baxter.size(); ++i) {
    if (rota_baxter[i].map != o.rota_baxter[i].map || rota_baxter[i].weight != o.rota_baxter[i].weight) return false;
  }
  if (baxter.has_value() != o.baxter.has_value()) return false;
  if (baxter && (!same_optional(baxter->right, o.baxter->right) || !same_optional(baxter->left, o.baxter->left))) {
    return false;
  }
  if (twist.has_value() != o.twist.has_value()) return false;
  if (twist && (twist->atilde != o.twist->atilde || twist->btilde != o.twist->btilde)) return false;
  if (bimodule.has_value() != o.bimodule.has_value()) return false;
  if (bimodule) {
    const auto &m = bimodule->module, &n = o.bimodule->module;
    if (m.left_action != n.left_action || m.right_action != n.right_action || m.alpha != n.alpha ||
        m.beta != n.beta || !same_optional(bimodule->grb, o.bimodule->grb)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < twistors.size(); ++i) {
    const auto &t = twistors[i], &u = o.twistors[i];
    if (t.T != u.T || !same_optional(t.companion, u.companion) || !same_optional(t.T1, u.T1) ||
        !same_optional(t.T2, u.T2) || t.atilde != u.atilde || t.btilde != u.btilde) {
      return false;
    }
  }
  return true;
}

// ----------------------------------------------------------------- parsing

namespace {

class Reader {
 public:
  explicit Reader(Field f) : field_(std::move(f)) {}

  [[noreturn]] static void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
  }

  static const json& member(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing key '" + key + "'");
    return *it;
  }

  static const json& array(const json& j, const std::string& path, std::size_t size) {
    if (!j.is_array()) fail(path, "expected an array");
    if (j.size() != size) {
      fail(path, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
    }
    return j;
  }

  Scalar scalar(const json& j, const std::string& path) const {
    std::string text;
    if (j.is_string()) {
      text = j.get<std::string>();
    } else if (j.is_number_integer()) {
      text = j.dump();
    } else {
      fail(path, "scalars must be strings in the scalar grammar");
    }
    try {
      return field_.parse(text);
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

  Vector vector(const json& j, const std::string& path, std::size_t n) const {
    array(j, path, n);
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(scalar(j[i], path + "[" + std::to_string(i) + "]"));
    return Vector(field_, std::move(c));
  }

  // List of `cols` column images, each of length `rows`.
  Matrix matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols) const {
    array(j, path, cols);
    std::vector<Vector> c;
    for (std::size_t i = 0; i < cols; ++i) c.push_back(vector(j[i], path + "[" + std::to_string(i) + "]", rows));
    return Matrix::from_columns(field_, rows, c);
  }

  StructureTable table(const json& j, const std::string& path, std::size_t l, std::size_t r, std::size_t out) const {
    array(j, path, l);
    StructureTable t(field_, l, r, out);
    for (std::size_t i = 0; i < l; ++i) {
      std::string pi = path + "[" + std::to_string(i) + "]";
      array(j[i], pi, r);
      for (std::size_t k = 0; k < r; ++k) {
        t.set_product(i, k, vector(j[i][k], pi + "[" + std::to_string(k) + "]", out));
      }
    }
    return t;
  }

  const Field& field() const { return field_; }

 private:
  Field field_;
};

Field read_field(const json& j) {
  const json& kind = Reader::member(j, "kind", "field");
  if (!kind.is_string()) Reader::fail("field.kind", "expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "rational") return Field::rational();
    if (k == "prime") {
      const json& p = Reader::member(j, "p", "field");
      if (!p.is_number_unsigned()) Reader::fail("field.p", "expected a positive integer");
      return Field::prime(p.get<std::uint64_t>());
    }
    if (k == "rational_function") {
      const json& params = Reader::member(j, "params", "field");
      if (!params.is_array()) Reader::fail("field.params", "expected an array of names");
      std::vector<std::string> names;
      for (const auto& n : params) {
        if (!n.is_string()) Reader::fail("field.params", "parameter names must be strings");
        names.push_back(n.get<std::string>());
      }
      return Field::rational_function(std::move(names));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    Reader::fail("field", e.what());
  }
  Reader::fail("field.kind", "unknown field kind '" + k + "' (expected rational, prime or rational_function)");
}

std::size_t read_dim(const json& obj, const std::string& path) {
  const json& d = Reader::member(obj, "dim", path);
  if (!d.is_number_unsigned() || d.get<std::uint64_t>() == 0) Reader::fail(path + ".dim", "expected a positive integer");
  return d.get<std::size_t>();
}

RBOperator read_rb(const Reader& r, const json& j, const std::string& path, std::size_t n) {
  LinearMap map = r.matrix(Reader::member(j, "map", path), path + ".map", n, n);
  Scalar w = j.contains("weight") ? r.scalar(j["weight"], path + ".weight") : r.field().zero();
  return {std::move(map), std::move(w)};
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed document (" +
                         msg + ")",
                     line, col);
  }
}

}  // namespace

AlgebraSpec parse_spec(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) Reader::fail("document", "expected an object");
  Field field = read_field(Reader::member(doc, "field", "document"));
  Reader r(field);
  const json& kind_j = Reader::member(doc, "kind", "document");
  if (!kind_j.is_string()) Reader::fail("kind", "expected a string");
  StructureKind kind = parse_structure_kind(kind_j.get<std::string>());
  const std::size_t n = read_dim(doc, "document");

  AlgebraSpec s{field, kind, n, {}, Matrix(field, n, n), Matrix(field, n, n), {}, std::nullopt, std::nullopt,
                std::nullopt, {}};
  const json& ops = Reader::member(doc, "operations", "document");
  if (!ops.is_object()) Reader::fail("operations", "expected an object");
  for (const auto& name : operation_names(kind)) {
    s.operations.emplace(name, r.table(Reader::member(ops, name, "operations"), "operations." + name, n, n, n));
  }
  for (const auto& [key, value] : ops.items()) {
    if (!s.operations.count(key)) Reader::fail("operations." + key, "not an operation of a " + to_string(kind) + " structure");
  }
  s.alpha = r.matrix(Reader::member(doc, "alpha", "document"), "alpha", n, n);
  s.beta = r.matrix(Reader::member(doc, "beta", "document"), "beta", n, n);

  if (doc.contains("rota_baxter")) {
    const json& rb = doc["rota_baxter"];
    if (rb.is_array()) {
      for (std::size_t i = 0; i < rb.size(); ++i) {
        s.rota_baxter.push_back(read_rb(r, rb[i], "rota_baxter[" + std::to_string(i) + "]", n));
      }
    } else {
      s.rota_baxter.push_back(read_rb(r, rb, "rota_baxter", n));
    }
  }
  if (doc.contains("baxter")) {
    const json& b = doc["baxter"];
    if (!b.is_object()) Reader::fail("baxter", "expected an object");
    BaxterBlock block;
    if (b.contains("right")) block.right = r.matrix(b["right"], "baxter.right", n, n);
    if (b.contains("left")) block.left = r.matrix(b["left"], "baxter.left", n, n);
    s.baxter = std::move(block);
  }
  if (doc.contains("twist")) {
    const json& t = doc["twist"];
    s.twist = TwistBlock{r.matrix(Reader::member(t, "atilde", "twist"), "twist.atilde", n, n),
                         r.matrix(Reader::member(t, "btilde", "twist"), "twist.btilde", n, n)};
  }
  if (doc.contains("bimodule")) {
    const json& b = doc["bimodule"];
    const std::size_t m = read_dim(b, "bimodule");
    BiHomBimodule mod{r.table(Reader::member(b, "left_action", "bimodule"), "bimodule.left_action", n, m, m),
                      r.table(Reader::member(b, "right_action", "bimodule"), "bimodule.right_action", m, n, m),
                      r.matrix(Reader::member(b, "alpha", "bimodule"), "bimodule.alpha", m, m),
                      r.matrix(Reader::member(b, "beta", "bimodule"), "bimodule.beta", m, m)};
    std::optional<LinearMap> grb;
    if (b.contains("grb")) grb = r.matrix(b["grb"], "bimodule.grb", n, m);
    s.bimodule = BimoduleBlock{std::move(mod), std::move(grb)};
  }
  if (doc.contains("twistors")) {
    const json& ts = doc["twistors"];
    if (!ts.is_array()) Reader::fail("twistors", "expected an array");
    const std::size_t n2 = n * n, n3 = n2 * n;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const std::string path = "twistors[" + std::to_string(i) + "]";
      const json& t = ts[i];
      TwistorBlock block{r.matrix(Reader::member(t, "T", path), path + ".T", n2, n2), std::nullopt, std::nullopt,
                         std::nullopt, Matrix::identity(field, n), Matrix::identity(field, n)};
      if (t.contains("companion")) block.companion = r.matrix(t["companion"], path + ".companion", n3, n3);
      if (t.contains("T1") != t.contains("T2")) Reader::fail(path, "T1 and T2 must be given together");
      if (t.contains("T1")) {
        block.T1 = r.matrix(t["T1"], path + ".T1", n3, n3);
        block.T2 = r.matrix(t["T2"], path + ".T2", n3, n3);
      }
      if (t.contains("atilde")) block.atilde = r.matrix(t["atilde"], path + ".atilde", n, n);
      if (t.contains("btilde")) block.btilde = r.matrix(t["btilde"], path + ".btilde", n, n);
      s.twistors.push_back(std::move(block));
    }
  }
  return s;
}

// ----------------------------------------------------------- serializing

namespace {

json write_vector(const Vector& v) {
  json a = json::array();
  for (const auto& c : v.coords()) a.push_back(c.to_string());
  return a;
}

json write_matrix(const Matrix& m) {
  json a = json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(write_vector(m.column(j)));
  return a;
}

json write_table(const StructureTable& t) {
  json a = json::array();
  for (std::size_t i = 0; i < t.left_dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.right_dim(); ++j) row.push_back(write_vector(t.product(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

json write_field(const Field& f) {
  json j;
  switch (f.kind()) {
    case FieldSpec::Kind::rational: j["kind"] = "rational"; break;
    case FieldSpec::Kind::prime:
      j["kind"] = "prime";
      j["p"] = f.characteristic();
      break;
    case FieldSpec::Kind::rational_function:
      j["kind"] = "rational_function";
      j["params"] = f.params();
      break;
  }
  return j;
}

json write_rb(const RBOperator& r) {
  json j;
  j["map"] = write_matrix(r.map);
  j["weight"] = r.weight.to_string();
  return j;
}

// Arrays of scalars stay on one line.
void emit(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out << pad << "  " << json(k).dump() << ": ";
      emit(out, v, indent + 2);
      out << (++i < j.size() ? ",\n" : "\n");
    }
    out << pad << "}";
  } else if (j.is_array() && !j.empty() && (j[0].is_array() || j[0].is_object())) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad << "  ";
      emit(out, j[i], indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << pad << "]";
  } else {
    std::string flat = j.dump();
    std::string spaced;
    for (std::size_t i = 0; i < flat.size(); ++i) {
      spaced += flat[i];
      if (flat[i] == ',' && i > 0 && flat[i - 1] == '"') spaced += ' ';
    }
    out << spaced;
  }
}

}  // namespace

std::string serialize_spec(const AlgebraSpec& s) {
  json doc;
  doc["field"] = write_field(s.field);
  doc["kind"] = to_string(s.kind);
  doc["dim"] = s.dim;
  json ops;
  for (const auto& name : operation_names(s.kind)) ops[name] = write_table(s.operations.at(name));
  doc["operations"] = ops;
  doc["alpha"] = write_matrix(s.alpha);
  doc["beta"] = write_matrix(s.beta);
  if (s.rota_baxter.size() == 1) {
    doc["rota_baxter"] = write_rb(s.rota_baxter[0]);
  } else if (!s.rota_baxter.empty()) {
    json a = json::array();
    for (const auto& r : s.rota_baxter) a.push_back(write_rb(r));
    doc["rota_baxter"] = a;
  }
  if (s.baxter) {
    json b = json::object();
    if (s.baxter->right) b["right"] = write_matrix(*s.baxter->right);
    if (s.baxter->left) b["left"] = write_matrix(*s.baxter->left);
    doc["baxter"] = b;
  }
  if (s.twist) {
    json t;
    t["atilde"] = write_matrix(s.twist->atilde);
    t["btilde"] = write_matrix(s.twist->btilde);
    doc["twist"] = t;
  }
  if (s.bimodule) {
    const auto& m = s.bimodule->module;
    json b;
    b["dim"] = m.dim();
    b["left_action"] = write_table(m.left_action);
    b["right_action"] = write_table(m.right_action);
    b["alpha"] = write_matrix(m.alpha);
    b["beta"] = write_matrix(m.beta);
    if (s.bimodule->grb) b["grb"] = write_matrix(*s.bimodule->grb);
    doc["bimodule"] = b;
  }
  if (!s.twistors.empty()) {
    json a = json::array();
    for (const auto& t : s.twistors) {
      json j;
      j["T"] = write_matrix(t.T);
      if (t.companion) j["companion"] = write_matrix(*t.companion);
      if (t.T1) j["T1"] = write_matrix(*t.T1);
      if (t.T2) j["T2"] = write_matrix(*t.T2);
      j["atilde"] = write_matrix(t.atilde);
      j["btilde"] = write_matrix(t.btilde);
      a.push_back(j);
    }
    doc["twistors"] = a;
  }
  std::ostringstream out;
  emit(out, doc, 0);
  out << "\n";
  return out.str();
}

FreeElement parse_free_element(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) Reader::fail("document", "expected an object");
  Field field = read_field(Reader::member(doc, "field", "document"));
  Reader r(field);
  const json& bs = Reader::member(doc, "basis_size", "document");
  if (!bs.is_number_unsigned() || bs.get<std::uint64_t>() == 0) Reader::fail("basis_size", "expected a positive integer");
  const std::size_t m = bs.get<std::size_t>();
  const json& terms = Reader::member(doc, "terms", "document");
  if (!terms.is_array()) Reader::fail("terms", "expected an array");
  FreeElement x(field, m);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "terms[" + std::to_string(i) + "]";
    const json& t = terms[i];
    Scalar c = r.scalar(Reader::member(t, "coeff", path), path + ".coeff");
    const json& tree_j = Reader::member(t, "tree", path);
    if (!tree_j.is_string()) Reader::fail(path + ".tree", "expected a tree string");
    AugTree parsed = parse_aug_tree(tree_j.get<std::string>());
    RBAugTree tree = std::holds_alternative<RBAugTree>(parsed)
                         ? std::get<RBAugTree>(parsed)
                         : RBAugTree(std::get<BAugTree>(parsed).shape, std::get<BAugTree>(parsed).leaves,
                                     std::vector<std::uint32_t>(std::get<BAugTree>(parsed).shape.vertex_count(), 0));
    const json& word_j = Reader::member(t, "word", path);
    if (!word_j.is_array()) Reader::fail(path + ".word", "expected an array of letter indices");
    std::vector<std::uint32_t> word;
    for (const auto& w : word_j) {
      if (!w.is_number_unsigned() || w.get<std::uint64_t>() >= m) Reader::fail(path + ".word", "letter out of range");
      word.push_back(w.get<std::uint32_t>());
    }
    if (word.size() != tree.leaf_count()) Reader::fail(path + ".word", "length differs from the leaf count");
    x.add(FreeTerm(std::move(tree), std::move(word)), c);
  }
  return x;
}

std::string serialize_free_element(const FreeElement& x) {
  json doc;
  doc["field"] = write_field(x.field());
  doc["basis_size"] = x.basis_size();
  json terms = json::array();
  for (const auto& [t, c] : x.terms()) {
    json j;
    j["coeff"] = c.to_string();
    j["tree"] = to_string(t.tree);
    j["word"] = t.word;
    terms.push_back(j);
  }
  doc["terms"] = terms;
  std::ostringstream out;
  emit(out, doc, 0);
  out << "\n";
  return out.str();
}

AlgebraSpec read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

void write_spec_file(const std::string& path, const AlgebraSpec& spec) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << serialize_spec(spec);
}

}  // namespace rbalg
