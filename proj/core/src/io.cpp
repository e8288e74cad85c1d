#include "hopfkit/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

namespace hopfkit {

namespace {

using json = nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::size_t as_index(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(where + ": expected a non-negative integer index");
  }
  const auto i = v.get<std::size_t>();
  if (i >= bound) throw ParseError(where + ": index " + std::to_string(i) + " out of range");
  return i;
}

CycloScalar as_scalar(const json& v, const std::string& where) {
  if (v.is_number_integer()) return CycloScalar(v.get<std::int64_t>());
  if (!v.is_string()) throw ParseError(where + ": expected a scalar string");
  try {
    return CycloScalar::parse(v.get<std::string>());
  } catch (const ArithmeticError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

const json& entries(const json& obj, const char* key, std::size_t arity) {
  const json& arr = require(obj, key);
  if (!arr.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  for (std::size_t n = 0; n < arr.size(); ++n) {
    if (!arr[n].is_array() || arr[n].size() != arity) {
      throw ParseError(std::string("field '") + key + "' entry " + std::to_string(n) + ": expected " +
                       std::to_string(arity) + " items");
    }
  }
  return arr;
}

std::string where(const char* key, std::size_t n) { return std::string(key) + "[" + std::to_string(n) + "]"; }

Vec sparse_vector(const json& arr, std::size_t dim, const std::string& ctx) {
  if (!arr.is_array()) throw ParseError(ctx + ": expected an array of [index, scalar] pairs");
  Vec v(dim);
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const json& e = arr[n];
    const std::string w = ctx + "[" + std::to_string(n) + "]";
    if (!e.is_array() || e.size() != 2) throw ParseError(w + ": expected [index, scalar]");
    v[as_index(e[0], dim, w)] += as_scalar(e[1], w);
  }
  return v;
}

FiniteGroup group_from_json(const json& g) {
  if (g.is_string()) {
    try {
      return FiniteGroup::builtin(g.get<std::string>());
    } catch (const StructureError& e) {
      throw ParseError(std::string("unknown group: ") + e.what());
    }
  }
  const json& table = require(g, "table");
  if (!table.is_array() || table.empty()) throw ParseError("group table must be a non-empty array");
  const std::size_t n = table.size();
  FiniteGroup::Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!table[i].is_array() || table[i].size() != n) throw ParseError("group table must be square");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = as_index(table[i][j], n, "table");
  }
  std::vector<std::string> labels;
  if (g.contains("labels")) labels = g.at("labels").get<std::vector<std::string>>();
  const std::string name = g.value("name", std::string{});
  return FiniteGroup::from_table(std::move(t), std::move(labels), name);
}

const char* hint_kind_name(CharacterHint::Kind k) {
  switch (k) {
    case CharacterHint::Kind::GroupAlgebra:
      return "group_algebra";
    case CharacterHint::Kind::DualGroupAlgebra:
      return "dual_group_algebra";
    case CharacterHint::Kind::Double:
      return "double";
    case CharacterHint::Kind::Auto:
      break;
  }
  return "auto";
}

void append_sparse(std::ostringstream& os, const Vec& v) {
  os << "[";
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    os << (first ? "" : ", ") << "[" << i << ", " << quote(v[i].to_string()) << "]";
    first = false;
  }
  os << "]";
}

void append_rows(std::ostringstream& os, const std::vector<std::string>& rows) {
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? ",\n    " : "\n    ") << rows[i];
  os << (rows.empty() ? "]" : "\n  ]");
}

std::string group_body(const FiniteGroup& g, const std::string& indent) {
  std::ostringstream os;
  os << "{\n" << indent << "  \"name\": " << quote(g.name()) << ",\n" << indent << "  \"labels\": [";
  for (std::size_t i = 0; i < g.order(); ++i) os << (i ? ", " : "") << quote(g.labels()[i]);
  os << "],\n" << indent << "  \"table\": [";
  for (std::size_t i = 0; i < g.order(); ++i) {
    os << (i ? ",\n" : "\n") << indent << "    [";
    for (std::size_t j = 0; j < g.order(); ++j) os << (j ? ", " : "") << g.mul(i, j);
    os << "]";
  }
  os << "\n" << indent << "  ]\n" << indent << "}";
  return os.str();
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

AlgebraFile parse_algebra(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("algebra file must be a JSON object");
  const std::size_t n = as_index(require(doc, "dim"), static_cast<std::size_t>(-1), "dim");
  if (n == 0) throw ParseError("dim must be positive");

  HopfBuilder b(n);
  b.name(doc.value("name", std::string{}));
  if (doc.contains("basis")) {
    const json& basis = doc.at("basis");
    if (!basis.is_array() || basis.size() != n) throw ParseError("basis must list dim labels");
    std::vector<std::string> labels;
    for (const json& l : basis) {
      if (!l.is_string()) throw ParseError("basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    b.labels(std::move(labels));
  }
  const json& mult = entries(doc, "mult", 4);
  for (std::size_t k = 0; k < mult.size(); ++k) {
    const std::string w = where("mult", k);
    b.mult(as_index(mult[k][0], n, w), as_index(mult[k][1], n, w), as_index(mult[k][2], n, w),
           as_scalar(mult[k][3], w));
  }
  b.unit(sparse_vector(require(doc, "unit"), n, "unit"));
  const json& comult = entries(doc, "comult", 4);
  for (std::size_t k = 0; k < comult.size(); ++k) {
    const std::string w = where("comult", k);
    b.comult(as_index(comult[k][0], n, w), as_index(comult[k][1], n, w), as_index(comult[k][2], n, w),
             as_scalar(comult[k][3], w));
  }
  b.counit(sparse_vector(require(doc, "counit"), n, "counit"));
  const json& s = entries(doc, "antipode", 3);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const std::string w = where("antipode", k);
    b.antipode(as_index(s[k][0], n, w), as_index(s[k][1], n, w), as_scalar(s[k][2], w));
  }

  AlgebraFile out;
  out.hopf = b.build();
  if (doc.contains("rmatrix")) {
    const json& r = entries(doc, "rmatrix", 3);
    TensorElement t(n, n);
    for (std::size_t k = 0; k < r.size(); ++k) {
      const std::string w = where("rmatrix", k);
      t(as_index(r[k][0], n, w), as_index(r[k][1], n, w)) += as_scalar(r[k][2], w);
    }
    out.r = std::move(t);
  }
  if (doc.contains("hint")) {
    const json& h = doc.at("hint");
    const std::string kind = require(h, "kind").get<std::string>();
    if (kind == "group_algebra") {
      out.hint.kind = CharacterHint::Kind::GroupAlgebra;
    } else if (kind == "dual_group_algebra") {
      out.hint.kind = CharacterHint::Kind::DualGroupAlgebra;
    } else if (kind == "double") {
      out.hint.kind = CharacterHint::Kind::Double;
    } else if (kind != "auto") {
      throw ParseError("unknown hint kind '" + kind + "'");
    }
    if (out.hint.kind != CharacterHint::Kind::Auto) out.hint.group = group_from_json(require(h, "group"));
  }
  return out;
}

AlgebraFile load_algebra(const std::filesystem::path& path) { return parse_algebra(read_text_file(path)); }

std::string dump_algebra(const FiniteDimHopf& h, const std::optional<TensorElement>& r, const CharacterHint& hint) {
  const std::size_t n = h.dim();
  std::ostringstream os;
  os << "{\n  \"name\": " << quote(h.name()) << ",\n  \"dim\": " << n << ",\n  \"basis\": [";
  for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << quote(h.labels()[i]);
  os << "],\n  \"mult\": ";
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<FiniteDimHopf::Term> terms = h.mult_terms(i, j);
      std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
      for (const auto& t : terms) {
        rows.push_back("[" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(t.index) + ", " +
                       quote(t.coeff.to_string()) + "]");
      }
    }
  }
  append_rows(os, rows);
  os << ",\n  \"unit\": ";
  append_sparse(os, h.unit());
  os << ",\n  \"comult\": ";
  rows.clear();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FiniteDimHopf::Term2> terms = h.comult_terms(i);
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return std::tie(a.left, a.right) < std::tie(b.left, b.right); });
    for (const auto& t : terms) {
      rows.push_back("[" + std::to_string(i) + ", " + std::to_string(t.left) + ", " + std::to_string(t.right) + ", " +
                     quote(t.coeff.to_string()) + "]");
    }
  }
  append_rows(os, rows);
  os << ",\n  \"counit\": ";
  append_sparse(os, h.counit());
  os << ",\n  \"antipode\": ";
  rows.clear();
  const ExactMatrix& s = h.antipode_matrix();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!s(i, j).is_zero()) {
        rows.push_back("[" + std::to_string(j) + ", " + std::to_string(i) + ", " + quote(s(i, j).to_string()) + "]");
      }
    }
  }
  append_rows(os, rows);
  if (r) {
    os << ",\n  \"rmatrix\": ";
    rows.clear();
    for (const auto& e : r->entries()) {
      rows.push_back("[" + std::to_string(e.left) + ", " + std::to_string(e.right) + ", " +
                     quote(e.coeff.to_string()) + "]");
    }
    append_rows(os, rows);
  }
  if (hint.kind != CharacterHint::Kind::Auto && hint.group) {
    os << ",\n  \"hint\": {\n    \"kind\": " << quote(hint_kind_name(hint.kind))
       << ",\n    \"group\": " << group_body(*hint.group, "    ") << "\n  }";
  }
  os << "\n}\n";
  return os.str();
}

void save_algebra(const std::filesystem::path& path, const FiniteDimHopf& h, const std::optional<TensorElement>& r,
                  const CharacterHint& hint) {
  write_text_file(path, dump_algebra(h, r, hint));
}

FiniteGroup parse_group(std::string_view text) { return group_from_json(parse_json(text)); }

FiniteGroup load_group(const std::filesystem::path& path) { return parse_group(read_text_file(path)); }

std::string dump_group(const FiniteGroup& g) { return group_body(g, "") + "\n"; }

std::vector<Vec> parse_vectors(std::string_view text, std::size_t dim) {
  const json doc = parse_json(text);
  const std::size_t d = as_index(require(doc, "dim"), static_cast<std::size_t>(-1), "dim");
  if (d != dim) throw ParseError("vector file has dim " + std::to_string(d) + ", expected " + std::to_string(dim));
  const json& vs = require(doc, "vectors");
  if (!vs.is_array()) throw ParseError("field 'vectors' must be an array");
  std::vector<Vec> out;
  for (std::size_t k = 0; k < vs.size(); ++k) out.push_back(sparse_vector(vs[k], dim, where("vectors", k)));
  return out;
}

std::vector<Vec> load_vectors(const std::filesystem::path& path, std::size_t dim) {
  return parse_vectors(read_text_file(path), dim);
}

std::string dump_vectors(std::size_t dim, const std::vector<Vec>& vectors) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << dim << ",\n  \"vectors\": [";
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    os << (k ? ",\n    " : "\n    ");
    append_sparse(os, vectors[k]);
  }
  os << (vectors.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

std::string dump_morphism(const HopfMorphism& m) {
  const ExactMatrix& a = m.matrix();
  std::ostringstream os;
  os << "{\n  \"source\": " << quote(m.source()->name()) << ",\n  \"target\": " << quote(m.target()->name())
     << ",\n  \"rows\": " << a.rows() << ",\n  \"cols\": " << a.cols() << ",\n  \"entries\": ";
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a(r, c).is_zero()) {
        rows.push_back("[" + std::to_string(r) + ", " + std::to_string(c) + ", " + quote(a(r, c).to_string()) + "]");
      }
    }
  }
  append_rows(os, rows);
  os << "\n}\n";
  return os.str();
}

}  // namespace hopfkit
