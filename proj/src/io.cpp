#include "leibniz/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace leibniz {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw InputError("spec " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const json& require_key(const json& obj, const std::string& pointer, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(pointer, std::string("missing required key \"") + key + "\"");
  return *it;
}

std::uint64_t require_uint(const json& v, const std::string& pointer) {
  if (!v.is_number_integer()) schema_error(pointer, "expected a non-negative integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  auto s = v.get<std::int64_t>();
  if (s < 0) schema_error(pointer, "expected a non-negative integer");
  return static_cast<std::uint64_t>(s);
}

template <ExactField K>
LeibnizAlgebra<K> build_from_spec(const json& root, const K& field, const std::string& name, std::size_t dim) {
  const json& brackets = require_key(root, "", "brackets");
  if (!brackets.is_array()) schema_error("/brackets", "expected an array");
  StructureTensor<K> t(field, dim);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string ptr = "/brackets/" + std::to_string(e);
    const json& entry = brackets[e];
    if (!entry.is_array() || entry.size() != 4) schema_error(ptr, "expected [i, j, k, \"value\"]");
    std::size_t idx[3];
    for (std::size_t a = 0; a < 3; ++a) {
      auto v = require_uint(entry[a], ptr + "/" + std::to_string(a));
      if (v >= dim)
        schema_error(ptr + "/" + std::to_string(a),
                     "index " + std::to_string(v) + " out of range 0.." + std::to_string(dim == 0 ? 0 : dim - 1));
      idx[a] = static_cast<std::size_t>(v);
    }
    if (!entry[3].is_string()) schema_error(ptr + "/3", "expected the value as a string");
    if (!seen.insert({idx[0], idx[1], idx[2]}).second) schema_error(ptr, "duplicate entry for this (i, j, k)");
    typename K::value_type value;
    try {
      value = field.parse(entry[3].get<std::string>());
    } catch (const InputError& e) {
      schema_error(ptr + "/3", e.what());
    }
    t.set(idx[0], idx[1], idx[2], value);
  }
  return LeibnizAlgebra<K>(name, std::move(t));
}

template <ExactField K>
std::string emit(const LeibnizAlgebra<K>& L, const json& field) {
  std::ostringstream os;
  os << "{\n  \"name\": " << json(L.name()).dump() << ",\n  \"field\": " << field.dump(-1, ' ')
     << ",\n  \"dim\": " << L.dim() << ",\n  \"brackets\": [";
  bool first = true;
  const auto& f = L.field();
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& c = L.constant(i, j, k);
        if (f.is_zero(c)) continue;
        os << (first ? "\n" : ",\n") << "    [" << i << ", " << j << ", " << k << ", "
           << json(f.to_string(c)).dump() << "]";
        first = false;
      }
  os << (first ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

json scalar_json(const PrimeField&, std::uint32_t v) { return v; }
json scalar_json(const RationalField& f, const Rational& v) { return f.to_string(v); }

template <ExactField K>
json vec_json(const K& f, const Vec<K>& v) {
  auto a = json::array();
  for (const auto& x : v) a.push_back(scalar_json(f, x));
  return a;
}

template <ExactField K>
json space_json(const Subspace<K>& s) {
  auto rows = json::array();
  for (const auto& v : s.basis_vectors()) rows.push_back(vec_json(s.field(), v));
  return json{{"dim", s.dim()}, {"basis", rows}};
}

template <ExactField K>
std::string vec_text(const K& f, const Vec<K>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + f.to_string(v[i]);
  return out + ")";
}

template <ExactField K>
std::string space_text(const Subspace<K>& s) {
  std::string out = "dim " + std::to_string(s.dim()) + " [";
  auto vs = s.basis_vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + vec_text(s.field(), vs[i]);
  return out + "]";
}

template <ExactField K>
json report_json(const StructureReport<K>& r, const json& field) {
  json j;
  j["schema_version"] = 1;
  j["name"] = r.name;
  j["field"] = field;
  j["dim"] = r.dim;
  j["is_lie"] = r.is_lie;
  j["is_symmetric"] = r.is_symmetric;
  j["nilpotent"] = {{"holds", r.nilpotent.holds},
                    {"class", r.nilpotent.holds ? json(r.nilpotent.index) : json(nullptr)}};
  j["solvable"] = {{"holds", r.solvable.holds},
                   {"derived_length", r.solvable.holds ? json(r.solvable.index) : json(nullptr)}};
  j["supersolvable"] = r.supersolvable ? json(*r.supersolvable) : json(nullptr);
  j["I"] = space_json(r.I);
  j["J"] = r.J ? space_json(*r.J) : json(nullptr);
  j["square_zero_set_is_subspace"] =
      r.square_zero_set_is_subspace ? json(*r.square_zero_set_is_subspace) : json(nullptr);
  j["Z"] = space_json(r.Z);
  j["L2"] = space_json(r.L2);
  j["phi"] = r.phi ? space_json(*r.phi) : json(nullptr);
  json shape{{"tag", to_string(r.shape.tag)}};
  shape["A"] = r.shape.A ? space_json(*r.shape.A) : json(nullptr);
  shape["y"] = r.shape.y ? vec_json(r.I.field(), *r.shape.y) : json(nullptr);
  shape["extraspecial_by_assumption"] = r.shape.extraspecial_by_assumption;
  j["classification"] = std::move(shape);
  return j;
}

template <ExactField K>
std::string report_text(const StructureReport<K>& r) {
  auto yn = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream os;
  os << "algebra: " << r.name << "\n";
  os << "field: " << r.field << "  dim: " << r.dim << "\n";
  os << "lie: " << yn(r.is_lie) << "  symmetric: " << yn(r.is_symmetric) << "\n";
  os << "nilpotent: " << yn(r.nilpotent.holds);
  if (r.nilpotent.holds) os << " (class " << r.nilpotent.index << ")";
  os << "\nsolvable: " << yn(r.solvable.holds);
  if (r.solvable.holds) os << " (derived length " << r.solvable.index << ")";
  os << "\nsupersolvable: " << (r.supersolvable ? yn(*r.supersolvable) : "n/a") << "\n";
  os << "I:   " << space_text(r.I) << "\n";
  os << "J:   " << (r.J ? space_text(*r.J) : std::string("n/a (prime fields only)")) << "\n";
  os << "Z:   " << space_text(r.Z) << "\n";
  os << "L^2: " << space_text(r.L2) << "\n";
  os << "phi: " << (r.phi ? space_text(*r.phi) : std::string("n/a (prime fields only)")) << "\n";
  os << "shape: " << to_string(r.shape.tag);
  if (r.shape.A) os << "  A = " << space_text(*r.shape.A);
  if (r.shape.y) os << "  y = " << vec_text(r.I.field(), *r.shape.y);
  os << "\n";
  return os.str();
}

json node_index_json(const std::optional<std::pair<std::size_t, std::size_t>>& w) {
  return w ? json{w->first, w->second} : json(nullptr);
}

}  // namespace

AnyAlgebra parse_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("spec: invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!root.is_object()) schema_error("", "expected an object");
  for (const auto& [key, _] : root.items())
    if (key != "name" && key != "field" && key != "dim" && key != "brackets")
      schema_error("/" + key, "unknown key");
  const json& name = require_key(root, "", "name");
  if (!name.is_string()) schema_error("/name", "expected a string");
  const json& field = require_key(root, "", "field");
  if (!field.is_object()) schema_error("/field", "expected an object");
  const json& type = require_key(field, "/field", "type");
  if (!type.is_string()) schema_error("/field/type", "expected \"prime\" or \"rational\"");
  auto dim = require_uint(require_key(root, "", "dim"), "/dim");
  if (dim > kMaxSpecDim) schema_error("/dim", "dimension above " + std::to_string(kMaxSpecDim));

  if (type == "prime") {
    auto p = require_uint(require_key(field, "/field", "p"), "/field/p");
    if (p > 0xffffffffULL) schema_error("/field/p", "prime out of range");
    std::optional<PrimeField> f;
    try {
      f.emplace(static_cast<std::uint32_t>(p));
    } catch (const InputError& e) {
      schema_error("/field/p", e.what());
    }
    return build_from_spec(root, *f, name.get<std::string>(), dim);
  }
  if (type == "rational") return build_from_spec(root, RationalField{}, name.get<std::string>(), dim);
  schema_error("/field/type", "expected \"prime\" or \"rational\"");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("write to '" + path + "' failed");
}

AnyAlgebra load_spec(const std::string& path) { return parse_spec(read_file(path)); }

json field_json(const PrimeField& f) { return json{{"type", "prime"}, {"p", f.modulus()}}; }
json field_json(const RationalField&) { return json{{"type", "rational"}}; }

std::string emit_spec(const FpAlgebra& L) { return emit(L, field_json(L.field())); }
std::string emit_spec(const QAlgebra& L) { return emit(L, field_json(L.field())); }
std::string emit_spec(const AnyAlgebra& L) {
  return std::visit([](const auto& a) { return emit_spec(a); }, L);
}

json to_json(const StructureReport<PrimeField>& r) { return report_json(r, field_json(r.I.field())); }
json to_json(const StructureReport<RationalField>& r) { return report_json(r, field_json(r.I.field())); }
std::string to_text(const StructureReport<PrimeField>& r) { return report_text(r); }
std::string to_text(const StructureReport<RationalField>& r) { return report_text(r); }

std::string node_label(const FpSubspace& s) {
  std::string out = std::to_string(s.dim()) + ":[";
  auto vs = s.basis_vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + vec_text(s.field(), vs[i]);
  return out + "]";
}

LatticeSummary summarize(const SubalgebraLattice& lat) {
  return LatticeSummary{lattice_stats(lat),          is_modular(lat),          is_upper_semimodular(lat),
                        is_lower_semimodular(lat),   all_subalgebras_wqi(lat), frattini_ideal(lat)};
}

json lattice_json(const SubalgebraLattice& lat, const LatticeSummary& s) {
  json j;
  j["schema_version"] = 1;
  j["algebra"] = lat.algebra().name();
  j["field"] = field_json(lat.algebra().field());
  j["dim"] = lat.algebra().dim();
  auto nodes = json::array();
  for (std::size_t i = 0; i < lat.size(); ++i)
    nodes.push_back({{"index", i}, {"dim", lat.node(i).dim()}, {"basis", subspace_json(lat.node(i))}});
  j["nodes"] = std::move(nodes);
  auto covers = json::array();
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (auto up : lat.upper_covers(i)) covers.push_back({i, up});
  j["covers"] = std::move(covers);
  j["stats"] = {{"nodes", s.stats.nodes},
                {"height", s.stats.height},
                {"atoms", s.stats.atoms},
                {"coatoms", s.stats.coatoms},
                {"covering_edges", s.stats.covering_edges}};
  json modular{{"holds", s.modular.holds}, {"witness", nullptr}};
  if (s.modular.witness) modular["witness"] = *s.modular.witness;
  j["verdicts"] = {{"modular", modular},
                   {"upper_semimodular",
                    {{"holds", s.upper_semimodular.holds}, {"witness", node_index_json(s.upper_semimodular.witness)}}},
                   {"lower_semimodular",
                    {{"holds", s.lower_semimodular.holds}, {"witness", node_index_json(s.lower_semimodular.witness)}}},
                   {"all_wqi", {{"holds", s.all_wqi.holds}, {"witness", node_index_json(s.all_wqi.witness)}}}};
  j["frattini"] = subspace_json(s.frattini);
  return j;
}

std::string lattice_text(const SubalgebraLattice& lat, const LatticeSummary& s) {
  auto yn = [](bool b) { return b ? "true" : "false"; };
  auto label = [&](std::size_t i) { return node_label(lat.node(i)); };
  std::ostringstream os;
  os << "algebra: " << lat.algebra().name() << "\n";
  os << "nodes: " << s.stats.nodes << "  height: " << s.stats.height << "  atoms: " << s.stats.atoms
     << "  coatoms: " << s.stats.coatoms << "  covering edges: " << s.stats.covering_edges << "\n";
  os << "modular: " << yn(s.modular.holds);
  if (s.modular.witness) {
    auto [u, v, w] = *s.modular.witness;
    os << "  witness U=" << label(u) << " V=" << label(v) << " W=" << label(w);
  }
  auto pair = [&](const char* what, const PairVerdict& p, const char* a, const char* b) {
    os << "\n" << what << ": " << yn(p.holds);
    if (p.witness) os << "  witness " << a << "=" << label(p.witness->first) << " " << b << "=" << label(p.witness->second);
  };
  pair("upper_semimodular", s.upper_semimodular, "U", "B");
  pair("lower_semimodular", s.lower_semimodular, "U", "B");
  pair("all_wqi", s.all_wqi, "U", "V");
  os << "\nfrattini: " << node_label(s.frattini) << "\n";
  return os.str();
}

std::string export_dot(const SubalgebraLattice& lat) {
  std::ostringstream os;
  os << "digraph subalgebras {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i)
    os << "  n" << i << " [label=" << json(node_label(lat.node(i))).dump() << "];\n";
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (auto up : lat.upper_covers(i)) os << "  n" << i << " -> n" << up << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace leibniz
