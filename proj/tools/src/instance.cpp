#include "lsakit_cli/instance.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>

#include "lsakit/parser.hpp"

namespace lsakit::cli {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& message) {
  throw Error(Errc::SchemaError, (path.empty() ? "/" : path) + ": " + message);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const json& array_of(const json& node, std::size_t size, const std::string& path,
                     const char* what) {
  if (!node.is_array()) schema(path, std::string("expected an array of ") + what);
  if (node.size() != size) {
    schema(path, "expected " + std::to_string(size) + " " + what + ", got " +
                     std::to_string(node.size()));
  }
  return node;
}

class Reader {
 public:
  explicit Reader(std::vector<std::string> coords) : coords_(std::move(coords)) {}

  const std::vector<std::string>& coords() const { return coords_; }
  std::size_t nvars() const { return coords_.size(); }

  Poly poly(const json& node, const std::string& path) const {
    if (node.is_number_integer()) return Poly::constant(nvars(), Rational(node.get<long>()));
    if (!node.is_string()) schema(path, "expected a polynomial string");
    const auto text = node.get<std::string>();
    try {
      return parse_poly(text, coords_).extended(nvars());
    } catch (const SyntaxError& e) {
      throw InstanceSyntaxError(e, path, text);
    } catch (const Error& e) {
      if (e.code() == Errc::UnknownVariable) throw Error(Errc::UnknownVariable, path + ": " + e.what());
      throw;
    }
  }

  Section section(const json& node, std::size_t rank, const std::string& path) const {
    array_of(node, rank, path, "components");
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < rank; ++i) comps.push_back(poly(node[i], child(path, i)));
    return Section(std::move(comps));
  }

  VectorField field(const json& node, const std::string& path) const {
    array_of(node, nvars(), path, "vector field components");
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < nvars(); ++i) comps.push_back(poly(node[i], child(path, i)));
    return VectorField(std::move(comps));
  }

  /// Rectangular matrix; the shape is taken from the data unless given.
  PolyMatrix matrix(const json& node, const std::string& path, std::optional<std::size_t> rows = {},
                    std::optional<std::size_t> cols = {}) const {
    if (!node.is_array() || node.empty()) schema(path, "expected a nonempty array of rows");
    if (rows) array_of(node, *rows, path, "rows");
    const std::size_t m = node.size();
    if (!node[0].is_array()) schema(child(path, 0), "expected a row array");
    const std::size_t n = cols ? *cols : node[0].size();
    if (n == 0) schema(child(path, 0), "rows must be nonempty");
    PolyMatrix out(m, n, nvars());
    for (std::size_t i = 0; i < m; ++i) {
      const std::string rp = child(path, i);
      array_of(node[i], n, rp, "entries");
      for (std::size_t j = 0; j < n; ++j) out(i, j) = poly(node[i][j], child(rp, j));
    }
    return out;
  }

 private:
  std::vector<std::string> coords_;
};

std::vector<std::string> identifiers(const json& node, const std::string& path) {
  if (!node.is_array()) schema(path, "expected an array of coordinate names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string p = child(path, i);
    if (!node[i].is_string()) schema(p, "expected a string");
    auto name = node[i].get<std::string>();
    const bool ident = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0])) &&
                       std::all_of(name.begin(), name.end(), [](char c) {
                         return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                       });
    if (!ident) schema(p, "\"" + name + "\" is not an identifier");
    if (!seen.insert(name).second) schema(p, "duplicate coordinate \"" + name + "\"");
    out.push_back(std::move(name));
  }
  return out;
}

void check_keys(const json& node, const std::string& path, std::initializer_list<const char*> keys) {
  for (const auto& [key, value] : node.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return key == k; }) ==
        keys.end()) {
      schema(child(path, key), "unknown key");
    }
  }
}

Representation read_representation(const json& node, const Reader& rd, const LSAlgebroid& a) {
  const std::string path = "/representation";
  if (node.is_string()) {
    if (node.get<std::string>() != "left") schema(path, "expected \"left\" or an object");
    return build_left_mult_rep(a);
  }
  if (!node.is_object()) schema(path, "expected \"left\" or an object");
  check_keys(node, path, {"rank", "rho", "mu"});
  if (!node.contains("rank") || !node["rank"].is_number_unsigned() || node["rank"] == 0) {
    schema(child(path, "rank"), "expected a positive integer");
  }
  const auto s = node["rank"].get<std::size_t>();
  const std::size_t r = a.rank();
  Representation rep = Representation::zero(r, s, a.nvars());
  if (!node.contains("rho")) schema(child(path, "rho"), "missing");
  array_of(node["rho"], r, child(path, "rho"), "matrices");
  for (std::size_t i = 0; i < r; ++i) {
    rep.rho[i] = rd.matrix(node["rho"][i], child(child(path, "rho"), i), s, s);
  }
  if (node.contains("mu")) {
    array_of(node["mu"], r, child(path, "mu"), "matrices");
    for (std::size_t i = 0; i < r; ++i) {
      rep.mu[i] = rd.matrix(node["mu"][i], child(child(path, "mu"), i), s, s);
    }
  }
  return rep;
}

MultiDerivation read_deformation(const json& node, const Reader& rd, std::size_t r,
                                 const std::string& path) {
  if (!node.is_object()) schema(path, "expected an object with \"values\" and \"sigma\"");
  check_keys(node, path, {"values", "sigma"});
  MultiDerivation w(r, 2, rd.nvars());
  if (!node.contains("values")) schema(child(path, "values"), "missing");
  const std::string vp = child(path, "values");
  array_of(node["values"], r, vp, "rows");
  for (std::size_t i = 0; i < r; ++i) {
    array_of(node["values"][i], r, child(vp, i), "sections");
    for (std::size_t j = 0; j < r; ++j) {
      w.set_value({i}, j, rd.section(node["values"][i][j], r, child(child(vp, i), j)));
    }
  }
  if (node.contains("sigma")) {
    const std::string sp = child(path, "sigma");
    array_of(node["sigma"], r, sp, "vector fields");
    for (std::size_t i = 0; i < r; ++i) w.set_symbol({i}, rd.field(node["sigma"][i], child(sp, i)));
  }
  return w;
}

}  // namespace

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Instance parse_instance(const json& doc) {
  if (!doc.is_object()) schema("", "expected a JSON object");
  check_keys(doc, "", {"name", "description", "coordinates", "rank", "structure", "anchor",
                       "representation", "bilinear_form", "endomorphisms", "kernel_frame",
                       "deformations", "action"});
  Instance inst;
  inst.digest = fnv1a64_hex(doc.dump());
  for (const char* key : {"name", "description"}) {
    if (!doc.contains(key)) continue;
    if (!doc[key].is_string()) schema(child("", key), "expected a string");
  }
  inst.name = doc.value("name", "");
  inst.description = doc.value("description", "");

  if (!doc.contains("coordinates")) schema("/coordinates", "missing");
  const Reader rd(identifiers(doc["coordinates"], "/coordinates"));
  if (!doc.contains("rank") || !doc["rank"].is_number_unsigned() || doc["rank"] == 0) {
    schema("/rank", "expected a positive integer");
  }
  const auto r = doc["rank"].get<std::size_t>();

  if (!doc.contains("structure")) schema("/structure", "missing");
  array_of(doc["structure"], r, "/structure", "rows");
  std::vector<std::vector<Section>> table(r, std::vector<Section>(r));
  for (std::size_t i = 0; i < r; ++i) {
    const std::string rp = child("/structure", i);
    array_of(doc["structure"][i], r, rp, "products");
    for (std::size_t j = 0; j < r; ++j) {
      table[i][j] = rd.section(doc["structure"][i][j], r, child(rp, j));
    }
  }
  std::vector<VectorField> anchor;
  if (doc.contains("anchor")) {
    array_of(doc["anchor"], r, "/anchor", "anchor images");
    for (std::size_t i = 0; i < r; ++i) {
      anchor.push_back(rd.field(doc["anchor"][i], child("/anchor", i)));
    }
  } else if (rd.nvars() == 0) {
    anchor.assign(r, VectorField::zero(0));
  } else {
    schema("/anchor", "missing");
  }
  inst.algebroid = LSAlgebroid(rd.coords(), std::move(table), std::move(anchor));

  if (doc.contains("representation")) {
    inst.representation = read_representation(doc["representation"], rd, inst.algebroid);
  }
  if (doc.contains("bilinear_form")) {
    inst.bilinear_form = rd.matrix(doc["bilinear_form"], "/bilinear_form", r, r);
  }
  if (doc.contains("endomorphisms")) {
    const json& node = doc["endomorphisms"];
    if (!node.is_object()) schema("/endomorphisms", "expected an object of named matrices");
    for (const auto& [key, value] : node.items()) {
      inst.endomorphisms.emplace(key, rd.matrix(value, child("/endomorphisms", key)));
    }
  }
  if (doc.contains("kernel_frame")) {
    const json& node = doc["kernel_frame"];
    if (!node.is_array()) schema("/kernel_frame", "expected an array of sections");
    std::vector<Section> frame;
    for (std::size_t i = 0; i < node.size(); ++i) {
      frame.push_back(rd.section(node[i], r, child("/kernel_frame", i)));
    }
    inst.kernel_frame = std::move(frame);
  }
  if (doc.contains("deformations")) {
    const json& node = doc["deformations"];
    if (!node.is_object()) schema("/deformations", "expected an object of named deformations");
    for (const auto& [key, value] : node.items()) {
      inst.deformations.emplace(key, read_deformation(value, rd, r, child("/deformations", key)));
    }
  }
  if (doc.contains("action")) {
    const json& node = doc["action"];
    const std::string path = "/action";
    if (!node.is_object()) schema(path, "expected an object with \"coordinates\" and \"fields\"");
    check_keys(node, path, {"coordinates", "fields"});
    if (!node.contains("coordinates")) schema(child(path, "coordinates"), "missing");
    if (!node.contains("fields")) schema(child(path, "fields"), "missing");
    const Reader ard(identifiers(node["coordinates"], child(path, "coordinates")));
    array_of(node["fields"], r, child(path, "fields"), "vector fields");
    ActionBlock block;
    block.coordinates = ard.coords();
    for (std::size_t i = 0; i < r; ++i) {
      block.fields.push_back(ard.field(node["fields"][i], child(child(path, "fields"), i)));
    }
    inst.action = std::move(block);
  }
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot read " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::SchemaError, "/: invalid JSON: " + std::string(e.what()));
  }
  Instance inst = parse_instance(doc);
  if (inst.name.empty()) inst.name = path.stem().string();
  return inst;
}

json matrix_to_json(const PolyMatrix& m, const std::vector<std::string>& coords) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string(coords));
    rows.push_back(std::move(row));
  }
  return rows;
}

json algebroid_to_json(const FrameAlgebroid& a, const char* table_key) {
  const auto& coords = a.coords();
  json out;
  out["coordinates"] = coords;
  out["rank"] = a.rank();
  json table = json::array();
  for (const auto& row : a.table()) {
    json jrow = json::array();
    for (const auto& s : row) {
      json comps = json::array();
      for (const auto& p : s.components()) comps.push_back(p.to_string(coords));
      jrow.push_back(std::move(comps));
    }
    table.push_back(std::move(jrow));
  }
  out[table_key] = std::move(table);
  json anchor = json::array();
  for (const auto& v : a.anchors()) {
    json comps = json::array();
    for (const auto& p : v.components()) comps.push_back(p.to_string(coords));
    anchor.push_back(std::move(comps));
  }
  out["anchor"] = std::move(anchor);
  return out;
}

}  // namespace lsakit::cli
