#include "wreathkit/serialize.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wreathkit/errors.hpp"

namespace wreathkit {

using nlohmann::json;

namespace {

json field_to_json(const FieldSpec& f) {
  json j;
  if (f.is_rational()) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "prime";
    j["p"] = f.p;
  }
  return j;
}

FieldSpec field_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rationals();
  if (kind == "prime") return FieldSpec::prime(j.at("p").get<std::uint64_t>());
  throw BundleError("unknown field kind: " + kind);
}

json scalar_to_json(const FieldSpec& f, const Scalar& s) {
  if (f.is_rational()) return s.str();
  return json(std::stoull(s.str()));
}

Scalar scalar_from_json(const FieldSpec& f, const json& j) {
  if (j.is_string()) return Scalar::from_string(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
  throw BundleError("bad scalar entry");
}

}  // namespace

std::string bundle_to_json(const StructureBundle& b) {
  json j;
  j["version"] = 1;
  j["field"] = field_to_json(b.field);
  json spaces = json::object();
  for (const auto& [name, s] : b.spaces) spaces[name] = s.dim;
  j["spaces"] = spaces;
  json morphisms = json::object();
  for (const auto& [name, m] : b.morphisms) {
    json mj;
    mj["dom"] = json::array();
    for (const auto& s : m.dom()) mj["dom"].push_back(s.name);
    mj["cod"] = json::array();
    for (const auto& s : m.cod()) mj["cod"].push_back(s.name);
    json rows = json::array();
    for (std::size_t r = 0; r < m.mat().rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.mat().cols(); ++c)
        row.push_back(scalar_to_json(b.field, m.mat().at(r, c)));
      rows.push_back(row);
    }
    mj["entries"] = rows;
    morphisms[name] = mj;
  }
  j["morphisms"] = morphisms;
  j["structures"] = json::object();
  for (const auto& [name, st] : b.structures) j["structures"][name] = st;
  return j.dump(2) + "\n";
}

StructureBundle bundle_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw BundleError(std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("version")) throw BundleError("missing version field");
  if (j.at("version").get<int>() != 1) throw BundleError("unsupported bundle version");
  StructureBundle b;
  b.field = field_from_json(j.at("field"));
  for (const auto& [name, dim] : j.at("spaces").items())
    b.add_space(SpaceRef{name, dim.get<std::int64_t>()});
  for (const auto& [name, mj] : j.value("morphisms", json::object()).items()) {
    std::vector<SpaceRef> dom, cod;
    for (const auto& s : mj.at("dom")) dom.push_back(b.space(s.get<std::string>()));
    for (const auto& s : mj.at("cod")) cod.push_back(b.space(s.get<std::string>()));
    const auto rows = static_cast<std::size_t>(total_dim(cod));
    const auto cols = static_cast<std::size_t>(total_dim(dom));
    const json& entries = mj.at("entries");
    if (entries.size() != rows)
      throw BundleError("morphism '" + name + "': expected " + std::to_string(rows) + " rows");
    Mat m(b.field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (entries[r].size() != cols)
        throw BundleError("morphism '" + name + "': row " + std::to_string(r) + " has " +
                          std::to_string(entries[r].size()) + " entries, expected " +
                          std::to_string(cols));
      for (std::size_t c = 0; c < cols; ++c)
        m.at(r, c) = scalar_from_json(b.field, entries[r][c]);
    }
    b.add_morphism(name, Morphism(std::move(dom), std::move(cod), std::move(m)));
  }
  for (const auto& [name, st] : j.value("structures", json::object()).items())
    b.structures[name] = st;
  return b;
}

StructureBundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BundleError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return bundle_from_json(ss.str());
}

void save_bundle(const StructureBundle& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw BundleError("cannot write " + path);
  out << bundle_to_json(b);
}

std::string report_to_json(const CheckReport& rep) {
  json j;
  j["version"] = 1;
  j["structure"] = rep.structure;
  j["kind"] = rep.kind;
  j["pass"] = rep.all_pass();
  json axioms = json::array();
  for (const auto& it : rep.items) {
    json a;
    a["id"] = it.id;
    a["tag"] = it.tag;
    a["pass"] = it.pass;
    if (it.violation_cod) {
      a["first_violation"] = {{"cod", *it.violation_cod}, {"dom", *it.violation_dom}};
    } else {
      a["first_violation"] = nullptr;
    }
    a["residual_zero"] = it.pass;
    axioms.push_back(a);
  }
  j["axioms"] = axioms;
  j["wall_ms"] = rep.wall_ms;
  return j.dump(2) + "\n";
}

std::string report_to_text(const CheckReport& rep) {
  std::ostringstream out;
  out << rep.kind << " check: " << rep.structure << "\n";
  for (const auto& it : rep.items) {
    out << "  [" << (it.pass ? "PASS" : "FAIL") << "] " << it.id;
    if (!it.tag.empty()) out << "  (" << it.tag << ")";
    if (!it.pass && it.violation_cod) {
      out << "  first violation at cod=(";
      for (std::size_t i = 0; i < it.violation_cod->size(); ++i) {
        if (i) out << ",";
        out << (*it.violation_cod)[i];
      }
      out << ") dom=(";
      for (std::size_t i = 0; i < it.violation_dom->size(); ++i) {
        if (i) out << ",";
        out << (*it.violation_dom)[i];
      }
      out << ")";
    }
    out << "\n";
  }
  out << (rep.all_pass() ? "all axioms hold" : "some axioms FAIL") << "\n";
  return out.str();
}

}  // namespace wreathkit
