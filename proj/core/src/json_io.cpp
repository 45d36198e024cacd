#include "maxrho/json_io.hpp"

#include "maxrho/error.hpp"
#include "maxrho/graph6.hpp"

namespace maxrho {

namespace {

Json number(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("json: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("json: field '") + key + "' has the wrong type");
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), e.byte);
  }
}

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& c : p.cells()) out.push_back(c);
  return out;
}

Partition partition_from_json(std::size_t n, const Json& j) {
  if (!j.is_array()) throw InputError("partition json must be an array of arrays");
  std::vector<VertexSet> cells;
  for (const auto& c : j) {
    if (!c.is_array()) throw InputError("partition json must be an array of arrays");
    VertexSet cell;
    for (const auto& v : c) {
      if (!v.is_number_unsigned()) throw InputError("partition json: vertices must be nonnegative integers");
      cell.push_back(v.get<Vertex>());
    }
    cells.push_back(std::move(cell));
  }
  return Partition(n, std::move(cells));
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j)
      row.push_back(Json::array({number(m(i, j).get_num()), number(m(i, j).get_den())}));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const IntMatrix& m) { return to_json(to_rational(m)); }

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(number(c));
  return out;
}

Json to_json(const ComplementProfile& p) {
  return Json{{"type1", p.type1}, {"type2", p.type2}, {"type3", p.type3}};
}

ComplementProfile profile_from_json(const Json& j) {
  ComplementProfile p;
  p.type1 = j.contains("type1") ? field<std::size_t>(j, "type1") : 0;
  if (j.contains("type2")) p.type2 = field<std::vector<std::size_t>>(j, "type2");
  if (j.contains("type3")) p.type3 = field<std::vector<std::size_t>>(j, "type3");
  return p;
}

Json to_json(const FamilyId& id) {
  Json j{{"family", to_string(id.tag)}, {"n", id.n}};
  if (id.delta) j["delta"] = *id.delta;
  if (id.profile) j["profile"] = to_json(*id.profile);
  return j;
}

FamilyId family_id_from_json(const Json& j) {
  FamilyId id;
  id.tag = family_tag_from_string(field<std::string>(j, "family"));
  id.n = field<std::size_t>(j, "n");
  if (j.contains("delta")) id.delta = field<std::size_t>(j, "delta");
  if (j.contains("profile")) id.profile = profile_from_json(j.at("profile"));
  return id;
}

Json to_json(const SwitchMove& m) { return Json{{"kind", to_string(m.kind)}, {"vertices", m.vertices}}; }

SwitchMove move_from_json(const Json& j) {
  return {move_kind_from_string(field<std::string>(j, "kind")), field<VertexSet>(j, "vertices")};
}

Json to_json(const SwitchCertificate& c) {
  return Json{{"rho_before", c.rho_before},
              {"rho_after", c.rho_after},
              {"hypothesis_value", c.hypothesis_value},
              {"hypothesis_holds", c.hypothesis_holds},
              {"equality_case", c.equality_case},
              {"conclusion_holds", c.conclusion_holds}};
}

Json to_json(const ExtremalReport& r) {
  Json j{{"rho_max", r.rho_max}, {"total_classes", r.total_classes}, {"maximizers", Json::array()}};
  for (std::size_t i = 0; i < r.maximizers.size(); ++i)
    j["maximizers"].push_back(
        Json{{"graph6", graph6_encode(r.maximizers[i])}, {"degree_sequence", r.degree_sequences[i]}});
  return j;
}

}  // namespace maxrho
