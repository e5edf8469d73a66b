#include "braidforge/serialize.hpp"

#include <fstream>

#include "braidforge/error.hpp"

namespace braidforge::io {

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) fail(ErrorKind::SchemaError, where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(ErrorKind::SchemaError, where + ": missing field \"" + name + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* name, const std::string& where) {
  const Json& a = field(j, name, where);
  if (!a.is_array()) fail(ErrorKind::SchemaError, where + "." + name + ": expected an array");
  return a;
}

int64_t as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(ErrorKind::SchemaError, where + ": expected an integer");
  return j.get<int64_t>();
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(ErrorKind::SchemaError, where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

Json group_to_json(const FinAbGroup& g) { return Json{{"orders", g.orders()}}; }

FinAbGroup group_from_json(const Json& j) {
  std::vector<int64_t> orders;
  for (const Json& o : array_field(j, "orders", "group")) orders.push_back(as_int(o, "group.orders"));
  return FinAbGroup(std::move(orders));
}

Json element_to_json(const Element& e) { return Json(e); }

Json rootexp_to_json(const RootExp& r) { return r.str(); }

RootExp rootexp_from_json(const Json& j) { return RootExp::parse(as_string(j, "fraction")); }

Json cyclo_to_json(const CycloNum& c) {
  Json coeffs = Json::array();
  for (const mpq_class& q : c.coeffs()) coeffs.push_back(rational_str(q));
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

CycloNum cyclo_from_json(const Json& j) {
  const int64_t n = as_int(field(j, "conductor", "cyclotomic"), "cyclotomic.conductor");
  if (n < 1) fail(ErrorKind::SchemaError, "cyclotomic.conductor must be positive");
  std::vector<mpq_class> c;
  for (const Json& x : array_field(j, "coeffs", "cyclotomic")) c.push_back(parse_rational(as_string(x, "cyclotomic.coeffs")));
  if (static_cast<int64_t>(c.size()) > euler_phi(n))
    fail(ErrorKind::SchemaError, "cyclotomic.coeffs: more than phi(conductor) entries");
  return CycloNum::from_coeffs(n, std::move(c));
}

Json qform_to_json(const PreMetricGroup& m) {
  Json values = Json::array();
  for (const RootExp& v : m.values()) values.push_back(v.str());
  return Json{{"group", group_to_json(m.group())}, {"values", values}};
}

PreMetricGroup qform_from_json(const Json& j) {
  FinAbGroup g = group_from_json(field(j, "group", "qform"));
  std::vector<RootExp> values;
  for (const Json& v : array_field(j, "values", "qform")) values.push_back(rootexp_from_json(v));
  if (static_cast<int64_t>(values.size()) != g.order())
    fail(ErrorKind::SchemaError, "qform.values: expected " + std::to_string(g.order()) + " entries, got " +
                                     std::to_string(values.size()));
  return PreMetricGroup::validate(std::move(g), std::move(values));
}

Json ring_to_json(const FusionRing& r) {
  return Json{{"labels", r.labels()}, {"unit", r.unit()}, {"dual", r.duals()}, {"N", r.table()}};
}

FusionRing ring_from_json(const Json& j) {
  std::vector<std::string> labels;
  for (const Json& l : array_field(j, "labels", "ring")) labels.push_back(as_string(l, "ring.labels"));
  const int64_t unit = as_int(field(j, "unit", "ring"), "ring.unit");
  std::vector<size_t> dual;
  for (const Json& d : array_field(j, "dual", "ring")) {
    int64_t v = as_int(d, "ring.dual");
    if (v < 0) fail(ErrorKind::SchemaError, "ring.dual: negative index");
    dual.push_back(static_cast<size_t>(v));
  }
  FusionTable n;
  for (const Json& a : array_field(j, "N", "ring")) {
    if (!a.is_array()) fail(ErrorKind::SchemaError, "ring.N: expected nested arrays");
    auto& row = n.emplace_back();
    for (const Json& b : a) {
      if (!b.is_array()) fail(ErrorKind::SchemaError, "ring.N: expected nested arrays");
      auto& col = row.emplace_back();
      for (const Json& c : b) col.push_back(as_int(c, "ring.N"));
    }
  }
  if (unit < 0) fail(ErrorKind::SchemaError, "ring.unit: negative index");
  return FusionRing::validate(std::move(labels), static_cast<size_t>(unit), std::move(dual), n);
}

Json datum_to_json(const PreModularDatum& d) {
  Json twists = Json::array(), dims = Json::array();
  for (const RootExp& t : d.twists()) twists.push_back(t.str());
  for (const CycloNum& c : d.dims()) dims.push_back(cyclo_to_json(c));
  return Json{{"ring", ring_to_json(d.ring())}, {"twists", twists}, {"dims", dims}};
}

PreModularDatum datum_from_json(const Json& j) {
  FusionRing r = ring_from_json(field(j, "ring", "datum"));
  std::vector<RootExp> twists;
  for (const Json& t : array_field(j, "twists", "datum")) twists.push_back(rootexp_from_json(t));
  std::vector<CycloNum> dims;
  for (const Json& c : array_field(j, "dims", "datum")) dims.push_back(cyclo_from_json(c));
  return PreModularDatum::build(std::move(r), std::move(twists), std::move(dims));
}

Json character_to_json(const std::vector<int>& chi) { return Json{{"chi", chi}}; }

std::vector<int> character_from_json(const Json& j) {
  std::vector<int> chi;
  for (const Json& c : array_field(j, "chi", "character")) chi.push_back(static_cast<int>(as_int(c, "character.chi")));
  return chi;
}

Json subgroup_to_json(const Subgroup& h) {
  Json members = Json::array();
  for (const Element& e : h.elements()) members.push_back(e);
  return members;
}

Json hom_to_json(const GroupHom& f) { return Json(f.images()); }

Json checks_to_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const Check& c : checks)
    out.push_back(Json{{"name", c.name}, {"paper_anchor", c.anchor}, {"status", c.status}, {"witness", c.witness}});
  return out;
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::SchemaError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::SchemaError, path + ": " + e.what());
  }
}

}  // namespace braidforge::io
