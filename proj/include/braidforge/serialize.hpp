#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "braidforge/fusion.hpp"
#include "braidforge/premodular.hpp"
#include "braidforge/qform.hpp"
#include "braidforge/report.hpp"
#include "braidforge/witt.hpp"

namespace braidforge::io {

using Json = nlohmann::json;

// Readers throw Error(SchemaError) naming the offending field.
Json group_to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const Json& j);
Json element_to_json(const Element& e);

Json rootexp_to_json(const RootExp& r);
RootExp rootexp_from_json(const Json& j);
Json cyclo_to_json(const CycloNum& c);
CycloNum cyclo_from_json(const Json& j);

Json qform_to_json(const PreMetricGroup& m);
PreMetricGroup qform_from_json(const Json& j);

Json ring_to_json(const FusionRing& r);
FusionRing ring_from_json(const Json& j);

Json datum_to_json(const PreModularDatum& d);
PreModularDatum datum_from_json(const Json& j);

Json character_to_json(const std::vector<int>& chi);
std::vector<int> character_from_json(const Json& j);

Json subgroup_to_json(const Subgroup& h);
Json hom_to_json(const GroupHom& f);

Json checks_to_json(const std::vector<Check>& checks);

Json parse_file(const std::string& path);

}  // namespace braidforge::io
