#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "pogroup/cone_geometry.hpp"
#include "pogroup/downset.hpp"
#include "pogroup/hull.hpp"
#include "pogroup/region.hpp"

namespace pogroup::io {

using Json = nlohmann::json;

/// Stable text form: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

/// Parses JSON text; syntax errors report line and column.
Json parse_text(const std::string& text, const std::string& source = "input");
Json read_file(const std::string& path);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path);

Json to_json(const ConePresentation& cone);
ConePresentation cone_from_json(const Json& j, const std::string& path = "group");

Json face_to_json(const ConePresentation& cone, const Face& face);
Json to_json(const ConePresentation& cone, const FaceLattice& lattice);

Json to_json(const DownsetExpr& d);
Json pieces_to_json(const DownsetExpr& d);
DownsetExpr downset_from_json(const Json& j, const std::string& path = "");

Json to_json(const GeneralDownset& d);
GeneralDownset general_downset_from_json(const Json& j, const std::string& path = "");

/// Either kind of downset, chosen by the group kind.
using AnyDownset = std::variant<DownsetExpr, GeneralDownset>;
AnyDownset any_downset_from_json(const Json& j, const std::string& path = "");

Json to_json(const Region& r);
Region region_from_json(const Json& j, const std::string& path = "");

Json to_json(const GridBox& box);
GridBox box_from_json(const Json& j, const std::string& path = "box");

Json to_json(const HullPresentation& h);
HullPresentation hull_from_json(const Json& j, const std::string& path = "");

Json points_to_json(const GridSet& s);
Json dims_to_json(const GridModule& m);

} // namespace pogroup::io
