#pragma once

#include <json.hpp>

#include "speh/affine_line.hpp"
#include "speh/sheaf.hpp"

namespace speh {

using Json = nlohmann::json;

Json to_json(const GroupDescriptor& g);
GroupDescriptor group_from_json(const Json& j);

Json to_json(const HaloDescriptor& h);
HaloDescriptor halo_from_json(const Json& j);

/// {"halo": ..., "value": "zero" | {"unit": ...}}
Json to_json(const HaloValue& v);
HaloValue value_from_json(const Json& j);

Json to_json(const RingElement& e);
RingElement element_from_json(const Json& j);

Json to_json(const Disc& d);
Disc disc_from_json(const Json& j);

Json to_json(const Place& p);
Place place_from_json(const Json& j);

Json to_json(const RationalDomain& d);
RationalDomain domain_from_json(const Json& j);

Json to_json(const RingDescriptor& r);
RingDescriptor ring_from_json(const Json& j);

Json to_json(const CompletedElement& e);
CompletedElement completed_from_json(const Json& j);

Json to_json(const AdeleElement& a);
AdeleElement adele_from_json(const Json& j);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(std::string_view text);

}  // namespace speh
