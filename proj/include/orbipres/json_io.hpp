#pragma once

#include <string>

#include <json.hpp>

#include "orbipres/braidgraph.hpp"
#include "orbipres/monomial.hpp"
#include "orbipres/quiver.hpp"
#include "orbipres/surface.hpp"

namespace orbipres {

using nlohmann::json;

json to_json(const TaggedTriangulation& T);
TaggedTriangulation triangulation_from_json(const json& j);

json to_json(const DecoratedQuiver& Q);
DecoratedQuiver quiver_from_json(const json& j);

json to_json(const MonomialElement& m);
json to_json(const NuCertificate& cert);

std::string flip_graph_dot(const FlipGraph& g);
std::string flip_graph_csv(const FlipGraph& g);

// FNV-1a of file bytes, hex; reports embed it for reproducibility
std::string file_hash_hex(const std::string& path);

}  // namespace orbipres
