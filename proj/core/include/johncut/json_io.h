#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "johncut/john.h"
#include "johncut/partition.h"
#include "johncut/rotund.h"
#include "johncut/semiconvex.h"
#include "johncut/smooth.h"

namespace johncut {

// Insertion-ordered JSON throughout so identical runs serialize to
// identical bytes.
using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Polygon& P);
ordered_json to_json(const DomainInput& d);
ordered_json to_json(const Chord& c);
ordered_json to_json(const Partition& part);
ordered_json to_json(const SemiconvexCert& c);
ordered_json to_json(const RotundCert& c);
ordered_json to_json(const JohnCert& c, bool include_curves = false);
ordered_json to_json(const PipelineResult& r);
ordered_json to_json(const DomainDecomposition& r);

Polygon polygon_from_json(const ordered_json& j);
DomainInput domain_from_json(const ordered_json& j);
bool looks_like_domain(const ordered_json& j);  // {"outer": ...} vs {"vertices": ...}

ordered_json load_json(const std::string& path);
void write_json(const std::string& path, const ordered_json& j);
std::string dump_json(const ordered_json& j);

}  // namespace johncut
