#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperspace/faces.hpp"
#include "hyperspace/geometry.hpp"
#include "hyperspace/hypermetrics.hpp"
#include "hyperspace/limits.hpp"
#include "hyperspace/poulsen.hpp"

namespace hyperspace::io {

using Json = nlohmann::ordered_json;

// Every decoder throws ParseError on malformed or inconsistent documents.
// Rationals are written as "num/den" strings; vectors as [[index, "num/den"], ...].

Json encode(const Rational& q);
Rational decode_rational(const Json& j);

Json encode(const SparseVec& v);
SparseVec decode_vector(const Json& j);

Json encode_vectors(const std::vector<SparseVec>& vs);
std::vector<SparseVec> decode_vectors(const Json& j);

/// {"kind": "points" | "polyhedron", "points": [...], "rays": [...], "irredundant": bool}.
/// A polyhedron claiming "irredundant": true is checked on decode.
Json encode(const HyperSet& set);
Json encode(const Polyhedron& P);
HyperSet decode_set(const Json& j);
/// Decodes a set document and views a point set as its convex hull generators.
Polyhedron decode_polyhedron(const Json& j);

Json encode(const MetricConfig& cfg);
MetricConfig decode_metric_config(const Json& j);

Json encode(const CylinderSpec& v);
CylinderSpec decode_cylinder(const Json& j);

Json encode(const ClopenExpr& e);
ClopenExpr decode_clopen(const Json& j);

Json encode(const ExposureCertificate& c);
ExposureCertificate decode_certificate(const Json& j);
Json encode_certificates(const std::vector<ExposureCertificate>& cs);
std::vector<ExposureCertificate> decode_certificates(const Json& j);

Json encode(const PoulsenTrace& t);
PoulsenTrace decode_trace(const Json& j);

Json encode(const VerificationReport& r);
Json encode(const DeviationEstimate& d);
Json encode(const LiLsReport& r);
Json encode(const MonotoneLimit& m);
Json encode(const CounterexampleReport& r);

Json read_file(const std::filesystem::path& path);
/// Two-space indentation with a trailing newline.
void write_file(const std::filesystem::path& path, const Json& j);

}  // namespace hyperspace::io
