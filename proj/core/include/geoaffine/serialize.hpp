#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geoaffine/affine.hpp"
#include "geoaffine/convexity.hpp"

namespace geoaffine {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_tag = "geoaffine/1";

// Numeric output policy: 12 significant digits everywhere.
double sig12(double x);
std::string format_sig12(double x);

Json json_of(const SpaceSpec& space);
Json json_of(const Point& p);
Json json_of(const TangentVec& v);
Json json_of(const CheckReport& report);
Json json_of(const CounterexampleReport& report);
Json json_of(const ConvexityReport& report, const AffineProbe& probe);
Json json_of(const std::vector<ThresholdRow>& rows, const AffineProbe& probe);
Json json_of(const TriangleSuiteStats& stats, const SpaceSpec& space,
             std::uint64_t seed);

// CSV rows use the column set
// c,verdict,witness_p,witness_q,t,f0_at_witness,n_pairs,seed
// with point coordinates joined by ';'.
std::string csv_of(const ConvexityReport& report);
std::string csv_of(const std::vector<ThresholdRow>& rows);
std::string csv_of(const CounterexampleReport& report);
std::string csv_of(const TriangleSuiteStats& stats, const SpaceSpec& space,
                   std::uint64_t seed);

} // namespace geoaffine
