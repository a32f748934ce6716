#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parahess/focal.hpp"
#include "parahess/geometry.hpp"
#include "parahess/hessian.hpp"
#include "parahess/sampling.hpp"

namespace parahess {

using Json = nlohmann::json;

enum class ReportFormat { json, text };

inline constexpr const char* kSchemaVersion = "1";

/// Sections of one run. Keys of the emitted object are sorted, so equal
/// inputs and seeds serialize to identical bytes (timings are only present
/// when requested).
struct AnalysisReport {
  Json input = Json::object();
  Json hessian;
  Json divisibility;
  Json points = Json::array();
  Json family;
  Json focal = Json::array();
  std::uint64_t seed = 0;
  std::optional<Json> timings;
  std::vector<std::string> warnings;
  /// Consistency checks that did not hold.
  std::vector<std::string> failures;
};

Json to_json(const AnalysisReport& report);

/// JSON (pretty, 2-space indent, trailing newline) or a human-readable
/// rendering that always states the divisibility order as
/// "f^h | hessian with h = <k>".
std::string emit_report(const AnalysisReport& report, ReportFormat format);

/// FNV-1a 64 of the canonical rendering, as 16 hex digits.
std::string content_hash(const QPoly& p);

/// Exact coordinates as JSON: integers when they fit, "p/q" strings
/// otherwise.
Json rational_json(const mpq_class& q);
Json vector_json(const Vector<RationalField>& v);
Json vector_json(const Vector<PrimeField>& v);
Json vector_json(const std::vector<double>& v);

Json hessian_json(const HessianResult& h, bool full);
Json divisibility_json(const DivisibilityCertificate& c, bool full);
Json point_json(const PointAnalysis<RationalField>& a);
Json point_json(const PointAnalysis<PrimeField>& a);
Json fiber_check_json(const FiberCheckResult<RationalField>& c);
Json fiber_check_json(const FiberCheckResult<PrimeField>& c);
Json sample_json(const SampleRecord& r);
Json family_json(const GenericRankResult& r, std::size_t n);
Json focal_json(const FocalProbeResult& p);

}  // namespace parahess
