#include "parahess/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "parahess/form_io.hpp"

namespace parahess {

namespace {

Json basis_json(const std::vector<Vector<RationalField>>& basis) {
  Json a = Json::array();
  for (const auto& v : basis) a.push_back(vector_json(v));
  return a;
}

Json basis_json(const std::vector<Vector<PrimeField>>& basis) {
  Json a = Json::array();
  for (const auto& v : basis) a.push_back(vector_json(v));
  return a;
}

template <class F>
Json point_json_impl(const PointAnalysis<F>& a) {
  Json j;
  j["point"] = vector_json(a.point);
  j["status"] = to_string(a.status);
  j["on_hypersurface"] = a.on_hypersurface;
  j["smooth"] = a.smooth;
  if (a.gradient) j["gradient"] = vector_json(*a.gradient);
  if (a.ii_rank) {
    j["ii_rank"] = *a.ii_rank;
    j["parabolic_h"] = *a.parabolic_h;
    j["fiber"] = basis_json(a.fiber->basis());
    j["fiber_projective_dim"] = a.fiber->projective_dim();
    j["flex"] = a.flex;
  }
  return j;
}

template <class F>
Json fiber_check_impl(const FiberCheckResult<F>& c) {
  Json j;
  j["containment"] = c.containment;
  j["tangency_constant"] = c.tangency_constant;
  j["tangency_samples"] = c.samples.size();
  return j;
}

/// Scalars, vectors and lists of vectors print on one line.
bool is_inline(const Json& v, int depth = 0) {
  if (v.is_primitive()) return true;
  if (v.is_object() || depth == 2) return v.empty();
  return std::all_of(v.begin(), v.end(), [&](const Json& e) { return is_inline(e, depth + 1); });
}

void flatten(std::ostringstream& os, const Json& j, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!is_inline(v)) {
        os << indent << k << ":\n";
        flatten(os, v, indent + "  ");
      } else {
        os << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) {
      if (v.is_primitive()) {
        os << indent << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        os << indent << "[" << i << "]\n";
        flatten(os, v, indent + "  ");
      }
      ++i;
    }
  } else {
    os << indent << j.dump() << "\n";
  }
}

}  // namespace

std::string content_hash(const QPoly& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : print_polynomial(p)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json rational_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Json vector_json(const Vector<RationalField>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(rational_json(c));
  return a;
}

Json vector_json(const Vector<PrimeField>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(c.value());
  return a;
}

Json vector_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double c : v) a.push_back(c);
  return a;
}

Json hessian_json(const HessianResult& h, bool full) {
  Json j;
  j["hessian_status"] = to_string(h.status);
  j["expected_degree"] = h.expected_degree;
  j["algorithm"] = h.algorithm;
  j["probably_zero_precheck"] = h.probably_zero;
  if (h.status == HessianStatus::nonzero) {
    j["degree"] = *h.degree;
    j["degree_law_holds"] = h.degree_law_holds;
    j["term_count"] = h.hpoly.term_count();
    j["content_hash"] = content_hash(h.hpoly);
    if (full) j["polynomial"] = print_polynomial(h.hpoly);
  }
  return j;
}

Json divisibility_json(const DivisibilityCertificate& c, bool full) {
  Json j;
  j["indeterminate"] = c.indeterminate;
  j["verified"] = c.verified;
  if (c.indeterminate) {
    j["order"] = nullptr;
  } else {
    j["order"] = c.order;
    j["cofactor_degree"] = c.cofactor->total_degree() ? Json(*c.cofactor->total_degree()) : Json();
    j["cofactor_terms"] = c.cofactor->term_count();
    j["cofactor_hash"] = content_hash(*c.cofactor);
    if (full) j["cofactor"] = print_polynomial(*c.cofactor);
  }
  return j;
}

Json point_json(const PointAnalysis<RationalField>& a) {
  Json j = point_json_impl(a);
  j["field"] = "QQ";
  return j;
}

Json point_json(const PointAnalysis<PrimeField>& a) {
  Json j = point_json_impl(a);
  j["field"] = a.point.empty() ? "GF(?)" : "GF(" + std::to_string(a.point.front().modulus()) + ")";
  return j;
}

Json fiber_check_json(const FiberCheckResult<RationalField>& c) { return fiber_check_impl(c); }
Json fiber_check_json(const FiberCheckResult<PrimeField>& c) { return fiber_check_impl(c); }

Json sample_json(const SampleRecord& r) {
  Json j = point_json(r.analysis);
  j["index"] = r.index;
  j["fiber_check"] = fiber_check_json(r.fiber_check);
  return j;
}

Json family_json(const GenericRankResult& r, std::size_t n) {
  Json j;
  j["prime"] = r.prime;
  j["samples"] = r.samples;
  j["sampled_rank"] = r.sampled_rank;
  j["implied_h"] = r.implied_h;
  j["agreeing_samples"] = r.agreeing;
  j["label"] = r.label;
  j["sigma_dimension"] = family_dimension_estimate(r);
  j["ambient_n"] = n;
  if (r.certificate) {
    Json c;
    c["certified"] = r.certificate->certified;
    c["attempts"] = r.certificate->attempts;
    c["rows"] = r.certificate->rows;
    c["cols"] = r.certificate->cols;
    j["certificate"] = c;
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

Json focal_json(const FocalProbeResult& p) {
  Json j;
  j["direction_index"] = p.direction_index;
  j["mode"] = to_string(p.mode);
  j["path"] = p.path_source;
  if (p.mode == FocalMode::exact) {
    j["base_point"] = vector_json(p.base);
    j["velocity"] = vector_json(p.velocity);
  } else {
    j["base_point"] = vector_json(p.base_numeric);
    j["direction"] = vector_json(p.direction_numeric);
    j["newton_residual"] = p.residual;
    j["derivative_singular_values"] = vector_json(p.derivative_singular_values);
  }
  j["conclusive"] = p.conclusive;
  j["h"] = p.h;
  j["rho"] = p.rho;
  j["sum_dim"] = p.sum_dim;
  j["int_dim"] = p.int_dim;
  j["bookkeeping_holds"] = p.bookkeeping_holds();
  if (p.intersection) {
    j["intersection_basis"] = basis_json(p.intersection->basis());
  } else {
    Json a = Json::array();
    for (const auto& v : p.intersection_numeric) a.push_back(vector_json(v));
    j["intersection_basis"] = a;
  }
  j["containment_in_tangent"] = p.containment_in_tangent;
  j["focal_points_singular"] = p.focal_points_singular;
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = r.input;
  j["hessian"] = r.hessian;
  j["divisibility"] = r.divisibility;
  j["points"] = r.points;
  j["family"] = r.family;
  j["focal"] = r.focal;
  j["seed"] = r.seed;
  j["timings"] = r.timings ? *r.timings : Json();
  j["warnings"] = r.warnings;
  j["failures"] = r.failures;
  return j;
}

std::string emit_report(const AnalysisReport& r, ReportFormat format) {
  if (format == ReportFormat::json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << "parahess report (schema " << kSchemaVersion << ")\n";
  if (r.input.contains("form")) os << "form: " << r.input["form"].get<std::string>() << "\n";
  if (r.hessian.is_object()) {
    os << "hessian: " << r.hessian["hessian_status"].get<std::string>();
    if (r.hessian.contains("degree")) os << ", degree " << r.hessian["degree"].dump();
    os << "\n";
  }
  if (r.divisibility.is_object()) {
    const auto& d = r.divisibility;
    if (d["indeterminate"].get<bool>())
      os << "f^h | hessian with h = indeterminate (hessian vanishes identically)\n";
    else
      os << "f^h | hessian with h = " << d["order"].dump() << "\n";
  }
  if (r.family.is_object() && r.family.contains("implied_h"))
    os << "parabolic index: h = " << r.family["implied_h"].dump() << " (" << r.family["label"].get<std::string>()
       << ", " << r.family["agreeing_samples"].dump() << "/" << r.family["samples"].dump() << " samples agree)\n";
  std::size_t shown = 0;
  for (const auto& p : r.points) {
    if (++shown > 5) break;
    os << "point " << p["point"].dump() << ": " << p["status"].get<std::string>();
    if (p.contains("parabolic_h"))
      os << ", rank II = " << p["ii_rank"].dump() << ", h = " << p["parabolic_h"].dump()
         << ", fiber " << p["fiber"].dump();
    os << "\n";
  }
  for (const auto& p : r.focal)
    os << "focal direction " << p["direction_index"].dump() << ": rho = " << p["rho"].dump()
       << ", dim(S + S/dw) = " << p["sum_dim"].dump() << ", dim(S & S/dw) = " << p["int_dim"].dump()
       << ", focal points singular: " << p["focal_points_singular"].dump() << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  for (const auto& f : r.failures) os << "FAILURE: " << f << "\n";
  os << "\n";
  Json body = to_json(r);
  body.erase("schema_version");
  body.erase("warnings");
  body.erase("failures");
  if (body["timings"].is_null()) body.erase("timings");
  flatten(os, body, "");
  return os.str();
}

}  // namespace parahess
