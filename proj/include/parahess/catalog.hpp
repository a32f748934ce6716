#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parahess/form_io.hpp"
#include "parahess/linalg.hpp"

namespace parahess {

enum class HessianExpectation { identically_zero, divisible, generic };

std::string to_string(HessianExpectation e);

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A classical example hypersurface with what is known about it.
struct CatalogEntry {
  std::string name;
  std::string description;
  FormDocument form;
  std::optional<int> expected_h;
  HessianExpectation expected_hessian = HessianExpectation::generic;
  std::string singular_locus;
  /// A smooth rational point with the generic parabolic index, used as the
  /// base of exact focal probes. Primitive integer coordinates.
  std::optional<Vector<RationalField>> base_point;
  /// Parameter values mapping to base_point when a parameterization exists.
  std::vector<mpq_class> base_parameters;
};

enum class Family { cone, tangent_developable, perazzo, fermat };

struct FamilyParams {
  /// cone: the base form in its own variables x0..x{m-1}.
  std::optional<QPoly> base_form;
  /// cone: optional parameterization of the base.
  std::optional<Parameterization> base_parameterization;
  /// cone: number of vertex coordinates prepended.
  std::size_t extra_vars = 1;
  /// tangent_developable: degree of the rational normal curve (only 3).
  unsigned curve_degree = 3;
  /// fermat: ambient dimension and degree.
  std::size_t n = 3;
  unsigned d = 3;
};

/// Builds a family member. cone(g, k) places the vertex on the first k
/// coordinate points and shifts g's variables up by k.
CatalogEntry catalog_generate(Family family, const FamilyParams& params);

/// Built-in names (see catalog_names()) plus "fermat-<n>-<d>".
CatalogEntry catalog_lookup(std::string_view name);

std::vector<std::string> catalog_names();

}  // namespace parahess
