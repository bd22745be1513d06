#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hompoisson/algebra.hpp"

namespace hompoisson {

// Algebra spec file, one directive per line, '#' starts a comment:
//
//   hompoisson-algebra 1
//   kind poisson            # or: algebra (product only)
//   dim 3
//   basis X Y Z             # optional, defaults to e1..en
//   commutative true        # optional, poisson kind only
//   mu 1 2 3 1              # coefficient of e_3 in mu(e_1, e_2)
//   bracket 1 2 3 1
//   alpha                   # optional, followed by dim rows; default identity
//   1 0 0
//   0 1 0
//   0 0 1
//
// Indices are 1-based; omitted entries are zero. Map files hold
// "hompoisson-map 1", "dim n" and n rows.

enum class SpecKind { algebra, poisson };

struct AlgebraSpec {
  SpecKind kind = SpecKind::poisson;
  /// For the algebra kind the bracket is zero and commutative is false.
  HomPoissonAlgebra algebra;

  HomAlgebra product_algebra() const { return algebra.product_algebra(); }
};

AlgebraSpec parse_spec_text(std::string_view text);
/// Throws Error if the file cannot be read.
AlgebraSpec parse_spec(const std::filesystem::path& path);

std::string emit_spec_text(const HomPoissonAlgebra& a);
std::string emit_spec_text(const HomAlgebra& a);
void emit_spec(const HomPoissonAlgebra& a, const std::filesystem::path& path);
void emit_spec(const HomAlgebra& a, const std::filesystem::path& path);

LinearMap parse_map_text(std::string_view text);
LinearMap parse_map(const std::filesystem::path& path);
std::string emit_map_text(const LinearMap& m);
void emit_map(const LinearMap& m, const std::filesystem::path& path);

}  // namespace hompoisson
