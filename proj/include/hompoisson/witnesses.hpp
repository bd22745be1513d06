#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hompoisson/catalog.hpp"
#include "hompoisson/checks.hpp"

namespace hompoisson {

/// Associator of alpha mu at (X, X, alpha(X)) in Q[X], alpha(X) = 1 + X.
Polynomial free_poly_associator();

struct MatrixWitness {
  std::size_t n = 0;
  LinearMap beta;  // conjugation by D = diag(1/2, 1, ..., 1)
  Vector x;        // supported on the upper-left 2x2 block
  Vector lhs;      // (beta mu)((beta mu)(X, X), beta(X)) = beta^2(X^3)
  Vector rhs;      // (beta mu)(X, (beta mu)(X, beta(X)))
  Vector residual;
};

/// Conjugation by diag(1/2, 1, ..., 1) on M_n as a linear map.
LinearMap matrix_conjugation(std::size_t n);

/// Searches the 2x2 blocks with entries in {0, 1, 2} (lexicographic order)
/// for the first X at which beta mu fails associativity. Requires n >= 2.
std::optional<MatrixWitness> matrix_witness(std::size_t n);

/// Associator of alpha mu at (e, h, h) in S(sl2) for e -> lambda e,
/// f -> f / lambda. At lambda = 0 the scaling e -> 0 keeps f fixed; it is
/// not a Lie morphism but the associator at (e, h, h) never involves f.
Polynomial sl2_associator(const Rational& lambda);

/// Translation by c on Q^(2n), f = x_i (1-based), evaluated at the origin.
ManifoldNonrigidity r2n_witness(const std::vector<Rational>& c, std::size_t i);

/// Example grid {-2, -1, 0, 1/2, 1, 2}.
std::vector<Rational> default_parameter_grid();

struct HeisenbergReplay {
  std::string algebra;
  std::size_t morphisms = 0;
  std::size_t unverified = 0;  // generated maps failing check_morphism
  std::size_t trivial = 0;
  std::size_t isomorphic = 0;  // verified via Z -> bZ
  std::size_t other = 0;
  std::size_t twists_checked = 0;
  std::size_t twists_failed = 0;  // twist not Hom-Poisson or not multiplicative
  std::size_t grid_points = 0;    // Lie morphisms tested against the family conditions
  std::size_t grid_mismatches = 0;

  bool passed() const { return unverified == 0 && other == 0 && twists_failed == 0 && grid_mismatches == 0; }
};

/// Case analysis on P31(zeta) (or P32 when zeta is empty). Every generated
/// morphism is verified, its beta-twisting classified, and, if requested,
/// its twist checked for the Hom-Poisson and multiplicativity identities.
/// The grid sweep confirms that a Lie morphism is a Poisson morphism
/// exactly when it satisfies the family conditions.
HeisenbergReplay heisenberg_replay(const std::optional<Rational>& zeta, const std::vector<Rational>& grid,
                                   bool check_twists);

struct ReplayResult {
  std::string name;
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<CheckReport> reports;
  std::vector<std::string> basis;
};

const std::vector<std::string>& witness_names();

/// Replays a named example: free-poly, matrix, sl2, r2n (alias symplectic)
/// or heisenberg. Parameters: matrix n; sl2 lambda; r2n n, i, c; heisenberg
/// zeta (omit for all cases). Throws Error for unknown names.
ReplayResult run_witness(const std::string& name, const CatalogParams& params = {});

}  // namespace hompoisson
