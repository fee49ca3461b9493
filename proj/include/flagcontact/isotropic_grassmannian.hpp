#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace flagcontact {

/// Membership tolerances for residuals on unit-scale frames; actual float
/// noise at these sizes is ~1e-13, so these leave three orders of margin.
inline constexpr double kIsotropyTol = 1e-9;
inline constexpr double kTangentTol = 1e-9;
/// Numerical rank cutoff, relative to the largest singular value.
inline constexpr double kRankRelTol = 1e-6;

/// A point of Gr_B(2, C^{2n}): a 2-plane V with V inside V-perp for the
/// complex-bilinear dot product B (no conjugation). The frame columns span V.
struct IsotropicPoint {
  int n = 0;               // ambient dimension 2n
  Eigen::MatrixXcd frame;  // 2n x 2, full column rank, B-isotropic
};

/// Tangent vector at an IsotropicPoint: a map V -> C^{2n}/V stored through
/// the lifted images of the frame columns. The canonical representative
/// keeps the lift Hermitian-orthogonal to V; every quantity computed from
/// it is checked to be representative-independent.
struct TangentVector {
  Eigen::MatrixXcd phi;  // 2n x 2
};

/// B(x, y) = sum_k x_k y_k.
std::complex<double> dot_b(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y);

/// The plane W = span{e_1 + i e_2, e_3 + i e_4}; isotropy is an algebraic
/// identity (1 + i^2 = 0). Throws InvalidN for n < 4.
IsotropicPoint base_point(int n);

/// Throws InvalidFrame when the B-Gram deviates from zero beyond the
/// isotropy tolerance or the frame is rank deficient.
void validate_point(const IsotropicPoint& p);

/// Differential of the orbit map at p applied to xi in so_{2n}:
/// v -> xi v mod V. Throws NotAntisymmetric unless xi + xi^T = 0 to
/// tolerance.
TangentVector so_action_tangent(const IsotropicPoint& p, const Eigen::MatrixXcd& xi);

/// Max entry of the 2x2 form (v,w) -> B(phi(v),w) + B(v,phi(w)) on the
/// frame basis; zero exactly iff t is tangent to Gr_B at p.
double membership_residual(const IsotropicPoint& p, const TangentVector& t);

/// Image of t under T Gr_B -> wedge^2 F-dual, as the coefficient against
/// the frame's volume covector: the skew form (v,w) -> B(phi(v),w)
/// evaluated on (v_1, v_2). Vanishes iff t lies in E = Hom(F, F-perp/F).
std::complex<double> theta(const IsotropicPoint& p, const TangentVector& t);

struct DimensionAudit {
  int dimT = 0;
  int dimE = 0;
  double max_membership = 0.0;
};

/// Numerical ranks of the sampled orbit-image span and of its intersection
/// with ker(theta). Requires samples >= 4n; throws InsufficientSamples if
/// either rank is still growing at the last sample.
DimensionAudit dimension_audit(const IsotropicPoint& p, int samples, std::uint64_t seed);

/// Rank of the twisted 2-form Omega[i][j] = theta([xi_i, xi_j] . p) over a
/// sampled basis {xi_i . p} of E. Throws BasisNotFound if the basis search
/// does not stabilize.
int contact_rank(const IsotropicPoint& p, std::uint64_t seed);

/// Max |theta| residual after pushing E-vectors forward by random group
/// elements g = exp(xi); also validates isotropy of each image frame.
double invariance_residual(const IsotropicPoint& p, int trials, std::uint64_t seed);

/// Entries i.i.d. complex standard normal, antisymmetrized, scaled by
/// 1/(2n). Deterministic in the seed.
Eigen::MatrixXcd random_antisymmetric(int size, std::uint64_t seed);

/// Truncated series with scaling and squaring; exact enough for the
/// 1/(2n)-scaled inputs used here (<= 30 terms to machine precision).
Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& m);

/// Block-diagonal rotation R(theta_1, ..., theta_n) in SO_{2n}.
Eigen::MatrixXcd block_rotation(const std::vector<double>& angles);

/// g . V with the image frame renormalized to unit column norms; validates
/// the image point.
IsotropicPoint translate(const IsotropicPoint& p, const Eigen::MatrixXcd& g);

/// Per-stream seed derivation (splitmix64), stable across platforms.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol = kRankRelTol);

/// One full experiment at base_point(n): dimension audit over 4n+8 samples,
/// contact rank, and invariance over `trials` group elements.
struct GrassmannianAudit {
  int n = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int dimT = 0;
  int dimE = 0;
  int contact_rank = 0;
  double max_residual = 0.0;

  friend bool operator==(const GrassmannianAudit&, const GrassmannianAudit&) = default;
};

GrassmannianAudit run_grassmannian_audit(int n, int trials, std::uint64_t seed);

}  // namespace flagcontact
