#pragma once

#include <stdexcept>
#include <string>

namespace flagcontact {

/// Requested Cartan kind is outside the supported simply-laced families
/// (A with rank >= 1, D with rank >= 4, E with rank in {6,7,8}).
struct InvalidKind : std::invalid_argument {
  explicit InvalidKind(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A node index passed to a parabolic constructor is out of range.
struct InvalidNode : std::invalid_argument {
  explicit InvalidNode(const std::string& msg) : std::invalid_argument(msg) {}
};

/// The flag variety has even dimension, so it cannot carry a contact
/// structure and the (n+1)-power identity is not even well posed.
struct DimensionNotOdd : std::domain_error {
  explicit DimensionNotOdd(const std::string& msg) : std::domain_error(msg) {}
};

/// The parabolic handed to a contact-fibre computation is not the one
/// cut out by the simple roots orthogonal to the highest root.
struct NotContactParabolic : std::domain_error {
  explicit NotContactParabolic(const std::string& msg) : std::domain_error(msg) {}
};

/// Structure-constant sign table failed the build-time Jacobi spot check.
struct JacobiFailure : std::logic_error {
  explicit JacobiFailure(const std::string& msg) : std::logic_error(msg) {}
};

/// Ambient dimension parameter below the supported range (n >= 4).
struct InvalidN : std::invalid_argument {
  explicit InvalidN(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A frame does not span an isotropic 2-plane to tolerance, or is rank
/// deficient.
struct InvalidFrame : std::invalid_argument {
  explicit InvalidFrame(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Matrix expected to be antisymmetric is not, beyond tolerance.
struct NotAntisymmetric : std::invalid_argument {
  explicit NotAntisymmetric(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Numeric rank of a sampled span did not stabilize before the sample
/// budget ran out.
struct InsufficientSamples : std::runtime_error {
  explicit InsufficientSamples(const std::string& msg) : std::runtime_error(msg) {}
};

/// Could not extract a full basis of the contact distribution from the
/// sampled orbit directions.
struct BasisNotFound : std::runtime_error {
  explicit BasisNotFound(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace flagcontact
