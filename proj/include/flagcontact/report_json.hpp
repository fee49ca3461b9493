#pragma once

#include <string>

#include "json.hpp"

#include "flagcontact/classifier.hpp"
#include "flagcontact/isotropic_grassmannian.hpp"

namespace flagcontact {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

/// Contact-form certificate as reported by `certify`. For NoneExists kinds
/// only the verdict fields are meaningful.
struct CertifyRecord {
  CartanKind kind;
  Verdict verdict = Verdict::NoneExists;
  std::vector<int> non_orthogonal_nodes;  // 0-based internally, 1-based in JSON
  int matrix_size = 0;
  int rank = 0;
  bool nondegenerate = false;
  bool antisymmetric = false;
  int jacobi_triples = 0;
  int jacobi_violations = 0;

  friend bool operator==(const CertifyRecord&, const CertifyRecord&) = default;
};

/// JSON payloads. Node indices are serialized 1-based to match the
/// Bourbaki labels alpha_1..alpha_rank used in all human-facing output.
nlohmann::json to_json(const ContactReport& report);
nlohmann::json to_json(const CertifyRecord& record);
nlohmann::json to_json(const GrassmannianAudit& audit);

ContactReport contact_report_from_json(const nlohmann::json& j);
CertifyRecord certify_record_from_json(const nlohmann::json& j);
GrassmannianAudit grassmannian_audit_from_json(const nlohmann::json& j);

/// Wraps a payload in the versioned envelope. `generated_at` (UTC, ISO
/// 8601) is omitted when deterministic is true so identical inputs yield
/// byte-identical output.
nlohmann::json make_envelope(const std::string& command, nlohmann::json payload,
                             bool deterministic);

}  // namespace flagcontact
