#include "flagcontact/report_json.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace flagcontact {

namespace {

nlohmann::json nodes_to_json(const std::vector<int>& nodes) {
  nlohmann::json arr = nlohmann::json::array();
  for (int node : nodes) arr.push_back(node + 1);
  return arr;
}

std::vector<int> nodes_from_json(const nlohmann::json& arr) {
  std::vector<int> nodes;
  for (const auto& v : arr) nodes.push_back(v.get<int>() - 1);
  return nodes;
}

nlohmann::json weight_to_json(const Weight& w) {
  return nlohmann::json(w.coords);
}

Weight weight_from_json(const nlohmann::json& arr) {
  return Weight{arr.get<std::vector<int>>()};
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

nlohmann::json to_json(const ContactReport& report) {
  nlohmann::json j;
  j["kind"] = report.kind.name();
  j["verdict"] = verdict_name(report.verdict);
  j["non_orthogonal_nodes"] = nodes_to_json(report.non_orthogonal_nodes);
  j["identity_checked"] = report.identity_checked;
  if (report.contact_node) j["contact_node"] = *report.contact_node + 1;
  if (report.orthogonal_nodes) j["orthogonal_nodes"] = nodes_to_json(*report.orthogonal_nodes);
  if (report.dim) j["dim"] = *report.dim;
  if (report.n) j["n"] = *report.n;
  if (report.line_bundle_weight) j["line_bundle_weight"] = weight_to_json(*report.line_bundle_weight);
  if (report.line_bundle_coefficient) j["line_bundle_coefficient"] = *report.line_bundle_coefficient;
  if (report.anticanonical_weight)
    j["anticanonical_weight"] = weight_to_json(*report.anticanonical_weight);
  return j;
}

ContactReport contact_report_from_json(const nlohmann::json& j) {
  ContactReport report;
  report.kind = parse_kind(j.at("kind").get<std::string>());
  report.verdict =
      j.at("verdict").get<std::string>() == "Exists" ? Verdict::Exists : Verdict::NoneExists;
  report.non_orthogonal_nodes = nodes_from_json(j.at("non_orthogonal_nodes"));
  report.identity_checked = j.at("identity_checked").get<bool>();
  if (j.contains("contact_node")) report.contact_node = j.at("contact_node").get<int>() - 1;
  if (j.contains("orthogonal_nodes"))
    report.orthogonal_nodes = nodes_from_json(j.at("orthogonal_nodes"));
  if (j.contains("dim")) report.dim = j.at("dim").get<int>();
  if (j.contains("n")) report.n = j.at("n").get<int>();
  if (j.contains("line_bundle_weight"))
    report.line_bundle_weight = weight_from_json(j.at("line_bundle_weight"));
  if (j.contains("line_bundle_coefficient"))
    report.line_bundle_coefficient = j.at("line_bundle_coefficient").get<int>();
  if (j.contains("anticanonical_weight"))
    report.anticanonical_weight = weight_from_json(j.at("anticanonical_weight"));
  return report;
}

nlohmann::json to_json(const CertifyRecord& record) {
  nlohmann::json j;
  j["kind"] = record.kind.name();
  j["verdict"] = verdict_name(record.verdict);
  j["non_orthogonal_nodes"] = nodes_to_json(record.non_orthogonal_nodes);
  if (record.verdict == Verdict::Exists) {
    j["matrix_size"] = record.matrix_size;
    j["rank"] = record.rank;
    j["nondegenerate"] = record.nondegenerate;
    j["antisymmetric"] = record.antisymmetric;
    j["jacobi_triples"] = record.jacobi_triples;
    j["jacobi_violations"] = record.jacobi_violations;
  }
  return j;
}

CertifyRecord certify_record_from_json(const nlohmann::json& j) {
  CertifyRecord record;
  record.kind = parse_kind(j.at("kind").get<std::string>());
  record.verdict =
      j.at("verdict").get<std::string>() == "Exists" ? Verdict::Exists : Verdict::NoneExists;
  record.non_orthogonal_nodes = nodes_from_json(j.at("non_orthogonal_nodes"));
  if (record.verdict == Verdict::Exists) {
    record.matrix_size = j.at("matrix_size").get<int>();
    record.rank = j.at("rank").get<int>();
    record.nondegenerate = j.at("nondegenerate").get<bool>();
    record.antisymmetric = j.at("antisymmetric").get<bool>();
    record.jacobi_triples = j.at("jacobi_triples").get<int>();
    record.jacobi_violations = j.at("jacobi_violations").get<int>();
  }
  return record;
}

nlohmann::json to_json(const GrassmannianAudit& audit) {
  nlohmann::json j;
  j["n"] = audit.n;
  j["seed"] = audit.seed;
  j["trials"] = audit.trials;
  j["dimT"] = audit.dimT;
  j["dimE"] = audit.dimE;
  j["contact_rank"] = audit.contact_rank;
  j["max_residual"] = audit.max_residual;
  return j;
}

GrassmannianAudit grassmannian_audit_from_json(const nlohmann::json& j) {
  GrassmannianAudit audit;
  audit.n = j.at("n").get<int>();
  audit.seed = j.at("seed").get<std::uint64_t>();
  audit.trials = j.at("trials").get<int>();
  audit.dimT = j.at("dimT").get<int>();
  audit.dimE = j.at("dimE").get<int>();
  audit.contact_rank = j.at("contact_rank").get<int>();
  audit.max_residual = j.at("max_residual").get<double>();
  return audit;
}

nlohmann::json make_envelope(const std::string& command, nlohmann::json payload,
                             bool deterministic) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  if (!deterministic) j["generated_at"] = utc_timestamp();
  j["payload"] = std::move(payload);
  return j;
}

}  // namespace flagcontact
