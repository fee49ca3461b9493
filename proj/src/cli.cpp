#include "flagcontact/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "flagcontact/chevalley.hpp"
#include "flagcontact/classifier.hpp"
#include "flagcontact/errors.hpp"
#include "flagcontact/report_json.hpp"

namespace flagcontact {

namespace {

constexpr int kJacobiTriples = 2000;
constexpr std::uint64_t kJacobiSeed = 0xC0FFEE;

std::string node_label(int node) { return "alpha_" + std::to_string(node + 1); }

std::string node_list(const std::vector<int>& nodes) {
  std::string s;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) s += ", ";
    s += node_label(nodes[i]);
  }
  return s;
}

std::string weight_pretty(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (w.coords[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (w.coords[i] != 1) s += std::to_string(w.coords[i]) + "*";
    s += "omega_" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::vector<CartanKind> all_kinds(int max_rank) {
  std::vector<CartanKind> kinds;
  for (int r = 1; r <= max_rank; ++r) kinds.push_back({Series::A, r});
  for (int r = 4; r <= max_rank; ++r) kinds.push_back({Series::D, r});
  for (int r = 6; r <= std::min(max_rank, 8); ++r) kinds.push_back({Series::E, r});
  return kinds;
}

CertifyRecord run_certify(CartanKind kind) {
  const RootSystem rs = build_root_system(kind);
  CertifyRecord rec;
  rec.kind = kind;
  rec.non_orthogonal_nodes = non_orthogonal_simple_roots(rs);
  if (rec.non_orthogonal_nodes.size() != 1) {
    rec.verdict = Verdict::NoneExists;
    return rec;
  }
  rec.verdict = Verdict::Exists;

  std::vector<int> lambda_nodes;
  for (int i = 0; i < rs.rank(); ++i)
    if (i != rec.non_orthogonal_nodes.front()) lambda_nodes.push_back(i);

  const ChevalleyAlgebra alg = build_chevalley(rs);
  const ParabolicData pd = build_parabolic(rs, lambda_nodes);
  const ContactFormMatrix m = contact_form_matrix(alg, pd);
  rec.matrix_size = static_cast<int>(m.weights.size());

  rec.antisymmetric = true;
  for (std::size_t i = 0; i < m.weights.size(); ++i)
    for (std::size_t j = 0; j < m.weights.size(); ++j)
      if (m.entries[i][j] != -m.entries[j][i]) rec.antisymmetric = false;

  const NondegeneracyCertificate cert = certify_nondegenerate(m);
  rec.rank = cert.rank;
  rec.nondegenerate = cert.nondegenerate;
  rec.jacobi_triples = kJacobiTriples;
  rec.jacobi_violations = jacobi_sample(alg, kJacobiTriples, kJacobiSeed);
  return rec;
}

void print_classify_human(const ContactReport& r, std::ostream& out) {
  out << r.kind.name() << ": " << verdict_name(r.verdict) << "\n";
  if (r.verdict == Verdict::NoneExists) {
    out << "  no invariant contact structure exists on a b2 = 1 flag variety of this type\n"
        << "  witnesses: " << node_list(r.non_orthogonal_nodes)
        << " are all non-orthogonal to the highest root\n";
    return;
  }
  out << "  flag variety       G/P_Lambda, Lambda = {" << node_list(*r.orthogonal_nodes) << "}\n"
      << "  contact node       " << node_label(*r.contact_node) << "\n"
      << "  dim                " << *r.dim << "  (n = " << *r.n << ")\n"
      << "  line bundle        lambda = " << weight_pretty(*r.line_bundle_weight)
      << "  (k = " << *r.line_bundle_coefficient << ")\n"
      << "  anticanonical      mu = " << weight_pretty(*r.anticanonical_weight) << "\n"
      << "  (n+1)*lambda = mu  " << (r.identity_checked ? "verified" : "FAILED") << "\n";
}

void print_classify_table(const std::vector<ContactReport>& reports, std::ostream& out) {
  out << std::left << std::setw(6) << "kind" << std::setw(12) << "verdict" << std::setw(10)
      << "contact" << std::right << std::setw(5) << "dim" << std::setw(5) << "n" << std::setw(4)
      << "k"
      << "  identity\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(6) << r.kind.name() << std::setw(12) << verdict_name(r.verdict);
    if (r.verdict == Verdict::Exists) {
      out << std::setw(10) << node_label(*r.contact_node) << std::right << std::setw(5) << *r.dim
          << std::setw(5) << *r.n << std::setw(4) << *r.line_bundle_coefficient << "  "
          << (r.identity_checked ? "ok" : "FAILED") << "\n";
    } else {
      out << std::setw(10) << "-" << std::right << std::setw(5) << "-" << std::setw(5) << "-"
          << std::setw(4) << "-"
          << "  -\n";
    }
  }
}

void print_certify_human(const CertifyRecord& rec, std::ostream& out) {
  out << rec.kind.name() << ": contact form certificate\n";
  if (rec.verdict == Verdict::NoneExists) {
    out << "  verdict NoneExists: nothing to certify ("
        << node_list(rec.non_orthogonal_nodes)
        << " are all non-orthogonal to the highest root)\n";
    return;
  }
  out << "  fibre dimension    " << rec.matrix_size << "\n"
      << "  matrix             " << rec.matrix_size << " x " << rec.matrix_size << ", "
      << (rec.antisymmetric ? "antisymmetric" : "NOT antisymmetric") << "\n"
      << "  exact rank         " << rec.rank << "\n"
      << "  nondegenerate      " << (rec.nondegenerate ? "yes" : "NO") << "\n"
      << "  jacobi spot check  " << rec.jacobi_triples << " triples, " << rec.jacobi_violations
      << " violations\n";
}

void print_grassmannian_human(const GrassmannianAudit& audit, std::ostream& out) {
  out << "Gr_B(2, C^" << 2 * audit.n << ")  (n = " << audit.n << ", seed " << audit.seed
      << ", trials " << audit.trials << ")\n"
      << "  dimT           " << audit.dimT << "\n"
      << "  dimE           " << audit.dimE << "\n"
      << "  contact rank   " << audit.contact_rank << "\n"
      << "  max residual   " << std::scientific << std::setprecision(3) << audit.max_residual
      << std::defaultfloat << "\n";
}

void print_roots_human(const RootSystem& rs, std::ostream& out) {
  const auto& roots = rs.positive_roots();
  out << rs.kind().name() << " positive roots (" << roots.size()
      << "), ordered by height then lexicographically\n"
      << "  simple-root coords -> fundamental-weight coords\n";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    std::ostringstream left;
    left << roots[i];
    out << std::right << std::setw(4) << i + 1 << "  h=" << std::setw(2) << roots[i].height()
        << "  " << std::left << std::setw(2 + 3 * rs.rank()) << left.str() << " -> "
        << to_fundamental_basis(roots[i], rs);
    if (roots[i] == rs.highest()) out << "   (highest)";
    out << "\n";
  }
}

nlohmann::json roots_to_json(const RootSystem& rs) {
  nlohmann::json j;
  j["kind"] = rs.kind().name();
  j["count"] = rs.positive_roots().size();
  j["highest"] = rs.highest().coords;
  nlohmann::json arr = nlohmann::json::array();
  for (const Root& r : rs.positive_roots()) {
    nlohmann::json entry;
    entry["height"] = r.height();
    entry["simple"] = r.coords;
    entry["fundamental"] = to_fundamental_basis(r, rs).coords;
    arr.push_back(entry);
  }
  j["roots"] = arr;
  return j;
}

int emit(const std::string& text, const std::string& out_path, std::ostream& out,
         std::ostream& err) {
  if (out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot open " << out_path << " for writing\n";
    return 2;
  }
  file << text;
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"contact structures on ADE partial flag varieties: exact classification, "
               "Chevalley-basis certificates, and the isotropic-Grassmannian realization",
               "flagcontact"};
  app.require_subcommand(1);

  std::string classify_type, certify_type, roots_type;
  bool classify_all = false;
  int max_rank = 8;
  bool classify_json = false, certify_json = false, grass_json = false, roots_json = false;
  bool classify_det = false, certify_det = false, grass_det = false, roots_det = false;
  bool classify_expect = false, certify_expect = false;
  std::string classify_out, certify_out, grass_out, roots_out;
  int grass_n = 0;
  int grass_trials = 5;
  std::uint64_t grass_seed = 0;

  auto* classify_cmd =
      app.add_subcommand("classify", "classify one kind (or all kinds) for invariant contact "
                                     "structures on b2 = 1 flag varieties");
  classify_cmd->add_option("--type", classify_type, "Cartan kind, e.g. A3, D5, E8");
  classify_cmd->add_flag("--all", classify_all, "classify every ADE kind up to --max-rank");
  classify_cmd->add_option("--max-rank", max_rank, "rank bound for --all (default 8)");
  classify_cmd->add_flag("--json", classify_json, "machine-readable output");
  classify_cmd->add_flag("--deterministic", classify_det, "omit timestamps");
  classify_cmd->add_flag("--expect-exists", classify_expect,
                         "exit 1 when the verdict is NoneExists");
  classify_cmd->add_option("--out", classify_out, "write output to a file instead of stdout");

  auto* certify_cmd = app.add_subcommand(
      "certify", "exact nondegeneracy certificate for the contact form via integer "
                 "Chevalley structure constants");
  certify_cmd->add_option("--type", certify_type, "Cartan kind")->required();
  certify_cmd->add_flag("--json", certify_json, "machine-readable output");
  certify_cmd->add_flag("--deterministic", certify_det, "omit timestamps");
  certify_cmd->add_flag("--expect-exists", certify_expect,
                        "exit 1 when the verdict is NoneExists");
  certify_cmd->add_option("--out", certify_out, "write output to a file instead of stdout");

  auto* grass_cmd = app.add_subcommand(
      "grassmannian", "numerical audit of the contact structure on Gr_B(2, C^{2n})");
  grass_cmd->add_option("--n", grass_n, "half the ambient dimension, n >= 4")->required();
  grass_cmd->add_option("--trials", grass_trials, "random group elements for invariance (default 5)");
  grass_cmd->add_option("--seed", grass_seed, "RNG seed (default 0)");
  grass_cmd->add_flag("--json", grass_json, "machine-readable output");
  grass_cmd->add_flag("--deterministic", grass_det, "omit timestamps");
  grass_cmd->add_option("--out", grass_out, "write output to a file instead of stdout");

  auto* roots_cmd = app.add_subcommand("roots", "list positive roots in both bases");
  roots_cmd->add_option("--type", roots_type, "Cartan kind")->required();
  roots_cmd->add_flag("--json", roots_json, "machine-readable output");
  roots_cmd->add_flag("--deterministic", roots_det, "omit timestamps");
  roots_cmd->add_option("--out", roots_out, "write output to a file instead of stdout");

  try {
    std::vector<const char*> argv;
    argv.push_back("flagcontact");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) {
      if (classify_all == !classify_type.empty()) {
        err << "error: pass exactly one of --type or --all\n";
        return 2;
      }
      if (classify_all && classify_expect) {
        err << "error: --expect-exists applies to a single --type\n";
        return 2;
      }
      if (classify_all) {
        if (max_rank < 1) {
          err << "error: --max-rank must be >= 1\n";
          return 2;
        }
        std::vector<ContactReport> reports;
        for (const CartanKind& kind : all_kinds(max_rank)) reports.push_back(classify(kind));
        std::ostringstream buf;
        if (classify_json) {
          nlohmann::json payload;
          payload["max_rank"] = max_rank;
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& r : reports) arr.push_back(to_json(r));
          payload["reports"] = arr;
          nlohmann::json env = make_envelope("classify", payload, classify_det);
          env["kind"] = "all";
          buf << env.dump(2) << "\n";
        } else {
          print_classify_table(reports, buf);
        }
        return emit(buf.str(), classify_out, out, err);
      }
      const ContactReport report = classify(parse_kind(classify_type));
      std::ostringstream buf;
      if (classify_json) {
        nlohmann::json env = make_envelope("classify", to_json(report), classify_det);
        env["kind"] = report.kind.name();
        buf << env.dump(2) << "\n";
      } else {
        print_classify_human(report, buf);
      }
      const int rc = emit(buf.str(), classify_out, out, err);
      if (rc != 0) return rc;
      return (classify_expect && report.verdict == Verdict::NoneExists) ? 1 : 0;
    }

    if (certify_cmd->parsed()) {
      const CertifyRecord rec = run_certify(parse_kind(certify_type));
      std::ostringstream buf;
      if (certify_json) {
        nlohmann::json env = make_envelope("certify", to_json(rec), certify_det);
        env["kind"] = rec.kind.name();
        buf << env.dump(2) << "\n";
      } else {
        print_certify_human(rec, buf);
      }
      const int rc = emit(buf.str(), certify_out, out, err);
      if (rc != 0) return rc;
      if (rec.verdict == Verdict::NoneExists) return certify_expect ? 1 : 0;
      if (!rec.nondegenerate || !rec.antisymmetric || rec.jacobi_violations != 0) {
        err << "error: certification failed for " << rec.kind.name() << "\n";
        return 3;
      }
      return 0;
    }

    if (grass_cmd->parsed()) {
      if (grass_trials < 1) {
        err << "error: --trials must be >= 1\n";
        return 2;
      }
      const GrassmannianAudit audit = run_grassmannian_audit(grass_n, grass_trials, grass_seed);
      std::ostringstream buf;
      if (grass_json) {
        nlohmann::json env = make_envelope("grassmannian", to_json(audit), grass_det);
        env["n"] = audit.n;
        env["seed"] = audit.seed;
        buf << env.dump(2) << "\n";
      } else {
        print_grassmannian_human(audit, buf);
      }
      return emit(buf.str(), grass_out, out, err);
    }

    if (roots_cmd->parsed()) {
      const RootSystem rs = build_root_system(roots_type);
      std::ostringstream buf;
      if (roots_json) {
        nlohmann::json env = make_envelope("roots", roots_to_json(rs), roots_det);
        env["kind"] = rs.kind().name();
        buf << env.dump(2) << "\n";
      } else {
        print_roots_human(rs, buf);
      }
      return emit(buf.str(), roots_out, out, err);
    }
  } catch (const InvalidKind& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidN& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidNode& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidFrame& e) {
    err << "certification failure: " << e.what() << "\n";
    return 3;
  } catch (const NotAntisymmetric& e) {
    err << "certification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "certification failure: " << e.what() << "\n";
    return 3;
  }

  err << "error: no subcommand given\n";
  return 2;
}

}  // namespace flagcontact
