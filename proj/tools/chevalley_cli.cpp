// chevalley: root systems, adjoint models, Chevalley bases and Chevalley
// groups from a Cartan matrix.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "chevalley/adjoint.hpp"
#include "chevalley/checks.hpp"
#include "chevalley/chevalley_group.hpp"
#include "chevalley/lie_closure.hpp"
#include "chevalley/serialize.hpp"

using namespace chevalley;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Source {
  std::string type;
  std::string raw;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* t = cmd->add_option("--type", src.type, "Cartan type such as G2 or B3");
  auto* r = cmd->add_option("--raw", src.raw, "JSON file holding an integer Cartan matrix");
  t->excludes(r);
  r->excludes(t);
}

RootSystem load(const Source& src) {
  if (!src.type.empty()) return RootSystem(CartanMatrix::from_type(src.type));
  if (!src.raw.empty()) return RootSystem(cartan_from_json(read_json_file(src.raw)));
  throw UsageError("one of --type or --raw is required");
}

std::string type_name(const RootSystem& rs) {
  const auto [t, r] = identify_type(rs);
  return std::string(1, t) + std::to_string(r);
}

/// Heavy types for the closure: rank >= 6 exceptional algebras.
bool is_heavy(const RootSystem& rs) { return identify_type(rs).first == 'E'; }

void print_matrix(std::ostream& out, const IntMatrix& m) {
  std::size_t width = 1;
  for (const Integer& x : m.data()) width = std::max(width, x.get_str().size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string s = m(r, c).get_str();
      out << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    out << "\n";
  }
}

int cmd_roots(const Source& src, const std::string& format, bool pairings) {
  const RootSystem rs = load(src);
  if (format == "json") {
    std::cout << root_system_to_json(rs, pairings).dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "index,coords,symbol,height\n";
    for (std::size_t k = 0; k < rs.size(); ++k) {
      const Root& r = rs.root(k);
      std::cout << k << ",\"" << r.to_string() << "\"," << r.symbol() << "," << r.height() << "\n";
    }
    return 0;
  }
  std::cout << "type " << type_name(rs) << "\n";
  std::cout << "cartan\n";
  print_matrix(std::cout, rs.cartan().as_matrix());
  std::cout << "symmetrizer";
  for (int d : rs.cartan().symmetrizer()) std::cout << " " << d;
  std::cout << "\nroots " << rs.size() << " (positive " << rs.num_positive() << ")\n";
  for (const Root& r : rs.roots()) std::cout << "  " << r.to_string() << "  " << r.symbol() << "  ht " << r.height() << "\n";
  return 0;
}

IntMatrix adjoint_generator(const RootSystem& rs, const std::string& gen) {
  if (gen == "omega") return build_omega(rs);
  if (gen.rfind("h:", 0) == 0) {
    const Json coords = Json::parse(gen.substr(2), nullptr, false);
    if (coords.is_discarded() || !coords.is_array()) throw UsageError("bad root in '" + gen + "'");
    return build_h_alpha(rs, Root{coords.get<std::vector<int>>()});
  }
  if (gen.size() >= 2 && (gen[0] == 'e' || gen[0] == 'f' || gen[0] == 'h')) {
    std::size_t pos = 0;
    long i = 0;
    try {
      i = std::stol(gen.substr(1), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos + 1 == gen.size() && i >= 1 && static_cast<std::size_t>(i) <= rs.rank()) {
      const std::size_t k = static_cast<std::size_t>(i - 1);
      if (gen[0] == 'e') return build_e(rs, k);
      if (gen[0] == 'f') return build_f(rs, k);
      return build_h(rs, k);
    }
  }
  throw UsageError("unknown generator '" + gen + "' (use e<i>, f<i>, h<i>, h:[coords] or omega)");
}

int cmd_adjoint(const Source& src, const std::string& gen, bool json) {
  const RootSystem rs = load(src);
  const IntMatrix m = adjoint_generator(rs, gen);
  if (json) {
    Json doc = model_matrix_to_json(rs, m);
    doc["generator"] = gen;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << gen << " on M, basis order:";
  for (const std::string& s : ModelBasis(rs).legend(rs)) std::cout << " " << s;
  std::cout << "\n";
  print_matrix(std::cout, m);
  return 0;
}

int cmd_closure(const Source& src, const std::string& report, bool allow_heavy) {
  const RootSystem rs = load(src);
  if (is_heavy(rs) && !allow_heavy) {
    throw UsageError("closure for " + type_name(rs) + " is slow; pass --allow-heavy to run it");
  }
  std::vector<IntMatrix> es, fs, hs;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    es.push_back(build_e(rs, i));
    fs.push_back(build_f(rs, i));
    hs.push_back(build_h(rs, i));
  }
  std::vector<IntMatrix> gens = es;
  gens.insert(gens.end(), fs.begin(), fs.end());
  const LieClosure g = lie_closure(gens);
  const RootSpaceDecomposition dec = root_space_decomposition(g.span, hs);
  const TriangularReport tri = triangular_report(rs, g, lie_closure(es), lie_closure(fs));
  const bool ok = tri.passed() && g.dimension() == rs.size() + rs.rank();
  if (report == "json") {
    std::cout << closure_report_to_json(rs, g, dec, tri).dump(2) << "\n";
    return ok ? 0 : kExitFailure;
  }
  std::cout << "type " << type_name(rs) << "\n";
  std::cout << "dim g " << g.dimension() << " (|Phi| + rank = " << rs.size() + rs.rank() << ")\n";
  std::cout << "dim n+ " << tri.dim_n_plus << ", dim h " << tri.dim_h << ", dim n- " << tri.dim_n_minus << "\n";
  std::cout << "weight spaces " << dec.spaces.size() << "\n";
  for (const auto& [w, space] : dec.spaces) {
    std::cout << "  (";
    for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i];
    std::cout << ")  dim " << space.dimension();
    if (const auto k = root_of_weight(rs, w)) std::cout << "  " << rs.root(*k).symbol();
    std::cout << "\n";
  }
  std::cout << "n+ strictly upper " << (tri.n_plus_strictly_upper ? "yes" : "no") << "\n";
  std::cout << "n- strictly lower " << (tri.n_minus_strictly_lower ? "yes" : "no") << "\n";
  std::cout << "traceless " << (tri.traceless ? "yes" : "no") << "\n";
  std::cout << "g = n- + h + n+ " << (tri.direct_sum ? "yes" : "no") << "\n";
  for (const std::string& f : tri.failures) std::cout << "FAIL " << f << "\n";
  return ok ? 0 : kExitFailure;
}

int cmd_chevbasis(const Source& src, const std::string& eps_text, bool table, const std::string& format) {
  const RootSystem rs = load(src);
  const SignFunction eps =
      eps_text.empty() ? two_colorings(rs.cartan()).first : SignFunction::parse(rs.cartan(), eps_text);
  const ChevalleyBasis basis = build_chevalley_basis(rs, eps);
  if (table) {
    std::cout << g2_table(rs, basis);
    return 0;
  }
  const ConstantsDocument doc = constants_document(rs, basis);
  if (format == "json") {
    std::cout << constants_to_json(rs, doc).dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "alpha,beta,n\n";
    for (const auto& [key, n] : doc.table.entries) {
      std::cout << "\"" << rs.root(key.first).to_string() << "\",\"" << rs.root(key.second).to_string() << "\","
                << n.get_str() << "\n";
    }
    return 0;
  }
  std::cout << "type " << type_name(rs) << ", epsilon " << eps.to_string() << "\n";
  std::cout << "structure constants " << doc.table.size() << "\n";
  for (const auto& [key, n] : doc.table.entries) {
    std::cout << "  N(" << rs.root(key.first).symbol() << ", " << rs.root(key.second).symbol() << ") = " << n.get_str()
              << "\n";
  }
  return 0;
}

int cmd_group(const Source& src, std::uint64_t q, std::optional<std::uint64_t> cap_opt, const std::string& dump,
              bool allow_heavy, std::uint64_t seed) {
  const RootSystem rs = load(src);
  const RingSpec field = RingSpec::prime_field(q);
  const auto [t, r] = identify_type(rs);
  const Integer oracle = classical_order_oracle(t, r, q);
  std::uint64_t cap = cap_opt.value_or(default_bfs_cap());
  if (oracle > Integer(static_cast<unsigned long>(cap))) {
    if (!allow_heavy) {
      throw UsageError("expected order " + oracle.get_str() + " exceeds the cap " + std::to_string(cap) +
                       "; pass --allow-heavy or a larger --cap");
    }
    if (!cap_opt && oracle.fits_ulong_p()) cap = oracle.get_ui();
  }
  GroupEnumeration g = [&] {
    try {
      return generate_group_bfs(rs, field, cap);
    } catch (const CapExceeded& e) {
      std::cout << "partial count " << e.partial_count() << "\n";
      throw;
    }
  }();
  const Integer order(static_cast<unsigned long>(g.order()));
  std::cout << "type " << type_name(rs) << " over " << field.name() << "\n";
  std::cout << "bfs order " << order.get_str() << "\n";
  std::cout << "formula order " << oracle.get_str() << "\n";
  if (!dump.empty()) {
    g.write_dump(dump);
    std::cout << "dumped " << g.order() << " elements to " << dump << "\n";
  }
  if (order != oracle) {
    std::cout << "MISMATCH: generators x_i(t), y_i(t) for i = 1.." << rs.rank() << ", t in GF(" << q << ")^x\n";
    return kExitFailure;
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 4; ++trial) {
    const GroupElem x = g.element(rng() % g.order());
    if (!(power(x, order) == GroupElem::identity(x.dimension(), field))) {
      std::cout << "FAIL g^|G| != id for a sampled element\n";
      return kExitFailure;
    }
  }
  std::cout << "match yes\n";
  return 0;
}

int cmd_verify(const Source& src, std::uint64_t seed, const std::string& format) {
  const RootSystem rs = load(src);
  VerifyOptions opts;
  opts.seed = seed;
  const std::vector<CheckResult> results = run_verification(rs, opts);
  if (format == "json") {
    Json doc;
    doc["type"] = type_name(rs);
    doc["seed"] = seed;
    Json checks = Json::array();
    for (const CheckResult& c : results) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    doc["checks"] = checks;
    doc["passed"] = all_passed(results);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "verify " << type_name(rs) << " (seed " << seed << ")\n" << format_results(results);
    std::size_t failed = 0;
    for (const CheckResult& c : results) failed += c.passed ? 0 : 1;
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return all_passed(results) ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root systems, Chevalley bases and Chevalley groups from a Cartan matrix"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "chevalley 1.0");

  Source src_roots, src_adj, src_clo, src_cb, src_grp, src_ver;

  auto* roots = app.add_subcommand("roots", "List the root system");
  add_source(roots, src_roots);
  std::string roots_format = "text";
  bool roots_json = false, pairings = false;
  roots->add_option("--format", roots_format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  roots->add_flag("--json", roots_json, "Same as --format json");
  roots->add_flag("--pairings", pairings, "Include the pairing table in JSON output");

  auto* adjoint = app.add_subcommand("adjoint", "Matrix of e_i, f_i, h_i, h_alpha or omega on M");
  add_source(adjoint, src_adj);
  std::string gen = "e1";
  bool adj_json = false;
  adjoint->add_option("--gen", gen, "e<i>, f<i>, h<i>, h:[coords] or omega");
  adjoint->add_flag("--json", adj_json, "JSON output");

  auto* closure = app.add_subcommand("closure", "Lie closure of the e_i, f_i with its root space decomposition");
  add_source(closure, src_clo);
  std::string report = "text";
  bool closure_heavy = false;
  closure->add_option("--report", report, "text or json")->check(CLI::IsMember({"text", "json"}));
  closure->add_flag("--allow-heavy", closure_heavy, "Allow types E6, E7, E8");

  auto* chevbasis = app.add_subcommand("chevbasis", "Chevalley basis and structure constants");
  add_source(chevbasis, src_cb);
  std::string eps_text, cb_format = "text";
  bool cb_table = false, cb_json = false;
  chevbasis->add_option("--eps", eps_text, "Sign function such as +- (default: first coloring, eps(1) = +1)");
  chevbasis->add_flag("--table", cb_table, "Print the G2 bracket table");
  chevbasis->add_option("--format", cb_format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  chevbasis->add_flag("--json", cb_json, "Same as --format json");

  auto* group = app.add_subcommand("group", "Enumerate the adjoint Chevalley group over GF(q) by BFS");
  add_source(group, src_grp);
  std::uint64_t q = 2, grp_seed = 1;
  std::optional<std::uint64_t> cap;
  std::string dump;
  bool order_flag = false, grp_heavy = false;
  group->add_option("--q", q, "Prime field size");
  group->add_flag("--order", order_flag, "Print the group order (the default action)");
  group->add_option("--cap", cap, "Element cap (default 5000000 or CHEVALLEY_BFS_CAP)");
  group->add_option("--dump", dump, "Write the elements to a binary file");
  group->add_flag("--allow-heavy", grp_heavy, "Allow orders above the cap");
  group->add_option("--seed", grp_seed, "Seed for sampled spot checks");

  auto* verify = app.add_subcommand("verify", "Run every invariant check for one root system");
  add_source(verify, src_ver);
  std::uint64_t ver_seed = 1;
  std::string ver_format = "text";
  verify->add_option("--seed", ver_seed, "Seed for sampled spot checks");
  verify->add_option("--format", ver_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    std::cout << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*roots) return cmd_roots(src_roots, roots_json ? "json" : roots_format, pairings);
    if (*adjoint) return cmd_adjoint(src_adj, gen, adj_json);
    if (*closure) return cmd_closure(src_clo, report, closure_heavy);
    if (*chevbasis) return cmd_chevbasis(src_cb, eps_text, cb_table, cb_json ? "json" : cb_format);
    if (*group) return cmd_group(src_grp, q, cap, dump, grp_heavy, grp_seed);
    if (*verify) return cmd_verify(src_ver, ver_seed, ver_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidCartan& e) {
    std::cerr << "error: invalid Cartan matrix: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownRoot& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
