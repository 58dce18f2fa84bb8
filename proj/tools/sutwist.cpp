#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sutwist/acceptance.hpp"
#include "sutwist/classification.hpp"
#include "sutwist/error.hpp"
#include "sutwist/json_io.hpp"
#include "sutwist/lattice.hpp"
#include "sutwist/presentation.hpp"
#include "sutwist/report.hpp"
#include "sutwist/spin.hpp"

namespace {

using namespace sutwist;
using ojson = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open parameter file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const Report& r, const std::string& format) {
  if (format == "json")
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
  return r.pass() ? kExitPass : kExitCheckFailed;
}

int cmd_classify(const std::string& param) {
  const auto ps = json_io::params_from_text(read_input(param));
  ojson matrix = ojson::array();
  for (const auto& a : ps) {
    ojson row = ojson::array();
    for (const auto& b : ps) row.push_back(std::string(classify::to_string(classify::is_isomorphic(a, b))));
    matrix.push_back(row);
  }
  ojson canon = ojson::array();
  for (const auto& p : ps) canon.push_back(json_io::to_json(classify::canonical_form(p)));
  std::cout << ojson{{"isomorphism", matrix}, {"canonical", canon}}.dump(2) << "\n";
  return kExitPass;
}

int cmd_canonical(const std::string& param) {
  const auto ps = json_io::params_from_text(read_input(param));
  ojson out = ojson::array();
  for (const auto& p : ps) out.push_back(json_io::to_json(classify::canonical_form(p)));
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

ojson tau_class(const lattice::TauVector& tau) {
  const int n = tau.n();
  const auto d = lattice::descend_to_PQ(lattice::c_tau(tau), n);
  ojson t = ojson::array();
  for (const auto& x : tau.entries()) t.push_back(x.str());
  return {{"tau", t},
          {"central_invariant", classify::central_invariant(tau).str()},
          {"is_cocycle", cohomology::is_cocycle(d.cocycle)},
          {"class_index", cohomology::cyclic_class_invariant(d.cocycle)},
          {"spot_checks", d.spot_checks}};
}

int cmd_cohomology(const std::string& param, int n) {
  ojson out = ojson::array();
  if (!param.empty()) {
    for (const auto& p : json_io::params_from_text(read_input(param))) out.push_back(tau_class(p.tau));
  } else {
    if (n < 2 || n > 6) throw Error(ErrorKind::InvalidInput, "--n must lie in [2, 6]");
    std::vector<int> digits(std::size_t(n - 1), 0);
    while (true) {
      std::vector<UnitAngle> e;
      for (int x : digits) e.emplace_back(x, n);
      out.push_back(tau_class(lattice::TauVector(n, e)));
      std::size_t p = 0;
      while (p < digits.size() && ++digits[p] == n) digits[p++] = 0;
      if (p == digits.size()) break;
    }
  }
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int cmd_present(const std::string& param, const std::string& format) {
  const auto ps = json_io::params_from_text(read_input(param));
  for (const auto& p : ps) {
    const auto rels = presentation::generate_relations(p);
    if (format == "latex") {
      std::cout << presentation::serialize(rels, presentation::Format::Latex);
    } else {
      ojson doc{{"param", json_io::to_json(p)},
                {"star_structure", std::string(presentation::kStarStructureNote)},
                {"relations", ojson::parse(presentation::serialize(rels, presentation::Format::Json))}};
      std::cout << doc.dump(2) << "\n";
    }
  }
  return kExitPass;
}

int cmd_spin_verify(int n, const std::string& qtext, const std::string& format) {
  const Rational q0 = Rational::parse(qtext);
  if (q0.sign() <= 0) throw Error(ErrorKind::InvalidInput, "--q must be positive");
  Report r;
  const auto classical = spin::pairing_gh(n, spin::Mode::Classical);
  const long closed = spin::pairing_closed_form(n);
  r.add("pairing classical", std::to_string(closed), classical.str(), "paper",
        classical == HalfLaurent(closed));
  const auto quantum = spin::pairing_gh(n, spin::Mode::Quantum);
  const Rational qv = quantum.eval(q0);
  const int sign = ((n + 1) / 2) % 2 == 0 ? 1 : -1;
  r.add("pairing quantum", "sign " + std::to_string(sign), quantum.str() + " = " + qv.str(), "derived",
        qv.sign() == sign);
  for (auto mode : {spin::Mode::Classical, spin::Mode::Quantum}) {
    const auto rep = spin::check_V_intertwiner(n, mode);
    r.add("intertwiner " + spin::to_string(mode), "zero residual",
          rep.ok ? "zero residual" : rep.counterexample, "derived", rep.ok);
  }
  if (n == 3) {
    const auto a1 = spin::theorem_a1_check(n, q0);
    r.add("invariant map at q=" + q0.str(), "nonzero multiple of identity",
          "scalar " + a1.scalar_value.str(), "paper", a1.nonzero && a1.scalar);
  }
  return emit(r, format);
}

int cmd_selftest(const std::string& scale, const std::string& format) {
  const auto results = acceptance::run_acceptance(scale == "full" ? acceptance::Scale::Full
                                                                  : acceptance::Scale::Quick);
  return emit(acceptance::summarize(results), format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification, cohomology, presentation and spin checks for twisted SU_q(n)"};
  app.require_subcommand(1);

  std::string param, format = "json", report = "text", scale = "quick", qtext = "1/2";
  int n = 3;
  const std::vector<std::string> formats{"json", "latex"}, reports{"json", "text"},
      scales{"quick", "full"};

  auto* classify_cmd = app.add_subcommand("classify", "Pairwise isomorphism and canonical forms");
  classify_cmd->add_option("--param", param, "JSON file with parameter tuples ('-' for stdin)")->required();
  auto* canonical_cmd = app.add_subcommand("canonical", "Canonical representative of each tuple");
  canonical_cmd->add_option("--param", param, "JSON file with parameter tuples")->required();
  auto* cohomology_cmd = app.add_subcommand("cohomology", "Classes of the descended 3-cocycles on Z/n");
  cohomology_cmd->add_option("--param", param, "JSON file; uses the tau of each tuple");
  cohomology_cmd->add_option("--n", n, "enumerate every tau for this rank");
  auto* present_cmd = app.add_subcommand("present", "Generators and relations of the twisted algebra");
  present_cmd->add_option("--param", param, "JSON file with parameter tuples")->required();
  present_cmd->add_option("--format", format, "json or latex")->check(CLI::IsMember(formats));
  auto* spin_cmd = app.add_subcommand("spin-verify", "Spin representation checks");
  spin_cmd->add_option("--n", n, "odd rank >= 3");
  spin_cmd->add_option("--q", qtext, "deformation parameter P/Q");
  spin_cmd->add_option("--report", report, "json or text")->check(CLI::IsMember(reports));
  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  self_cmd->add_option("--scale", scale, "quick or full")->check(CLI::IsMember(scales));
  self_cmd->add_option("--report", report, "json or text")->check(CLI::IsMember(reports));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (*classify_cmd) return cmd_classify(param);
    if (*canonical_cmd) return cmd_canonical(param);
    if (*cohomology_cmd) return cmd_cohomology(param, n);
    if (*present_cmd) return cmd_present(param, format);
    if (*spin_cmd) return cmd_spin_verify(n, qtext, report);
    if (*self_cmd) return cmd_selftest(scale, report);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
