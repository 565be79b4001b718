// hyperlat: higher-root lattices of SU(3) quantum modules.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "hyperlat/catalog.hpp"
#include "hyperlat/errors.hpp"
#include "hyperlat/golden.hpp"
#include "hyperlat/lattice.hpp"
#include "hyperlat/ribbon.hpp"
#include "hyperlat/theta.hpp"
#include "hyperlat/verify.hpp"

using namespace hyperlat;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::string module_label(const std::string& name, int level) {
  return (name == "A" || name == "D") ? name + std::to_string(level) : name;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

json to_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

int cmd_list() {
  for (const auto& e : supported_modules())
    std::cout << e.name << ' ' << e.level << " → r_E=" << e.rank << ", \U0001D52F=" << 2 * e.rank << '\n';
  return kOk;
}

int cmd_gram(const std::string& name, int level, const std::string& basis_name, const std::string& format) {
  const BasisChoice choice = parse_basis(basis_name);
  const RootSystem sys(get_module(name, level));
  const IntMatrix a = gram_matrix(sys, basis(sys, choice));
  const LatticeInvariants inv = lattice_invariants(a);
  if (format == "json") {
    json j;
    j["module"] = name;
    j["level"] = level;
    j["basis"] = to_string(choice);
    j["gram"] = to_json(a);
    j["determinant"] = inv.determinant.get_str();
    j["modular_level"] = inv.modular_level.get_str();
    j["elementary_divisors"] = to_json(inv.elementary_divisors);
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::cout << (k ? "," : "") << a(i, k);
      std::cout << '\n';
    }
  } else {
    std::cout << module_label(name, level) << " basis " << to_string(choice) << ", " << a.rows() << "x" << a.cols()
              << '\n'
              << a << "det = " << inv.determinant << "\nlevel = " << inv.modular_level << "\nSNF =";
    for (const auto& d : inv.elementary_divisors) std::cout << ' ' << d;
    std::cout << '\n';
  }
  return kOk;
}

int cmd_theta(const std::string& name, int level, std::optional<std::size_t> max_coeff, unsigned threads,
              long rescale, const std::string& format) {
  const GoldenTheta* gt = golden_table().find_theta(name, level);
  const std::size_t default_max = gt ? gt->default_max : 3;
  const std::size_t m = max_coeff.value_or(default_max);
  if (m > default_max)
    std::cerr << "warning: --max-coeff " << m << " exceeds the default " << default_max << " for "
              << module_label(name, level) << "; this may take a long time\n";
  if (rescale < 1) throw DomainError("--rescale must be positive");
  const RootSystem sys(get_module(name, level));
  IntMatrix a = gram_matrix(sys, basis(sys, BasisChoice::B1));
  if (rescale != 1) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!mpz_divisible_ui_p(a(i, j).get_mpz_t(), rescale))
          throw DomainError("Gram matrix is not divisible by " + std::to_string(rescale));
        a(i, j) /= rescale;
      }
  }
  EnumerationOptions o;
  o.threads = threads;
  const ThetaSeries s = theta_coefficients(a, m, o);
  if (format == "json") {
    json j;
    j["module"] = name;
    j["level"] = level;
    j["max_coeff"] = m;
    j["rescale"] = rescale;
    j["coefficients"] = to_json(s.coefficients);
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "index,coefficient\n";
    for (std::size_t i = 0; i < s.coefficients.size(); ++i) std::cout << i << ',' << s.coefficients[i] << '\n';
  } else {
    for (std::size_t i = 0; i < s.coefficients.size(); ++i) std::cout << (i ? "," : "") << s.coefficients[i];
    std::cout << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& suite, std::optional<std::string> name, std::optional<int> level, unsigned threads) {
  VerifyOptions o;
  o.full = suite == "all";
  o.threads = threads;
  if (name.has_value() != level.has_value()) throw DomainError("--module and --level go together");
  if (name) {
    get_module(*name, *level);
    o.module = ModuleFilter{*name, *level};
  }
  const auto results = run_checks(golden_table(), o);
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name << ": " << r.detail << " ("
              << r.seconds << " s)\n";
    if (!r.passed) ++failed;
  }
  std::cout << results.size() - failed << " of " << results.size() << " checks passed\n";
  return failed == 0 ? kOk : kFailure;
}

int cmd_validate(const std::string& path) {
  QuantumModule m;
  try {
    m = load_module_file(path);
  } catch (const ValidationError& e) {
    std::cout << "FAIL " << path << ": " << e.what() << '\n';
    return kFailure;
  }
  const RootSystem sys(m);
  const IntMatrix a = gram_matrix(sys, basis(sys, BasisChoice::B1));
  const BigInt det = determinant(a);
  const BigInt ell = modular_level(a);
  const std::size_t roots = 2 * build_ribbon(sys).size();
  std::cout << m.name << " level " << m.level << ", r_E = " << m.rank() << ", |R| = " << roots << ", det = " << det
            << ", level of the form = " << ell << '\n';
  if (const GoldenRow* row = golden_table().find_row(m.name, m.level)) {
    if (det != row->determinant || roots != row->root_count) {
      std::cout << "FAIL: expected det = " << row->determinant << " and |R| = " << row->root_count << '\n';
      return kFailure;
    }
  }
  std::cout << "PASS\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-root lattices of SU(3) quantum modules"};
  app.require_subcommand(0, 1);

  app.add_subcommand("list", "List supported modules");

  std::string name, basis_name = "B1", format = "text", suite = "all", path;
  int level = 0;
  unsigned threads = 0;
  long rescale = 1;
  std::optional<std::size_t> max_coeff;
  std::optional<std::string> filter_name;
  std::optional<int> filter_level;

  auto* gram = app.add_subcommand("gram", "Print a Gram matrix and its invariants");
  gram->add_option("--module", name, "A, D, E5, E9 or E21")->required();
  gram->add_option("--level", level, "level k")->required();
  gram->add_option("--basis", basis_name, "B1, B2 or B3")->check(CLI::IsMember({"B1", "B2", "B3"}));
  gram->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  auto* theta = app.add_subcommand("theta", "Theta series coefficients in powers of q^2");
  theta->add_option("--module", name)->required();
  theta->add_option("--level", level)->required();
  theta->add_option("--max-coeff", max_coeff, "largest index M");
  theta->add_option("--threads", threads, "worker threads, 0 for all cores");
  theta->add_option("--rescale", rescale, "divide the Gram matrix by this factor first");
  theta->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Compare against the published data");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "fast"}));
  verify->add_option("--module", filter_name);
  verify->add_option("--level", filter_level);
  verify->add_option("--threads", threads);

  auto* validate = app.add_subcommand("validate-module", "Check a module file");
  validate->add_option("path", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gram) return cmd_gram(name, level, basis_name, format);
    if (*theta) return cmd_theta(name, level, max_coeff, threads, rescale, format);
    if (*verify) return cmd_verify(suite, filter_name, filter_level, threads);
    if (*validate) return cmd_validate(path);
    return cmd_list();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "invalid module: " << e.what() << '\n';
    return kFailure;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kFailure;
  }
}
