// Command-line front end.
//
// Exit status: 0 on success, 1 when a check or validation fails, 2 on usage
// or parse errors. Diagnostics go to stderr.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hpd/bijection.hpp"
#include "hpd/branching.hpp"
#include "hpd/enumerate.hpp"
#include "hpd/io.hpp"
#include "hpd/verify.hpp"

namespace {

using namespace hpd;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Usage problems detected after CLI11 has accepted the arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream s;
  if (path == "-") {
    s << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    s << in.rdbuf();
  }
  return s.str();
}

Composition parse_alpha(const std::string& text) {
  try {
    return Composition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad composition: ") + e.what());
  }
}

std::vector<RowType> parse_word(const std::string& text) {
  try {
    return parse_tau(text);
  } catch (const ModelError& e) {
    throw UsageError(e.what());
  }
}

int resolve_N(const Composition& alpha, int N) {
  if (N < 0) return alpha.max_part();
  if (N < alpha.max_part()) throw UsageError("--N must be at least the largest part of alpha");
  return N;
}

void print_check(const std::string& name, const CheckResult& r, bool& ok) {
  std::cout << name << ": " << (r.ok ? "ok" : "FAILED") << " (" << r.cases << " cases)\n";
  if (!r.ok) {
    std::cerr << name << ": " << r.detail << "\n";
    ok = false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid pipe dreams for key polynomials"};
  app.require_subcommand(1);

  std::string alpha_text, tau_text, in_path = "-", out_dir, to_tau, method = "dp", format = "ascii";
  int N = -1, row = 0, a = 0, m = 0, max_n = 4, max_part = 3;

  auto* eval = app.add_subcommand("eval", "key polynomial by Demazure operators");
  eval->add_option("--alpha", alpha_text, "composition, e.g. 1,3,0,2")->required();

  auto* hpd_cmd = app.add_subcommand("hpd", "weighted sum over tilings");
  hpd_cmd->add_option("--alpha", alpha_text)->required();
  hpd_cmd->add_option("--tau", tau_text, "row types, e.g. WEEW")->required();
  hpd_cmd->add_option("--N", N, "number of extra columns (default: largest part)");
  hpd_cmd->add_option("--method", method)->check(CLI::IsMember({"enum", "dp"}));

  auto* enumerate = app.add_subcommand("enumerate", "list every tiling");
  enumerate->add_option("--alpha", alpha_text)->required();
  enumerate->add_option("--tau", tau_text)->required();
  enumerate->add_option("--N", N);
  enumerate->add_option("--out", out_dir, "write one document per tiling into this directory");

  auto* swap = app.add_subcommand("swap", "exchange rows R and R+1");
  swap->add_option("--in", in_path, "tiling document ('-' for stdin)");
  swap->add_option("--row", row, "upper row, 0-based")->required();

  auto* flip = app.add_subcommand("flip", "change the type of the bottom row");
  flip->add_option("--in", in_path);

  auto* transport_cmd = app.add_subcommand("transport", "move a tiling to other row types");
  transport_cmd->add_option("--in", in_path);
  transport_cmd->add_option("--to-tau", to_tau)->required();

  auto* branch = app.add_subcommand("branch", "two-side branching coefficients");
  branch->add_option("--alpha", alpha_text)->required();
  branch->add_option("--a", a, "number of west rows")->required();
  branch->add_option("--m", m, "length of beta")->required();
  branch->add_option("--tau", tau_text, "row types of the upper grid")->required();
  branch->add_option("--N", N);

  auto* verify = app.add_subcommand("verify", "run the exhaustive identity sweeps");
  verify->add_option("--max-n", max_n)->check(CLI::Range(1, 5));
  verify->add_option("--max-part", max_part)->check(CLI::Range(0, 4));

  auto* render = app.add_subcommand("render", "draw a tiling");
  render->add_option("--in", in_path);
  render->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) {
      std::cout << key_polynomial(parse_alpha(alpha_text)).to_string() << "\n";
    } else if (*hpd_cmd) {
      const Composition alpha = parse_alpha(alpha_text);
      const auto tau = parse_word(tau_text);
      const int n_cols = resolve_N(alpha, N);
      const Polynomial p = method == "enum" ? hpd_polynomial(alpha, tau, n_cols) : hpd_polynomial_dp(alpha, tau, n_cols);
      std::cout << p.to_string() << "\n";
    } else if (*enumerate) {
      const Composition alpha = parse_alpha(alpha_text);
      const auto tau = parse_word(tau_text);
      const auto tilings = enumerate_tilings(build_boundary(alpha, tau, resolve_N(alpha, N)), tau);
      if (out_dir.empty()) {
        for (std::size_t i = 0; i < tilings.size(); ++i) {
          if (i) std::cout << "\n";
          std::cout << serialize(tilings[i]);
        }
      } else {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < tilings.size(); ++i) {
          std::ofstream(std::filesystem::path(out_dir) / ("tiling_" + std::to_string(i) + ".hpd")) << serialize(tilings[i]);
        }
      }
      std::cerr << tilings.size() << " tilings\n";
    } else if (*swap) {
      std::cout << serialize(swap_adjacent(parse_tiling(read_input(in_path)), row));
    } else if (*flip) {
      std::cout << serialize(flip_bottom_row(parse_tiling(read_input(in_path))));
    } else if (*transport_cmd) {
      std::cout << serialize(transport(parse_tiling(read_input(in_path)), parse_word(to_tau)));
    } else if (*branch) {
      const Composition alpha = parse_alpha(alpha_text);
      const BranchTable table = branch_table(alpha, a, m, parse_word(tau_text), resolve_N(alpha, N));
      for (const auto& [beta, c] : table.entries) std::cout << "beta=" << beta.to_string() << " " << c.to_string() << "\n";
    } else if (*verify) {
      bool ok = true;
      const Sweep sweep(max_n, max_part);
      std::cout << "sweep: " << sweep.cases().size() << " (alpha, tau) pairs, " << sweep.tiling_count() << " tilings\n";
      print_check("weighted sums", check_weighted_sums(sweep), ok);
      print_check("sweep evaluator", check_dp_agreement(sweep), ok);
      print_check("N stability", check_n_stability(sweep), ok);
      print_check("flip and swap", check_row_moves(sweep), ok);
      print_check("transport", check_transport(sweep), ok);
      print_check("round trip", check_round_trip(sweep), ok);
      print_check("branching identity", check_branching_identity(max_n, std::min(max_part, 2)), ok);
      return ok ? kOk : kFailure;
    } else if (*render) {
      const Tiling t = parse_tiling(read_input(in_path));
      std::cout << (format == "svg" ? render_svg(t) : render_ascii(t));
    }
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kFailure;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const StateSpaceOverflow& e) {
    std::cerr << e.what() << "\n";
    return kFailure;
  } catch (const ModelError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
