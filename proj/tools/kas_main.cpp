#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "kas/cyclotomic.hpp"
#include "kas/relativity.hpp"
#include "kas/report.hpp"
#include "kas/specialization.hpp"
#include "kas/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int check_primes(const std::vector<std::int64_t>& primes) {
  for (const auto p : primes) {
    if (!kas::is_prime(p)) {
      std::cerr << "error: " << p << " is not prime\n";
      return kExitUsage;
    }
  }
  return kExitOk;
}

void print_report(const kas::Report& report, const std::string& format) {
  if (format == "json") {
    std::cout << kas::to_json(report).dump(2) << "\n";
  } else {
    std::cout << kas::render_text(report);
  }
}

int run_verify(const std::string& scope, const std::vector<std::int64_t>& primes,
               const std::string& format) {
  if (const int rc = check_primes(primes); rc != kExitOk) {
    return rc;
  }
  const kas::Report report = kas::verify_scope(scope, primes);
  print_report(report, format);
  return report.all_passed() ? kExitOk : kExitFailure;
}

int run_addvel(double u, double v, double c) {
  try {
    const kas::Velocity vu = kas::make_velocity(u, c);
    const kas::Velocity vv = kas::make_velocity(v, c);
    const kas::Velocity sum = kas::add_velocity(vu, vv);
    std::cout << "u ⊕ v = " << sum.value << "  (c = " << c << ")\n";
    if (std::abs(u) < c && std::abs(v) < c) {
      const double ru = kas::rapidity(vu);
      const double rv = kas::rapidity(vv);
      const double rs = kas::rapidity(sum);
      std::cout << "rapidity: " << ru << " + " << rv << " = " << rs << "\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run_boost(double u, double c) {
  try {
    const kas::Boost b = kas::boost_matrix(kas::make_velocity(u, c));
    std::cout << "L(u) = [[" << b.matrix.a << ", " << b.matrix.b << "],\n"
              << "        [" << b.matrix.c << ", " << b.matrix.d << "]]\n";
    std::cout << "det = " << b.matrix.det() << "\n";
    std::cout << "rapidity = " << kas::rapidity(b.u) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

kas::Report kummer_report(std::int64_t p) {
  kas::Report r;
  r.suite = "kummer(p=" + std::to_string(p) + ")";
  r.paper_anchors = {"3.1.1", "3.1.2", "3.2", "3.3"};
  const std::vector<std::int64_t> primes{p};
  r.merge(kas::verify_cyclotomic(primes));
  if (p == 2) {
    r.add("cyclotomic.p2.phi-inapplicable",
          "the torus-coordinate power map needs odd p", true,
          "phi part inapplicable at p = 2");
  }
  return r;
}

void print_kummer_text(std::int64_t p) {
  const kas::CycloNum h = kas::CycloNum::uniformizer(p);
  const kas::RamificationReport ram = kas::verify_ramification(p);
  const kas::PsiSpecialization psi = kas::specialize_psi(p);

  std::cout << "kummer p=" << p << "\n";
  std::cout << "  h = " << h << "\n";
  std::cout << "  h^2 = " << h * h << "\n";
  std::cout << "  v_h(" << p << ") = " << ram.valuation_of_p << "\n";
  std::cout << "  w = h^(p-1)/" << p << " = " << ram.w << "\n";
  const kas::CycloNum minus_one_minus_h = -(kas::CycloNum::one(p) + h);
  if (ram.w == minus_one_minus_h) {
    std::cout << "  w = -1 - h\n";
  }
  std::cout << "  w is an integral unit: " << (ram.w_unit ? "yes" : "no") << "\n";
  std::cout << "  w = -1 mod h: " << (ram.w_congruent_minus_one ? "yes" : "no")
            << "\n";

  std::cout << "  psi_" << p << "(u) coefficients on the ζ-basis:\n";
  for (std::size_t i = 0; i < psi.coeffs.size(); ++i) {
    std::cout << "    u^" << i << ": " << psi.coeffs[i] << "\n";
  }
  std::cout << "  coefficients integral: " << (psi.coeffs_integral ? "yes" : "no")
            << "\n";
  std::cout << "  special fiber: " << psi.fiber.to_string() << "\n";
  std::cout << "  fiber is u^" << p << " - u: "
            << (psi.fiber_is_artin_schreier ? "yes" : "no") << "\n";

  if (p == 2) {
    std::cout << "  phi part: inapplicable at p = 2\n";
    return;
  }
  const kas::PhiSpecialization phi = kas::specialize_phi(p);
  std::cout << "  phi_" << p << ": N integral: " << (phi.num_integral ? "yes" : "no")
            << "\n";
  std::cout << "  N mod h = " << phi.num_fiber.to_string() << "\n";
  std::cout << "  D mod h = " << phi.den_fiber.to_string() << "\n";
  std::cout << "  N/D mod h = " << phi.quotient_fiber.to_string() << "\n";
}

int run_kummer(std::int64_t p, const std::string& format) {
  if (!kas::is_prime(p)) {
    std::cerr << "error: " << p << " is not prime\n";
    return kExitUsage;
  }
  const kas::Report report = kummer_report(p);
  if (format == "json") {
    std::cout << kas::to_json(report).dump(2) << "\n";
  } else {
    print_kummer_text(p);
  }
  return report.all_passed() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the Lorentz/SOS deformation group laws"};
  app.require_subcommand(1);

  std::string scope = "all";
  std::vector<std::int64_t> primes = kas::default_primes();
  std::string verify_format = "text";
  CLI::App* verify = app.add_subcommand("verify", "run the exact identity suites");
  verify->add_option("scope", scope, "grouplaws|matrices|morphisms|cyclotomic|all")
      ->check(CLI::IsMember({"grouplaws", "matrices", "morphisms", "cyclotomic", "all"}));
  verify->add_option("--primes", primes, "primes for the cyclotomic suite")
      ->delimiter(',');
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  double u = 0.0, v = 0.0, c = 1.0;
  CLI::App* addvel = app.add_subcommand("addvel", "relativistic velocity addition");
  addvel->add_option("u", u, "first velocity")->required();
  addvel->add_option("v", v, "second velocity")->required();
  addvel->add_option("--c", c, "speed of light (default 1)");

  double boost_u = 0.0, boost_c = 1.0;
  CLI::App* boost = app.add_subcommand("boost", "print the boost matrix L(u)");
  boost->add_option("u", boost_u, "velocity")->required();
  boost->add_option("--c", boost_c, "speed of light (default 1)");

  std::int64_t kummer_p = 0;
  std::string kummer_format = "text";
  CLI::App* kummer =
      app.add_subcommand("kummer", "cyclotomic specialization report for a prime");
  kummer->add_option("--p", kummer_p, "prime")->required();
  kummer->add_option("--format", kummer_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      return run_verify(scope, primes, verify_format);
    }
    if (addvel->parsed()) {
      return run_addvel(u, v, c);
    }
    if (boost->parsed()) {
      return run_boost(boost_u, boost_c);
    }
    if (kummer->parsed()) {
      return run_kummer(kummer_p, kummer_format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
