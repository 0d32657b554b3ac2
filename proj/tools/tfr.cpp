// tfr: command-line front end. Reports go to stdout, diagnostics to stderr.
// Exit codes: 0 complete, 2 a search bound was exhausted, 1 bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tfr/cli.hpp"
#include "tfr/polyhedral.hpp"

namespace {

struct Args {
  std::string input;
  std::string degree;
  bool report = false;
  std::string characteristic = "0";
  long prime = 0;
  long box = -1;
  std::string bound;
  std::string format = "json";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric face rings: normalization, presentations, local cohomology, F-purity"};
  app.require_subcommand(1);
  Args a;

  struct Spec {
    const char* name;
    const char* help;
    bool degree;
    bool report;
    bool prime;
  };
  const Spec specs[] = {
      {"validate", "check the fan and monoid axioms and print flags", false, false, false},
      {"normalize", "Hilbert bases of the normalizations of the maximal monoids", false, false, false},
      {"seminormalize", "generators of the seminormalizations", false, false, false},
      {"check", "seminormality and normality with witnesses", false, false, false},
      {"presentation", "binomial and monomial generators of the presentation ideal", false, false, false},
      {"cohomology", "local cohomology at one degree or as a class report", true, true, false},
      {"depth", "depth and Cohen-Macaulayness", false, false, false},
      {"fpure", "primes at which the ring is not F-pure", false, false, false},
      {"oracle", "Čech complex at one degree", true, false, false},
      {"frobenius", "Frobenius action on local cohomology from degree a to p·a", true, false, true},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", a.input, "input JSON file")->required()->check(CLI::ExistingFile);
    if (s.degree) sub->add_option("--degree", a.degree, "degree a, comma separated")->allow_extra_args(false);
    if (s.report) sub->add_flag("--report", a.report, "one table per star class");
    if (s.prime) sub->add_option("-p", a.prime, "prime")->required();
    sub->add_option("--char", a.characteristic, "0, a prime, or all");
    sub->add_option("--box", a.box, "scan radius");
    sub->add_option("--bound", a.bound, "search / certification bound");
    sub->add_option("--format", a.format, "output format")->check(CLI::IsMember({"json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    std::ifstream in(a.input);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto doc = tfr::cli::parse_input(ss.str());

    tfr::cli::CommandOptions o;
    o.command = app.get_subcommands().front()->get_name();
    if (!a.degree.empty()) o.degree = tfr::cli::parse_degree(a.degree, doc.dimension);
    o.report = a.report;
    o.characteristic = a.characteristic;
    if (a.prime != 0) o.prime = a.prime;
    if (a.box >= 0) o.box = a.box;
    if (!a.bound.empty()) {
      o.bound = tfr::Integer();
      if (o.bound->set_str(a.bound, 10) != 0) throw tfr::cli::InputError("--bound: malformed integer \"" + a.bound + "\"");
    }
    const auto r = tfr::cli::run_command(doc, o);
    std::cout << r.text();
    if (r.exit_code == 2) std::cerr << "warning: a search bound was exhausted; see \"status\"\n";
    return r.exit_code;
  } catch (const tfr::cli::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
