// closure-kit: integral closure of affine rings k[x]/D.
//
//   closure-kit normalize <file> [--order lex|degrevlex] [--radical auto|zerodim|general]
//                                [--max-iter N] [--json] [--verify] [--check] [--trace]
//
// Exit codes: 0 success, 1 usage or I/O, 2 parse error, 3 algorithm error,
// 4 verification or --check failure. Diagnostics go to stderr only.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "closure/document.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kAlgorithm = 3, kVerify = 4 };

closure::RadicalStrategy strategy_of(const std::string& name) {
  if (name == "zerodim") return closure::RadicalStrategy::ZeroDim;
  if (name == "general") return closure::RadicalStrategy::General;
  return closure::RadicalStrategy::Auto;
}

int run_normalize(const std::string& path, const closure::RunOptions& run, bool json, bool verify, bool check) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "closure-kit: cannot read " << path << '\n';
    return kUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  closure::MonomialOrder order =
      run.order == "lex" ? closure::MonomialOrder::lex() : closure::MonomialOrder::degrevlex();
  std::optional<closure::InputDocument> doc;
  try {
    doc = closure::parse_input(buffer.str(), order);
  } catch (const closure::Error& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kParse;
  }

  closure::NormalizeOptions options;
  options.max_iterations = run.max_iterations;
  options.radical.strategy = strategy_of(run.radical);

  try {
    if (check && !closure::is_reduced(doc->ideal(), options.radical)) {
      std::cerr << path << ": input ideal is not radical\n";
      return kVerify;
    }
    auto R0 = closure::AffinePresentation::from_ideal(doc->ideal());
    closure::NormalizationResult result = closure::normalize(R0, options);
    if (verify) {
      closure::VerificationReport report = closure::verify_result(R0, result, options);
      if (const auto* failure = report.first_failure()) {
        std::cerr << "verification failed: component c" << failure->component << ' ' << failure->name << ": "
                  << failure->detail << '\n';
        return kVerify;
      }
    }
    if (json) {
      std::cout << closure::emit_json(result, doc->ring, run) << '\n';
    } else {
      std::cout << closure::format_text(result, run);
      if (verify) std::cout << "\nverified\n";
    }
  } catch (const closure::IterationLimitExceeded& e) {
    std::cerr << e.what() << '\n';
    if (run.trace) {
      for (const auto& event : e.trace()) std::cerr << "  " << event.to_string() << '\n';
    }
    return kAlgorithm;
  } catch (const closure::Error& e) {
    std::cerr << e.what() << '\n';
    return kAlgorithm;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral closure of affine rings"};
  app.require_subcommand(1);

  std::string path;
  closure::RunOptions run;
  bool json = false, verify = false, check = false;

  auto* normalize = app.add_subcommand("normalize", "Normalize k[x]/D given in an input file");
  normalize->add_option("file", path, "Input document")->required();
  normalize->add_option("--order", run.order, "Monomial order")
      ->check(CLI::IsMember({"lex", "degrevlex"}))
      ->capture_default_str();
  normalize->add_option("--radical", run.radical, "Radical strategy")
      ->check(CLI::IsMember({"auto", "zerodim", "general"}))
      ->capture_default_str();
  normalize->add_option("--max-iter", run.max_iterations, "Extensions allowed per component")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  normalize->add_flag("--json", json, "Emit the result as JSON");
  normalize->add_flag("--verify", verify, "Certify the result independently");
  normalize->add_flag("--check", check, "Require the input ideal to be radical");
  normalize->add_flag("--trace", run.trace, "Include the event trace");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  return run_normalize(path, run, json, verify, check);
}
