#include "dforge/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <dforge/errors.hpp>

#include "dforge/cli/commands.hpp"

namespace dforge::cli {

namespace {

Json read_json(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw InputError("", "cannot read " + path);
    in = &file;
  }
  return Json::parse(*in);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact isogeny computations for rank-two Drinfeld modules", "dforge"};
  std::string command, input;
  RunOptions options;
  int certify_bound = -1;
  std::uint64_t q = 3;

  std::vector<std::string> commands = job_commands();
  commands.push_back("example35");
  app.add_option("command", command, "Operation to run")->required()->check(CLI::IsMember(commands));
  app.add_option("--in", input, "Job document (JSON), '-' for stdin");
  app.add_option("--seed", options.seed, "Seed for randomized factorization");
  app.add_option("--certify-bound", certify_bound, "tau-degree bound for non-CM certificates")
      ->check(CLI::Range(0, 64));
  app.add_option("--jobs", options.jobs, "Worker threads for per-object commands")->check(CLI::Range(1u, 256u));
  app.add_option("--q", q, "Field size for example35 (odd prime power)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kParseError;
  }
  if (certify_bound >= 0) options.certify_bound = certify_bound;

  try {
    Json result;
    if (command == "example35") {
      if (!input.empty()) {
        const Json doc = read_json(input);
        if (const Json* params = optional_member(doc, "params", ""))
          if (const Json* v = optional_member(*params, "q", "params")) q = as_unsigned(*v, "params.q");
      }
      result = example35_report(q, options);
    } else {
      if (input.empty()) throw InputError("", "--in is required for " + command);
      result = run_command(command, load_job(read_json(input)), options);
    }
    out << result.dump(2) << '\n';
    return kSuccess;
  } catch (const InputError& e) {
    err << "dforge: parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ParseError& e) {
    err << "dforge: parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const Json::exception& e) {
    err << "dforge: parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "dforge: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "dforge: internal error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace dforge::cli
