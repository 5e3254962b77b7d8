// Command-line front end. Everything goes through the C API.

#include "goodsets/goodsets.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

const char* const kCommands =
    "check-good | find-loop | is-full | fullify | split | maximalize | components | geodesic | boundary | "
    "solve | simplicial | stats | emit-examples";

int report_failure(gs_status status) {
  std::cerr << "goodsets: " << gs_status_name(status) << ": " << gs_last_error() << '\n';
  return static_cast<int>(status);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide goodness of finite subsets of product sets and solve u_1 + ... + u_n = f exactly."};
  app.set_version_flag("--version", std::string(gs_version()));

  std::string command;
  std::string target;
  std::optional<std::size_t> from;
  std::optional<std::size_t> to;
  std::string method = "direct";
  std::optional<std::string> pins;
  std::string out_path;
  bool timing = false;
  bool no_verify = false;

  app.add_option("command", command, kCommands)->required();
  app.add_option("instance", target, "instance JSON file (output directory for emit-examples)")->required();
  app.add_option("--from", from, "geodesic start / solve --method geodesic base (point index)");
  app.add_option("--to", to, "geodesic end (point index)");
  app.add_option("--method", method, "solve method")
      ->check(CLI::IsMember({"direct", "geodesic", "componentwise", "boundary"}));
  app.add_option("--pins", pins, "pins as axis:value=rational,... (overrides the file)");
  app.add_option("--out", out_path, "write the JSON report to this file instead of stdout");
  app.add_flag("--timing", timing, "include wall-clock timing in the report");
  app.add_flag("--no-verify", no_verify, "skip boundary re-verification");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return GS_ERR_PARSE;
  }

  if (command == "emit-examples") {
    std::size_t count = 0;
    if (gs_status s = gs_emit_examples(target.c_str(), &count); s != GS_OK) {
      return report_failure(s);
    }
    std::cout << "wrote " << count << " instance files to " << target << '\n';
    return 0;
  }

  gs_instance* raw = nullptr;
  if (gs_status s = gs_instance_load(target.c_str(), &raw); s != GS_OK) {
    return report_failure(s);
  }
  std::unique_ptr<gs_instance, decltype(&gs_instance_free)> instance(raw, &gs_instance_free);

  nlohmann::json options{{"method", method}, {"timing", timing}, {"verify", !no_verify}};
  if (from) {
    options["from"] = *from;
  }
  if (to) {
    options["to"] = *to;
  }
  if (pins) {
    options["pins"] = *pins;
  }

  char* report = nullptr;
  if (gs_status s = gs_run(instance.get(), command.c_str(), options.dump().c_str(), &report); s != GS_OK) {
    return report_failure(s);
  }
  std::unique_ptr<char, decltype(&gs_string_free)> owned(report, &gs_string_free);

  if (out_path.empty()) {
    std::cout << owned.get() << '\n';
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << owned.get() << '\n';
    if (!out) {
      std::cerr << "goodsets: cannot write '" << out_path << "'\n";
      return GS_ERR_IO;
    }
  }
  return 0;
}
