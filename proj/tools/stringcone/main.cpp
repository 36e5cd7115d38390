#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "args.hpp"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { sc_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using Artifacts = std::vector<std::pair<std::string, std::string>>;

bool emit(const std::string& out_dir, const Artifacts& files) {
  if (out_dir.empty()) {
    for (const auto& [name, text] : files) {
      if (files.size() > 1) std::cout << "== " << name << " ==\n";
      std::cout << text;
    }
    std::cout.flush();
    return static_cast<bool>(std::cout);
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "stringcone: [output] cannot create " << out_dir << ": " << ec.message() << "\n";
    return false;
  }
  for (const auto& [name, text] : files) {
    const auto path = std::filesystem::path(out_dir) / name;
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
      std::cerr << "stringcone: [output] cannot write " << path.string() << "\n";
      return false;
    }
  }
  return true;
}

int run(const cli::RunConfig& rc) {
  std::unique_ptr<sc_config, void (*)(sc_config*)> config(cli::toConfig(rc), sc_config_free);
  Artifacts files;
  sc_status status = SC_OK;
  if (rc.subcommand == "crystal") {
    Owned dump;
    status = sc_run_crystal(config.get(), &dump.p);
    if (dump.p) files.emplace_back("crystal.txt", dump.str());
  } else if (rc.subcommand == "polytope") {
    Owned hrep, points;
    status = sc_run_polytope(config.get(), &hrep.p, &points.p);
    if (hrep.p) files.emplace_back("polytope.hrep", hrep.str());
    if (points.p) files.emplace_back("polytope_points.txt", points.str());
  } else if (rc.subcommand == "cone") {
    Owned hrep, rays, json;
    status = sc_run_cone(config.get(), &hrep.p, &rays.p, &json.p);
    if (hrep.p) files.emplace_back("cone.hrep", hrep.str());
    if (rays.p) files.emplace_back("cone.rays", rays.str());
    if (json.p) files.emplace_back("cone.json", json.str());
  } else if (rc.subcommand == "degenerate") {
    Owned json;
    int passing = 0;
    status = sc_run_degenerate(config.get(), &json.p, &passing);
    if (json.p) files.emplace_back("report.json", json.str());
  } else {
    Owned report;
    int all_passed = 0;
    status = sc_run_verify(config.get(), &report.p, &all_passed);
    if (report.p) files.emplace_back("verify_report.txt", report.str());
  }
  // the diagnostic has to be read before anything else touches the library
  const std::string diagnostic = status == SC_OK ? "" : sc_last_error();
  const bool written = emit(rc.out, files);
  if (status != SC_OK) {
    std::cerr << "stringcone: " << diagnostic << "\n";
    return cli::exitCode(status);
  }
  return written ? 0 : cli::exitCode(SC_INTERNAL);
}

}  // namespace

int main(int argc, char** argv) {
  cli::RunConfig rc;
  try {
    rc = cli::parseArgs(argc, argv);
  } catch (const cli::HelpRequested& e) {
    std::cout << e.what();
    return 0;
  } catch (const cli::UsageError& e) {
    std::cerr << "stringcone: [usage] " << e.what() << "\n"
              << "usage: stringcone {crystal|polytope|cone|degenerate|verify} --type T --rank n "
                 "[--word w] [--lambda l] [--demazure v] [--level-bound k] [--cap c] [--out dir] "
                 "[--threads t] [--timings]\n";
    return 2;
  }
  try {
    return run(rc);
  } catch (const cli::UsageError& e) {
    std::cerr << "stringcone: [usage] " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "stringcone: [internal] " << e.what() << "\n";
    return cli::exitCode(SC_INTERNAL);
  }
}
