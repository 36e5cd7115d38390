#include "args.hpp"

#include <CLI11.hpp>

#include <memory>

namespace cli {

namespace {

const char* const kSubcommands[] = {"crystal", "polytope", "cone", "degenerate", "verify"};

// "1, 2" and "" are rejected; "+1" and "01" canonicalize to "1".
std::string canonicalList(const std::string& text, const char* what, bool allow_negative) {
  if (text.empty()) throw UsageError(std::string("empty ") + what);
  std::string out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t start = item.size() > 1 && item[0] == '-' && allow_negative ? 1 : 0;
    if (item.empty() || item.size() - start > 6 ||
        item.find_first_not_of("0123456789", start) != std::string::npos)
      throw UsageError(std::string("malformed ") + what + " '" + text + "'");
    if (!out.empty()) out += ',';
    out += std::to_string(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct ConfigDeleter {
  void operator()(sc_config* c) const { sc_config_free(c); }
};
using ConfigPtr = std::unique_ptr<sc_config, ConfigDeleter>;

void expect(sc_status status) {
  if (status != SC_OK) throw UsageError(sc_last_error());
}

}  // namespace

std::string RunConfig::canonical() const {
  std::string s = subcommand;
  if (!type.empty()) s += " --type " + type + " --rank " + std::to_string(rank);
  if (word) s += " --word " + *word;
  if (lambda) s += " --lambda " + *lambda;
  if (demazure) s += demazure->empty() ? " --demazure" : " --demazure " + *demazure;
  s += " --level-bound " + std::to_string(level_bound);
  s += " --cap " + std::to_string(node_cap);
  s += " --threads " + std::to_string(threads);
  if (!out.empty()) s += " --out " + out;
  if (timings) s += " --timings";
  return s;
}

RunConfig parseArgs(const std::vector<std::string>& args) {
  CLI::App app{"String cones, crystals and toric degeneration certificates", "stringcone"};
  app.require_subcommand(1, 1);
  RunConfig c;
  std::string word, lambda, demazure;
  for (const char* name : kSubcommands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--type", c.type, "root system type letter");
    sub->add_option("--rank", c.rank, "rank");
    sub->add_option("--word", word, "reduced word of w0, comma separated");
    sub->add_option("--lambda", lambda, "dominant weight, comma separated");
    sub->add_option("--demazure", demazure, "reduced word of a Weyl group element (bare flag: identity)")
        ->expected(0, 1);
    sub->add_option("--level-bound", c.level_bound, "hull level (default 2)");
    sub->add_option("--cap", c.node_cap, "crystal node cap");
    sub->add_option("--out", c.out, "output directory");
    sub->add_option("--threads", c.threads, "worker threads");
    sub->add_flag("--timings", c.timings, "include stage timings in the report");
  }

  std::vector<const char*> argv{"stringcone"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (const auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  for (const auto* sub : app.get_subcommands()) {
    if (sub->count("--word")) c.word = canonicalList(word, "word", false);
    if (sub->count("--lambda")) c.lambda = canonicalList(lambda, "lambda", true);
    if (sub->count("--demazure")) c.demazure = demazure.empty() ? "" : canonicalList(demazure, "demazure word", false);
  }

  const bool needs_type = c.subcommand != "verify";
  const bool needs_lambda = c.subcommand == "crystal" || c.subcommand == "polytope";
  if (needs_type && c.type.empty()) throw UsageError(c.subcommand + " requires --type and --rank");
  if (!c.type.empty() && c.rank == 0) throw UsageError("--type requires --rank");
  if (needs_lambda && !c.lambda) throw UsageError(c.subcommand + " requires --lambda");
  if (c.lambda && c.lambda->find('-') != std::string::npos)
    throw UsageError("lambda (" + *c.lambda + ") is not dominant");
  if (c.level_bound < 1 || c.level_bound > 8) throw UsageError("--level-bound must be in [1, 8]");
  if (c.threads < 1 || c.threads > 256) throw UsageError("--threads must be in [1, 256]");
  if (c.node_cap == 0) throw UsageError("--cap must be positive");

  // semantic validation through the library
  ConfigPtr probe(toConfig(c));
  expect(sc_config_validate(probe.get()));
  return c;
}

RunConfig parseArgs(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parseArgs(args);
}

sc_config* toConfig(const RunConfig& c) {
  ConfigPtr config(sc_config_new());
  if (!config) throw std::bad_alloc();
  if (!c.type.empty()) expect(sc_config_set_type(config.get(), c.type.c_str(), c.rank));
  if (c.word) expect(sc_config_set_word(config.get(), c.word->c_str()));
  if (c.lambda) expect(sc_config_set_lambda(config.get(), c.lambda->c_str()));
  if (c.demazure) expect(sc_config_set_demazure(config.get(), c.demazure->c_str()));
  expect(sc_config_set_level_bound(config.get(), c.level_bound));
  expect(sc_config_set_node_cap(config.get(), c.node_cap));
  expect(sc_config_set_threads(config.get(), c.threads));
  expect(sc_config_set_timings(config.get(), c.timings ? 1 : 0));
  return config.release();
}

int exitCode(sc_status status) {
  switch (status) {
    case SC_OK: return 0;
    case SC_INVALID_ARGUMENT: return 3;
    case SC_UNSUPPORTED: return 4;
    case SC_CAP_EXCEEDED: return 5;
    case SC_UNBOUNDED: return 6;
    case SC_CHECK_FAILED: return 7;
    case SC_INTERNAL: return 8;
  }
  return 8;
}

}  // namespace cli
