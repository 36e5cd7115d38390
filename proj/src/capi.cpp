#include "stringcone/stringcone.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <set>
#include <string>

#include "stringcone/acceptance.hpp"
#include "stringcone/degeneration.hpp"

struct sc_config {
  char type = 0;
  int rank = 0;
  std::optional<sc::WeylWord> word;
  std::optional<sc::Weight> lambda;
  std::optional<sc::WeylWord> demazure;
  int level_bound = 2;
  std::size_t node_cap = sc::kDefaultNodeCap;
  int threads = 1;
  bool timings = false;
};

namespace {

thread_local std::string g_last_error;

sc_status fromCode(sc::ErrorCode code) {
  switch (code) {
    case sc::ErrorCode::InvalidArgument: return SC_INVALID_ARGUMENT;
    case sc::ErrorCode::Unsupported: return SC_UNSUPPORTED;
    case sc::ErrorCode::CapExceeded: return SC_CAP_EXCEEDED;
    case sc::ErrorCode::Unbounded: return SC_UNBOUNDED;
    case sc::ErrorCode::Internal: return SC_INTERNAL;
  }
  return SC_INTERNAL;
}

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
sc_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const sc::Error& e) {
    g_last_error = e.what();
    return fromCode(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "[internal] out of memory";
    return SC_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = std::string("[internal] ") + e.what();
    return SC_INTERNAL;
  }
}

sc_status fail(sc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

sc::CartanDatum datumOf(const sc_config* c) {
  if (!c->type) sc::reject("config", "type and rank are required");
  return sc::buildCartan(c->type, c->rank);
}

sc::WeylWord wordOf(const sc_config* c, const sc::CartanDatum& d) {
  if (c->word) {
    sc::checkLongestWord(d, *c->word);
    return *c->word;
  }
  return sc::longestWord(d);
}

sc::Weight lambdaOf(const sc_config* c, const sc::CartanDatum& d) {
  if (!c->lambda) sc::reject("config", "lambda is required");
  d.checkWeight(*c->lambda);
  if (!c->lambda->dominant()) sc::reject("config", "lambda (" + sc::joinInts(c->lambda->coords) + ") is not dominant");
  return *c->lambda;
}

sc::CertificateOptions optionsOf(const sc_config* c) {
  sc::CertificateOptions o;
  o.level_bound = c->level_bound;
  o.max_level = std::max(o.max_level, c->level_bound + 2);
  o.node_cap = c->node_cap;
  o.threads = c->threads;
  return o;
}

std::vector<int> parseInts(const char* text, const char* what) {
  if (!text) sc::reject("config", std::string(what) + " is null");
  std::vector<int> out;
  std::string s(text);
  if (s.empty()) sc::reject("config", std::string(what) + " is empty");
  std::size_t pos = 0;
  while (true) {
    const auto comma = s.find(',', pos);
    const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || item.find_first_not_of("-0123456789") != std::string::npos)
      sc::reject("config", std::string("malformed ") + what + ": '" + s + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

sc_config* sc_config_new(void) {
  try {
    return new sc_config();
  } catch (...) {
    return nullptr;
  }
}

void sc_config_free(sc_config* config) { delete config; }

sc_status sc_config_set_type(sc_config* config, const char* type, int rank) {
  return guarded([&] {
    if (!config || !type || std::strlen(type) != 1) return fail(SC_INVALID_ARGUMENT, "[config] bad type");
    sc::buildCartan(type[0], rank);  // validates the pair
    config->type = type[0];
    config->rank = rank;
    return SC_OK;
  });
}

sc_status sc_config_set_word(sc_config* config, const char* word) {
  return guarded([&] {
    if (!config || !word) return fail(SC_INVALID_ARGUMENT, "[config] null word");
    config->word = sc::parseWord(word);
    return SC_OK;
  });
}

sc_status sc_config_set_lambda(sc_config* config, const char* lambda) {
  return guarded([&] {
    if (!config) return fail(SC_INVALID_ARGUMENT, "[config] null config");
    sc::Weight w{parseInts(lambda, "lambda")};
    if (!w.dominant()) sc::reject("config", "lambda (" + sc::joinInts(w.coords) + ") is not dominant");
    config->lambda = std::move(w);
    return SC_OK;
  });
}

sc_status sc_config_set_demazure(sc_config* config, const char* word) {
  return guarded([&] {
    if (!config || !word) return fail(SC_INVALID_ARGUMENT, "[config] null word");
    config->demazure = std::string(word).empty() ? sc::WeylWord{} : sc::parseWord(word);
    return SC_OK;
  });
}

sc_status sc_config_set_level_bound(sc_config* config, int level_bound) {
  if (!config || level_bound < 1 || level_bound > 8)
    return fail(SC_INVALID_ARGUMENT, "[config] level bound must be in [1, 8]");
  config->level_bound = level_bound;
  return SC_OK;
}

sc_status sc_config_set_node_cap(sc_config* config, size_t cap) {
  if (!config || cap == 0) return fail(SC_INVALID_ARGUMENT, "[config] node cap must be positive");
  config->node_cap = cap;
  return SC_OK;
}

sc_status sc_config_set_threads(sc_config* config, int threads) {
  if (!config || threads < 1 || threads > 256)
    return fail(SC_INVALID_ARGUMENT, "[config] threads must be in [1, 256]");
  config->threads = threads;
  return SC_OK;
}

sc_status sc_config_set_timings(sc_config* config, int enabled) {
  if (!config) return fail(SC_INVALID_ARGUMENT, "[config] null config");
  config->timings = enabled != 0;
  return SC_OK;
}

sc_status sc_config_validate(const sc_config* config) {
  return guarded([&] {
    if (!config) return fail(SC_INVALID_ARGUMENT, "[config] null config");
    if (!config->type) return SC_OK;
    const auto d = datumOf(config);
    wordOf(config, d);
    if (config->lambda) lambdaOf(config, d);
    if (config->demazure) {
      d.checkWord(*config->demazure);
      if (!sc::isReducedWord(d, *config->demazure))
        sc::reject("config", "demazure word (" + sc::formatWord(*config->demazure) + ") is not reduced");
    }
    return SC_OK;
  });
}

sc_status sc_run_crystal(const sc_config* config, char** dump) {
  return guarded([&] {
    if (!config || !dump) return fail(SC_INVALID_ARGUMENT, "[config] null argument");
    const auto d = datumOf(config);
    const auto g = sc::enumerateCrystal(d, lambdaOf(config, d), config->node_cap);
    *dump = copy(g.dump());
    return SC_OK;
  });
}

sc_status sc_run_polytope(const sc_config* config, char** hrep, char** points) {
  return guarded([&] {
    if (!config || !hrep || !points) return fail(SC_INVALID_ARGUMENT, "[config] null argument");
    const auto d = datumOf(config);
    const auto word = wordOf(config, d);
    const auto lambda = lambdaOf(config, d);
    const auto inferred = sc::inferCone(d, word, optionsOf(config));
    const auto& cone = inferred.cone;
    const std::size_t n = static_cast<std::size_t>(d.rank());
    const std::size_t N = word.length();

    std::set<sc::IntVec> rows;
    for (const auto& u : cone.facets) {
      sc::IntVec row{0};
      for (std::size_t k = 0; k < n; ++k) row[0] += u[k] * lambda.coords[k];
      row.insert(row.end(), u.begin() + static_cast<std::ptrdiff_t>(n), u.end());
      if (std::all_of(row.begin(), row.end(), [](sc::Int x) { return x == 0; })) continue;
      rows.insert(sc::exact::primitive(row));
    }
    const auto pts = sc::latticePointsInSection(cone, lambda.coords);
    const auto image = sc::stringImage(d, lambda, word, config->node_cap);
    std::vector<sc::IntVec> expected;
    for (const auto& s : image) expected.emplace_back(s.entries.begin(), s.entries.end());

    *hrep = copy(sc::formatVectors(static_cast<int>(N + 1), {rows.begin(), rows.end()}));
    *points = copy(sc::formatVectors(static_cast<int>(N), pts));
    if (pts != expected)
      return fail(SC_CHECK_FAILED, "[polytope] lattice points differ from the string image at lambda (" +
                                       sc::joinInts(lambda.coords) + ")");
    if (!inferred.certified_level)
      return fail(SC_CHECK_FAILED, "[polytope] cone saturation not certified");
    return SC_OK;
  });
}

sc_status sc_run_cone(const sc_config* config, char** hrep, char** rays, char** json) {
  return guarded([&] {
    if (!config || !hrep || !rays || !json) return fail(SC_INVALID_ARGUMENT, "[config] null argument");
    const auto d = datumOf(config);
    const auto word = wordOf(config, d);
    auto inferred = sc::inferCone(d, word, optionsOf(config));
    sc::DegenerationReport summary;
    summary.type = std::string(1, d.type());
    summary.rank = d.rank();
    summary.word = word;
    summary.cone = inferred.cone;
    summary.hull_level = inferred.hull_level;
    summary.certified_level = inferred.certified_level;
    *hrep = copy(sc::formatVectors(inferred.cone.ambient_dim, inferred.cone.facets));
    *rays = copy(sc::formatVectors(inferred.cone.ambient_dim, inferred.cone.rays));
    *json = copy(sc::coneToJson(summary));
    if (!inferred.certified_level) return fail(SC_CHECK_FAILED, "[saturation] cone saturation not certified");
    return SC_OK;
  });
}

sc_status sc_run_degenerate(const sc_config* config, char** json, int* passing) {
  return guarded([&] {
    if (!config || !json) return fail(SC_INVALID_ARGUMENT, "[config] null argument");
    const auto d = datumOf(config);
    const auto word = wordOf(config, d);
    const auto report = sc::degenerationCertificate(d, word, config->demazure, optionsOf(config));
    *json = copy(sc::reportToJson(report, config->timings));
    const bool ok = report.passing();
    if (passing) *passing = ok ? 1 : 0;
    if (!ok) {
      std::string failed;
      for (const auto& [name, value] : report.checks)
        if (!value) failed += (failed.empty() ? "" : ", ") + name;
      return fail(SC_CHECK_FAILED, "[degenerate] failed checks: " + failed);
    }
    return SC_OK;
  });
}

sc_status sc_run_verify(const sc_config* config, char** report, int* all_passed) {
  return guarded([&] {
    if (!config || !report) return fail(SC_INVALID_ARGUMENT, "[config] null argument");
    sc::acceptance::Options options;
    options.threads = config->threads;
    const auto results = sc::acceptance::runAll(options);
    *report = copy(sc::acceptance::formatReport(results));
    bool ok = true;
    for (const auto& r : results) ok &= r.passed;
    if (all_passed) *all_passed = ok ? 1 : 0;
    if (!ok) return fail(SC_CHECK_FAILED, "[verify] acceptance criteria failed");
    return SC_OK;
  });
}

const char* sc_last_error(void) { return g_last_error.c_str(); }

void sc_string_free(char* s) { std::free(s); }

const char* sc_version(void) { return "1.0.0"; }

}  // extern "C"
