#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace sc {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

enum class ErrorCode {
  InvalidArgument = 1,
  Unsupported = 2,
  CapExceeded = 3,
  Unbounded = 4,
  Internal = 5,
};

// Every rejection raised by the library. `stage` names the pipeline step
// ("cartan", "crystal", "hull", ...) so the CLI can report where it failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string stage, const std::string& message)
      : std::runtime_error("[" + stage + "] " + message),
        code_(code),
        stage_(std::move(stage)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& stage() const noexcept { return stage_; }

 private:
  ErrorCode code_;
  std::string stage_;
};

[[noreturn]] inline void reject(const std::string& stage, const std::string& message,
                                ErrorCode code = ErrorCode::InvalidArgument) {
  throw Error(code, stage, message);
}

std::string joinInts(const std::vector<int>& values, const char* sep = ",");
std::string joinInts(const IntVec& values, const char* sep = ",");

// Runs body(i) for i in [0, count) on up to `threads` workers. Callers write
// results into pre-sized slots indexed by i, so output never depends on the
// schedule. The first exception thrown by any task is rethrown.
template <class Body>
void parallelFor(std::size_t count, int threads, Body&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace sc
