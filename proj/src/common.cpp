#include "stringcone/common.hpp"

namespace sc {

namespace {
template <class Vec>
std::string join(const Vec& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}
}  // namespace

std::string joinInts(const std::vector<int>& values, const char* sep) { return join(values, sep); }
std::string joinInts(const IntVec& values, const char* sep) { return join(values, sep); }

}  // namespace sc
