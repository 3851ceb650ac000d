#include "frobkit/monomial.hpp"

namespace frobkit {

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace frobkit
