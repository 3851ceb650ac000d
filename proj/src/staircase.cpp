#include "frobkit/staircase.hpp"

#include <algorithm>

#include <omp.h>

namespace frobkit {

namespace {

bool grevlex_less(const Monomial& a, const Monomial& b) {
  return MonomialOrder::grevlex().compare(a, b) < 0;
}

/// Exponent of the pure power of x_v among gens, or 0 if none.
unsigned pure_power(std::span<const Monomial> gens, std::size_t v) {
  unsigned best = 0;
  for (const auto& g : gens)
    if (g.degree() == g[v] && g[v] > 0 && (best == 0 || g[v] < best)) best = g[v];
  return best;
}

bool has_unit(std::span<const Monomial> gens) {
  return std::any_of(gens.begin(), gens.end(), [](const Monomial& g) { return g.is_one(); });
}

/// Two-variable staircase; gens need not be minimal.
BigInt count_two(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  // Keep the lower envelope: strictly decreasing x1 exponents.
  std::vector<std::pair<unsigned, unsigned>> env;
  for (const auto& g : gens) {
    if (!env.empty() && g[1] >= env.back().second) continue;
    if (!env.empty() && env.back().first == g[0]) continue;
    env.emplace_back(g[0], g[1]);
  }
  BigInt total = 0;
  for (std::size_t i = 0; i + 1 < env.size(); ++i)
    total += BigInt(env[i + 1].first - env[i].first) * env[i].second;
  return total;
}

BigInt sweep(const std::vector<Monomial>& gens, std::size_t n);

struct Slice {
  unsigned width;
  std::vector<Monomial> gens;  // projected to variables < v
};

/// Partition the exponent range of the last variable into intervals on which
/// the projected slice ideal is constant.
std::vector<Slice> make_slices(const std::vector<Monomial>& gens, std::size_t n) {
  const std::size_t v = n - 1;
  const unsigned top = pure_power(gens, v);
  std::vector<unsigned> breaks{0};
  for (const auto& g : gens)
    if (g[v] < top) breaks.push_back(g[v]);
  breaks.push_back(top);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<Slice> slices;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    Slice s;
    s.width = breaks[k + 1] - breaks[k];
    for (const auto& g : gens) {
      if (g[v] > breaks[k]) continue;
      Monomial proj = g;
      proj.set(v, 0);
      s.gens.push_back(proj);
    }
    slices.push_back(std::move(s));
  }
  return slices;
}

BigInt sweep(const std::vector<Monomial>& gens, std::size_t n) {
  if (has_unit(gens)) return 0;
  if (n == 0) return 1;
  if (n == 1) return pure_power(gens, 0);
  if (n == 2) return count_two(gens);
  BigInt total = 0;
  for (auto& s : make_slices(gens, n)) {
    std::vector<Monomial> reduced = n - 1 > 2 ? minimalize(s.gens) : std::move(s.gens);
    total += BigInt(s.width) * sweep(reduced, n - 1);
  }
  return total;
}

bool finite_staircase(std::span<const Monomial> gens, std::size_t nvars) {
  if (has_unit(gens)) return true;
  for (std::size_t v = 0; v < nvars; ++v)
    if (pure_power(gens, v) == 0) return false;
  return true;
}

void check_support(std::span<const Monomial> gens, std::size_t nvars) {
  for (const auto& g : gens)
    for (std::size_t i = nvars; i < kMaxVars; ++i)
      if (g[i] != 0) throw std::invalid_argument("monomial outside the declared variables");
}

}  // namespace

std::vector<Monomial> minimalize(std::span<const Monomial> gens) {
  std::vector<Monomial> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end(), grevlex_less);
  std::vector<Monomial> kept;
  for (const auto& g : sorted) {
    const std::uint32_t mask = g.divmask();
    bool redundant = false;
    for (const auto& h : kept) {
      if ((h.divmask() & ~mask) == 0 && h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

unsigned monomial_ideal_dimension(std::span<const Monomial> gens, std::size_t nvars) {
  if (has_unit(gens)) return 0;  // unit ideal; callers treat this separately
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (g[i]) s |= 1u << i;
    supports.push_back(s);
  }
  unsigned best = 0;
  for (std::uint32_t set = 0; set < (1u << nvars); ++set) {
    const auto size = static_cast<unsigned>(__builtin_popcount(set));
    if (size <= best) continue;
    const bool independent =
        std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

StaircaseCount count_standard_monomials_serial(std::span<const Monomial> gens, std::size_t nvars) {
  check_support(gens, nvars);
  if (!finite_staircase(gens, nvars)) return {false, 0};
  return {true, sweep(minimalize(gens), nvars)};
}

StaircaseCount count_standard_monomials_parallel(std::span<const Monomial> gens, std::size_t nvars) {
  check_support(gens, nvars);
  if (!finite_staircase(gens, nvars)) return {false, 0};
  std::vector<Monomial> mins = minimalize(gens);
  if (has_unit(mins)) return {true, 0};
  if (nvars <= 2) return {true, sweep(mins, nvars)};

  std::vector<Slice> slices = make_slices(mins, nvars);
  std::vector<BigInt> partial(slices.size());
  const auto count = static_cast<long>(slices.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    auto& s = slices[static_cast<std::size_t>(k)];
    std::vector<Monomial> reduced = nvars - 1 > 2 ? minimalize(s.gens) : std::move(s.gens);
    partial[static_cast<std::size_t>(k)] = BigInt(s.width) * sweep(reduced, nvars - 1);
  }
  BigInt total = 0;
  for (const auto& x : partial) total += x;
  return {true, total};
}

StaircaseCount count_standard_monomials_inclusion_exclusion(std::span<const Monomial> gens,
                                                            std::size_t nvars) {
  check_support(gens, nvars);
  if (!finite_staircase(gens, nvars)) return {false, 0};
  std::vector<Monomial> mins = minimalize(gens);
  if (has_unit(mins)) return {true, 0};
  if (mins.size() > 20) throw std::invalid_argument("inclusion-exclusion limited to 20 generators");

  std::vector<unsigned> box(nvars);
  for (std::size_t v = 0; v < nvars; ++v) box[v] = pure_power(mins, v);

  // Depth-first over subsets; a subset whose lcm leaves the box contributes
  // nothing and neither do its supersets.
  BigInt total = 0;
  auto visit = [&](auto&& self, std::size_t next, const Monomial& l, int sign) -> void {
    BigInt inside = 1;
    for (std::size_t v = 0; v < nvars; ++v) inside *= box[v] - l[v];
    if (sign > 0) total += inside;
    else total -= inside;
    for (std::size_t i = next; i < mins.size(); ++i) {
      Monomial m = lcm(l, mins[i]);
      bool in_box = true;
      for (std::size_t v = 0; v < nvars; ++v)
        if (m[v] >= box[v]) {
          in_box = false;
          break;
        }
      if (in_box) self(self, i + 1, m, -sign);
    }
  };
  visit(visit, 0, Monomial{}, 1);
  return {true, total};
}

StaircaseCount count_standard_monomials(std::span<const Monomial> gens, std::size_t nvars) {
  check_support(gens, nvars);
  if (!finite_staircase(gens, nvars)) return {false, 0};
  std::vector<Monomial> mins = minimalize(gens);
  if (mins.size() <= 20) return count_standard_monomials_inclusion_exclusion(mins, nvars);
  return count_standard_monomials_parallel(mins, nvars);
}

}  // namespace frobkit
