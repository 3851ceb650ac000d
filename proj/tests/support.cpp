#include "support.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>

#ifndef FROBKIT_CORPUS_DIR
#define FROBKIT_CORPUS_DIR "corpus"
#endif

namespace frobkit::testing {

std::shared_ptr<const GaloisField> prime_field(std::uint32_t p) {
  static std::map<std::uint32_t, std::shared_ptr<const GaloisField>> fields;
  auto& f = fields[p];
  if (!f) f = std::make_shared<const GaloisField>(FieldSpec::prime(p));
  return f;
}

std::string corpus_dir() { return FROBKIT_CORPUS_DIR; }

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir()))
    if (entry.path().extension() == ".ring") out.push_back(entry.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

RingSpecDocument load_corpus(const std::string& name) {
  std::ifstream in(std::filesystem::path(corpus_dir()) / name);
  if (!in) throw std::runtime_error("missing corpus file " + name);
  return parse_spec(std::string(std::istreambuf_iterator<char>(in), {}));
}

BuiltSpec<GaloisField> load_finite(const std::string& name) { return build_spec<GaloisField>(load_corpus(name)); }

BuiltSpec<GaloisField> spec_from(const std::string& text) { return build_spec<GaloisField>(parse_spec(text)); }

Monomial random_monomial(std::size_t nvars, unsigned max_exp, Rng& rng) {
  std::uniform_int_distribution<unsigned> d(0, max_exp);
  Monomial m;
  for (std::size_t i = 0; i < nvars; ++i) m.set(i, d(rng));
  return m;
}

namespace {

Monomial monomial_of_degree(std::size_t nvars, unsigned degree, Rng& rng) {
  Monomial m;
  std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
  for (unsigned k = 0; k < degree; ++k) {
    const std::size_t i = pick(rng);
    m.set(i, m[i] + 1);
  }
  return m;
}

}  // namespace

FPoly random_poly(const std::shared_ptr<const GaloisField>& field, std::size_t nvars, unsigned lo, unsigned hi,
                  unsigned terms, Rng& rng) {
  std::uniform_int_distribution<unsigned> deg(lo, hi);
  std::uniform_int_distribution<std::uint32_t> coeff(1, field->characteristic() - 1);
  std::vector<Term<GaloisField>> out;
  for (unsigned k = 0; k < terms; ++k) out.push_back({monomial_of_degree(nvars, deg(rng), rng), coeff(rng)});
  return FPoly::from_terms(field, std::move(out));
}

FPoly random_homogeneous(const std::shared_ptr<const GaloisField>& field, std::size_t nvars, unsigned degree,
                         unsigned terms, Rng& rng) {
  return random_poly(field, nvars, degree, degree, terms, rng);
}

std::uint64_t brute_force_staircase(const std::vector<Monomial>& gens, const std::vector<unsigned>& box) {
  const std::size_t n = box.size();
  std::vector<unsigned> e(n, 0);
  std::uint64_t count = 0;
  for (;;) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) m.set(i, e[i]);
    bool standard = true;
    for (const auto& g : gens)
      if (g.divides(m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    std::size_t i = 0;
    while (i < n && ++e[i] == box[i]) e[i++] = 0;
    if (i == n) break;
  }
  return count;
}

std::uint32_t evaluate(const FPoly& f, const std::vector<std::uint32_t>& point) {
  const std::uint64_t p = f.domain().characteristic();
  std::uint64_t total = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned k = 0; k < t.mono[i]; ++k) v = v * point[i] % p;
    total = (total + v) % p;
  }
  return static_cast<std::uint32_t>(total);
}

namespace {

struct BoxIndex {
  std::vector<unsigned> box;
  std::size_t size = 1;
  explicit BoxIndex(std::vector<unsigned> b) : box(std::move(b)) {
    for (unsigned s : box) size *= s;
  }
  /// Position of m, or -1 when m lies outside the box.
  long index(const Monomial& m) const {
    long idx = 0;
    for (std::size_t i = box.size(); i-- > 0;) {
      if (m[i] >= box[i]) return -1;
      idx = idx * static_cast<long>(box[i]) + m[i];
    }
    return idx;
  }
  Monomial at(std::size_t idx) const {
    Monomial m;
    for (std::size_t i = 0; i < box.size(); ++i) {
      m.set(i, static_cast<unsigned>(idx % box[i]));
      idx /= box[i];
    }
    return m;
  }
};

std::uint64_t rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::size_t cols, std::uint32_t p) {
  std::uint64_t rank = 0;
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t iv = inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(v * iv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (p - f) * rows[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::uint64_t box_span_rank(const std::vector<FPoly>& gens, const std::vector<unsigned>& box, std::uint32_t p) {
  const BoxIndex index(box);
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& g : gens) {
    for (std::size_t u = 0; u < index.size; ++u) {
      const Monomial mu = index.at(u);
      std::vector<std::uint32_t> row(index.size, 0);
      bool nonzero = false;
      for (const auto& t : g.terms()) {
        const long idx = index.index(mu * t.mono);
        if (idx < 0) continue;
        row[static_cast<std::size_t>(idx)] = (row[static_cast<std::size_t>(idx)] + t.coeff) % p;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return rank_mod_p(rows, index.size, p);
}

std::uint64_t box_colength(const std::vector<FPoly>& gens, const std::vector<unsigned>& box, std::uint32_t p) {
  return BoxIndex(box).size - box_span_rank(gens, box, p);
}

}  // namespace frobkit::testing
