#include "mhproj/sheaves.hpp"

#include <algorithm>

#include "mhproj/errors.hpp"

namespace mhproj {

namespace {

LaurentBasis sections_with_inverted(const RingSpec& ring, const SupportSet& inverted,
                                    const Ivec& d, long box) {
  std::vector<bool> negative_allowed(ring.nvars, false);
  for (std::size_t i : inverted) negative_allowed[i] = true;
  FiberBasis fiber = enumerate_degree_fiber(ring.degrees, d, negative_allowed, box);
  LaurentBasis out;
  out.twist = d;
  out.monomials = std::move(fiber.exponents);
  out.complete = fiber.complete;
  return out;
}

}  // namespace

LaurentBasis chart_sections(const RingSpec& ring, const ProjAtlas& atlas, const SupportSet& s,
                            const Ivec& d, long box) {
  bool found = false;
  for (const Chart& chart : atlas.charts)
    if (chart.support == s) {
      found = true;
      break;
    }
  if (!found) throw analysis_error("the requested support is not a chart of the atlas");
  return sections_with_inverted(ring, s, d, box);
}

SupportSet core_support(const ProjAtlas& atlas) {
  if (!atlas.nonempty) throw analysis_error("the scheme is empty: no charts, no sections");
  SupportSet core = atlas.charts.front().support;
  for (const Chart& chart : atlas.charts) {
    SupportSet meet;
    std::set_intersection(core.begin(), core.end(), chart.support.begin(), chart.support.end(),
                          std::back_inserter(meet));
    core = std::move(meet);
  }
  return core;
}

LaurentBasis global_sections(const RingSpec& ring, const ProjAtlas& atlas, const Ivec& d,
                             long box) {
  // a monomial is a section on every chart iff its negative exponents sit
  // inside every chart's inverted set, i.e. inside the core
  return sections_with_inverted(ring, core_support(atlas), d, box);
}

bool global_sections_hypothesis(const RingSpec& ring) {
  const std::size_t n = ring.nvars;
  for (std::size_t omit = 0; omit < n; ++omit) {
    SupportSet rest;
    for (std::size_t i = 0; i < n; ++i)
      if (i != omit) rest.push_back(i);
    if (support_degree_lattice(ring, rest).rank() != ring.grading_rank) return false;
  }
  return true;
}

Sublattice twist_degree_lattice(const RingSpec&, const ProjAtlas& atlas) {
  if (!atlas.nonempty)
    throw analysis_error("the scheme is empty: there is no twist lattice to report");
  Sublattice acc = atlas.charts.front().degree_lattice;
  for (std::size_t i = 1; i < atlas.charts.size(); ++i)
    acc = lattice_intersection(acc, atlas.charts[i].degree_lattice);
  return acc;
}

bool is_line_bundle(const RingSpec& ring, const ProjAtlas& atlas, const Ivec& d) {
  if (d.size() != ring.grading_rank) throw input_error("twist vector has wrong length");
  return lattice_contains(twist_degree_lattice(ring, atlas), d);
}

std::optional<Ivec> local_triviality_witness(const RingSpec& ring, const SupportSet& s,
                                             const Ivec& d) {
  if (d.size() != ring.grading_rank) throw input_error("twist vector has wrong length");
  // solve degrees_S x = d over the integers via the Smith form
  std::vector<Ivec> cols;
  cols.reserve(s.size());
  for (std::size_t i : s) cols.push_back(ring.degree_column(i));
  IntMatrix m = IntMatrix::from_columns(ring.grading_rank, cols);
  SmithForm snf = smith_normal_form(m);
  Ivec rhs = mul(snf.u, d);
  const std::size_t k = std::min(m.rows, m.cols);
  Ivec y(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i < k && snf.s(i, i) != 0) {
      if (rhs[i] % snf.s(i, i) != 0) return std::nullopt;
      y[i] = rhs[i] / snf.s(i, i);
    } else if (rhs[i] != 0) {
      return std::nullopt;
    }
  }
  Ivec x = mul(snf.v, y);
  Ivec exponents(ring.nvars);
  for (std::size_t j = 0; j < s.size(); ++j) exponents[s[j]] = x[j];
  return exponents;
}

std::string laurent_string(const RingSpec& ring, const Ivec& exponents) {
  if (exponents.size() != ring.nvars) throw internal_error("laurent_string: length mismatch");
  std::string out;
  auto append = [&](std::size_t i) {
    if (!out.empty()) out += "*";
    out += ring.names[i];
    if (exponents[i] != 1) out += "^" + exponents[i].get_str();
  };
  for (std::size_t i = 0; i < ring.nvars; ++i)
    if (exponents[i] > 0) append(i);
  for (std::size_t i = 0; i < ring.nvars; ++i)
    if (exponents[i] < 0) append(i);
  return out.empty() ? "1" : out;
}

}  // namespace mhproj
