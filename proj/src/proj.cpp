#include "mhproj/proj.hpp"

#include <algorithm>

#include "mhproj/errors.hpp"

namespace mhproj {

ProjAtlas build_atlas(const RingSpec& ring, unsigned workers) {
  ProjAtlas atlas;
  for (const SupportSet& s : minimal_relevant_supports(ring, workers)) {
    Chart chart;
    chart.support = s;
    chart.degree_lattice = support_degree_lattice(ring, s);
    chart.prime_points = chart_prime_property(ring, s);
    atlas.charts.push_back(std::move(chart));
  }
  atlas.nonempty = !atlas.charts.empty();
  // each chart ring is the degree-zero part of a localized polynomial ring:
  // an intersection of a normal domain with a subgroup of the units' degrees,
  // hence normal; gluing normal charts gives a normal scheme
  atlas.normal = true;
  PrimePointCriterion prime = all_points_prime(ring);
  atlas.every_point_prime = prime.all_prime;
  atlas.non_prime_witness = prime.witness;
  return atlas;
}

Chart chart_intersection(const RingSpec& ring, const Chart& a, const Chart& b) {
  SupportSet merged = a.support;
  merged.insert(merged.end(), b.support.begin(), b.support.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  Chart chart;
  chart.support = merged;
  chart.degree_lattice = support_degree_lattice(ring, merged);
  chart.prime_points = chart_prime_property(ring, merged);
  return chart;
}

bool chart_prime_property(const RingSpec& ring, const SupportSet& s) {
  RelevanceReport report = is_relevant_support(ring, s);
  if (!report.relevant)
    throw analysis_error("support {" + [&] {
      std::string t;
      for (std::size_t i = 0; i < report.support.size(); ++i)
        t += (i ? ", " : "") + ring.names[report.support[i]];
      return t;
    }() + "} is not relevant; its chart is empty");
  return *report.index == 1;
}

namespace {

// lex-ordered size-k index subsets of {0..n-1}
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

PrimePointCriterion all_points_prime(const RingSpec& ring) {
  const std::size_t n = ring.nvars, r = ring.grading_rank;
  PrimePointCriterion out;
  out.all_prime = true;
  if (r > n) return out;  // no independent size-r subset exists
  std::vector<std::size_t> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = i;
  do {
    IntMatrix sub(r, r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i) sub(i, j) = ring.degrees(i, c[j]);
    Int det = determinant(sub);
    if (det == 0) continue;  // dependent subset: spans a proper subspace
    if (det != 1 && det != -1) {
      out.all_prime = false;
      out.witness = c;
      return out;
    }
  } while (next_combination(c, n));
  return out;
}

}  // namespace mhproj
