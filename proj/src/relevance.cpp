#include "mhproj/relevance.hpp"

#include <algorithm>
#include <thread>

#include "mhproj/errors.hpp"

namespace mhproj {

SupportSet support_from_mask(unsigned long mask, std::size_t nvars) {
  SupportSet s;
  for (std::size_t i = 0; i < nvars; ++i)
    if (mask & (1ul << i)) s.push_back(i);
  return s;
}

unsigned long mask_from_support(const SupportSet& s) {
  unsigned long mask = 0;
  for (std::size_t i : s) mask |= 1ul << i;
  return mask;
}

Sublattice support_degree_lattice(const RingSpec& ring, const SupportSet& s) {
  std::vector<Ivec> gens;
  gens.reserve(s.size());
  for (std::size_t i : s) {
    if (i >= ring.nvars) throw input_error("support index out of range");
    gens.push_back(ring.degree_column(i));
  }
  return sublattice_from_generators(ring.grading_rank, gens);
}

RelevanceReport is_relevant_support(const RingSpec& ring, const SupportSet& s) {
  SupportSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  RelevanceReport report;
  report.support = std::move(sorted);
  report.degree_lattice = support_degree_lattice(ring, report.support);
  report.index = lattice_index(report.degree_lattice);
  report.relevant = report.index.has_value();
  return report;
}

namespace {

std::vector<char> relevant_mask_table(const RingSpec& ring, unsigned workers) {
  const std::size_t n = ring.nvars;
  if (n > 24) throw input_error("support scans are limited to 24 variables");
  const unsigned long total = (1ul << n);
  std::vector<char> relevant(total, 0);
  if (workers == 0) workers = 1;
  auto scan = [&](unsigned long begin, unsigned long end) {
    for (unsigned long mask = begin; mask < end; ++mask) {
      if (mask == 0) continue;
      Sublattice l = support_degree_lattice(ring, support_from_mask(mask, n));
      relevant[mask] = l.rank() == ring.grading_rank ? 1 : 0;
    }
  };
  if (workers == 1 || total < 64) {
    scan(0, total);
  } else {
    std::vector<std::thread> pool;
    unsigned long chunk = total / workers + 1;
    for (unsigned w = 0; w < workers; ++w) {
      unsigned long begin = w * chunk;
      unsigned long end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(scan, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }
  return relevant;
}

}  // namespace

std::vector<SupportSet> minimal_relevant_supports(const RingSpec& ring, unsigned workers) {
  const std::size_t n = ring.nvars;
  std::vector<char> relevant = relevant_mask_table(ring, workers);
  // in mask order, keep a support iff no kept support is contained in it
  std::vector<unsigned long> kept;
  std::vector<unsigned long> by_size;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask)
    if (relevant[mask]) by_size.push_back(mask);
  std::stable_sort(by_size.begin(), by_size.end(), [](unsigned long a, unsigned long b) {
    return __builtin_popcountl(a) < __builtin_popcountl(b);
  });
  for (unsigned long mask : by_size) {
    bool minimal = true;
    for (unsigned long k : kept)
      if ((k & mask) == k) {
        minimal = false;
        break;
      }
    if (minimal) kept.push_back(mask);
  }
  std::vector<SupportSet> out;
  out.reserve(kept.size());
  for (unsigned long mask : kept) out.push_back(support_from_mask(mask, n));
  std::sort(out.begin(), out.end());
  return out;
}

bool has_relevant_element(const RingSpec& ring, unsigned workers) {
  // the full support has the largest degree lattice; relevance anywhere
  // implies relevance there
  (void)workers;
  SupportSet all;
  for (std::size_t i = 0; i < ring.nvars; ++i) all.push_back(i);
  return is_relevant_support(ring, all).relevant;
}

}  // namespace mhproj
