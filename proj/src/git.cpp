#include "mhproj/git.hpp"

#include <algorithm>
#include <map>

#include "mhproj/errors.hpp"
#include "mhproj/ring.hpp"

namespace mhproj {

OrbitConeTable orbit_cones(const RingSpec& ring) {
  const std::size_t n = ring.nvars, r = ring.grading_rank;
  if (n > 24) throw input_error("support scans are limited to 24 variables");
  OrbitConeTable table;
  // a support's cone depends only on the set of distinct primitive degree
  // directions it touches; memoize on that
  std::map<std::vector<Ivec>, RationalCone> by_directions;
  std::vector<Ivec> primitive_cols(n);
  for (std::size_t i = 0; i < n; ++i) primitive_cols[i] = primitive(ring.degree_column(i));
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    SupportSet s = support_from_mask(mask, n);
    std::vector<Ivec> dirs;
    dirs.reserve(s.size());
    for (std::size_t i : s) dirs.push_back(primitive_cols[i]);
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    auto it = by_directions.find(dirs);
    if (it == by_directions.end()) {
      // dropping the lowest variable leaves a support whose cone is already
      // built; if the dropped direction lies inside it, the hull is unchanged
      const RationalCone* same = nullptr;
      if (s.size() > 1) {
        const RationalCone& sub = table.entries.at(SupportSet(s.begin() + 1, s.end()));
        if (contains(sub, primitive_cols[s.front()])) same = &sub;
      }
      RationalCone cone;
      if (same) {
        cone = *same;
      } else {
        std::vector<Ivec> gens;
        gens.reserve(s.size());
        for (std::size_t i : s) gens.push_back(ring.degree_column(i));
        cone = cone_from_generators(r, gens);
      }
      it = by_directions.emplace(std::move(dirs), std::move(cone)).first;
    }
    table.entries.emplace(std::move(s), it->second);
  }
  for (const auto& [dirs, cone] : by_directions) table.distinct.push_back(cone);
  std::sort(table.distinct.begin(), table.distinct.end(), cone_less);
  table.distinct.erase(
      std::unique(table.distinct.begin(), table.distinct.end()),
      table.distinct.end());
  return table;
}

RationalCone git_cone(const RingSpec& ring, const OrbitConeTable& table, const Ivec& m) {
  if (m.size() != ring.grading_rank) throw input_error("weight vector has wrong length");
  std::vector<const RationalCone*> containing;
  for (const RationalCone& c : table.distinct)
    if (contains(c, m)) containing.push_back(&c);
  if (containing.empty() || !contains(weight_cone(ring), m))
    throw analysis_error("weight " + to_string(m) + " lies outside the weight cone");
  return intersect_many(ring.grading_rank, containing);
}

RationalCone git_cone(const RingSpec& ring, const Ivec& m) {
  return git_cone(ring, orbit_cones(ring), m);
}

GITFan git_fan(const RingSpec& ring, const OrbitConeTable& table) {
  const std::size_t r = ring.grading_rank;

  // close the orbit cones under pairwise intersection: every chamber's
  // closure appears in this collection
  std::vector<RationalCone> candidates = table.distinct;
  auto known = [&](const RationalCone& c) {
    return std::find(candidates.begin(), candidates.end(), c) != candidates.end();
  };
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      RationalCone meet = intersect(candidates[i], candidates[j]);
      if (!known(meet)) candidates.push_back(std::move(meet));
    }

  // each candidate's relative interior is covered by one chamber, namely the
  // chamber of any of its interior points
  GITFan fan;
  fan.support = weight_cone(ring);
  std::vector<RationalCone> chambers;
  for (const RationalCone& cand : candidates) {
    Ivec sample =
        cand.dim() == 0 ? Ivec(r) : relative_interior_point(cand);
    // the chamber of the sample is the meet of every orbit cone containing
    // it; the candidate is itself such a meet, so folding from it turns the
    // usual case into pure containment checks
    RationalCone chamber = cand;
    bool inside_any = false;
    for (const RationalCone& c : table.distinct) {
      if (!contains(c, sample)) continue;
      inside_any = true;
      chamber = intersect(chamber, c);
    }
    if (!inside_any) continue;  // outside every orbit cone
    chambers.push_back(std::move(chamber));
  }
  std::sort(chambers.begin(), chambers.end(), cone_less);
  chambers.erase(std::unique(chambers.begin(), chambers.end()), chambers.end());
  fan.chambers = std::move(chambers);

  // the chambers cover the support: every candidate interior point lies in
  // its own chamber by construction, and the support itself is one of the
  // orbit cones, hence among the candidates.  Full structural validation is
  // available separately through verify_quasifan.
  if (fan.chambers.empty()) throw internal_error("git fan came out empty");
  return fan;
}

GITFan git_fan(const RingSpec& ring) { return git_fan(ring, orbit_cones(ring)); }

std::vector<SupportSet> semistable_supports(const RingSpec& ring, const OrbitConeTable& table,
                                            const Ivec& m) {
  if (m.size() != ring.grading_rank) throw input_error("weight vector has wrong length");
  if (is_zero(m)) return {SupportSet{}};  // every point is semistable for m = 0
  std::vector<SupportSet> hits;
  for (const auto& [s, cone] : table.entries)
    if (contains(cone, m)) hits.push_back(s);
  // keep the inclusion-minimal ones
  std::vector<SupportSet> minimal;
  for (const SupportSet& s : hits) {
    bool keep = true;
    for (const SupportSet& t : hits) {
      if (t == s) continue;
      if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<SupportSet> semistable_supports(const RingSpec& ring, const Ivec& m) {
  return semistable_supports(ring, orbit_cones(ring), m);
}

RelevantInteriorWitness relevant_in_relint(const RingSpec& ring, const RationalCone& chamber,
                                           long ray_multiple_bound) {
  if (chamber.ambient_dim != ring.grading_rank)
    throw internal_error("relevant_in_relint: dimension mismatch");
  if (!is_full_dimensional(chamber))
    throw analysis_error("the chamber is not full-dimensional: no interior weight available");
  std::vector<Ivec> directions = chamber.rays;
  for (const Ivec& b : chamber.lineality_basis) {
    directions.push_back(b);
    directions.push_back(negated(b));
  }
  RelevantInteriorWitness witness;
  witness.degree = Ivec(ring.grading_rank);
  for (const Ivec& g : directions) {
    // smallest positive multiple of g realized by a variable degree; the
    // realizable multiples form a semigroup generated by the per-variable
    // contents, so the minimum generator is the minimum element
    Int best = 0;
    std::size_t best_var = 0;
    for (std::size_t i = 0; i < ring.nvars; ++i) {
      Ivec col = ring.degree_column(i);
      if (primitive(col) != g) continue;
      Int c = content(col);
      if (best == 0 || c < best) {
        best = c;
        best_var = i;
      }
    }
    if (best == 0)
      throw internal_error("no variable degree lies on the chamber ray " + to_string(g));
    if (best > ray_multiple_bound)
      throw analysis_error("the smallest multiple of ray " + to_string(g) +
                           " realized by a variable degree exceeds the search bound " +
                           std::to_string(ray_multiple_bound));
    witness.degree = add(witness.degree, scaled(best, g));
    witness.support.push_back(best_var);
  }
  std::sort(witness.support.begin(), witness.support.end());
  witness.support.erase(std::unique(witness.support.begin(), witness.support.end()),
                        witness.support.end());
  if (!relint_contains(chamber, witness.degree))
    throw internal_error("interior witness degree missed the chamber interior");
  if (!is_relevant_support(ring, witness.support).relevant)
    throw internal_error("interior witness support is not relevant");
  return witness;
}

ComparisonReport comparison_report(const RingSpec& ring, std::size_t veronese_bound,
                                   long ray_multiple_bound, long box) {
  ComparisonReport report;
  report.veronese_bound_used = veronese_bound;
  GITFan fan = git_fan(ring);
  const RationalCone* full = nullptr;
  for (const RationalCone& c : fan.chambers)
    if (is_full_dimensional(c)) {
      full = &c;
      break;
    }
  if (!full) {
    report.applicable = false;
    report.reason =
        "no chamber is full-dimensional (the weight cone is degenerate), so no interior "
        "weight exists to compare along";
    return report;
  }
  report.applicable = true;
  report.chamber = *full;
  RelevantInteriorWitness witness = relevant_in_relint(ring, *full, ray_multiple_bound);
  report.witness_support = witness.support;
  report.witness_degree = witness.degree;

  // exactly one inclusion-maximal chamber?
  std::size_t maximal = 0;
  for (const RationalCone& a : fan.chambers) {
    bool covered = false;
    for (const RationalCone& b : fan.chambers) {
      if (&a == &b || a == b) continue;
      bool inside = true;
      for (const Ivec& g : a.generators())
        if (!contains(b, g)) {
          inside = false;
          break;
        }
      if (inside) {
        covered = true;
        break;
      }
    }
    if (!covered) ++maximal;
  }
  report.single_chamber = maximal == 1;

  report.simplicial_weight_cone = is_simplicial(fan.support);

  report.ray_generated = true;
  for (std::size_t i = 0; i < ring.nvars && report.ray_generated; ++i) {
    Ivec dir = primitive(ring.degree_column(i));
    report.ray_generated =
        std::find(fan.support.rays.begin(), fan.support.rays.end(), dir) !=
        fan.support.rays.end();
  }

  report.veronese_degree_one =
      veronese_generated_in_degree_one(ring, witness.degree, veronese_bound, box);

  report.isomorphism_criterion = report.single_chamber && report.simplicial_weight_cone &&
                                 report.ray_generated && report.veronese_degree_one;
  return report;
}

}  // namespace mhproj
