#include "mhproj/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mhproj/errors.hpp"

namespace mhproj {
namespace {

using nlohmann::json;

// audit strings attached to every boolean criterion in the reports
constexpr const char* kEffectiveCriterion =
    "the degree columns generate all of Z^r (the degree lattice has index one)";
constexpr const char* kNonemptyCriterion =
    "the scheme is nonempty iff some support's degrees span a finite-index subgroup of Z^r, "
    "i.e. a relevant monomial exists";
constexpr const char* kChartPrimeCriterion =
    "the chart's distinguished point is prime iff the support degrees generate all of Z^r";
constexpr const char* kAllPrimeCriterion =
    "every point of every chart is prime iff every linearly independent set of r degree "
    "columns is a Z-basis of Z^r (determinant +-1)";
constexpr const char* kNormalCriterion =
    "each chart ring is the degree-zero part of a localized polynomial ring, hence a normal "
    "domain; a scheme glued from normal charts is normal";
constexpr const char* kHypothesisCriterion =
    "omitting any single variable leaves degrees that still span a finite-index subgroup of "
    "Z^r; under this hypothesis every twisted global-section space is spanned by the honest "
    "graded piece of the same degree";
constexpr const char* kLineBundleCriterion =
    "the twist lies in every chart's degree lattice, so each chart carries an invertible "
    "monomial of that degree and the sheaf is locally free of rank one";
constexpr const char* kSingleChamberCriterion =
    "the weight cone carries exactly one maximal chamber";
constexpr const char* kSimplicialCriterion =
    "the weight cone is simplicial: its extreme rays are linearly independent";
constexpr const char* kRayGeneratedCriterion =
    "every variable degree lies on an extreme ray of the weight cone";
constexpr const char* kVeroneseCriterion =
    "the Veronese slice along the witness degree is generated in degree one, as far as the "
    "configured bound sees";
constexpr const char* kIsomorphismCriterion =
    "single chamber, simplicial weight cone, ray-generated degrees and degree-one Veronese "
    "generation together make the glued scheme isomorphic to the chamber's projective "
    "quotient, and in particular projective over the degree-zero part";

json json_int(const Int& x) {
  if (x.fits_slong_p()) return json(static_cast<long long>(x.get_si()));
  return json(x.get_str());
}

json json_vec(const Ivec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

json json_vecs(const std::vector<Ivec>& vs) {
  json a = json::array();
  for (const Ivec& v : vs) a.push_back(json_vec(v));
  return a;
}

json json_flag(bool value, const char* criterion) {
  return json{{"value", value}, {"criterion", criterion}};
}

json json_cone(const RationalCone& c) {
  return json{{"ambient_dim", c.ambient_dim},
              {"dim", c.dim()},
              {"rays", json_vecs(c.rays)},
              {"lineality_basis", json_vecs(c.lineality_basis)},
              {"facet_normals", json_vecs(c.facet_normals)},
              {"span_normals", json_vecs(c.span_normals)},
              {"pointed", is_pointed(c)},
              {"simplicial", is_simplicial(c)},
              {"full_dimensional", is_full_dimensional(c)}};
}

json json_lattice(const Sublattice& l) {
  auto idx = lattice_index(l);
  return json{{"ambient_rank", l.ambient_rank},
              {"rank", l.rank()},
              {"basis", json_vecs(l.basis.columns())},
              {"index", idx ? json_int(*idx) : json()}};
}

json json_support(const RingSpec& ring, const SupportSet& s) {
  json names = json::array();
  for (std::size_t i : s) names.push_back(ring.names[i]);
  return json{{"indices", s}, {"variables", names}};
}

json json_monomials(const RingSpec& ring, const std::vector<Ivec>& monomials) {
  json a = json::array();
  for (const Ivec& m : monomials)
    a.push_back(json{{"exponents", json_vec(m)}, {"monomial", laurent_string(ring, m)}});
  return a;
}

json json_ring(const RingSpec& ring) {
  return json{{"grading_rank", ring.grading_rank},
              {"variables", ring.names},
              {"degrees", json_vecs(ring.degrees.columns())}};
}

json json_options(const Options& o) {
  return json{{"exponent_box", o.exponent_box},
              {"veronese_bound", o.veronese_bound},
              {"ray_multiple_bound", o.ray_multiple_bound}};
}

long require_positive_long(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw input_error(where + " must be an integer");
  long v = j.get<long>();
  if (v < 1) throw input_error(where + " must be at least 1");
  return v;
}

}  // namespace

InputDocument parse_input_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(origin + ": " + e.what());
  }
  if (!j.is_object()) throw input_error(origin + ": the input document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "grading_rank" && key != "degrees" && key != "names" && key != "options")
      throw input_error(origin + ": unknown field \"" + key + "\"");
  }
  if (!j.contains("grading_rank"))
    throw input_error(origin + ": missing field \"grading_rank\"");
  long r = require_positive_long(j["grading_rank"], origin + ": grading_rank");
  if (r > 16) throw input_error(origin + ": grading_rank must be at most 16");
  if (!j.contains("degrees") || !j["degrees"].is_array() || j["degrees"].empty())
    throw input_error(origin + ": \"degrees\" must be a nonempty array of degree columns");
  const json& cols = j["degrees"];
  IntMatrix degrees(static_cast<std::size_t>(r), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const json& col = cols[c];
    std::string where = origin + ": degrees[" + std::to_string(c) + "]";
    if (!col.is_array() || col.size() != static_cast<std::size_t>(r))
      throw input_error(where + " must be an array of " + std::to_string(r) + " integers");
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (!col[i].is_number_integer())
        throw input_error(where + "[" + std::to_string(i) + "] must be an integer");
      degrees(i, c) = Int(col[i].get<long>());
    }
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array())
      throw input_error(origin + ": \"names\" must be an array of strings");
    for (std::size_t i = 0; i < j["names"].size(); ++i) {
      if (!j["names"][i].is_string())
        throw input_error(origin + ": names[" + std::to_string(i) + "] must be a string");
      names.push_back(j["names"][i].get<std::string>());
    }
  }
  Options options;
  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) throw input_error(origin + ": \"options\" must be an object");
    for (const auto& [key, value] : o.items()) {
      if (key == "exponent_box")
        options.exponent_box = require_positive_long(value, origin + ": options.exponent_box");
      else if (key == "veronese_bound")
        options.veronese_bound = static_cast<std::size_t>(
            require_positive_long(value, origin + ": options.veronese_bound"));
      else if (key == "ray_multiple_bound")
        options.ray_multiple_bound =
            require_positive_long(value, origin + ": options.ray_multiple_bound");
      else
        throw input_error(origin + ": unknown option \"" + key + "\"");
    }
  }
  InputDocument doc;
  doc.ring = RingSpec::make(std::move(degrees), std::move(names));
  doc.options = options;
  return doc;
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_input_text(buffer.str(), path);
}

nlohmann::json analyze_report(const InputDocument& doc, unsigned workers) {
  const RingSpec& ring = doc.ring;
  json rep;
  rep["command"] = "analyze";
  rep["ring"] = json_ring(ring);
  rep["options"] = json_options(doc.options);
  rep["effective_grading"] = json_flag(is_effective_grading(ring), kEffectiveCriterion);
  rep["weight_cone"] = json_cone(weight_cone(ring));

  ProjAtlas atlas = build_atlas(ring, workers);
  json charts = json::array();
  for (const Chart& chart : atlas.charts)
    charts.push_back(json{{"support", json_support(ring, chart.support)},
                          {"degree_lattice", json_lattice(chart.degree_lattice)},
                          {"prime_points", json_flag(chart.prime_points, kChartPrimeCriterion)}});
  json proj;
  proj["nonempty"] = json_flag(atlas.nonempty, kNonemptyCriterion);
  proj["normal"] = json_flag(atlas.normal, kNormalCriterion);
  json prime = json_flag(atlas.every_point_prime, kAllPrimeCriterion);
  prime["witness"] =
      atlas.non_prime_witness ? json_support(ring, *atlas.non_prime_witness) : json();
  proj["every_point_prime"] = prime;
  proj["charts"] = charts;
  rep["proj"] = proj;

  rep["global_sections_hypothesis"] =
      json_flag(global_sections_hypothesis(ring), kHypothesisCriterion);
  if (atlas.nonempty) {
    rep["core_support"] = json_support(ring, core_support(atlas));
    rep["twist_degree_lattice"] = json_lattice(twist_degree_lattice(ring, atlas));
  }
  return rep;
}

nlohmann::json sections_report(const InputDocument& doc, const Ivec& d, unsigned workers) {
  const RingSpec& ring = doc.ring;
  const long box = doc.options.exponent_box;
  ProjAtlas atlas = build_atlas(ring, workers);
  LaurentBasis global = global_sections(ring, atlas, d, box);
  json rep;
  rep["command"] = "sections";
  rep["ring"] = json_ring(ring);
  rep["twist"] = json_vec(d);
  rep["exponent_box"] = box;
  rep["global_sections"] = json{{"complete", global.complete},
                                {"count", global.monomials.size()},
                                {"monomials", json_monomials(ring, global.monomials)}};
  json per_chart = json::array();
  for (const Chart& chart : atlas.charts) {
    LaurentBasis sections = chart_sections(ring, atlas, chart.support, d, box);
    per_chart.push_back(json{{"support", json_support(ring, chart.support)},
                             {"complete", sections.complete},
                             {"count", sections.monomials.size()},
                             {"monomials", json_monomials(ring, sections.monomials)}});
  }
  rep["chart_sections"] = per_chart;
  return rep;
}

namespace {

json linebundle_common(const RingSpec& ring, const ProjAtlas& atlas) {
  return json{{"command", "linebundle"},
              {"ring", json_ring(ring)},
              {"twist_degree_lattice", json_lattice(twist_degree_lattice(ring, atlas))}};
}

}  // namespace

nlohmann::json linebundle_report(const InputDocument& doc, const Ivec& d, unsigned workers) {
  const RingSpec& ring = doc.ring;
  ProjAtlas atlas = build_atlas(ring, workers);
  json rep = linebundle_common(ring, atlas);
  rep["twist"] = json_vec(d);
  rep["line_bundle"] = json_flag(is_line_bundle(ring, atlas, d), kLineBundleCriterion);
  json witnesses = json::array();
  for (const Chart& chart : atlas.charts) {
    auto witness = local_triviality_witness(ring, chart.support, d);
    json w;
    w["support"] = json_support(ring, chart.support);
    if (witness)
      w["witness"] = json{{"exponents", json_vec(*witness)},
                          {"monomial", laurent_string(ring, *witness)}};
    else
      w["witness"] = json();
    witnesses.push_back(std::move(w));
  }
  rep["chart_witnesses"] = witnesses;
  return rep;
}

nlohmann::json linebundle_scan_report(const InputDocument& doc, long scan_box, unsigned workers) {
  const RingSpec& ring = doc.ring;
  if (scan_box < 0) throw input_error("the scan box must be nonnegative");
  if (ring.grading_rank > 3)
    throw input_error("--scan tabulates a full box and is limited to grading rank at most 3");
  ProjAtlas atlas = build_atlas(ring, workers);
  Sublattice lattice = twist_degree_lattice(ring, atlas);
  json rep = linebundle_common(ring, atlas);
  rep["scan_box"] = scan_box;
  json table = json::array();
  std::size_t true_count = 0;
  Ivec d(ring.grading_rank, Int(-scan_box));
  for (;;) {
    bool value = lattice_contains(lattice, d);
    true_count += value ? 1 : 0;
    table.push_back(json{{"twist", json_vec(d)}, {"line_bundle", value}});
    std::size_t k = ring.grading_rank;
    while (k > 0 && d[k - 1] == scan_box) d[--k] = -scan_box;
    if (k == 0) break;
    ++d[k - 1];
  }
  rep["line_bundle_criterion"] = kLineBundleCriterion;
  rep["scan"] = table;
  rep["scan_true_count"] = true_count;
  return rep;
}

nlohmann::json gitfan_report(const InputDocument& doc) {
  const RingSpec& ring = doc.ring;
  OrbitConeTable table = orbit_cones(ring);
  GITFan fan = git_fan(ring, table);
  verify_quasifan(QuasiFan{fan.chambers, fan.support});
  json rep;
  rep["command"] = "gitfan";
  rep["ring"] = json_ring(ring);
  rep["weight_cone"] = json_cone(fan.support);
  rep["dual_weight_cone"] = json_cone(dual_cone(fan.support));
  json chambers = json::array();
  for (const RationalCone& chamber : fan.chambers) {
    Ivec sample = chamber.dim() == 0 ? Ivec(ring.grading_rank) : relative_interior_point(chamber);
    json supports = json::array();
    for (const SupportSet& s : semistable_supports(ring, table, sample))
      supports.push_back(json_support(ring, s));
    chambers.push_back(json{{"cone", json_cone(chamber)},
                            {"sample_weight", json_vec(sample)},
                            {"semistable_supports", supports}});
  }
  rep["chamber_count"] = fan.chambers.size();
  rep["chambers"] = chambers;
  return rep;
}

nlohmann::json compare_report(const InputDocument& doc) {
  const RingSpec& ring = doc.ring;
  ComparisonReport cr = comparison_report(ring, doc.options.veronese_bound,
                                          doc.options.ray_multiple_bound,
                                          doc.options.exponent_box);
  json rep;
  rep["command"] = "compare";
  rep["ring"] = json_ring(ring);
  rep["dual_weight_cone"] = json_cone(dual_cone(weight_cone(ring)));
  rep["applicable"] = cr.applicable;
  if (!cr.applicable) {
    rep["reason"] = cr.reason;
    return rep;
  }
  rep["chamber"] = json_cone(cr.chamber);
  rep["witness"] = json{{"support", json_support(ring, cr.witness_support)},
                        {"degree", json_vec(cr.witness_degree)}};
  rep["single_chamber"] = json_flag(cr.single_chamber, kSingleChamberCriterion);
  rep["simplicial_weight_cone"] =
      json_flag(cr.simplicial_weight_cone, kSimplicialCriterion);
  rep["ray_generated"] = json_flag(cr.ray_generated, kRayGeneratedCriterion);
  rep["veronese_degree_one"] = json_flag(cr.veronese_degree_one, kVeroneseCriterion);
  rep["isomorphism_criterion"] = json_flag(cr.isomorphism_criterion, kIsomorphismCriterion);
  rep["veronese_bound_used"] = cr.veronese_bound_used;
  return rep;
}

// ---------------------------------------------------------------------------
// text rendering

namespace {

std::string vec_text(const json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].is_string() ? v[i].get<std::string>() : std::to_string(v[i].get<long long>());
  }
  return s + ")";
}

std::string vecs_text(const json& vs) {
  if (vs.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ", ";
    s += vec_text(vs[i]);
  }
  return s;
}

std::string support_text(const json& s) {
  const json& names = s["variables"];
  if (names.empty()) return "{}";
  std::string t = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) t += ", ";
    t += names[i].get<std::string>();
  }
  return t + "}";
}

std::string yesno(const json& flag) { return flag["value"].get<bool>() ? "yes" : "no"; }

void cone_lines(std::ostringstream& out, const std::string& indent, const json& c) {
  out << indent << "dim " << c["dim"].get<std::size_t>() << " in Q^"
      << c["ambient_dim"].get<std::size_t>() << (c["pointed"].get<bool>() ? ", pointed" : "")
      << (c["simplicial"].get<bool>() ? ", simplicial" : "") << "\n";
  out << indent << "rays: " << vecs_text(c["rays"]) << "\n";
  if (!c["lineality_basis"].empty())
    out << indent << "lineality basis: " << vecs_text(c["lineality_basis"]) << "\n";
  out << indent << "facet normals: " << vecs_text(c["facet_normals"]) << "\n";
  if (!c["span_normals"].empty())
    out << indent << "span equations: " << vecs_text(c["span_normals"]) << "\n";
}

void lattice_lines(std::ostringstream& out, const std::string& indent, const json& l) {
  out << indent << "rank " << l["rank"].get<std::size_t>() << " in Z^"
      << l["ambient_rank"].get<std::size_t>() << ", basis " << vecs_text(l["basis"])
      << ", index ";
  if (l["index"].is_null())
    out << "infinite";
  else
    out << (l["index"].is_string() ? l["index"].get<std::string>()
                                   : std::to_string(l["index"].get<long long>()));
  out << "\n";
}

void monomial_lines(std::ostringstream& out, const std::string& indent, const json& monomials) {
  for (const json& m : monomials)
    out << indent << m["monomial"].get<std::string>() << "  " << vec_text(m["exponents"]) << "\n";
}

void ring_lines(std::ostringstream& out, const json& rep) {
  const json& ring = rep["ring"];
  out << "ring: " << ring["variables"].size() << " variables graded by Z^"
      << ring["grading_rank"].get<std::size_t>() << "\n";
  for (std::size_t i = 0; i < ring["variables"].size(); ++i)
    out << "  deg " << ring["variables"][i].get<std::string>() << " = "
        << vec_text(ring["degrees"][i]) << "\n";
}

std::string render_analyze(const json& rep) {
  std::ostringstream out;
  ring_lines(out, rep);
  out << "effective grading: " << yesno(rep["effective_grading"]) << "\n";
  out << "weight cone:\n";
  cone_lines(out, "  ", rep["weight_cone"]);
  const json& proj = rep["proj"];
  out << "scheme nonempty: " << yesno(proj["nonempty"]) << "\n";
  out << "normal: " << yesno(proj["normal"]) << "\n";
  out << "every point prime: " << yesno(proj["every_point_prime"]);
  if (!proj["every_point_prime"]["witness"].is_null())
    out << "  (witness subset " << support_text(proj["every_point_prime"]["witness"]) << ")";
  out << "\n";
  out << "charts (" << proj["charts"].size() << "):\n";
  for (const json& chart : proj["charts"]) {
    out << "  chart at " << support_text(chart["support"])
        << (chart["prime_points"]["value"].get<bool>() ? "  [prime point]" : "") << "\n";
    lattice_lines(out, "    degree lattice: ", chart["degree_lattice"]);
  }
  out << "global sections spanned by graded pieces: "
      << yesno(rep["global_sections_hypothesis"]) << "\n";
  if (rep.contains("core_support"))
    out << "core support (inverted everywhere): " << support_text(rep["core_support"]) << "\n";
  if (rep.contains("twist_degree_lattice")) {
    out << "twist degree lattice:\n";
    lattice_lines(out, "  ", rep["twist_degree_lattice"]);
  }
  return out.str();
}

std::string render_sections(const json& rep) {
  std::ostringstream out;
  ring_lines(out, rep);
  const json& global = rep["global_sections"];
  out << "global sections of twist " << vec_text(rep["twist"]) << ": "
      << global["count"].get<std::size_t>() << " monomial"
      << (global["count"].get<std::size_t>() == 1 ? "" : "s")
      << (global["complete"].get<bool>() ? " (complete)"
                                         : " (within exponent box " +
                                               std::to_string(rep["exponent_box"].get<long>()) +
                                               ")")
      << "\n";
  monomial_lines(out, "  ", global["monomials"]);
  for (const json& chart : rep["chart_sections"]) {
    out << "chart " << support_text(chart["support"]) << ": "
        << chart["count"].get<std::size_t>() << " monomial"
        << (chart["count"].get<std::size_t>() == 1 ? "" : "s")
        << (chart["complete"].get<bool>() ? " (complete)" : " (within box)") << "\n";
    monomial_lines(out, "  ", chart["monomials"]);
  }
  return out.str();
}

std::string render_linebundle(const json& rep) {
  std::ostringstream out;
  ring_lines(out, rep);
  out << "twist degree lattice:\n";
  lattice_lines(out, "  ", rep["twist_degree_lattice"]);
  if (rep.contains("scan")) {
    out << "line bundle criterion over twists in [-" << rep["scan_box"].get<long>() << ", "
        << rep["scan_box"].get<long>() << "]^r ("
        << rep["scan_true_count"].get<std::size_t>() << " of " << rep["scan"].size()
        << " satisfy it):\n";
    for (const json& row : rep["scan"])
      out << "  " << vec_text(row["twist"]) << ": "
          << (row["line_bundle"].get<bool>() ? "line bundle" : "not locally trivial by the lattice criterion")
          << "\n";
    return out.str();
  }
  out << "twist " << vec_text(rep["twist"]) << ": "
      << (rep["line_bundle"]["value"].get<bool>() ? "line bundle (lattice criterion satisfied)"
                                                  : "lattice criterion not satisfied")
      << "\n";
  for (const json& w : rep["chart_witnesses"]) {
    out << "  chart " << support_text(w["support"]) << ": ";
    if (w["witness"].is_null())
      out << "no invertible monomial of this degree\n";
    else
      out << "trivialized by " << w["witness"]["monomial"].get<std::string>() << "\n";
  }
  return out.str();
}

std::string render_gitfan(const json& rep) {
  std::ostringstream out;
  ring_lines(out, rep);
  out << "weight cone (fan support):\n";
  cone_lines(out, "  ", rep["weight_cone"]);
  out << "dual of the weight cone:\n";
  cone_lines(out, "  ", rep["dual_weight_cone"]);
  out << "chambers: " << rep["chamber_count"].get<std::size_t>() << "\n";
  std::size_t index = 0;
  for (const json& chamber : rep["chambers"]) {
    out << "chamber " << ++index << ":\n";
    cone_lines(out, "  ", chamber["cone"]);
    out << "  sample weight: " << vec_text(chamber["sample_weight"]) << "\n";
    out << "  semistable minimal supports:";
    for (const json& s : chamber["semistable_supports"]) out << " " << support_text(s);
    out << "\n";
  }
  return out.str();
}

std::string render_compare(const json& rep) {
  std::ostringstream out;
  ring_lines(out, rep);
  if (!rep["applicable"].get<bool>()) {
    out << "comparison not applicable: " << rep["reason"].get<std::string>() << "\n";
    return out.str();
  }
  out << "comparison chamber:\n";
  cone_lines(out, "  ", rep["chamber"]);
  out << "interior witness: degree " << vec_text(rep["witness"]["degree"]) << " on support "
      << support_text(rep["witness"]["support"]) << "\n";
  out << "single chamber: " << yesno(rep["single_chamber"]) << "\n";
  out << "simplicial weight cone: " << yesno(rep["simplicial_weight_cone"]) << "\n";
  out << "degrees on rays: " << yesno(rep["ray_generated"]) << "\n";
  out << "Veronese generated in degree one (bound "
      << rep["veronese_bound_used"].get<std::size_t>() << "): "
      << yesno(rep["veronese_degree_one"]) << "\n";
  out << "isomorphic to the chamber quotient (and projective over it): "
      << yesno(rep["isomorphism_criterion"]) << "\n";
  return out.str();
}

}  // namespace

std::string render_text(const nlohmann::json& report) {
  const std::string command = report.at("command").get<std::string>();
  if (command == "analyze") return render_analyze(report);
  if (command == "sections") return render_sections(report);
  if (command == "linebundle") return render_linebundle(report);
  if (command == "gitfan") return render_gitfan(report);
  if (command == "compare") return render_compare(report);
  throw internal_error("render_text: unknown command " + command);
}

}  // namespace mhproj
