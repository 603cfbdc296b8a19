#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "mhproj/errors.hpp"
#include "mhproj/report.hpp"

namespace {

struct CommonArgs {
  std::string input_path;
  std::string json_path;
  long box = 0;  // 0 = keep the input document's value
  unsigned workers = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("input", args.input_path, "input document (JSON)")->required();
  cmd->add_option("--json", args.json_path, "also write the report as JSON to this file");
  cmd->add_option("--box", args.box, "override the exponent box from the input document")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", args.workers, "worker threads for support scans")
      ->check(CLI::Range(1u, 64u));
}

mhproj::InputDocument load(const CommonArgs& args) {
  mhproj::InputDocument doc = mhproj::load_input(args.input_path);
  if (args.box > 0) doc.options.exponent_box = args.box;
  return doc;
}

mhproj::Ivec parse_twist(const std::string& text, std::size_t rank) {
  mhproj::Ivec d;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    std::size_t begin = part.find_first_not_of(" \t");
    std::size_t end = part.find_last_not_of(" \t");
    if (begin == std::string::npos)
      throw mhproj::input_error("twist entry " + std::to_string(d.size() + 1) + " is empty");
    part = part.substr(begin, end - begin + 1);
    try {
      d.emplace_back(part);  // exact parse, any magnitude
    } catch (const std::invalid_argument&) {
      throw mhproj::input_error("twist entry \"" + part + "\" is not an integer");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (d.size() != rank)
    throw mhproj::input_error("the twist needs " + std::to_string(rank) +
                              " comma-separated integers, got " + std::to_string(d.size()));
  return d;
}

void emit(const nlohmann::json& report, const CommonArgs& args) {
  std::cout << mhproj::render_text(report);
  if (!args.json_path.empty()) {
    std::ofstream out(args.json_path, std::ios::binary);
    if (!out) throw mhproj::input_error("cannot write JSON report to " + args.json_path);
    out << report.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multigraded Proj toolkit: charts, twisted sections, line bundles, GIT fans"};
  app.require_subcommand(1);

  CommonArgs analyze_args, sections_args, linebundle_args, gitfan_args, compare_args;
  std::string sections_twist, linebundle_twist;
  long scan_box = -1;

  CLI::App* analyze = app.add_subcommand("analyze", "atlas, prime points, normality, hypotheses");
  add_common(analyze, analyze_args);

  CLI::App* sections = app.add_subcommand("sections", "global and per-chart twisted sections");
  add_common(sections, sections_args);
  sections->add_option("--twist", sections_twist, "twist degree, comma-separated")->required();

  CLI::App* linebundle =
      app.add_subcommand("linebundle", "lattice criterion for twists being line bundles");
  add_common(linebundle, linebundle_args);
  CLI::Option* twist_opt =
      linebundle->add_option("--twist", linebundle_twist, "twist degree, comma-separated");
  CLI::Option* scan_opt =
      linebundle->add_option("--scan", scan_box, "tabulate all twists in [-N, N]^r")
          ->check(CLI::NonNegativeNumber);
  twist_opt->excludes(scan_opt);

  CLI::App* gitfan = app.add_subcommand("gitfan", "chambers of the weight cone");
  add_common(gitfan, gitfan_args);

  CLI::App* compare =
      app.add_subcommand("compare", "isomorphism criteria against the chamber quotient");
  add_common(compare, compare_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad invocations are input errors
  }

  try {
    if (analyze->parsed()) {
      mhproj::InputDocument doc = load(analyze_args);
      emit(mhproj::analyze_report(doc, analyze_args.workers), analyze_args);
    } else if (sections->parsed()) {
      mhproj::InputDocument doc = load(sections_args);
      mhproj::Ivec d = parse_twist(sections_twist, doc.ring.grading_rank);
      emit(mhproj::sections_report(doc, d, sections_args.workers), sections_args);
    } else if (linebundle->parsed()) {
      mhproj::InputDocument doc = load(linebundle_args);
      if (scan_box >= 0) {
        emit(mhproj::linebundle_scan_report(doc, scan_box, linebundle_args.workers),
             linebundle_args);
      } else {
        if (linebundle_twist.empty())
          throw mhproj::input_error("linebundle needs --twist or --scan");
        mhproj::Ivec d = parse_twist(linebundle_twist, doc.ring.grading_rank);
        emit(mhproj::linebundle_report(doc, d, linebundle_args.workers), linebundle_args);
      }
    } else if (gitfan->parsed()) {
      mhproj::InputDocument doc = load(gitfan_args);
      emit(mhproj::gitfan_report(doc), gitfan_args);
    } else if (compare->parsed()) {
      mhproj::InputDocument doc = load(compare_args);
      emit(mhproj::compare_report(doc), compare_args);
    }
  } catch (const mhproj::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const mhproj::analysis_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
