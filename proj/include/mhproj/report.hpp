#pragma once

#include <json.hpp>
#include <string>

#include "mhproj/git.hpp"
#include "mhproj/sheaves.hpp"

namespace mhproj {

struct Options {
  long exponent_box = 12;
  std::size_t veronese_bound = 6;
  long ray_multiple_bound = 24;
};

struct InputDocument {
  RingSpec ring;
  Options options;
};

/// Parse the JSON input document; `origin` names the source in diagnostics.
InputDocument parse_input_text(const std::string& text, const std::string& origin);

/// Read and parse an input file (input_error on IO trouble).
InputDocument load_input(const std::string& path);

/// Machine-readable reports. Every boolean criterion is paired with a
/// `criterion` string stating the mathematical fact it checks, and every
/// enumerated basis carries its `complete` flag.
nlohmann::json analyze_report(const InputDocument& doc, unsigned workers);
nlohmann::json sections_report(const InputDocument& doc, const Ivec& d, unsigned workers);
nlohmann::json linebundle_report(const InputDocument& doc, const Ivec& d, unsigned workers);
nlohmann::json linebundle_scan_report(const InputDocument& doc, long scan_box, unsigned workers);
nlohmann::json gitfan_report(const InputDocument& doc);
nlohmann::json compare_report(const InputDocument& doc);

/// Deterministic human-readable rendering of a report produced above.
std::string render_text(const nlohmann::json& report);

}  // namespace mhproj
