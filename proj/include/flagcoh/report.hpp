// Structured output for the command-line front end: one self-describing
// record per invocation (schema_version "1"), plus CSV and SVG emitters for
// the chamber map.  Everything here is a thin assembly layer over the
// library operations; output is byte-deterministic for fixed inputs.

#pragma once

#include <json.hpp>

#include <span>
#include <string>

#include "flagcoh/lefschetz.hpp"
#include "flagcoh/projective_space.hpp"
#include "flagcoh/qample.hpp"

namespace flagcoh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json make_record(const std::string& command, Json payload);

Json cohomology_record(const Weight& lambda);
Json qample_record(const Weight& lambda);
Json chambers_record(int rank, int range);
Json pn_record(TwistSpec spec);
Json lefschetz_record(const BettiProfile& profile);

// Recomputes the built-in example on the rank-2 flag variety: L_(2,-1) has
// q-ample index 1 (closed form and twist oracle) while H^2 of its canonical
// twist L_(0,-3) is one-dimensional.  inject_fault perturbs the computed
// values, for exercising the failure path.
struct VerifyPaperReport {
  Json record;
  bool pass;
};
VerifyPaperReport verify_paper(const OracleWindow& window = {}, bool inject_fault = false);

// Columns: a1..ar, qmin, regular, weyl_length (empty when not regular).
std::string chambers_csv(std::span<const ChamberRecord> records);

// Rank-2 lattice picture in the hexagonal chamber geometry: a weight (a, b)
// is drawn at (a + b/2, b*sqrt(3)/2), shaded by qmin, with a legend.
std::string chambers_svg(std::span<const ChamberRecord> records, int range);

}  // namespace flagcoh
