#include "flagcoh/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "flagcoh/bwb.hpp"

namespace flagcoh {

namespace {

Json weight_json(const Weight& w) {
  Json out = Json::array();
  for (Int a : w.coords()) out.push_back(a);
  return out;
}

Json chamber_record_json(const ChamberRecord& rec) {
  Json out;
  out["weight"] = weight_json(rec.weight);
  out["qmin"] = rec.qmin;
  out["regular"] = rec.regular;
  if (rec.weyl_length) out["weyl_length"] = *rec.weyl_length;
  return out;
}

std::string format_fixed(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

// dark grey for the ample cone, light gray for qmin = 1, hues beyond
const char* qmin_color(int qmin) {
  static const char* extra[] = {"#4878a8", "#a85048", "#58a060", "#9060a8",
                                "#b08830", "#409898", "#7060c8", "#c05880"};
  if (qmin == 0) return "#404040";
  if (qmin == 1) return "#c8c8c8";
  return extra[(qmin - 2) % 8];
}

}  // namespace

Json make_record(const std::string& command, Json payload) {
  Json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = command;
  record["payload"] = std::move(payload);
  return record;
}

Json cohomology_record(const Weight& lambda) {
  const CohomologyResult result = bwb_cohomology(lambda);
  Json payload;
  payload["rank"] = lambda.rank();
  payload["weight"] = weight_json(lambda);
  if (result) {
    payload["verdict"] = "nonvanishing";
    payload["degree"] = result->degree;
    payload["highest_weight"] = weight_json(result->highest_weight);
    payload["dimension"] = result->dimension.get_str();
  } else {
    payload["verdict"] = "all_vanish";
  }
  return make_record("cohomology", std::move(payload));
}

Json qample_record(const Weight& lambda) {
  Json payload;
  payload["rank"] = lambda.rank();
  payload["weight"] = weight_json(lambda);
  payload["qmin"] = q_ample_index(lambda);
  return make_record("qample", std::move(payload));
}

Json chambers_record(int rank, int range) {
  const std::vector<ChamberRecord> records = chamber_map(rank, range);
  Json payload;
  payload["rank"] = rank;
  payload["range"] = range;
  payload["num_points"] = records.size();
  Json list = Json::array();
  for (const ChamberRecord& rec : records) list.push_back(chamber_record_json(rec));
  payload["records"] = std::move(list);
  return make_record("chambers", std::move(payload));
}

Json pn_record(TwistSpec spec) {
  Json payload;
  payload["n"] = spec.n;
  payload["d"] = spec.d;
  Json h = Json::array();
  for (int i = 0; i <= spec.n; ++i) h.push_back(bott_h(spec, i).get_str());
  payload["h"] = std::move(h);
  payload["qmin"] = pn_q_ample_index(spec);
  return make_record("pn", std::move(payload));
}

Json lefschetz_record(const BettiProfile& profile) {
  const AmplenessVerdict verdict = ampleness_verdict(profile);
  Json payload;
  payload["ambient_n"] = profile.ambient_n;
  payload["dim_y"] = profile.dim_y;
  payload["betti"] = profile.betti;
  payload["assumes_smooth"] = true;
  payload["verdict"] = verdict.ample ? "ample" : "not_ample";
  if (verdict.first_failing_degree) payload["first_failing_degree"] = *verdict.first_failing_degree;
  return make_record("lefschetz", std::move(payload));
}

VerifyPaperReport verify_paper(const OracleWindow& window, bool inject_fault) {
  const Weight bundle({2, -1});
  const Weight canonical_twist = bundle + Weight({-2, -2});  // L + K = L_(0,-3)
  const int fault = inject_fault ? 1 : 0;

  Json checks = Json::array();
  bool all_pass = true;

  const auto push_int_check = [&](const std::string& name, int expected, int computed) {
    const bool pass = expected == computed;
    all_pass = all_pass && pass;
    Json c;
    c["name"] = name;
    c["expected"] = expected;
    c["computed"] = computed;
    c["pass"] = pass;
    checks.push_back(std::move(c));
  };

  push_int_check("q_ample_index of (2,-1), closed form", 1, q_ample_index(bundle) + fault);
  push_int_check("q_ample_index of (2,-1), twist oracle", 1,
                 q_ample_index_oracle(bundle, window) + fault);

  {
    Json expected;
    expected["verdict"] = "nonvanishing";
    expected["degree"] = 2;
    expected["highest_weight"] = Json::array({0, 0});
    expected["dimension"] = "1";

    const CohomologyResult result = bwb_cohomology(canonical_twist);
    Json computed;
    if (result) {
      computed["verdict"] = "nonvanishing";
      computed["degree"] = result->degree + fault;
      computed["highest_weight"] = weight_json(result->highest_weight);
      computed["dimension"] = result->dimension.get_str();
    } else {
      computed["verdict"] = "all_vanish";
    }

    const bool pass = expected == computed;
    all_pass = all_pass && pass;
    Json c;
    c["name"] = "cohomology of the canonical twist (0,-3): only H^2 survives, one-dimensional";
    c["expected"] = std::move(expected);
    c["computed"] = std::move(computed);
    c["pass"] = pass;
    checks.push_back(std::move(c));
  }

  Json payload;
  payload["oracle_window"] = Json{{"box_radius", window.box_radius},
                                  {"m_min", window.m_min},
                                  {"m_max", window.m_max}};
  payload["checks"] = std::move(checks);
  payload["pass"] = all_pass;
  return VerifyPaperReport{make_record("verify-paper", std::move(payload)), all_pass};
}

std::string chambers_csv(std::span<const ChamberRecord> records) {
  if (records.empty()) throw std::invalid_argument("no chamber records to emit");
  const int rank = records.front().weight.rank();

  std::string out;
  for (int k = 1; k <= rank; ++k) out += "a" + std::to_string(k) + ",";
  out += "qmin,regular,weyl_length\n";

  for (const ChamberRecord& rec : records) {
    for (Int a : rec.weight.coords()) out += std::to_string(a) + ",";
    out += std::to_string(rec.qmin);
    out += rec.regular ? ",true," : ",false,";
    if (rec.weyl_length) out += std::to_string(*rec.weyl_length);
    out += '\n';
  }
  return out;
}

std::string chambers_svg(std::span<const ChamberRecord> records, int range) {
  if (records.empty()) throw std::invalid_argument("no chamber records to emit");
  if (records.front().weight.rank() != 2)
    throw std::invalid_argument("the SVG chamber picture is only defined for rank 2");
  if (range < 1) throw std::invalid_argument("range must be >= 1");

  const double unit = 36.0;
  const double pad = 30.0;
  const double sqrt3_2 = std::sqrt(3.0) / 2.0;
  const double grid_w = 3.0 * range * unit;
  const double grid_h = std::sqrt(3.0) * range * unit;
  const int num_qmin = 4;  // qmin ranges over [0, 3] at rank 2
  const double legend_h = 24.0 * num_qmin;
  const int width = static_cast<int>(grid_w + 2 * pad);
  const int height = static_cast<int>(grid_h + 2 * pad + legend_h);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  svg += "  <g stroke=\"#202020\" stroke-width=\"0.5\">\n";
  for (const ChamberRecord& rec : records) {
    const double a = static_cast<double>(rec.weight.coord(1));
    const double b = static_cast<double>(rec.weight.coord(2));
    const double x = a + b / 2.0;
    const double y = b * sqrt3_2;
    const double cx = pad + (x + 1.5 * range) * unit;
    const double cy = pad + (sqrt3_2 * range - y) * unit;  // SVG y grows downward
    svg += "    <circle cx=\"" + format_fixed(cx) + "\" cy=\"" + format_fixed(cy) +
           "\" r=\"7.00\" fill=\"" + qmin_color(rec.qmin) + "\"/>\n";
  }
  svg += "  </g>\n";

  svg += "  <g font-family=\"monospace\" font-size=\"14\">\n";
  for (int q = 0; q < num_qmin; ++q) {
    const double ly = grid_h + 2 * pad + 24.0 * q;
    svg += "    <rect x=\"" + format_fixed(pad) + "\" y=\"" + format_fixed(ly) +
           "\" width=\"16\" height=\"16\" fill=\"" + qmin_color(q) + "\"/>\n";
    svg += "    <text x=\"" + format_fixed(pad + 24.0) + "\" y=\"" + format_fixed(ly + 13.0) +
           "\">qmin = " + std::to_string(q) + (q == 0 ? " (ample cone)" : "") + "</text>\n";
  }
  svg += "  </g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace flagcoh
