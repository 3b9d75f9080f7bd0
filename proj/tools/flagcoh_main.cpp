// Command-line front end.  Every command prints one structured record (or
// CSV/SVG for the chamber map) and adds no computation of its own.
//
// Exit status: 0 success, 1 verify-paper mismatch, 2 usage error.

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include "flagcoh/bwb.hpp"
#include "flagcoh/report.hpp"

namespace {

using flagcoh::Int;

bool is_base10_int(const std::string& text) {
  std::size_t k = text.starts_with('-') ? 1 : 0;
  if (k == text.size()) return false;
  for (; k < text.size(); ++k)
    if (text[k] < '0' || text[k] > '9') return false;
  return true;
}

// all integer flags are base-10 with an optional leading minus
const CLI::Validator base10([](std::string& input) {
  return is_base10_int(input) ? std::string{}
                              : "'" + input + "' is not a base-10 integer";
}, "INT");

// comma-separated base-10 integers with optional leading minus
std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    Int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, value, 10);
    if (ec != std::errc{} || ptr != last || first == last)
      throw std::invalid_argument("expected a comma-separated list of integers, got '" + text +
                                  "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

flagcoh::Weight parse_weight(int rank, const std::string& text) {
  std::vector<Int> coords = parse_int_list(text);
  if (static_cast<int>(coords.size()) != rank)
    throw std::invalid_argument("expected " + std::to_string(rank) + " weight coordinates, got " +
                                std::to_string(coords.size()));
  return flagcoh::Weight(std::move(coords));
}

void print_record(const flagcoh::Json& record) { std::cout << record.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology of line bundles on type-A flag varieties, q-ample cones, "
               "and ampleness checks on projective space"};
  app.require_subcommand(1);
  int exit_status = 0;

  // cohomology --rank R --weight a1,...,aR
  {
    auto* cmd = app.add_subcommand("cohomology", "cohomology of the line bundle L_lambda");
    auto rank = std::make_shared<int>(0);
    auto weight = std::make_shared<std::string>();
    cmd->add_option("--rank", *rank, "rank r of the root system A_r")->required()->check(base10);
    cmd->add_option("--weight", *weight, "weight coordinates a1,...,ar")->required();
    cmd->callback(
        [rank, weight] { print_record(flagcoh::cohomology_record(parse_weight(*rank, *weight))); });
  }

  // qample --rank R --weight a1,...,aR
  {
    auto* cmd = app.add_subcommand("qample", "minimal q for which L_lambda is q-ample");
    auto rank = std::make_shared<int>(0);
    auto weight = std::make_shared<std::string>();
    cmd->add_option("--rank", *rank, "rank r of the root system A_r")->required()->check(base10);
    cmd->add_option("--weight", *weight, "weight coordinates a1,...,ar")->required();
    cmd->callback(
        [rank, weight] { print_record(flagcoh::qample_record(parse_weight(*rank, *weight))); });
  }

  // chambers --rank R --range K [--format structured|csv|svg]
  {
    auto* cmd = app.add_subcommand("chambers", "classify lattice weights by q-ample index");
    auto rank = std::make_shared<int>(0);
    auto range = std::make_shared<int>(0);
    auto format = std::make_shared<std::string>("structured");
    cmd->add_option("--rank", *rank, "rank r of the root system A_r")->required()->check(base10);
    cmd->add_option("--range", *range, "half-width of the coordinate box")->required()->check(base10);
    cmd->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"structured", "csv", "svg"}));
    cmd->callback([rank, range, format] {
      if (*format == "structured") {
        print_record(flagcoh::chambers_record(*rank, *range));
      } else {
        const auto records = flagcoh::chamber_map(*rank, *range);
        if (*format == "csv")
          std::cout << flagcoh::chambers_csv(records);
        else
          std::cout << flagcoh::chambers_svg(records, *range);
      }
    });
  }

  // verify-paper [--oracle-box B] [--oracle-mmin M] [--oracle-mmax M]
  {
    auto* cmd = app.add_subcommand(
        "verify-paper",
        "recheck the built-in example: L_(2,-1) is 1-ample yet H^2 of its canonical twist is C");
    auto window = std::make_shared<flagcoh::OracleWindow>();
    auto inject = std::make_shared<bool>(false);
    cmd->add_option("--oracle-box", window->box_radius, "twist box radius for the oracle")->check(base10);
    cmd->add_option("--oracle-mmin", window->m_min, "lowest power of the bundle scanned")->check(base10);
    cmd->add_option("--oracle-mmax", window->m_max, "highest power of the bundle scanned")->check(base10);
    cmd->add_flag("--inject-fault", *inject)->group("");  // negative-control hook, hidden
    cmd->callback([window, inject, &exit_status] {
      const flagcoh::VerifyPaperReport report = flagcoh::verify_paper(*window, *inject);
      print_record(report.record);
      if (!report.pass) exit_status = 1;
    });
  }

  // pn --n N --d D
  {
    auto* cmd = app.add_subcommand("pn", "cohomology and q-ample index of O(d) on P^n");
    auto spec = std::make_shared<flagcoh::TwistSpec>();
    cmd->add_option("--n", spec->n, "ambient projective dimension")->required()->check(base10);
    cmd->add_option("--d", spec->d, "twist of the line bundle O(d)")->required()->check(base10);
    cmd->callback([spec] { print_record(flagcoh::pn_record(*spec)); });
  }

  // lefschetz --n N --dim D --betti b0,...,b_{D-1}
  {
    auto* cmd = app.add_subcommand(
        "lefschetz", "ampleness of a smooth subvariety of P^n from its rational Betti numbers");
    auto profile = std::make_shared<flagcoh::BettiProfile>();
    auto betti = std::make_shared<std::string>();
    auto smooth = std::make_shared<bool>(true);
    cmd->add_option("--n", profile->ambient_n, "ambient projective dimension")->required()->check(base10);
    cmd->add_option("--dim", profile->dim_y, "dimension of the subvariety Y")->required()->check(base10);
    cmd->add_option("--betti", *betti, "Betti numbers b0,...,b_{dim-1}")->required();
    cmd->add_flag("--smooth,!--not-smooth", *smooth,
                  "attest that Y is smooth (the criterion requires it; on by default)");
    cmd->callback([profile, betti, smooth] {
      if (!*smooth)
        throw std::invalid_argument(
            "the Betti criterion decides ampleness only for smooth Y; rerun with --smooth");
      for (Int b : parse_int_list(*betti)) profile->betti.push_back(static_cast<long>(b));
      print_record(flagcoh::lefschetz_record(*profile));
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_status;
}
