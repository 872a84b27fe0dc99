#include "parafam/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "parafam/construction.hpp"
#include "parafam/error.hpp"
#include "parafam/json_io.hpp"
#include "parafam/parahoric.hpp"

namespace parafam::cli {
namespace {

using io::Json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output);
  if (!file) throw IoError("cannot write " + output);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equal-covolume families of arithmetic subgroups from parahoric types"};
  app.require_subcommand(1);

  std::string spec_text, input, output, refine;
  std::optional<std::uint64_t> q;
  bool dot = false, fallback_swap = false;

  auto* diagram = app.add_subcommand("diagram", "Print the local Dynkin diagram as JSON");
  diagram->add_option("spec", spec_text, "split:<letter><rank> or twisted:C-BC1|C-B2")->required();
  diagram->add_flag("--dot", dot, "Print Graphviz DOT instead of JSON");

  auto* pairs = app.add_subcommand("pairs", "List non-conjugate equal-volume type pairs");
  pairs->add_option("spec", spec_text, "split:<letter><rank> or twisted:C-BC1|C-B2")->required();
  pairs->add_option("--q", q, "Residue size for numeric spot evaluation");

  auto* ratio = app.add_subcommand("ratio", "Exact covolume ratio of two collections");
  auto* family = app.add_subcommand("family", "Build and certify a family");
  auto* certify = app.add_subcommand("certify", "Re-validate a family certificate");
  for (auto* sub : {ratio, family, certify}) {
    sub->add_option("file", input, "Input JSON file");
    sub->add_option("--input", input, "Input JSON file");
  }
  family->add_flag("--fallback-swap", fallback_swap, "Enable the two-place swap");
  family->add_option("--refine", refine, "Torsion-free refinement places: place1,place2");
  for (auto* sub : {diagram, pairs, ratio, family, certify})
    sub->add_option("--output", output, "Write the result here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (diagram->parsed()) {
      const auto d = build_local_index(GroupSpec::parse(spec_text));
      emit(dot ? io::to_dot(d) : dump(io::to_json(d)), output, out);
      return 0;
    }
    if (pairs->parsed()) {
      const auto d = build_local_index(GroupSpec::parse(spec_text));
      const auto found = find_equal_volume_pairs(d);
      if (found.empty())
        err << "warning: " << d.name()
            << " has no single-place pair of non-conjugate equal-volume types; "
               "families need the two-place swap (--fallback-swap)\n";
      emit(dump(io::pairs_to_json(d, found, q)), output, out);
      return 0;
    }
    if (input.empty()) throw IoError("missing input file");
    if (ratio->parsed()) {
      const auto request = io::parse_ratio_request(read_json(input));
      emit(dump(io::to_json(relative_covolume(request.a, request.b))), output, out);
      return 0;
    }
    if (family->parsed()) {
      auto request = io::parse_family_request(read_json(input));
      if (fallback_swap) request.options.fallback_swap = true;
      if (!refine.empty()) {
        const auto comma = refine.find(',');
        if (comma == std::string::npos) throw IoError("--refine expects place1,place2");
        request.options.refine = std::pair{refine.substr(0, comma), refine.substr(comma + 1)};
      }
      const auto members = build_family(request.place_set.group, request.place_set.places,
                                        request.family_places, request.options);
      const auto cert = certify_family(members);
      emit(dump(io::to_json(cert)), output, out);
      err << "certified " << members.size() << " members, " << cert.witnesses.size()
          << " witnesses\n";
      return 0;
    }
    if (certify->parsed()) {
      const auto document = read_json(input);
      const auto cert = certify_family(io::parse_family_members(document));
      if (io::to_json(cert) != document)
        throw DomainError("certificate does not match the recomputed ratios and witnesses");
      emit(dump(Json{{"valid", true},
                     {"members", cert.members.size()},
                     {"witnesses", cert.witnesses.size()},
                     {"torsion_free", cert.torsion_free}}),
           output, out);
      return 0;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "schema error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace parafam::cli
