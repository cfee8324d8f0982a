// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// polyfan: build, verify, compare and convert fans.
//
// Exit codes: 0 pass, 1 check failed, 2 usage or parse error, 3 internal
// invariant violation.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polyfan/flag_fans.hpp"
#include "polyfan/io.hpp"
#include "polyfan/normal_fan.hpp"
#include "polyfan/suites.hpp"

namespace {

using namespace polyfan;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInvariant = 3;

struct BuildArgs {
  std::string kind;
  std::string cage;
  std::string caging_file;
  std::string building_set_file;
  std::optional<std::size_t> s;
  std::string out;
};

struct VerifyArgs {
  std::string suite = "all";
  std::size_t max_a = 4;
  std::string cage;
  std::string fan_file;
  std::string kind;
  std::optional<std::size_t> s;
  std::string policy = "deepest-first";
  std::uint64_t seed = 1;
  std::string json;
};

struct CompareArgs {
  std::string first;
  std::string second;
  std::string mode = "equal";
};

struct ConvertArgs {
  std::string fan_file;
  std::string rank_file;
  std::string to = "fan";
  bool base = false;
  std::string out;
};

Caging caging_of(const std::string& cage, const std::string& caging_file) {
  if (!caging_file.empty()) return io::caging_from_json(io::read_file(caging_file));
  if (cage.empty()) throw Error(ErrorCode::kInvalidArgument, "--cage or --caging is required");
  return Caging::parse_cage(cage);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    io::write_file(out, text);
  }
}

Fan build_fan(const BuildArgs& a) {
  if (a.kind == "nested") {
    if (a.building_set_file.empty()) throw Error(ErrorCode::kInvalidArgument, "--building-set is required");
    const BuildingSet b = io::building_set_from_json(io::read_file(a.building_set_file));
    if (a.cage.empty() && a.caging_file.empty()) return nested_fan(b);
    return nested_fan(pullback_building_set(b, caging_of(a.cage, a.caging_file)));
  }
  if (a.kind == "tlm-blowup") return tlm_blowup_fan(caging_of(a.cage, a.caging_file).cage());
  const Caging pi = caging_of(a.cage, a.caging_file);
  if ((a.kind == "delta") != a.s.has_value()) {
    throw Error(ErrorCode::kInvalidArgument, "--s is required for --kind delta and only there");
  }
  if (a.kind == "product") return product_fan(pi);
  if (a.kind == "delta") return delta_fan(pi, *a.s);
  if (a.kind == "polystellahedral") return polystellahedral_fan(pi);
  if (a.kind == "polypermutohedral") return polypermutohedral_fan(pi);
  throw Error(ErrorCode::kInvalidArgument, "unknown kind '" + a.kind + "'");
}

int cmd_build(const BuildArgs& a) {
  const Fan f = build_fan(a);
  const std::string text = io::fan_to_json(f);
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    io::write_file(a.out, text);
    std::cout << "rays: " << f.rays().size() << "\nmaximal cones: " << f.num_maximal_cones() << "\n";
  }
  return kPass;
}

std::vector<Report> verify_fan_file(const VerifyArgs& a) {
  const Fan f = io::fan_from_json(io::read_file(a.fan_file));
  std::vector<Report> out;
  Report validity{"validity", a.fan_file, true, {}};
  const FanReport r = fan_validate(f);
  if (!r.is_fan) validity.fail("not a fan");
  if (!r.is_simplicial) validity.fail("not simplicial");
  if (!r.is_smooth) validity.fail("not smooth");
  if (!r.is_complete) validity.fail("not complete");
  for (const auto& w : r.witnesses) validity.witnesses.push_back(w);
  out.push_back(std::move(validity));
  if (!a.kind.empty()) {
    BuildArgs b{a.kind, a.cage, "", "", a.s, ""};
    Report equal{"equal", a.fan_file + " against " + a.kind + " " + a.cage, true, {}};
    const Fan expected = build_fan(b);
    if (!(f.ambient() == expected.ambient()) || !fan_equal(f, expected)) {
      equal.fail("fan differs from the constructed " + a.kind + " fan (" +
                 std::to_string(f.num_maximal_cones()) + " against " +
                 std::to_string(expected.num_maximal_cones()) + " maximal cones)");
    }
    out.push_back(std::move(equal));
  }
  return out;
}

int cmd_verify(const VerifyArgs& a) {
  SuiteOptions options;
  options.max_a = a.max_a;
  options.max_a_independence = std::min<std::size_t>(a.max_a, 4);
  options.seed = a.seed;
  options.policy = a.policy == "increasing-size" ? OrderPolicy::kIncreasingSize : OrderPolicy::kDeepestFirst;

  std::vector<Report> reports;
  if (!a.fan_file.empty()) {
    reports = verify_fan_file(a);
  } else if (!a.cage.empty()) {
    reports = run_suite_on(a.suite, Caging::parse_cage(a.cage), options);
  } else {
    reports = run_suite(a.suite, options);
  }

  std::size_t failed = 0;
  for (const auto& r : reports) {
    failed += !r.pass;
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << " " << r.instance << "\n";
    if (!r.pass) {
      for (const auto& w : r.witnesses) std::cout << "  " << w << "\n";
    }
  }
  std::cout << reports.size() - failed << "/" << reports.size() << " passed\n";
  if (!a.json.empty()) emit(io::reports_to_json(reports), a.json);
  return failed == 0 ? kPass : kFail;
}

int cmd_compare(const CompareArgs& a) {
  const Fan f = io::fan_from_json(io::read_file(a.first));
  const Fan g = io::fan_from_json(io::read_file(a.second));
  const bool holds = a.mode == "refines" ? fan_refines(f, g) : fan_equal(f, g);
  std::cout << (holds ? "true" : "false") << "\n";
  return holds ? kPass : kFail;
}

int cmd_convert(const ConvertArgs& a) {
  if (!a.fan_file.empty()) {
    emit(io::fan_to_json(io::fan_from_json(io::read_file(a.fan_file))), a.out);
    return kPass;
  }
  if (a.rank_file.empty()) throw Error(ErrorCode::kInvalidArgument, "--fan or --rank is required");
  const RankFunction f = io::rank_from_json(io::read_file(a.rank_file));
  const IndependencePolytope p(f, a.base);
  if (a.to == "rank") {
    emit(io::rank_to_json(f), a.out);
  } else if (a.to == "h-rep") {
    emit(io::h_rep_to_json(p), a.out);
  } else if (a.to == "vertices") {
    emit(io::vertices_to_json(greedy_vertices(p), f.ground()), a.out);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown target '" + a.to + "'");
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric fans of polymatroids and moduli of points in flags"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Construct a fan and write it as JSON");
  b->add_option("--kind", build.kind, "Fan kind")
      ->required()
      ->check(CLI::IsMember({"product", "delta", "polystellahedral", "polypermutohedral", "nested", "tlm-blowup"}));
  b->add_option("--cage", build.cage, "Cage, e.g. 2,1");
  b->add_option("--caging", build.caging_file, "Caging JSON file");
  b->add_option("--building-set", build.building_set_file, "Building set JSON file");
  b->add_option("--s", build.s, "Interpolation index for delta fans");
  b->add_option("--out", build.out, "Output path; stdout when omitted");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  v->add_option("--suite", verify.suite, "Suite name")->check(CLI::IsMember(suites));
  v->add_option("--max-A", verify.max_a, "Largest |A| in the sweep")->check(CLI::Range(1, 6));
  v->add_option("--cage", verify.cage, "Single cage instead of a sweep");
  v->add_option("--fan", verify.fan_file, "Validate a fan file");
  v->add_option("--kind", verify.kind, "With --fan and --cage, also compare against this construction");
  v->add_option("--s", verify.s, "Interpolation index for --kind delta");
  v->add_option("--order-policy", verify.policy, "Blow-up order")
      ->check(CLI::IsMember({"deepest-first", "increasing-size"}));
  v->add_option("--seed", verify.seed, "Seed for shuffled subdivision orders");
  v->add_option("--json", verify.json, "Write the reports as JSON ('-' for stdout)");

  CompareArgs compare;
  auto* c = app.add_subcommand("compare", "Compare two fan files");
  c->add_option("first", compare.first, "Fan file")->required();
  c->add_option("second", compare.second, "Fan file")->required();
  c->add_option("--mode", compare.mode, "equal or refines (first refines second)")
      ->check(CLI::IsMember({"equal", "refines"}));

  ConvertArgs convert;
  auto* k = app.add_subcommand("convert", "Rewrite a fan canonically or export a rank function");
  k->add_option("--fan", convert.fan_file, "Fan file to canonicalize");
  k->add_option("--rank", convert.rank_file, "Rank function JSON file");
  k->add_option("--to", convert.to, "rank, h-rep or vertices")->check(CLI::IsMember({"fan", "rank", "h-rep", "vertices"}));
  k->add_flag("--base", convert.base, "Use the base polytope");
  k->add_option("--out", convert.out, "Output path; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*b) return cmd_build(build);
    if (*v) return cmd_verify(verify);
    if (*c) return cmd_compare(compare);
    return cmd_convert(convert);
  } catch (const Error& e) {
    std::cerr << "polyfan: " << e.what() << "\n";
    return e.code() == ErrorCode::kInternalInvariant || e.code() == ErrorCode::kOverflow ? kInvariant : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "polyfan: " << e.what() << "\n";
    return kInvariant;
  }
}
