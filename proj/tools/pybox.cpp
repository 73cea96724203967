// Command-line front end: enumeration, search, verification and
// decomposition of Pythagorean boxes and their faces. All arithmetic lives
// in the library; this file only parses arguments, drives the library and
// streams records. Records go to stdout, diagnostics to stderr. Exit codes:
// 0 success (an expected-empty search counts as success), 1 domain error,
// 2 usage error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pybox/pybox.hpp"

namespace {

using pybox::u64;

pybox::RecordFormat parse_format(const std::string& name) {
  return name == "csv" ? pybox::RecordFormat::Csv : pybox::RecordFormat::Plain;
}

void note_elapsed(const pybox::SearchReport& report) {
  std::cerr << "elapsed-ms=" << report.elapsed_ms << " scope=\"" << report.scope << "\"\n";
}

struct Options {
  u64 max_c = 0;
  u64 max_t = 0;
  u64 bound = 0;
  unsigned jobs = 1;
  int pairs = 1;
  bool oracle = false;
  std::string branch = "both";
  std::string format = "plain";
  u64 w = 0, y = 0, t = 0;
  u64 x = 0, ybox = 0, z = 0;
};

int run(const CLI::App& app, const Options& opt) {
  pybox::RecordEmitter emitter(std::cout, parse_format(opt.format));

  if (app.got_subcommand("triples")) {
    for (const auto& [params, triple] : pybox::enumerate_primitive_triples(opt.max_c)) {
      emitter.emit(pybox::triple_record(params, triple));
    }
    return 0;
  }

  if (app.got_subcommand("quadruples")) {
    const auto quads = opt.oracle ? pybox::brute_force_quadruples(opt.max_t)
                                  : pybox::enumerate_quadruples(opt.max_t);
    for (const auto& q : quads) {
      emitter.emit(pybox::quadruple_record(q, opt.oracle ? "oracle" : "eq5"));
    }
    return 0;
  }

  const CLI::App* boxes = app.get_subcommand("boxes");
  if (boxes->parsed()) {
    if (boxes->got_subcommand("result2")) {
      std::optional<pybox::Result2Branch> branch;
      if (opt.branch == "even") branch = pybox::Result2Branch::EvenM1;
      if (opt.branch == "odd") branch = pybox::Result2Branch::OddM1;
      for (const auto& entry : pybox::enumerate_result2_params(opt.max_t, branch)) {
        const auto pb = pybox::box_from_result2(entry.params);
        const std::string branch_name =
            entry.branch == pybox::Result2Branch::EvenM1 ? "even-m1" : "odd-m1";
        emitter.emit(pybox::box_record(pb, {"result2", branch_name, entry.params}));
      }
      return 0;
    }
    // search-min-t
    const pybox::MinTReport result = opt.pairs == 1
                                         ? pybox::search_min_t_one_primitive_pair(opt.max_t, opt.jobs)
                                         : pybox::search_min_t_two_primitive_pairs(opt.max_t, opt.jobs);
    for (const auto& pb : result.matches) {
      emitter.emit(pybox::box_record(pb, {"search", "", std::nullopt}));
    }
    if (result.witness) emitter.emit(pybox::witness_record(*result.witness));
    emitter.emit(pybox::report_record(opt.pairs == 1 ? "min-t-pairs-1" : "min-t-pairs-2",
                                      "max-t", result.report));
    note_elapsed(result.report);
    return 0;
  }

  const CLI::App* verify = app.get_subcommand("verify");
  if (verify->parsed()) {
    if (verify->got_subcommand("result3")) {
      const pybox::Result3Report result = pybox::verify_result3(opt.bound, opt.jobs);
      for (const auto& pb : result.counterexamples) {
        emitter.emit(pybox::box_record(pb, {"search", "", std::nullopt}));
      }
      emitter.emit(pybox::report_record(
          "result3", "edge", result.report,
          {{"square-base-pbs", std::to_string(result.square_base_boxes)}}));
      note_elapsed(result.report);
      return 0;
    }
    const pybox::LemmaReport result = pybox::verify_lemma1(opt.bound, opt.jobs);
    for (const auto& pair : result.counterexamples) {
      std::cerr << "counterexample r=" << pair.r << " v=" << pair.v << "\n";
    }
    emitter.emit(pybox::report_record("lemma1", "pair", result.report));
    note_elapsed(result.report);
    return 0;
  }

  const CLI::App* decompose = app.get_subcommand("decompose");
  if (decompose->parsed()) {
    if (decompose->got_subcommand("wyt")) {
      emitter.emit(pybox::wyt_record(pybox::decompose_wyt(opt.w, opt.y, opt.t)));
      return 0;
    }
    const auto pb = pybox::as_pythagorean_box(pybox::make_box(opt.x, opt.ybox, opt.z));
    if (!pb) pybox::fail_domain("the box has no integer inner diagonal");
    emitter.emit(pybox::witness_record(pybox::decompose_result1(*pb)));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pythagorean box toolkit: generate, classify and exhaustively verify "
               "integer-edged boxes with integer inner diagonal"};
  app.require_subcommand(1);

  Options opt;
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"plain", "csv"}));
  };
  const auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", opt.jobs, "worker threads; output is identical for any count")
        ->check(CLI::Range(1u, 256u));
  };

  CLI::App* triples = app.add_subcommand("triples", "primitive Pythagorean triples by hypotenuse");
  triples->add_option("--max-c", opt.max_c, "largest hypotenuse")
      ->required()
      ->check(CLI::Range(u64{1}, pybox::kMaxEdge));
  add_format(triples);

  CLI::App* quadruples =
      app.add_subcommand("quadruples", "solutions of x^2 + y^2 + z^2 = t^2");
  quadruples->add_option("--max-t", opt.max_t, "largest inner diagonal")
      ->required()
      ->check(CLI::Range(u64{1}, pybox::kMaxEdge));
  quadruples->add_flag("--oracle", opt.oracle, "use the cubic brute-force scan (t <= 300)");
  add_format(quadruples);

  CLI::App* boxes = app.add_subcommand("boxes", "box generators and searches");
  boxes->require_subcommand(1);
  CLI::App* result2 = boxes->add_subcommand(
      "result2", "boxes with a primitive XZ face from the four-parameter generator");
  result2->add_option("--max-t", opt.max_t, "largest inner diagonal")
      ->required()
      ->check(CLI::Range(u64{1}, pybox::kMaxEdge));
  result2->add_option("--branch", opt.branch, "restrict to one parity branch of M1")
      ->check(CLI::IsMember({"both", "even", "odd"}));
  add_format(result2);
  CLI::App* search = boxes->add_subcommand("search-min-t", "minimal-t searches");
  search->add_option("--max-t", opt.max_t, "largest inner diagonal")
      ->required()
      ->check(CLI::Range(u64{1}, pybox::kMaxEdge));
  search->add_option("--pairs", opt.pairs, "required number of primitive face pairs (1 or 2)")
      ->check(CLI::Range(1, 2));
  add_jobs(search);
  add_format(search);

  CLI::App* verify = app.add_subcommand("verify", "exhaustive verifiers");
  verify->require_subcommand(1);
  CLI::App* result3 = verify->add_subcommand(
      "result3", "no square-base box with integer inner diagonal has a primitive PR face");
  result3->add_option("--bound", opt.bound, "largest edge length scanned")
      ->required()
      ->check(CLI::Range(u64{1}, pybox::kMaxEdge));
  add_jobs(result3);
  add_format(result3);
  CLI::App* lemma1 = verify->add_subcommand(
      "lemma1", "no two positive squares have both sum and difference square");
  lemma1->add_option("--bound", opt.bound, "largest r scanned over pairs v < r")
      ->required()
      ->check(CLI::Range(u64{1}, u64{3037000499}));
  add_jobs(lemma1);
  add_format(lemma1);

  CLI::App* decompose = app.add_subcommand("decompose", "exact decompositions");
  decompose->require_subcommand(1);
  CLI::App* wyt = decompose->add_subcommand(
      "wyt", "split a Pythagorean pair w^2 + y^2 = t^2 (w odd, y even) into delta, M2, N2");
  wyt->add_option("w", opt.w, "odd leg")->required();
  wyt->add_option("y", opt.y, "even leg")->required();
  wyt->add_option("t", opt.t, "hypotenuse")->required();
  add_format(wyt);
  CLI::App* result1 = decompose->add_subcommand(
      "result1", "witness for a box whose XZ and YZ faces are both primitive PRs");
  result1->add_option("x", opt.x, "first even edge")->required();
  result1->add_option("y", opt.ybox, "second even edge")->required();
  result1->add_option("z", opt.z, "shared odd edge")->required();
  add_format(result1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(app, opt);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
