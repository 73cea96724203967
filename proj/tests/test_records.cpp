#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "pybox/records.hpp"

using namespace pybox;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("golden records for the two minimal generated boxes") {
  const Result2Params small(2, 1, 2, 3);
  const Result2Params big(7, 4, 4, 9);
  const std::string rendered =
      render_plain(box_record(box_from_result2(small), {"result2", "even-m1", small})) + "\n" +
      render_plain(box_record(box_from_result2(big), {"result2", "odd-m1", big})) + "\n";
  CHECK(rendered == read_file(std::string(PYBOX_GOLDEN_DIR) + "/minimal_boxes.txt"));
}

TEST_CASE("plain rendering skips absent fields") {
  const auto pb = as_pythagorean_box(make_box(4, 12, 3));
  REQUIRE(pb.has_value());
  const OutputRecord rec = box_record(*pb, {"search", "", std::nullopt});
  // s and u are irrational for this box, so only w appears as an integer.
  CHECK(render_plain(rec) ==
        "box x=4 y=12 z=3 t=13 w=5 s2=160 u2=153 w2=25 source=search");
}

TEST_CASE("csv rendering keeps every column") {
  const Result2Params p(2, 1, 2, 3);
  const OutputRecord rec = box_record(box_from_result2(p), {"result2", "even-m1", p});
  CHECK(render_csv_header(rec) ==
        "kind,x,y,z,t,s,u,w,s2,u2,w2,source,branch,M1,N1,N2,M2");
  CHECK(render_csv_row(rec) ==
        "box,4,12,3,13,,,5,160,153,25,result2,even-m1,2,1,2,3");
}

TEST_CASE("report records") {
  SearchReport report;
  report.bound = 1000;
  report.count = 0;
  CHECK(render_plain(report_record("lemma1", "pair", report)) ==
        "report search=lemma1 bound-kind=pair bound=1000 count=0");

  report.count = 5;
  report.min_t = 13;
  CHECK(render_plain(report_record("min-t-pairs-1", "max-t", report)) ==
        "report search=min-t-pairs-1 bound-kind=max-t bound=1000 count=5 min-t=13");

  report.count = 0;
  report.min_t.reset();
  CHECK(render_plain(report_record("result3", "edge", report, {{"square-base-pbs", "7"}})) ==
        "report search=result3 bound-kind=edge bound=1000 count=0 square-base-pbs=7");
}

TEST_CASE("witness and wyt records") {
  CHECK(render_plain(witness_record(Result1Witness{2, 1, 3, 2, 1})) ==
        "witness M1=2 N1=1 M2=3 N2=2 delta=1");
  CHECK(render_plain(wyt_record(WytParts{3, 3, 2})) == "witness M2=3 N2=2 delta=3");
}

TEST_CASE("triple and quadruple records") {
  CHECK(render_plain(triple_record(TripleParams(2, 1), Triple{4, 3, 5})) ==
        "triple M=2 N=1 a=4 b=3 c=5");
  CHECK(render_plain(quadruple_record(Quadruple{2, 2, 1, 3}, "eq5")) ==
        "quadruple x=2 y=2 z=1 t=3 source=eq5");
}

TEST_CASE("csv emitter writes a header whenever the kind changes") {
  std::ostringstream out;
  RecordEmitter emitter(out, RecordFormat::Csv);
  emitter.emit(quadruple_record(Quadruple{2, 2, 1, 3}, "eq5"));
  emitter.emit(quadruple_record(Quadruple{4, 4, 7, 9}, "eq5"));
  SearchReport report;
  report.bound = 9;
  report.count = 2;
  emitter.emit(report_record("min-t-pairs-1", "max-t", report));
  CHECK(out.str() ==
        "kind,x,y,z,t,source\n"
        "quadruple,2,2,1,3,eq5\n"
        "quadruple,4,4,7,9,eq5\n"
        "kind,search,bound-kind,bound,count,min-t\n"
        "report,min-t-pairs-1,max-t,9,2,\n");
}
