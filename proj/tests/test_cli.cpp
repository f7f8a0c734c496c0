#include "doctest.h"
#include "vrlat/family_spec.hpp"
#include "vrlat/report.hpp"
#include "vrlat/verify.hpp"

using namespace vrlat;

namespace {

Subset S(int m, std::initializer_list<int> elems) {
  std::vector<int> v(elems);
  return Subset::from_elements(m, v);
}

std::size_t error_offset(const std::string& text) {
  try {
    parse_family_spec(text);
  } catch (const SpecSyntaxError& e) {
    return e.offset();
  }
  FAIL("expected SpecSyntaxError for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse_family_spec examples") {
  const auto a = parse_family_spec("F(6,3)");
  REQUIRE(a.terms.size() == 1);
  CHECK(std::get<UniformTerm>(a.terms[0]) == UniformTerm{6, 3});

  const auto b = parse_family_spec("F(5,2)+F(5,4)");
  CHECK(b.terms.size() == 2);
  CHECK(materialize(b).size() == 15);

  const auto c = parse_family_spec(" prefix( 4 ; { 1, 2 ,3 } ) ");
  REQUIRE(c.terms.size() == 1);
  CHECK(std::get<PrefixTerm>(c.terms[0]) == PrefixTerm{4, S(4, {1, 2, 3})});
  CHECK(materialize(c) == gen_prefix(4, S(4, {1, 2, 3})));

  CHECK(materialize(parse_family_spec("power(3)")) == gen_power(3));
  CHECK(materialize(parse_family_spec("upto(5,2)")) == gen_upto(5, 2));
  CHECK(parse_family_spec("prefix(3;{})").terms.size() == 1);
}

TEST_CASE("parse errors carry offsets") {
  CHECK(error_offset("") == 0);
  CHECK(error_offset("G(4,2)") == 0);
  CHECK(error_offset("F(4 2)") == 4);
  CHECK(error_offset("F(4,2)+") == 7);
  CHECK(error_offset("F(4,2) x") == 7);
  CHECK_THROWS_AS(parse_family_spec("F(64,2)"), SpecSyntaxError);
  CHECK_THROWS_AS(parse_family_spec("F(4,5)"), SpecSyntaxError);
  CHECK_THROWS_AS(parse_family_spec("prefix(3;{4})"), SpecSyntaxError);
  CHECK_THROWS_AS(parse_family_spec("F(4,2)+F(5,2)"), SpecSyntaxError);
}

TEST_CASE("printing and parsing round-trips") {
  for (const std::string text : {"F(6,3)", "F(5,2)+F(5,4)", "prefix(4;{1,2,3})", "power(5)", "upto(6,2)",
                                 " F( 5 , 1 ) + prefix(5;{ 2,4 }) + power(5)", "prefix(2;{})"}) {
    const auto once = parse_family_spec(text);
    const auto printed = to_string(once);
    CHECK(parse_family_spec(printed) == once);
    CHECK(to_string(parse_family_spec(printed)) == printed);
  }
  CHECK(to_string(parse_family_spec("F(5,2) + F(5,3)")) == "F(5,2)+F(5,3)");
}

TEST_CASE("report emission") {
  Report empty;
  CHECK(emit_report(empty, ReportFormat::Json) == "{\"entries\":[]}");

  Report r;
  r.suite = "uniform";
  ReportEntry e;
  e.spec = "F(4,2)";
  e.scale = 2;
  e.max_dim = 3;
  e.f_vector = {6, 12, 8, 0};
  e.betti = BettiVector{Coefficients::Z2, {0, 0, 1}, 2};
  e.oracle = std::vector<Count>{0, 0, 1};
  e.oracle_name = "uniform_betti2";
  e.match = true;
  e.wall_time_ms = 1.5;
  r.entries.push_back(e);
  const auto json = emit_report(r, ReportFormat::Json);
  CHECK(json.find("\"match\":true") != std::string::npos);
  CHECK(r.all_matched());

  const auto csv = emit_report(r, ReportFormat::Csv);
  CHECK(csv.rfind("spec,scale,max_dim,betti,oracle,match,wall_time_ms\n", 0) == 0);
  CHECK(csv.find("\"F(4,2)\",2,3,0;0;1,0;0;1,true,") != std::string::npos);

  CHECK(emit_report(r, ReportFormat::Text).find("F(4,2)") != std::string::npos);
  const auto no_time = emit_report(r, ReportFormat::Json, EmitOptions{false});
  CHECK(no_time.find("wall_time") == std::string::npos);

  r.entries[0].match = false;
  CHECK_FALSE(r.all_matched());
}

TEST_CASE("homology json") {
  const auto j = homology_json("F(4,2)", 2, Coefficients::Z2, {0, 0, 1}, 2, 2);
  CHECK(j.find("\"betti\":[0,0,1]") != std::string::npos);
  CHECK(j.find("\"coeff\":\"z2\"") != std::string::npos);
  CHECK(j.find("\"chi\":2") != std::string::npos);
  const auto t = homology_json("F(5,2)", 2, Coefficients::Z, {0, 0}, 1, std::nullopt);
  CHECK(t.find("\"chi\":null") != std::string::npos);
}

TEST_CASE("verify suites") {
  VerifyOptions opt;
  opt.m_max = 6;
  opt.threads = 2;
  const auto uniform = run_verify(Suite::Uniform, opt);
  CHECK(uniform.all_matched());
  bool saw63 = false;
  for (const auto& e : uniform.entries) {
    CHECK(e.status == EntryStatus::Ok);
    REQUIRE(e.match.has_value());
    CHECK(*e.match);
    if (e.spec == "F(6,3)") {
      saw63 = true;
      CHECK(e.betti->at(2) == 19);
    }
  }
  CHECK(saw63);

  opt.m_max = 4;
  const auto power = run_verify(Suite::Power, opt);
  CHECK(power.all_matched());
  bool saw4 = false;
  for (const auto& e : power.entries)
    if (e.spec == "power(4)") {
      saw4 = true;
      CHECK(e.betti->at(3) == 9);
    }
  CHECK(saw4);

  opt.m_max = 5;
  const auto skip = run_verify(Suite::Skip, opt);
  CHECK(skip.all_matched());
  bool saw51 = false;
  for (const auto& e : skip.entries)
    if (e.spec == "F(5,1)+F(5,3)") {
      saw51 = true;
      CHECK(e.betti->at(3) == 5);
    }
  CHECK(saw51);
}

TEST_CASE("every entry has a result or a skip reason") {
  VerifyOptions opt;
  opt.m_max = 6;
  opt.max_simplices = 2000;
  const auto r = run_verify(Suite::All, opt);
  std::size_t skipped = 0;
  for (const auto& e : r.entries) {
    if (e.status == EntryStatus::Ok) {
      CHECK(e.betti.has_value());
    } else {
      CHECK_FALSE(e.reason.empty());
      ++skipped;
    }
  }
  CHECK(skipped > 0);
  CHECK(r.entries.size() == suite_instances(Suite::All, 6).size());
}

TEST_CASE("reports are deterministic without timings") {
  VerifyOptions opt;
  opt.m_max = 5;
  opt.threads = 1;
  const auto a = emit_report(run_verify(Suite::All, opt), ReportFormat::Json, EmitOptions{false});
  opt.threads = 4;
  const auto b = emit_report(run_verify(Suite::All, opt), ReportFormat::Json, EmitOptions{false});
  CHECK(a == b);
  CHECK(emit_report(run_verify(Suite::All, opt), ReportFormat::Csv, EmitOptions{false}) ==
        emit_report(run_verify(Suite::All, opt), ReportFormat::Csv, EmitOptions{false}));
}

TEST_CASE("three-layer check") {
  const auto e = run_three_layer_check(5, 1);
  REQUIRE(e.match.has_value());
  CHECK(*e.match);
  CHECK(e.betti->values == std::vector<std::uint64_t>{0, 0, 0, 5});
  CHECK(*run_three_layer_check(6, 1).match);
  CHECK(*run_three_layer_check(6, 2).match);
  CHECK_THROWS_AS(run_three_layer_check(5, 2), Error);
  CHECK_THROWS_AS(run_three_layer_check(3, 1), Error);
}
