#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "simulprime/output.hpp"

using namespace simulprime;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    out.push_back(line);
  }
  return out;
}

OutputRecord wilson_record(unsigned long p) {
  const Form form = make_form("wilson");
  return record_for(form, p, form.eval(p));
}

}  // namespace

TEST_CASE("format names parse or fail loudly") {
  CHECK(parse_format("table") == OutputFormat::table);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK_THROWS_AS(parse_format("yaml"), DomainError);
  CHECK_THROWS_AS(parse_format(""), DomainError);
  CHECK_THROWS_AS(parse_format("JSON"), DomainError);
}

TEST_CASE("record captures the evaluated instance") {
  const OutputRecord rec = wilson_record(7);
  CHECK(rec.base == 7);
  REQUIRE(rec.targets.size() == 1);
  CHECK(rec.targets[0] == 7);
  CHECK(rec.form_id == "wilson");
  CHECK(rec.verdict);
  REQUIRE(rec.residue.has_value());
  CHECK(rec.residue->is_zero());
  CHECK(rec.reason == "ok");
  CHECK_FALSE(rec.witness.has_value());

  const Form quad = make_form("quad");
  const OutputRecord qrec = record_for(quad, 5, quad.eval(5));
  REQUIRE(qrec.targets.size() == 4);
  CHECK(qrec.targets[0] == 5);
  CHECK(qrec.targets[3] == 13);
}

TEST_CASE("csv rows are headed and stable") {
  std::vector<OutputRecord> recs = {wilson_record(7), wilson_record(8)};
  const auto lines = lines_of(render_records(recs, OutputFormat::csv));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "p,targets,form,verdict,residue,modulus,reason");
  CHECK(lines[1] == "7,7,wilson,true,0,7,ok");
  CHECK(lines[2] == "8,8,wilson,false,1,8,ok");  // (7!+1) mod 8 = 1
}

TEST_CASE("csv reduced residues match the library") {
  const OutputRecord rec = wilson_record(8);
  REQUIRE(rec.residue.has_value());
  const auto lines = lines_of(render_records({rec}, OutputFormat::csv));
  REQUIRE(lines.size() == 2);
  const std::string expected = "8,8,wilson,false," +
                               rec.residue->value().get_str() + ",8,ok";
  CHECK(lines[1] == expected);
}

TEST_CASE("json emits one object per line with string integers") {
  std::vector<OutputRecord> recs = {wilson_record(7)};
  recs[0].witness = Int("3628801");  // pretend 10! + 1 came back as a witness
  const auto lines = lines_of(render_records(recs, OutputFormat::json));
  REQUIRE(lines.size() == 1);

  const auto j = nlohmann::json::parse(lines[0]);
  CHECK(j["p"] == "7");
  CHECK(j["p"].is_string());
  CHECK(j["targets"] == nlohmann::json::array({"7"}));
  CHECK(j["form"] == "wilson");
  CHECK(j["verdict"] == true);
  CHECK(j["verdict"].is_boolean());
  CHECK(j["residue"] == "0");
  CHECK(j["modulus"] == "7");
  CHECK(j["reason"] == "ok");
  CHECK(j["witness"] == "3628801");
  CHECK(j["witness"].is_string());

  // no witness, no key
  const auto bare = nlohmann::json::parse(
      lines_of(render_records({wilson_record(7)}, OutputFormat::json))[0]);
  CHECK_FALSE(bare.contains("witness"));
}

TEST_CASE("table shows dashes for absent fields") {
  OutputRecord rec = wilson_record(7);
  rec.residue.reset();
  const auto lines = lines_of(render_records({rec}, OutputFormat::table));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("p", 0) == 0);
  CHECK(lines[0].find("witness") == std::string::npos);
  CHECK(lines[1].find("-") != std::string::npos);

  // a witness anywhere adds the column for every row
  OutputRecord with = wilson_record(7);
  with.witness = Int(25);
  const auto wlines =
      lines_of(render_records({with, wilson_record(8)}, OutputFormat::table));
  REQUIRE(wlines.size() == 3);
  CHECK(wlines[0].find("witness") != std::string::npos);
  CHECK(wlines[1].find("25") != std::string::npos);

  // padding never trails a line
  for (const std::string& line : wlines) {
    REQUIRE_FALSE(line.empty());
    CHECK(line.back() != ' ');
  }
}

TEST_CASE("verification reports render in all three formats") {
  VerificationReport report;
  report.form_id = "twin-b";
  report.pattern = TuplePattern::parse("0,2");
  report.lo = 3;
  report.hi = 99;
  report.checked = 49;
  report.jobs = 2;
  report.elapsed_ms = 1.25;
  report.mismatches.push_back({Natural(15), true, false});

  const std::string table = render_report(report, OutputFormat::table);
  CHECK(table.find("form        twin-b\n") != std::string::npos);
  CHECK(table.find("range       3..99\n") != std::string::npos);
  CHECK(table.find("mismatches  1\n") != std::string::npos);
  CHECK(table.find("mismatch p=15 form=true oracle=false\n") !=
        std::string::npos);

  const auto j = nlohmann::json::parse(render_report(report, OutputFormat::json));
  CHECK(j["form"] == "twin-b");
  CHECK(j["lo"] == "3");
  CHECK(j["checked"] == 49);
  CHECK(j["ok"] == false);
  REQUIRE(j["mismatches"].size() == 1);
  CHECK(j["mismatches"][0]["p"] == "15");
  CHECK(j["mismatches"][0]["form"] == true);
  CHECK(j["mismatches"][0]["oracle"] == false);

  const auto csv = lines_of(render_report(report, OutputFormat::csv));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == "p,form_verdict,oracle_verdict");
  CHECK(csv[1] == "15,true,false");

  report.mismatches.clear();
  const auto clean =
      nlohmann::json::parse(render_report(report, OutputFormat::json));
  CHECK(clean["ok"] == true);
  CHECK(clean["mismatches"].empty());
}

TEST_CASE("bench ratios stay finite even against a free sieve") {
  BenchRow row;
  row.form_id = "twin-a";
  row.lo = 3;
  row.hi = 1000;
  row.candidates = 499;
  row.hits = 35;
  row.form_ms = 12.5;
  row.sieve_ms = 0.0;  // too fast to measure

  const auto j =
      nlohmann::json::parse(lines_of(render_bench({row}, OutputFormat::json))[0]);
  CHECK(j["form"] == "twin-a");
  CHECK(j["candidates"] == 499);
  CHECK(j["ratio"].is_number());
  CHECK(j["ratio"].get<double>() > 1000.0);  // clamped denominator, huge ratio

  row.sieve_ms = 2.5;
  const auto csv = lines_of(render_bench({row}, OutputFormat::csv));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == "form,lo,hi,candidates,hits,form_ms,sieve_ms,ratio");
  CHECK(csv[1] == "twin-a,3,1000,499,35,12.500,2.500,5.000");

  const auto table = lines_of(render_bench({row}, OutputFormat::table));
  REQUIRE(table.size() == 2);
  CHECK(table[0].rfind("form", 0) == 0);
  CHECK(table[0].find("ratio") != std::string::npos);
  CHECK(table[1].find("3..1000") != std::string::npos);
}

TEST_CASE("registry listing renders and quotes commas") {
  const auto& families = form_families();

  const std::string csv = render_families(families, OutputFormat::csv);
  const auto lines = lines_of(csv);
  CHECK(lines[0] == "id,kind,pattern,domain,source");
  CHECK(lines.size() == families.size() + 1);
  // the simionov domain contains a comma, so CSV must quote it
  CHECK(csv.find("\"2 ≤ p, 1 ≤ k ≤ p\"") != std::string::npos);

  for (const std::string& line : lines_of(render_families(
           families, OutputFormat::json))) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("id"));
    CHECK(j.contains("source"));
  }

  const auto table = lines_of(render_families(families, OutputFormat::table));
  CHECK(table.size() == families.size() + 1);
  // aligned despite multi-byte ≤ characters: no line ends in padding
  for (const std::string& line : table) {
    REQUIRE_FALSE(line.empty());
    CHECK(line.back() != ' ');
  }
}
