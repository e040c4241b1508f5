#include "anagraph/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "json.hpp"

using namespace anagraph;
using testutil::L;

namespace {

RunResult small_result() {
  return run(testutil::dict({"ad", "da", "bd", "db", "adb", "bda"}, "small"));
}

}  // namespace

TEST_CASE("presentation lists relations and missing pairs") {
  RunResult r = small_result();
  PresentationDoc doc = build_presentation(r);
  CHECK(doc.relation_pairs.size() == 3);
  CHECK(doc.missing_pairs.size() == 322);
  CHECK(doc.right_angled_artin);

  std::string text = emit_presentation(r, DocFormat::kText);
  CHECK(text.find("commuting pairs: 3 of 325") != std::string::npos);
  CHECK(text.find("[a,b]") != std::string::npos);
  CHECK(text.find("right-angled Artin") != std::string::npos);
}

TEST_CASE("empty result presentation") {
  RunResult r = run(Dictionary{});
  PresentationDoc doc = build_presentation(r);
  CHECK(doc.relation_pairs.empty());
  CHECK(doc.missing_pairs.size() == 325);
  std::string text = emit_presentation(r, DocFormat::kText);
  CHECK(text.find("commuting pairs: 0 of 325") != std::string::npos);
}

TEST_CASE("presentation json round-trips") {
  RunResult r = small_result();
  std::string json = emit_presentation(r, DocFormat::kJson);
  PresentationDoc parsed = parse_presentation(json);
  CHECK(parsed == build_presentation(r));

  nlohmann::json doc = nlohmann::json::parse(json);
  CHECK(doc.at("schema") == "anagraph.presentation/1");
  CHECK(doc.at("generators").get<std::string>().size() == 26);
  CHECK(doc.at("relations").size() == 3);
}

TEST_CASE("witness table sorts by iteration then pair, residual last") {
  RunResult r = small_result();
  // Forge a residual witness to exercise the "manual" label.
  CommutatorWitness manual = r.witnesses.back();
  manual.iteration = 0;
  r.witnesses.insert(r.witnesses.begin(), manual);

  std::string csv = emit_witness_table(r, TableFormat::kCsv);
  auto first_line = csv.substr(0, csv.find('\n'));
  CHECK(first_line == "iteration,alpha,beta,word1,word2");
  CHECK(csv.find("1,a,d,ad,da") != std::string::npos);
  CHECK(csv.find("2,a,b,adb,bda") != std::string::npos);
  CHECK(csv.find("manual,") != std::string::npos);
  CHECK(csv.rfind("manual,") > csv.find("2,a,b"));  // residual rows trail

  std::string text = emit_witness_table(r, TableFormat::kText);
  CHECK(text.find("word1") != std::string::npos);
  CHECK(text.find("adb") != std::string::npos);
}

TEST_CASE("progress table rows") {
  RunResult r = small_result();
  std::string csv = emit_progress(r, TableFormat::kCsv);
  CHECK(csv == "iteration,anagraphs,cumulative_commutators\n1,3,2\n2,1,3\n3,0,3\n");

  RunResult one = run(testutil::dict({"able", "bale"}));
  CHECK(emit_progress(one, TableFormat::kCsv) ==
        "iteration,anagraphs,cumulative_commutators\n1,1,1\n");

  RunResult empty = run(Dictionary{});
  CHECK(emit_progress(empty, TableFormat::kCsv) == "iteration,anagraphs,cumulative_commutators\n");
  CHECK(emit_progress(empty, TableFormat::kText).find("iteration") != std::string::npos);
}

TEST_CASE("verification report formats") {
  RunResult bad = run(testutil::dict({"abab", "baba"}));
  std::string text = emit_verification(bad, DocFormat::kText);
  CHECK(text.find("all relations implied: no") != std::string::npos);
  CHECK(text.find("abab") != std::string::npos);

  nlohmann::json doc = nlohmann::json::parse(emit_verification(bad, DocFormat::kJson));
  CHECK(doc.at("schema") == "anagraph.verification/1");
  CHECK(doc.at("all_relations_implied") == false);
  REQUIRE(doc.at("failing_pairs").size() == 1);
}

TEST_CASE("witness rows re-validate against their stage") {
  RunResult r = small_result();
  REQUIRE_FALSE(r.witnesses.empty());
  for (const auto& w : r.witnesses) {
    CHECK(check_certificate(w.certificate1, w.stage));
    CHECK(check_certificate(w.certificate2, w.stage));
  }
  std::string audit = emit_certificates(r);
  nlohmann::json doc = nlohmann::json::parse(audit);
  CHECK(doc.at("schema") == "anagraph.certificates/1");
  CHECK(doc.at("witnesses").size() == r.witnesses.size());
  for (const auto& w : doc.at("witnesses")) {
    CHECK(w.contains("certificate1"));
    CHECK(w.at("certificate1").contains("swaps"));
  }
}

TEST_CASE("run_result_to_json is self-consistent") {
  RunResult r = small_result();
  nlohmann::json doc = nlohmann::json::parse(run_result_to_json(r));
  CHECK(doc.at("schema") == "anagraph.result/1");
  CHECK(doc.at("source") == "small");
  CHECK(doc.at("commutators").size() == 3);
  CHECK(doc.at("missing").size() == 322);
  CHECK(doc.at("stats").size() == 3);
  CHECK(doc.at("witnesses").size() == 3);
  CHECK(doc.at("verification").at("all_relations_implied") == true);
}
