#include <doctest.h>

#include <algorithm>
#include <set>

#include "h2m/constructors.hpp"
#include "h2m/report.hpp"

using namespace h2m;

TEST_CASE("check_hypothesis") {
  // S3: both 2-maximal subgroups are trivial, hence Hall
  CHECK(check_hypothesis(enumerate_subgroups(symmetric(3))).holds);
  // A4: the three Z2 inside V4 have index 6 and gcd 2
  auto a4 = check_hypothesis(enumerate_subgroups(alternating(4)));
  CHECK_FALSE(a4.holds);
  REQUIRE(a4.witness.has_value());
  CHECK(a4.witness->h_order == 2);
  CHECK(a4.witness->m_order == 4);
  CHECK(a4.witness->index == 6);
  CHECK(a4.witness->gcd == 2);
  // E25 : Z3 irreducible: the lines of E25 are 2-maximal but not Hall
  auto aff = check_hypothesis(enumerate_subgroups(
      semidirect_affine(5, find_irreducible_element(5, 3))));
  CHECK_FALSE(aff.holds);
  REQUIRE(aff.witness.has_value());
  CHECK(aff.witness->h_order == 5);
  CHECK(aff.witness->m_order == 25);
  CHECK(aff.witness->index == 15);
  CHECK(aff.witness->gcd == 5);
}

TEST_CASE("applicability names") {
  CHECK(applicability_name(Applicability::PrimaryGroup) == "primary-group");
  CHECK(applicability_name(Applicability::HypothesisFails) ==
        "hypothesis-fails");
  CHECK(applicability_name(Applicability::SupersolvableBranch) ==
        "supersolvable-branch");
  CHECK(applicability_name(Applicability::MainBranch) == "main-branch");
}

TEST_CASE("verify_theorem branch resolution") {
  TheoremReport primary = verify_theorem(cyclic(4), "c4");
  CHECK(primary.applicability == Applicability::PrimaryGroup);
  CHECK(primary.pi == std::vector<unsigned>{2});
  CHECK_FALSE(primary.conclusions.has_value());
  CHECK_FALSE(primary.violation());

  TheoremReport ss = verify_theorem(cyclic(30), "c30");
  CHECK(ss.applicability == Applicability::SupersolvableBranch);
  CHECK(ss.sigma == std::vector<unsigned>{2, 3, 5});
  CHECK(ss.tau.empty());
  REQUIRE(ss.squarefree.has_value());
  CHECK(ss.squarefree->pass);
  CHECK_FALSE(ss.violation());

  TheoremReport hf = verify_theorem(cyclic(12), "c12");
  CHECK(hf.applicability == Applicability::HypothesisFails);
  REQUIRE(hf.hypothesis.witness.has_value());
  CHECK(hf.hypothesis.witness->h_order == 2);
  CHECK(hf.hypothesis.witness->index == 6);
  CHECK(hf.hypothesis.witness->gcd == 2);
  CHECK_FALSE(hf.violation());

  CHECK(verify_theorem(psl2(7), "psl2_7").applicability ==
        Applicability::HypothesisFails);
  CHECK(verify_theorem(alternating(5), "a5").applicability ==
        Applicability::HypothesisFails);
  CHECK(verify_theorem(direct_product(symmetric(3), cyclic(5)), "s3xc5")
            .applicability == Applicability::SupersolvableBranch);
}

TEST_CASE("verify_theorem honors the element cap") {
  Caps caps;
  caps.element_cap = 10;
  TheoremReport rep = verify_theorem(symmetric(4), "s4", caps);
  REQUIRE(rep.skipped_reason.has_value());
  CHECK(rep.order == 24);
  CHECK_FALSE(rep.violation());
}

TEST_CASE("psl witnesses") {
  PslWitnessReport rep = verify_psl_witnesses();
  REQUIRE(rep.checks.size() == 3);
  CHECK(rep.all_pass());

  CHECK(rep.checks[0].name == "psl2_7");
  CHECK(rep.checks[0].group_order == 168);
  CHECK(rep.checks[0].m_order == 24);
  CHECK(rep.checks[0].h_order == 12);
  CHECK(rep.checks[0].index == 14);
  CHECK(rep.checks[0].gcd == 2);

  CHECK(rep.checks[1].name == "psl2_11");
  CHECK(rep.checks[1].group_order == 660);
  CHECK(rep.checks[1].m_order == 12);
  CHECK(rep.checks[1].h_order == 6);
  CHECK(rep.checks[1].index == 110);
  CHECK(rep.checks[1].gcd == 2);

  CHECK(rep.checks[2].name == "psl5_2");
  CHECK(rep.checks[2].group_order == 9999360);
  CHECK(rep.checks[2].h_order == 32256);
  CHECK(rep.checks[2].index == 310);
  CHECK(rep.checks[2].gcd == 2);
}

TEST_CASE("default corpus shape") {
  auto specs = default_corpus();
  CHECK(specs.size() == 26);
  std::set<std::string> names;
  for (const auto& s : specs) names.insert(s.name);
  CHECK(names.size() == specs.size());  // labels unique
  CHECK(names.count("psl2_11") == 1);
  CHECK(names.count("paper_example") == 0);
  auto large = default_corpus(true);
  CHECK(large.size() == 28);
  CHECK(large.back().name == "paper_example");
  CHECK(large[large.size() - 2].name == "affine_29_irr15");
}

TEST_CASE("scan over the default corpus") {
  auto reports = scan_corpus(default_corpus());
  ScanSummary s = summarize(reports);
  CHECK(s.total == 26);
  CHECK(s.violations == 0);
  CHECK(s.skipped == 0);
  CHECK(s.primary == 4);  // dihedral_4 and the elementary abelians
  CHECK(s.supersolvable_branch == 9);
  CHECK(s.hypothesis_fails == 13);
  CHECK(s.main_branch == 0);  // the only main-branch group needs --include-large
  // the unsolvable entries all fail the hypothesis
  for (const auto& r : reports)
    if (r.name.rfind("psl2_", 0) == 0 || r.name == "alternating_5")
      CHECK(r.applicability == Applicability::HypothesisFails);
  // sigma and tau partition pi everywhere
  for (const auto& r : reports) {
    std::vector<unsigned> merged = r.sigma;
    merged.insert(merged.end(), r.tau.begin(), r.tau.end());
    std::sort(merged.begin(), merged.end());
    CHECK(merged == r.pi);
  }
  // every supersolvable-branch report carries a square-free verdict
  for (const auto& r : reports)
    if (r.applicability == Applicability::SupersolvableBranch) {
      REQUIRE(r.squarefree.has_value());
      CHECK(r.squarefree->pass);
      CHECK(r.tau.empty());  // square-free <=> pi = sigma
    }
}

TEST_CASE("parallel scan matches sequential scan") {
  auto specs = default_corpus();
  auto seq = scan_corpus(specs, {}, 1);
  auto par = scan_corpus(specs, {}, 4);
  REQUIRE(seq.size() == par.size());
  CHECK(scan_json(seq).dump() == scan_json(par).dump());
}

TEST_CASE("reports are deterministic and JSON mirrors the structs") {
  auto specs = default_corpus();
  auto a = scan_corpus(specs);
  auto b = scan_corpus(specs);
  CHECK(scan_json(a).dump(2) == scan_json(b).dump(2));

  Json j = scan_json(a);
  REQUIRE(j.contains("reports"));
  REQUIRE(j.contains("summary"));
  CHECK(j["reports"].size() == a.size());
  ScanSummary s = summarize(a);
  CHECK(j["summary"]["total"] == s.total);
  CHECK(j["summary"]["violations"] == s.violations);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Json& r = j["reports"][i];
    CHECK(r["name"] == a[i].name);
    CHECK(r["order"] == a[i].order);
    CHECK(r["applicability"] == applicability_name(a[i].applicability));
    CHECK(r["hypothesis"]["holds"] == a[i].hypothesis.holds);
  }
  // text rendering mentions every group
  std::string text = scan_text(a);
  for (const auto& sp : specs) CHECK(text.find(sp.name) != std::string::npos);
}

TEST_CASE("psl witness json") {
  PslWitnessReport rep = verify_psl_witnesses();
  Json j = psl_witnesses_json(rep);
  CHECK(j["all_pass"] == true);
  REQUIRE(j["checks"].size() == 3);
  CHECK(j["checks"][0]["name"] == "psl2_7");
  CHECK(j["checks"][2]["index"] == 310);
  std::string text = psl_witnesses_text(rep);
  CHECK(text.find("all pass") != std::string::npos);
}

TEST_CASE("empty corpus") {
  CHECK(scan_corpus({}).empty());
  CHECK(summarize({}).total == 0);
}
