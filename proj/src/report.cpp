#include "h2m/report.hpp"

#include <sstream>

namespace h2m {

namespace {

Json witness_json(const HallWitness& w) {
  Json j;
  j["h_order"] = w.h_order;
  j["m_order"] = w.m_order;
  j["index"] = w.index;
  j["gcd"] = w.gcd;
  return j;
}

std::string join_primes(const std::vector<unsigned>& ps) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < ps.size(); ++i)
    out << (i ? "," : "") << ps[i];
  out << "}";
  return out.str();
}

const char* pf(bool pass) { return pass ? "pass" : "FAIL"; }

}  // namespace

Json report_json(const TheoremReport& rep) {
  Json j;
  j["name"] = rep.name;
  j["order"] = rep.order;
  j["degree"] = rep.degree;
  j["pi"] = rep.pi;
  j["sigma"] = rep.sigma;
  j["tau"] = rep.tau;
  if (rep.skipped_reason) {
    j["skipped_reason"] = *rep.skipped_reason;
    return j;
  }
  j["applicability"] = applicability_name(rep.applicability);
  Json hyp;
  hyp["holds"] = rep.hypothesis.holds;
  if (rep.hypothesis.witness)
    hyp["witness"] = witness_json(*rep.hypothesis.witness);
  j["hypothesis"] = hyp;
  if (rep.conclusions) {
    const auto& c = *rep.conclusions;
    Json cj;
    Json tower;
    tower["pass"] = c.tower_pass;
    tower["ordering"] = c.tower_ordering;
    if (c.tower_error) tower["error"] = *c.tower_error;
    cj["sylow_tower"] = tower;
    Json mh;
    mh["pass"] = c.maximals_hall_pass;
    if (c.maximals_witness) mh["witness"] = witness_json(*c.maximals_witness);
    cj["maximals_hall"] = mh;
    cj["sylows_elementary_abelian"] = {{"pass", c.sylows_elementary_abelian_pass}};
    cj["sigma_ge_2"] = {{"pass", c.sigma_ge_2_pass}};
    Json gw;
    gw["pass"] = c.gsigma_in_gaschutz_pass;
    gw["hall_sigma_order"] = c.hall_sigma_order;
    gw["gaschutz_order"] = c.gaschutz_order;
    cj["gsigma_in_gaschutz"] = gw;
    cj["tau_ge_1"] = {{"pass", c.tau_ge_1_pass}};
    Json rh;
    rh["pass"] = c.residual_is_hall_tau_pass;
    rh["residual_order"] = c.residual_order;
    rh["tau_part"] = c.tau_part;
    cj["residual_is_hall_tau"] = rh;
    j["conclusions"] = cj;
  }
  if (rep.squarefree) j["squarefree"] = {{"pass", rep.squarefree->pass}};
  return j;
}

Json scan_json(const std::vector<TheoremReport>& reports) {
  Json j;
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  j["reports"] = arr;
  ScanSummary s = summarize(reports);
  Json sj;
  sj["total"] = s.total;
  sj["main_branch"] = s.main_branch;
  sj["supersolvable_branch"] = s.supersolvable_branch;
  sj["hypothesis_fails"] = s.hypothesis_fails;
  sj["primary"] = s.primary;
  sj["skipped"] = s.skipped;
  sj["violations"] = s.violations;
  j["summary"] = sj;
  return j;
}

Json psl_witnesses_json(const PslWitnessReport& rep) {
  Json j;
  Json arr = Json::array();
  for (const auto& c : rep.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["group_order"] = c.group_order;
    cj["m_order"] = c.m_order;
    cj["h_order"] = c.h_order;
    cj["index"] = c.index;
    cj["gcd"] = c.gcd;
    arr.push_back(cj);
  }
  j["checks"] = arr;
  j["all_pass"] = rep.all_pass();
  return j;
}

Json lattice_json(const Lattice& l, const std::string& name) {
  Json j;
  j["name"] = name;
  j["order"] = l.parent_order();
  j["degree"] = l.table->group().degree();
  j["subgroup_count"] = l.subgroups.size();
  j["conjugacy_class_count"] = l.conj_classes.size();
  Json subs = Json::array();
  for (std::uint32_t i = 0; i < l.subgroups.size(); ++i) {
    Json sj;
    sj["index"] = i;
    sj["order"] = l.subgroups[i].order;
    sj["class"] = l.class_of[i];
    sj["normal"] = l.normal_in_parent(i);
    Json gens = Json::array();
    for (std::uint32_t g : l.subgroups[i].generator_ranks)
      gens.push_back(l.table->element(g).cycle_string());
    sj["generators"] = gens;
    subs.push_back(sj);
  }
  j["subgroups"] = subs;
  Json hs = Json::array();
  for (const auto& [a, b] : l.hasse) hs.push_back(Json::array({a, b}));
  j["hasse"] = hs;
  return j;
}

std::string report_text(const TheoremReport& rep) {
  std::ostringstream out;
  out << "group " << rep.name << ": order " << rep.order << ", degree "
      << rep.degree << "\n";
  out << "  pi=" << join_primes(rep.pi) << " sigma=" << join_primes(rep.sigma)
      << " tau=" << join_primes(rep.tau) << "\n";
  if (rep.skipped_reason) {
    out << "  skipped: " << *rep.skipped_reason << "\n";
    return out.str();
  }
  out << "  applicability: " << applicability_name(rep.applicability) << "\n";
  out << "  hypothesis (every 2-maximal is Hall): "
      << (rep.hypothesis.holds ? "holds" : "fails");
  if (rep.hypothesis.witness) {
    const auto& w = *rep.hypothesis.witness;
    out << "  [witness: |H|=" << w.h_order << " inside |M|=" << w.m_order
        << ", index " << w.index << ", gcd " << w.gcd << "]";
  }
  out << "\n";
  if (rep.squarefree)
    out << "  squarefree order: " << pf(rep.squarefree->pass) << "\n";
  if (rep.conclusions) {
    const auto& c = *rep.conclusions;
    out << "  solvable: " << pf(c.solvable) << "\n";
    out << "  (1) sylow tower: ";
    if (c.tower_error)
      out << "error (" << *c.tower_error << ")";
    else {
      out << pf(c.tower_pass);
      if (c.tower_pass) {
        out << "  ordering";
        for (unsigned p : c.tower_ordering) out << " " << p;
      }
    }
    out << "\n";
    out << "  (1) maximal subgroups Hall: " << pf(c.maximals_hall_pass);
    if (c.maximals_witness) {
      const auto& w = *c.maximals_witness;
      out << "  [witness: |M|=" << w.h_order << ", index " << w.index
          << ", gcd " << w.gcd << "]";
    }
    out << "\n";
    out << "  sylows elementary abelian: "
        << pf(c.sylows_elementary_abelian_pass) << "\n";
    out << "  (2) |sigma| >= 2: " << pf(c.sigma_ge_2_pass) << "\n";
    out << "  (2) Hall sigma-subgroup in Gaschutz subgroup: "
        << pf(c.gsigma_in_gaschutz_pass) << "  [|G_sigma|="
        << c.hall_sigma_order << ", |W|=" << c.gaschutz_order << "]\n";
    out << "  (3) |tau| >= 1: " << pf(c.tau_ge_1_pass) << "\n";
    out << "  (3) supersolvable residual = Hall tau-subgroup: "
        << pf(c.residual_is_hall_tau_pass) << "  [|residual|="
        << c.residual_order << ", tau-part=" << c.tau_part << "]\n";
  }
  return out.str();
}

std::string scan_text(const std::vector<TheoremReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) out << report_text(r);
  ScanSummary s = summarize(reports);
  out << "scan summary: " << s.total << " groups, " << s.main_branch
      << " main-branch, " << s.supersolvable_branch << " supersolvable, "
      << s.hypothesis_fails << " hypothesis-fails, " << s.primary
      << " primary, " << s.skipped << " skipped, " << s.violations
      << " violations\n";
  return out.str();
}

std::string psl_witnesses_text(const PslWitnessReport& rep) {
  std::ostringstream out;
  for (const auto& c : rep.checks)
    out << c.name << ": " << pf(c.pass) << "  |G|=" << c.group_order
        << " |M|=" << c.m_order << " |H|=" << c.h_order << " index=" << c.index
        << " gcd=" << c.gcd << "\n";
  out << "psl witnesses: " << (rep.all_pass() ? "all pass" : "FAILURES")
      << "\n";
  return out.str();
}

std::string lattice_text(const Lattice& l, const std::string& name) {
  std::ostringstream out;
  out << "lattice of " << name << ": order " << l.parent_order() << ", "
      << l.subgroups.size() << " subgroups, " << l.conj_classes.size()
      << " conjugacy classes\n";
  for (std::uint32_t i = 0; i < l.subgroups.size(); ++i) {
    const auto& s = l.subgroups[i];
    out << "  [" << i << "] order " << s.order << " class " << l.class_of[i]
        << (l.normal_in_parent(i) ? " normal" : "") << "  gens:";
    if (s.generator_ranks.empty()) out << " ()";
    for (std::uint32_t g : s.generator_ranks)
      out << " " << l.table->element(g).cycle_string();
    out << "\n";
  }
  return out.str();
}

}  // namespace h2m
