#include "h2m/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "h2m/constructors.hpp"

namespace h2m {

std::string applicability_name(Applicability a) {
  switch (a) {
    case Applicability::PrimaryGroup: return "primary-group";
    case Applicability::HypothesisFails: return "hypothesis-fails";
    case Applicability::SupersolvableBranch: return "supersolvable-branch";
    case Applicability::MainBranch: return "main-branch";
  }
  return "?";
}

bool TheoremReport::violation() const {
  if (applicability == Applicability::SupersolvableBranch)
    return squarefree && !squarefree->pass;
  if (applicability != Applicability::MainBranch || !conclusions) return false;
  const auto& c = *conclusions;
  bool tower_failed = !c.tower_pass && !c.tower_error;
  return !c.solvable || tower_failed || !c.maximals_hall_pass ||
         !c.sylows_elementary_abelian_pass || !c.sigma_ge_2_pass ||
         !c.gsigma_in_gaschutz_pass || !c.tau_ge_1_pass ||
         !c.residual_is_hall_tau_pass;
}

namespace {

HallWitness make_witness(const Lattice& l, std::uint32_t h, std::uint32_t m) {
  std::uint64_t ho = l.subgroups[h].order;
  std::uint64_t idx = l.parent_order() / ho;
  return {ho, m == UINT32_MAX ? 0 : l.subgroups[m].order, idx,
          std::gcd(ho, idx)};
}

}  // namespace

HypothesisResult check_hypothesis(const Lattice& l) {
  for (const auto& [h, m] : two_maximals(l))
    if (!is_hall(l, h)) return {false, make_witness(l, h, m)};
  return {true, std::nullopt};
}

TheoremReport verify_theorem(const PermGroup& g, const std::string& name,
                             const Caps& caps) {
  TheoremReport rep;
  rep.name = name;
  rep.degree = g.degree();
  rep.order = g.order();
  rep.pi = prime_divisors(rep.order);
  auto st = sigma_tau(rep.order);
  rep.sigma = st.sigma;
  rep.tau = st.tau;

  Lattice l;
  try {
    l = enumerate_subgroups(g, caps.element_cap);
  } catch (const CapExceeded& e) {
    rep.skipped_reason = e.what();
    return rep;
  }

  rep.hypothesis = check_hypothesis(l);
  if (rep.pi.size() <= 1) {
    rep.applicability = Applicability::PrimaryGroup;
    return rep;
  }
  if (!rep.hypothesis.holds) {
    rep.applicability = Applicability::HypothesisFails;
    return rep;
  }
  if (is_supersolvable(l)) {
    rep.applicability = Applicability::SupersolvableBranch;
    bool squarefree = rep.tau.empty();
    rep.squarefree = TheoremReport::Squarefree{squarefree};
    return rep;
  }

  rep.applicability = Applicability::MainBranch;
  TheoremReport::Conclusions c;
  c.solvable = is_solvable(l);

  try {
    if (auto ordering = sylow_tower_ordering(l, caps.degree_cap,
                                             caps.element_cap)) {
      c.tower_pass = true;
      c.tower_ordering = *ordering;
    }
  } catch (const CapExceeded& e) {
    c.tower_error = e.what();  // indeterminate, not a failure verdict
  }

  c.maximals_hall_pass = true;
  for (std::uint32_t m : maximal_subgroups_of(l, l.parent_index))
    if (!is_hall(l, m)) {
      c.maximals_hall_pass = false;
      c.maximals_witness = make_witness(l, m, UINT32_MAX);
      break;
    }

  c.sylows_elementary_abelian_pass = true;
  for (unsigned p : rep.pi)
    if (!is_elementary_abelian(l, sylow_subgroup(l, p))) {
      c.sylows_elementary_abelian_pass = false;
      break;
    }

  c.sigma_ge_2_pass = rep.sigma.size() >= 2;

  // G_sigma <= W, existentially over both conjugacy classes: fix a Hall
  // sigma-subgroup, search all Gaschutz subgroups, then try the next.
  {
    auto gasch = gaschutz_subgroups(l);
    std::uint64_t sigma_part = 1;
    for (unsigned p : rep.sigma) sigma_part *= p_part(rep.order, p);
    for (std::uint32_t hs = 0;
         hs < l.subgroups.size() && !c.gsigma_in_gaschutz_pass; ++hs) {
      if (l.subgroups[hs].order != sigma_part) continue;
      if (c.hall_sigma_order == 0) c.hall_sigma_order = sigma_part;
      for (std::uint32_t w : gasch)
        if (l.contains(hs, w)) {
          c.gsigma_in_gaschutz_pass = true;
          c.hall_sigma_order = l.subgroups[hs].order;
          c.gaschutz_order = l.subgroups[w].order;
          break;
        }
    }
  }

  c.tau_ge_1_pass = !rep.tau.empty();

  {
    std::uint32_t r = supersolvable_residual(l);
    c.residual_order = l.subgroups[r].order;
    c.tau_part = 1;
    for (unsigned p : rep.tau) c.tau_part *= p_part(rep.order, p);
    c.residual_is_hall_tau_pass =
        c.residual_order == c.tau_part && is_hall(l, r);
  }

  rep.conclusions = std::move(c);
  return rep;
}

bool PslWitnessReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

PslWitnessReport verify_psl_witnesses(const Caps& caps) {
  PslWitnessReport rep;

  auto lattice_check = [&](const char* name, unsigned q,
                           std::uint64_t m_order, std::uint64_t h_order) {
    PslWitnessReport::Check chk;
    chk.name = name;
    PermGroup g = psl2(q);
    chk.group_order = g.order();
    Lattice l = enumerate_subgroups(g, caps.element_cap);
    for (const auto& [h, m] : two_maximals(l)) {
      if (l.subgroups[m].order != m_order || l.subgroups[h].order != h_order)
        continue;
      chk.m_order = m_order;
      chk.h_order = h_order;
      chk.index = chk.group_order / h_order;
      chk.gcd = std::gcd(h_order, chk.index);
      chk.pass = chk.gcd > 1;  // a genuine non-Hall 2-maximal chain
      break;
    }
    rep.checks.push_back(chk);
  };

  lattice_check("psl2_7", 7, 24, 12);
  lattice_check("psl2_11", 11, 12, 6);

  // PSL(5,2): order/index arithmetic only
  {
    PslWitnessReport::Check chk;
    chk.name = "psl5_2";
    std::uint64_t order = 1;
    for (unsigned i = 0; i < 5; ++i) order *= (1u << 5) - (1u << i);
    chk.group_order = order;               // 9999360
    chk.m_order = 64 * 6 * 168;            // 2^6 : (S3 x PSL(3,2))
    chk.h_order = 64 * 3 * 168;            // 2^6 : (Z3 x PSL(3,2))
    chk.index = order / chk.h_order;
    chk.gcd = std::gcd(chk.h_order, chk.index);
    chk.pass = chk.group_order == 9999360 && chk.h_order == 32256 &&
               chk.index == 310 && chk.index == 2ull * 5 * 31 && chk.gcd == 2;
    rep.checks.push_back(chk);
  }
  return rep;
}

std::vector<GroupSpec> default_corpus(bool include_large) {
  std::vector<GroupSpec> specs;
  auto add = [&](std::string name, std::function<PermGroup()> build) {
    specs.push_back({std::move(name), std::move(build)});
  };
  for (unsigned n : {6u, 12u, 15u, 30u, 60u, 105u})
    add("cyclic_" + std::to_string(n), [n] { return cyclic(n); });
  for (unsigned n : {3u, 4u, 5u, 6u, 10u, 15u})
    add("dihedral_" + std::to_string(n), [n] { return dihedral(n); });
  for (unsigned n : {3u, 4u})
    add("symmetric_" + std::to_string(n), [n] { return symmetric(n); });
  for (unsigned n : {4u, 5u})
    add("alternating_" + std::to_string(n), [n] { return alternating(n); });
  for (unsigned p : {2u, 3u, 5u})
    add("elementary_abelian_" + std::to_string(p) + "_2",
        [p] { return elementary_abelian(p, 2); });
  for (unsigned q : {5u, 7u, 11u})
    add("psl2_" + std::to_string(q), [q] { return psl2(q); });
  // affine semidirect products E_{p^2} . <M>
  add("affine_5_rot4",
      [] { return semidirect_affine(5, Matrix2p{5, 0, 4, 1, 0}); });
  add("affine_5_irr3",
      [] { return semidirect_affine(5, find_irreducible_element(5, 3)); });
  add("affine_7_diag3",
      [] { return semidirect_affine(7, Matrix2p{7, 2, 0, 0, 4}); });
  add("product_s3_c5", [] { return direct_product(symmetric(3), cyclic(5)); });
  if (include_large) {
    add("affine_29_irr15",
        [] { return semidirect_affine(29, find_irreducible_element(29, 15)); });
    add("paper_example", [] { return paper_example(); });
  }
  return specs;
}

std::vector<TheoremReport> scan_corpus(const std::vector<GroupSpec>& specs,
                                       const Caps& caps, unsigned jobs) {
  std::vector<TheoremReport> reports(specs.size());
  auto work = [&](std::size_t i) {
    try {
      reports[i] = verify_theorem(specs[i].build(), specs[i].name, caps);
    } catch (const CapExceeded& e) {
      reports[i].name = specs[i].name;
      reports[i].skipped_reason = e.what();
    }
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < specs.size();
             i = next.fetch_add(1))
          work(i);
      });
    for (auto& t : pool) t.join();
  }
  return reports;
}

ScanSummary summarize(const std::vector<TheoremReport>& reports) {
  ScanSummary s;
  s.total = reports.size();
  for (const auto& r : reports) {
    if (r.skipped_reason) {
      ++s.skipped;
      continue;
    }
    switch (r.applicability) {
      case Applicability::PrimaryGroup: ++s.primary; break;
      case Applicability::HypothesisFails: ++s.hypothesis_fails; break;
      case Applicability::SupersolvableBranch: ++s.supersolvable_branch; break;
      case Applicability::MainBranch: ++s.main_branch; break;
    }
    if (r.violation()) ++s.violations;
  }
  return s;
}

}  // namespace h2m
