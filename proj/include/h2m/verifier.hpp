#ifndef H2M_VERIFIER_HPP
#define H2M_VERIFIER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "h2m/lattice.hpp"
#include "h2m/structure.hpp"

namespace h2m {

struct Caps {
  std::uint64_t element_cap = kDefaultElementCap;
  std::size_t degree_cap = kDefaultDegreeCap;
};

/// Arithmetic certificate for a non-Hall subgroup: orders, index in the
/// parent and the offending gcd.
struct HallWitness {
  std::uint64_t h_order = 0;
  std::uint64_t m_order = 0;  // the enclosing maximal (0 when not a 2-maximal)
  std::uint64_t index = 0;    // |G : H|
  std::uint64_t gcd = 0;
};

/// Verdict of "every 2-maximal subgroup is a Hall subgroup".
struct HypothesisResult {
  bool holds = true;
  std::optional<HallWitness> witness;  // first failing H in canonical order
};

enum class Applicability {
  PrimaryGroup,
  HypothesisFails,
  SupersolvableBranch,
  MainBranch,
};

std::string applicability_name(Applicability a);

/// Per-group verdict: branch taken and per-conclusion pass/fail with
/// witnesses.
struct TheoremReport {
  std::string name;
  std::uint64_t order = 0;
  std::size_t degree = 0;
  std::vector<unsigned> pi, sigma, tau;
  Applicability applicability = Applicability::PrimaryGroup;
  HypothesisResult hypothesis;

  // supersolvable branch
  struct Squarefree {
    bool pass = false;
  };
  std::optional<Squarefree> squarefree;

  // main branch
  struct Conclusions {
    bool solvable = false;
    bool tower_pass = false;
    std::vector<unsigned> tower_ordering;
    std::optional<std::string> tower_error;  // quotient guard fired
    bool maximals_hall_pass = false;
    std::optional<HallWitness> maximals_witness;
    bool sylows_elementary_abelian_pass = false;
    bool sigma_ge_2_pass = false;
    bool gsigma_in_gaschutz_pass = false;
    std::uint64_t hall_sigma_order = 0;
    std::uint64_t gaschutz_order = 0;
    bool tau_ge_1_pass = false;
    bool residual_is_hall_tau_pass = false;
    std::uint64_t residual_order = 0;
    std::uint64_t tau_part = 0;
  };
  std::optional<Conclusions> conclusions;

  std::optional<std::string> skipped_reason;  // caps exceeded

  /// True iff the group is applicable (main or supersolvable branch)
  /// and some conclusion fails: the critical outcome of a scan.
  bool violation() const;
};

HypothesisResult check_hypothesis(const Lattice& l);

TheoremReport verify_theorem(const PermGroup& g, const std::string& name,
                             const Caps& caps = {});

/// The three witness chains from the unsolvable cases: PSL(2,7) and
/// PSL(2,11) by full lattice enumeration, PSL(5,2) by arithmetic only.
struct PslWitnessReport {
  struct Check {
    std::string name;
    bool pass = false;
    std::uint64_t group_order = 0;
    std::uint64_t m_order = 0;
    std::uint64_t h_order = 0;
    std::uint64_t index = 0;
    std::uint64_t gcd = 0;
  };
  std::vector<Check> checks;
  bool all_pass() const;
};

PslWitnessReport verify_psl_witnesses(const Caps& caps = {});

struct GroupSpec {
  std::string name;
  std::function<PermGroup()> build;
};

/// The built-in corpus driven by `scan`; the 12615-element example only
/// when include_large.
std::vector<GroupSpec> default_corpus(bool include_large = false);

std::vector<TheoremReport> scan_corpus(const std::vector<GroupSpec>& specs,
                                       const Caps& caps = {},
                                       unsigned jobs = 1);

struct ScanSummary {
  std::size_t total = 0;
  std::size_t main_branch = 0;
  std::size_t supersolvable_branch = 0;
  std::size_t hypothesis_fails = 0;
  std::size_t primary = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
};

ScanSummary summarize(const std::vector<TheoremReport>& reports);

}  // namespace h2m

#endif
