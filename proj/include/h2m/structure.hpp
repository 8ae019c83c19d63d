#ifndef H2M_STRUCTURE_HPP
#define H2M_STRUCTURE_HPP

#include <map>
#include <optional>
#include <vector>

#include "h2m/lattice.hpp"

namespace h2m {

/// prime -> exponent factorization of a positive integer.
std::map<unsigned, unsigned> factorize(std::uint64_t n);

std::vector<unsigned> prime_divisors(std::uint64_t n);

/// The p-part of n: the highest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, unsigned p);

/// The partition of pi(G) into sigma (Sylow subgroup of prime order)
/// and tau (Sylow subgroup of order p^2 or more).
struct SigmaTau {
  std::vector<unsigned> sigma;
  std::vector<unsigned> tau;
};

SigmaTau sigma_tau(std::uint64_t order);
inline SigmaTau sigma_tau(const PermGroup& g) { return sigma_tau(g.order()); }

/// gcd(|H|, |G : H|) = 1.
bool is_hall(const Lattice& l, std::uint32_t h);

/// A Sylow p-subgroup: the first lattice subgroup whose order is the
/// full p-part of |G|. Throws InvalidInput when p does not divide |G|,
/// std::logic_error when the lattice has none (enumeration bug).
std::uint32_t sylow_subgroup(const Lattice& l, unsigned p);

/// A Hall S-subgroup: order exactly the product of the p-parts over S.
/// Absence is a legitimate result. Throws InvalidInput unless S is a
/// subset of pi(G).
std::optional<std::uint32_t> hall_subgroup(const Lattice& l,
                                           const std::vector<unsigned>& primes);

bool is_elementary_abelian(const Lattice& l, std::uint32_t h);

bool is_abelian(const Lattice& l, std::uint32_t h);

/// Derived series of subgroup h reaches the trivial subgroup.
bool is_solvable_subgroup(const Lattice& l, std::uint32_t h);
inline bool is_solvable(const Lattice& l) {
  return is_solvable_subgroup(l, l.parent_index);
}

/// Largest normal solvable subgroup; verified to contain every normal
/// solvable subgroup in the lattice.
std::uint32_t solvable_radical(const Lattice& l);

/// Every Sylow subgroup of h is normal in h.
bool is_nilpotent_subgroup(const Lattice& l, std::uint32_t h);
inline bool is_nilpotent(const Lattice& l) {
  return is_nilpotent_subgroup(l, l.parent_index);
}

/// Largest normal nilpotent subgroup; verified to contain every normal
/// nilpotent subgroup in the lattice.
std::uint32_t fitting_subgroup(const Lattice& l);

/// Sylow tower by iterated peeling of a normal Sylow subgroup in
/// quotients; returns the prime ordering that succeeded (smallest-prime
/// first among the successful choices), or nullopt when no ordering
/// works. The quotient degree guard may throw CapExceeded.
std::optional<std::vector<unsigned>> sylow_tower_ordering(
    const Lattice& l, std::size_t degree_cap = kDefaultDegreeCap,
    std::uint64_t element_cap = kDefaultElementCap);

inline bool has_sylow_tower(const Lattice& l) {
  return sylow_tower_ordering(l).has_value();
}

/// Chief factors of prime order, decided on the lattice: a chain of
/// parent-normal subgroups from bottom to top with every step of prime
/// index.
bool is_supersolvable(const Lattice& l);

/// Same criterion for a subgroup (chain of h-normal subgroups).
bool is_supersolvable_subgroup(const Lattice& l, std::uint32_t w);

/// Independent cross-check: every maximal subgroup has prime index
/// (Huppert's criterion).
bool all_maximals_have_prime_index(const Lattice& l);

/// Smallest normal subgroup with supersolvable quotient. Minimality is
/// verified two ways (contained in every qualifying subgroup, equals
/// their intersection); disagreement throws std::logic_error.
std::uint32_t supersolvable_residual(const Lattice& l);

/// All subgroups W with W supersolvable and no pair W <= A < B <= G of
/// prime index; condition (2) checked literally over every pair. When
/// the parent is solvable an empty result throws std::logic_error
/// (Gaschutz subgroups must exist).
std::vector<std::uint32_t> gaschutz_subgroups(const Lattice& l);

/// Condition (2) alone, literal all-pairs form.
bool gaschutz_condition2_literal(const Lattice& l, std::uint32_t w);
/// Condition (2) alone, covering-pairs fast path (equivalent).
bool gaschutz_condition2_covering(const Lattice& l, std::uint32_t w);

}  // namespace h2m

#endif
