#include "h2m/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace h2m {

std::map<unsigned, unsigned> factorize(std::uint64_t n) {
  std::map<unsigned, unsigned> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[static_cast<unsigned>(p)];
      n /= p;
    }
  if (n > 1) ++out[static_cast<unsigned>(n)];
  return out;
}

std::vector<unsigned> prime_divisors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  return part;
}

SigmaTau sigma_tau(std::uint64_t order) {
  SigmaTau st;
  for (const auto& [p, e] : factorize(order))
    (e == 1 ? st.sigma : st.tau).push_back(p);
  return st;
}

bool is_hall(const Lattice& l, std::uint32_t h) {
  std::uint64_t ho = l.subgroups[h].order;
  return std::gcd(ho, l.parent_order() / ho) == 1;
}

std::uint32_t sylow_subgroup(const Lattice& l, unsigned p) {
  std::uint64_t n = l.parent_order();
  if (n % p != 0) throw InvalidInput("sylow_subgroup: p does not divide |G|");
  std::uint64_t target = p_part(n, p);
  for (std::uint32_t i = 0; i < l.subgroups.size(); ++i)
    if (l.subgroups[i].order == target) return i;
  throw std::logic_error("Sylow subgroup missing from lattice (enumeration bug)");
}

std::optional<std::uint32_t> hall_subgroup(const Lattice& l,
                                           const std::vector<unsigned>& primes) {
  std::uint64_t n = l.parent_order();
  std::uint64_t target = 1;
  for (unsigned p : primes) {
    if (n % p != 0) throw InvalidInput("hall_subgroup: prime outside pi(G)");
    target *= p_part(n, p);
  }
  for (std::uint32_t i = 0; i < l.subgroups.size(); ++i)
    if (l.subgroups[i].order == target) return i;
  return std::nullopt;
}

bool is_abelian(const Lattice& l, std::uint32_t h) {
  const auto& gens = l.subgroups[h].generator_ranks;
  for (std::uint32_t a : gens)
    for (std::uint32_t b : gens)
      if (l.table->mult(a, b) != l.table->mult(b, a)) return false;
  return true;
}

bool is_elementary_abelian(const Lattice& l, std::uint32_t h) {
  const auto& sg = l.subgroups[h];
  if (sg.order == 1) return true;
  auto f = factorize(sg.order);
  if (f.size() != 1) return false;
  if (!is_abelian(l, h)) return false;
  unsigned p = f.begin()->first;
  // abelian with all generators of order p => exponent p
  for (std::uint32_t g : sg.generator_ranks) {
    std::uint32_t x = g;
    unsigned ord = 1;
    while (x != 0) {
      x = l.table->mult(x, g);
      ++ord;
    }
    if (ord != p) return false;
  }
  return true;
}

bool is_solvable_subgroup(const Lattice& l, std::uint32_t h) {
  std::uint32_t cur = h;
  while (true) {
    if (l.subgroups[cur].order == 1) return true;
    std::uint32_t next = derived_subgroup_in(l, cur);
    if (next == cur) return false;
    cur = next;
  }
}

namespace {

std::vector<std::uint32_t> parent_normal_subgroups(const Lattice& l) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < l.subgroups.size(); ++i)
    if (l.normal_in_parent(i)) out.push_back(i);
  return out;
}

std::uint32_t largest_normal_with(const Lattice& l,
                                  bool (*pred)(const Lattice&, std::uint32_t),
                                  const char* what) {
  std::vector<std::uint32_t> hits;
  for (std::uint32_t i : parent_normal_subgroups(l))
    if (pred(l, i)) hits.push_back(i);
  // the trivial subgroup always qualifies
  std::uint32_t best = hits.front();
  for (std::uint32_t i : hits)
    if (l.subgroups[i].order > l.subgroups[best].order) best = i;
  for (std::uint32_t i : hits)
    if (!l.contains(i, best))
      throw std::logic_error(std::string(what) +
                             ": largest candidate does not contain them all");
  return best;
}

}  // namespace

std::uint32_t solvable_radical(const Lattice& l) {
  return largest_normal_with(l, &is_solvable_subgroup, "solvable_radical");
}

bool is_nilpotent_subgroup(const Lattice& l, std::uint32_t h) {
  std::uint64_t ho = l.subgroups[h].order;
  for (unsigned p : prime_divisors(ho)) {
    std::uint64_t target = p_part(ho, p);
    bool found = false;
    for (std::uint32_t i = 0; i < l.subgroups.size() && !found; ++i)
      if (l.subgroups[i].order == target && l.contains(i, h) &&
          is_normal(l, i, h))
        found = true;
    if (!found) return false;
  }
  return true;
}

std::uint32_t fitting_subgroup(const Lattice& l) {
  return largest_normal_with(l, &is_nilpotent_subgroup, "fitting_subgroup");
}

std::optional<std::vector<unsigned>> sylow_tower_ordering(
    const Lattice& l, std::size_t degree_cap, std::uint64_t element_cap) {
  auto primes = prime_divisors(l.parent_order());
  if (primes.size() <= 1) return primes;
  for (unsigned p : primes) {
    std::uint32_t s = sylow_subgroup(l, p);
    if (!l.normal_in_parent(s)) continue;
    PermGroup q = quotient(l, s, degree_cap);
    Lattice lq = enumerate_subgroups(q, element_cap);
    if (auto rest = sylow_tower_ordering(lq, degree_cap, element_cap)) {
      rest->insert(rest->begin(), p);
      return rest;
    }
  }
  return std::nullopt;
}

namespace {

// True iff `top` is reachable from `from` through a chain of
// `normals`-members with every step of prime index.
bool prime_step_reachable(const Lattice& l,
                          const std::vector<std::uint32_t>& normals,
                          std::uint32_t from, std::uint32_t top) {
  std::set<std::uint32_t> reached{from};
  bool grew = true;
  while (grew) {
    if (reached.count(top)) return true;
    grew = false;
    for (std::uint32_t x : reached)
      for (std::uint32_t y : normals) {
        if (reached.count(y)) continue;
        std::uint64_t a = l.subgroups[x].order, b = l.subgroups[y].order;
        if (b <= a || b % a != 0) continue;
        auto f = factorize(b / a);
        if (f.size() != 1 || f.begin()->second != 1) continue;
        if (l.contains(x, y)) {
          reached.insert(y);
          grew = true;
          goto next_round;
        }
      }
  next_round:;
  }
  return reached.count(top) > 0;
}

}  // namespace

bool is_supersolvable(const Lattice& l) {
  auto normals = parent_normal_subgroups(l);
  return prime_step_reachable(l, normals, l.trivial_index, l.parent_index);
}

bool is_supersolvable_subgroup(const Lattice& l, std::uint32_t w) {
  if (w == l.parent_index) return is_supersolvable(l);
  std::vector<std::uint32_t> normals;
  for (std::uint32_t i = 0; i < l.subgroups.size(); ++i)
    if (l.contains(i, w) && is_normal(l, i, w)) normals.push_back(i);
  // trivial index of the sub-lattice is the parent's trivial subgroup
  return prime_step_reachable(l, normals, l.trivial_index, w);
}

bool all_maximals_have_prime_index(const Lattice& l) {
  std::uint64_t n = l.parent_order();
  for (std::uint32_t m : maximal_subgroups_of(l, l.parent_index)) {
    auto f = factorize(n / l.subgroups[m].order);
    if (f.size() != 1 || f.begin()->second != 1) return false;
  }
  return true;
}

std::uint32_t supersolvable_residual(const Lattice& l) {
  auto normals = parent_normal_subgroups(l);
  std::vector<std::uint32_t> qualifying;
  for (std::uint32_t n : normals)
    if (prime_step_reachable(l, normals, n, l.parent_index))
      qualifying.push_back(n);
  // G itself always qualifies
  std::uint32_t best = qualifying.front();
  for (std::uint32_t q : qualifying)
    if (l.subgroups[q].order < l.subgroups[best].order) best = q;
  // verify minimality two ways
  std::vector<std::uint32_t> meet = l.subgroups[qualifying.front()].member_ranks;
  for (std::uint32_t q : qualifying) {
    if (!l.contains(best, q))
      throw std::logic_error(
          "supersolvable_residual: minimum not contained in a qualifying "
          "subgroup");
    std::vector<std::uint32_t> tmp;
    const auto& m = l.subgroups[q].member_ranks;
    std::set_intersection(meet.begin(), meet.end(), m.begin(), m.end(),
                          std::back_inserter(tmp));
    meet = std::move(tmp);
  }
  if (meet != l.subgroups[best].member_ranks)
    throw std::logic_error(
        "supersolvable_residual: intersection of qualifying subgroups "
        "differs from the minimum");
  return best;
}

bool gaschutz_condition2_literal(const Lattice& l, std::uint32_t w) {
  std::vector<std::uint32_t> chain{w};
  chain.insert(chain.end(), l.overs[w].begin(), l.overs[w].end());
  for (std::uint32_t a : chain)
    for (std::uint32_t b : chain) {
      std::uint64_t oa = l.subgroups[a].order, ob = l.subgroups[b].order;
      if (ob <= oa || ob % oa != 0) continue;
      auto f = factorize(ob / oa);
      if (f.size() != 1 || f.begin()->second != 1) continue;
      if (l.contains(a, b)) return false;  // prime-index pair above W
    }
  return true;
}

bool gaschutz_condition2_covering(const Lattice& l, std::uint32_t w) {
  for (const auto& [a, b] : l.hasse) {
    if (!l.contains(w, a)) continue;
    auto f = factorize(static_cast<std::uint64_t>(l.subgroups[b].order) /
                       l.subgroups[a].order);
    if (f.size() == 1 && f.begin()->second == 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> gaschutz_subgroups(const Lattice& l) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 0; w < l.subgroups.size(); ++w) {
    if (!gaschutz_condition2_literal(l, w)) continue;
    if (!is_supersolvable_subgroup(l, w)) continue;
    out.push_back(w);
  }
  if (out.empty() && is_solvable(l))
    throw std::logic_error(
        "gaschutz_subgroups: none found in a solvable group");
  return out;
}

}  // namespace h2m
