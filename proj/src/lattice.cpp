#include "h2m/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace h2m {

namespace {

std::uint64_t hash_ranks(const std::vector<std::uint32_t>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t x : v) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

std::shared_ptr<const GroupTable> GroupTable::build(const PermGroup& g,
                                                   std::uint64_t element_cap) {
  auto t = std::make_shared<GroupTable>();
  t->group_ = g;
  t->elems_ = g.elements(element_cap);
  const std::uint32_t n = static_cast<std::uint32_t>(t->elems_.size());
  t->rank_of_.reserve(n * 2);
  for (std::uint32_t r = 0; r < n; ++r) t->rank_of_.emplace(t->elems_[r], r);
  t->inv_.resize(n);
  for (std::uint32_t r = 0; r < n; ++r)
    t->inv_[r] = t->rank_of_.at(t->elems_[r].inverse());
  for (const auto& gen : g.generators()) {
    t->gen_ranks_.push_back(t->rank_of_.at(gen));
    std::vector<std::uint32_t> right(n), conj(n);
    Perm gi = gen.inverse();
    for (std::uint32_t r = 0; r < n; ++r) {
      right[r] = t->rank_of_.at(t->elems_[r] * gen);
      conj[r] = t->rank_of_.at(gi * t->elems_[r] * gen);
    }
    t->gen_right_.push_back(std::move(right));
    t->gen_conj_.push_back(std::move(conj));
  }
  return t;
}

std::uint32_t GroupTable::rank(const Perm& p) const {
  auto it = rank_of_.find(p);
  if (it == rank_of_.end()) throw InvalidInput("element not in group table");
  return it->second;
}

std::uint32_t GroupTable::mult(std::uint32_t a, std::uint32_t b) const {
  return rank_of_.at(elems_[a] * elems_[b]);
}

bool Subgroup::contains_rank(std::uint32_t r) const {
  return std::binary_search(member_ranks.begin(), member_ranks.end(), r);
}

bool Lattice::contains(std::uint32_t sub, std::uint32_t super) const {
  if (sub == super) return true;
  const auto& a = subgroups[sub];
  const auto& b = subgroups[super];
  if (a.order > b.order || b.order % a.order != 0) return false;
  for (std::uint32_t g : a.generator_ranks)
    if (!b.contains_rank(g)) return false;
  return true;
}

std::optional<std::uint32_t> Lattice::index_of(
    const std::vector<std::uint32_t>& member_ranks) const {
  std::call_once(key_index_->once, [this] {
    for (std::uint32_t i = 0; i < subgroups.size(); ++i)
      key_index_->map[hash_ranks(subgroups[i].member_ranks)].push_back(i);
  });
  auto it = key_index_->map.find(hash_ranks(member_ranks));
  if (it == key_index_->map.end()) return std::nullopt;
  for (std::uint32_t idx : it->second)
    if (subgroups[idx].member_ranks == member_ranks) return idx;
  return std::nullopt;
}

PermGroup Lattice::as_group(std::uint32_t i) const {
  std::vector<Perm> gens;
  for (std::uint32_t r : subgroups[i].generator_ranks)
    gens.push_back(table->element(r));
  return PermGroup(table->group().degree(), std::move(gens));
}

namespace {

class Enumerator {
public:
  explicit Enumerator(std::shared_ptr<const GroupTable> table)
      : table_(std::move(table)), n_(table_->size()), in_scratch_(n_, 0) {
    for (std::uint64_t d = 1; d <= n_; ++d)
      if (n_ % d == 0) divisors_.push_back(static_cast<std::uint32_t>(d));
  }

  Lattice run() {
    seed();
    process_joins();
    return finalize();
  }

private:
  struct Rec {
    Subgroup sg;
    std::uint32_t class_id;
  };

  std::shared_ptr<const GroupTable> table_;
  std::uint32_t n_;
  std::vector<std::uint32_t> divisors_;
  std::vector<Rec> recs_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> key_map_;
  std::vector<std::uint8_t> in_scratch_;
  std::uint32_t next_class_ = 0;
  // reps awaiting join processing, ordered by (order, index)
  std::set<std::pair<std::uint32_t, std::uint32_t>> pending_;
  // distinct cyclic subgroups as (order, generator rank), canonical order
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cyclics_;

  std::optional<std::uint32_t> find(const std::vector<std::uint32_t>& m) {
    auto it = key_map_.find(hash_ranks(m));
    if (it == key_map_.end()) return std::nullopt;
    for (std::uint32_t idx : it->second)
      if (recs_[idx].sg.member_ranks == m) return idx;
    return std::nullopt;
  }

  std::uint32_t insert_raw(std::vector<std::uint32_t> members,
                           std::vector<std::uint32_t> gens,
                           std::uint32_t class_id) {
    std::uint32_t idx = static_cast<std::uint32_t>(recs_.size());
    Rec rec;
    rec.sg.order = static_cast<std::uint32_t>(members.size());
    rec.sg.member_ranks = std::move(members);
    rec.sg.generator_ranks = std::move(gens);
    rec.class_id = class_id;
    key_map_[hash_ranks(rec.sg.member_ranks)].push_back(idx);
    recs_.push_back(std::move(rec));
    return idx;
  }

  // Inserts a subgroup if new and immediately closes its conjugacy
  // class; the first member of a new class is queued for join work.
  // Returns the index of the subgroup (new or existing).
  std::uint32_t insert(const std::vector<std::uint32_t>& members,
                       const std::vector<std::uint32_t>& gens) {
    if (auto idx = find(members)) return *idx;
    std::uint32_t cls = next_class_++;
    std::uint32_t rep = insert_raw(members, gens, cls);
    pending_.insert({recs_[rep].sg.order, rep});
    // close the conjugacy orbit under the parent's generators
    std::vector<std::uint32_t> queue{rep};
    while (!queue.empty()) {
      std::uint32_t cur = queue.back();
      queue.pop_back();
      for (std::size_t gi = 0; gi < table_->generator_count(); ++gi) {
        std::vector<std::uint32_t> cm, cg;
        cm.reserve(recs_[cur].sg.member_ranks.size());
        for (std::uint32_t r : recs_[cur].sg.member_ranks)
          cm.push_back(table_->conj_by_gen(r, gi));
        std::sort(cm.begin(), cm.end());
        if (find(cm)) continue;
        for (std::uint32_t r : recs_[cur].sg.generator_ranks)
          cg.push_back(table_->conj_by_gen(r, gi));
        queue.push_back(insert_raw(std::move(cm), std::move(cg), cls));
      }
    }
    return rep;
  }

  // Closure of <gens> by rank arithmetic; nullopt once the size would
  // exceed `threshold` (the largest order the result could have while
  // remaining a proper subgroup).
  std::optional<std::vector<std::uint32_t>> close(
      const std::vector<std::uint32_t>& gens, std::uint32_t threshold) {
    std::vector<std::uint32_t> members{0};
    std::fill(in_scratch_.begin(), in_scratch_.end(), 0);
    in_scratch_[0] = 1;
    for (std::uint32_t g : gens)
      if (!in_scratch_[g]) {
        in_scratch_[g] = 1;
        members.push_back(g);
      }
    if (members.size() > threshold) return std::nullopt;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::uint32_t g : gens) {
        std::uint32_t t = table_->mult(members[i], g);
        if (!in_scratch_[t]) {
          if (members.size() + 1 > threshold) return std::nullopt;
          in_scratch_[t] = 1;
          members.push_back(t);
        }
      }
    std::sort(members.begin(), members.end());
    return members;
  }

  void seed() {
    insert({0}, {});
    // all cyclic subgroups
    std::map<std::vector<std::uint32_t>, std::uint32_t> cyclic_seen;
    for (std::uint32_t r = 1; r < n_; ++r) {
      std::vector<std::uint32_t> members{0};
      std::uint32_t m = r;
      while (m != 0) {
        members.push_back(m);
        m = table_->mult(m, r);
      }
      std::sort(members.begin(), members.end());
      auto [it, fresh] = cyclic_seen.emplace(std::move(members), r);
      if (fresh) insert(it->first, {r});
    }
    for (const auto& [members, gen] : cyclic_seen)
      cyclics_.push_back({static_cast<std::uint32_t>(members.size()), gen});
    std::sort(cyclics_.begin(), cyclics_.end());
    // the whole group
    if (n_ > 1) {
      std::vector<std::uint32_t> all(n_);
      std::iota(all.begin(), all.end(), 0u);
      insert(all, table_->generator_ranks());
    }
  }

  // Largest proper divisor of |G| that is a multiple of l, or 0 when
  // only |G| itself qualifies (the join is then the whole group).
  std::uint32_t join_threshold(std::uint64_t l) const {
    for (auto it = divisors_.rbegin(); it != divisors_.rend(); ++it)
      if (*it < n_ && *it % l == 0) return *it;
    return 0;
  }

  void process_joins() {
    while (!pending_.empty()) {
      auto [order, idx] = *pending_.begin();
      pending_.erase(pending_.begin());
      if (order <= 1 || order >= n_) continue;
      // copy: recs_ may grow (and reallocate) while we insert joins
      const std::vector<std::uint32_t> h_members = recs_[idx].sg.member_ranks;
      const std::vector<std::uint32_t> h_gens = recs_[idx].sg.generator_ranks;
      for (const auto& [c_order, c_gen] : cyclics_) {
        if (std::binary_search(h_members.begin(), h_members.end(), c_gen))
          continue;  // C inside H
        std::uint64_t l = lcm_u64(order, c_order);
        std::uint32_t threshold = join_threshold(l);
        if (threshold == 0) continue;  // join can only be the whole group
        std::vector<std::uint32_t> gens = h_gens;
        gens.push_back(c_gen);
        if (auto joined = close(gens, threshold)) insert(*joined, gens);
      }
    }
  }

  Lattice finalize() {
    std::vector<std::uint32_t> perm(recs_.size());
    std::iota(perm.begin(), perm.end(), 0u);
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (recs_[a].sg.order != recs_[b].sg.order)
        return recs_[a].sg.order < recs_[b].sg.order;
      return recs_[a].sg.member_ranks < recs_[b].sg.member_ranks;
    });

    Lattice lat;
    lat.table = table_;
    lat.subgroups.reserve(recs_.size());
    std::vector<std::uint32_t> old_class(recs_.size());
    for (std::uint32_t ni = 0; ni < perm.size(); ++ni) {
      lat.subgroups.push_back(std::move(recs_[perm[ni]].sg));
      old_class[ni] = recs_[perm[ni]].class_id;
    }
    // conjugacy classes in new numbering, ordered by smallest member
    std::vector<std::int64_t> class_renumber(next_class_, -1);
    lat.class_of.resize(lat.subgroups.size());
    for (std::uint32_t ni = 0; ni < lat.subgroups.size(); ++ni) {
      if (class_renumber[old_class[ni]] < 0) {
        class_renumber[old_class[ni]] =
            static_cast<std::int64_t>(lat.conj_classes.size());
        lat.conj_classes.emplace_back();
      }
      std::uint32_t c =
          static_cast<std::uint32_t>(class_renumber[old_class[ni]]);
      lat.class_of[ni] = c;
      lat.conj_classes[c].push_back(ni);
    }
    lat.trivial_index = 0;
    lat.parent_index = static_cast<std::uint32_t>(lat.subgroups.size() - 1);

    // containment adjacency and covering relation
    lat.overs.resize(lat.subgroups.size());
    for (std::uint32_t i = 0; i < lat.subgroups.size(); ++i)
      for (std::uint32_t j = i + 1; j < lat.subgroups.size(); ++j)
        if (lat.subgroups[j].order > lat.subgroups[i].order &&
            lat.contains(i, j))
          lat.overs[i].push_back(j);
    for (std::uint32_t i = 0; i < lat.subgroups.size(); ++i)
      for (std::uint32_t j : lat.overs[i]) {
        bool covering = true;
        for (std::uint32_t k : lat.overs[i]) {
          if (k == j || lat.subgroups[k].order >= lat.subgroups[j].order)
            continue;
          if (lat.contains(k, j)) {
            covering = false;
            break;
          }
        }
        if (covering) lat.hasse.push_back({i, j});
      }
    std::sort(lat.hasse.begin(), lat.hasse.end());

    return lat;
  }
};

}  // namespace

Lattice enumerate_subgroups(const PermGroup& g, std::uint64_t element_cap) {
  return Enumerator(GroupTable::build(g, element_cap)).run();
}

std::vector<std::uint32_t> maximal_subgroups_of(const Lattice& l,
                                                std::uint32_t h) {
  std::vector<std::uint32_t> out;
  for (const auto& [sub, super] : l.hasse)
    if (super == h) out.push_back(sub);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> two_maximals(
    const Lattice& l) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t m : maximal_subgroups_of(l, l.parent_index))
    for (std::uint32_t h : maximal_subgroups_of(l, m)) out.push_back({h, m});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal(const Lattice& l, std::uint32_t h, std::uint32_t in) {
  if (!l.contains(h, in))
    throw InvalidInput("is_normal: first subgroup not contained in second");
  const auto& hs = l.subgroups[h];
  for (std::uint32_t g : l.subgroups[in].generator_ranks)
    for (std::uint32_t m : hs.member_ranks)
      if (!hs.contains_rank(l.table->conj(m, g))) return false;
  return true;
}

PermGroup quotient(const Lattice& l, std::uint32_t n, std::size_t degree_cap) {
  if (!l.normal_in_parent(n))
    throw InvalidInput("quotient: subgroup is not normal");
  const auto& table = *l.table;
  const auto& nm = l.subgroups[n].member_ranks;
  const std::uint32_t size = table.size();
  std::vector<std::uint32_t> coset_of(size, UINT32_MAX);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t r = 0; r < size; ++r) {
    if (coset_of[r] != UINT32_MAX) continue;
    std::uint32_t c = static_cast<std::uint32_t>(reps.size());
    if (c + 1 > degree_cap)
      throw CapExceeded("quotient: coset degree exceeds degree cap");
    reps.push_back(r);
    for (std::uint32_t m : nm) coset_of[table.mult(m, r)] = c;
  }
  const std::size_t deg = reps.size();
  std::vector<Perm> gens;
  for (std::size_t gi = 0; gi < table.generator_count(); ++gi) {
    std::vector<Point> im(deg);
    for (std::size_t c = 0; c < deg; ++c)
      im[c] = static_cast<Point>(coset_of[table.mult_by_gen(reps[c], gi)]);
    Perm p = PermBuilder::make(std::move(im));
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  return PermGroup(std::max<std::size_t>(deg, 1), std::move(gens));
}

namespace {

// Closure of generator ranks with no size bound.
std::vector<std::uint32_t> close_full(const GroupTable& table,
                                      const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint8_t> in(table.size(), 0);
  std::vector<std::uint32_t> members{0};
  in[0] = 1;
  for (std::uint32_t g : gens)
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::uint32_t g : gens) {
      std::uint32_t t = table.mult(members[i], g);
      if (!in[t]) {
        in[t] = 1;
        members.push_back(t);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::uint32_t normal_closure_of_commutators(
    const Lattice& l, const std::vector<std::uint32_t>& group_gens) {
  const auto& table = *l.table;
  std::vector<std::uint32_t> seed;
  for (std::uint32_t a : group_gens)
    for (std::uint32_t b : group_gens) {
      std::uint32_t c = table.mult(
          table.mult(table.mult(table.inverse(a), table.inverse(b)), a), b);
      if (c != 0) seed.push_back(c);
    }
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::vector<std::uint32_t> members = close_full(table, seed);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::uint32_t g : group_gens) {
      const std::size_t count = seed.size();
      for (std::size_t si = 0; si < count; ++si) {
        std::uint32_t cs = table.conj(seed[si], g);
        if (!std::binary_search(members.begin(), members.end(), cs)) {
          seed.push_back(cs);
          grew = true;
        }
      }
      if (grew) break;
    }
    if (grew) members = close_full(table, seed);
  }
  auto idx = l.index_of(members);
  if (!idx)
    throw std::logic_error(
        "derived subgroup missing from lattice (enumeration bug)");
  return *idx;
}

}  // namespace

std::uint32_t derived_subgroup(const Lattice& l) {
  return normal_closure_of_commutators(l, l.table->generator_ranks());
}

std::uint32_t derived_subgroup_in(const Lattice& l, std::uint32_t h) {
  return normal_closure_of_commutators(l, l.subgroups[h].generator_ranks);
}

}  // namespace h2m
