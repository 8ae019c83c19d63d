#include "h2m/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace h2m {

std::uint64_t Bsgs::order() const {
  std::uint64_t n = 1;
  for (const auto& lvl : levels) {
    std::uint64_t sz = lvl.orbit.size();
    if (n > UINT64_MAX / sz)
      throw std::overflow_error("group order exceeds 64 bits");
    n *= sz;
  }
  return n;
}

Perm Bsgs::sift(const Perm& p) const {
  Perm g = p;
  for (const auto& lvl : levels) {
    if (g.is_identity()) break;
    Point image = g[lvl.base_point];
    if (image == lvl.base_point) continue;
    std::int32_t s = lvl.slot[image];
    if (s < 0) return g;
    g = g * lvl.transversal[s].inverse();
  }
  return g;
}

std::vector<Perm> Bsgs::strong_generators() const {
  std::vector<Perm> out;
  for (const auto& lvl : levels)
    for (const auto& g : lvl.gens) out.push_back(g);
  return out;
}

namespace {

void rebuild_orbit(Bsgs::Level& lvl, std::size_t degree) {
  lvl.orbit.clear();
  lvl.slot.assign(degree, -1);
  lvl.transversal.clear();
  lvl.orbit.push_back(lvl.base_point);
  lvl.slot[lvl.base_point] = 0;
  lvl.transversal.push_back(Perm::identity(degree));
  for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
    Point p = lvl.orbit[i];
    for (const auto& g : lvl.gens) {
      Point q = g[p];
      if (lvl.slot[q] < 0) {
        lvl.slot[q] = static_cast<std::int32_t>(lvl.orbit.size());
        lvl.orbit.push_back(q);
        lvl.transversal.push_back(lvl.transversal[i] * g);
      }
    }
  }
}

// Incremental deterministic Schreier-Sims with distributed strong
// generators: level i holds every strong generator fixing the base
// prefix B[0..i-1]. Level i is verified only after all levels below it
// are complete; finding a new strong generator jumps back down.
struct Builder {
  std::size_t degree;
  Bsgs chain;                           // one Level per base point
  std::vector<Perm> strong;             // all strong generators

  Point smallest_moved(const Perm& p) const {
    Point b = 0;
    while (p[b] == b) ++b;
    return b;
  }

  bool fixes_prefix(const Perm& p, std::size_t i) const {
    for (std::size_t k = 0; k < i; ++k) {
      Point b = chain.levels[k].base_point;
      if (p[b] != b) return false;
    }
    return true;
  }

  void append_base_point(Point b) {
    Bsgs::Level lvl;
    lvl.base_point = b;
    chain.levels.push_back(std::move(lvl));
  }

  void add_strong(const Perm& g, std::size_t from, std::size_t to) {
    strong.push_back(g);
    for (std::size_t l = from; l <= to && l < chain.levels.size(); ++l) {
      chain.levels[l].gens.push_back(g);
      rebuild_orbit(chain.levels[l], degree);
    }
  }

  // Residue of g after stripping through levels >= start, and the level
  // where stripping stopped.
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t start) const {
    for (std::size_t i = start; i < chain.levels.size(); ++i) {
      if (g.is_identity()) return {std::move(g), i};
      const auto& lvl = chain.levels[i];
      Point image = g[lvl.base_point];
      if (image == lvl.base_point) continue;
      std::int32_t s = lvl.slot[image];
      if (s < 0) return {std::move(g), i};
      g = g * lvl.transversal[s].inverse();
    }
    return {std::move(g), chain.levels.size()};
  }

  void run(const std::vector<Perm>& generators) {
    std::vector<Perm> gens;
    for (const auto& g : generators)
      if (!g.is_identity()) gens.push_back(g);
    for (const auto& g : gens)
      if (fixes_prefix(g, chain.levels.size()))
        append_base_point(smallest_moved(g));
    for (const auto& g : gens) {
      std::size_t deepest = 0;
      while (deepest < chain.levels.size() && fixes_prefix(g, deepest + 1))
        ++deepest;
      add_strong(g, 0, deepest);
    }

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.levels.size()) - 1;
    while (i >= 0) {
      auto& lvl = chain.levels[i];
      rebuild_orbit(lvl, degree);
      bool descended = false;
      for (std::size_t oi = 0; oi < lvl.orbit.size() && !descended; ++oi) {
        for (const auto& s : lvl.gens) {
          Point q = s[lvl.orbit[oi]];
          Perm schreier =
              lvl.transversal[oi] * s * lvl.transversal[lvl.slot[q]].inverse();
          if (schreier.is_identity()) continue;
          auto [r, j] = strip(std::move(schreier),
                              static_cast<std::size_t>(i) + 1);
          if (r.is_identity()) continue;
          if (j == chain.levels.size()) append_base_point(smallest_moved(r));
          add_strong(r, static_cast<std::size_t>(i) + 1, j);
          i = static_cast<std::ptrdiff_t>(j);
          descended = true;
          break;
        }
      }
      if (!descended) --i;
    }
  }
};

}  // namespace

Bsgs schreier_sims(std::size_t degree, const std::vector<Perm>& generators) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
  Builder b{degree, {}, {}};
  b.run(generators);
  return std::move(b.chain);
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree),
      generators_(std::move(generators)),
      cell_(std::make_shared<ChainCell>()) {
  if (degree == 0 || degree > kMaxDegree)
    throw InvalidInput("degree out of range");
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw InvalidInput("generator degree mismatch");
}

const Bsgs& PermGroup::chain() const {
  std::call_once(cell_->once, [this] {
    cell_->chain =
        std::make_unique<const Bsgs>(schreier_sims(degree_, generators_));
  });
  return *cell_->chain;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw InvalidInput("degree mismatch");
  return chain().sift(p).is_identity();
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm id = Perm::identity(degree_);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      Perm q = p * g;
      if (seen.insert(q).second) {
        if (seen.size() > cap)
          throw CapExceeded("group has more than " + std::to_string(cap) +
                            " elements");
        queue.push_back(std::move(q));
      }
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> PermGroup::orbit(Point p) const {
  if (p >= degree_) throw InvalidInput("point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> out{p};
  seen[p] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : generators_) {
      Point q = g[out[i]];
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace h2m
