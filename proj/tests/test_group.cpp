#include <doctest.h>

#include <random>
#include <unordered_set>

#include "h2m/constructors.hpp"
#include "h2m/group.hpp"

using namespace h2m;

namespace {

// Independent oracle: naive breadth-first closure of the generators,
// no stabilizer chain involved.
std::unordered_set<Perm, PermHash> brute_closure(const PermGroup& g) {
  std::unordered_set<Perm, PermHash> seen{Perm::identity(g.degree())};
  std::vector<Perm> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& gen : g.generators()) {
      Perm q = queue[i] * gen;
      if (seen.insert(q).second) queue.push_back(q);
    }
  return seen;
}

}  // namespace

TEST_CASE("BSGS order matches brute-force closure") {
  CHECK(symmetric(4).order() == 24);
  CHECK(brute_closure(symmetric(4)).size() == 24);
  CHECK(cyclic(7).order() == 7);
  CHECK(alternating(5).order() == 60);
  CHECK(brute_closure(alternating(5)).size() == 60);
  CHECK(psl2(7).order() == 168);
  CHECK(brute_closure(psl2(7)).size() == 168);
}

TEST_CASE("trivial group") {
  PermGroup t(1, {});
  CHECK(t.order() == 1);
  CHECK(t.elements().size() == 1);
}

TEST_CASE("BSGS invariants") {
  for (const PermGroup& g : {symmetric(5), psl2(11), dihedral(10)}) {
    const Bsgs& chain = g.chain();
    std::uint64_t prod = 1;
    for (const auto& lvl : chain.levels) prod *= lvl.orbit.size();
    CHECK(prod == g.order());
    for (const auto& sg : chain.strong_generators())
      CHECK(chain.sift(sg).is_identity());
  }
}

TEST_CASE("membership") {
  PermGroup z3 = cyclic(3);
  CHECK(z3.contains(Perm::identity(3)));
  CHECK_FALSE(z3.contains(Perm::from_cycles(3, {{1, 2}})));
  CHECK(alternating(4).contains(Perm::from_cycles(4, {{1, 2, 3}})));
  CHECK_THROWS_AS(z3.contains(Perm::identity(5)), InvalidInput);
}

TEST_CASE("membership agrees with element list") {
  std::mt19937 rng(999);
  for (const PermGroup& g : {symmetric(4), psl2(5), dihedral(6)}) {
    auto elems = g.elements();
    std::unordered_set<Perm, PermHash> set(elems.begin(), elems.end());
    CHECK(elems.size() == g.order());
    for (const auto& gen : g.generators()) CHECK(g.contains(gen));
    // closure sampled: products of random element pairs stay inside
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int t = 0; t < 50; ++t) {
      Perm prod = elems[pick(rng)] * elems[pick(rng)];
      CHECK(set.count(prod) == 1);
      CHECK(g.contains(prod));
    }
    // random non-members
    std::vector<Point> im(g.degree());
    for (int t = 0; t < 50; ++t) {
      for (std::size_t i = 0; i < im.size(); ++i) im[i] = static_cast<Point>(i);
      std::shuffle(im.begin(), im.end(), rng);
      Perm p(im);
      CHECK(g.contains(p) == (set.count(p) == 1));
    }
  }
}

TEST_CASE("elements are sorted and capped") {
  auto e = symmetric(3).elements();
  CHECK(e.size() == 6);
  CHECK(std::is_sorted(e.begin(), e.end()));
  CHECK(cyclic(4).elements().size() == 4);
  CHECK_THROWS_AS(psl2(11).elements(500), CapExceeded);
}

TEST_CASE("orbit") {
  CHECK(cyclic(5).orbit(0) == std::vector<Point>{0, 1, 2, 3, 4});
  CHECK(PermGroup(5, {}).orbit(2) == std::vector<Point>{2});
  // translations of the paper example act transitively on the 841 vectors
  PermGroup ex = paper_example();
  PermGroup translations(ex.degree(),
                         {ex.generators()[0], ex.generators()[1]});
  CHECK(translations.orbit(0).size() == 841);
}
