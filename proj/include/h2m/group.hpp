#ifndef H2M_GROUP_HPP
#define H2M_GROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "h2m/perm.hpp"

namespace h2m {

constexpr std::uint64_t kDefaultElementCap = 20000;
constexpr std::size_t kDefaultDegreeCap = 1024;

/// Base and strong generating set: one level per base point, each level
/// holding the orbit of its base point under the strong generators of
/// that level and a transversal of coset representatives.
struct Bsgs {
  struct Level {
    Point base_point = 0;
    std::vector<Perm> gens;           // strong generators fixing earlier base points
    std::vector<Point> orbit;          // discovery order, orbit[0] == base_point
    std::vector<std::int32_t> slot;    // point -> index into orbit, -1 if outside
    std::vector<Perm> transversal;     // transversal[slot[p]] maps base_point to p
  };
  std::vector<Level> levels;

  std::uint64_t order() const;  // product of orbit sizes; throws std::overflow_error

  /// Sifts p through the chain; returns the residue (identity iff p is
  /// a member).
  Perm sift(const Perm& p) const;

  std::vector<Perm> strong_generators() const;
};

/// A permutation group given by generators, with a lazily built BSGS.
/// Finished groups are immutable values; the chain is built at most
/// once and shared.
class PermGroup {
public:
  explicit PermGroup(std::size_t degree, std::vector<Perm> generators = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  const Bsgs& chain() const;

  std::uint64_t order() const { return chain().order(); }

  bool contains(const Perm& p) const;

  /// All elements in lexicographic image-table order. Throws CapExceeded
  /// if the group has more than `cap` elements.
  std::vector<Perm> elements(std::uint64_t cap = kDefaultElementCap) const;

  /// Orbit of a point under the generators, sorted ascending.
  std::vector<Point> orbit(Point p) const;

private:
  std::size_t degree_;
  std::vector<Perm> generators_;

  struct ChainCell {
    std::once_flag once;
    std::unique_ptr<const Bsgs> chain;
  };
  std::shared_ptr<ChainCell> cell_;
};

/// Deterministic Schreier-Sims: base points are the smallest non-fixed
/// points, no randomization. The result is verified (every Schreier
/// generator sifts to identity by construction of the algorithm).
Bsgs schreier_sims(std::size_t degree, const std::vector<Perm>& generators);

}  // namespace h2m

#endif
