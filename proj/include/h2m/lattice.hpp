#ifndef H2M_LATTICE_HPP
#define H2M_LATTICE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "h2m/group.hpp"

namespace h2m {

/// Canonical element table of an enumerated group: elements in
/// lexicographic image-table order (rank 0 is the identity), with rank
/// arithmetic for multiplication, inversion and conjugation.
class GroupTable {
public:
  static std::shared_ptr<const GroupTable> build(
      const PermGroup& g, std::uint64_t element_cap = kDefaultElementCap);

  const PermGroup& group() const { return group_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
  const Perm& element(std::uint32_t r) const { return elems_[r]; }
  std::uint32_t rank(const Perm& p) const;
  std::uint32_t inverse(std::uint32_t r) const { return inv_[r]; }
  std::uint32_t mult(std::uint32_t a, std::uint32_t b) const;
  /// g^-1 * x * g by ranks.
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const {
    return mult(mult(inv_[g], x), g);
  }

  /// Rank of element(r) conjugated by parent generator gi (precomputed).
  std::uint32_t conj_by_gen(std::uint32_t r, std::size_t gi) const {
    return gen_conj_[gi][r];
  }
  /// Rank of element(r) * generator gi (precomputed).
  std::uint32_t mult_by_gen(std::uint32_t r, std::size_t gi) const {
    return gen_right_[gi][r];
  }
  std::size_t generator_count() const { return gen_conj_.size(); }
  const std::vector<std::uint32_t>& generator_ranks() const {
    return gen_ranks_;
  }

private:
  PermGroup group_{1, {}};
  std::vector<Perm> elems_;
  std::unordered_map<Perm, std::uint32_t, PermHash> rank_of_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::vector<std::uint32_t>> gen_conj_;
  std::vector<std::vector<std::uint32_t>> gen_right_;
  std::vector<std::uint32_t> gen_ranks_;
};

/// A subgroup of an enumerated parent, identified by its sorted member
/// rank set. generator_ranks is a small subset generating the subgroup.
struct Subgroup {
  std::uint32_t order = 1;
  std::vector<std::uint32_t> member_ranks;     // sorted, contains 0
  std::vector<std::uint32_t> generator_ranks;  // generates the member set

  bool contains_rank(std::uint32_t r) const;
};

/// The full subgroup lattice of a parent group: every subgroup,
/// the covering (Hasse) relation, containment adjacency and conjugacy
/// classes. Immutable once built.
struct Lattice {
  std::shared_ptr<const GroupTable> table;
  std::vector<Subgroup> subgroups;  // sorted by (order, member_ranks)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse;  // (sub, super) covering pairs
  std::vector<std::vector<std::uint32_t>> overs;  // per subgroup: all strict supergroups
  std::vector<std::vector<std::uint32_t>> conj_classes;
  std::vector<std::uint32_t> class_of;
  std::uint32_t parent_index = 0;  // index of the whole group
  std::uint32_t trivial_index = 0;

  std::uint64_t parent_order() const { return table->size(); }
  bool contains(std::uint32_t sub, std::uint32_t super) const;  // strict or equal
  std::optional<std::uint32_t> index_of(
      const std::vector<std::uint32_t>& member_ranks) const;
  bool normal_in_parent(std::uint32_t i) const {
    return conj_classes[class_of[i]].size() == 1;
  }
  /// The subgroup as a standalone PermGroup on the parent's points.
  PermGroup as_group(std::uint32_t i) const;

private:
  // member-set index, built once on first lookup
  struct KeyIndex {
    std::once_flag once;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> map;
  };
  std::shared_ptr<KeyIndex> key_index_ = std::make_shared<KeyIndex>();
};

/// Enumerates every subgroup of G by cyclic-extension closure: seed
/// with the trivial subgroup and all cyclic subgroups, then form joins
/// <H, C> until fixpoint, keeping the subgroup set closed under
/// conjugation throughout. Throws CapExceeded above the element cap.
Lattice enumerate_subgroups(const PermGroup& g,
                            std::uint64_t element_cap = kDefaultElementCap);

/// Subgroups K maximal in H: K < H with nothing strictly between.
std::vector<std::uint32_t> maximal_subgroups_of(const Lattice& l,
                                                std::uint32_t h);

/// All pairs (H, M) with M maximal in the parent and H maximal in M,
/// sorted by (H, M).
std::vector<std::pair<std::uint32_t, std::uint32_t>> two_maximals(
    const Lattice& l);

/// True iff conjugating H's member set by every generator of `in` fixes
/// it. Throws InvalidInput unless H is contained in `in`.
bool is_normal(const Lattice& l, std::uint32_t h, std::uint32_t in);

/// Faithful permutation group of degree |G:N| via the right-coset
/// action. Throws InvalidInput if N is not normal, CapExceeded if the
/// coset degree exceeds the cap.
PermGroup quotient(const Lattice& l, std::uint32_t n,
                   std::size_t degree_cap = kDefaultDegreeCap);

/// Commutator subgroup of the parent (normal closure of generator
/// commutators); returned as a lattice index.
std::uint32_t derived_subgroup(const Lattice& l);

/// Commutator subgroup of subgroup h, computed within h.
std::uint32_t derived_subgroup_in(const Lattice& l, std::uint32_t h);

}  // namespace h2m

#endif
