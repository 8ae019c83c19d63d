#ifndef H2M_CONSTRUCTORS_HPP
#define H2M_CONSTRUCTORS_HPP

#include <cstdint>
#include <string>

#include "h2m/group.hpp"

namespace h2m {

PermGroup cyclic(unsigned n);
PermGroup dihedral(unsigned n);  // order 2n, n >= 1
PermGroup symmetric(unsigned n);
PermGroup alternating(unsigned n);
PermGroup elementary_abelian(unsigned p, unsigned k,
                             std::size_t degree_cap = kDefaultDegreeCap);
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// An invertible 2x2 matrix over F_p, row-major [[a, b], [c, d]].
struct Matrix2p {
  unsigned p;
  unsigned a, b, c, d;

  Matrix2p mul(const Matrix2p& rhs) const;
  bool is_identity() const;
  unsigned multiplicative_order(unsigned bound = 1u << 20) const;
  /// True iff the characteristic polynomial has no root mod p (the
  /// matrix fixes no line of F_p^2).
  bool acts_irreducibly() const;
};

/// Deterministic scan for a 2x2 matrix over F_p of exact multiplicative
/// order m acting irreducibly on F_p^2: the first companion matrix
/// [[0, b], [1, a]] in lexicographic (a, b) order that qualifies.
/// Throws InvalidInput when no such element exists (e.g. when every
/// order-m element has eigenvalues in F_p).
Matrix2p find_irreducible_element(unsigned p, unsigned m);

/// The affine group E_{p^2} . <M> on the p^2 vectors of F_p^2, generated
/// by translations along the two basis vectors and the linear map M.
/// Point numbering: vector (x, y) is point x + p*y.
PermGroup semidirect_affine(unsigned p, const Matrix2p& m,
                            std::size_t degree_cap = kDefaultDegreeCap);

/// E_{29^2} ⋊ Z_15 with the Z_15 acting irreducibly: order 12615 on
/// 841 points.
PermGroup paper_example();

/// PSL(2, q) on the projective line (q + 1 points; point q is infinity),
/// generated by x -> x+1 and x -> -1/x. Supported q: 5, 7, 11.
PermGroup psl2(unsigned q);

/// Parses the line-oriented group file format:
///   # comment
///   degree N
///   gen (1 2)(3 4 5)
/// Points are 1-based; `gen ()` is the identity.
PermGroup parse_group_file(const std::string& text,
                           std::size_t degree_cap = kDefaultDegreeCap);

/// Serializes a group in the same format; parse(serialize(G)) has the
/// identical generator list.
std::string serialize_group(const PermGroup& g);

}  // namespace h2m

#endif
