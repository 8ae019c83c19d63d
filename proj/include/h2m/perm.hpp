#ifndef H2M_PERM_HPP
#define H2M_PERM_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace h2m {

using Point = std::uint16_t;

constexpr std::size_t kMaxDegree = 65535;

/// Thrown when input text or parameters are malformed.
class InvalidInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation would exceed a configured cap
/// (element cap, degree cap).
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A bijection on the points 0..degree-1, stored as an image table.
///
/// Composition is written left-to-right: (p * q) maps i to q[p[i]],
/// i.e. apply p first, then q.
class Perm {
public:
  Perm() = default;

  /// Takes ownership of an image table; throws InvalidInput unless it
  /// is a bijection on {0..n-1}.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  /// Builds a permutation from 1-based cycle notation. Points absent
  /// from every cycle are fixed. Throws InvalidInput on out-of-range
  /// or repeated points.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<unsigned>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;

  /// Conjugate g^-1 * this * g.
  Perm conjugated_by(const Perm& g) const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm& rhs) const {
    return images_ <=> rhs.images_;
  }

  /// 1-based cycle notation, e.g. "(1 2)(3 4 5)"; "()" for identity.
  std::string cycle_string() const;

private:
  struct unchecked_t {};
  Perm(std::vector<Point> images, unchecked_t) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend struct PermBuilder;
};

/// Internal escape hatch for hot paths that construct known-valid tables.
struct PermBuilder {
  static Perm make(std::vector<Point> images) {
    return Perm(std::move(images), Perm::unchecked_t{});
  }
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    // FNV-1a over the image table
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace h2m

#endif
