#include "h2m/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace h2m {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree)
    throw InvalidInput("degree exceeds " + std::to_string(kMaxDegree));
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidInput("image table is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return PermBuilder::make(std::move(im));
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<unsigned>>& cycles) {
  if (degree == 0 || degree > kMaxDegree)
    throw InvalidInput("degree out of range");
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      unsigned a = cyc[i];
      unsigned b = cyc[(i + 1) % cyc.size()];
      if (a < 1 || a > degree)
        throw InvalidInput("point " + std::to_string(a) + " out of range 1.." +
                           std::to_string(degree));
      if (used[a - 1])
        throw InvalidInput("point " + std::to_string(a) + " repeated");
      used[a - 1] = true;
      im[a - 1] = static_cast<Point>(b - 1);
    }
  }
  return Perm(std::move(im));  // checked: catches degenerate cycle input
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw InvalidInput("degree mismatch");
  std::vector<Point> im(degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = rhs.images_[images_[i]];
  return PermBuilder::make(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<Point> im(degree());
  for (std::size_t i = 0; i < im.size(); ++i)
    im[images_[i]] = static_cast<Point>(i);
  return PermBuilder::make(std::move(im));
}

Perm Perm::conjugated_by(const Perm& g) const {
  if (degree() != g.degree()) throw InvalidInput("degree mismatch");
  std::vector<Point> im(degree());
  for (std::size_t i = 0; i < im.size(); ++i)
    im[g.images_[i]] = g.images_[images_[i]];
  return PermBuilder::make(std::move(im));
}

std::string Perm::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    std::size_t i = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << (i + 1);
      seen[i] = true;
      first = false;
      i = images_[i];
    } while (i != start);
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

}  // namespace h2m
