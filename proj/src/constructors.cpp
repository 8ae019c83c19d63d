#include "h2m/constructors.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace h2m {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Perm cycle_perm(std::size_t degree, const std::vector<unsigned>& cycle) {
  return Perm::from_cycles(degree, {cycle});
}

}  // namespace

PermGroup cyclic(unsigned n) {
  if (n == 0) throw InvalidInput("cyclic: n must be positive");
  if (n == 1) return PermGroup(1, {});
  std::vector<unsigned> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 1u);
  return PermGroup(n, {cycle_perm(n, cyc)});
}

PermGroup dihedral(unsigned n) {
  if (n == 0) throw InvalidInput("dihedral: n must be positive");
  if (n == 1) return cyclic(2);
  if (n == 2) return direct_product(cyclic(2), cyclic(2));
  std::vector<unsigned> rot(n);
  std::iota(rot.begin(), rot.end(), 1u);
  std::vector<Point> refl(n);
  for (unsigned i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cycle_perm(n, rot), Perm(std::move(refl))});
}

PermGroup symmetric(unsigned n) {
  if (n == 0) throw InvalidInput("symmetric: n must be positive");
  if (n == 1) return PermGroup(1, {});
  std::vector<unsigned> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 1u);
  return PermGroup(n, {cycle_perm(n, {1, 2}), cycle_perm(n, cyc)});
}

PermGroup alternating(unsigned n) {
  if (n == 0) throw InvalidInput("alternating: n must be positive");
  if (n < 3) return PermGroup(std::max(n, 1u), {});
  std::vector<Perm> gens;
  for (unsigned i = 1; i + 2 <= n; ++i)
    gens.push_back(cycle_perm(n, {i, i + 1, i + 2}));
  return PermGroup(n, std::move(gens));
}

PermGroup elementary_abelian(unsigned p, unsigned k, std::size_t degree_cap) {
  if (!is_prime(p)) throw InvalidInput("elementary_abelian: p must be prime");
  if (k == 0) throw InvalidInput("elementary_abelian: k must be positive");
  std::size_t degree = std::size_t{p} * k;
  if (degree > degree_cap) throw CapExceeded("elementary_abelian: degree cap");
  std::vector<Perm> gens;
  for (unsigned block = 0; block < k; ++block) {
    std::vector<unsigned> cyc(p);
    std::iota(cyc.begin(), cyc.end(), block * p + 1);
    gens.push_back(cycle_perm(degree, cyc));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::size_t degree = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> im(degree);
    for (std::size_t i = 0; i < a.degree(); ++i) im[i] = g[i];
    for (std::size_t i = a.degree(); i < degree; ++i)
      im[i] = static_cast<Point>(i);
    gens.push_back(PermBuilder::make(std::move(im)));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> im(degree);
    for (std::size_t i = 0; i < a.degree(); ++i) im[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < b.degree(); ++i)
      im[a.degree() + i] = static_cast<Point>(a.degree() + g[i]);
    gens.push_back(PermBuilder::make(std::move(im)));
  }
  return PermGroup(degree, std::move(gens));
}

Matrix2p Matrix2p::mul(const Matrix2p& rhs) const {
  return Matrix2p{p, (a * rhs.a + b * rhs.c) % p, (a * rhs.b + b * rhs.d) % p,
                  (c * rhs.a + d * rhs.c) % p, (c * rhs.b + d * rhs.d) % p};
}

bool Matrix2p::is_identity() const {
  return a == 1 && b == 0 && c == 0 && d == 1;
}

unsigned Matrix2p::multiplicative_order(unsigned bound) const {
  unsigned det = (a * d % p + p * p - b * c % p) % p;
  if (det == 0) throw InvalidInput("matrix is singular mod p");
  Matrix2p m = *this;
  for (unsigned k = 1; k <= bound; ++k) {
    if (m.is_identity()) return k;
    m = m.mul(*this);
  }
  throw InvalidInput("matrix order exceeds bound");
}

bool Matrix2p::acts_irreducibly() const {
  unsigned tr = (a + d) % p;
  unsigned det = (a * d % p + p * p - b * c % p) % p;
  // a fixed line exists iff x^2 - tr*x + det has a root mod p
  for (unsigned x = 0; x < p; ++x)
    if ((x * x + det + p * p - tr * x % p) % p == 0) return false;
  return true;
}

Matrix2p find_irreducible_element(unsigned p, unsigned m) {
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  if (m == 0 || (p * p - 1) % m != 0)
    throw InvalidInput("no irreducible element: m does not divide p^2-1");
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b) {
      if (b == 0) continue;  // companion [[0,b],[1,a]] singular iff b == 0
      Matrix2p cand{p, 0, b, 1, a};
      if (!cand.acts_irreducibly()) continue;
      if (cand.multiplicative_order(p * p) == m) return cand;
    }
  throw InvalidInput("no irreducible element of order " + std::to_string(m) +
                     " mod " + std::to_string(p));
}

PermGroup semidirect_affine(unsigned p, const Matrix2p& m,
                            std::size_t degree_cap) {
  if (!is_prime(p) || m.p != p) throw InvalidInput("semidirect_affine: bad p");
  std::size_t degree = std::size_t{p} * p;
  if (degree > degree_cap) throw CapExceeded("semidirect_affine: degree cap");
  auto point = [p](unsigned x, unsigned y) {
    return static_cast<Point>(x + p * y);
  };
  std::vector<Point> t1(degree), t2(degree), lin(degree);
  for (unsigned y = 0; y < p; ++y)
    for (unsigned x = 0; x < p; ++x) {
      Point i = point(x, y);
      t1[i] = point((x + 1) % p, y);
      t2[i] = point(x, (y + 1) % p);
      lin[i] = point((m.a * x + m.b * y) % p, (m.c * x + m.d * y) % p);
    }
  std::vector<Perm> gens{PermBuilder::make(std::move(t1)),
                         PermBuilder::make(std::move(t2))};
  if (!m.is_identity()) gens.push_back(Perm(std::move(lin)));
  return PermGroup(degree, std::move(gens));
}

PermGroup paper_example() {
  return semidirect_affine(29, find_irreducible_element(29, 15));
}

PermGroup psl2(unsigned q) {
  if (q != 5 && q != 7 && q != 11)
    throw InvalidInput("psl2: supported q are 5, 7, 11");
  std::size_t degree = q + 1;  // point q is infinity
  const Point inf = static_cast<Point>(q);
  std::vector<Point> shift(degree), inv(degree);
  shift[inf] = inf;
  for (unsigned x = 0; x < q; ++x) shift[x] = static_cast<Point>((x + 1) % q);
  // x -> -1/x, with 0 <-> infinity
  auto mod_inverse = [q](unsigned x) {
    for (unsigned y = 1; y < q; ++y)
      if (x * y % q == 1) return y;
    throw InvalidInput("not invertible");
  };
  inv[0] = inf;
  inv[inf] = 0;
  for (unsigned x = 1; x < q; ++x)
    inv[x] = static_cast<Point>((q - mod_inverse(x)) % q);
  return PermGroup(degree,
                   {Perm(std::move(shift)), Perm(std::move(inv))});
}

namespace {

std::vector<std::vector<unsigned>> parse_cycles(const std::string& s) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) throw InvalidInput("gen line without cycles");
  while (i < s.size()) {
    if (s[i] != '(') throw InvalidInput("expected '(' in cycle list");
    ++i;
    std::vector<unsigned> cyc;
    skip_ws();
    while (i < s.size() && s[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw InvalidInput("expected point number in cycle");
      unsigned v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > kMaxDegree) throw InvalidInput("point number too large");
        ++i;
      }
      cyc.push_back(v);
      skip_ws();
    }
    if (i == s.size()) throw InvalidInput("unterminated cycle");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace

PermGroup parse_group_file(const std::string& text, std::size_t degree_cap) {
  std::istringstream in(text);
  std::string line;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    std::string keyword;
    ls >> keyword;
    if (!have_degree) {
      if (keyword != "degree")
        throw InvalidInput("expected 'degree N' before any generators");
      long long n = -1;
      ls >> n;
      if (!ls || n < 1) throw InvalidInput("bad degree value");
      if (static_cast<std::size_t>(n) > degree_cap)
        throw CapExceeded("declared degree exceeds cap");
      degree = static_cast<std::size_t>(n);
      have_degree = true;
    } else if (keyword == "gen") {
      std::string rest;
      std::getline(ls, rest);
      gens.push_back(Perm::from_cycles(degree, parse_cycles(rest)));
    } else {
      throw InvalidInput("unrecognized line: " + keyword);
    }
  }
  if (!have_degree) throw InvalidInput("missing degree line");
  return PermGroup(degree, std::move(gens));
}

std::string serialize_group(const PermGroup& g) {
  std::ostringstream out;
  out << "degree " << g.degree() << "\n";
  for (const auto& p : g.generators()) out << "gen " << p.cycle_string() << "\n";
  return out.str();
}

}  // namespace h2m
