#include "ginshift/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ginshift/errors.hpp"
#include "ginshift/random.hpp"

namespace ginshift {

namespace {

bool face_less(Face a, Face b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

bool subset(Face a, Face b) { return (a & ~b) == 0; }

Monomial face_monomial(Face f, std::size_t n) {
  std::vector<int> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = (f >> i) & 1u;
  return Monomial::from_exponents(e);
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t n) : n_(n) {
  if (n > kMaxVertices) throw std::invalid_argument("at most 20 vertices are supported");
}

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Face> faces) : SimplicialComplex(n) {
  const Face universe = n == 32 ? ~Face{0} : (Face{1} << n) - 1;
  for (Face f : faces)
    if (!subset(f, universe)) throw std::invalid_argument("face uses a vertex beyond x" + std::to_string(n));
  std::sort(faces.begin(), faces.end(), face_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < faces.size() && maximal; ++j)
      if (subset(faces[i], faces[j])) maximal = false;
    if (maximal) facets_.push_back(faces[i]);
  }
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return subset(f, g); });
}

std::vector<Face> SimplicialComplex::faces() const {
  std::set<Face> all;
  for (Face g : facets_) {
    // All submasks of g, including 0.
    for (Face s = g;; s = (s - 1) & g) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<Face> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw std::invalid_argument("the void complex has no dimension");
  int d = -1;
  for (Face f : facets_) d = std::max(d, std::popcount(f) - 1);
  return d;
}

FVector f_vector(const SimplicialComplex& c) {
  if (c.is_void()) throw std::invalid_argument("f-vector of the void complex");
  FVector f;
  f.entries.assign(static_cast<std::size_t>(c.dimension() + 2), 0);
  for (Face s : c.faces()) ++f.entries[static_cast<std::size_t>(std::popcount(s))];
  return f;
}

MonomialIdeal stanley_reisner(const SimplicialComplex& c) {
  const std::size_t n = c.nvertices();
  if (c.is_void()) return MonomialIdeal(n, {Monomial(n)});
  // A minimal non-face is a non-face each of whose codimension-one subsets is a face.
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i)
    if (!c.contains(Face{1} << i)) gens.push_back(Monomial::variable(n, i));
  for (Face f : c.faces()) {
    for (std::size_t i = 0; i < n; ++i) {
      const Face bit = Face{1} << i;
      if ((f & bit) || !c.contains(bit)) continue;
      // Only extend by indices above the top bit of f, so each set is visited once.
      if (f != 0 && (std::bit_width(f) > i)) continue;
      const Face g = f | bit;
      if (c.contains(g)) continue;
      bool minimal = true;
      for (Face rest = g; rest && minimal; rest &= rest - 1) {
        const Face low = rest & (~rest + 1);
        if (!c.contains(g & ~low)) minimal = false;
      }
      if (minimal) gens.push_back(face_monomial(g, n));
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& m) {
  const std::size_t n = m.nvars();
  if (n > SimplicialComplex::kMaxVertices) throw std::invalid_argument("at most 20 vertices are supported");
  for (const Monomial& g : m.generators())
    if (!g.is_squarefree()) throw std::invalid_argument("non-squarefree generator " + to_string(g));
  if (m.is_unit()) return SimplicialComplex(n);
  // Grow faces upward from ∅: a set is a face iff no generator's support lies in it.
  auto is_face = [&](Face f) {
    for (const Monomial& g : m.generators())
      if (subset(static_cast<Face>(g.support()), f)) return false;
    return true;
  };
  std::vector<Face> all;
  std::vector<Face> layer{0};
  while (!layer.empty()) {
    std::vector<Face> next;
    for (Face f : layer) {
      all.push_back(f);
      for (std::size_t i = std::bit_width(f); i < n; ++i) {
        const Face g = f | (Face{1} << i);
        if (is_face(g)) next.push_back(g);
      }
    }
    layer = std::move(next);
  }
  return SimplicialComplex(n, std::move(all));
}

Monomial sigma(const Monomial& m, std::size_t target_nvars) {
  std::vector<int> e(target_nvars);
  std::size_t t = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    for (unsigned k = 0; k < m[i]; ++k, ++t) {
      const std::size_t idx = i + t;
      if (idx >= target_nvars) throw std::out_of_range("σ-image needs more than " + std::to_string(target_nvars) + " variables");
      e[idx] = 1;
    }
  return Monomial::from_exponents(e);
}

MonomialIdeal sigma(const MonomialIdeal& m) {
  const unsigned maxdeg = m.max_generator_degree();
  const std::size_t target = m.nvars() + (maxdeg > 0 ? maxdeg - 1 : 0);
  std::vector<Monomial> gens;
  for (const Monomial& g : m.generators()) gens.push_back(sigma(g, target));
  return MonomialIdeal(target, std::move(gens));
}

SimplicialComplex delta_s(const SimplicialComplex& c, const GinConfig& config) {
  const std::size_t n = c.nvertices();
  const MonomialIdeal shifted = sigma(gin(stanley_reisner(c), TermOrder::RevLex, config).gin);
  std::vector<Monomial> gens;
  std::vector<int> e(n);
  for (const Monomial& g : shifted.generators()) {
    for (std::size_t i = n; i < shifted.nvars(); ++i)
      if (g[i] != 0) throw ShiftOverflow("σ-image " + to_string(g) + " leaves the " + std::to_string(n) + " original variables");
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<int>(g[i]);
    gens.push_back(Monomial::from_exponents(e));
  }
  return complex_of_ideal(MonomialIdeal(n, std::move(gens)));
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  const std::size_t n = a.nvertices() + b.nvertices();
  if (n > SimplicialComplex::kMaxVertices) throw std::invalid_argument("disjoint union exceeds 20 vertices");
  if (a.is_void() || b.is_void()) {
    // The void complex has no empty face to glue along; keep the other side's faces.
    std::vector<Face> faces;
    for (Face f : a.facets()) faces.push_back(f);
    for (Face f : b.facets()) faces.push_back(f << a.nvertices());
    return faces.empty() ? SimplicialComplex(n) : SimplicialComplex(n, std::move(faces));
  }
  std::vector<Face> faces(a.facets().begin(), a.facets().end());
  for (Face f : b.facets()) faces.push_back(f << a.nvertices());
  return SimplicialComplex(n, std::move(faces));
}

bool is_shifted(const SimplicialComplex& c) {
  const std::size_t n = c.nvertices();
  for (Face f : c.faces())
    for (std::size_t i = 0; i < n; ++i) {
      if (!(f & (Face{1} << i))) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (f & (Face{1} << j)) continue;
        if (!c.contains((f & ~(Face{1} << i)) | (Face{1} << j))) return false;
      }
    }
  return true;
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& c) {
  if (sub.nvertices() != c.nvertices()) throw std::invalid_argument("subcomplex test across vertex sets");
  return std::all_of(sub.facets().begin(), sub.facets().end(), [&](Face f) { return c.contains(f); });
}

SimplicialComplex random_complex(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random complex needs a vertex");
  Rng rng(seed);
  const auto count = rng.uniform(1, 6);
  const auto max_size = static_cast<std::int64_t>(std::min<std::size_t>(4, n));
  std::vector<Face> facets;
  for (std::int64_t k = 0; k < count; ++k) {
    const auto size = rng.uniform(1, max_size);
    Face f = 0;
    while (std::popcount(f) < size) f |= Face{1} << rng.uniform(0, static_cast<std::int64_t>(n) - 1);
    facets.push_back(f);
  }
  return SimplicialComplex(n, std::move(facets));
}

std::string to_string(const SimplicialComplex& c) {
  if (c.is_void()) return "void";
  std::string s;
  for (std::size_t k = 0; k < c.facets().size(); ++k) {
    if (k) s += ' ';
    s += '{';
    bool first = true;
    for (std::size_t i = 0; i < c.nvertices(); ++i)
      if (c.facets()[k] & (Face{1} << i)) {
        if (!first) s += ',';
        s += std::to_string(i + 1);
        first = false;
      }
    s += '}';
  }
  return s;
}

std::string to_string(const FVector& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(f.entries[i]);
  }
  return s + ")";
}

}  // namespace ginshift
