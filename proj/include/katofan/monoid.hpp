#pragma once

/**
 * @file monoid.hpp
 * @brief Fine (and saturated) monoids embedded in integer lattices.
 *
 * An AffineMonoid is a finitely generated submonoid of Z^d whose generators
 * span Z^d as a group, so P^gp = Z^d and homomorphisms are integer matrices.
 * Faces are stored as sets of generator indices; the prime ideal of a face is
 * the complementary set.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "katofan/lattice.hpp"
#include "katofan/polyhedral.hpp"

namespace katofan {

/// A face, as the sorted indices of the generators it contains.
struct Face {
  std::vector<std::size_t> generators;
  friend auto operator<=>(const Face&, const Face&) = default;
};

/// A prime ideal P \ F, as the sorted indices of the generators it contains.
struct Prime {
  std::vector<std::size_t> generators;
  friend auto operator<=>(const Prime&, const Prime&) = default;
};

namespace detail {

inline std::vector<std::size_t> complement_indices(const std::vector<std::size_t>& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

// Depth-first search for nonnegative coefficients on `gens` summing to
// `target`, where every generator has positive degree.
class CombinationSearch {
 public:
  CombinationSearch(const std::vector<IntVector>& gens, const std::vector<Int>& degrees,
                    const std::vector<IntVector>& facets, const std::vector<IntVector>& residual_lattice)
      : gens_(gens), degrees_(degrees), facets_(facets), lattice_(residual_lattice) {}

  /// Coefficients on gens with target - sum in the residual lattice.
  std::optional<std::vector<Int>> run(const IntVector& target, const Int& degree) {
    coeffs_.assign(gens_.size(), Int(0));
    failed_.clear();
    if (search(0, target, degree)) return coeffs_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t j, const IntVector& residual, const Int& budget) {
    if (!in_cone(facets_, residual)) return false;
    if (budget == 0) return lattice_membership(lattice_, residual).has_value();
    if (j == gens_.size()) return false;
    auto key = std::make_pair(j, residual);
    if (failed_.count(key)) return false;
    Int k = 0;
    IntVector r = residual;
    Int b = budget;
    while (b >= 0) {
      coeffs_[j] = k;
      if (search(j + 1, r, b)) return true;
      r = sub(r, gens_[j]);
      b -= degrees_[j];
      ++k;
      if (!in_cone(facets_, r)) break;
    }
    coeffs_[j] = 0;
    failed_.insert(std::move(key));
    return false;
  }

  const std::vector<IntVector>& gens_;
  const std::vector<Int>& degrees_;
  const std::vector<IntVector>& facets_;
  const std::vector<IntVector>& lattice_;
  std::vector<Int> coeffs_;
  std::set<std::pair<std::size_t, IntVector>> failed_;
};

}  // namespace detail

/// Basis of the sublattice generated by a vector family, and coordinates in it.
struct CanonicalEmbedding {
  std::size_t ambient_rank = 0;
  std::vector<IntVector> basis;  ///< Hermite basis of the generated group

  bool is_identity() const {
    if (basis.size() != ambient_rank) return false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < ambient_rank; ++j)
        if (basis[i][j] != (i == j ? 1 : 0)) return false;
    return true;
  }

  IntVector coordinates(const IntVector& v) const {
    if (is_identity()) return v;
    auto c = lattice_membership(basis, v);
    if (!c) throw DomainError("vector outside the embedded lattice");
    return *c;
  }

  IntVector ambient(const IntVector& coords) const {
    IntVector v(ambient_rank, Int(0));
    for (std::size_t i = 0; i < basis.size(); ++i) v = add(v, scale(basis[i], coords[i]));
    return v;
  }
};

inline CanonicalEmbedding canonical_embedding(std::size_t rank, const std::vector<IntVector>& raw) {
  for (const auto& g : raw)
    if (g.size() != rank) throw DimensionError("generator length does not match rank");
  return CanonicalEmbedding{rank, hermite_rows(raw, rank)};
}

class AffineMonoid {
 public:
  AffineMonoid() = default;

  /// Canonical form: re-embedded so the generators span Z^rank, deduplicated,
  /// zero-free and sorted colexicographically (last coordinate most significant,
  /// so N^k lists e_1, ..., e_k in order).
  static AffineMonoid make(std::size_t rank, const std::vector<IntVector>& raw) {
    auto emb = canonical_embedding(rank, raw);
    auto colex = [](const IntVector& a, const IntVector& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    };
    std::set<IntVector, decltype(colex)> gens(colex);
    for (const auto& g : raw) {
      IntVector c = emb.coordinates(g);
      if (!is_zero(c)) gens.insert(std::move(c));
    }
    return AffineMonoid(emb.basis.size(), {gens.begin(), gens.end()});
  }

  std::size_t rank() const { return rank_; }
  const std::vector<IntVector>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const IntVector& generator(std::size_t i) const { return gens_.at(i); }
  const std::vector<IntVector>& facets() const { return facets_; }
  /// Hermite basis of the unit group P*.
  const std::vector<IntVector>& unit_basis() const { return unit_basis_; }
  /// Generators lying in P*.
  const std::vector<std::size_t>& unit_generators() const { return unit_gens_; }
  bool is_sharp() const { return unit_basis_.empty(); }
  bool is_saturated() const { return saturated_; }

  bool contains(const IntVector& v) const { return membership_coefficients(v).has_value(); }

  /**
   * Nonnegative coefficients c with sum c_i g_i = v, or nothing if v is not
   * in P. For saturated monoids the cone test decides membership and the
   * search only runs when a witness is requested.
   */
  std::optional<std::vector<Int>> witness(const IntVector& v) const {
    auto c = membership_coefficients(v);
    if (!c) return std::nullopt;
    return make_nonnegative(*std::move(c), v);
  }

  friend bool operator==(const AffineMonoid& a, const AffineMonoid& b) {
    return a.rank_ == b.rank_ && a.gens_ == b.gens_;
  }

 private:
  AffineMonoid(std::size_t rank, std::vector<IntVector> gens) : rank_(rank), gens_(std::move(gens)) {
    facets_ = cone_facets(gens_, rank_);
    std::vector<IntVector> unit_vectors;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      bool on_all = true;
      for (const auto& f : facets_)
        if (dot(f, gens_[i]) != 0) {
          on_all = false;
          break;
        }
      if (on_all) {
        unit_gens_.push_back(i);
        unit_vectors.push_back(gens_[i]);
      }
    }
    unit_basis_ = hermite_rows(unit_vectors, rank_);
    grading_ = cone_grading(facets_, rank_);
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (!std::binary_search(unit_gens_.begin(), unit_gens_.end(), i)) {
        positive_gens_.push_back(gens_[i]);
        positive_degrees_.push_back(dot(grading_, gens_[i]));
        positive_index_.push_back(i);
      }
    saturated_ = true;
    auto lin = lineality_basis(facets_, rank_);
    for (const auto& b : lin)
      if (!lattice_membership(unit_basis_, b)) saturated_ = false;
    if (saturated_) {
      for (const auto& h : full_cone_lattice_generators(gens_, facets_, rank_))
        if (!search_membership(h)) {
          saturated_ = false;
          break;
        }
    }
  }

  std::optional<std::vector<Int>> search_membership(const IntVector& v) const {
    if (v.size() != rank_) throw DimensionError("membership: dimension mismatch");
    if (!in_cone(facets_, v)) return std::nullopt;
    detail::CombinationSearch search(positive_gens_, positive_degrees_, facets_, unit_basis_);
    auto c = search.run(v, dot(grading_, v));
    if (!c) return std::nullopt;
    std::vector<Int> full(gens_.size(), Int(0));
    for (std::size_t k = 0; k < positive_index_.size(); ++k) full[positive_index_[k]] = (*c)[k];
    return full;
  }

  std::optional<std::vector<Int>> membership_coefficients(const IntVector& v) const {
    if (v.size() != rank_) throw DimensionError("membership: dimension mismatch");
    if (saturated_) {
      if (!in_cone(facets_, v)) return std::nullopt;
      return std::vector<Int>{};  // placeholder: witness computed on demand
    }
    return search_membership(v);
  }

  // Turns a membership certificate into nonnegative coefficients on all
  // generators, expressing the unit part through the unit generators.
  std::vector<Int> make_nonnegative(std::vector<Int> coeffs, const IntVector& v) const {
    if (coeffs.empty() && !gens_.empty()) {
      auto c = search_membership(v);
      if (!c) throw DomainError("internal: saturated membership without witness");
      coeffs = *std::move(c);
    }
    if (coeffs.empty()) coeffs.assign(gens_.size(), Int(0));
    IntVector residual = v;
    for (std::size_t i = 0; i < gens_.size(); ++i) residual = sub(residual, scale(gens_[i], coeffs[i]));
    if (is_zero(residual)) return coeffs;
    // residual lies in P*; write it with nonnegative unit-generator coefficients
    auto unit_coeffs = nonnegative_unit_combination(residual);
    for (std::size_t k = 0; k < unit_gens_.size(); ++k) coeffs[unit_gens_[k]] += unit_coeffs[k];
    return coeffs;
  }

  std::vector<Int> nonnegative_unit_combination(const IntVector& r) const {
    std::vector<IntVector> ug;
    for (auto i : unit_gens_) ug.push_back(gens_[i]);
    auto sol = solve_integer(IntMatrix::from_columns(ug, rank_), r);
    if (!sol) throw DomainError("internal: residual outside the unit group");
    std::vector<Int> out(ug.size(), Int(0));
    for (std::size_t k = 0; k < ug.size(); ++k) {
      if ((*sol)[k] >= 0) {
        out[k] += (*sol)[k];
        continue;
      }
      auto neg = negation_in_units(ug, k);
      for (std::size_t m = 0; m < ug.size(); ++m) out[m] += -(*sol)[k] * neg[m];
    }
    return out;
  }

  // Nonnegative coefficients expressing -ug[k] through the unit generators.
  std::vector<Int> negation_in_units(const std::vector<IntVector>& ug, std::size_t k) const {
    IntVector target = negate(ug[k]);
    std::vector<Int> c(ug.size(), Int(0));
    std::function<bool(std::size_t, IntVector, long)> dfs = [&](std::size_t j, IntVector r, long budget) -> bool {
      if (is_zero(r)) return true;
      if (j == ug.size() || budget == 0) return false;
      for (long m = 0; m <= budget; ++m) {
        c[j] = m;
        if (dfs(j + 1, r, budget - m)) return true;
        r = sub(r, ug[j]);
      }
      c[j] = 0;
      return false;
    };
    for (long bound = 1; bound <= 256; ++bound) {
      std::fill(c.begin(), c.end(), Int(0));
      if (dfs(0, target, bound)) return c;
    }
    throw DomainError("unit group negation exceeds search bound");
  }

  std::size_t rank_ = 0;
  std::vector<IntVector> gens_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> unit_basis_;
  std::vector<std::size_t> unit_gens_;
  IntVector grading_;
  std::vector<IntVector> positive_gens_;
  std::vector<Int> positive_degrees_;
  std::vector<std::size_t> positive_index_;
  bool saturated_ = true;
};

inline AffineMonoid make_monoid(std::size_t rank, const std::vector<IntVector>& raw) {
  return AffineMonoid::make(rank, raw);
}

inline AffineMonoid zero_monoid() { return AffineMonoid::make(0, {}); }

/// N^k with the standard basis.
inline AffineMonoid free_monoid(std::size_t k) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector e(k, Int(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return AffineMonoid::make(k, gens);
}

/// Homomorphism P -> Q given by its matrix on the ambient lattices.
struct MonoidHom {
  AffineMonoid source;
  AffineMonoid target;
  IntMatrix matrix;  ///< target.rank() x source.rank()

  IntVector operator()(const IntVector& v) const { return matrix.apply(v); }
};

inline MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
  return MonoidHom{f.source, g.target, g.matrix * f.matrix};
}

inline MonoidHom identity_hom(const AffineMonoid& P) {
  return MonoidHom{P, P, IntMatrix::identity(P.rank())};
}

inline std::vector<IntVector> unit_group(const AffineMonoid& P) { return P.unit_basis(); }

// ---------------------------------------------------------------------------
// Faces and primes

inline Prime prime_of(const AffineMonoid& P, const Face& F) {
  return Prime{detail::complement_indices(F.generators, P.size())};
}

inline Face face_of(const AffineMonoid& P, const Prime& p) {
  return Face{detail::complement_indices(p.generators, P.size())};
}

inline Face whole_face(const AffineMonoid& P) {
  Face F;
  for (std::size_t i = 0; i < P.size(); ++i) F.generators.push_back(i);
  return F;
}

/// The smallest face: P* (the zero face when P is sharp).
inline Face minimal_face(const AffineMonoid& P) { return Face{P.unit_generators()}; }

/// Sum of the facet normals vanishing on F; zero on F, positive on P \ F.
inline IntVector supporting_functional(const AffineMonoid& P, const Face& F) {
  IntVector phi(P.rank(), Int(0));
  for (const auto& f : P.facets()) {
    bool vanishes = true;
    for (auto i : F.generators)
      if (dot(f, P.generator(i)) != 0) {
        vanishes = false;
        break;
      }
    if (vanishes) phi = add(phi, f);
  }
  return phi;
}

/// Membership of an element of P in the face F.
inline bool in_face(const AffineMonoid& P, const Face& F, const IntVector& v) {
  return dot(supporting_functional(P, F), v) == 0;
}

/// Smallest face containing the given elements of P.
inline Face face_closure(const AffineMonoid& P, const std::vector<IntVector>& elements) {
  std::vector<const IntVector*> active;
  for (const auto& f : P.facets()) {
    bool vanishes = true;
    for (const auto& e : elements)
      if (dot(f, e) != 0) {
        vanishes = false;
        break;
      }
    if (vanishes) active.push_back(&f);
  }
  Face F;
  for (std::size_t i = 0; i < P.size(); ++i) {
    bool on = true;
    for (const auto* f : active)
      if (dot(*f, P.generator(i)) != 0) {
        on = false;
        break;
      }
    if (on) F.generators.push_back(i);
  }
  return F;
}

inline std::vector<IntVector> face_elements(const AffineMonoid& P, const Face& F) {
  std::vector<IntVector> out;
  for (auto i : F.generators) out.push_back(P.generator(i));
  return out;
}

/**
 * Supporting-functional test: does some rational phi vanish exactly on the
 * selected generators and stay positive on the others? Decided by
 * Fourier-Motzkin elimination.
 */
inline bool is_face(const AffineMonoid& P, const Face& F) {
  for (auto i : F.generators)
    if (i >= P.size()) return false;
  if (!std::is_sorted(F.generators.begin(), F.generators.end())) return false;
  const std::size_t d = P.rank();
  std::vector<LinearConstraint> eq, ge;
  std::vector<bool> selected(P.size(), false);
  for (auto i : F.generators) selected[i] = true;
  for (std::size_t i = 0; i < P.size(); ++i) {
    RatVector row(P.generator(i).begin(), P.generator(i).end());
    if (selected[i])
      eq.push_back({std::move(row), 0});
    else
      ge.push_back({std::move(row), 1});
  }
  return fm_feasible(d, std::move(eq), std::move(ge));
}

/// All faces, ordered by size and then lexicographically (inclusion-compatible).
inline std::vector<Face> faces(const AffineMonoid& P) {
  std::vector<std::vector<std::size_t>> facet_sets;
  for (const auto& f : P.facets()) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < P.size(); ++i)
      if (dot(f, P.generator(i)) == 0) s.push_back(i);
    facet_sets.push_back(std::move(s));
  }
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue{whole_face(P).generators};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& fs : facet_sets) {
      std::vector<std::size_t> meet;
      std::set_intersection(queue[head].begin(), queue[head].end(), fs.begin(), fs.end(), std::back_inserter(meet));
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  std::vector<Face> out;
  for (auto& s : seen) out.push_back(Face{s});
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.generators.size() != b.generators.size()) return a.generators.size() < b.generators.size();
    return a.generators < b.generators;
  });
  return out;
}

/// h^{-1}(G) for a face G of the target.
inline Face preimage_face(const MonoidHom& h, const Face& G) {
  IntVector phi = supporting_functional(h.target, G);
  Face F;
  for (std::size_t i = 0; i < h.source.size(); ++i)
    if (dot(phi, h(h.source.generator(i))) == 0) F.generators.push_back(i);
  return F;
}

/// Face of Q generated by the image of a face of P.
inline Face image_face(const MonoidHom& h, const Face& F) {
  std::vector<IntVector> imgs;
  for (auto i : F.generators) imgs.push_back(h(h.source.generator(i)));
  return face_closure(h.target, imgs);
}

// ---------------------------------------------------------------------------
// Sharpening, saturation, localisation

/// P -> P / P*, with the quotient taken along the saturated lineality lattice.
inline std::pair<AffineMonoid, MonoidHom> sharpen(const AffineMonoid& P) {
  const std::size_t d = P.rank();
  auto rows = kernel_basis(IntMatrix::from_rows(P.unit_basis(), d));
  IntMatrix pi = IntMatrix::from_rows(rows, d);
  std::vector<IntVector> images;
  for (const auto& g : P.generators()) images.push_back(pi.apply(g));
  AffineMonoid Q = AffineMonoid::make(rows.size(), images);
  return {Q, MonoidHom{P, Q, pi}};
}

/// Hilbert basis of cone(generators) ∩ Z^rank; the cone must be pointed.
inline std::vector<IntVector> hilbert_basis(std::size_t rank, const std::vector<IntVector>& generators) {
  for (const auto& g : generators)
    if (g.size() != rank) throw DimensionError("hilbert_basis: generator length does not match rank");
  auto span = saturated_span(generators, rank);
  if (span.empty()) return {};
  const std::size_t k = span.size();
  std::vector<IntVector> coords;
  for (const auto& g : generators) coords.push_back(*lattice_membership(span, g));
  auto facets = cone_facets(coords, k);
  if (!lineality_basis(facets, k).empty()) throw DomainError("hilbert_basis: cone is not pointed");
  std::vector<IntVector> out;
  for (const auto& h : pointed_hilbert_basis(coords, facets, k)) {
    IntVector v(rank, Int(0));
    for (std::size_t i = 0; i < k; ++i) v = add(v, scale(span[i], h[i]));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Generators of cone(raw) ∩ Z^rank (saturation inside the ambient lattice).
inline std::vector<IntVector> ambient_saturation(std::size_t rank, const std::vector<IntVector>& raw) {
  for (const auto& g : raw)
    if (g.size() != rank) throw DimensionError("ambient_saturation: generator length does not match rank");
  auto span = saturated_span(raw, rank);
  if (span.empty()) return {};
  const std::size_t k = span.size();
  std::vector<IntVector> coords;
  for (const auto& g : raw) coords.push_back(*lattice_membership(span, g));
  auto facets = cone_facets(coords, k);
  std::set<IntVector> out;
  for (const auto& h : full_cone_lattice_generators(coords, facets, k)) {
    IntVector v(rank, Int(0));
    for (std::size_t i = 0; i < k; ++i) v = add(v, scale(span[i], h[i]));
    out.insert(std::move(v));
  }
  return {out.begin(), out.end()};
}

/// P^sat = cone(P) ∩ P^gp, in the same coordinates as P.
inline AffineMonoid saturate(const AffineMonoid& P) {
  if (P.is_saturated()) return P;
  return AffineMonoid::make(P.rank(), full_cone_lattice_generators(P.generators(), P.facets(), P.rank()));
}

/// P -> (P_F)/(P_F)*: invert the face, then divide out the units.
inline std::pair<AffineMonoid, MonoidHom> sharp_localize(const AffineMonoid& P, const Face& F) {
  if (!is_face(P, F)) throw DomainError("sharp_localize: not a face");
  std::vector<IntVector> gens = P.generators();
  for (auto i : F.generators) gens.push_back(negate(P.generator(i)));
  AffineMonoid PF = AffineMonoid::make(P.rank(), gens);
  auto [Q, pi] = sharpen(PF);
  return {Q, MonoidHom{P, Q, pi.matrix}};
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct HomReport {
  MonoidHom hom;
  bool is_local = false;
  bool is_iso = false;
  bool is_face_localization = false;
  std::vector<std::vector<Int>> witnesses;  ///< one per source generator
};

namespace detail {

inline bool is_monoid_iso(const IntMatrix& m, const AffineMonoid& P, const AffineMonoid& Q) {
  if (m.rows() != m.cols() || P.rank() != Q.rank()) return false;
  if (!is_unimodular(m)) return false;
  for (const auto& g : P.generators())
    if (!Q.contains(m.apply(g))) return false;
  IntMatrix inv = inverse_unimodular(m);
  for (const auto& q : Q.generators())
    if (!P.contains(inv.apply(q))) return false;
  return true;
}

}  // namespace detail

/// h^{-1}(Q*) as a face of the source.
inline Face unit_preimage(const MonoidHom& h) {
  Face F;
  for (std::size_t i = 0; i < h.source.size(); ++i)
    if (h.target.contains(negate(h(h.source.generator(i))))) F.generators.push_back(i);
  return F;
}

/**
 * Checks that the matrix maps every generator of P into Q and classifies the
 * resulting homomorphism. Throws DomainError otherwise.
 */
inline HomReport validate_hom(const IntMatrix& matrix, const AffineMonoid& P, const AffineMonoid& Q) {
  if (matrix.rows() != Q.rank() || matrix.cols() != P.rank())
    throw DimensionError("validate_hom: matrix is " + std::to_string(matrix.rows()) + "x" +
                         std::to_string(matrix.cols()) + ", expected " + std::to_string(Q.rank()) + "x" +
                         std::to_string(P.rank()));
  HomReport r;
  r.hom = MonoidHom{P, Q, matrix};
  for (std::size_t i = 0; i < P.size(); ++i) {
    auto w = Q.witness(matrix.apply(P.generator(i)));
    if (!w) throw DomainError("validate_hom: image of generator " + std::to_string(i) + " lies outside the target");
    r.witnesses.push_back(*std::move(w));
  }
  r.is_iso = detail::is_monoid_iso(matrix, P, Q);
  Face kernel_face = unit_preimage(r.hom);
  r.is_local = kernel_face == minimal_face(P);
  auto [Pbar, loc] = sharp_localize(P, kernel_face);
  auto [Qbar, sq] = sharpen(Q);
  if (auto induced = try_factor_through(sq.matrix * matrix, loc.matrix))
    r.is_face_localization = detail::is_monoid_iso(*induced, Pbar, Qbar);
  return r;
}

// ---------------------------------------------------------------------------
// Pushouts

struct Pushout {
  AffineMonoid monoid;
  MonoidHom first;   ///< P -> P (+)_S Q
  MonoidHom second;  ///< Q -> P (+)_S Q
};

/**
 * Amalgamated sum in fs monoids: the image of P (+) Q in the torsion-free
 * quotient of P^gp (+) Q^gp by the antidiagonal image of S^gp, saturated.
 */
inline Pushout fs_pushout(const MonoidHom& h1, const MonoidHom& h2) {
  if (!(h1.source == h2.source)) throw DomainError("fs_pushout: homomorphisms have different sources");
  const std::size_t dp = h1.target.rank(), dq = h2.target.rank(), ds = h1.source.rank();
  IntMatrix neg(dq, ds);
  for (std::size_t i = 0; i < dq; ++i)
    for (std::size_t j = 0; j < ds; ++j) neg(i, j) = -h2.matrix(i, j);
  IntMatrix K = IntMatrix::vconcat(h1.matrix, neg);
  auto rows = kernel_basis(K.transpose());
  IntMatrix pi = IntMatrix::from_rows(rows, dp + dq);
  IntMatrix i1(rows.size(), dp), i2(rows.size(), dq);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < dp; ++j) i1(r, j) = pi(r, j);
    for (std::size_t j = 0; j < dq; ++j) i2(r, j) = pi(r, dp + j);
  }
  std::vector<IntVector> images;
  for (const auto& p : h1.target.generators()) images.push_back(i1.apply(p));
  for (const auto& q : h2.target.generators()) images.push_back(i2.apply(q));
  AffineMonoid T = saturate(AffineMonoid::make(rows.size(), images));
  return Pushout{T, MonoidHom{h1.target, T, i1}, MonoidHom{h2.target, T, i2}};
}

/// The unique u: P (+)_S Q -> W with u.first = a and u.second = b, if any.
inline std::optional<MonoidHom> factor_through_pushout(const Pushout& po, const MonoidHom& a, const MonoidHom& b) {
  if (!(a.target == b.target)) throw DomainError("factor_through_pushout: targets differ");
  auto u = try_factor_through(IntMatrix::hconcat(a.matrix, b.matrix),
                              IntMatrix::hconcat(po.first.matrix, po.second.matrix));
  if (!u) return std::nullopt;
  for (const auto& t : po.monoid.generators())
    if (!a.target.contains(u->apply(t))) return std::nullopt;
  return MonoidHom{po.monoid, a.target, *u};
}

// ---------------------------------------------------------------------------
// Automorphisms

/// Irreducible elements of a sharp monoid (its minimal generating set).
inline std::vector<IntVector> irreducibles(const AffineMonoid& P) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < P.size(); ++i) {
    bool reducible = false;
    for (std::size_t j = 0; j < P.size() && !reducible; ++j)
      if (j != i && P.contains(sub(P.generator(i), P.generator(j)))) reducible = true;
    if (!reducible) out.push_back(P.generator(i));
  }
  return out;
}

/// Aut(P) for a sharp monoid, as sorted unimodular matrices.
inline std::vector<IntMatrix> automorphism_group(const AffineMonoid& P) {
  if (!P.is_sharp()) throw DomainError("automorphism_group: monoid is not sharp");
  const std::size_t d = P.rank();
  if (d == 0) return {IntMatrix::identity(0)};
  auto irr = irreducibles(P);
  std::set<IntVector> irr_set(irr.begin(), irr.end());
  std::vector<std::size_t> basis_idx;
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < irr.size() && basis.size() < d; ++i) {
    basis.push_back(irr[i]);
    if (rank_of(basis, d) == basis.size())
      basis_idx.push_back(i);
    else
      basis.pop_back();
  }
  IntMatrix B = IntMatrix::from_columns(basis, d);
  auto B_inv = rational_inverse(B);
  std::set<IntMatrix> found;
  std::vector<std::size_t> choice(d);
  std::vector<bool> used(irr.size(), false);
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == d) {
      IntMatrix A(d, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          Rational s = 0;
          for (std::size_t m = 0; m < d; ++m) s += Rational(irr[choice[m]][r]) * B_inv[m][c];
          if (denominator_of(s) != 1) return;
          A(r, c) = numerator_of(s);
        }
      if (!is_unimodular(A)) return;
      for (const auto& g : irr)
        if (!irr_set.count(A.apply(g))) return;
      found.insert(A);
      return;
    }
    for (std::size_t i = 0; i < irr.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      choice[k] = i;
      assign(k + 1);
      used[i] = false;
    }
  };
  assign(0);
  return {found.begin(), found.end()};
}

}  // namespace katofan
