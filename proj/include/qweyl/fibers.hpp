#pragma once

// Fibers of D_q(C^N) over central characters at a root of unity, and the
// matrix-algebra (Azumaya) certificate: trivial centre plus a nondegenerate
// regular trace form.

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qweyl/center.hpp"
#include "qweyl/commpoly.hpp"
#include "qweyl/sparse.hpp"

namespace qweyl {

/// Values of the l-th powers of the generators: nu[i] for x_{i+1}^ell, nu_check[i] for d_{i+1}^ell.
struct CentralCharacter {
  std::vector<Rational> nu, nu_check;
};

/// 1 + sum_{j<=i} nu_j nu_check_j for i = 1..N.
inline std::vector<Rational> locus_values(const CentralCharacter& c) {
  std::vector<Rational> out;
  Rational s = 1;
  for (std::size_t j = 0; j < c.nu.size(); ++j) {
    s += c.nu[j] * c.nu_check[j];
    out.push_back(s);
  }
  return out;
}

inline bool in_locus(const CentralCharacter& c) {
  for (const auto& v : locus_values(c))
    if (v == 0) return false;
  return true;
}

/// Bitmask of the vanishing pattern of locus_values (bit i-1 set iff the i-th value is 0).
inline unsigned locus_pattern(const CentralCharacter& c) {
  unsigned bits = 0;
  auto v = locus_values(c);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == 0) bits |= 1u << i;
  return bits;
}

/// Finite-dimensional algebra given by a presentation whose power rules cut
/// the PBW basis down to monomials with bounded exponents.
template <class C>
class FiniteAlgebra {
 public:
  /// gradings: weight vectors respected by the rules modulo `modulus` (0 = exactly).
  explicit FiniteAlgebra(Presentation<C> p, std::vector<std::vector<long>> gradings = {}, long modulus = 0)
      : eng_(std::move(p)), gradings_(std::move(gradings)), modulus_(modulus) {
    const auto& pr = eng_.presentation();
    int bound = 0;
    for (int g = 0; g < pr.size(); ++g) {
      if (!pr.power_rule(g)) throw PresentationError("finite algebra needs a power rule on every generator");
      bound += pr.power_rule(g)->first - 1;
    }
    basis_ = monomials_up_to(pr, bound);
    std::sort(basis_.begin(), basis_.end());
    for (std::size_t k = 0; k < basis_.size(); ++k) index_[basis_[k]] = k;
  }

  Engine<C>& engine() { return eng_; }
  const Presentation<C>& presentation() const { return eng_.presentation(); }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t index(const Monomial& m) const { return index_.at(m); }

  /// Coordinates of an element in the monomial basis.
  SparseRow<C> coordinates(const Element<C>& e) const {
    SparseRow<C> r;
    for (const auto& [m, c] : e) {
      auto it = index_.find(m);
      if (it == index_.end()) throw PresentationError("element leaves the finite basis");
      r.emplace_back(it->second, c);
    }
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  }

  Element<C> product(std::size_t i, std::size_t j) {
    return eng_.multiply(basis_[i], basis_[j]);
  }

  /// Dimension of the centre: kernel of e -> ([e, g])_g over all generators.
  /// Solved per homogeneous component of the gradings that the rules respect.
  std::size_t center_dimension() {
    const auto& p = presentation();
    std::map<std::vector<long>, std::vector<std::size_t>> comps = components();
    std::size_t dim = 0;
    for (const auto& [key, cols] : comps) {
      // Transposed system: one sparse row per basis element e, one column per (g, monomial).
      std::vector<SparseRow<C>> rows;
      std::size_t ncols = dimension();
      for (std::size_t k : cols) {
        SparseRow<C> r;
        Element<C> e = Element<C>::monomial(basis_[k], p.scalar(1));
        for (int g = 0; g < p.size(); ++g) {
          for (auto [c, v] : coordinates(eng_.commutator(e, p.generator(g)))) r.emplace_back(c + ncols * static_cast<std::size_t>(g), v);
        }
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(r));
      }
      dim += cols.size() - sparse_rank(std::move(rows));
    }
    return dim;
  }

  /// tr(L_b) for every basis element b.
  std::vector<C> regular_traces() {
    std::vector<C> t(dimension());
    for (std::size_t k = 0; k < dimension(); ++k) {
      C s{};
      for (std::size_t j = 0; j < dimension(); ++j) {
        C c = product(k, j).coeff(basis_[j]);
        if (!is_zero(c)) s += c;
      }
      t[k] = s;
    }
    return t;
  }

  /// Rank of B(u, v) = tr(L_u L_v) = tr(L_{uv}).
  std::size_t trace_form_rank() {
    auto t = regular_traces();
    std::vector<SparseRow<C>> rows;
    for (std::size_t i = 0; i < dimension(); ++i) {
      SparseRow<C> r;
      for (std::size_t j = 0; j < dimension(); ++j) {
        C s{};
        for (const auto& [m, c] : product(i, j)) {
          const C& tr = t[index_.at(m)];
          if (!is_zero(tr)) s += c * tr;
        }
        if (!is_zero(s)) r.emplace_back(j, std::move(s));
      }
      rows.push_back(std::move(r));
    }
    return sparse_rank(std::move(rows));
  }

 private:
  std::map<std::vector<long>, std::vector<std::size_t>> components() {
    const auto& p = presentation();
    std::map<std::vector<long>, std::vector<std::size_t>> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      std::vector<long> key;
      for (const auto& w : gradings_) {
        long s = 0;
        for (int g = 0; g < p.size(); ++g) s += w[static_cast<std::size_t>(g)] * basis_[k][g];
        if (modulus_) s = ((s % modulus_) + modulus_) % modulus_;
        key.push_back(s);
      }
      out[key].push_back(k);
    }
    return out;
  }

  Engine<C> eng_;
  std::vector<std::vector<long>> gradings_;
  long modulus_ = 0;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

/// The fiber D_q(C^N) / (x_i^ell - nu_i, d_i^ell - nu_check_i) at a primitive ell-th root.
inline Presentation<CycNumber> fiber_presentation(int N, int ell, const CentralCharacter& nu) {
  check_level(ell);
  if (nu.nu.size() != static_cast<std::size_t>(N) || nu.nu_check.size() != static_cast<std::size_t>(N))
    throw Error("character has the wrong number of coordinates");
  auto p = at_root(dq_cn(N), ell);
  for (int i = 0; i < N; ++i) {
    p.set_power_rule(i, ell, Element<CycNumber>::scalar(CycNumber(ell, nu.nu[static_cast<std::size_t>(i)])));
    p.set_power_rule(N + i, ell, Element<CycNumber>::scalar(CycNumber(ell, nu.nu_check[static_cast<std::size_t>(i)])));
  }
  p.set_name("fiber");
  return p;
}

struct AzumayaVerdict {
  std::size_t dimension = 0;
  std::size_t center_dimension = 0;
  std::size_t trace_rank = 0;
  bool azumaya = false;
};

inline AzumayaVerdict is_azumaya_point(FiniteAlgebra<CycNumber>& f) {
  AzumayaVerdict v;
  v.dimension = f.dimension();
  v.center_dimension = f.center_dimension();
  v.trace_rank = f.trace_form_rank();
  v.azumaya = v.center_dimension == 1 && v.trace_rank == v.dimension;
  return v;
}

/// The fiber as a finite algebra, graded by the Z^N weights of D_q(C^N) taken mod ell.
inline FiniteAlgebra<CycNumber> fiber(int N, int ell, const CentralCharacter& nu) {
  return FiniteAlgebra<CycNumber>(fiber_presentation(N, ell, nu), homogeneous_gradings(dq_cn(N)), ell);
}

inline AzumayaVerdict fiber_verdict(int N, int ell, const CentralCharacter& nu) {
  auto f = fiber(N, ell, nu);
  return is_azumaya_point(f);
}

/// Characters with small integer coordinates in [-range, range], drawn from a
/// seeded generator; inside_locus selects the open set or its complement.
inline CentralCharacter random_character(std::mt19937_64& rng, int N, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  CentralCharacter c;
  for (int i = 0; i < N; ++i) {
    c.nu.push_back(d(rng));
    c.nu_check.push_back(d(rng));
  }
  return c;
}

inline CentralCharacter random_locus_character(std::mt19937_64& rng, int N, int range = 3) {
  for (;;) {
    auto c = random_character(rng, N, range);
    if (in_locus(c)) return c;
  }
}

/// A character whose pattern has bit (k-1) set: 1 + sum_{j<=k} nu_j nu_check_j = 0.
inline CentralCharacter random_boundary_character(std::mt19937_64& rng, int N, int k, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  for (;;) {
    CentralCharacter c = random_character(rng, N, range);
    // solve for nu_check_k with nu_k = +-1
    int s = d(rng) >= 0 ? 1 : -1;
    c.nu[static_cast<std::size_t>(k - 1)] = s;
    Rational partial = 1;
    for (int j = 0; j < k - 1; ++j) partial += c.nu[static_cast<std::size_t>(j)] * c.nu_check[static_cast<std::size_t>(j)];
    c.nu_check[static_cast<std::size_t>(k - 1)] = -partial / s;
    if (locus_values(c)[static_cast<std::size_t>(k - 1)] == 0) return c;
  }
}

/// Values at the l-centre generators of D_q^+(GL_2): v (the z of X), x12^l, x21^l,
/// x22^l, w (the z of D), p12^l, p21^l, p22^l.
struct GL2Character {
  std::array<Rational, 8> values;
  Mat2 x_matrix() const { return {values[0], values[1], values[2], values[3]}; }
  Mat2 d_matrix() const { return {values[4], values[5], values[6], values[7]}; }
};

/// D_q^+(GL_2) at a primitive l-th root modulo the character: x11^l and p11^l
/// are rewritten through v and w, the other l-th powers become scalars.
inline Presentation<CycNumber> gl2_fiber_presentation(int ell, const GL2Character& chi) {
  auto p = at_root(dq_gl2_plus(), ell);
  Element<CycNumber> z = compute_z(ell);
  for (int offset : {0, 4}) {
    Element<CycNumber> lead = p.generator(offset, ell);
    Element<CycNumber> rest = embed_gl2(z, offset) - lead;
    p.set_power_rule(offset, ell, Element<CycNumber>::scalar(CycNumber(ell, chi.values[static_cast<std::size_t>(offset)])) - rest);
    for (int g = 1; g < 4; ++g)
      p.set_power_rule(offset + g, ell,
                       Element<CycNumber>::scalar(CycNumber(ell, chi.values[static_cast<std::size_t>(offset + g)])));
  }
  p.set_name("gl2fiber");
  return p;
}

/// Random character with invertible X and D matrices.
inline GL2Character random_gl2_character(std::mt19937_64& rng, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  for (;;) {
    GL2Character c;
    for (auto& v : c.values) v = d(rng);
    if (c.x_matrix().det() != 0 && c.d_matrix().det() != 0) return c;
  }
}

enum class TensorNormalization {
  /// z_i = -q^-1 d_i alpha_i^-1, the scale forced by w_i z_i = q^2 z_i w_i + (q^2 - 1).
  Consistent,
  /// z_i = -q d_i alpha_i^-1.
  AsPrinted,
};

struct TensorRelation {
  std::string relation;
  bool holds = false;
};

/// Relations of w_i = x_i alpha_i^-1 and z_i in the square-root extension: w_i z_i = q^2 z_i w_i + (q^2 - 1),
/// and w, z with different indices commute.
inline std::vector<TensorRelation> tensor_decomposition_check(int N, TensorNormalization norm = TensorNormalization::Consistent) {
  auto p = dq_cn_sqrt(N);
  Engine<QLaurent> eng(p);
  OreField<QLaurent> f(eng);
  QLaurent scale = norm == TensorNormalization::Consistent ? -q_pow(-1) : -q_pow(1);
  std::vector<OreFraction<QLaurent>> w, z;
  for (int i = 1; i <= N; ++i) {
    auto inv = f.inverse_of(alpha_name(i));
    w.push_back(f.multiply(f.from(p.generator(i - 1)), inv));
    z.push_back(f.multiply(f.from(p.generator(N + i - 1).scaled(scale)), inv));
  }
  std::vector<TensorRelation> out;
  auto idx = [](std::size_t i) { return std::to_string(i + 1); };
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto rhs = f.add(f.scaled(f.multiply(z[i], w[i]), q_pow(2)), f.from(Element<QLaurent>::scalar(q_pow(2) - 1)));
    out.push_back({"w" + idx(i) + "*z" + idx(i) + " = q^2*z" + idx(i) + "*w" + idx(i) + " + (q^2 - 1)", f.equal(f.multiply(w[i], z[i]), rhs)});
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      out.push_back({"w" + idx(i) + "*w" + idx(j) + " = w" + idx(j) + "*w" + idx(i), f.equal(f.multiply(w[i], w[j]), f.multiply(w[j], w[i]))});
      out.push_back({"z" + idx(i) + "*z" + idx(j) + " = z" + idx(j) + "*z" + idx(i), f.equal(f.multiply(z[i], z[j]), f.multiply(z[j], z[i]))});
      out.push_back({"w" + idx(i) + "*z" + idx(j) + " = z" + idx(j) + "*w" + idx(i), f.equal(f.multiply(w[i], z[j]), f.multiply(z[j], w[i]))});
      out.push_back({"w" + idx(j) + "*z" + idx(i) + " = z" + idx(i) + "*w" + idx(j), f.equal(f.multiply(w[j], z[i]), f.multiply(z[i], w[j]))});
    }
  }
  return out;
}

inline std::string format_character(const GL2Character& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.values.size(); ++i) s += (i ? ", " : "") + c.values[i].get_str();
  return s + ")";
}

inline std::string format_character(const CentralCharacter& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.nu.size(); ++i) {
    if (i) s += ", ";
    s += c.nu[i].get_str() + ", " + c.nu_check[i].get_str();
  }
  return s + ")";
}

}  // namespace qweyl
