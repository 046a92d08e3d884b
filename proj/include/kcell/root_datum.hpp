#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kcell/weight.hpp"

namespace kcell {

/* Element of the finite abelian group Omega = (weight lattice) / X,
   stored as the canonical residue vector with respect to the invariant
   factors of X.  Entries for invariant factor 1 are kept (always 0) so
   that the vector length matches the rank. */
struct OmegaElement {
  std::vector<Coord> r;
  auto operator<=>(const OmegaElement&) const = default;
  bool is_zero() const {
    for (auto x : r)
      if (x != 0) return false;
    return true;
  }
};

std::string to_string(const OmegaElement& e);

/* Quotient of Z^rank by the row span of an integer matrix, computed via
   Smith normal form.  coset_of is a group homomorphism; weights in the
   sublattice map to the identity. */
class OmegaGroup {
 public:
  OmegaGroup() = default;
  // rows of `sublattice` are a basis of X in fundamental-weight coordinates
  explicit OmegaGroup(const IntMat& sublattice);

  std::size_t rank() const { return factors_.size(); }
  // all invariant factors, in divisibility order (1s included)
  const std::vector<Coord>& invariant_factors() const { return factors_; }
  // canonical form: the invariant factors > 1
  std::vector<Coord> canonical_form() const;
  unsigned long long order() const { return order_; }

  OmegaElement coset_of(const Weight& w) const;
  OmegaElement add(const OmegaElement& a, const OmegaElement& b) const;
  OmegaElement neg(const OmegaElement& a) const;
  OmegaElement zero() const { return OmegaElement{std::vector<Coord>(factors_.size(), 0)}; }

 private:
  std::vector<Coord> factors_;  // diagonal of the Smith form
  IntMat left_;                 // left transform: v in X  iff  factors | left*v
  unsigned long long order_ = 1;
};

/* Root datum of a semisimple group: a Cartan matrix of finite type
   whose columns are the simple roots in fundamental-weight coordinates,
   plus a finite-index sublattice X of the weight lattice containing the
   root lattice.  Positive roots are enumerated by reflection closure,
   carrying along coroot coordinates (in the simple-coroot basis) and
   root-basis coordinates. */
class RootDatum {
 public:
  // `type` is a name like "A2"; alternatively pass an explicit Cartan matrix.
  // `sublattice`: rows spanning X; empty means the full weight lattice.
  static RootDatum make(const std::string& type, const IntMat& sublattice);
  static RootDatum make(const IntMat& cartan, const IntMat& sublattice,
                        const std::string& label = "custom");
  // parse the datum text format (key = value lines; see README)
  static RootDatum from_text(const std::string& text);

  std::size_t rank() const { return rank_; }
  const std::string& label() const { return label_; }
  const IntMat& cartan() const { return cartan_; }
  const IntMat& sublattice() const { return sublattice_; }
  const OmegaGroup& omega() const { return omega_; }

  Weight simple_root(std::size_t i) const;       // column i of the Cartan matrix
  Weight fundamental_weight(std::size_t i) const;
  Weight rho() const;                            // all-ones

  std::size_t num_positive_roots() const { return pos_roots_.size(); }
  const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  // coroot of positive_roots()[k], in simple-coroot coordinates
  const std::vector<Weight>& positive_coroots() const { return pos_coroots_; }
  // positive_roots()[k] in simple-root coordinates
  const std::vector<Weight>& root_coordinates() const { return root_coords_; }

  // <lambda, alpha_k^vee> for the k-th positive root
  Coord coroot_pairing(const Weight& lambda, std::size_t k) const;
  bool is_positive_root(const Weight& w) const { return pos_root_set_.count(w) != 0; }

  // digest of the full datum (Cartan + sublattice); names verification reports
  const std::string& digest() const { return digest_; }
  // digest of the Cartan matrix alone; keys caches of lattice-independent data
  const std::string& cartan_digest() const { return cartan_digest_; }

  std::string to_canonical_text() const;  // serialization the digest is taken over

 private:
  RootDatum() = default;

  std::size_t rank_ = 0;
  std::string label_;
  IntMat cartan_;
  IntMat sublattice_;
  std::vector<Weight> pos_roots_;
  std::vector<Weight> pos_coroots_;
  std::vector<Weight> root_coords_;
  std::set<Weight> pos_root_set_;
  OmegaGroup omega_;
  std::string digest_;
  std::string cartan_digest_;
};

// 64-bit FNV-1a, hex encoded; stable across runs and platforms
std::string fnv1a_hex(const std::string& data);

}  // namespace kcell
