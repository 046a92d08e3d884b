#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcell/characters.hpp"
#include "kcell/steinberg.hpp"

namespace kcell {

/* A class in the convolution module, kept in normal form: the sum over
   f of coeffs[f] (x) e^{x_f}, with the right-hand factor always a
   Steinberg basis monomial.  coeffs has one slot per group element. */
struct KClass {
  std::vector<Laurent> coeffs;

  bool operator==(const KClass&) const = default;
  bool is_zero() const {
    for (auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }
};

KClass zero_class(const WeylGroup& g);

// normal form of a (x) b for arbitrary Laurent polynomials a, b
KClass normalize(const WeylGroup& g, const SteinbergData& sd, const Laurent& a,
                 const Laurent& b, Exec e = Exec::Auto);

/* Convolution on normal forms:
   (sum_f a_f (x) x_f) * (sum_g b_g (x) x_g)
     = sum_g ( sum_f a_f * pairing(e^{x_f}, b_g) ) (x) e^{x_g}. */
KClass convolve(const WeylGroup& g, const SteinbergData& sd, const KClass& k1,
                const KClass& k2, Exec e = Exec::Auto);

// two-sided unit: sum over f of y_f (x) e^{x_f}
KClass identity_class(const WeylGroup& g, const SteinbergData& sd);

// restriction at w: sum over f of coeffs[f] * w(e^{x_f})
Laurent restrict_class(const WeylGroup& g, const SteinbergData& sd, const KClass& k,
                       std::size_t w);

/* Membership test for the subring attached to the sublattice X: every
   restriction must have all exponents in the trivial Omega-coset. */
bool is_in_KG(const WeylGroup& g, const SteinbergData& sd, const KClass& k);

/* Basis element (f, chi, f2) of the lowest two-sided cell: chi dominant.
   Under sigma it maps to character(chi) * y_f (x) e^{x_{f2}}. */
struct CellElement {
  std::size_t f = 0;
  Weight chi;
  std::size_t f2 = 0;
  auto operator<=>(const CellElement&) const = default;
};

std::string to_string(const WeylGroup& g, const CellElement& c);

KClass sigma(const WeylGroup& g, const SteinbergData& sd, CharTable& tab,
             const CellElement& c);

// all cell elements with coordinate sum of chi up to the cutoff,
// ordered by (chi, f, f2)
std::vector<CellElement> cell_elements(const WeylGroup& g, Coord cutoff);

/* Cell elements whose sigma-image lands in the X-subring: kept exactly
   when coset(chi) + coset(x_{f2}) = coset(x_f) in Omega. */
std::vector<CellElement> g_basis(const WeylGroup& g, const SteinbergData& sd,
                                 Coord cutoff);

}  // namespace kcell
