#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "kcell/convolution.hpp"

namespace kcell {

/* Formal Z-combination of cell basis elements. */
struct JRingElement {
  std::map<CellElement, mpz_class> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const CellElement& c, const mpz_class& m);
  bool operator==(const JRingElement&) const = default;
};

/* Structure constants of the based ring:
   t_(f,chi,f2) * t_(g,chi2,g2) = 0 unless f2 = g, and otherwise
   sum over lambda of mult(lambda in chi (x) chi2) * t_(f,lambda,g2). */
JRingElement jmultiply(CharTable& tab, const CellElement& a, const CellElement& b);
JRingElement jmultiply(CharTable& tab, const JRingElement& a, const JRingElement& b);

/* Does the group element f^{-1} w0 t_chi f2 (with f = w t_{x_w} taken in
   the extended affine group) lie in the subgroup attached to X?  Decided
   by reducing the product to the form t_mu * u and testing mu in X. */
bool in_c0(const WeylGroup& g, const CellElement& c);

/* Report of a sigma-homomorphism verification run.  The canonical JSON
   rendering of this struct is byte-identical across repeated runs with
   the same datum, cutoff, and seed. */
struct SigmaReport {
  std::string datum_digest;
  Coord cutoff = 0;
  bool exhaustive = false;
  unsigned long long pairs_checked = 0;
  unsigned long long closure_checks = 0;
  bool passed = false;
  std::optional<std::string> counterexample;
};

/* Check sigma(jmultiply(a, b)) = convolve(sigma(a), sigma(b)) term by
   term over pairs of cell elements at the cutoff; exhaustive when the
   pair count is at most 10000, otherwise `samples` pairs drawn from a
   mt19937_64 seeded with `seed`.  Pairs with both factors in the
   X-subring are additionally checked to multiply into it. */
SigmaReport verify_sigma_hom(const WeylGroup& g, const SteinbergData& sd, CharTable& tab,
                             Coord cutoff, unsigned long long samples, unsigned long long seed,
                             Exec e = Exec::Auto);

}  // namespace kcell
