#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>

#include "kcell/kernels.hpp"
#include "kcell/laurent.hpp"
#include "kcell/weyl.hpp"

namespace kcell {

// sum over w of sign(w) * e^{w(mu)}
Laurent antisymmetrize(const WeylGroup& g, const Weight& mu, Exec e = Exec::Auto);

// antisymmetrize(rho); equals e^rho * prod over alpha > 0 of (1 - e^-alpha)
Laurent weyl_denominator(const WeylGroup& g);

// character of the irreducible with dominant highest weight chi
Laurent weyl_character(const WeylGroup& g, const Weight& chi);

// dimension by the product formula, exact
mpz_class weyl_dim(const RootDatum& d, const Weight& chi);

/* pairing(P, Q) = antisymmetrize-sum of P*Q*e^rho divided exactly by the
   Weyl denominator.  The result is W0-invariant; invariance under the
   simple reflections is checked before returning. */
InvariantPoly pairing(const WeylGroup& g, const Laurent& p, const Laurent& q,
                      Exec e = Exec::Auto);

/* Memo table of irreducible characters for one group; safe to share
   across threads. */
class CharTable {
 public:
  explicit CharTable(const WeylGroup& g) : g_(&g) {}
  const WeylGroup& group() const { return *g_; }
  const Laurent& character(const Weight& chi);  // chi must be dominant
  const Laurent& denominator();

 private:
  const WeylGroup* g_;
  std::map<Weight, Laurent> chars_;
  Laurent denom_;
  bool have_denom_ = false;
  std::mutex mu_;
};

/* Decompose character(chi) * character(chi2) into irreducibles by
   repeated subtraction of the lexicographically largest dominant
   exponent.  Returns dominant weight -> positive multiplicity; the
   remainder is checked to vanish and the multiplicities to be positive. */
std::map<Weight, mpz_class> tensor_decompose(CharTable& tab, const Weight& chi,
                                             const Weight& chi2);

// decompose an arbitrary virtual character given as an invariant Laurent poly
std::map<Weight, mpz_class> character_decompose(CharTable& tab, Laurent f);

// dominant weights with coordinate sum <= cutoff, in lexicographic order
std::vector<Weight> dominant_weights_up_to(std::size_t rank, Coord cutoff);

}  // namespace kcell
