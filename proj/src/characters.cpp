#include "kcell/characters.hpp"

#include <algorithm>

#include "kcell/errors.hpp"

namespace kcell {

Laurent antisymmetrize(const WeylGroup& g, const Weight& mu, Exec e) {
  return alternating_weyl_sum(g, Laurent::monomial(mu, 1), e);
}

Laurent weyl_denominator(const WeylGroup& g) {
  return antisymmetrize(g, g.datum().rho(), Exec::Serial);
}

Laurent weyl_character(const WeylGroup& g, const Weight& chi) {
  if (!is_dominant(chi)) throw NotDominant("character: weight is not dominant");
  return exact_div(antisymmetrize(g, chi + g.datum().rho()), weyl_denominator(g));
}

mpz_class weyl_dim(const RootDatum& d, const Weight& chi) {
  if (!is_dominant(chi)) throw NotDominant("dimension: weight is not dominant");
  Weight shifted = chi + d.rho();
  mpz_class num = 1, den = 1;
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    num *= static_cast<long>(d.coroot_pairing(shifted, k));
    den *= static_cast<long>(d.coroot_pairing(d.rho(), k));
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

InvariantPoly pairing(const WeylGroup& g, const Laurent& p, const Laurent& q, Exec e) {
  Laurent prod = (p * q).mul_monomial(g.datum().rho(), 1);
  Laurent num = alternating_weyl_sum(g, prod, e);
  return make_invariant(g, exact_div(num, weyl_denominator(g)));
}

const Laurent& CharTable::character(const Weight& chi) {
  if (!is_dominant(chi)) throw NotDominant("character: weight is not dominant");
  std::scoped_lock lock(mu_);
  auto it = chars_.find(chi);
  if (it != chars_.end()) return it->second;
  if (!have_denom_) {
    denom_ = weyl_denominator(*g_);
    have_denom_ = true;
  }
  Laurent ch = exact_div(antisymmetrize(*g_, chi + g_->datum().rho()), denom_);
  return chars_.emplace(chi, std::move(ch)).first->second;
}

const Laurent& CharTable::denominator() {
  std::scoped_lock lock(mu_);
  if (!have_denom_) {
    denom_ = weyl_denominator(*g_);
    have_denom_ = true;
  }
  return denom_;
}

std::map<Weight, mpz_class> tensor_decompose(CharTable& tab, const Weight& chi,
                                             const Weight& chi2) {
  Laurent prod = tab.character(chi) * tab.character(chi2);
  return character_decompose(tab, std::move(prod));
}

std::map<Weight, mpz_class> character_decompose(CharTable& tab, Laurent f) {
  /* Peel off the lexicographically largest dominant exponent.  Each
     step zeroes that exponent and only touches exponents strictly below
     it in the dominance order, so the multiset of dominant exponents
     present decreases in the (well-founded) dominance multiset order
     and the loop terminates.  A peeled weight can transiently reappear
     with negative coefficient; multiplicities are summed per weight and
     only checked for positivity at the end. */
  std::map<Weight, mpz_class> out;
  std::size_t guard = 0;
  while (!f.is_zero()) {
    const Weight* top = nullptr;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
      if (is_dominant(it->first)) {
        top = &it->first;
        break;
      }
    if (!top)
      throw NegativeMultiplicity("decompose: nonzero remainder without dominant exponent");
    Weight w = *top;
    mpz_class m = f.coeff(w);
    out[w] += m;
    f -= tab.character(w).scaled(m);
    if (++guard > 200000)
      throw InternalError("decompose: did not terminate");
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) {
      it = out.erase(it);
    } else if (it->second < 0) {
      throw NegativeMultiplicity("decompose: negative multiplicity for " +
                                 to_string(it->first));
    } else {
      ++it;
    }
  }
  return out;
}

std::vector<Weight> dominant_weights_up_to(std::size_t rank, Coord cutoff) {
  std::vector<Weight> out;
  Weight cur(rank);
  auto rec = [&](auto&& self, std::size_t pos, Coord left) -> void {
    if (pos == rank) {
      out.push_back(cur);
      return;
    }
    for (Coord v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, cutoff);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kcell
