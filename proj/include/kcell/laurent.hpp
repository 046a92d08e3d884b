#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "kcell/root_datum.hpp"
#include "kcell/weight.hpp"

namespace kcell {

class WeylGroup;

/* Element of the group algebra Z[weight lattice]: a finite map from
   exponents to nonzero arbitrary-precision integer coefficients.  The
   map order is the lexicographic order on exponents, which is also the
   canonical term order for printing and for leading-term arguments.
   Zero coefficients are never stored. */
class Laurent {
 public:
  using Terms = std::map<Weight, mpz_class>;

  Laurent() = default;
  explicit Laurent(std::size_t rank) : rank_(rank) {}

  static Laurent zero(std::size_t rank) { return Laurent(rank); }
  static Laurent one(std::size_t rank) { return monomial(Weight(rank), 1); }
  static Laurent monomial(const Weight& e, const mpz_class& c);

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t num_terms() const { return t_.size(); }
  const Terms& terms() const { return t_; }
  mpz_class coeff(const Weight& e) const;

  // lexicographically largest exponent; only valid when nonzero
  const Weight& leading_exponent() const { return std::prev(t_.end())->first; }
  const mpz_class& leading_coeff() const { return std::prev(t_.end())->second; }

  void add_term(const Weight& e, const mpz_class& c);  // accumulate, drop zeros

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return rank_ == o.rank_ && t_ == o.t_; }

  Laurent mul(const Laurent& o) const;
  friend Laurent operator*(const Laurent& a, const Laurent& b) { return a.mul(b); }
  Laurent scaled(const mpz_class& c) const;
  Laurent mul_monomial(const Weight& e, const mpz_class& c) const;

  // image under a Weyl group element acting on exponents
  Laurent weyl_act(const WeylGroup& g, std::size_t w) const;

  // split by Omega-coset of the exponent
  std::map<OmegaElement, Laurent> omega_components(const OmegaGroup& om) const;
  // true when all exponents lie in a single coset (reported via *deg)
  bool omega_homogeneous(const OmegaGroup& om, OmegaElement* deg = nullptr) const;

  // canonical text form: "c*e[a1,...,ar]" terms joined by " + ", or "0"
  std::string to_string() const;
  static Laurent from_string(const std::string& s, std::size_t rank);

 private:
  std::size_t rank_ = 0;
  Terms t_;
};

/* Exact division in the Laurent ring.  Throws NotDivisible when no exact
   quotient exists.  Implemented by leading-term elimination under the
   lexicographic order after shifting both operands into nonnegative
   exponents; a coordinate-negative quotient exponent or a non-dividing
   leading coefficient certifies non-divisibility. */
Laurent exact_div(const Laurent& num, const Laurent& den);

/* A Laurent polynomial together with a flag recording that invariance
   under the acting Weyl group has been checked (it suffices to check
   the simple reflections). */
struct InvariantPoly {
  Laurent poly;
  bool verified = false;
};

InvariantPoly make_invariant(const WeylGroup& g, Laurent p);  // checks, then wraps

}  // namespace kcell
