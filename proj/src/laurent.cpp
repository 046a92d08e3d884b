#include "kcell/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "kcell/errors.hpp"
#include "kcell/weyl.hpp"

namespace kcell {

Laurent Laurent::monomial(const Weight& e, const mpz_class& c) {
  Laurent p(e.rank());
  if (c != 0) p.t_.emplace(e, c);
  return p;
}

mpz_class Laurent::coeff(const Weight& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? mpz_class(0) : it->second;
}

void Laurent::add_term(const Weight& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent p(rank_);
  for (const auto& [e, c] : t_) p.t_.emplace(e, -c);
  return p;
}

Laurent Laurent::mul(const Laurent& o) const {
  Laurent p(rank_);
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) p.add_term(e1 + e2, c1 * c2);
  return p;
}

Laurent Laurent::scaled(const mpz_class& c) const {
  Laurent p(rank_);
  if (c == 0) return p;
  for (const auto& [e, k] : t_) p.t_.emplace(e, c * k);
  return p;
}

Laurent Laurent::mul_monomial(const Weight& e, const mpz_class& c) const {
  Laurent p(rank_);
  if (c == 0) return p;
  for (const auto& [e1, c1] : t_) p.t_.emplace(e1 + e, c * c1);
  return p;
}

Laurent Laurent::weyl_act(const WeylGroup& g, std::size_t w) const {
  Laurent p(rank_);
  for (const auto& [e, c] : t_) p.t_.emplace(g.act(w, e), c);
  return p;
}

std::map<OmegaElement, Laurent> Laurent::omega_components(const OmegaGroup& om) const {
  std::map<OmegaElement, Laurent> out;
  for (const auto& [e, c] : t_) {
    auto [it, fresh] = out.emplace(om.coset_of(e), Laurent(rank_));
    (void)fresh;
    it->second.add_term(e, c);
  }
  return out;
}

bool Laurent::omega_homogeneous(const OmegaGroup& om, OmegaElement* deg) const {
  if (t_.empty()) {
    if (deg) *deg = om.zero();
    return true;
  }
  OmegaElement d = om.coset_of(t_.begin()->first);
  for (const auto& [e, c] : t_)
    if (om.coset_of(e) != d) return false;
  if (deg) *deg = d;
  return true;
}

std::string Laurent::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*e" << kcell::to_string(e);
  }
  return os.str();
}

Laurent Laurent::from_string(const std::string& s, std::size_t rank) {
  Laurent p(rank);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i == s.size()) throw ParseError("polynomial: empty text");
  if (s.compare(i, 1, "0") == 0 && [&] {
        std::size_t j = i + 1;
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        return j == s.size();
      }()) {
    return p;
  }
  bool lead = true;
  while (i < s.size()) {
    int sign = 1;
    skip();
    if (!lead) {
      if (s[i] == '+') {
        ++i;
      } else if (s[i] == '-') {
        sign = -1;
        ++i;
      } else {
        throw ParseError("polynomial: expected '+' or '-' near '" + s.substr(i) + "'");
      }
      skip();
    }
    lead = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
      skip();
    }
    // optional integer coefficient, then optional '*', then e[...]
    mpz_class c = 1;
    std::size_t d0 = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > d0) c = mpz_class(s.substr(d0, i - d0));
    skip();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip();
    }
    if (i < s.size() && s[i] == 'e') {
      ++i;
      skip();
      if (i >= s.size() || s[i] != '[')
        throw ParseError("polynomial: expected '[' after 'e'");
      std::size_t close = s.find(']', i);
      if (close == std::string::npos) throw ParseError("polynomial: unclosed '['");
      Weight e = weight_from_string(s.substr(i, close - i + 1));
      if (e.rank() != rank) throw ParseError("polynomial: exponent has wrong rank");
      i = close + 1;
      p.add_term(e, sign * c);
    } else if (i > d0) {
      p.add_term(Weight(rank), sign * c);  // bare constant
    } else {
      throw ParseError("polynomial: expected a term near '" + s.substr(d0) + "'");
    }
    skip();
  }
  return p;
}

Laurent exact_div(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw NotDivisible("exact_div: division by zero");
  std::size_t rank = den.rank();
  if (num.is_zero()) return Laurent::zero(rank);

  auto min_exp = [rank](const Laurent& p) {
    Weight m = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
      for (std::size_t k = 0; k < rank; ++k) m[k] = std::min(m[k], e[k]);
    return m;
  };
  /* Shift both operands so every exponent is componentwise nonnegative
     and each coordinate attains 0.  If the quotient exists, its shifted
     form is again a polynomial of this kind (per-coordinate minimal
     degrees are additive under multiplication), so a negative quotient
     exponent certifies non-divisibility. */
  Weight mn = min_exp(num), md = min_exp(den);
  Laurent r = num.mul_monomial(-mn, 1);
  Laurent d = den.mul_monomial(-md, 1);
  Laurent q(rank);
  const Weight dl = d.leading_exponent();
  const mpz_class dc = d.leading_coeff();
  while (!r.is_zero()) {
    Weight te = r.leading_exponent() - dl;
    for (std::size_t k = 0; k < rank; ++k)
      if (te[k] < 0)
        throw NotDivisible("exact_div: no exact quotient (exponent drop)");
    const mpz_class& rc = r.leading_coeff();
    if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()))
      throw NotDivisible("exact_div: no exact quotient (coefficient)");
    mpz_class tc;
    mpz_divexact(tc.get_mpz_t(), rc.get_mpz_t(), dc.get_mpz_t());
    q.add_term(te, tc);
    r -= d.mul_monomial(te, tc);
  }
  return q.mul_monomial(mn - md, 1);
}

InvariantPoly make_invariant(const WeylGroup& g, Laurent p) {
  for (std::size_t i = 0; i < g.datum().rank(); ++i)
    if (p.weyl_act(g, g.simple(static_cast<int>(i))) != p)
      throw InternalError("make_invariant: polynomial is not Weyl-invariant");
  return InvariantPoly{std::move(p), true};
}

}  // namespace kcell
