#include "kcell/convolution.hpp"

#include "kcell/errors.hpp"

namespace kcell {

KClass zero_class(const WeylGroup& g) {
  return KClass{std::vector<Laurent>(g.size(), Laurent(g.datum().rank()))};
}

KClass normalize(const WeylGroup& g, const SteinbergData& sd, const Laurent& a,
                 const Laurent& b, Exec e) {
  std::vector<InvariantPoly> coords = expand(g, sd, b, e);
  KClass k = zero_class(g);
  for (std::size_t f = 0; f < g.size(); ++f)
    if (!coords[f].poly.is_zero()) k.coeffs[f] = a * coords[f].poly;
  return k;
}

KClass convolve(const WeylGroup& g, const SteinbergData& sd, const KClass& k1,
                const KClass& k2, Exec e) {
  std::size_t n = g.size();
  std::size_t rank = g.datum().rank();
  std::vector<Laurent> out = parallel_table(
      n,
      [&](std::size_t slot) {
        Laurent acc(rank);
        if (k2.coeffs[slot].is_zero()) return acc;
        for (std::size_t f = 0; f < n; ++f) {
          if (k1.coeffs[f].is_zero()) continue;
          Laurent mid = pairing(g, Laurent::monomial(sd.x[f], 1), k2.coeffs[slot],
                                Exec::Serial)
                            .poly;
          if (!mid.is_zero()) acc += k1.coeffs[f] * mid;
        }
        return acc;
      },
      e);
  return KClass{std::move(out)};
}

KClass identity_class(const WeylGroup& g, const SteinbergData& sd) {
  if (sd.dual.size() != g.size())
    throw InternalError("identity class: basis size does not match the group");
  return KClass{sd.dual};
}

Laurent restrict_class(const WeylGroup& g, const SteinbergData& sd, const KClass& k,
                       std::size_t w) {
  Laurent acc(g.datum().rank());
  for (std::size_t f = 0; f < g.size(); ++f)
    if (!k.coeffs[f].is_zero()) acc += k.coeffs[f].mul_monomial(g.act(w, sd.x[f]), 1);
  return acc;
}

bool is_in_KG(const WeylGroup& g, const SteinbergData& sd, const KClass& k) {
  const OmegaGroup& om = g.datum().omega();
  for (std::size_t w = 0; w < g.size(); ++w) {
    Laurent r = restrict_class(g, sd, k, w);
    for (const auto& [e, c] : r.terms())
      if (!om.coset_of(e).is_zero()) return false;
  }
  return true;
}

std::string to_string(const WeylGroup& g, const CellElement& c) {
  return "(" + g.word_name(c.f) + "," + to_string(c.chi) + "," + g.word_name(c.f2) + ")";
}

KClass sigma(const WeylGroup& g, const SteinbergData& sd, CharTable& tab,
             const CellElement& c) {
  KClass k = zero_class(g);
  k.coeffs[c.f2] = tab.character(c.chi) * sd.dual[c.f];
  return k;
}

std::vector<CellElement> cell_elements(const WeylGroup& g, Coord cutoff) {
  std::vector<CellElement> out;
  for (const Weight& chi : dominant_weights_up_to(g.datum().rank(), cutoff))
    for (std::size_t f = 0; f < g.size(); ++f)
      for (std::size_t f2 = 0; f2 < g.size(); ++f2) out.push_back({f, chi, f2});
  return out;
}

std::vector<CellElement> g_basis(const WeylGroup& g, const SteinbergData& sd,
                                 Coord cutoff) {
  const OmegaGroup& om = g.datum().omega();
  std::vector<CellElement> out;
  for (const CellElement& c : cell_elements(g, cutoff))
    if (om.add(om.coset_of(c.chi), om.coset_of(sd.x[c.f2])) == om.coset_of(sd.x[c.f]))
      out.push_back(c);
  return out;
}

}  // namespace kcell
