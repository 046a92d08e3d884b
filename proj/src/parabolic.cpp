#include "kcell/parabolic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "kcell/errors.hpp"

namespace kcell {

namespace {

std::vector<int> normalize_subset(const WeylGroup& g, std::vector<int> I) {
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  for (int i : I)
    if (i < 0 || static_cast<std::size_t>(i) >= g.datum().rank())
      throw UsageError("subset: index " + std::to_string(i) + " out of range");
  return I;
}

}  // namespace

std::vector<DoubleCoset> double_cosets(const WeylGroup& g, const std::vector<int>& I_in) {
  std::vector<int> I = normalize_subset(g, I_in);
  std::vector<DoubleCoset> out;
  std::vector<bool> visited(g.size(), false);
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (visited[start]) continue;
    std::set<std::size_t> members;
    std::deque<std::size_t> queue{start};
    members.insert(start);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (int i : I) {
        for (std::size_t v : {g.mult(g.simple(i), u), g.mult(u, g.simple(i))}) {
          if (members.insert(v).second) queue.push_back(v);
        }
      }
    }
    DoubleCoset dc;
    dc.I = I;
    int min_len = -1;
    std::size_t min_count = 0;
    for (std::size_t u : members) {
      dc.elements.push_back(u);
      visited[u] = true;
      if (min_len < 0 || g.length(u) < min_len) {
        min_len = g.length(u);
        dc.min_rep = u;
        min_count = 1;
      } else if (g.length(u) == min_len) {
        ++min_count;
      }
    }
    if (min_count != 1)
      throw InternalError("double coset: minimal-length element is not unique");
    out.push_back(std::move(dc));
  }
  std::sort(out.begin(), out.end(), [&](const DoubleCoset& a, const DoubleCoset& b) {
    if (g.length(a.min_rep) != g.length(b.min_rep))
      return g.length(a.min_rep) < g.length(b.min_rep);
    return a.min_rep < b.min_rep;
  });
  return out;
}

bool coset_leq(const WeylGroup& g, const DoubleCoset& a, const DoubleCoset& b) {
  return g.bruhat_leq(a.min_rep, b.min_rep);
}

Laurent levi_character(const WeylGroup& g, const std::vector<int>& I_in, std::size_t w,
                       const Weight& chi) {
  const RootDatum& d = g.datum();
  std::size_t rank = d.rank();
  std::vector<int> I = normalize_subset(g, I_in);
  std::vector<bool> in_I(rank, false);
  for (int i : I) in_I[static_cast<std::size_t>(i)] = true;

  std::map<Weight, std::size_t> root_index;
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k)
    root_index.emplace(d.positive_roots()[k], k);

  auto supported_on_I = [&](std::size_t k) {
    const Weight& rc = d.root_coordinates()[k];
    for (std::size_t j = 0; j < rank; ++j)
      if (rc[j] != 0 && !in_I[j]) return false;
    return true;
  };

  /* S+ = positive roots lying in R_I whose w^{-1}-image is again in
     +-R_I; this is the positive system of R_I intersect w(R_I). */
  std::size_t wi = g.inverse(w);
  std::vector<std::size_t> splus;
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    if (!supported_on_I(k)) continue;
    Weight img = g.act(wi, d.positive_roots()[k]);
    std::size_t ki;
    if (d.is_positive_root(img))
      ki = root_index.at(img);
    else
      ki = root_index.at(-img);
    if (supported_on_I(ki)) splus.push_back(k);
  }

  for (std::size_t k : splus)
    if (d.coroot_pairing(chi, k) < 0)
      throw NotDominantForLevi("levi character: weight pairs negatively with " +
                               to_string(d.positive_roots()[k]));

  // reflection subgroup generated by the s_alpha, alpha in S+
  std::vector<std::size_t> gens;
  for (std::size_t k : splus) {
    IntMat m = identity_mat(rank);
    const Weight& alpha = d.positive_roots()[k];
    const Weight& coroot = d.positive_coroots()[k];
    // s_alpha(v) = v - <v, alpha^vee> alpha; <v, alpha^vee> = sum_j coroot_j v_j
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t cc = 0; cc < rank; ++cc) m[r][cc] -= alpha[r] * coroot[cc];
    gens.push_back(g.index_of(m));
  }
  std::set<std::size_t> ws{g.identity()};
  std::deque<std::size_t> queue{g.identity()};
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t s : gens)
      if (ws.insert(g.mult(s, u)).second) queue.push_back(g.mult(s, u));
  }

  auto sub_inversions = [&](std::size_t u) {
    // inversion count and the matching rho-shift, both within S+
    std::size_t ui = g.inverse(u);
    int count = 0;
    Weight shift(rank);
    for (std::size_t k : splus)
      if (!d.is_positive_root(g.act(ui, d.positive_roots()[k]))) {
        ++count;
        shift += d.positive_roots()[k];
      }
    return std::pair<int, Weight>(count, shift);
  };

  Laurent numer(rank);
  for (std::size_t u : ws) {
    auto [count, shift] = sub_inversions(u);
    numer.add_term(g.act(u, chi) - shift, (count & 1) ? -1 : 1);
  }
  Laurent denom = Laurent::one(rank);
  for (std::size_t k : splus) {
    Laurent factor = Laurent::one(rank);
    factor.add_term(-d.positive_roots()[k], -1);
    denom = denom * factor;
  }
  return exact_div(numer, denom);
}

}  // namespace kcell
