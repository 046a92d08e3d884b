#pragma once

#include <random>
#include <string>
#include <vector>

#include "kcell/based_ring.hpp"
#include "kcell/errors.hpp"
#include "kcell/parabolic.hpp"

namespace kctest {

using namespace kcell;

inline RootDatum datum_of(const std::string& type, const std::string& lattice = "weight") {
  return RootDatum::from_text("type = " + type + "\nsublattice = " + lattice + "\n");
}

inline Coord pick(std::mt19937_64& rng, Coord lo, Coord hi) {
  return lo + static_cast<Coord>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Weight random_weight(std::mt19937_64& rng, std::size_t rank, Coord lo, Coord hi) {
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = pick(rng, lo, hi);
  return w;
}

inline Weight random_dominant(std::mt19937_64& rng, std::size_t rank, Coord max_sum) {
  Weight w(rank);
  Coord left = pick(rng, 0, max_sum);
  for (std::size_t i = 0; i < rank; ++i) {
    Coord v = pick(rng, 0, left);
    w[i] = v;
    left -= v;
  }
  return w;
}

inline Laurent random_laurent(std::mt19937_64& rng, std::size_t rank, int terms, Coord span,
                              long coeff_span) {
  Laurent p(rank);
  for (int t = 0; t < terms; ++t)
    p.add_term(random_weight(rng, rank, -span, span),
               static_cast<long>(pick(rng, -coeff_span, coeff_span)));
  return p;
}

inline Laurent random_nonzero_laurent(std::mt19937_64& rng, std::size_t rank, int terms,
                                      Coord span, long coeff_span) {
  for (;;) {
    Laurent p = random_laurent(rng, rank, terms, span, coeff_span);
    if (!p.is_zero()) return p;
  }
}

inline bool subword_search(const WeylGroup& g, const std::vector<int>& word, std::size_t pos,
                           std::size_t cur, int remaining, std::size_t target) {
  if (remaining == 0) return cur == target;
  if (word.size() - pos < static_cast<std::size_t>(remaining)) return false;
  if (subword_search(g, word, pos + 1, g.mult(cur, g.simple(word[pos])), remaining - 1,
                     target))
    return true;
  return subword_search(g, word, pos + 1, cur, remaining, target);
}

/* Independent Bruhat-order oracle: u <= v iff a reduced word of v has a
   subsequence of length l(u) multiplying to u. */
inline bool subword_leq(const WeylGroup& g, std::size_t u, std::size_t v) {
  return subword_search(g, g.element(v).word, 0, g.identity(), g.length(u), u);
}

}  // namespace kctest
