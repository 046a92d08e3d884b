#pragma once

#include <string>
#include <vector>

#include "kcell/characters.hpp"
#include "kcell/kernels.hpp"
#include "kcell/laurent.hpp"
#include "kcell/weyl.hpp"

namespace kcell {

/* The Steinberg basis: for each w the weight
     x_w = w^{-1}( sum of fundamental weights over simple alpha with w^{-1}(alpha) < 0 ),
   the Gram matrix of the pairing on the monomials e^{x_w}, and the dual
   family y_f determined by pairing(e^{x_f}, y_g) = delta_{fg}.  The dual
   basis depends only on the Cartan matrix, not on the chosen sublattice. */
struct SteinbergData {
  std::vector<Weight> x;                     // indexed like the group
  std::vector<std::vector<Laurent>> gram;    // gram[f][g] = pairing(e^{x_f}, e^{x_g})
  std::vector<Laurent> dual;                 // y_f
};

Weight x_weight(const WeylGroup& g, std::size_t w);
std::vector<Weight> x_basis(const WeylGroup& g);

std::vector<std::vector<Laurent>> gram_matrix(const WeylGroup& g, Exec e = Exec::Auto);

/* Invert the Gram matrix over the invariant ring by fraction-free
   (Bareiss-style) Gauss-Jordan elimination; every division is exact and
   all intermediates stay in the Laurent ring.  The duality equations are
   re-checked by pairing before returning. */
std::vector<Laurent> dual_basis(const WeylGroup& g,
                                const std::vector<std::vector<Laurent>>& gram,
                                Exec e = Exec::Auto);

// compute everything, no caching
SteinbergData compute_steinberg(const WeylGroup& g, Exec e = Exec::Auto);

/* Cached accessor: an in-process memo plus an advisory on-disk cache
   keyed by the Cartan digest.  Cache files are written atomically
   (temp file + rename) and are safe to delete at any time. */
const SteinbergData& steinberg_data(const WeylGroup& g, const std::string& cache_dir = "");

// resolution order: explicit argument, then KCELL_CACHE_DIR, then a
// per-user directory under the system temp path
std::string default_cache_dir();
std::string cache_file_path(const std::string& dir, const std::string& cartan_digest);

/* Coordinates of P in the Steinberg basis: c_f = pairing(P, y_f), with
   the exact recombination  P = sum of c_f * e^{x_f}  checked before
   returning. */
std::vector<InvariantPoly> expand(const WeylGroup& g, const SteinbergData& sd,
                                  const Laurent& p, Exec e = Exec::Auto);

}  // namespace kcell
