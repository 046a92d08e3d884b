#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "kcell/laurent.hpp"
#include "kcell/weyl.hpp"

namespace kcell {

/* Execution policy for the data-parallel kernels.  Every parallel
   variant computes exactly the same object as its serial reference:
   the arithmetic is exact, and partial results are merged in a fixed
   order, so outputs are bit-identical either way. */
enum class Exec { Serial, Parallel, Auto };

int max_threads();
bool parallel_available();
Exec resolve(Exec e);  // Auto -> Parallel when OpenMP is live, else Serial

/* sum over w of sign(w) * w(P); the core alternating kernel behind
   antisymmetrization and the pairing */
Laurent alternating_weyl_sum(const WeylGroup& g, const Laurent& p, Exec e = Exec::Auto);
Laurent alternating_weyl_sum_serial(const WeylGroup& g, const Laurent& p);
Laurent alternating_weyl_sum_parallel(const WeylGroup& g, const Laurent& p);

/* evaluate fn(i) for i in [0, n) into a vector; parallel over i */
std::vector<Laurent> parallel_table(std::size_t n, const std::function<Laurent(std::size_t)>& fn,
                                    Exec e = Exec::Auto);

/* index of the first i in [0, n) where pred(i) is false, or n when all
   hold; parallel with a deterministic (minimum-index) reduction */
std::size_t first_failure(std::size_t n, const std::function<bool(std::size_t)>& pred,
                          Exec e = Exec::Auto);

}  // namespace kcell
