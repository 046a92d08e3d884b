#include "kcell/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kcell {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

Exec resolve(Exec e) {
  if (e != Exec::Auto) return e;
  return parallel_available() ? Exec::Parallel : Exec::Serial;
}

Laurent alternating_weyl_sum_serial(const WeylGroup& g, const Laurent& p) {
  Laurent acc(p.rank());
  for (std::size_t w = 0; w < g.size(); ++w) {
    bool neg = g.length(w) & 1;
    for (const auto& [e, c] : p.terms()) acc.add_term(g.act(w, e), neg ? -c : c);
  }
  return acc;
}

Laurent alternating_weyl_sum_parallel(const WeylGroup& g, const Laurent& p) {
#ifndef _OPENMP
  return alternating_weyl_sum_serial(g, p);
#else
  int nt = omp_get_max_threads();
  std::vector<Laurent> part(static_cast<std::size_t>(nt), Laurent(p.rank()));
#pragma omp parallel num_threads(nt)
  {
    std::size_t t = static_cast<std::size_t>(omp_get_thread_num());
    Laurent local(p.rank());
#pragma omp for schedule(static)
    for (long long w = 0; w < static_cast<long long>(g.size()); ++w) {
      bool neg = g.length(static_cast<std::size_t>(w)) & 1;
      for (const auto& [e, c] : p.terms())
        local.add_term(g.act(static_cast<std::size_t>(w), e), neg ? -c : c);
    }
    part[t] = std::move(local);
  }
  /* Partial sums are merged in thread-index order.  Addition in the
     Laurent ring is exact and associative, so the result is identical
     to the serial sum regardless of the split. */
  Laurent acc(p.rank());
  for (auto& q : part) acc += q;
  return acc;
#endif
}

Laurent alternating_weyl_sum(const WeylGroup& g, const Laurent& p, Exec e) {
  return resolve(e) == Exec::Parallel ? alternating_weyl_sum_parallel(g, p)
                                      : alternating_weyl_sum_serial(g, p);
}

std::vector<Laurent> parallel_table(std::size_t n,
                                    const std::function<Laurent(std::size_t)>& fn, Exec e) {
  std::vector<Laurent> out(n);
#ifdef _OPENMP
  if (resolve(e) == Exec::Parallel) {
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return out;
  }
#endif
  (void)e;
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

std::size_t first_failure(std::size_t n, const std::function<bool(std::size_t)>& pred,
                          Exec e) {
#ifdef _OPENMP
  if (resolve(e) == Exec::Parallel) {
    long long best = static_cast<long long>(n);
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        if (!pred(static_cast<std::size_t>(i)) && i < best) best = i;
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return static_cast<std::size_t>(best);
  }
#endif
  (void)e;
  for (std::size_t i = 0; i < n; ++i)
    if (!pred(i)) return i;
  return n;
}

}  // namespace kcell
