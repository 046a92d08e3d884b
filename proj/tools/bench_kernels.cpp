#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "kcell/steinberg.hpp"

using namespace kcell;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compare the serial and parallel kernels on identical inputs"};
  std::string type = "A3";
  int reps = 3;
  app.add_option("--type", type, "named type (default A3)");
  app.add_option("--reps", reps, "repetitions per measurement (default 3)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  RootDatum d = RootDatum::make(type, IntMat{});
  WeylGroup g(d);
  std::cout << "type " << d.label() << ", |W| = " << g.size() << ", threads = "
            << max_threads() << (parallel_available() ? "" : " (no OpenMP)") << "\n";

  // a moderately fat invariant input for the alternating kernel
  Laurent p = weyl_character(g, d.rho()) * weyl_character(g, d.rho());
  Laurent s_out, p_out;
  double t_serial = time_ms([&] { s_out = alternating_weyl_sum_serial(g, p); }, reps);
  double t_par = time_ms([&] { p_out = alternating_weyl_sum_parallel(g, p); }, reps);
  std::cout << "alternating sum: serial " << t_serial << " ms, parallel " << t_par
            << " ms, outputs " << (s_out == p_out ? "identical" : "DIFFER") << "\n";
  if (!(s_out == p_out)) return 3;

  auto gram_once = [&](Exec e) { return gram_matrix(g, e); };
  std::vector<std::vector<Laurent>> gs, gp;
  double g_serial = time_ms([&] { gs = gram_once(Exec::Serial); }, reps);
  double g_par = time_ms([&] { gp = gram_once(Exec::Parallel); }, reps);
  bool same = gs == gp;
  std::cout << "gram matrix: serial " << g_serial << " ms, parallel " << g_par
            << " ms, outputs " << (same ? "identical" : "DIFFER") << "\n";
  if (!same) return 3;

  std::vector<Laurent> ds, dp;
  double d_serial = time_ms([&] { ds = dual_basis(g, gs, Exec::Serial); }, reps);
  double d_par = time_ms([&] { dp = dual_basis(g, gs, Exec::Parallel); }, reps);
  same = ds == dp;
  std::cout << "dual basis: serial " << d_serial << " ms, parallel " << d_par
            << " ms, outputs " << (same ? "identical" : "DIFFER") << "\n";
  return same ? 0 : 3;
}
