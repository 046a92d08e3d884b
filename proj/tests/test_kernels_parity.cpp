#include <atomic>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace kcell;
using kctest::datum_of;

TEST_SUITE("kernels_parity") {
  TEST_CASE("execution policy resolution") {
    CHECK(max_threads() >= 1);
    CHECK(resolve(Exec::Serial) == Exec::Serial);
    CHECK(resolve(Exec::Parallel) == Exec::Parallel);
    CHECK(resolve(Exec::Auto) ==
          (parallel_available() ? Exec::Parallel : Exec::Serial));
  }

  TEST_CASE("alternating sums are bit-identical across policies") {
    std::mt19937_64 rng(83);
    for (const char* t : {"A2", "B2", "A3"}) {
      WeylGroup g(datum_of(t));
      for (int it = 0; it < 10; ++it) {
        Laurent p = kctest::random_laurent(rng, g.datum().rank(), 5, 3, 5);
        Laurent s = alternating_weyl_sum_serial(g, p);
        CHECK(alternating_weyl_sum_parallel(g, p) == s);
        CHECK(alternating_weyl_sum(g, p, Exec::Serial) == s);
        CHECK(alternating_weyl_sum(g, p, Exec::Parallel) == s);
        CHECK(alternating_weyl_sum(g, p, Exec::Auto) == s);
      }
    }
  }

  TEST_CASE("alternating sums vanish on mirror-symmetric inputs") {
    WeylGroup g(datum_of("A2"));
    // e^0 is fixed by every reflection, so the signs cancel pairwise
    CHECK(alternating_weyl_sum(g, Laurent::one(2)).is_zero());
  }

  TEST_CASE("table evaluation matches the direct loop") {
    auto fn = [](std::size_t i) {
      Laurent p(2);
      p.add_term(Weight{static_cast<Coord>(i), -static_cast<Coord>(i)},
                 static_cast<long>(i + 1));
      return p;
    };
    for (Exec e : {Exec::Serial, Exec::Parallel, Exec::Auto}) {
      auto tab = parallel_table(40, fn, e);
      REQUIRE(tab.size() == 40);
      for (std::size_t i = 0; i < 40; ++i) CHECK(tab[i] == fn(i));
    }
    CHECK(parallel_table(0, fn).empty());
  }

  TEST_CASE("table evaluation propagates exceptions") {
    auto fn = [](std::size_t i) -> Laurent {
      if (i == 3) throw UsageError("boom");
      return Laurent::zero(1);
    };
    CHECK_THROWS_AS(parallel_table(8, fn, Exec::Serial), UsageError);
    CHECK_THROWS_AS(parallel_table(8, fn, Exec::Parallel), UsageError);
  }

  TEST_CASE("first failure finds the minimal index") {
    for (Exec e : {Exec::Serial, Exec::Parallel}) {
      CHECK(first_failure(50, [](std::size_t) { return true; }, e) == 50);
      CHECK(first_failure(50, [](std::size_t i) { return i != 17 && i != 31; }, e) == 17);
      CHECK(first_failure(50, [](std::size_t i) { return i != 0; }, e) == 0);
      CHECK(first_failure(0, [](std::size_t) { return false; }, e) == 0);
    }
    // the serial policy short-circuits at the first failure
    std::atomic<int> calls{0};
    first_failure(50,
                  [&](std::size_t i) {
                    ++calls;
                    return i != 5;
                  },
                  Exec::Serial);
    CHECK(calls.load() == 6);
  }

  TEST_CASE("derived kernels are policy-independent") {
    WeylGroup g(datum_of("B2"));
    CHECK(antisymmetrize(g, Weight{2, 1}, Exec::Serial) ==
          antisymmetrize(g, Weight{2, 1}, Exec::Parallel));

    auto gs = gram_matrix(g, Exec::Serial);
    auto gp = gram_matrix(g, Exec::Parallel);
    REQUIRE(gs.size() == gp.size());
    for (std::size_t i = 0; i < gs.size(); ++i) CHECK(gs[i] == gp[i]);

    CHECK(dual_basis(g, gs, Exec::Serial) == dual_basis(g, gp, Exec::Parallel));

    std::mt19937_64 rng(89);
    Laurent p = kctest::random_laurent(rng, 2, 4, 2, 3);
    Laurent q = kctest::random_laurent(rng, 2, 4, 2, 3);
    CHECK(pairing(g, p, q, Exec::Serial).poly == pairing(g, p, q, Exec::Parallel).poly);

    SteinbergData ss = compute_steinberg(g, Exec::Serial);
    SteinbergData sp = compute_steinberg(g, Exec::Parallel);
    CHECK(ss.x == sp.x);
    CHECK(ss.dual == sp.dual);
    CHECK(expand(g, ss, p, Exec::Serial).size() == g.size());
    auto es = expand(g, ss, p, Exec::Serial);
    auto ep = expand(g, ss, p, Exec::Parallel);
    for (std::size_t f = 0; f < g.size(); ++f) CHECK(es[f].poly == ep[f].poly);

    const SteinbergData& sd = steinberg_data(g);
    KClass a = normalize(g, sd, p, q, Exec::Serial);
    CHECK(a == normalize(g, sd, p, q, Exec::Parallel));
    CHECK(convolve(g, sd, a, a, Exec::Serial) == convolve(g, sd, a, a, Exec::Parallel));
  }
}
