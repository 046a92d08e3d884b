#include "kcell/steinberg.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kcell/errors.hpp"

namespace kcell {

namespace fs = std::filesystem;
using json = nlohmann::json;

Weight x_weight(const WeylGroup& g, std::size_t w) {
  const RootDatum& d = g.datum();
  std::size_t wi = g.inverse(w);
  Weight s(d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (g.right_descent(wi, static_cast<int>(i))) s += d.fundamental_weight(i);
  return g.act(wi, s);
}

std::vector<Weight> x_basis(const WeylGroup& g) {
  std::vector<Weight> out(g.size());
  for (std::size_t w = 0; w < g.size(); ++w) out[w] = x_weight(g, w);
  return out;
}

std::vector<std::vector<Laurent>> gram_matrix(const WeylGroup& g, Exec e) {
  std::size_t n = g.size();
  std::vector<Weight> x = x_basis(g);
  std::vector<Laurent> flat = parallel_table(
      n * n,
      [&](std::size_t k) {
        std::size_t f = k / n, f2 = k % n;
        if (f2 < f) return Laurent(g.datum().rank());  // filled from the mirror entry
        return pairing(g, Laurent::monomial(x[f], 1), Laurent::monomial(x[f2], 1),
                       Exec::Serial)
            .poly;
      },
      e);
  std::vector<std::vector<Laurent>> gram(n);
  for (std::size_t f = 0; f < n; ++f) {
    gram[f].resize(n);
    for (std::size_t f2 = 0; f2 < n; ++f2)
      gram[f][f2] = f2 < f ? flat[f2 * n + f] : flat[f * n + f2];
  }
  return gram;
}

std::vector<Laurent> dual_basis(const WeylGroup& g,
                                const std::vector<std::vector<Laurent>>& gram, Exec e) {
  std::size_t n = g.size();
  std::size_t rank = g.datum().rank();

  /* Fraction-free Gauss-Jordan on [gram | I].  One pivot is chosen per
     core column; every update divides exactly by the previous pivot, so
     all intermediates stay in the ring.  Pivots are picked with the
     fewest terms to keep entries small; gram matrices here are very
     sparse with mostly unit entries.  Writing E for the accumulated row
     transform, termination gives E*gram = Q with Q zero except for one
     entry per pivot row/column, so row c of the inverse is the right
     block of the pivot row for column c divided by its final pivot
     entry. */
  std::vector<std::vector<Laurent>> c(n, std::vector<Laurent>(2 * n, Laurent(rank)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c[i][j] = gram[i][j];
    c[i][n + i] = Laurent::one(rank);
  }
  std::vector<bool> row_done(n, false), col_done(n, false);
  std::vector<std::size_t> pivot_row_of_col(n, 0);
  Laurent prev = Laurent::one(rank);

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pr = n, pc = n;
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < n; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (col_done[j] || c[i][j].is_zero()) continue;
        if (c[i][j].num_terms() < best) {
          best = c[i][j].num_terms();
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == n)
      throw VerificationFailure("dual basis: gram matrix is singular");
    Laurent pivot = c[pr][pc];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pr) continue;
      Laurent in_pivot_col = c[i][pc];  // the j loop overwrites it at j = pc
      for (std::size_t j = 0; j < 2 * n; ++j)
        c[i][j] = exact_div(pivot * c[i][j] - in_pivot_col * c[pr][j], prev);
    }
    row_done[pr] = true;
    col_done[pc] = true;
    pivot_row_of_col[pc] = pr;
    prev = std::move(pivot);
  }

  std::vector<Laurent> dual(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = pivot_row_of_col[col];
    const Laurent& q = c[r][col];
    /* dual y_col solves pairing(e^{x_f}, y_col) = delta_{f,col}; its
       Steinberg coordinates are the column `col` of gram^{-1}, i.e. row
       `col` of the inverse by symmetry, contracted with e^{x_j}. */
    Laurent y(rank);
    for (std::size_t j = 0; j < n; ++j) {
      Laurent coeff = exact_div(c[r][n + j], q);
      if (!coeff.is_zero()) y += coeff.mul_monomial(x_weight(g, j), 1);
    }
    dual[col] = std::move(y);
  }

  // mandatory re-check of the defining duality equations
  std::vector<Weight> x = x_basis(g);
  std::size_t bad = first_failure(
      n * n,
      [&](std::size_t k) {
        std::size_t f = k / n, f2 = k % n;
        Laurent want = f == f2 ? Laurent::one(rank) : Laurent::zero(rank);
        return pairing(g, Laurent::monomial(x[f], 1), dual[f2], Exec::Serial).poly == want;
      },
      e);
  if (bad != n * n)
    throw VerificationFailure("dual basis: duality check failed at pair " +
                              std::to_string(bad / n) + "," + std::to_string(bad % n));
  return dual;
}

SteinbergData compute_steinberg(const WeylGroup& g, Exec e) {
  SteinbergData sd;
  sd.x = x_basis(g);
  sd.gram = gram_matrix(g, e);
  sd.dual = dual_basis(g, sd.gram, e);
  return sd;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("KCELL_CACHE_DIR"); env && *env) return env;
  std::error_code ec;
  fs::path tmp = fs::temp_directory_path(ec);
  if (ec) tmp = "/tmp";
  return (tmp / ("kcell-cache-" + std::to_string(::getuid()))).string();
}

std::string cache_file_path(const std::string& dir, const std::string& cartan_digest) {
  return (fs::path(dir) / ("steinberg-" + cartan_digest + ".json")).string();
}

namespace {

/* Only the dual family is cached; x weights and the gram matrix are
   cheap to recompute and double as validation of the cached data.  The
   duality re-check below makes a stale or corrupt cache file harmless:
   it is simply recomputed. */
bool load_cached_duals(const WeylGroup& g, const std::string& file,
                       const std::vector<Weight>& x, std::vector<Laurent>* dual) {
  std::ifstream in(file);
  if (!in) return false;
  json j;
  try {
    in >> j;
    if (!j.is_object() || j.value("format", 0) != 1) return false;
    if (j.value("cartan_digest", std::string()) != g.datum().cartan_digest()) return false;
    auto& jx = j.at("x");
    auto& jd = j.at("dual");
    if (jx.size() != g.size() || jd.size() != g.size()) return false;
    std::size_t rank = g.datum().rank();
    for (std::size_t i = 0; i < g.size(); ++i)
      if (weight_from_string(jx[i].get<std::string>()) != x[i]) return false;
    std::vector<Laurent> d(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      d[i] = Laurent::from_string(jd[i].get<std::string>(), rank);
    for (std::size_t f = 0; f < g.size(); ++f)
      for (std::size_t f2 = 0; f2 < g.size(); ++f2) {
        Laurent want = f == f2 ? Laurent::one(rank) : Laurent::zero(rank);
        if (pairing(g, Laurent::monomial(x[f], 1), d[f2], Exec::Serial).poly != want)
          return false;
      }
    *dual = std::move(d);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void store_duals(const WeylGroup& g, const std::string& file,
                 const SteinbergData& sd) {
  try {
    fs::create_directories(fs::path(file).parent_path());
    json j;
    j["format"] = 1;
    j["cartan_digest"] = g.datum().cartan_digest();
    json jx = json::array(), jd = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      jx.push_back(to_string(sd.x[i]));
      jd.push_back(sd.dual[i].to_string());
    }
    j["x"] = std::move(jx);
    j["dual"] = std::move(jd);
    std::string tmp = file + ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << j.dump(1) << '\n';
    }
    std::error_code ec;
    fs::rename(tmp, file, ec);
    if (ec) fs::remove(tmp, ec);
  } catch (const std::exception&) {
    // the cache is advisory; failure to write is not an error
  }
}

}  // namespace

const SteinbergData& steinberg_data(const WeylGroup& g, const std::string& cache_dir) {
  static std::mutex mu;
  static std::map<std::string, SteinbergData> memo;
  std::scoped_lock lock(mu);
  std::string key = g.datum().cartan_digest();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::string dir = cache_dir.empty() ? default_cache_dir() : cache_dir;
  std::string file = cache_file_path(dir, key);

  SteinbergData sd;
  sd.x = x_basis(g);
  sd.gram = gram_matrix(g);
  std::vector<Laurent> dual;
  if (load_cached_duals(g, file, sd.x, &dual)) {
    sd.dual = std::move(dual);
  } else {
    sd.dual = dual_basis(g, sd.gram);
    store_duals(g, file, sd);
  }
  return memo.emplace(key, std::move(sd)).first->second;
}

std::vector<InvariantPoly> expand(const WeylGroup& g, const SteinbergData& sd,
                                  const Laurent& p, Exec e) {
  std::size_t n = g.size();
  std::vector<Laurent> flat = parallel_table(
      n, [&](std::size_t f) { return pairing(g, p, sd.dual[f], Exec::Serial).poly; }, e);
  std::vector<InvariantPoly> out(n);
  Laurent recombined(g.datum().rank());
  for (std::size_t f = 0; f < n; ++f) {
    recombined += flat[f].mul_monomial(sd.x[f], 1);
    out[f] = InvariantPoly{std::move(flat[f]), true};
  }
  if (!(recombined == p))
    throw VerificationFailure("expand: Steinberg coordinates do not recombine");
  return out;
}

}  // namespace kcell
