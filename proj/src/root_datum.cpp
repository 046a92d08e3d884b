#include "kcell/root_datum.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "kcell/errors.hpp"

namespace kcell {

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

// gmpxx has no long long overloads; Coord values always fit in long here
inline long zl(Coord v) { return static_cast<long>(v); }

mpz_class zmat_det(ZMat m) {
  // fraction-free Bareiss; fine for single-digit rank
  std::size_t n = m.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = q;
      }
    prev = m[k][k];
  }
  return n == 0 ? mpz_class(1) : mpz_class(sign * m[n - 1][n - 1]);
}

/* Finite-type test: the Cartan matrix must be symmetrizable with a
   positive diagonal symmetrizer and the symmetrized matrix positive
   definite.  The symmetrizer is found by propagating ratios along the
   Coxeter graph. */
void validate_cartan(const IntMat& c) {
  std::size_t n = c.size();
  if (n == 0) throw ParseError("cartan: empty matrix");
  for (auto& row : c)
    if (row.size() != n) throw ParseError("cartan: not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i][i] != 2) throw ParseError("cartan: diagonal entry not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) throw ParseError("cartan: positive off-diagonal entry");
      if ((c[i][j] == 0) != (c[j][i] == 0))
        throw ParseError("cartan: zero pattern not symmetric");
    }
  }
  // d_i * c[i][j] == d_j * c[j][i] with d_i > 0 rational; use mpq via pair of mpz
  std::vector<mpz_class> num(n, 0), den(n, 1);
  std::vector<int> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    num[s] = 1;
    seen[s] = 1;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0) continue;
        // d_j = d_i * c[i][j] / c[j][i]
        mpz_class nn = num[i] * zl(c[i][j]);
        mpz_class dd = den[i] * zl(c[j][i]);
        if (dd < 0) {
          nn = -nn;
          dd = -dd;
        }
        if (!seen[j]) {
          num[j] = nn;
          den[j] = dd;
          seen[j] = 1;
          q.push_back(j);
        } else if (num[j] * dd != nn * den[j]) {
          throw ParseError("cartan: not symmetrizable");
        }
      }
    }
  }
  mpz_class l = 1;
  for (std::size_t i = 0; i < n; ++i) l = l / gcd(l, den[i]) * den[i];
  std::vector<mpz_class> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = num[i] * (l / den[i]);
    if (d[i] <= 0) throw ParseError("cartan: symmetrizer not positive");
  }
  // leading principal minors of diag(d) * c must be positive
  ZMat sym(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym[i][j] = d[i] * zl(c[i][j]);
  for (std::size_t k = 1; k <= n; ++k) {
    ZMat lead(k, std::vector<mpz_class>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = sym[i][j];
    if (zmat_det(std::move(lead)) <= 0)
      throw ParseError("cartan: symmetrized form not positive definite (not finite type)");
  }
}

IntMat cartan_of_type(char family, std::size_t n) {
  auto chain = [&](std::size_t size) {
    IntMat c(size, std::vector<Coord>(size, 0));
    for (std::size_t i = 0; i < size; ++i) {
      c[i][i] = 2;
      if (i + 1 < size) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
      }
    }
    return c;
  };
  switch (family) {
    case 'A':
      if (n < 1) throw ParseError("type A needs rank >= 1");
      return chain(n);
    case 'B': {
      if (n < 2) throw ParseError("type B needs rank >= 2");
      IntMat c = chain(n);
      c[n - 1][n - 2] = -2;  // last simple root short
      return c;
    }
    case 'C': {
      if (n < 2) throw ParseError("type C needs rank >= 2");
      IntMat c = chain(n);
      c[n - 2][n - 1] = -2;  // last simple root long
      return c;
    }
    case 'D': {
      if (n < 3) throw ParseError("type D needs rank >= 3");
      IntMat c = chain(n - 1);
      c.resize(n);
      for (auto& row : c) row.resize(n, 0);
      c[n - 1].assign(n, 0);
      c[n - 1][n - 1] = 2;
      c[n - 1][n - 3] = -1;
      c[n - 3][n - 1] = -1;
      return c;
    }
    case 'E': {
      if (n < 6 || n > 8) throw ParseError("type E needs rank 6, 7 or 8");
      IntMat c = chain(n - 1);
      c.resize(n);
      for (auto& row : c) row.resize(n, 0);
      c[n - 1].assign(n, 0);
      c[n - 1][n - 1] = 2;
      c[n - 1][2] = -1;  // branch node attached to the third chain node
      c[2][n - 1] = -1;
      return c;
    }
    case 'F': {
      if (n != 4) throw ParseError("type F needs rank 4");
      IntMat c = chain(4);
      c[2][1] = -2;  // double bond between nodes 2 and 3
      return c;
    }
    case 'G': {
      if (n != 2) throw ParseError("type G needs rank 2");
      return IntMat{{2, -1}, {-3, 2}};
    }
    default:
      throw ParseError(std::string("unknown type family '") + family + "'");
  }
}

std::size_t expected_positive_roots(char family, std::size_t n) {
  switch (family) {
    case 'A':
      return n * (n + 1) / 2;
    case 'B':
    case 'C':
      return n * n;
    case 'D':
      return n * (n - 1);
    case 'E':
      return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F':
      return 24;
    case 'G':
      return 6;
    default:
      return 0;
  }
}

std::string mat_text(const IntMat& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) os << ',';
      os << m[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char b : data) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string to_string(const OmegaElement& e) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < e.r.size(); ++i) {
    if (i) os << ',';
    os << e.r[i];
  }
  os << ']';
  return os.str();
}

OmegaGroup::OmegaGroup(const IntMat& sublattice) {
  std::size_t n = sublattice.size();
  // columns of M span X: M = transpose of the row-basis matrix
  ZMat m(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = zl(sublattice[j][i]);
  ZMat left(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) left[i][i] = 1;

  auto row_op = [&](std::size_t i, std::size_t k, const mpz_class& q) {
    // row_i -= q * row_k, in m and in the left transform
    for (std::size_t j = 0; j < n; ++j) m[i][j] -= q * m[k][j];
    for (std::size_t j = 0; j < n; ++j) left[i][j] -= q * left[k][j];
  };

  /* Smith normal form by alternated row/column reduction.  Only the left
     transform is tracked: cosets are read off as (left * v) mod diagonal. */
  for (std::size_t k = 0; k < n; ++k) {
    // move a nonzero pivot into (k, k)
    std::size_t pi = k, pj = k;
    bool found = false;
    for (std::size_t i = k; i < n && !found; ++i)
      for (std::size_t j = k; j < n && !found; ++j)
        if (m[i][j] != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) throw ParseError("sublattice: matrix is singular");
    std::swap(m[k], m[pi]);
    std::swap(left[k], left[pi]);
    for (std::size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][pj]);

    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][k].get_mpz_t(), m[k][k].get_mpz_t());
        row_op(i, k, q);
        if (m[i][k] != 0) {
          std::swap(m[k], m[i]);
          std::swap(left[k], left[i]);
          clean = false;
        }
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m[k][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[k][j].get_mpz_t(), m[k][k].get_mpz_t());
        for (std::size_t i = 0; i < n; ++i) m[i][j] -= q * m[i][k];
        if (m[k][j] != 0) {
          for (std::size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest of the submatrix
      bool fixed = false;
      for (std::size_t i = k + 1; i < n && !fixed; ++i)
        for (std::size_t j = k + 1; j < n && !fixed; ++j)
          if (m[i][j] % m[k][k] != 0) {
            for (std::size_t jj = 0; jj < n; ++jj) m[k][jj] += m[i][jj];
            for (std::size_t jj = 0; jj < n; ++jj) left[k][jj] += left[i][jj];
            fixed = true;
          }
      if (!fixed) break;
    }
    if (m[k][k] < 0) {
      for (std::size_t j = 0; j < n; ++j) m[k][j] = -m[k][j];
      for (std::size_t j = 0; j < n; ++j) left[k][j] = -left[k][j];
    }
  }

  factors_.resize(n);
  left_.assign(n, std::vector<Coord>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i][i].fits_slong_p())
      throw ParseError("sublattice: invariant factor out of range");
    factors_[i] = m[i][i].get_si();
    for (std::size_t j = 0; j < n; ++j) {
      if (!left[i][j].fits_slong_p())
        throw ParseError("sublattice: transform entry out of range");
      left_[i][j] = left[i][j].get_si();
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (factors_[i + 1] % factors_[i] != 0)
      throw InternalError("smith form: divisibility chain broken");
  order_ = 1;
  for (auto d : factors_) order_ *= static_cast<unsigned long long>(d);
}

std::vector<Coord> OmegaGroup::canonical_form() const {
  std::vector<Coord> out;
  for (auto d : factors_)
    if (d > 1) out.push_back(d);
  return out;
}

OmegaElement OmegaGroup::coset_of(const Weight& w) const {
  OmegaElement e;
  e.r.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Coord s = 0;
    for (std::size_t j = 0; j < w.rank(); ++j) s += left_[i][j] * w[j];
    Coord d = factors_[i];
    e.r[i] = ((s % d) + d) % d;
  }
  return e;
}

OmegaElement OmegaGroup::add(const OmegaElement& a, const OmegaElement& b) const {
  OmegaElement e;
  e.r.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    e.r[i] = (a.r[i] + b.r[i]) % factors_[i];
  return e;
}

OmegaElement OmegaGroup::neg(const OmegaElement& a) const {
  OmegaElement e;
  e.r.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    e.r[i] = (factors_[i] - a.r[i]) % factors_[i];
  return e;
}

RootDatum RootDatum::make(const std::string& type, const IntMat& sublattice) {
  if (type.size() < 2) throw ParseError("type: expected a name like A2");
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  std::size_t n = 0;
  try {
    n = std::stoul(type.substr(1));
  } catch (const std::exception&) {
    throw ParseError("type: bad rank in '" + type + "'");
  }
  RootDatum d = make(cartan_of_type(family, n), sublattice, type);
  std::size_t expect = expected_positive_roots(family, n);
  if (d.pos_roots_.size() != expect)
    throw InternalError("positive root count mismatch for named type");
  return d;
}

RootDatum RootDatum::make(const IntMat& cartan, const IntMat& sublattice,
                          const std::string& label) {
  validate_cartan(cartan);
  RootDatum d;
  d.rank_ = cartan.size();
  d.label_ = label;
  d.cartan_ = cartan;
  d.sublattice_ = sublattice.empty() ? identity_mat(d.rank_) : sublattice;
  if (d.sublattice_.size() != d.rank_)
    throw ParseError("sublattice: row count must equal the rank");
  for (auto& row : d.sublattice_)
    if (row.size() != d.rank_) throw ParseError("sublattice: bad row length");

  /* Positive roots by reflection closure.  A positive root other than
     alpha_i stays positive under s_i, so iterating
     beta -> beta - <beta, alpha_i^vee> alpha_i over the current set
     reaches every positive root.  Coroot and root-basis coordinates
     ride along under the contragredient actions. */
  struct Entry {
    Weight root, coroot, rc;
  };
  std::vector<Entry> roots;
  std::set<Weight> seen;
  for (std::size_t i = 0; i < d.rank_; ++i) {
    Entry en;
    en.root = d.simple_root(i);
    en.coroot = Weight(d.rank_);
    en.coroot[i] = 1;
    en.rc = Weight(d.rank_);
    en.rc[i] = 1;
    roots.push_back(en);
    seen.insert(en.root);
  }
  for (std::size_t head = 0; head < roots.size(); ++head) {
    Entry cur = roots[head];
    for (std::size_t i = 0; i < d.rank_; ++i) {
      Coord pair_i = cur.root[i];
      Weight img = cur.root - pair_i * d.simple_root(i);
      if (img == cur.root || seen.count(img)) continue;
      bool negative = true;  // only alpha_i flips sign; anything new is positive
      if (img == -d.simple_root(i)) continue;
      (void)negative;
      Entry en;
      en.root = img;
      Coord cp = 0;  // <alpha_i, cur.coroot> = sum_j coroot_j * cartan[j][i]
      for (std::size_t j = 0; j < d.rank_; ++j) cp += cur.coroot[j] * cartan[j][i];
      en.coroot = cur.coroot;
      en.coroot[i] -= cp;
      en.rc = cur.rc;
      en.rc[i] -= pair_i;
      roots.push_back(en);
      seen.insert(img);
      if (roots.size() > 10000)
        throw ParseError("cartan: reflection closure does not stay finite");
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Entry& a, const Entry& b) { return a.root < b.root; });
  for (auto& en : roots) {
    d.pos_roots_.push_back(en.root);
    d.pos_coroots_.push_back(en.coroot);
    d.root_coords_.push_back(en.rc);
    d.pos_root_set_.insert(en.root);
    for (std::size_t j = 0; j < d.rank_; ++j)
      if (en.rc[j] < 0) throw InternalError("closure produced a non-positive root");
  }

  d.omega_ = OmegaGroup(d.sublattice_);
  for (std::size_t i = 0; i < d.rank_; ++i)
    if (!d.omega_.coset_of(d.simple_root(i)).is_zero())
      throw ParseError("sublattice: does not contain the root lattice");

  d.cartan_digest_ = fnv1a_hex("cartan:" + mat_text(d.cartan_));
  d.digest_ = fnv1a_hex(d.to_canonical_text());
  return d;
}

Weight RootDatum::simple_root(std::size_t i) const {
  Weight w(rank_);
  for (std::size_t k = 0; k < rank_; ++k) w[k] = cartan_[k][i];
  return w;
}

Weight RootDatum::fundamental_weight(std::size_t i) const {
  Weight w(rank_);
  w[i] = 1;
  return w;
}

Weight RootDatum::rho() const {
  Weight w(rank_);
  for (std::size_t i = 0; i < rank_; ++i) w[i] = 1;
  return w;
}

Coord RootDatum::coroot_pairing(const Weight& lambda, std::size_t k) const {
  Coord s = 0;
  for (std::size_t j = 0; j < rank_; ++j) s += pos_coroots_[k][j] * lambda[j];
  return s;
}

std::string RootDatum::to_canonical_text() const {
  return "cartan:" + mat_text(cartan_) + ";sublattice:" + mat_text(sublattice_);
}

RootDatum RootDatum::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line, type_name;
  IntMat cartan, sublattice;
  bool want_root = false, want_weight = false;

  auto parse_mat = [](const std::string& v) {
    IntMat m;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < v.size() && std::isspace(static_cast<unsigned char>(v[i]))) ++i;
    };
    auto expect = [&](char ch) {
      skip();
      if (i >= v.size() || v[i] != ch)
        throw ParseError("matrix: expected '" + std::string(1, ch) + "' in '" + v + "'");
      ++i;
    };
    expect('[');
    skip();
    while (i < v.size() && v[i] != ']') {
      expect('[');
      std::vector<Coord> row;
      skip();
      while (i < v.size() && v[i] != ']') {
        std::size_t used = 0;
        long long val = 0;
        try {
          val = std::stoll(v.substr(i), &used);
        } catch (const std::exception&) {
          throw ParseError("matrix: bad entry in '" + v + "'");
        }
        i += used;
        row.push_back(val);
        skip();
        if (i < v.size() && v[i] == ',') {
          ++i;
          skip();
        }
      }
      expect(']');
      m.push_back(std::move(row));
      skip();
      if (i < v.size() && v[i] == ',') {
        ++i;
        skip();
      }
    }
    expect(']');
    skip();
    if (i != v.size()) throw ParseError("matrix: trailing characters in '" + v + "'");
    if (m.empty()) throw ParseError("matrix: empty");
    return m;
  };

  while (std::getline(is, line)) {
    std::size_t h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    auto trim = [](std::string s) {
      std::size_t a = s.find_first_not_of(" \t\r\n");
      if (a == std::string::npos) return std::string();
      std::size_t b = s.find_last_not_of(" \t\r\n");
      return s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("datum: expected 'key = value': " + line);
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "type") {
      type_name = val;
    } else if (key == "cartan") {
      cartan = parse_mat(val);
    } else if (key == "sublattice") {
      if (val == "root")
        want_root = true;
      else if (val == "weight")
        want_weight = true;
      else
        sublattice = parse_mat(val);
    } else {
      throw ParseError("datum: unknown key '" + key + "'");
    }
  }
  if (type_name.empty() == cartan.empty())
    throw ParseError("datum: give exactly one of 'type' or 'cartan'");

  RootDatum base = type_name.empty() ? make(cartan, IntMat{}, "custom")
                                     : make(type_name, IntMat{});
  if (want_root) {
    // rows are the simple roots
    IntMat rows(base.rank(), std::vector<Coord>(base.rank()));
    for (std::size_t i = 0; i < base.rank(); ++i) {
      Weight a = base.simple_root(i);
      for (std::size_t j = 0; j < base.rank(); ++j) rows[i][j] = a[j];
    }
    sublattice = rows;
  } else if (want_weight || sublattice.empty()) {
    sublattice = identity_mat(base.rank());
  }
  return type_name.empty() ? make(cartan, sublattice, "custom")
                           : make(type_name, sublattice);
}

}  // namespace kcell
