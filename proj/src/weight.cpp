#include "kcell/weight.hpp"

#include <sstream>

#include "kcell/errors.hpp"

namespace kcell {

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ']';
  return os.str();
}

Weight weight_from_string(const std::string& s) {
  std::size_t a = s.find('[');
  std::size_t b = s.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw ParseError("weight: expected [a,b,...], got '" + s + "'");
  Weight w;
  std::string body = s.substr(a + 1, b - a - 1);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("weight: bad coordinate '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw ParseError("weight: bad coordinate '" + tok + "'");
    w.c.push_back(v);
  }
  if (!body.empty() && w.c.empty()) throw ParseError("weight: bad list '" + s + "'");
  return w;
}

IntMat identity_mat(std::size_t n) {
  IntMat m(n, std::vector<Coord>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat r(n, std::vector<Coord>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      Coord ail = a[i][l];
      if (ail == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += ail * b[l][j];
    }
  return r;
}

Weight mat_apply(const IntMat& m, const Weight& v) {
  Weight r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Coord s = 0;
    for (std::size_t j = 0; j < v.rank(); ++j) s += m[i][j] * v[j];
    r[i] = s;
  }
  return r;
}

bool mat_equal(const IntMat& a, const IntMat& b) { return a == b; }

}  // namespace kcell
