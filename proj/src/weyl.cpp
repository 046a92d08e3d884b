#include "kcell/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "kcell/errors.hpp"

namespace kcell {

namespace {

// matrix of s_i on fundamental-weight coordinates: lambda - lambda[i] * alpha_i
IntMat simple_reflection_mat(const RootDatum& d, std::size_t i) {
  IntMat m = identity_mat(d.rank());
  Weight a = d.simple_root(i);
  for (std::size_t r = 0; r < d.rank(); ++r) m[r][i] -= a[r];
  return m;
}

}  // namespace

WeylGroup::WeylGroup(const RootDatum& datum) : datum_(datum) {
  std::size_t n = datum.rank();
  std::vector<IntMat> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = simple_reflection_mat(datum, i);

  /* BFS from the identity by right multiplication.  l(w s_i) = l(w) + 1
     exactly when w(alpha_i) is positive, and BFS order is nondecreasing
     in length, so every matrix is first reached at its true length. */
  struct Tmp {
    IntMat mat;
    int length;
    std::vector<int> word;
  };
  std::vector<Tmp> tmp;
  std::map<IntMat, std::size_t> pos;
  tmp.push_back({identity_mat(n), 0, {}});
  pos.emplace(tmp[0].mat, 0);
  for (std::size_t head = 0; head < tmp.size(); ++head) {
    IntMat cur = tmp[head].mat;
    int len = tmp[head].length;
    for (std::size_t i = 0; i < n; ++i) {
      if (!datum.is_positive_root(mat_apply(cur, datum.simple_root(i)))) continue;
      IntMat next = mat_mul(cur, refl[i]);
      if (pos.emplace(next, tmp.size()).second)
        tmp.push_back({std::move(next), len + 1, {}});
    }
  }

  /* Canonical reduced word: repeatedly strip the smallest left descent.
     Elements arrive in nondecreasing length order, so the shorter
     element s_i * w already has its word when w is processed. */
  for (std::size_t t = 1; t < tmp.size(); ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t shorter = pos.at(mat_mul(refl[i], tmp[t].mat));
      if (tmp[shorter].length < tmp[t].length) {
        tmp[t].word = tmp[shorter].word;
        tmp[t].word.insert(tmp[t].word.begin(), static_cast<int>(i));
        break;
      }
    }
    if (static_cast<int>(tmp[t].word.size()) != tmp[t].length)
      throw InternalError("weyl: no left descent found for a non-identity element");
  }

  std::vector<std::size_t> order(tmp.size());
  for (std::size_t i = 0; i < tmp.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (tmp[a].length != tmp[b].length) return tmp[a].length < tmp[b].length;
    return tmp[a].word < tmp[b].word;
  });
  elts_.reserve(tmp.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    Tmp& t = tmp[order[k]];
    index_.emplace(t.mat, k);
    elts_.push_back({std::move(t.mat), std::move(t.word), t.length});
  }

  simple_.resize(n);
  for (std::size_t i = 0; i < n; ++i) simple_[i] = index_.at(refl[i]);
  longest_ = elts_.size() - 1;
  if (elts_[longest_].length != static_cast<int>(datum.num_positive_roots()))
    throw InternalError("weyl: longest element length != number of positive roots");

  inverse_.resize(elts_.size());
  for (std::size_t a = 0; a < elts_.size(); ++a) {
    IntMat inv = identity_mat(n);
    for (auto it = elts_[a].word.rbegin(); it != elts_[a].word.rend(); ++it)
      inv = mat_mul(inv, refl[static_cast<std::size_t>(*it)]);
    inverse_[a] = index_.at(inv);
  }
}

std::size_t WeylGroup::mult(std::size_t a, std::size_t b) const {
  return index_.at(mat_mul(elts_[a].mat, elts_[b].mat));
}

std::size_t WeylGroup::inverse(std::size_t a) const { return inverse_[a]; }

bool WeylGroup::right_descent(std::size_t w, int i) const {
  return !datum_.is_positive_root(
      act(w, datum_.simple_root(static_cast<std::size_t>(i))));
}

bool WeylGroup::bruhat_leq(std::size_t u, std::size_t v) const {
  if (u == identity()) return true;
  if (length(u) > length(v)) return false;
  int i = -1;
  for (std::size_t k = 0; k < datum_.rank(); ++k)
    if (right_descent(v, static_cast<int>(k))) {
      i = static_cast<int>(k);
      break;
    }
  if (i < 0) return false;  // v = e and u != e
  std::size_t vs = mult(v, simple(i));
  if (right_descent(u, i)) return bruhat_leq(mult(u, simple(i)), vs);
  return bruhat_leq(u, vs);
}

std::size_t WeylGroup::index_of(const IntMat& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw InternalError("weyl: matrix is not a group element");
  return it->second;
}

std::string WeylGroup::word_name(std::size_t a) const {
  if (elts_[a].word.empty()) return "e";
  std::string s;
  for (int i : elts_[a].word) s += static_cast<char>('1' + i);
  return s;
}

std::size_t WeylGroup::element_by_word_name(const std::string& name) const {
  if (name.empty()) throw ParseError("weyl: empty element name");
  if (name == "e") return identity();
  std::size_t w = identity();
  for (char ch : name) {
    if (ch < '1' || ch >= static_cast<char>('1' + datum_.rank()))
      throw ParseError("weyl: bad letter '" + std::string(1, ch) + "' in element name");
    w = mult(w, simple(ch - '1'));
  }
  return w;
}

ExtAffine ext_mult(const WeylGroup& g, const ExtAffine& a, const ExtAffine& b) {
  return ExtAffine{a.t + g.act(a.w, b.t), g.mult(a.w, b.w)};
}

ExtAffine ext_inverse(const WeylGroup& g, const ExtAffine& a) {
  std::size_t wi = g.inverse(a.w);
  return ExtAffine{-g.act(wi, a.t), wi};
}

long long ext_length(const WeylGroup& g, const ExtAffine& a) {
  const RootDatum& d = g.datum();
  std::size_t wi = g.inverse(a.w);
  long long total = 0;
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    long long p = d.coroot_pairing(a.t, k);
    if (d.is_positive_root(g.act(wi, d.positive_roots()[k])))
      total += std::llabs(p);
    else
      total += std::llabs(p - 1);
  }
  return total;
}

}  // namespace kcell
