#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kcell/root_datum.hpp"
#include "kcell/weight.hpp"

namespace kcell {

/* The finite Weyl group, fully enumerated.  Elements are indexed
   0..size()-1 in (length, lexicographically smallest reduced word)
   order, so index 0 is the identity and the index order refines the
   Bruhat order.  Each element stores its action matrix on the weight
   lattice (in fundamental-weight coordinates), its canonical reduced
   word, and its length. */
class WeylGroup {
 public:
  struct Element {
    IntMat mat;
    std::vector<int> word;  // canonical reduced word, letters in 0..rank-1
    int length = 0;
  };

  // the group keeps its own copy of the datum, so temporaries are fine
  explicit WeylGroup(const RootDatum& datum);

  const RootDatum& datum() const { return datum_; }
  std::size_t size() const { return elts_.size(); }
  const Element& element(std::size_t i) const { return elts_[i]; }

  std::size_t identity() const { return 0; }
  std::size_t simple(int i) const { return simple_[static_cast<std::size_t>(i)]; }
  std::size_t longest() const { return longest_; }

  std::size_t mult(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  int length(std::size_t a) const { return elts_[a].length; }
  Weight act(std::size_t a, const Weight& v) const { return mat_apply(elts_[a].mat, v); }

  // w(alpha_i) is a negative root
  bool right_descent(std::size_t w, int i) const;
  // Bruhat order, by the descent recursion
  bool bruhat_leq(std::size_t u, std::size_t v) const;

  std::size_t index_of(const IntMat& m) const;
  std::string word_name(std::size_t a) const;               // "e", "1", "121", ...
  std::size_t element_by_word_name(const std::string&) const;  // parses word_name output

 private:
  RootDatum datum_;
  std::vector<Element> elts_;
  std::map<IntMat, std::size_t> index_;
  std::vector<std::size_t> simple_;
  std::vector<std::size_t> inverse_;
  std::size_t longest_ = 0;
};

/* Element t_lambda * w of the extended affine Weyl group
   (weight lattice) semidirect W0, stored with the translation on the left. */
struct ExtAffine {
  Weight t;
  std::size_t w = 0;
  bool operator==(const ExtAffine&) const = default;
};

ExtAffine ext_mult(const WeylGroup& g, const ExtAffine& a, const ExtAffine& b);
ExtAffine ext_inverse(const WeylGroup& g, const ExtAffine& a);

/* Iwahori-Matsumoto length of t_lambda * w:
   sum over positive roots alpha with w^-1(alpha) > 0 of |<lambda, alpha^vee>|
   plus sum over positive roots alpha with w^-1(alpha) < 0 of |<lambda, alpha^vee> - 1|. */
long long ext_length(const WeylGroup& g, const ExtAffine& a);

}  // namespace kcell
