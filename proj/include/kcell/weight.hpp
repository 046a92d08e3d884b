#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace kcell {

using Coord = long long;

/* A weight in coordinates relative to the fundamental weights, so the
   i-th coordinate of lambda is the pairing of lambda with the i-th
   simple coroot.  Comparison is lexicographic; this single order is
   used everywhere a canonical order on weights is needed. */
struct Weight {
  std::vector<Coord> c;

  Weight() = default;
  explicit Weight(std::size_t r) : c(r, 0) {}
  Weight(std::initializer_list<Coord> xs) : c(xs) {}

  std::size_t rank() const { return c.size(); }
  Coord& operator[](std::size_t i) { return c[i]; }
  Coord operator[](std::size_t i) const { return c[i]; }

  auto operator<=>(const Weight&) const = default;

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
};

inline Weight operator+(Weight a, const Weight& b) { return a += b; }
inline Weight operator-(Weight a, const Weight& b) { return a -= b; }
inline Weight operator-(Weight a) {
  for (auto& x : a.c) x = -x;
  return a;
}
inline Weight operator*(Coord k, Weight a) {
  for (auto& x : a.c) x *= k;
  return a;
}

inline bool is_zero(const Weight& a) {
  for (auto x : a.c)
    if (x != 0) return false;
  return true;
}

// all pairings with simple coroots nonnegative
inline bool is_dominant(const Weight& a) {
  for (auto x : a.c)
    if (x < 0) return false;
  return true;
}

std::string to_string(const Weight& w);            // "[a,b,...]"
Weight weight_from_string(const std::string& s);   // inverse of to_string

/* Small dense integer matrices, row-major.  Rank stays single-digit, so
   nothing clever is needed. */
using IntMat = std::vector<std::vector<Coord>>;

IntMat identity_mat(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
Weight mat_apply(const IntMat& m, const Weight& v);
bool mat_equal(const IntMat& a, const IntMat& b);

}  // namespace kcell
