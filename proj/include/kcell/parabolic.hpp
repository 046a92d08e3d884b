#pragma once

#include <string>
#include <vector>

#include "kcell/laurent.hpp"
#include "kcell/weyl.hpp"

namespace kcell {

/* Double coset W_I u W_I inside the finite Weyl group; elements are
   group indices and min_rep is the unique element of minimal length. */
struct DoubleCoset {
  std::vector<int> I;
  std::vector<std::size_t> elements;
  std::size_t min_rep = 0;
};

/* Partition of the group into W_I double cosets, sorted by the length
   (then index) of the minimal representative.  Uniqueness of the
   minimal-length element in each coset is asserted. */
std::vector<DoubleCoset> double_cosets(const WeylGroup& g, const std::vector<int>& I);

// closure order: Bruhat comparison of minimal representatives
bool coset_leq(const WeylGroup& g, const DoubleCoset& a, const DoubleCoset& b);

/* Character of the irreducible with highest weight chi for the Levi-type
   sub-root-system R_I intersect w(R_I), computed in the ambient weight
   lattice.  chi must pair nonnegatively with every positive coroot of
   the subsystem.  An empty subsystem gives e^chi. */
Laurent levi_character(const WeylGroup& g, const std::vector<int>& I, std::size_t w,
                       const Weight& chi);

}  // namespace kcell
