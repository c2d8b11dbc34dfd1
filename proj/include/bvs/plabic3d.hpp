#pragma once

#include <string>
#include <vector>

#include "bvs/weave.hpp"

namespace bvs {

class PlabicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A type A 3D plabic graph with u = w0, recorded by its crossing word.  The
// word is either all positive or all negative.
struct PlabicGraph3D {
  int rank = 1;  // number of simple roots, so the group is SL_{rank+1}
  DoubleBraidWord word;
};

// solid[p-1] for letter p of the word.  Letters are scanned right to left and
// a letter is solid when the Demazure product of the letters to its right
// already has it as a left descent.
std::vector<bool> scan_solidity(const PlabicGraph3D& g);

// Builds the weave crossing by crossing in plabic coordinates (new lines
// enter on the left) and reports it in the coordinates of the right inductive
// weave of the single word.  All-negative words give the left inductive weave.
Weave compile_weave(const PlabicGraph3D& g);

PlabicGraph3D parse_plabic_json(const std::string& text);
std::string plabic_json(const PlabicGraph3D& g);

}  // namespace bvs
