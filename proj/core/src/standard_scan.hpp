#pragma once

#include <functional>
#include <vector>

#include "specht/tableaux.hpp"

// internal fast path shared by the character and identity-check code; not
// installed.  Enumerates the same fillings as for_each_standard but keeps the
// residue word and the degree updated incrementally instead of building a
// SkewTableau per filling.

namespace specht::detail {

// state of one standard filling; the references are owned by the scanner and
// only valid inside the callback
struct ScanView {
  const std::vector<Node>& nodes;   // reading order
  const std::vector<int>& values;   // parallel to nodes, entries 1..d
  const Word& word;                 // word[k-1] = residue of entry k
  int degree;                       // equals degree() of the same tableau
};

void scan_standard(const SkewShape& s, const std::function<void(const ScanView&)>& fn);

}  // namespace specht::detail
