#pragma once

#include <functional>
#include <string>
#include <vector>

#include "specht/diagrams.hpp"

namespace specht {

using Word = std::vector<int>;

// A filling of the skew nodes of a shape by 1..d. Values are stored in the
// reading order of shape_nodes (component, row, column).
class SkewTableau {
public:
  SkewTableau(SkewShape shape, std::vector<int> values);

  const SkewShape& shape() const { return shape_; }
  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  int at(const Node& n) const;
  Node node_of(int entry) const;

  bool is_row_strict() const;
  bool is_standard() const;
  Word residue_sequence() const;

  SkewTableau with_swapped(int r) const;  // exchanges entries r and r+1

  friend bool operator==(const SkewTableau& a, const SkewTableau& b) {
    return a.shape_ == b.shape_ && a.values_ == b.values_;
  }
  friend bool operator!=(const SkewTableau& a, const SkewTableau& b) { return !(a == b); }
  friend bool operator<(const SkewTableau& a, const SkewTableau& b) {
    return a.values_ < b.values_;
  }

private:
  SkewShape shape_;
  std::vector<int> values_;
  std::vector<Node> nodes_;        // reading order
  std::vector<int> entry_index_;   // entry -> position in nodes_
};

SkewTableau leading_tableau(const SkewShape& s);

// fills the inner diagram with its own leading tableau and shifts the skew
// entries up, producing a tableau on the full outer diagram
SkewTableau embed_Y(const SkewTableau& t);

// signed counts of addable minus removable nodes of the residue of A that lie
// strictly below (later component, or same component and larger row) or
// strictly above A; d_below expects A removable, d_above expects A addable
int d_below(const Multipartition& p, const Multicharge& charge, int e, const Node& A);
int d_above(const Multipartition& p, const Multicharge& charge, int e, const Node& A);

int degree(const SkewTableau& t);    // standard tableaux only
int codegree(const SkewTableau& t);

void for_each_standard(const SkewShape& s, const std::function<void(const SkewTableau&)>& fn);
std::vector<SkewTableau> standard_tableaux(const SkewShape& s);
long long count_standard(const SkewShape& s);

class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);  // images of 1..n
  static Permutation identity(int n);
  static Permutation transposition(int n, int r);   // swaps r, r+1

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const { return img_.at(static_cast<size_t>(k - 1)); }
  const std::vector<int>& one_line() const { return img_; }
  Permutation inverse() const;
  friend Permutation operator*(const Permutation& a, const Permutation& b);  // a after b
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }

private:
  std::vector<int> img_;
};

int permutation_length(const Permutation& w);  // inversions
std::vector<int> lex_min_reduced_word(const Permutation& w);
bool bruhat_leq_permutation(const Permutation& u, const Permutation& w);

Permutation tableau_permutation(const SkewTableau& t);

// Bruhat comparison of row-strict tableaux on one shape, via dominance of the
// row counts of all entry prefixes of their embeddings
bool bruhat_leq(const SkewTableau& s, const SkewTableau& t);

// whether exchanging r and r+1 keeps the tableau standard, decided from the
// relative positions of the two entries
bool adjacent_swap_standard(const SkewTableau& t, int r);

// degree of the crossing diagram: apply a reduced expression of w to the word
// right to left, adding -a_{ij} for the letters at each crossing
int wiring_degree(const Permutation& w, const Word& word, int e);

std::string render_tableau(const SkewTableau& t);

}  // namespace specht
