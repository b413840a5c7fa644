#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specht/laurent.hpp"
#include "specht/tableaux.hpp"

namespace specht {

RootVector word_content(const Word& w, int e);
std::string word_to_string(const Word& w);

// finite sum of words with Laurent coefficients; every stored word has the
// same content
class GradedCharacter {
public:
  explicit GradedCharacter(RootVector content);

  const RootVector& content() const { return content_; }
  int e() const { return content_.e(); }
  const std::map<Word, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, const Laurent& p);
  Laurent coeff(const Word& w) const;

  GradedCharacter& operator+=(const GradedCharacter& o);
  GradedCharacter& operator-=(const GradedCharacter& o);
  friend GradedCharacter operator+(GradedCharacter a, const GradedCharacter& b) {
    return a += b;
  }
  friend GradedCharacter operator-(GradedCharacter a, const GradedCharacter& b) {
    return a -= b;
  }

  GradedCharacter shifted(int k) const;          // times q^k
  GradedCharacter scaled(const Laurent& p) const;
  bool nonnegative() const;

  // total graded dimension: sum of all coefficients
  Laurent total_dimension() const;

  friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
    return a.content_ == b.content_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GradedCharacter& a, const GradedCharacter& b) {
    return !(a == b);
  }

private:
  RootVector content_;
  std::map<Word, Laurent> terms_;

  // bulk construction for the enumeration-heavy producers; validates each
  // distinct word once instead of once per added monomial
  GradedCharacter(RootVector content, std::map<Word, Laurent> terms);
  friend GradedCharacter specht_character(const SkewShape& s);
  friend GradedCharacter shuffle_product(const GradedCharacter& x, const GradedCharacter& y);
  friend bool check_join_identity(const SkewShape& s);
};

// sum over standard tableaux of q^deg times the residue sequence
GradedCharacter specht_character(const SkewShape& s);

// quantum shuffle: interleavings weighted by q^{-(a,b)} per inverted letter pair
GradedCharacter shuffle_product(const GradedCharacter& x, const GradedCharacter& y);
std::map<Word, Laurent> shuffle_words(const Word& x, const Word& y, int e);

// splitting of each word at the height of alpha, kept as word pairs
using PairCharacter = std::map<std::pair<Word, Word>, Laurent>;
PairCharacter restrict_character(const GradedCharacter& x, const RootVector& alpha,
                                 const RootVector& beta);

GradedCharacter bar_involution(const GradedCharacter& x);

// drop a final letter i from every word (words not ending in i vanish)
GradedCharacter theta_star(const GradedCharacter& x, int i);
int epsilon(const GradedCharacter& x, int i);

struct ExtremalData {
  std::vector<std::pair<int, int>> runs;  // (letter, multiplicity), left to right
  Word word;                              // flattened runs
  Laurent dim;                            // coefficient of that word
};
// greedily strips maximal runs from the right; ties broken by smallest letter
ExtremalData extremal_word(const GradedCharacter& x);

// all sub-multipartitions of lam whose content equals alpha
std::vector<Multipartition> subdiagrams_with_content(const Multipartition& lam,
                                                     const Multicharge& charge, int e,
                                                     const RootVector& alpha);

// character identity for restriction: the split of the character of lam at
// alpha equals the sum over subdiagrams mu of content alpha of the tensor of
// the characters of mu and lam/mu
bool check_restriction_filtration(const Multipartition& lam, const Multicharge& charge,
                                  int e, const RootVector& alpha, const RootVector& beta);

struct JoinData {
  SkewShape above;    // component 1 stacked over component 2
  SkewShape right;    // component 1 shifted right of component 2
  int shift_above;    // grading shift on the stacked character
  int shift_right;    // grading shift on the shifted character
  int shift_product;  // shift relating the character to the shuffle of components
};
JoinData join_data(const SkewShape& s);  // requires is_joinable

// verifies, for a joinable two-component shape: the two-term splitting of the
// character, the shuffle identity with shift, and the degree-shift bijections
// on standard tableaux
bool check_join_identity(const SkewShape& s);

// character serialization used by the CLI and tests
std::string character_to_text(const GradedCharacter& x);

}  // namespace specht
