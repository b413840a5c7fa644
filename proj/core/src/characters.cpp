#include "specht/characters.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "standard_scan.hpp"

namespace specht {

RootVector word_content(const Word& w, int e) {
  RootVector v(e, 0);
  for (int letter : w) {
    if (letter < 0 || letter >= e) throw std::invalid_argument("letter out of range");
    v.at(letter) += 1;
  }
  return v;
}

std::string word_to_string(const Word& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

GradedCharacter::GradedCharacter(RootVector content) : content_(std::move(content)) {}

GradedCharacter::GradedCharacter(RootVector content, std::map<Word, Laurent> terms)
    : content_(std::move(content)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
      continue;
    }
    if (word_content(it->first, e()) != content_)
      throw std::invalid_argument("word content does not match the character content");
    ++it;
  }
}

void GradedCharacter::add(const Word& w, const Laurent& p) {
  if (p.is_zero()) return;
  if (word_content(w, e()) != content_)
    throw std::invalid_argument("word content does not match the character content");
  Laurent& slot = terms_[w];
  slot += p;
  if (slot.is_zero()) terms_.erase(w);
}

Laurent GradedCharacter::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent() : it->second;
}

GradedCharacter& GradedCharacter::operator+=(const GradedCharacter& o) {
  if (content_ != o.content_) throw std::invalid_argument("content mismatch");
  for (const auto& [w, p] : o.terms_) add(w, p);
  return *this;
}

GradedCharacter& GradedCharacter::operator-=(const GradedCharacter& o) {
  if (content_ != o.content_) throw std::invalid_argument("content mismatch");
  for (const auto& [w, p] : o.terms_) add(w, -p);
  return *this;
}

GradedCharacter GradedCharacter::shifted(int k) const {
  GradedCharacter out(content_);
  for (const auto& [w, p] : terms_) out.terms_[w] = p.shifted(k);
  return out;
}

GradedCharacter GradedCharacter::scaled(const Laurent& p) const {
  GradedCharacter out(content_);
  if (p.is_zero()) return out;
  for (const auto& [w, q] : terms_) {
    Laurent prod = p * q;
    if (!prod.is_zero()) out.terms_[w] = prod;
  }
  return out;
}

bool GradedCharacter::nonnegative() const {
  for (const auto& [w, p] : terms_)
    if (!p.nonnegative()) return false;
  return true;
}

Laurent GradedCharacter::total_dimension() const {
  Laurent out;
  for (const auto& [w, p] : terms_) out += p;
  return out;
}

GradedCharacter specht_character(const SkewShape& s) {
  std::map<Word, Laurent> terms;
  detail::scan_standard(s, [&](const detail::ScanView& v) {
    terms[v.word] += Laurent::q_power(v.degree);
  });
  return GradedCharacter(content(s), std::move(terms));
}

namespace {

// the path weight is a single power of q, so only its exponent is carried;
// cross[i][c] is the pairing of the content of x_i..x_end with the simple
// root c, precomputed so the recursion allocates nothing
void shuffle_rec(const Word& x, const Word& y, size_t i, size_t j,
                 const std::vector<std::vector<int>>& cross, Word& acc, int exp,
                 std::map<Word, Laurent>& out) {
  if (i == x.size() && j == y.size()) {
    out[acc] += Laurent::q_power(exp);
    return;
  }
  if (i < x.size()) {
    acc.push_back(x[i]);
    shuffle_rec(x, y, i + 1, j, cross, acc, exp, out);
    acc.pop_back();
  }
  if (j < y.size()) {
    // y_j jumps in front of every remaining letter of x
    acc.push_back(y[j]);
    shuffle_rec(x, y, i, j + 1, cross, acc, exp - cross[i][static_cast<size_t>(y[j])], out);
    acc.pop_back();
  }
}

}  // namespace

std::map<Word, Laurent> shuffle_words(const Word& x, const Word& y, int e) {
  std::vector<std::vector<int>> cross(x.size() + 1, std::vector<int>(static_cast<size_t>(e), 0));
  RootVector suffix = RootVector::zero(e);
  for (size_t i = x.size(); i-- > 0;) {
    suffix.at(x[i]) += 1;
    for (int c = 0; c < e; ++c)
      cross[i][static_cast<size_t>(c)] =
          static_cast<int>(bilinear_form(suffix, RootVector::simple(c, e)));
  }
  std::map<Word, Laurent> out;
  Word acc;
  acc.reserve(x.size() + y.size());
  shuffle_rec(x, y, 0, 0, cross, acc, 0, out);
  return out;
}

GradedCharacter shuffle_product(const GradedCharacter& x, const GradedCharacter& y) {
  if (x.e() != y.e()) throw std::invalid_argument("mismatched e");
  std::map<Word, Laurent> terms;
  for (const auto& [wx, px] : x.terms())
    for (const auto& [wy, py] : y.terms()) {
      Laurent c = px * py;
      for (const auto& [w, weight] : shuffle_words(wx, wy, x.e())) terms[w] += c * weight;
    }
  return GradedCharacter(x.content() + y.content(), std::move(terms));
}

PairCharacter restrict_character(const GradedCharacter& x, const RootVector& alpha,
                                 const RootVector& beta) {
  if (alpha + beta != x.content())
    throw std::invalid_argument("split does not add up to the character content");
  if (!alpha.nonnegative() || !beta.nonnegative())
    throw std::invalid_argument("split parts must be nonnegative");
  size_t h = static_cast<size_t>(height(alpha));
  PairCharacter out;
  for (const auto& [w, p] : x.terms()) {
    Word prefix(w.begin(), w.begin() + static_cast<long>(h));
    if (word_content(prefix, x.e()) != alpha) continue;
    Word suffix(w.begin() + static_cast<long>(h), w.end());
    out[{prefix, suffix}] += p;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

GradedCharacter bar_involution(const GradedCharacter& x) {
  GradedCharacter out(x.content());
  for (const auto& [w, p] : x.terms()) out.add(w, p.bar());
  return out;
}

GradedCharacter theta_star(const GradedCharacter& x, int i) {
  int e = x.e();
  int letter = normalize_residue(i, e);
  RootVector c = x.content() - RootVector::simple(letter, e);
  GradedCharacter out(c);
  for (const auto& [w, p] : x.terms()) {
    if (w.empty() || w.back() != letter) continue;
    Word shorter(w.begin(), w.end() - 1);
    out.add(shorter, p);
  }
  return out;
}

int epsilon(const GradedCharacter& x, int i) {
  GradedCharacter cur = x;
  int k = 0;
  while (!cur.is_zero()) {
    GradedCharacter next = theta_star(cur, i);
    if (next.is_zero()) break;
    cur = std::move(next);
    ++k;
  }
  return k;
}

ExtremalData extremal_word(const GradedCharacter& x) {
  if (x.is_zero()) throw std::invalid_argument("zero character has no extremal word");
  GradedCharacter cur = x;
  std::vector<std::pair<int, int>> runs_reversed;
  while (height(cur.content()) > 0) {
    int best_i = -1, best = 0;
    for (int i = 0; i < cur.e(); ++i) {
      int eps = epsilon(cur, i);
      if (eps > best) {
        best = eps;
        best_i = i;
      }
    }
    if (best_i < 0) throw std::logic_error("nonzero character with no strippable letter");
    runs_reversed.emplace_back(best_i, best);
    for (int k = 0; k < best; ++k) cur = theta_star(cur, best_i);
  }
  ExtremalData out;
  out.runs.assign(runs_reversed.rbegin(), runs_reversed.rend());
  for (const auto& [letter, count] : out.runs)
    for (int k = 0; k < count; ++k) out.word.push_back(letter);
  out.dim = x.coeff(out.word);
  return out;
}

namespace {

void enumerate_subdiagrams(const Multipartition& lam, size_t comp, int row, Partition& cur,
                           Multipartition& acc, std::vector<Multipartition>& out) {
  if (comp == lam.size()) {
    out.push_back(acc);
    return;
  }
  const Partition& shape = lam[comp];
  if (row > partition_rows(shape)) {
    acc.push_back(trim_partition(cur));
    Partition saved = std::move(cur);
    cur.clear();
    enumerate_subdiagrams(lam, comp + 1, 1, cur, acc, out);
    cur = std::move(saved);
    acc.pop_back();
    return;
  }
  int upper = std::min(part(shape, row), row == 1 ? part(shape, 1) : cur[static_cast<size_t>(row - 2)]);
  for (int len = upper; len >= 0; --len) {
    cur.push_back(len);
    enumerate_subdiagrams(lam, comp, row + 1, cur, acc, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Multipartition> subdiagrams_with_content(const Multipartition& lam,
                                                     const Multicharge& charge, int e,
                                                     const RootVector& alpha) {
  std::vector<Multipartition> all;
  Partition cur;
  Multipartition acc;
  enumerate_subdiagrams(lam, 0, 1, cur, acc, all);
  std::vector<Multipartition> out;
  for (const Multipartition& mu : all) {
    SkewShape s = partition_shape(mu, charge, e);
    if (content(s) == alpha) out.push_back(mu);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool check_restriction_filtration(const Multipartition& lam, const Multicharge& charge,
                                  int e, const RootVector& alpha, const RootVector& beta) {
  SkewShape whole = partition_shape(lam, charge, e);
  if (alpha + beta != content(whole)) throw std::invalid_argument("split does not match content");
  PairCharacter lhs = restrict_character(specht_character(whole), alpha, beta);
  PairCharacter rhs;
  for (const Multipartition& mu : subdiagrams_with_content(lam, charge, e, alpha)) {
    GradedCharacter inner = specht_character(partition_shape(mu, charge, e));
    GradedCharacter outer = specht_character(make_shape(lam, mu, charge, e));
    for (const auto& [wi, pi] : inner.terms())
      for (const auto& [wo, po] : outer.terms()) {
        Laurent prod = pi * po;
        auto key = std::make_pair(wi, wo);
        rhs[key] += prod;
        if (rhs[key].is_zero()) rhs.erase(key);
      }
  }
  return lhs == rhs;
}

JoinData join_data(const SkewShape& s) {
  if (!is_joinable(s)) throw std::invalid_argument("shape is not joinable");
  int y2 = part(s.outer[1], 1);
  int i = residue(s, Node{1, y2, 2});
  RootVector first = content(component_shape(s, 1));
  JoinData out{join_above(s), join_right(s), 0, 0, 0};
  out.shift_above = weight_pairing(i, first);
  out.shift_right = weight_pairing(normalize_residue(i + 1, s.e), first);
  int lead = degree(leading_tableau(s));
  int lead1 = degree(leading_tableau(component_shape(s, 1)));
  int lead2 = degree(leading_tableau(component_shape(s, 2)));
  out.shift_product = lead - lead1 - lead2;
  return out;
}

bool check_join_identity(const SkewShape& s) {
  JoinData jd = join_data(s);
  const std::vector<Node> snodes = shape_nodes(s);
  const size_t d = snodes.size();

  // each standard tableau of s maps node-by-node into one of the two joined
  // shapes; precompute both node maps so the tableau loop is a permutation of
  // the value array plus an adjacency check
  struct Target {
    SkewShape shape;
    int shift = 0;
    std::vector<Node> nodes;
    std::vector<int> tau;       // source node index -> target node index
    std::vector<int> left, up;  // target in-skew neighbors, -1 when absent
    std::unordered_map<std::string, int> degree_of;  // packed filling -> degree
    long long total = 0, matched = 0;
    std::map<Word, Laurent> terms;
  };
  std::array<Target, 2> tg{Target{jd.above, jd.shift_above, {}, {}, {}, {}, {}, 0, 0, {}},
                           Target{jd.right, jd.shift_right, {}, {}, {}, {}, {}, 0, 0, {}}};

  for (Target& T : tg) {
    const bool stacks = &T == &tg[0];
    T.nodes = shape_nodes(T.shape);
    if (T.nodes.size() != d) return false;
    auto index_in = [&T](const Node& n) {
      auto it = std::lower_bound(T.nodes.begin(), T.nodes.end(), n);
      return (it != T.nodes.end() && *it == n) ? static_cast<int>(it - T.nodes.begin()) : -1;
    };
    T.tau.assign(d, -1);
    std::vector<char> hit(d, 0);
    for (size_t i = 0; i < d; ++i) {
      Node image = stacks ? tau_above(s, snodes[i]) : tau_right(s, snodes[i]);
      int j = index_in(image);
      if (j < 0 || hit[static_cast<size_t>(j)]) return false;
      hit[static_cast<size_t>(j)] = 1;
      // residues carry over, so mapped tableaux keep their residue sequence
      if (residue(T.shape, image) != residue(s, snodes[i])) return false;
      T.tau[i] = j;
    }
    T.left.assign(d, -1);
    T.up.assign(d, -1);
    for (size_t j = 0; j < d; ++j) {
      if (node_in_skew(T.shape, Node{T.nodes[j].row, T.nodes[j].col - 1, T.nodes[j].comp}))
        T.left[j] = index_in(Node{T.nodes[j].row, T.nodes[j].col - 1, T.nodes[j].comp});
      if (node_in_skew(T.shape, Node{T.nodes[j].row - 1, T.nodes[j].col, T.nodes[j].comp}))
        T.up[j] = index_in(Node{T.nodes[j].row - 1, T.nodes[j].col, T.nodes[j].comp});
    }
    detail::scan_standard(T.shape, [&](const detail::ScanView& v) {
      T.terms[v.word] += Laurent::q_power(v.degree);
      std::string key(d, '\0');
      for (size_t i = 0; i < d; ++i) key[i] = static_cast<char>(v.values[i]);
      T.degree_of.emplace(std::move(key), v.degree);
      ++T.total;
    });
  }

  auto source_index = [&](const Node& n) {
    auto it = std::lower_bound(snodes.begin(), snodes.end(), n);
    return (it != snodes.end() && *it == n) ? static_cast<int>(it - snodes.begin()) : -1;
  };
  const int x1_idx = source_index(Node{partition_rows(s.outer[0]), 1, 1});
  const int y2_idx = source_index(Node{1, part(s.outer[1], 1), 2});
  if (x1_idx < 0 || y2_idx < 0) return false;

  // single pass over the standard tableaux of s: build the character and send
  // each tableau through its map, expecting the degree to drop by the shift
  std::map<Word, Laurent> whole_terms;
  std::string mapped(d, '\0');
  bool ok = true;
  detail::scan_standard(s, [&](const detail::ScanView& v) {
    if (!ok) return;
    whole_terms[v.word] += Laurent::q_power(v.degree);
    Target& T =
        v.values[static_cast<size_t>(x1_idx)] < v.values[static_cast<size_t>(y2_idx)] ? tg[0]
                                                                                      : tg[1];
    for (size_t i = 0; i < d; ++i)
      mapped[static_cast<size_t>(T.tau[i])] = static_cast<char>(v.values[i]);
    for (size_t j = 0; j < d; ++j) {
      if (T.left[j] >= 0 && static_cast<unsigned char>(mapped[static_cast<size_t>(T.left[j])]) >=
                                static_cast<unsigned char>(mapped[j])) {
        ok = false;
        return;
      }
      if (T.up[j] >= 0 && static_cast<unsigned char>(mapped[static_cast<size_t>(T.up[j])]) >=
                              static_cast<unsigned char>(mapped[j])) {
        ok = false;
        return;
      }
    }
    auto it = T.degree_of.find(mapped);
    if (it == T.degree_of.end() || it->second != v.degree - T.shift) {
      ok = false;
      return;
    }
    ++T.matched;
  });
  if (!ok) return false;
  // the node maps are injective on fillings, so matching counts make both
  // maps bijections onto the standard tableaux of the joined shapes
  if (tg[0].matched != tg[0].total || tg[1].matched != tg[1].total) return false;

  GradedCharacter whole(content(s), std::move(whole_terms));
  GradedCharacter above(content(jd.above), std::move(tg[0].terms));
  GradedCharacter right(content(jd.right), std::move(tg[1].terms));
  GradedCharacter split(whole.content());
  split += above.shifted(jd.shift_above);
  split += right.shifted(jd.shift_right);
  if (whole != split) return false;

  GradedCharacter prod = shuffle_product(specht_character(component_shape(s, 1)),
                                         specht_character(component_shape(s, 2)));
  return whole == prod.shifted(jd.shift_product);
}

std::string character_to_text(const GradedCharacter& x) {
  if (x.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [w, p] : x.terms()) {
    std::string poly = p.to_string();
    if (p.coeffs().size() > 1 || p.coeffs().begin()->second < 0) poly = "(" + poly + ")";
    os << poly << "*" << word_to_string(w) << "\n";
  }
  return os.str();
}

}  // namespace specht
