#include "specht/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "standard_scan.hpp"

namespace specht {

SkewTableau::SkewTableau(SkewShape shape, std::vector<int> values)
    : shape_(std::move(shape)), values_(std::move(values)), nodes_(shape_nodes(shape_)) {
  if (values_.size() != nodes_.size())
    throw std::invalid_argument("tableau needs one value per skew node");
  entry_index_.assign(values_.size() + 1, -1);
  for (size_t i = 0; i < values_.size(); ++i) {
    int v = values_[i];
    if (v < 1 || v > static_cast<int>(values_.size()) || entry_index_[static_cast<size_t>(v)] != -1)
      throw std::invalid_argument("tableau values must be a bijection onto 1..d");
    entry_index_[static_cast<size_t>(v)] = static_cast<int>(i);
  }
}

int SkewTableau::at(const Node& n) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
  if (it == nodes_.end() || *it != n)
    throw std::invalid_argument("node " + node_to_string(n) + " not in the skew diagram");
  return values_[static_cast<size_t>(it - nodes_.begin())];
}

Node SkewTableau::node_of(int entry) const {
  if (entry < 1 || entry > size()) throw std::invalid_argument("entry out of range");
  return nodes_[static_cast<size_t>(entry_index_[static_cast<size_t>(entry)])];
}

bool SkewTableau::is_row_strict() const {
  for (size_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i].comp == nodes_[i - 1].comp && nodes_[i].row == nodes_[i - 1].row &&
        nodes_[i].col == nodes_[i - 1].col + 1 && values_[i] <= values_[i - 1])
      return false;
  }
  return true;
}

bool SkewTableau::is_standard() const {
  if (!is_row_strict()) return false;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    Node below{nodes_[i].row + 1, nodes_[i].col, nodes_[i].comp};
    if (!node_in_skew(shape_, below)) continue;
    if (at(below) <= values_[i]) return false;
  }
  return true;
}

Word SkewTableau::residue_sequence() const {
  Word w(values_.size());
  for (size_t i = 0; i < nodes_.size(); ++i)
    w[static_cast<size_t>(values_[i] - 1)] = residue(shape_, nodes_[i]);
  return w;
}

SkewTableau SkewTableau::with_swapped(int r) const {
  if (r < 1 || r + 1 > size()) throw std::invalid_argument("entry out of range");
  std::vector<int> vals = values_;
  vals[static_cast<size_t>(entry_index_[static_cast<size_t>(r)])] = r + 1;
  vals[static_cast<size_t>(entry_index_[static_cast<size_t>(r + 1)])] = r;
  return SkewTableau(shape_, std::move(vals));
}

SkewTableau leading_tableau(const SkewShape& s) {
  std::vector<int> vals(static_cast<size_t>(shape_size(s)));
  std::iota(vals.begin(), vals.end(), 1);
  return SkewTableau(s, std::move(vals));
}

SkewTableau embed_Y(const SkewTableau& t) {
  const SkewShape& s = t.shape();
  SkewShape full = partition_shape(s.outer, s.charge, s.e);
  SkewShape inner_shape = partition_shape(s.inner, s.charge, s.e);
  int shift = shape_size(inner_shape);
  std::vector<Node> inner_nodes = shape_nodes(inner_shape);
  std::vector<int> vals;
  vals.reserve(static_cast<size_t>(shape_size(full)));
  for (const Node& n : shape_nodes(full)) {
    if (node_in_skew(s, n)) {
      vals.push_back(t.at(n) + shift);
    } else {
      auto it = std::lower_bound(inner_nodes.begin(), inner_nodes.end(), n);
      vals.push_back(static_cast<int>(it - inner_nodes.begin()) + 1);
    }
  }
  return SkewTableau(full, std::move(vals));
}

namespace {

bool strictly_below(const Node& x, const Node& a) {
  return x.comp > a.comp || (x.comp == a.comp && x.row > a.row);
}

bool strictly_above(const Node& x, const Node& a) {
  return x.comp < a.comp || (x.comp == a.comp && x.row < a.row);
}

// addable minus removable res_i-nodes on the wanted side of A, scanning rows
// directly; row r of a partition has an addable node iff it extends a strictly
// longer row (or is the first), and a removable one iff it is a strict corner
int count_side(const Multipartition& p, const Multicharge& charge, int e, const Node& A,
               int res_i, bool below) {
  int d = 0;
  for (int m = 1; m <= static_cast<int>(p.size()); ++m) {
    const Partition& lam = p[static_cast<size_t>(m - 1)];
    int rows = partition_rows(lam);
    for (int r = 1; r <= rows + 1; ++r) {
      bool side = below ? strictly_below(Node{r, 1, m}, A) : strictly_above(Node{r, 1, m}, A);
      if (!side) continue;
      int len = part(lam, r);
      if ((r == 1 || part(lam, r - 1) > len) &&
          node_residue(charge[static_cast<size_t>(m - 1)], r, len + 1, e) == res_i)
        ++d;
      if (len > 0 && len > part(lam, r + 1) &&
          node_residue(charge[static_cast<size_t>(m - 1)], r, len, e) == res_i)
        --d;
    }
  }
  return d;
}

int count_below(const Multipartition& p, const Multicharge& charge, int e, const Node& A,
                int res_i) {
  return count_side(p, charge, e, A, res_i, true);
}

int count_above(const Multipartition& p, const Multicharge& charge, int e, const Node& A,
                int res_i) {
  return count_side(p, charge, e, A, res_i, false);
}

bool node_is_removable(const Multipartition& p, const Node& A) {
  if (A.comp < 1 || A.comp > static_cast<int>(p.size())) return false;
  const Partition& lam = p[static_cast<size_t>(A.comp - 1)];
  return A.col >= 1 && A.col == part(lam, A.row) && A.col > part(lam, A.row + 1);
}

bool node_is_addable(const Multipartition& p, const Node& A) {
  if (A.comp < 1 || A.comp > static_cast<int>(p.size())) return false;
  const Partition& lam = p[static_cast<size_t>(A.comp - 1)];
  if (A.row < 1 || A.col != part(lam, A.row) + 1) return false;
  return A.row == 1 || part(lam, A.row) < part(lam, A.row - 1);
}

int node_res(const Multicharge& charge, int e, const Node& A) {
  return node_residue(charge[static_cast<size_t>(A.comp - 1)], A.row, A.col, e);
}

// shared recursion for degree and codegree of a tableau on a full
// multipartition (empty inner); peels entries from the largest down
int full_tableau_degree(const SkewTableau& t, bool below) {
  const SkewShape& s = t.shape();
  Multipartition cur = s.outer;
  int deg = 0;
  for (int k = t.size(); k >= 1; --k) {
    Node n = t.node_of(k);
    int i = node_res(s.charge, s.e, n);
    deg += below ? count_below(cur, s.charge, s.e, n, i)
                 : count_above(cur, s.charge, s.e, n, i);
    if (!node_is_removable(cur, n))
      throw std::invalid_argument("degree needs a standard tableau");
    Partition& rows = cur[static_cast<size_t>(n.comp - 1)];
    rows[static_cast<size_t>(n.row - 1)] -= 1;
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
  }
  return deg;
}

int degree_of_embedding(const SkewTableau& t, bool below) {
  const SkewShape& s = t.shape();
  bool skew = false;
  for (const auto& c : s.inner)
    if (!c.empty()) skew = true;
  if (!skew) return full_tableau_degree(t, below);
  SkewTableau y = embed_Y(t);
  SkewTableau inner_leading = leading_tableau(partition_shape(s.inner, s.charge, s.e));
  return full_tableau_degree(y, below) - full_tableau_degree(inner_leading, below);
}

}  // namespace

int d_below(const Multipartition& p, const Multicharge& charge, int e, const Node& A) {
  if (charge.size() != p.size()) throw std::invalid_argument("charge length mismatch");
  if (!node_is_removable(p, A) && !node_is_addable(p, A))
    throw std::invalid_argument("node " + node_to_string(A) + " is neither removable nor addable");
  return count_below(p, charge, e, A, node_res(charge, e, A));
}

int d_above(const Multipartition& p, const Multicharge& charge, int e, const Node& A) {
  if (charge.size() != p.size()) throw std::invalid_argument("charge length mismatch");
  if (!node_is_removable(p, A) && !node_is_addable(p, A))
    throw std::invalid_argument("node " + node_to_string(A) + " is neither removable nor addable");
  return count_above(p, charge, e, A, node_res(charge, e, A));
}

int degree(const SkewTableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("degree needs a standard tableau");
  return degree_of_embedding(t, true);
}

int codegree(const SkewTableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("codegree needs a standard tableau");
  return degree_of_embedding(t, false);
}

namespace {

struct StandardEnumerator {
  const SkewShape& s;
  const std::vector<Node>& nodes;
  std::vector<int> vals;       // 0 = unfilled, parallel to nodes
  const std::function<void(const SkewTableau&)>& fn;

  bool placeable(size_t idx) const {
    const Node& n = nodes[idx];
    Node left{n.row, n.col - 1, n.comp};
    Node up{n.row - 1, n.col, n.comp};
    if (node_in_skew(s, left) && vals[index_of(left)] == 0) return false;
    if (node_in_skew(s, up) && vals[index_of(up)] == 0) return false;
    return true;
  }
  size_t index_of(const Node& n) const {
    return static_cast<size_t>(std::lower_bound(nodes.begin(), nodes.end(), n) - nodes.begin());
  }
  void run(int entry) {
    if (entry > static_cast<int>(nodes.size())) {
      fn(SkewTableau(s, vals));
      return;
    }
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (vals[i] != 0 || !placeable(i)) continue;
      vals[i] = entry;
      run(entry + 1);
      vals[i] = 0;
    }
  }
};

}  // namespace

void for_each_standard(const SkewShape& s, const std::function<void(const SkewTableau&)>& fn) {
  std::vector<Node> nodes = shape_nodes(s);
  StandardEnumerator en{s, nodes, std::vector<int>(nodes.size(), 0), fn};
  en.run(1);
}

std::vector<SkewTableau> standard_tableaux(const SkewShape& s) {
  std::vector<SkewTableau> out;
  for_each_standard(s, [&](const SkewTableau& t) { out.push_back(t); });
  return out;
}

long long count_standard(const SkewShape& s) {
  long long n = 0;
  detail::scan_standard(s, [&](const detail::ScanView&) { ++n; });
  return n;
}

namespace detail {
namespace {

// same fillings as for_each_standard, but the residue word and the degree are
// carried through the backtracking.  Placing entry k at node n adds the count
// of addable-minus-removable nodes of n's residue strictly below n in the
// diagram "inner plus entries 1..k"; summed over k that is exactly the peeling
// recursion behind degree(), with the inner contribution never added
struct StandardScanner {
  const SkewShape& s;
  std::vector<Node> nodes;
  std::vector<int> res;
  std::vector<int> left, up;  // index of the skew neighbor, -1 when absent
  std::vector<int> values;
  Word word;
  std::vector<std::vector<int>> len;  // row lengths per component, 1-based, padded
  const std::function<void(const ScanView&)>& fn;

  StandardScanner(const SkewShape& shape, const std::function<void(const ScanView&)>& cb)
      : s(shape), nodes(shape_nodes(shape)), fn(cb) {
    size_t d = nodes.size();
    res.resize(d);
    left.assign(d, -1);
    up.assign(d, -1);
    values.assign(d, 0);
    word.assign(d, 0);
    for (size_t i = 0; i < d; ++i) {
      res[i] = residue(s, nodes[i]);
      left[i] = find(Node{nodes[i].row, nodes[i].col - 1, nodes[i].comp});
      up[i] = find(Node{nodes[i].row - 1, nodes[i].col, nodes[i].comp});
    }
    len.resize(s.outer.size());
    for (size_t m = 0; m < s.outer.size(); ++m) {
      len[m].assign(static_cast<size_t>(partition_rows(s.outer[m])) + 3, 0);
      for (int r = 1; r <= partition_rows(s.inner[m]); ++r)
        len[m][static_cast<size_t>(r)] = part(s.inner[m], r);
    }
  }

  int find(const Node& n) const {
    if (!node_in_skew(s, n)) return -1;
    auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
    return static_cast<int>(it - nodes.begin());
  }

  int below_contrib(const Node& A, int res_i) const {
    int d = 0;
    for (int m = A.comp; m <= static_cast<int>(len.size()); ++m) {
      const std::vector<int>& L = len[static_cast<size_t>(m - 1)];
      int ch = s.charge[static_cast<size_t>(m - 1)];
      int hi = static_cast<int>(L.size()) - 2;
      for (int r = (m == A.comp) ? A.row + 1 : 1; r <= hi; ++r) {
        int l = L[static_cast<size_t>(r)];
        if ((r == 1 || L[static_cast<size_t>(r - 1)] > l) &&
            node_residue(ch, r, l + 1, s.e) == res_i)
          ++d;
        if (l > 0 && l > L[static_cast<size_t>(r + 1)] && node_residue(ch, r, l, s.e) == res_i)
          --d;
      }
    }
    return d;
  }

  void run(int k, int deg) {
    if (k > static_cast<int>(nodes.size())) {
      fn(ScanView{nodes, values, word, deg});
      return;
    }
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (values[i] != 0) continue;
      if (left[i] >= 0 && values[static_cast<size_t>(left[i])] == 0) continue;
      if (up[i] >= 0 && values[static_cast<size_t>(up[i])] == 0) continue;
      const Node& n = nodes[i];
      len[static_cast<size_t>(n.comp - 1)][static_cast<size_t>(n.row)] += 1;
      values[i] = k;
      word[static_cast<size_t>(k - 1)] = res[i];
      run(k + 1, deg + below_contrib(n, res[i]));
      values[i] = 0;
      len[static_cast<size_t>(n.comp - 1)][static_cast<size_t>(n.row)] -= 1;
    }
  }
};

}  // namespace

void scan_standard(const SkewShape& s, const std::function<void(const ScanView&)>& fn) {
  StandardScanner sc(s, fn);
  sc.run(1, 0);
}

}  // namespace detail

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<char> seen(img_.size() + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int r) {
  if (r < 1 || r + 1 > n) throw std::invalid_argument("transposition index out of range");
  Permutation w = identity(n);
  std::swap(w.img_[static_cast<size_t>(r - 1)], w.img_[static_cast<size_t>(r)]);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (size_t k = 0; k < img_.size(); ++k) v[static_cast<size_t>(img_[k] - 1)] = static_cast<int>(k) + 1;
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mismatched degrees");
  std::vector<int> v(static_cast<size_t>(a.n()));
  for (int k = 1; k <= a.n(); ++k) v[static_cast<size_t>(k - 1)] = a(b(k));
  return Permutation(std::move(v));
}

int permutation_length(const Permutation& w) {
  int len = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++len;
  return len;
}

std::vector<int> lex_min_reduced_word(const Permutation& w) {
  std::vector<int> word;
  std::vector<int> cur = w.one_line();
  std::vector<int> pos(cur.size() + 1);  // pos[v] = index of value v
  for (size_t k = 0; k < cur.size(); ++k) pos[static_cast<size_t>(cur[k])] = static_cast<int>(k);
  int n = static_cast<int>(cur.size());
  while (true) {
    int r = 0;
    for (int v = 1; v < n; ++v) {
      if (pos[static_cast<size_t>(v)] > pos[static_cast<size_t>(v + 1)]) {
        r = v;
        break;
      }
    }
    if (r == 0) break;
    word.push_back(r);
    std::swap(cur[static_cast<size_t>(pos[static_cast<size_t>(r)])],
              cur[static_cast<size_t>(pos[static_cast<size_t>(r + 1)])]);
    std::swap(pos[static_cast<size_t>(r)], pos[static_cast<size_t>(r + 1)]);
  }
  return word;
}

bool bruhat_leq_permutation(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n()) throw std::invalid_argument("mismatched degrees");
  // prefix-sort criterion: every sorted prefix of u is entrywise at most that of w
  int n = u.n();
  std::vector<int> pu, pw;
  for (int p = 1; p <= n; ++p) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(p)), u(p));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(p)), w(p));
    for (int k = 0; k < p; ++k)
      if (pu[static_cast<size_t>(k)] > pw[static_cast<size_t>(k)]) return false;
  }
  return true;
}

Permutation tableau_permutation(const SkewTableau& t) {
  // the leading tableau numbers nodes in reading order, so the one-line
  // notation of w^t is exactly the value list of t
  return Permutation(t.values());
}

bool bruhat_leq(const SkewTableau& s, const SkewTableau& t) {
  if (s.shape() != t.shape()) throw std::invalid_argument("tableaux on different shapes");
  if (!s.is_row_strict() || !t.is_row_strict())
    throw std::invalid_argument("Bruhat comparison needs row-strict tableaux");
  SkewTableau ys = embed_Y(s), yt = embed_Y(t);
  const SkewShape& full = ys.shape();
  int d = ys.size();
  int levels = full.level();
  std::vector<std::vector<int>> rs(static_cast<size_t>(levels)), rt(static_cast<size_t>(levels));
  for (int m = 0; m < levels; ++m) {
    rs[static_cast<size_t>(m)].assign(full.outer[static_cast<size_t>(m)].size(), 0);
    rt[static_cast<size_t>(m)].assign(full.outer[static_cast<size_t>(m)].size(), 0);
  }
  for (int a = 1; a <= d; ++a) {
    Node ns = ys.node_of(a), nt = yt.node_of(a);
    rs[static_cast<size_t>(ns.comp - 1)][static_cast<size_t>(ns.row - 1)] += 1;
    rt[static_cast<size_t>(nt.comp - 1)][static_cast<size_t>(nt.row - 1)] += 1;
    if (!partial_sums_dominate(rs, rt)) return false;
  }
  return true;
}

bool adjacent_swap_standard(const SkewTableau& t, int r) {
  if (!t.is_standard()) throw std::invalid_argument("expects a standard tableau");
  if (r < 1 || r + 1 > t.size()) throw std::invalid_argument("entry out of range");
  Node x = t.node_of(r), y = t.node_of(r + 1);
  auto northeast_or_later = [](const Node& a, const Node& b) {
    // b strictly northeast of a in one component, or a in a later component
    return (a.comp == b.comp && a.row > b.row && a.col < b.col) || a.comp > b.comp;
  };
  return northeast_or_later(x, y) || northeast_or_later(y, x);
}

int wiring_degree(const Permutation& w, const Word& word, int e) {
  if (w.n() != static_cast<int>(word.size()))
    throw std::invalid_argument("word length must match the permutation degree");
  std::vector<int> rw = lex_min_reduced_word(w);
  Word cur = word;
  int deg = 0;
  for (auto it = rw.rbegin(); it != rw.rend(); ++it) {
    int r = *it;
    deg -= cartan_pairing(cur[static_cast<size_t>(r - 1)], cur[static_cast<size_t>(r)], e);
    std::swap(cur[static_cast<size_t>(r - 1)], cur[static_cast<size_t>(r)]);
  }
  return deg;
}

std::string render_tableau(const SkewTableau& t) {
  const SkewShape& s = t.shape();
  std::ostringstream os;
  size_t width = std::to_string(t.size()).size();
  for (int m = 1; m <= s.level(); ++m) {
    if (m > 1) os << "\n";
    const Partition& lam = s.outer[static_cast<size_t>(m - 1)];
    const Partition& mu = s.inner[static_cast<size_t>(m - 1)];
    if (lam.empty()) {
      os << "(empty)\n";
      continue;
    }
    for (int a = 1; a <= partition_rows(lam); ++a) {
      for (int b = 1; b <= part(lam, a); ++b) {
        if (b > 1) os << " ";
        std::string cell =
            b <= part(mu, a) ? "." : std::to_string(t.at(Node{a, b, m}));
        os << std::string(width > cell.size() ? width - cell.size() : 0, ' ') << cell;
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace specht
