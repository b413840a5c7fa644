#include "specht/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specht {

std::string node_to_string(const Node& n) {
  std::ostringstream os;
  os << "(" << n.row << "," << n.col << "," << n.comp << ")";
  return os.str();
}

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition trim_partition(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (!is_partition(p)) throw std::invalid_argument("not weakly decreasing positive parts");
  return p;
}

int partition_size(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

int partition_rows(const Partition& p) { return static_cast<int>(p.size()); }

int part(const Partition& p, int row) {
  if (row < 1 || row > static_cast<int>(p.size())) return 0;
  return p[static_cast<size_t>(row - 1)];
}

bool partition_contains(const Partition& outer, const Partition& inner) {
  for (size_t i = 0; i < inner.size(); ++i) {
    int o = i < outer.size() ? outer[i] : 0;
    if (inner[i] > o) return false;
  }
  return true;
}

int multipartition_size(const Multipartition& p) {
  int s = 0;
  for (const auto& c : p) s += partition_size(c);
  return s;
}

namespace {

void collect_partitions(int left, int cap, Partition& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = std::min(left, cap); first >= 1; --first) {
    cur.push_back(first);
    collect_partitions(left - first, first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  Partition cur;
  collect_partitions(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> subpartitions(const Partition& lam) {
  if (!is_partition(lam)) throw std::invalid_argument("subpartitions: not a partition");
  std::vector<Partition> out;
  Partition cur;
  // rows chosen top down; each row at most the previous and at most lam's row
  std::function<void(int)> rec = [&](int row) {
    out.push_back(cur);
    if (row > partition_rows(lam)) return;
    int cap = part(lam, row);
    if (row > 1) cap = std::min(cap, cur[static_cast<size_t>(row - 2)]);
    for (int v = 1; v <= cap; ++v) {
      cur.push_back(v);
      rec(row + 1);
      cur.pop_back();
    }
  };
  rec(1);
  for (auto& p : out) p = trim_partition(std::move(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SkewShape make_shape(Multipartition outer, Multipartition inner, Multicharge charge, int e) {
  check_e(e);
  if (outer.empty()) throw std::invalid_argument("shape needs at least one component");
  if (charge.size() != outer.size())
    throw std::invalid_argument("charge length must match component count");
  if (inner.size() > outer.size())
    throw std::invalid_argument("inner diagram has more components than outer");
  inner.resize(outer.size());
  for (auto& c : outer) c = trim_partition(std::move(c));
  for (auto& c : inner) c = trim_partition(std::move(c));
  for (size_t m = 0; m < outer.size(); ++m)
    if (!partition_contains(outer[m], inner[m]))
      throw std::invalid_argument("inner diagram not contained in outer diagram");
  for (auto& k : charge) k = normalize_residue(k, e);
  return SkewShape{std::move(outer), std::move(inner), std::move(charge), e};
}

SkewShape partition_shape(Multipartition outer, Multicharge charge, int e) {
  return make_shape(std::move(outer), Multipartition{}, std::move(charge), e);
}

int shape_size(const SkewShape& s) {
  return multipartition_size(s.outer) - multipartition_size(s.inner);
}

std::vector<Node> shape_nodes(const SkewShape& s) {
  std::vector<Node> out;
  for (int m = 1; m <= s.level(); ++m) {
    const Partition& lam = s.outer[static_cast<size_t>(m - 1)];
    const Partition& mu = s.inner[static_cast<size_t>(m - 1)];
    for (int a = 1; a <= partition_rows(lam); ++a)
      for (int b = part(mu, a) + 1; b <= part(lam, a); ++b)
        out.push_back(Node{a, b, m});
  }
  return out;
}

bool node_in_outer(const SkewShape& s, const Node& n) {
  if (n.comp < 1 || n.comp > s.level() || n.row < 1 || n.col < 1) return false;
  return n.col <= part(s.outer[static_cast<size_t>(n.comp - 1)], n.row);
}

bool node_in_skew(const SkewShape& s, const Node& n) {
  return node_in_outer(s, n) &&
         n.col > part(s.inner[static_cast<size_t>(n.comp - 1)], n.row);
}

int node_residue(int charge, int row, int col, int e) {
  return normalize_residue(static_cast<long long>(charge) + col - row, e);
}

int residue(const SkewShape& s, const Node& n) {
  if (!node_in_outer(s, n))
    throw std::invalid_argument("node " + node_to_string(n) + " outside the diagram");
  return node_residue(s.charge[static_cast<size_t>(n.comp - 1)], n.row, n.col, s.e);
}

RootVector content(const SkewShape& s) {
  RootVector v(s.e, 0);
  for (const Node& n : shape_nodes(s)) v.at(residue(s, n)) += 1;
  return v;
}

std::vector<Node> addable_nodes(const Multipartition& p, const Multicharge& charge, int e,
                                int i) {
  check_e(e);
  if (charge.size() != p.size()) throw std::invalid_argument("charge length mismatch");
  int want = normalize_residue(i, e);
  std::vector<Node> out;
  for (int m = 1; m <= static_cast<int>(p.size()); ++m) {
    const Partition& lam = p[static_cast<size_t>(m - 1)];
    int rows = partition_rows(lam);
    for (int a = 1; a <= rows + 1; ++a) {
      int len = part(lam, a);
      if (a > 1 && len >= part(lam, a - 1)) continue;  // cannot extend this row
      Node cand{a, len + 1, m};
      if (node_residue(charge[static_cast<size_t>(m - 1)], cand.row, cand.col, e) == want)
        out.push_back(cand);
    }
  }
  return out;
}

std::vector<Node> removable_nodes(const Multipartition& p, const Multicharge& charge, int e,
                                  int i) {
  check_e(e);
  if (charge.size() != p.size()) throw std::invalid_argument("charge length mismatch");
  int want = normalize_residue(i, e);
  std::vector<Node> out;
  for (int m = 1; m <= static_cast<int>(p.size()); ++m) {
    const Partition& lam = p[static_cast<size_t>(m - 1)];
    for (int a = 1; a <= partition_rows(lam); ++a) {
      int len = part(lam, a);
      if (len == 0 || len == part(lam, a + 1)) continue;
      Node cand{a, len, m};
      if (node_residue(charge[static_cast<size_t>(m - 1)], cand.row, cand.col, e) == want)
        out.push_back(cand);
    }
  }
  return out;
}

bool partial_sums_dominate(const std::vector<std::vector<int>>& x,
                           const std::vector<std::vector<int>>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("component count mismatch");
  long long run_x = 0, run_y = 0;
  for (size_t m = 0; m < x.size(); ++m) {
    size_t rows = std::max(x[m].size(), y[m].size());
    long long px = run_x, py = run_y;
    for (size_t a = 0; a < rows; ++a) {
      px += a < x[m].size() ? x[m][a] : 0;
      py += a < y[m].size() ? y[m][a] : 0;
      if (px < py) return false;
    }
    run_x = px;
    run_y = py;
  }
  return run_x == run_y;
}

bool dominates(const SkewShape& s, const SkewShape& t) {
  if (s.e != t.e || s.charge != t.charge || s.inner != t.inner)
    throw std::invalid_argument("dominance needs matching inner diagram, charge and e");
  if (shape_size(s) != shape_size(t))
    throw std::invalid_argument("dominance needs equal size");
  std::vector<std::vector<int>> x, y;
  for (const auto& c : s.outer) x.push_back(c);
  for (const auto& c : t.outer) y.push_back(c);
  return partial_sums_dominate(x, y);
}

bool is_minimal_skew(const SkewShape& s) {
  for (int m = 0; m < s.level(); ++m) {
    const Partition& lam = s.outer[static_cast<size_t>(m)];
    const Partition& mu = s.inner[static_cast<size_t>(m)];
    if (lam.empty()) return false;
    if (part(mu, 1) >= part(lam, 1)) return false;
    if (part(mu, partition_rows(lam)) != 0) return false;
  }
  return true;
}

bool is_skew_hook(const SkewShape& s) {
  if (s.level() != 1) throw std::invalid_argument("skew hooks are level-1 shapes");
  const Partition& lam = s.outer[0];
  const Partition& mu = s.inner[0];
  struct Seg {
    int row, lo, hi;
  };
  std::vector<Seg> segs;
  std::vector<int> diags;
  for (int a = 1; a <= partition_rows(lam); ++a) {
    int lo = part(mu, a) + 1, hi = part(lam, a);
    if (lo > hi) continue;
    segs.push_back(Seg{a, lo, hi});
    for (int b = lo; b <= hi; ++b) diags.push_back(b - a);
  }
  if (segs.empty()) return false;
  std::sort(diags.begin(), diags.end());
  if (std::adjacent_find(diags.begin(), diags.end()) != diags.end()) return false;
  for (size_t i = 1; i < segs.size(); ++i) {
    if (segs[i].row != segs[i - 1].row + 1) return false;       // gap row
    if (segs[i].hi < segs[i - 1].lo || segs[i].lo > segs[i - 1].hi) return false;
  }
  return true;
}

bool is_joinable(const SkewShape& s) {
  if (s.level() != 2) throw std::invalid_argument("joinability is defined for two components");
  if (!is_minimal_skew(s)) return false;
  int x1 = partition_rows(s.outer[0]);
  int y2 = part(s.outer[1], 1);
  int r1 = residue(s, Node{x1, 1, 1});
  int r2 = residue(s, Node{1, y2, 2});
  return r1 == normalize_residue(r2 + 1, s.e);
}

namespace {

void require_joinable(const SkewShape& s) {
  if (!is_joinable(s)) throw std::invalid_argument("shape is not joinable");
}

}  // namespace

SkewShape join_above(const SkewShape& s) {
  require_joinable(s);
  int x1 = partition_rows(s.outer[0]);
  int y2 = part(s.outer[1], 1);
  Partition outer, inner;
  for (int a = 1; a <= x1; ++a) outer.push_back(part(s.outer[0], a) + y2 - 1);
  for (int a = 1; a <= partition_rows(s.outer[1]); ++a) outer.push_back(part(s.outer[1], a));
  for (int a = 1; a <= x1; ++a) inner.push_back(part(s.inner[0], a) + y2 - 1);
  for (int a = 1; a <= partition_rows(s.inner[1]); ++a) inner.push_back(part(s.inner[1], a));
  int k = normalize_residue(s.charge[1] + x1, s.e);
  return make_shape({trim_partition(outer)}, {trim_partition(inner)}, {k}, s.e);
}

SkewShape join_right(const SkewShape& s) {
  require_joinable(s);
  int x1 = partition_rows(s.outer[0]);
  int y2 = part(s.outer[1], 1);
  Partition outer, inner;
  for (int a = 1; a <= x1; ++a) outer.push_back(part(s.outer[0], a) + y2);
  for (int a = 2; a <= partition_rows(s.outer[1]); ++a) outer.push_back(part(s.outer[1], a));
  for (int a = 1; a <= x1 - 1; ++a) inner.push_back(part(s.inner[0], a) + y2);
  inner.push_back(part(s.inner[1], 1));
  for (int a = 2; a <= partition_rows(s.inner[1]); ++a) inner.push_back(part(s.inner[1], a));
  int k = normalize_residue(s.charge[1] + x1 - 1, s.e);
  return make_shape({trim_partition(outer)}, {trim_partition(inner)}, {k}, s.e);
}

Node tau_above(const SkewShape& s, const Node& n) {
  require_joinable(s);
  int x1 = partition_rows(s.outer[0]);
  int y2 = part(s.outer[1], 1);
  if (n.comp == 1) return Node{n.row, n.col + y2 - 1, 1};
  return Node{n.row + x1, n.col, 1};
}

Node tau_right(const SkewShape& s, const Node& n) {
  require_joinable(s);
  int x1 = partition_rows(s.outer[0]);
  int y2 = part(s.outer[1], 1);
  if (n.comp == 1) return Node{n.row, n.col + y2, 1};
  return Node{n.row + x1 - 1, n.col, 1};
}

SkewShape component_shape(const SkewShape& s, int comp) {
  if (comp < 1 || comp > s.level()) throw std::invalid_argument("component out of range");
  return make_shape({s.outer[static_cast<size_t>(comp - 1)]},
                    {s.inner[static_cast<size_t>(comp - 1)]},
                    {s.charge[static_cast<size_t>(comp - 1)]}, s.e);
}

SkewShape assemble_pair(const SkewShape& first, const SkewShape& second) {
  if (first.level() != 1 || second.level() != 1)
    throw std::invalid_argument("assemble_pair expects level-1 shapes");
  if (first.e != second.e) throw std::invalid_argument("mismatched e");
  return make_shape({first.outer[0], second.outer[0]}, {first.inner[0], second.inner[0]},
                    {first.charge[0], second.charge[0]}, first.e);
}

SkewShape hook_eta(int e, int i) {
  check_e(e);
  if (i < 1 || i > e - 1) throw std::invalid_argument("hook index out of range");
  Partition lam{i};
  for (int a = 0; a < e - i; ++a) lam.push_back(1);
  return partition_shape({lam}, {0}, e);
}

SkewShape shape_plus(int m, int i, int e) {
  check_e(e);
  if (m < 0 || i < 1 || i > e - 1) throw std::invalid_argument("bad parameters");
  Partition lam, mu;
  lam.push_back(m * i + 1);
  for (int t = m - 1; t >= 1; --t)
    for (int r = 0; r < e - i; ++r) {
      lam.push_back(t * i + 1);
      mu.push_back(t * i);
    }
  if (m >= 1)
    for (int r = 0; r < e - i; ++r) lam.push_back(1);
  int k = normalize_residue(static_cast<long long>(1 - m) * i, e);
  return make_shape({trim_partition(lam)}, {trim_partition(mu)}, {k}, e);
}

SkewShape shape_minus(int m, int i, int e) {
  check_e(e);
  if (m < 1 || i < 1 || i > e - 1) throw std::invalid_argument("bad parameters");
  Partition lam, mu;
  lam.push_back(m * i);
  for (int t = m - 1; t >= 1; --t)
    for (int r = 0; r < e - i; ++r) {
      lam.push_back(t * i + 1);
      mu.push_back(t * i);
    }
  for (int r = 0; r < e - i - 1; ++r) lam.push_back(1);
  int k = normalize_residue(static_cast<long long>(1 - m) * i, e);
  return make_shape({trim_partition(lam)}, {trim_partition(mu)}, {k}, e);
}

std::string shape_to_string(const SkewShape& s) {
  auto render_mp = [](const Multipartition& p) {
    std::string out;
    for (size_t m = 0; m < p.size(); ++m) {
      if (m) out += "|";
      for (size_t a = 0; a < p[m].size(); ++a) {
        if (a) out += ",";
        out += std::to_string(p[m][a]);
      }
    }
    return out;
  };
  std::string out = "outer=" + render_mp(s.outer);
  std::string in = render_mp(s.inner);
  bool all_empty = true;
  for (const auto& c : s.inner)
    if (!c.empty()) all_empty = false;
  out += ";inner=" + (all_empty ? std::string() : in);
  out += ";charge=";
  for (size_t m = 0; m < s.charge.size(); ++m) {
    if (m) out += ",";
    out += std::to_string(s.charge[m]);
  }
  out += ";e=" + std::to_string(s.e);
  return out;
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t p = text.find(sep, start);
    if (p == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      return out;
    }
    out.emplace_back(text.substr(start, p - start));
    start = p + 1;
  }
}

bool parse_int_list(const std::string& text, std::vector<int>* out) {
  out->clear();
  if (text.empty()) return true;
  for (const std::string& tok : split(text, ',')) {
    if (tok.empty()) return false;
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      return false;
    }
    if (used != tok.size() || v < 0) return false;
    out->push_back(v);
  }
  return true;
}

}  // namespace

std::optional<SkewShape> parse_shape(std::string_view text, std::string* error) {
  auto fail = [&](const std::string& msg) -> std::optional<SkewShape> {
    if (error) *error = msg;
    return std::nullopt;
  };
  Multipartition outer, inner;
  Multicharge charge;
  int e = 0;
  bool saw_outer = false, saw_charge = false, saw_e = false;
  for (const std::string& field : split(text, ';')) {
    size_t eq = field.find('=');
    if (eq == std::string::npos) return fail("expected key=value near '" + field + "'");
    std::string key = field.substr(0, eq);
    std::string val = field.substr(eq + 1);
    if (key == "outer" || key == "inner") {
      Multipartition mp;
      if (!val.empty()) {
        for (const std::string& comp : split(val, '|')) {
          std::vector<int> rows;
          if (!parse_int_list(comp, &rows)) return fail("bad partition '" + comp + "'");
          mp.push_back(std::move(rows));
        }
      }
      if (key == "outer") {
        outer = std::move(mp);
        saw_outer = true;
      } else {
        inner = std::move(mp);
      }
    } else if (key == "charge") {
      if (!parse_int_list(val, &charge) || charge.empty())
        return fail("bad charge '" + val + "'");
      saw_charge = true;
    } else if (key == "e") {
      std::vector<int> v;
      if (!parse_int_list(val, &v) || v.size() != 1 || v[0] < 2)
        return fail("bad e '" + val + "'");
      e = v[0];
      saw_e = true;
    } else {
      return fail("unknown field '" + key + "'");
    }
  }
  if (!saw_outer || !saw_charge || !saw_e)
    return fail("shape needs outer=, charge= and e= fields");
  try {
    return make_shape(std::move(outer), std::move(inner), std::move(charge), e);
  } catch (const std::exception& ex) {
    return fail(ex.what());
  }
}

std::string render_shape(const SkewShape& s) {
  std::ostringstream os;
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
        if (b <= part(mu, a))
          os << ".";
        else
          os << residue(s, Node{a, b, m});
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace specht
