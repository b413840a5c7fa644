#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "specht/root_system.hpp"

namespace specht {

// Nodes are 1-based: row a, column b, component m. Components are listed
// first to last; within a component, rows top to bottom.
struct Node {
  int row = 1;
  int col = 1;
  int comp = 1;

  friend bool operator==(const Node& x, const Node& y) {
    return x.row == y.row && x.col == y.col && x.comp == y.comp;
  }
  friend bool operator!=(const Node& x, const Node& y) { return !(x == y); }
  // reading order: component, then row, then column
  friend bool operator<(const Node& x, const Node& y) {
    if (x.comp != y.comp) return x.comp < y.comp;
    if (x.row != y.row) return x.row < y.row;
    return x.col < y.col;
  }
};

std::string node_to_string(const Node& n);

// weakly decreasing positive entries, trailing zeros dropped
using Partition = std::vector<int>;
using Multipartition = std::vector<Partition>;
using Multicharge = std::vector<int>;

bool is_partition(const Partition& p);
Partition trim_partition(Partition p);          // drops trailing zeros, validates
int partition_size(const Partition& p);
int partition_rows(const Partition& p);
int part(const Partition& p, int row);          // 0 past the last row
bool partition_contains(const Partition& outer, const Partition& inner);
int multipartition_size(const Multipartition& p);

// enumeration support for the verification sweeps, lexicographically sorted
std::vector<Partition> partitions_of(int n);
std::vector<Partition> subpartitions(const Partition& lam);  // includes empty and lam

// A skew diagram: nested multipartitions with a charge residue per component.
struct SkewShape {
  Multipartition outer;
  Multipartition inner;   // same component count as outer
  Multicharge charge;     // residues mod e, one per component
  int e = 2;

  int level() const { return static_cast<int>(outer.size()); }

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.e == b.e && a.charge == b.charge && a.outer == b.outer && a.inner == b.inner;
  }
  friend bool operator!=(const SkewShape& a, const SkewShape& b) { return !(a == b); }
};

// validates nesting, pads inner with empty components, normalizes charges
SkewShape make_shape(Multipartition outer, Multipartition inner, Multicharge charge, int e);
SkewShape partition_shape(Multipartition outer, Multicharge charge, int e);

int shape_size(const SkewShape& s);             // number of skew nodes
std::vector<Node> shape_nodes(const SkewShape& s);  // reading order
bool node_in_outer(const SkewShape& s, const Node& n);
bool node_in_skew(const SkewShape& s, const Node& n);

int residue(const SkewShape& s, const Node& n);  // requires n in the outer diagram
int node_residue(int charge, int row, int col, int e);
RootVector content(const SkewShape& s);

// all addable (removable) nodes of residue i, top to bottom through the
// components in order
std::vector<Node> addable_nodes(const Multipartition& p, const Multicharge& charge, int e, int i);
std::vector<Node> removable_nodes(const Multipartition& p, const Multicharge& charge, int e, int i);

// dominance on outer multipartitions; requires equal inner, charge, e, size
bool dominates(const SkewShape& s, const SkewShape& t);
// shared partial-sum comparison, also used for row-count compositions of
// tableau prefixes; requires equal totals and component counts
bool partial_sums_dominate(const std::vector<std::vector<int>>& x,
                           const std::vector<std::vector<int>>& y);

bool is_minimal_skew(const SkewShape& s);
bool is_skew_hook(const SkewShape& s);          // level 1 only

// two-component machinery
bool is_joinable(const SkewShape& s);           // level 2 only
SkewShape join_above(const SkewShape& s);       // components stacked vertically
SkewShape join_right(const SkewShape& s);       // component 1 shifted right
Node tau_above(const SkewShape& s, const Node& n);
Node tau_right(const SkewShape& s, const Node& n);

SkewShape component_shape(const SkewShape& s, int comp);
SkewShape assemble_pair(const SkewShape& first, const SkewShape& second);

// canonical skew hooks: hook_eta(e,i) has content delta with an i-node in the
// bottom row; shape_plus/shape_minus have contents m*delta + a_i and
// m*delta - a_i
SkewShape hook_eta(int e, int i);
SkewShape shape_plus(int m, int i, int e);
SkewShape shape_minus(int m, int i, int e);

// spelling: "outer=3,2,2|2,2;inner=;charge=2,1;e=3"
std::string shape_to_string(const SkewShape& s);
std::optional<SkewShape> parse_shape(std::string_view text, std::string* error = nullptr);

// ASCII diagram with residues, used by the CLI
std::string render_shape(const SkewShape& s);

}  // namespace specht
