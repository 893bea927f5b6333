#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace specfock {

/// A cell of a Young diagram, 1-based (row, col), English convention.
struct Node {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Node&, const Node&) = default;
  std::string to_string() const;
  static Node parse(std::string_view text);
};

/// An integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Row length, 1-based; zero beyond the last row.
  int row(int r) const { return r >= 1 && r <= length() ? parts_[r - 1] : 0; }
  bool contains(const Node& n) const { return n.row >= 1 && n.col >= 1 && n.col <= row(n.row); }

  Partition conjugate() const;
  bool is_addable(const Node& n) const;
  bool is_removable(const Node& n) const;
  /// Addable/removable cells ordered by increasing row.
  std::vector<Node> addable_nodes() const;
  std::vector<Node> removable_nodes() const;
  Partition add_node(int row) const;
  Partition remove_node(int row) const;

  /// Lexicographic on parts; refines dominance for partitions of equal size.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition&, const Partition&) = default;

  /// "7,7,6,5,4,2"; the empty partition is "".
  std::string to_string() const;
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Every partition of n, most dominant (lexicographically largest) first.
std::vector<Partition> partitions_of(int n);

int hook_length(const Partition& lambda, const Node& node);
/// Content col - row.
inline int content(const Node& n) { return n.col - n.row; }
/// (col - row) mod l, in 0..l-1.
int residue(const Node& n, int l);

struct NodeLists {
  std::vector<Node> addable;
  std::vector<Node> removable;
};
NodeLists node_lists(const Partition& lambda, int i, int l);

struct NCounts {
  int right = 0;    // indent minus removable i-nodes in strictly smaller rows
  int left = 0;     // the same for strictly larger rows
  int residue = 0;  // residue of the differing node
  Node node;        // the node lambda \ mu
};
/// mu must be lambda with one node removed.
NCounts n_counts(const Partition& lambda, const Partition& mu, int l);

struct CoreWeight {
  Partition core;
  int weight = 0;
};
/// l-core and l-weight via beta-numbers on an abacus with `beads` beads
/// (0 picks the number of parts rounded up to a multiple of l).
CoreWeight core_and_weight(const Partition& lambda, int l, int beads = 0);

bool is_l_regular(const Partition& lambda, int l);

/// Dominance partial order: a dominates b (a >= b) for |a| = |b|.
bool dominates(const Partition& a, const Partition& b);
/// Total order refining dominance; throws if sizes differ.
std::strong_ordering dominance_refining_order(const Partition& a, const Partition& b);

/// Erdmann containment of base-p digits: a contains b.
bool contains(long long a, long long b, int p);
std::vector<int> padic_digits(long long a, int p);
bool is_prime(int p);

/// A filling of a Young diagram with 1..n, each exactly once.
class Tableau {
 public:
  Tableau() = default;
  /// Throws unless rows form a partition shape filled by exactly 1..n.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  int at(const Node& n) const { return rows_[n.row - 1][n.col - 1]; }
  Node position(int entry) const { return positions_[entry - 1]; }

  bool is_row_standard() const;
  bool is_standard() const;
  Tableau conjugate() const;
  /// Entries 1..m only (m <= n); the result is a tableau when this one is standard.
  Tableau restricted(int m) const;

  /// t^lambda: 1..n along the rows.
  static Tableau row_reading(const Partition& shape);
  /// t_lambda: 1..n down the columns.
  static Tableau column_reading(const Partition& shape);

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }
  std::string to_string() const;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Node> positions_;
};

std::vector<Tableau> standard_tableaux(const Partition& shape);
std::vector<Tableau> row_standard_tableaux(const Partition& shape);
/// Number of standard tableaux by the hook length formula.
long long count_standard_tableaux(const Partition& shape);

}  // namespace specfock
