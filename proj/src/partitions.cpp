#include "specfock/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specfock {

namespace {

int parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("expected an integer");
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("expected an integer: " + std::string(s));
    v = v * 10 + (c - '0');
    if (v > 1000000) throw std::invalid_argument("integer out of range");
  }
  return v;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

std::string Node::to_string() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

Node Node::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw std::invalid_argument("malformed node: " + std::string(text));
  auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("malformed node: " + std::string(text));
  Node n{parse_int(std::string_view(s).substr(1, comma - 1)),
         parse_int(std::string_view(s).substr(comma + 1, s.size() - comma - 2))};
  if (n.row < 1 || n.col < 1) throw std::invalid_argument("node coordinates must be >= 1");
  return n;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::is_addable(const Node& n) const {
  if (n.row < 1 || n.col < 1) return false;
  if (row(n.row) != n.col - 1) return false;
  return n.row == 1 || row(n.row - 1) >= n.col;
}

bool Partition::is_removable(const Node& n) const {
  return n.row >= 1 && n.col >= 1 && row(n.row) == n.col && row(n.row + 1) < n.col;
}

std::vector<Node> Partition::addable_nodes() const {
  std::vector<Node> out;
  for (int r = 1; r <= length() + 1; ++r) {
    Node n{r, row(r) + 1};
    if (is_addable(n)) out.push_back(n);
  }
  return out;
}

std::vector<Node> Partition::removable_nodes() const {
  std::vector<Node> out;
  for (int r = 1; r <= length(); ++r) {
    Node n{r, row(r)};
    if (is_removable(n)) out.push_back(n);
  }
  return out;
}

Partition Partition::add_node(int r) const {
  if (!is_addable({r, row(r) + 1})) throw std::invalid_argument("row " + std::to_string(r) + " has no addable node");
  std::vector<int> p = parts_;
  if (r == length() + 1) p.push_back(1);
  else ++p[r - 1];
  return Partition(std::move(p));
}

Partition Partition::remove_node(int r) const {
  if (!is_removable({r, row(r)})) throw std::invalid_argument("row " + std::to_string(r) + " has no removable node");
  std::vector<int> p = parts_;
  if (--p[r - 1] == 0) p.pop_back();
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (s.empty()) return Partition();
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    parts.push_back(parse_int(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

int hook_length(const Partition& lambda, const Node& node) {
  if (!lambda.contains(node)) throw std::invalid_argument("node " + node.to_string() + " is not in the diagram");
  int arm = lambda.row(node.row) - node.col;
  int leg = 0;
  while (lambda.row(node.row + leg + 1) >= node.col) ++leg;
  return arm + leg + 1;
}

int residue(const Node& n, int l) {
  if (l < 1) throw std::invalid_argument("residue: l must be positive");
  int r = (n.col - n.row) % l;
  return r < 0 ? r + l : r;
}

NodeLists node_lists(const Partition& lambda, int i, int l) {
  if (i < 0 || i >= l) throw std::invalid_argument("residue out of range");
  NodeLists out;
  for (const Node& n : lambda.addable_nodes())
    if (residue(n, l) == i) out.addable.push_back(n);
  for (const Node& n : lambda.removable_nodes())
    if (residue(n, l) == i) out.removable.push_back(n);
  return out;
}

NCounts n_counts(const Partition& lambda, const Partition& mu, int l) {
  if (lambda.size() != mu.size() + 1) throw std::invalid_argument("n_counts: shapes must differ by a single node");
  NCounts out;
  bool found = false;
  for (int r = 1; r <= lambda.length(); ++r) {
    int d = lambda.row(r) - mu.row(r);
    if (d == 1 && !found) {
      found = true;
      out.node = {r, lambda.row(r)};
    } else if (d != 0) {
      throw std::invalid_argument("n_counts: shapes must differ by a single node");
    }
  }
  if (!found || mu.length() > lambda.length()) throw std::invalid_argument("n_counts: shapes must differ by a single node");
  out.residue = residue(out.node, l);
  // i-nodes adjacent to the differing node have residue i +- 1, so counting
  // on lambda or on mu gives the same numbers.
  NodeLists lists = node_lists(lambda, out.residue, l);
  for (const Node& n : lists.addable) {
    if (n.row < out.node.row) ++out.right;
    else if (n.row > out.node.row) ++out.left;
  }
  for (const Node& n : lists.removable) {
    if (n.row < out.node.row) --out.right;
    else if (n.row > out.node.row) --out.left;
  }
  return out;
}

CoreWeight core_and_weight(const Partition& lambda, int l, int beads) {
  if (l < 2) throw std::invalid_argument("core_and_weight: l must be >= 2");
  if (beads == 0) beads = ((lambda.length() + l - 1) / l) * l;
  if (beads < lambda.length()) throw std::invalid_argument("core_and_weight: too few beads");
  // beta_k = lambda_k + beads - k on runners mod l.
  std::vector<int> runner_count(l, 0);
  for (int k = 1; k <= beads; ++k) ++runner_count[(lambda.row(k) + beads - k) % l];
  // Slide every bead as far up its runner as possible.
  std::vector<int> betas;
  for (int r = 0; r < l; ++r)
    for (int j = 0; j < runner_count[r]; ++j) betas.push_back(r + j * l);
  std::sort(betas.rbegin(), betas.rend());
  std::vector<int> core;
  for (int k = 1; k <= beads; ++k) {
    int part = betas[k - 1] - (beads - k);
    if (part > 0) core.push_back(part);
  }
  CoreWeight out{Partition(core), 0};
  out.weight = (lambda.size() - out.core.size()) / l;
  return out;
}

bool is_l_regular(const Partition& lambda, int l) {
  if (l < 2) throw std::invalid_argument("is_l_regular: l must be >= 2");
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i + l - 1 < p.size(); ++i)
    if (p[i] == p[i + l - 1]) return false;
  return true;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominance needs equal sizes");
  int sa = 0, sb = 0;
  for (int r = 1; r <= std::max(a.length(), b.length()); ++r) {
    sa += a.row(r);
    sb += b.row(r);
    if (sa < sb) return false;
  }
  return true;
}

std::strong_ordering dominance_refining_order(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominance_refining_order needs equal sizes");
  return a <=> b;
}

std::vector<int> padic_digits(long long a, int p) {
  if (a < 0) throw std::invalid_argument("padic_digits: negative");
  std::vector<int> d;
  while (a > 0) {
    d.push_back(static_cast<int>(a % p));
    a /= p;
  }
  return d;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool contains(long long a, long long b, int p) {
  if (!is_prime(p)) throw std::invalid_argument("contains: p must be prime");
  if (a < 0 || b < 0) throw std::invalid_argument("contains: arguments must be non-negative");
  if (b == 0) return true;
  auto da = padic_digits(a, p), db = padic_digits(b, p);
  // Top index of b strictly below the top index of a.
  if (db.size() >= da.size()) return false;
  for (std::size_t i = 0; i < db.size(); ++i)
    if (db[i] != 0 && db[i] != da[i]) return false;
  return true;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  shape_ = Partition(parts);
  const int n = shape_.size();
  positions_.assign(n, Node{0, 0});
  for (int r = 0; r < shape_.length(); ++r) {
    for (int c = 0; c < shape_.row(r + 1); ++c) {
      int v = rows_[r][c];
      if (v < 1 || v > n || positions_[v - 1].row != 0) throw std::invalid_argument("tableau entries must be exactly 1..n");
      positions_[v - 1] = {r + 1, c + 1};
    }
  }
}

bool Tableau::is_row_standard() const {
  for (const auto& r : rows_)
    if (!std::is_sorted(r.begin(), r.end())) return false;
  return true;
}

bool Tableau::is_standard() const {
  if (!is_row_standard()) return false;
  for (int r = 1; r < shape_.length(); ++r)
    for (int c = 0; c < shape_.row(r + 1); ++c)
      if (rows_[r - 1][c] > rows_[r][c]) return false;
  return true;
}

Tableau Tableau::conjugate() const {
  Partition cs = shape_.conjugate();
  std::vector<std::vector<int>> cr(cs.length());
  for (int r = 0; r < cs.length(); ++r)
    for (int c = 0; c < cs.row(r + 1); ++c) cr[r].push_back(rows_[c][r]);
  return Tableau(std::move(cr));
}

Tableau Tableau::restricted(int m) const {
  std::vector<std::vector<int>> rr;
  for (const auto& r : rows_) {
    std::vector<int> row;
    for (int v : r)
      if (v <= m) row.push_back(v);
    if (!row.empty()) rr.push_back(std::move(row));
  }
  return Tableau(std::move(rr));
}

Tableau Tableau::row_reading(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int k = 1;
  for (int p : shape.parts()) {
    std::vector<int> r(p);
    for (int& v : r) v = k++;
    rows.push_back(std::move(r));
  }
  return Tableau(std::move(rows));
}

Tableau Tableau::column_reading(const Partition& shape) {
  return row_reading(shape.conjugate()).conjugate();
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) os << '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) os << ' ';
      os << rows_[r][c];
    }
  }
  os << ']';
  return os.str();
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  const int n = shape.size();
  std::vector<std::vector<int>> rows(shape.length());
  // Place n, n-1, ... into removable corners of the shrinking shape.
  std::function<void(const Partition&, int)> rec = [&](const Partition& cur, int m) {
    if (m == 0) {
      std::vector<std::vector<int>> filled = rows;
      for (auto& r : filled) std::reverse(r.begin(), r.end());
      out.emplace_back(std::move(filled));
      return;
    }
    for (const Node& corner : cur.removable_nodes()) {
      rows[corner.row - 1].push_back(m);
      rec(cur.remove_node(corner.row), m - 1);
      rows[corner.row - 1].pop_back();
    }
  };
  rec(shape, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> row_standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  const int n = shape.size();
  std::vector<int> row_of(n, 0);  // entry -> row index
  std::vector<int> room(shape.parts());
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      std::vector<std::vector<int>> rows(shape.length());
      for (int k = 0; k < n; ++k) rows[row_of[k]].push_back(k + 1);
      out.emplace_back(std::move(rows));
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      if (room[r] == 0) continue;
      --room[r];
      row_of[v] = r;
      rec(v + 1);
      ++room[r];
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

long long count_standard_tableaux(const Partition& shape) {
  // n! / prod hooks, accumulated with exact cancellation.
  long long num = 1;
  std::vector<int> hooks;
  for (int r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape.row(r); ++c) hooks.push_back(hook_length(shape, {r, c}));
  for (int k = 2; k <= shape.size(); ++k) num *= k;
  for (int h : hooks) num /= h;
  return num;
}

}  // namespace specfock
