#include "specfock/hecke.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "specfock/branching.hpp"

namespace specfock {

namespace {

std::size_t lehmer_rank(const Perm& w) {
  const int n = static_cast<int>(w.size());
  std::size_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += w[j] < w[i];
    rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
  }
  return rank;
}

std::vector<Rational> to_vector(const HeckeElement& e) { return e.coefficients(); }

}  // namespace

namespace detail {

// Incremental row reduction that remembers how each pivot row was built from the inputs.
class Eliminator {
 public:
  Eliminator(std::size_t dim, bool track) : dim_(dim), track_(track) {}

  bool insert(std::vector<Rational> v) {
    std::vector<Rational> combo;
    if (track_) {
      combo.assign(inserted_ + 1, 0);
      combo[inserted_] = 1;
    }
    ++inserted_;
    reduce(v, combo);
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) return false;
    std::size_t pivot = static_cast<std::size_t>(it - v.begin());
    Rational inv = 1 / v[pivot];
    for (auto& x : v) x *= inv;
    for (auto& x : combo) x *= inv;
    rows_.push_back({pivot, std::move(v), std::move(combo)});
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  // Coordinates of target over the inserted vectors; nullopt if outside the span.
  std::optional<std::vector<Rational>> solve(std::vector<Rational> target) const {
    std::vector<Rational> combo(inserted_, 0);
    for (const auto& row : rows_) {
      if (target[row.pivot] == 0) continue;
      Rational f = target[row.pivot];
      for (std::size_t j = 0; j < dim_; ++j)
        if (row.v[j] != 0) target[j] -= f * row.v[j];
      for (std::size_t j = 0; j < row.combo.size(); ++j)
        if (row.combo[j] != 0) combo[j] += f * row.combo[j];
    }
    for (const auto& x : target)
      if (x != 0) return std::nullopt;
    return combo;
  }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Rational> v;
    std::vector<Rational> combo;
  };

  void reduce(std::vector<Rational>& v, std::vector<Rational>& combo) const {
    for (const auto& row : rows_) {
      if (v[row.pivot] == 0) continue;
      Rational f = v[row.pivot];
      for (std::size_t j = 0; j < dim_; ++j)
        if (row.v[j] != 0) v[j] -= f * row.v[j];
      if (track_)
        for (std::size_t j = 0; j < row.combo.size(); ++j)
          if (row.combo[j] != 0) combo[j] -= f * row.combo[j];
    }
  }

  std::size_t dim_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
};

}  // namespace detail

using detail::Eliminator;

namespace {

Tableau attach(const Tableau& t, int row, int entry) {
  auto rows = t.rows();
  if (row > static_cast<int>(rows.size())) rows.emplace_back();
  rows[row - 1].push_back(entry);
  return Tableau(std::move(rows));
}

Tableau swap_entries(const Tableau& t, int a, int b) {
  auto rows = t.rows();
  for (auto& r : rows)
    for (auto& x : r) {
      if (x == a)
        x = b;
      else if (x == b)
        x = a;
    }
  return Tableau(std::move(rows));
}

}  // namespace

HeckeContext::HeckeContext(int n, Rational q) : n_(n), q_(std::move(q)) {
  if (n < 0) throw std::invalid_argument("rank must be >= 0");
  if (n > 8) throw std::invalid_argument("rank above 8 is not supported");
  if (q_ == 0) throw std::invalid_argument("q must be nonzero");
  Perm w(n);
  std::iota(w.begin(), w.end(), 0);
  do perms_.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  const std::size_t N = perms_.size();
  const int gens = n > 1 ? n - 1 : 1;
  lengths_.resize(N);
  inverse_.resize(N);
  right_simple_.assign(N * gens, 0);
  for (std::size_t i = 0; i < N; ++i) {
    const Perm& p = perms_[i];
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inv += p[a] > p[b];
    lengths_[i] = inv;
    Perm pi(n);
    for (int k = 0; k < n; ++k) pi[p[k]] = k;
    inverse_[i] = lehmer_rank(pi);
    for (int s = 1; s < n; ++s) {
      Perm ws = p;
      for (int& x : ws) {
        if (x == s - 1)
          x = s;
        else if (x == s)
          x = s - 1;
      }
      right_simple_[i * gens + (s - 1)] = lehmer_rank(ws);
    }
  }
  words_.assign(N, {});
  children_.assign(N, {});
  std::vector<bool> seen(N, false);
  std::vector<std::size_t> frontier{0};
  seen[0] = true;
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t w : frontier)
      for (int s = 1; s < n; ++s) {
        std::size_t ws = times_simple(w, s);
        if (seen[ws] || lengths_[ws] != lengths_[w] + 1) continue;
        seen[ws] = true;
        words_[ws] = words_[w];
        words_[ws].push_back(s);
        children_[w].push_back({ws, s});
        next.push_back(ws);
      }
    frontier = std::move(next);
  }
  qpow_offset_ = n * n + 2 * n + 4;
  qpows_.reserve(2 * qpow_offset_ + 1);
  for (int k = -qpow_offset_; k <= qpow_offset_; ++k) qpows_.push_back(rational_pow(q_, k));
}

std::size_t HeckeContext::index(const Perm& w) const {
  if (static_cast<int>(w.size()) != n_) throw std::invalid_argument("permutation of the wrong degree");
  std::vector<bool> hit(n_, false);
  for (int x : w) {
    if (x < 0 || x >= n_ || hit[x]) throw std::invalid_argument("not a permutation");
    hit[x] = true;
  }
  return lehmer_rank(w);
}

std::size_t HeckeContext::compose(std::size_t a, std::size_t b) const {
  const Perm& pa = perms_[a];
  const Perm& pb = perms_[b];
  Perm out(n_);
  for (int k = 0; k < n_; ++k) out[k] = pb[pa[k]];
  return lehmer_rank(out);
}

std::size_t HeckeContext::transposition(int a, int b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_ || a == b) throw std::invalid_argument("bad transposition");
  Perm w(n_);
  std::iota(w.begin(), w.end(), 0);
  std::swap(w[a - 1], w[b - 1]);
  return lehmer_rank(w);
}

Rational HeckeContext::qpow(int k) const {
  if (k >= -qpow_offset_ && k <= qpow_offset_) return qpows_[k + qpow_offset_];
  return rational_pow(q_, k);
}

HeckeContextPtr make_hecke_context(int n, const Rational& q) { return std::make_shared<const HeckeContext>(n, q); }

HeckeElement::HeckeElement(HeckeContextPtr ctx) : ctx_(std::move(ctx)), c_(ctx_->size(), 0) {}

HeckeElement HeckeElement::one(HeckeContextPtr ctx) { return basis(std::move(ctx), 0); }

HeckeElement HeckeElement::basis(HeckeContextPtr ctx, std::size_t w, const Rational& c) {
  HeckeElement e(std::move(ctx));
  e.c_.at(w) = c;
  return e;
}

bool HeckeElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

std::size_t HeckeElement::support_size() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rational& x) { return x != 0; }));
}

void HeckeElement::check_same(const HeckeElement& o) const {
  if (ctx_ != o.ctx_ && (ctx_->rank() != o.ctx_->rank() || ctx_->q() != o.ctx_->q()))
    throw std::invalid_argument("Hecke elements from different contexts");
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (o.c_[i] != 0) c_[i] += o.c_[i];
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (o.c_[i] != 0) c_[i] -= o.c_[i];
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Rational& c) {
  for (auto& x : c_)
    if (x != 0) x *= c;
  return *this;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

HeckeElement HeckeElement::times_simple(int s) const {
  const HeckeContext& ctx = *ctx_;
  if (s < 1 || s >= ctx.rank()) throw std::invalid_argument("simple reflection out of range");
  HeckeElement out(ctx_);
  const Rational q = ctx.q();
  const Rational qm1 = q - 1;
  for (std::size_t w = 0; w < c_.size(); ++w) {
    if (c_[w] == 0) continue;
    std::size_t ws = ctx.times_simple(w, s);
    if (ctx.length(ws) > ctx.length(w)) {
      out.c_[ws] += c_[w];
    } else {
      out.c_[ws] += q * c_[w];
      out.c_[w] += qm1 * c_[w];
    }
  }
  return out;
}

HeckeElement HeckeElement::times_basis(std::size_t w) const {
  HeckeElement out = *this;
  for (int s : ctx_->reduced_word(w)) out = out.times_simple(s);
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  a.check_same(b);
  const HeckeContext& ctx = *a.ctx_;
  const std::size_t N = ctx.size();
  HeckeElement out(a.ctx_);
  std::size_t word_cost = 0;
  for (std::size_t v = 0; v < N; ++v)
    if (b.c_[v] != 0) word_cost += ctx.reduced_word(v).size() + 1;
  if (word_cost < N) {
    for (std::size_t v = 0; v < N; ++v)
      if (b.c_[v] != 0) out += a.times_basis(v) * b.c_[v];
    return out;
  }
  // Walk the reduced-word tree so each a T_v costs one simple step from its parent.
  std::vector<char> needed(N, 0);
  std::vector<std::size_t> order;
  order.reserve(N);
  order.push_back(0);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (const auto& [child, s] : ctx.children(order[k])) order.push_back(child);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t v = *it;
    bool need = b.c_[v] != 0;
    for (const auto& [child, s] : ctx.children(v)) need = need || needed[child];
    needed[v] = need;
  }
  std::function<void(std::size_t, const HeckeElement&)> walk = [&](std::size_t v, const HeckeElement& av) {
    if (b.c_[v] != 0) {
      const Rational& f = b.c_[v];
      for (std::size_t i = 0; i < N; ++i)
        if (av.c_[i] != 0) out.c_[i] += f * av.c_[i];
    }
    for (const auto& [child, s] : ctx.children(v))
      if (needed[child]) walk(child, av.times_simple(s));
  };
  if (needed[0]) walk(0, a);
  return out;
}

std::string HeckeElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t w = 0; w < c_.size(); ++w) {
    if (c_[w] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[w].get_str() << "*T[";
    const Perm& p = ctx_->perm(w);
    for (std::size_t k = 0; k < p.size(); ++k) os << (k ? " " : "") << p[k] + 1;
    os << ']';
  }
  return first ? "0" : os.str();
}

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) { return a * b; }

HeckeElement star(const HeckeElement& a) {
  HeckeElement out(a.context());
  for (std::size_t w = 0; w < a.coefficients().size(); ++w)
    if (a.coeff(w) != 0) out.add(a.context()->inverse(w), a.coeff(w));
  return out;
}

Rational inner_product(const HeckeElement& a, const HeckeElement& b) {
  if (a.context() != b.context() &&
      (a.context()->rank() != b.context()->rank() || a.context()->q() != b.context()->q()))
    throw std::invalid_argument("Hecke elements from different contexts");
  // tau(T_u T_{v^-1}) = q^{l(u)} when u = v, else 0.
  const HeckeContext& ctx = *a.context();
  Rational sum = 0;
  for (std::size_t w = 0; w < ctx.size(); ++w)
    if (a.coeff(w) != 0 && b.coeff(w) != 0) sum += a.coeff(w) * b.coeff(w) * ctx.qpow(ctx.length(w));
  return sum;
}

HeckeElement embed(const HeckeElement& a, HeckeContextPtr target) {
  const HeckeContext& src = *a.context();
  if (src.rank() > target->rank()) throw std::invalid_argument("cannot embed into a smaller rank");
  if (src.q() != target->q()) throw std::invalid_argument("embedding needs the same q");
  HeckeElement out(target);
  for (std::size_t w = 0; w < src.size(); ++w) {
    if (a.coeff(w) == 0) continue;
    Perm p = src.perm(w);
    for (int k = src.rank(); k < target->rank(); ++k) p.push_back(k);
    out.add(target->index(p), a.coeff(w));
  }
  return out;
}

Perm tableau_permutation(const Tableau& t) {
  Tableau base = Tableau::row_reading(t.shape());
  Perm w(t.size());
  for (int k = 1; k <= t.size(); ++k) w[k - 1] = t.at(base.position(k)) - 1;
  return w;
}

namespace {

// Permutations of the context fixing the rows of t^lambda setwise (entries past |lambda| fixed).
std::vector<std::size_t> row_stabiliser(const HeckeContext& ctx, const Partition& lambda) {
  if (lambda.size() > ctx.rank()) throw std::invalid_argument("shape larger than the rank");
  std::vector<int> row_of(ctx.rank());
  Tableau base = Tableau::row_reading(lambda);
  for (int k = 1; k <= ctx.rank(); ++k) row_of[k - 1] = k <= lambda.size() ? base.position(k).row : -k;
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < ctx.size(); ++w) {
    const Perm& p = ctx.perm(w);
    bool ok = true;
    for (int k = 0; k < ctx.rank() && ok; ++k) ok = row_of[k] == row_of[p[k]];
    if (ok) out.push_back(w);
  }
  return out;
}

std::size_t index_in(const HeckeContext& ctx, Perm p) {
  for (int k = static_cast<int>(p.size()); k < ctx.rank(); ++k) p.push_back(k);
  return ctx.index(p);
}

}  // namespace

HeckeElement row_symmetriser(HeckeContextPtr ctx, const Partition& lambda) {
  HeckeElement out(ctx);
  for (std::size_t w : row_stabiliser(*ctx, lambda)) out.add(w, 1);
  return out;
}

HeckeElement row_antisymmetriser(HeckeContextPtr ctx, const Partition& lambda) {
  HeckeElement out(ctx);
  for (std::size_t w : row_stabiliser(*ctx, lambda)) {
    int l = ctx->length(w);
    Rational c = ctx->qpow(-l);
    if (l % 2) c = -c;
    out.add(w, c);
  }
  return out;
}

std::size_t w_lambda(const HeckeContext& ctx, const Partition& lambda) {
  return index_in(ctx, tableau_permutation(Tableau::column_reading(lambda)));
}

HeckeElement build_murphy(HeckeContextPtr ctx, MurphyKind kind, const Tableau& s, const Tableau& t) {
  const HeckeContext& c = *ctx;
  std::size_t ds = index_in(c, tableau_permutation(s));
  std::size_t dt = index_in(c, tableau_permutation(t));
  HeckeElement left = HeckeElement::basis(ctx, c.inverse(ds));
  switch (kind) {
    case MurphyKind::x:
    case MurphyKind::y: {
      if (s.shape() != t.shape()) throw std::invalid_argument("x_st and y_st need tableaux of one shape");
      HeckeElement mid = kind == MurphyKind::x ? row_symmetriser(ctx, s.shape()) : row_antisymmetriser(ctx, s.shape());
      return (left * mid).times_basis(dt);
    }
    case MurphyKind::z: {
      const Partition& lambda = s.shape();
      if (t.shape() != lambda.conjugate()) throw std::invalid_argument("z_st needs t of the conjugate shape");
      HeckeElement e = left * row_symmetriser(ctx, lambda);
      e = e.times_basis(w_lambda(c, lambda));
      e = e * row_antisymmetriser(ctx, lambda.conjugate());
      return e.times_basis(dt);
    }
  }
  throw std::logic_error("unknown Murphy kind");
}

HeckeElement jucys_murphy(HeckeContextPtr ctx, int m, JmExponents exps) {
  if (m < 2 || m > ctx->rank()) throw std::invalid_argument("L_m needs 2 <= m <= n");
  HeckeElement out(ctx);
  for (int k = 1; k < m; ++k) {
    int e = k - m;
    if (exps == JmExponents::displayed && k == 1) e = -m;
    out.add(ctx->transposition(k, m), ctx->qpow(e));
  }
  return out;
}

std::vector<int> residue_contents(int m) {
  if (m < 1) throw std::invalid_argument("entries start at 1");
  std::set<int> out;
  for (const auto& mu : partitions_of(m - 1))
    for (const Node& node : mu.addable_nodes()) out.insert(content(node));
  return {out.begin(), out.end()};
}

Rational generalised_residue(int c, const Rational& q) { return q_integer(c, q); }

HeckeElement idempotent(HeckeContextPtr ctx, const Tableau& t, ResidueSets sets, JmExponents exps) {
  const int n = ctx->rank();
  if (t.size() != n) throw std::invalid_argument("tableau size must equal the rank");
  const Rational& q = ctx->q();
  HeckeElement e = HeckeElement::one(ctx);
  for (int m = 1; m <= n; ++m) {
    const int r = content(t.position(m));
    const Rational rv = generalised_residue(r, q);
    for (int c : residue_contents(sets == ResidueSets::per_entry ? m : n)) {
      if (c == r) continue;
      const Rational cv = generalised_residue(c, q);
      if (rv == cv) throw DegenerateSpecialization("residues " + std::to_string(r) + " and " + std::to_string(c) +
                                                   " coincide at q=" + q.get_str());
      const Rational inv = 1 / (rv - cv);
      HeckeElement lm = m == 1 ? HeckeElement::zero(ctx) : e * jucys_murphy(ctx, m, exps);
      lm -= e * cv;
      e = lm * inv;
    }
  }
  return e;
}

namespace {

// x_lambda T_{w_lambda} y_{mu}, mu = (lambda^e)', inside a context of rank |lambda| + 1.
HeckeElement induced_prefix(const HeckeContextPtr& ctx, const Partition& lambda, const Partition& mu) {
  HeckeElement e = row_symmetriser(ctx, lambda).times_basis(w_lambda(*ctx, lambda));
  return e * row_antisymmetriser(ctx, mu);
}

int span_rank(const HeckeContextPtr& ctx, const Partition& lambda, bool column_standard) {
  if (ctx->rank() != lambda.size() + 1) throw std::invalid_argument("context rank must be |lambda| + 1");
  Partition big = lambda.add_node(1);
  Partition mu = big.conjugate();
  HeckeElement prefix = induced_prefix(ctx, lambda, mu);
  Eliminator elim(ctx->size(), false);
  std::vector<Tableau> fillings;
  if (column_standard) {
    for (const auto& sp : row_standard_tableaux(mu)) fillings.push_back(sp);
  } else {
    for (const auto& s : row_standard_tableaux(big)) fillings.push_back(s.conjugate());
  }
  for (const auto& sp : fillings) elim.insert(to_vector(prefix.times_basis(index_in(*ctx, tableau_permutation(sp)))));
  return static_cast<int>(elim.rank());
}

}  // namespace

int induced_span_rank(HeckeContextPtr ctx, const Partition& lambda) { return span_rank(ctx, lambda, true); }

int induced_span_rank_row_standard(HeckeContextPtr ctx, const Partition& lambda) {
  return span_rank(ctx, lambda, false);
}

long long branching_rank(const Partition& lambda) {
  long long total = 0;
  for (const Node& node : lambda.addable_nodes()) total += count_standard_tableaux(lambda.add_node(node.row));
  return total;
}

Rational induced_vector_norm(HeckeContextPtr ctx, const Partition& lambda, int row) {
  const int n = lambda.size();
  if (ctx->rank() != n + 1) throw std::invalid_argument("context rank must be |lambda| + 1");
  if (!lambda.is_addable({row, lambda.row(row) + 1})) throw std::invalid_argument("row " + std::to_string(row) + " is not addable");
  Partition big = lambda.add_node(row);
  Tableau lowest = Tableau::column_reading(big);
  // d^i = (k, k+1, ..., n+1) with k the entry of the new node in the column-filled tableau.
  const int k = lowest.at({row, lambda.row(row) + 1});
  Perm cycle(n + 1);
  std::iota(cycle.begin(), cycle.end(), 0);
  for (int j = k; j <= n; ++j) cycle[j - 1] = j;
  cycle[n] = k - 1;
  std::size_t di = ctx->index(cycle);
  HeckeElement e = row_symmetriser(ctx, lambda).times_basis(w_lambda(*ctx, lambda)).times_basis(di);
  e = e * row_antisymmetriser(ctx, big.conjugate());
  e = e * idempotent(ctx, lowest);
  return inner_product(e, e);
}

std::optional<int> q_power_ratio(const Rational& value, const Rational& q, int bound) {
  if (value == 0) return std::nullopt;
  for (int k = 0; k <= bound; ++k) {
    if (rational_pow(q, k) == value) return k;
    if (k > 0 && rational_pow(q, -k) == value) return -k;
  }
  return std::nullopt;
}

int element_rank(const std::vector<HeckeElement>& elements) {
  if (elements.empty()) return 0;
  Eliminator elim(elements.front().context()->size(), false);
  for (const auto& e : elements) elim.insert(to_vector(e));
  return static_cast<int>(elim.rank());
}

std::vector<Rational> solve_in_span(const std::vector<HeckeElement>& basis, const HeckeElement& target) {
  Eliminator elim(target.context()->size(), true);
  for (const auto& e : basis)
    if (!elim.insert(to_vector(e))) throw std::invalid_argument("spanning family is linearly dependent");
  auto sol = elim.solve(to_vector(target));
  if (!sol) throw std::domain_error("target is outside the span");
  return *sol;
}

IdempotentTable::IdempotentTable(HeckeContextPtr ctx) : ctx_(std::move(ctx)) {
  for (const auto& lambda : partitions_of(ctx_->rank()))
    for (const auto& t : standard_tableaux(lambda)) table_.emplace(t, idempotent(ctx_, t));
}

const HeckeElement& IdempotentTable::at(const Tableau& t) const {
  auto it = table_.find(t);
  if (it == table_.end()) throw std::out_of_range("no idempotent for " + t.to_string());
  return it->second;
}

namespace {

SeminormalAction decompose_step(const HeckeElement& zus, const HeckeElement* zut, const Tableau& s, int i) {
  SeminormalAction out;
  out.h = content(s.position(i - 1)) - content(s.position(i));
  std::vector<HeckeElement> basis{zus};
  if (zut) basis.push_back(*zut);
  auto coords = solve_in_span(basis, zus.times_simple(i - 1));
  out.alpha = coords[0];
  out.beta = coords.size() > 1 ? coords[1] : Rational(0);
  return out;
}

}  // namespace

SeminormalAction seminormal_action(HeckeContextPtr ctx, const Tableau& u, const Tableau& s, int i) {
  if (u.shape() != s.shape() || !u.is_standard() || !s.is_standard())
    throw std::invalid_argument("u and s must be standard of one shape");
  if (i < 2 || i > ctx->rank()) throw std::invalid_argument("need 2 <= i <= n");
  Tableau t = swap_entries(s, i - 1, i);
  HeckeElement eu = idempotent(ctx, u);
  HeckeElement zus = eu * build_murphy(ctx, MurphyKind::x, u, s) * idempotent(ctx, s);
  if (!t.is_standard()) return decompose_step(zus, nullptr, s, i);
  HeckeElement zut = eu * build_murphy(ctx, MurphyKind::x, u, t) * idempotent(ctx, t);
  return decompose_step(zus, &zut, s, i);
}

std::vector<SeminormalStep> seminormal_steps(const IdempotentTable& table, const Partition& lambda) {
  const auto& ctx = table.context();
  auto tabs = standard_tableaux(lambda);
  std::map<std::pair<Tableau, Tableau>, HeckeElement> zeta;
  for (const auto& u : tabs)
    for (const auto& s : tabs) zeta.emplace(std::make_pair(u, s), table.at(u) * build_murphy(ctx, MurphyKind::x, u, s) * table.at(s));
  std::vector<SeminormalStep> out;
  for (const auto& u : tabs)
    for (const auto& s : tabs)
      for (int i = 2; i <= ctx->rank(); ++i) {
        Tableau t = swap_entries(s, i - 1, i);
        const HeckeElement* zut = t.is_standard() ? &zeta.at({u, t}) : nullptr;
        out.push_back({u, s, i, decompose_step(zeta.at({u, s}), zut, s, i)});
      }
  return out;
}

SeminormalAction seminormal_prediction(int h, const Rational& q) {
  if (h == 0) throw std::invalid_argument("axial distance 0 does not occur");
  SeminormalAction out;
  out.h = h;
  const Rational gh = q_integer(h, q);
  if (gh == 0) throw DegenerateSpecialization("[h]_q vanishes at q=" + q.get_str());
  out.alpha = -1 / gh;
  if (h > 1)
    out.beta = 1;
  else if (h < -1)
    out.beta = q * q_integer(h + 1, q) * q_integer(h - 1, q) / (gh * gh);
  else
    out.beta = 0;
  return out;
}

bool tableau_dominates(const Tableau& a, const Tableau& b) {
  if (a.size() != b.size()) return false;
  for (int m = 1; m <= a.size(); ++m)
    if (!dominates(a.restricted(m).shape(), b.restricted(m).shape())) return false;
  return true;
}

struct YBasis::Solver {
  Eliminator elim;
};

YBasis::YBasis(HeckeContextPtr ctx) : ctx_(std::move(ctx)) {
  auto solver = std::make_shared<Solver>(Solver{Eliminator(ctx_->size(), true)});
  for (const auto& lambda : partitions_of(ctx_->rank())) {
    auto tabs = standard_tableaux(lambda);
    for (const auto& a : tabs)
      for (const auto& b : tabs) {
        if (!solver->elim.insert(to_vector(build_murphy(ctx_, MurphyKind::y, a, b))))
          throw std::logic_error("y-basis is linearly dependent");
        labels_.emplace_back(a, b);
      }
  }
  solver_ = std::move(solver);
}

std::vector<YTerm> YBasis::expand(const HeckeElement& element) const {
  auto sol = solver_->elim.solve(to_vector(element));
  if (!sol) throw std::logic_error("y-basis does not span");
  std::vector<YTerm> out;
  for (std::size_t k = 0; k < sol->size(); ++k)
    if ((*sol)[k] != 0) out.push_back({labels_[k].first, labels_[k].second, (*sol)[k]});
  return out;
}

std::vector<YTerm> y_expansion(HeckeContextPtr ctx, const HeckeElement& element) {
  return YBasis(std::move(ctx)).expand(element);
}

std::vector<std::string> key_formula_violations(const YBasis& basis, const IdempotentTable& table, const Tableau& s,
                                                const Tableau& t) {
  const auto& ctx = basis.context();
  std::vector<std::string> out;
  HeckeElement y = build_murphy(ctx, MurphyKind::y, s, t);
  const Tableau tc = t.conjugate();
  for (const auto& [u, eu] : table.all()) {
    Rational diagonal = 0;
    for (const auto& term : basis.expand(y * eu)) {
      if (term.sigma == s && term.tau == t) {
        diagonal = term.coeff;
        continue;
      }
      bool above = (term.sigma.shape() != s.shape() && dominates(term.sigma.shape(), s.shape())) ||
                   (term.sigma == s && tableau_dominates(term.tau, t));
      if (!above)
        out.push_back("y(" + term.sigma.to_string() + "," + term.tau.to_string() + ") in y(" + s.to_string() + "," +
                      t.to_string() + ")E" + u.to_string());
    }
    Rational expect = u == tc ? 1 : 0;
    if (diagonal != expect)
      out.push_back("diagonal of y(" + s.to_string() + "," + t.to_string() + ")E" + u.to_string() + " is " +
                    diagonal.get_str());
  }
  return out;
}

HeckeElement murphy_recursion_lhs(HeckeContextPtr ctx, const Partition& mu, int row) {
  const int n = mu.size() + 1;
  if (ctx->rank() != n) throw std::invalid_argument("context rank must be |mu| + 1");
  if (!mu.is_addable({row, mu.row(row) + 1})) throw std::invalid_argument("row is not addable");
  Tableau t = attach(Tableau::row_reading(mu), row, n);
  return build_murphy(ctx, MurphyKind::y, t, t);
}

HeckeElement murphy_recursion_rhs(HeckeContextPtr ctx, const Partition& mu, int row) {
  const int n = mu.size() + 1;
  if (ctx->rank() != n) throw std::invalid_argument("context rank must be |mu| + 1");
  if (ctx->q() != 1) throw std::invalid_argument("the recursion is checked at q = 1");
  HeckeElement factor = HeckeElement::one(ctx);
  if (row <= mu.length()) {
    Tableau base = Tableau::row_reading(mu);
    for (int c : base.rows()[row - 1]) factor.add(ctx->transposition(c, n), -1);
  }
  return factor * row_antisymmetriser(ctx, mu);
}

std::vector<Rational> random_specializations(std::uint64_t seed, int count) {
  std::mt19937_64 engine(seed);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    long num = static_cast<long>(engine() % 195) - 97;
    long den = static_cast<long>(engine() % 97) + 1;
    if (num == 0) continue;
    Rational q(num, den);
    q.canonicalize();
    if (q == 1 || q == -1) continue;
    if (std::find(out.begin(), out.end(), q) != out.end()) continue;
    out.push_back(q);
  }
  return out;
}

namespace {

using Task = std::function<std::vector<HeckeCheck>()>;

HeckeCheck make_check(std::string identity, std::string lambda, int row, const Rational& q, std::string lhs,
                      std::string rhs, bool pass, std::optional<int> k = std::nullopt) {
  HeckeCheck c;
  c.identity = std::move(identity);
  c.lambda = std::move(lambda);
  c.row = row;
  c.q = q.get_str();
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.qpower = k;
  c.pass = pass;
  return c;
}

std::string shape_text(const Partition& p) { return "(" + p.to_string() + ")"; }

void add_rank_tasks(std::vector<Task>& tasks, const HeckeContextPtr& ctx) {
  const int n = ctx->rank();
  const Rational q = ctx->q();
  auto table = std::make_shared<const IdempotentTable>(ctx);
  for (const auto& lambda : partitions_of(n)) {
    tasks.push_back([ctx, lambda, q] {
      HeckeElement x = row_symmetriser(ctx, lambda);
      Rational gamma = gamma_of_shape(lambda).evaluate(q);
      HeckeElement sq = x * x;
      return std::vector<HeckeCheck>{make_check("x_square", shape_text(lambda), 0, q, sq.coeff(0).get_str(),
                                                gamma.get_str(), sq == x * gamma)};
    });
    for (const auto& t : standard_tableaux(lambda)) {
      tasks.push_back([ctx, table, t, q, n] {
        std::vector<HeckeCheck> out;
        const HeckeElement& e = table->at(t);
        bool eigen = true;
        for (int m = 2; m <= n; ++m)
          eigen = eigen && e * jucys_murphy(ctx, m) == e * generalised_residue(content(t.position(m)), q);
        out.push_back(make_check("idempotent_eigen", t.to_string(), 0, q, eigen ? "E_t L_m = r_t(m) E_t" : "mismatch",
                                 "E_t L_m = r_t(m) E_t", eigen));
        bool square = e * e == e;
        out.push_back(make_check("idempotent_square", t.to_string(), 0, q, square ? "E_t" : "E_t^2 != E_t", "E_t", square));
        Rational norm = inner_product(e, e);
        Rational expect = 1 / hook_product(t.shape()).evaluate(q);
        auto k = q_power_ratio(norm / expect, q, n * n);
        out.push_back(make_check("idempotent_norm", t.to_string(), 0, q, norm.get_str(), expect.get_str(), k.has_value(), k));
        return out;
      });
    }
  }
  tasks.push_back([ctx, table, n, q] {
    HeckeElement sum(ctx);
    for (const auto& [t, e] : table->all()) sum += e;
    bool ok = sum == HeckeElement::one(ctx);
    return std::vector<HeckeCheck>{make_check("idempotent_complete", "n=" + std::to_string(n), 0, q,
                                              sum.coeff(0).get_str(), "1", ok)};
  });
  tasks.push_back([ctx, n, q] {
    bool ok = true;
    for (int m = 2; m <= n; ++m)
      for (int k = m + 1; k <= n; ++k) {
        HeckeElement a = jucys_murphy(ctx, m), b = jucys_murphy(ctx, k);
        ok = ok && a * b == b * a;
      }
    return std::vector<HeckeCheck>{make_check("jm_commute", "n=" + std::to_string(n), 0, q, ok ? "commute" : "differ",
                                              "commute", ok)};
  });
  if (n <= 5)
    tasks.push_back([table, n, q] {
      std::vector<HeckeCheck> out;
      for (const auto& lambda : partitions_of(n)) {
        int pairs = 0, bad = 0;
        for (const auto& [t, et] : table->all()) {
          if (t.shape() != lambda) continue;
          for (const auto& [u, eu] : table->all()) {
            if (!(t < u)) continue;
            ++pairs;
            if (!(et * eu).is_zero()) ++bad;
          }
        }
        out.push_back(make_check("idempotent_orthogonal", shape_text(lambda), 0, q, "nonzero=" + std::to_string(bad),
                                 "pairs=" + std::to_string(pairs), bad == 0));
      }
      return out;
    });
  if (n <= 4) {
    for (const auto& lambda : partitions_of(n))
      tasks.push_back([ctx, lambda, q] {
        int count = 0, bad = 0;
        for (const auto& t : row_standard_tableaux(lambda)) {
          if (t.is_standard()) continue;
          ++count;
          if (!idempotent(ctx, t).is_zero()) ++bad;
        }
        return std::vector<HeckeCheck>{make_check("idempotent_nonstandard", shape_text(lambda), 0, q,
                                                  "nonzero=" + std::to_string(bad), "tableaux=" + std::to_string(count),
                                                  bad == 0)};
      });
    tasks.push_back([ctx, table, n, q] {
      YBasis basis(ctx);
      std::vector<HeckeCheck> out;
      for (const auto& lambda : partitions_of(n)) {
        int pairs = 0;
        std::vector<std::string> bad;
        auto tabs = standard_tableaux(lambda);
        for (const auto& s : tabs)
          for (const auto& t : tabs) {
            ++pairs;
            auto v = key_formula_violations(basis, *table, s, t);
            bad.insert(bad.end(), v.begin(), v.end());
          }
        out.push_back(make_check("key_formula", shape_text(lambda), 0, q,
                                 bad.empty() ? "violations=0" : bad.front(), "pairs=" + std::to_string(pairs),
                                 bad.empty()));
      }
      return out;
    });
  }
  for (const auto& lambda : partitions_of(n))
    tasks.push_back([table, lambda, q] {
      std::string first_bad;
      auto steps = seminormal_steps(*table, lambda);
      for (const auto& st : steps) {
        SeminormalAction want = seminormal_prediction(st.action.h, q);
        if (first_bad.empty() && (st.action.alpha != want.alpha || st.action.beta != want.beta))
          first_bad = st.u.to_string() + st.s.to_string() + " i=" + std::to_string(st.i) +
                      " alpha=" + st.action.alpha.get_str() + " beta=" + st.action.beta.get_str();
      }
      return std::vector<HeckeCheck>{make_check("seminormal_rules", shape_text(lambda), 0, q,
                                                first_bad.empty() ? "matches" : first_bad,
                                                "steps=" + std::to_string(steps.size()), first_bad.empty())};
    });
  if (n >= 1) {
    for (const auto& lambda : partitions_of(n - 1)) {
      tasks.push_back([ctx, lambda, q] {
        int rank = induced_span_rank(ctx, lambda);
        long long expect = branching_rank(lambda);
        return std::vector<HeckeCheck>{make_check("induced_span_rank", shape_text(lambda), 0, q, std::to_string(rank),
                                                  std::to_string(expect), rank == expect)};
      });
      for (const Node& node : lambda.addable_nodes())
        tasks.push_back([ctx, lambda, node, q, n] {
          Rational got = induced_vector_norm(ctx, lambda, node.row);
          Rational want = lowest_vector_norm(lambda, node.row).evaluate(q);
          std::optional<int> k;
          if (got != 0) k = q_power_ratio(got / want, q, n * n);
          return std::vector<HeckeCheck>{make_check("induced_vector_norm", shape_text(lambda), node.row, q, got.get_str(),
                                                    want.get_str(), k.has_value(), k)};
        });
    }
  }
}

void add_group_algebra_tasks(std::vector<Task>& tasks, int n) {
  auto ctx = make_hecke_context(n, Rational(1));
  for (const auto& mu : partitions_of(n - 1))
    for (const Node& node : mu.addable_nodes())
      tasks.push_back([ctx, mu, node] {
        HeckeElement lhs = murphy_recursion_lhs(ctx, mu, node.row);
        HeckeElement rhs = murphy_recursion_rhs(ctx, mu, node.row);
        bool plus = lhs == rhs;
        bool minus = lhs == rhs * Rational(-1);
        return std::vector<HeckeCheck>{make_check("murphy_recursion_q1", shape_text(mu), node.row, Rational(1),
                                                  plus ? "y_tt" : (minus ? "-y_tt" : "y_tt"),
                                                  "(1 - sum T_(c,n)) y_mu", plus || minus)};
      });
}

}  // namespace

std::vector<HeckeCheck> run_hecke_suite(const HeckeSuiteOptions& options) {
  if (options.max_rank < 1) throw std::invalid_argument("max rank must be >= 1");
  if (options.max_rank > 6) throw std::invalid_argument("max rank above 6 is not supported");
  if (options.max_rank == 6 && !options.allow_rank6) throw std::invalid_argument("rank 6 needs the opt-in flag");
  if (options.specializations < 2) throw std::invalid_argument("need at least two specializations");
  std::vector<Task> tasks;
  for (const Rational& q : random_specializations(options.seed, options.specializations))
    for (int n = 1; n <= options.max_rank; ++n) add_rank_tasks(tasks, make_hecke_context(n, q));
  for (int n = 2; n <= std::min(options.max_rank, 4); ++n) add_group_algebra_tasks(tasks, n);

  std::vector<std::vector<HeckeCheck>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) results[k] = tasks[k]();
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<HeckeCheck> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  // "Up to a power of q" must mean the same power at every specialization.
  std::map<std::tuple<std::string, std::string, int>, std::set<std::optional<int>>> powers;
  for (const auto& c : out)
    if (c.qpower || c.identity == "induced_vector_norm" || c.identity == "idempotent_norm")
      powers[{c.identity, c.lambda, c.row}].insert(c.qpower);
  for (auto& c : out) {
    auto it = powers.find({c.identity, c.lambda, c.row});
    if (it != powers.end() && it->second.size() != 1) c.pass = false;
  }
  std::sort(out.begin(), out.end(), [](const HeckeCheck& a, const HeckeCheck& b) {
    return std::tie(a.identity, a.lambda, a.row, a.q, a.lhs) < std::tie(b.identity, b.lambda, b.row, b.q, b.lhs);
  });
  return out;
}

}  // namespace specfock
