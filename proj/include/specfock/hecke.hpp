#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specfock/laurent.hpp"
#include "specfock/partitions.hpp"

namespace specfock {

/// Permutation of {0..n-1} acting on the right: k -> img[k]. Products compose left to right,
/// (k)(vw) = ((k)v)w.
using Perm = std::vector<int>;

/// Thrown when a residue difference vanishes at the chosen q; pick another specialization.
struct DegenerateSpecialization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class HeckeContext {
 public:
  HeckeContext(int n, Rational q);

  int rank() const { return n_; }
  const Rational& q() const { return q_; }
  std::size_t size() const { return perms_.size(); }

  std::size_t index(const Perm& w) const;
  const Perm& perm(std::size_t w) const { return perms_[w]; }
  int length(std::size_t w) const { return lengths_[w]; }
  /// Reduced word as simple reflections s_1..s_{n-1}, s_i = (i, i+1) in 1-based entries.
  const std::vector<int>& reduced_word(std::size_t w) const { return words_[w]; }
  std::size_t times_simple(std::size_t w, int s) const { return right_simple_[w * (n_ > 1 ? n_ - 1 : 1) + (s - 1)]; }
  std::size_t inverse(std::size_t w) const { return inverse_[w]; }
  std::size_t compose(std::size_t a, std::size_t b) const;
  std::size_t identity() const { return 0; }
  /// Transposition of the 1-based entries a and b.
  std::size_t transposition(int a, int b) const;
  /// q^k at the specialization.
  Rational qpow(int k) const;
  /// Children of w in the reduced-word tree (w s with l(ws) = l(w) + 1 and word(ws) = word(w) s).
  const std::vector<std::pair<std::size_t, int>>& children(std::size_t w) const { return children_[w]; }

 private:
  int n_;
  Rational q_;
  std::vector<Perm> perms_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::vector<std::size_t> right_simple_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::pair<std::size_t, int>>> children_;
  int qpow_offset_;
  std::vector<Rational> qpows_;
};

using HeckeContextPtr = std::shared_ptr<const HeckeContext>;
HeckeContextPtr make_hecke_context(int n, const Rational& q);

/// Dense element of H_n over the rationals, coefficients indexed by permutation.
class HeckeElement {
 public:
  explicit HeckeElement(HeckeContextPtr ctx);
  static HeckeElement zero(HeckeContextPtr ctx) { return HeckeElement(std::move(ctx)); }
  static HeckeElement one(HeckeContextPtr ctx);
  static HeckeElement basis(HeckeContextPtr ctx, std::size_t w, const Rational& c = 1);

  const HeckeContextPtr& context() const { return ctx_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& coeff(std::size_t w) const { return c_[w]; }
  void add(std::size_t w, const Rational& c) { c_[w] += c; }
  bool is_zero() const;
  std::size_t support_size() const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const Rational& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const Rational& c) { return a *= c; }
  friend HeckeElement operator*(const Rational& c, HeckeElement a) { return a *= c; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

  /// Right multiplication by T_s.
  HeckeElement times_simple(int s) const;
  /// Right multiplication by T_w along a reduced word.
  HeckeElement times_basis(std::size_t w) const;

  std::string to_string() const;

 private:
  void check_same(const HeckeElement& o) const;
  HeckeContextPtr ctx_;
  std::vector<Rational> c_;
};

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);
/// T_w -> T_{w^-1}.
HeckeElement star(const HeckeElement& a);
/// Coefficient of T_1 in a b^*.
Rational inner_product(const HeckeElement& a, const HeckeElement& b);
/// Embeds an element of H_m into H_n (m <= n) along S_m inside S_n.
HeckeElement embed(const HeckeElement& a, HeckeContextPtr target);

/// d(t) with t = t^lambda d(t); t any filling of a partition shape.
Perm tableau_permutation(const Tableau& t);
/// Sum of T_w over the row stabiliser of t^lambda.
HeckeElement row_symmetriser(HeckeContextPtr ctx, const Partition& lambda);
/// Sum of (-q)^{-l(w)} T_w over the row stabiliser of t^lambda.
HeckeElement row_antisymmetriser(HeckeContextPtr ctx, const Partition& lambda);

enum class MurphyKind { x, y, z };
/// x_st, y_st (s, t of one shape) or z_st (s of shape lambda, t of shape lambda').
HeckeElement build_murphy(HeckeContextPtr ctx, MurphyKind kind, const Tableau& s, const Tableau& t);
/// w_lambda = d(t_lambda).
std::size_t w_lambda(const HeckeContext& ctx, const Partition& lambda);

enum class JmExponents {
  murphy,     // L_m = sum_{k<m} q^{k-m} T_{(k,m)}
  displayed,  // the same but with q^{-m} on T_{(1,m)}
};
HeckeElement jucys_murphy(HeckeContextPtr ctx, int m, JmExponents exps = JmExponents::murphy);

/// Contents available to entry m over all standard tableaux (independent of n >= m).
std::vector<int> residue_contents(int m);
/// Generalised residue [c]_q at the specialization.
Rational generalised_residue(int content, const Rational& q);

enum class ResidueSets {
  per_entry,  // R(m) in the factor for L_m
  last_entry, // R(n) in every factor
};
/// Seminormal idempotent E_t; t any filling of a shape of size n.
HeckeElement idempotent(HeckeContextPtr ctx, const Tableau& t, ResidueSets sets = ResidueSets::per_entry,
                        JmExponents exps = JmExponents::murphy);

/// E_t for every standard tableau of size n, computed once.
class IdempotentTable {
 public:
  explicit IdempotentTable(HeckeContextPtr ctx);
  const HeckeElement& at(const Tableau& t) const;
  const std::map<Tableau, HeckeElement>& all() const { return table_; }
  const HeckeContextPtr& context() const { return ctx_; }

 private:
  HeckeContextPtr ctx_;
  std::map<Tableau, HeckeElement> table_;
};

/// Rank of span{ x_lambda T_{w_lambda} y_{(lambda^e, s)'} } over column-standard lambda^e-tableaux s.
int induced_span_rank(HeckeContextPtr ctx, const Partition& lambda);
/// Rank of the same span with s restricted to row-standard lambda^e-tableaux.
int induced_span_rank_row_standard(HeckeContextPtr ctx, const Partition& lambda);
/// Sum over addable rows of the number of standard lambda^i-tableaux.
long long branching_rank(const Partition& lambda);

/// <*,*> for * = x_lambda T_{w_lambda} T_{d^i} y_{(lambda^i,lambda^i)'} E_{t_i}; ctx rank = |lambda|+1.
Rational induced_vector_norm(HeckeContextPtr ctx, const Partition& lambda, int row);

/// k with value == q^k for |k| <= bound, if any.
std::optional<int> q_power_ratio(const Rational& value, const Rational& q, int bound);

/// Rank of a family of elements by exact Gaussian elimination.
int element_rank(const std::vector<HeckeElement>& elements);
/// Coordinates of target in the basis (throws if not in the span or the family is dependent).
std::vector<Rational> solve_in_span(const std::vector<HeckeElement>& basis, const HeckeElement& target);

/// The two seminormal coefficients of zeta_us T_v = alpha zeta_us + beta zeta_ut, t = s(i-1,i).
struct SeminormalAction {
  Rational alpha;
  Rational beta;  // 0 when t is not standard
  int h = 0;      // content(i-1) - content(i) in s
};
SeminormalAction seminormal_action(HeckeContextPtr ctx, const Tableau& u, const Tableau& s, int i);
/// Every step zeta_us T_v for u, s standard of shape lambda and 2 <= i <= n, as (u, s, i, action).
struct SeminormalStep {
  Tableau u;
  Tableau s;
  int i = 0;
  SeminormalAction action;
};
std::vector<SeminormalStep> seminormal_steps(const IdempotentTable& table, const Partition& lambda);

/// Predicted coefficients for a seminormal step with axial distance h.
SeminormalAction seminormal_prediction(int h, const Rational& q);

/// Tableau dominance: shape(a restricted to 1..m) dominates shape(b restricted to 1..m) for every m.
bool tableau_dominates(const Tableau& a, const Tableau& b);

struct YTerm {
  Tableau sigma;
  Tableau tau;
  Rational coeff;
};
/// Murphy y-basis of H_n (standard pairs of one shape), solved once and reused.
class YBasis {
 public:
  explicit YBasis(HeckeContextPtr ctx);
  /// Nonzero coordinates of an element in the y-basis.
  std::vector<YTerm> expand(const HeckeElement& element) const;
  const HeckeContextPtr& context() const { return ctx_; }

 private:
  HeckeContextPtr ctx_;
  struct Solver;
  std::vector<std::pair<Tableau, Tableau>> labels_;
  std::shared_ptr<const Solver> solver_;
};
std::vector<YTerm> y_expansion(HeckeContextPtr ctx, const HeckeElement& element);
/// Violations of the key formula for y_st E_u over every standard u: a wrong diagonal coefficient
/// (expected 1 exactly when u = t') or a term y_{sigma tau} not above (s, t).
std::vector<std::string> key_formula_violations(const YBasis& basis, const IdempotentTable& table, const Tableau& s,
                                                const Tableau& t);

/// Right side of Murphy's recursion at the group-algebra point: (1 - sum_c T_{(c,n)}) y_mu, c over the
/// entries of row i of t^mu, n = |mu| + 1; ctx must have rank n and q = 1.
HeckeElement murphy_recursion_rhs(HeckeContextPtr ctx, const Partition& mu, int row);
/// y_tt for t = t^mu with n attached to row i.
HeckeElement murphy_recursion_lhs(HeckeContextPtr ctx, const Partition& mu, int row);

/// One row of the oracle report.
struct HeckeCheck {
  std::string identity;
  std::string lambda;
  int row = 0;
  std::string q;
  std::string lhs;
  std::string rhs;
  std::optional<int> qpower;
  bool pass = false;
};

struct HeckeSuiteOptions {
  int max_rank = 5;
  std::uint64_t seed = 7;
  int specializations = 3;
  int jobs = 1;
  bool allow_rank6 = false;
};
/// Runs the whole oracle suite; rows are sorted for deterministic output.
std::vector<HeckeCheck> run_hecke_suite(const HeckeSuiteOptions& options);
/// Seeded nonzero rationals away from 0 and +-1.
std::vector<Rational> random_specializations(std::uint64_t seed, int count);

}  // namespace specfock
