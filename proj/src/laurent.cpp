#include "specfock/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace specfock {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

bool LaurentPoly::in_positive_part() const {
  return terms_.empty() || terms_.begin()->first >= 1;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return LaurentPoly{};
  // Dense ordinary polynomials with nonzero constant terms.
  const int a_lo = min_exponent(), d_lo = divisor.min_exponent();
  std::vector<Integer> a(max_exponent() - a_lo + 1), d(divisor.max_exponent() - d_lo + 1);
  for (const auto& [e, c] : terms_) a[e - a_lo] = c;
  for (const auto& [e, c] : divisor.terms_) d[e - d_lo] = c;
  if (a.size() < d.size()) return std::nullopt;
  std::vector<Integer> quot(a.size() - d.size() + 1);
  const Integer& lead = d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer& top = a[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer qk = top / lead;
    quot[k] = qk;
    for (std::size_t j = 0; j < d.size(); ++j) a[k + j] -= qk * d[j];
  }
  if (std::any_of(a.begin(), a.end(), [](const Integer& c) { return c != 0; })) return std::nullopt;
  LaurentPoly r;
  for (std::size_t k = 0; k < quot.size(); ++k) r.add_term(static_cast<int>(k) + a_lo - d_lo, quot[k]);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  LaurentPoly r;
  std::size_t pos = 0;
  auto fail = [&]() { throw std::invalid_argument("malformed polynomial: " + std::string(text)); };
  auto read_int = [&](std::size_t& p) -> std::string {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return s.substr(start, p - start);
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    Integer coeff = 1;
    std::string digits = read_int(pos);
    bool has_coeff = !digits.empty();
    if (has_coeff) coeff = Integer(digits);
    int exponent = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coeff) fail();
      ++pos;
      if (pos >= s.size() || s[pos] != 'q') fail();
    }
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        int esign = 1;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
          esign = s[pos] == '-' ? -1 : 1;
          ++pos;
        }
        std::string ed = read_int(pos);
        if (ed.empty()) fail();
        exponent = esign * std::stoi(ed);
      }
    } else if (!has_coeff) {
      fail();
    }
    r.add_term(exponent, sign * coeff);
  }
  return r;
}

LaurentPoly gauss(int n) {
  if (n < 0) throw std::invalid_argument("gauss: negative argument");
  LaurentPoly r;
  for (int k = 0; k < n; ++k) r += LaurentPoly::monomial(k);
  return r;
}

LaurentPoly gauss_factorial(int n) {
  LaurentPoly r = 1;
  for (int k = 2; k <= n; ++k) r *= gauss(k);
  return r;
}

LaurentPoly balanced_gauss(int n) {
  if (n < 0) throw std::invalid_argument("balanced_gauss: negative argument");
  LaurentPoly r;
  for (int k = 0; k < n; ++k) r += LaurentPoly::monomial(2 * k + 1 - n);
  return r;
}

LaurentPoly balanced_factorial(int n) {
  LaurentPoly r = 1;
  for (int k = 2; k <= n; ++k) r *= balanced_gauss(k);
  return r;
}

const LaurentPoly& cyclotomic(int l) {
  if (l < 1) throw std::invalid_argument("cyclotomic: index must be >= 1");
  static std::mutex mutex;
  static std::map<int, LaurentPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(l); it != cache.end()) return it->second;
  }
  LaurentPoly num = LaurentPoly::monomial(l) - LaurentPoly(1);
  for (int d = 1; d < l; ++d) {
    if (l % d != 0) continue;
    auto quot = num.exact_divide(cyclotomic(d));
    if (!quot) throw std::logic_error("cyclotomic: inexact division");
    num = *quot;
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(l, std::move(num)).first->second;
}

int cyclo_valuation(const LaurentPoly& p, int l) {
  if (p.is_zero()) throw std::domain_error("cyclo_valuation of zero");
  const LaurentPoly& phi = cyclotomic(l);
  int v = 0;
  LaurentPoly cur = p;
  while (auto quot = cur.exact_divide(phi)) {
    cur = std::move(*quot);
    ++v;
  }
  return v;
}

LaurentPoly bar(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r += LaurentPoly::monomial(-e, c);
  return r;
}

BarSplit bar_symmetric_split(const LaurentPoly& c) {
  BarSplit out;
  for (const auto& [e, a] : c.terms()) {
    if (e == 0) {
      out.gamma += LaurentPoly(a);
    } else if (e < 0) {
      out.gamma += LaurentPoly::monomial(e, a);
      out.gamma += LaurentPoly::monomial(-e, a);
    }
  }
  out.rest = c - out.gamma;
  return out;
}

Rational rational_pow(const Rational& r, int k) {
  if (k < 0) {
    if (r == 0) throw std::domain_error("negative power of zero");
    Rational inv = 1 / r;
    return rational_pow(inv, -k);
  }
  Rational acc = 1, base = r;
  unsigned e = static_cast<unsigned>(k);
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

Rational q_integer(int k, const Rational& q) {
  if (q == 1) return Rational(k);
  Rational v = (rational_pow(q, k) - 1) / (q - 1);
  v.canonicalize();
  return v;
}

Rational evaluate(const LaurentPoly& p, const Rational& q) {
  if (q == 0 && !p.is_zero() && p.min_exponent() < 0)
    throw std::domain_error("evaluate: q = 0 with negative exponents");
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) acc += Rational(c) * rational_pow(q, e);
  acc.canonicalize();
  return acc;
}

GaussRatio::GaussRatio(std::vector<int> numerator, std::vector<int> denominator, int sign, int qpower)
    : sign_(sign), qpower_(qpower), num_(std::move(numerator)), den_(std::move(denominator)) {
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("GaussRatio: sign must be +-1");
  auto bad = [](int v) { return v < 1; };
  if (std::any_of(num_.begin(), num_.end(), bad) || std::any_of(den_.begin(), den_.end(), bad))
    throw std::invalid_argument("GaussRatio: entries must be >= 1");
  normalise();
}

void GaussRatio::normalise() {
  std::sort(num_.begin(), num_.end());
  std::sort(den_.begin(), den_.end());
  std::vector<int> n, d;
  std::set_difference(num_.begin(), num_.end(), den_.begin(), den_.end(), std::back_inserter(n));
  std::set_difference(den_.begin(), den_.end(), num_.begin(), num_.end(), std::back_inserter(d));
  num_ = std::move(n);
  den_ = std::move(d);
}

GaussRatio& GaussRatio::operator*=(const GaussRatio& other) {
  sign_ *= other.sign_;
  qpower_ += other.qpower_;
  num_.insert(num_.end(), other.num_.begin(), other.num_.end());
  den_.insert(den_.end(), other.den_.begin(), other.den_.end());
  normalise();
  return *this;
}

GaussRatio& GaussRatio::operator/=(const GaussRatio& other) {
  sign_ *= other.sign_;
  qpower_ -= other.qpower_;
  num_.insert(num_.end(), other.den_.begin(), other.den_.end());
  den_.insert(den_.end(), other.num_.begin(), other.num_.end());
  normalise();
  return *this;
}

Rational GaussRatio::value_at_one() const {
  Integer n = 1, d = 1;
  for (int v : num_) n *= v;
  for (int v : den_) d *= v;
  Rational r(sign_ * n, d);
  r.canonicalize();
  return r;
}

Rational GaussRatio::evaluate(const Rational& q) const {
  Rational acc = sign_ * rational_pow(q, qpower_);
  for (int v : num_) acc *= q_integer(v, q);
  for (int v : den_) {
    Rational d = q_integer(v, q);
    if (d == 0) throw std::domain_error("GaussRatio::evaluate: vanishing denominator");
    acc /= d;
  }
  acc.canonicalize();
  return acc;
}

std::pair<LaurentPoly, LaurentPoly> GaussRatio::expand() const {
  LaurentPoly n = LaurentPoly::monomial(qpower_, sign_), d = 1;
  for (int v : num_) n *= gauss(v);
  for (int v : den_) d *= gauss(v);
  return {n, d};
}

std::string GaussRatio::to_string() const {
  std::ostringstream os;
  if (sign_ < 0) os << '-';
  if (qpower_ != 0) os << "q^" << qpower_ << '*';
  auto list = [&](const std::vector<int>& v) {
    if (v.empty()) {
      os << '1';
      return;
    }
    for (int x : v) os << '[' << x << ']';
  };
  list(num_);
  if (!den_.empty()) {
    os << '/';
    list(den_);
  }
  return os.str();
}

int cyclo_valuation(const GaussRatio& r, int l) {
  if (l < 2) throw std::invalid_argument("cyclo_valuation: l must be >= 2");
  auto count = [l](const std::vector<int>& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [l](int x) { return x % l == 0; }));
  };
  return count(r.numerator()) - count(r.denominator());
}

int padic_valuation(long long n, int p) {
  if (n == 0) throw std::domain_error("padic_valuation of zero");
  if (n < 0) n = -n;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace specfock
