#include "specfock/fock.hpp"

#include <sstream>
#include <stdexcept>

namespace specfock {

namespace {

void check_residue(int i, int l) {
  if (l < 2) throw std::invalid_argument("l must be >= 2");
  if (i < 0 || i >= l) throw std::invalid_argument("residue out of range");
}

}  // namespace

FockVector FockVector::basis(const Partition& lambda, const LaurentPoly& c) {
  FockVector v;
  v.add(lambda, c);
  return v;
}

LaurentPoly FockVector::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add(const Partition& lambda, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

FockVector& FockVector::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

nlohmann::ordered_json FockVector::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    nlohmann::ordered_json e;
    e["partition"] = it->first.to_string();
    e["coeff"] = it->second.to_string();
    arr.push_back(std::move(e));
  }
  return arr;
}

FockVector FockVector::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("FockVector JSON must be an array");
  FockVector v;
  for (const auto& e : j) {
    v.add(Partition::parse(e.at("partition").get<std::string>()),
          LaurentPoly::parse(e.at("coeff").get<std::string>()));
  }
  return v;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.to_string() << ")|" << it->first.to_string() << '>';
  }
  return os.str();
}

FockVector apply_f(const FockVector& v, int i, int l, Convention conv) {
  check_residue(i, l);
  FockVector out;
  for (const auto& [lambda, c] : v.terms()) {
    for (const Node& n : node_lists(lambda, i, l).addable) {
      Partition mu = lambda.add_node(n.row);
      NCounts nc = n_counts(mu, lambda, l);
      int e = conv == Convention::right ? nc.right : -nc.left;
      out.add(mu, c.shifted(e));
    }
  }
  return out;
}

FockVector apply_e(const FockVector& v, int i, int l, Convention conv) {
  check_residue(i, l);
  FockVector out;
  for (const auto& [mu, c] : v.terms()) {
    for (const Node& n : node_lists(mu, i, l).removable) {
      Partition lambda = mu.remove_node(n.row);
      NCounts nc = n_counts(mu, lambda, l);
      int e = conv == Convention::right ? -nc.left : nc.right;
      out.add(lambda, c.shifted(e));
    }
  }
  return out;
}

FockVector divided_power_f(const FockVector& v, int i, int k, int l, Convention conv) {
  if (k < 1) throw std::invalid_argument("divided power needs k >= 1");
  FockVector w = v;
  for (int j = 0; j < k; ++j) w = apply_f(w, i, l, conv);
  if (k == 1) return w;
  const LaurentPoly fact = balanced_factorial(k);
  FockVector out;
  for (const auto& [p, c] : w.terms()) {
    auto d = c.exact_divide(fact);
    if (!d) throw std::logic_error("divided power: coefficient of |" + p.to_string() + "> not divisible by [" +
                                   std::to_string(k) + "]!");
    out.add(p, *d);
  }
  return out;
}

int l_weight(const Partition& lambda, int l) {
  int w = 0;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.row(r); ++c)
      if (hook_length(lambda, {r, c}) % l == 0) ++w;
  return w;
}

FockVector phi_rescale(const FockVector& v, int l, int power) {
  FockVector out;
  for (const auto& [p, c] : v.terms()) out.add(p, c.shifted(power * l_weight(p, l)));
  return out;
}

}  // namespace specfock
