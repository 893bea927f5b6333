#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "specfock/laurent.hpp"
#include "specfock/partitions.hpp"

namespace specfock {

/// Finitely supported sum of |partition> with Laurent coefficients.
class FockVector {
 public:
  using TermMap = std::map<Partition, LaurentPoly>;

  FockVector() = default;
  static FockVector basis(const Partition& lambda, const LaurentPoly& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(const Partition& lambda) const;
  void add(const Partition& lambda, const LaurentPoly& c);

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(const LaurentPoly& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const LaurentPoly& c, FockVector v) { return v *= c; }
  friend bool operator==(const FockVector&, const FockVector&) = default;

  /// Array of {partition, coeff}, most dominant partition first.
  nlohmann::ordered_json to_json() const;
  static FockVector from_json(const nlohmann::json& j);
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Which side's node count grades the operators.
enum class Convention { right, left };

/// f_i: add one i-node. Right weights by q^{N^r}, left by q^{-N^l}.
FockVector apply_f(const FockVector& v, int i, int l, Convention conv = Convention::right);
/// e_i: remove one i-node. Right (the default action) weights by q^{-N^l}, left by q^{N^r}.
FockVector apply_e(const FockVector& v, int i, int l, Convention conv = Convention::right);
/// f_i^k divided by the symmetric quantum factorial, with the division asserted exact.
FockVector divided_power_f(const FockVector& v, int i, int k, int l, Convention conv = Convention::right);
/// |lambda> -> q^{power * l-weight(lambda)} |lambda>.
FockVector phi_rescale(const FockVector& v, int l, int power = 1);

/// l-weight as the number of hooks divisible by l.
int l_weight(const Partition& lambda, int l);

}  // namespace specfock
