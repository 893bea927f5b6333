#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "specfock/fock.hpp"

namespace specfock {

struct CanonicalColumn {
  Partition label;
  FockVector entries;
};

struct DecompositionMatrix {
  int n = 0;
  int l = 2;
  std::vector<CanonicalColumn> columns;  // most dominant label first

  const CanonicalColumn& column(const Partition& label) const;
  /// Union of the supports, most dominant first.
  std::vector<Partition> rows() const;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
  std::string to_latex() const;
};

/// Ladder monomial: divided powers ladder by ladder applied to the empty partition.
FockVector first_approximation(const Partition& lambda, int l, Convention conv = Convention::right);
/// Canonical basis columns for all l-regular partitions of n, by straightening.
DecompositionMatrix canonical_basis(int n, int l, Convention conv = Convention::right);

/// 1 iff m+1 contains (m-s)/2 in base p; p odd prime.
int erdmann_multiplicity(long long m, long long s, int p);
/// Weights s with nonzero Erdmann multiplicity, descending.
std::vector<long long> erdmann_support(long long m, int p);

enum class Sl2Mode { quantum, modified };
Sl2Mode parse_mode(const std::string& text);
std::string to_string(Sl2Mode mode);

/// f_i on two-row partitions, dropping anything with a third row.
/// Second-row additions are graded by q^E with E from the (l | .) indicator (quantum)
/// or from nu_p((m+1)/m) (modified), m = lambda_1 - lambda_2 before the addition.
FockVector sl2_step(const FockVector& state, int i, Sl2Mode mode, int l);

struct SubtractionEvent {
  long long weight = 0;
  LaurentPoly gamma;
  friend bool operator==(const SubtractionEvent&, const SubtractionEvent&) = default;
};

struct TiltingCharacter {
  int p = 3;
  Sl2Mode mode = Sl2Mode::modified;
  long long top = 0;
  std::map<long long, LaurentPoly> entries;  // weight -> graded multiplicity
  std::vector<SubtractionEvent> events;      // subtractions made while straightening T(top)

  /// Multiplicities at q = 1.
  std::map<long long, Integer> at_one() const;
  nlohmann::ordered_json to_json() const;
};

/// Builds T(0..m) inductively and returns T(m).
TiltingCharacter tilting_character(long long m, int p, Sl2Mode mode);
/// All of T(0..m) from one induction.
std::vector<TiltingCharacter> tilting_characters_upto(long long m, int p, Sl2Mode mode);

/// Support of quantum T(m) at q = 1 from the one-wall reflection rule.
std::vector<long long> quantum_reflection_support(long long m, int l);

enum class PictureFormat { text, svg };
std::string render_alcove_picture(const TiltingCharacter& t, PictureFormat format);

}  // namespace specfock
