#include "specfock/llt.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace specfock {

namespace {

std::string latex_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Integer mag = abs(c);
    if (!first || c < 0) os << (c < 0 ? (first ? "-" : " - ") : " + ");
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'q';
    if (e != 1) os << "^{" << e << '}';
  }
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Partition two_row(long long a, long long b) {
  std::vector<int> parts;
  if (a > 0) parts.push_back(static_cast<int>(a));
  if (b > 0) parts.push_back(static_cast<int>(b));
  return Partition(std::move(parts));
}

// Exponent k of a label coefficient q^k; anything else means the ladder construction went wrong.
int label_unit(const FockVector& v, const Partition& label) {
  LaurentPoly c = v.coeff(label);
  if (!c.is_monomial() || c.coeff(c.min_exponent()) != 1)
    throw std::logic_error("ladder monomial of " + label.to_string() + " has label coefficient " + c.to_string());
  return c.min_exponent();
}

}  // namespace

const CanonicalColumn& DecompositionMatrix::column(const Partition& label) const {
  for (const auto& c : columns)
    if (c.label == label) return c;
  throw std::out_of_range("no column labelled " + label.to_string());
}

std::vector<Partition> DecompositionMatrix::rows() const {
  std::vector<Partition> all = partitions_of(n);
  std::vector<Partition> out;
  for (const auto& p : all) {
    bool used = std::any_of(columns.begin(), columns.end(),
                            [&](const CanonicalColumn& c) { return !c.entries.coeff(p).is_zero(); });
    if (used) out.push_back(p);
  }
  return out;
}

nlohmann::ordered_json DecompositionMatrix::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["l"] = l;
  j["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : columns) {
    nlohmann::ordered_json col;
    col["label"] = c.label.to_string();
    col["entries"] = nlohmann::ordered_json::array();
    for (auto it = c.entries.terms().rbegin(); it != c.entries.terms().rend(); ++it) {
      nlohmann::ordered_json e;
      e["partition"] = it->first.to_string();
      e["poly"] = it->second.to_string();
      col["entries"].push_back(std::move(e));
    }
    j["columns"].push_back(std::move(col));
  }
  return j;
}

std::string DecompositionMatrix::to_csv() const {
  std::ostringstream os;
  os << "partition";
  for (const auto& c : columns) os << ',' << csv_field(c.label.to_string());
  os << '\n';
  for (const auto& r : rows()) {
    os << csv_field(r.to_string());
    for (const auto& c : columns) os << ',' << c.entries.coeff(r).to_string();
    os << '\n';
  }
  return os.str();
}

std::string DecompositionMatrix::to_latex() const {
  std::ostringstream os;
  os << "\\begin{tabular}{l|" << std::string(columns.size(), 'c') << "}\n";
  auto shape = [](const Partition& p) { return "$(" + (p.empty() ? std::string("\\emptyset") : p.to_string()) + ")$"; };
  for (const auto& c : columns) os << " & " << shape(c.label);
  os << " \\\\\n\\hline\n";
  for (const auto& r : rows()) {
    os << shape(r);
    for (const auto& c : columns) os << " & $" << latex_poly(c.entries.coeff(r)) << '$';
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

FockVector first_approximation(const Partition& lambda, int l, Convention conv) {
  if (l < 2) throw std::invalid_argument("l must be >= 2");
  if (!is_l_regular(lambda, l)) throw std::invalid_argument(lambda.to_string() + " is not " + std::to_string(l) + "-regular");
  // Ladder of (r, c) is r + (l-1)(c-1); all its nodes share residue 1 - ladder mod l.
  std::map<int, int> ladder_sizes;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.row(r); ++c) ++ladder_sizes[r + (l - 1) * (c - 1)];
  FockVector v = FockVector::basis(Partition());
  for (const auto& [ladder, count] : ladder_sizes) {
    int i = ((1 - ladder) % l + l) % l;
    v = divided_power_f(v, i, count, l, conv);
  }
  label_unit(v, lambda);
  return v;
}

DecompositionMatrix canonical_basis(int n, int l, Convention conv) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (l < 2) throw std::invalid_argument("l must be >= 2");
  DecompositionMatrix out;
  out.n = n;
  out.l = l;
  std::map<Partition, std::pair<FockVector, int>> done;
  const std::vector<Partition> all = partitions_of(n);
  for (auto pit = all.rbegin(); pit != all.rend(); ++pit) {
    const Partition& lambda = *pit;
    if (!is_l_regular(lambda, l)) continue;
    FockVector v = first_approximation(lambda, l, conv);
    const int k = label_unit(v, lambda);
    if (!v.terms().empty() && v.terms().rbegin()->first != lambda)
      throw std::logic_error("ladder monomial of " + lambda.to_string() + " reaches above its label");
    Partition key = lambda;
    while (true) {
      auto it = v.terms().lower_bound(key);
      if (it == v.terms().begin()) break;
      --it;
      key = it->first;
      LaurentPoly rel = it->second.shifted(-k);
      if (rel.in_positive_part()) continue;
      auto found = done.find(key);
      if (found == done.end())
        throw std::logic_error("straightening " + lambda.to_string() + " needs a column for non-regular " + key.to_string());
      LaurentPoly gamma = bar_symmetric_split(rel).gamma;
      const auto& [column, kmu] = found->second;
      v -= gamma.shifted(k - kmu) * column;
    }
    done.emplace(lambda, std::make_pair(v, k));
    out.columns.push_back({lambda, v});
  }
  std::reverse(out.columns.begin(), out.columns.end());
  return out;
}

int erdmann_multiplicity(long long m, long long s, int p) {
  if (p == 2) throw std::invalid_argument("Erdmann's formula needs p != 2");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (s < 0 || s > m) throw std::invalid_argument("need 0 <= s <= m");
  if ((m - s) % 2 != 0) return 0;
  return contains(m + 1, (m - s) / 2, p) ? 1 : 0;
}

std::vector<long long> erdmann_support(long long m, int p) {
  std::vector<long long> out;
  for (long long s = m; s >= 0; s -= 2)
    if (erdmann_multiplicity(m, s, p)) out.push_back(s);
  return out;
}

Sl2Mode parse_mode(const std::string& text) {
  if (text == "quantum") return Sl2Mode::quantum;
  if (text == "modified") return Sl2Mode::modified;
  throw std::invalid_argument("unknown mode '" + text + "' (expected quantum or modified)");
}

std::string to_string(Sl2Mode mode) { return mode == Sl2Mode::quantum ? "quantum" : "modified"; }

FockVector sl2_step(const FockVector& state, int i, Sl2Mode mode, int l) {
  if (l < 2) throw std::invalid_argument("l must be >= 2");
  if (mode == Sl2Mode::modified && !is_prime(l)) throw std::invalid_argument("modified mode needs a prime");
  if (i < 0 || i >= l) throw std::invalid_argument("residue out of range");
  auto mod = [l](long long x) { return static_cast<int>(((x % l) + l) % l); };
  FockVector out;
  for (const auto& [lambda, c] : state.terms()) {
    if (lambda.length() > 2) throw std::invalid_argument("sl2_step needs two-row partitions");
    const int a = lambda.row(1), b = lambda.row(2);
    if (mod(a) == i) out.add(two_row(a + 1, b), c);
    if (b < a && mod(b - 1) == i) {
      const int m = a - b;
      int e = mode == Sl2Mode::quantum ? ((m + 1) % l == 0) - (m % l == 0)
                                       : padic_valuation(m + 1, l) - padic_valuation(m, l);
      out.add(two_row(a, b + 1), c.shifted(e));
    }
  }
  return out;
}

std::map<long long, Integer> TiltingCharacter::at_one() const {
  std::map<long long, Integer> out;
  for (const auto& [w, c] : entries) {
    Integer v = 0;
    for (const auto& [e, a] : c.terms()) v += a;
    if (v != 0) out.emplace(w, v);
  }
  return out;
}

nlohmann::ordered_json TiltingCharacter::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["mode"] = to_string(mode);
  j["m"] = top;
  j["entries"] = nlohmann::ordered_json::array();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    nlohmann::ordered_json e;
    e["weight"] = it->first;
    e["poly"] = it->second.to_string();
    j["entries"].push_back(std::move(e));
  }
  j["subtractions"] = nlohmann::ordered_json::array();
  for (const auto& ev : events) {
    nlohmann::ordered_json e;
    e["weight"] = ev.weight;
    e["gamma"] = ev.gamma.to_string();
    j["subtractions"].push_back(std::move(e));
  }
  return j;
}

namespace {

using WeightMap = std::map<long long, LaurentPoly>;

FockVector to_state(const WeightMap& w, long long size) {
  FockVector v;
  for (const auto& [s, c] : w) {
    v.add(two_row((size + s) / 2, (size - s) / 2), c);
  }
  return v;
}

WeightMap to_weights(const FockVector& v) {
  WeightMap w;
  for (const auto& [lambda, c] : v.terms()) w[lambda.row(1) - lambda.row(2)] += c;
  return w;
}

WeightMap step(const WeightMap& w, long long size, int i, Sl2Mode mode, int p) {
  return to_weights(sl2_step(to_state(w, size), i, mode, p));
}

}  // namespace

std::vector<TiltingCharacter> tilting_characters_upto(long long m, int p, Sl2Mode mode) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (mode == Sl2Mode::modified) {
    if (p == 2) throw std::invalid_argument("the modified algorithm needs p != 2");
    if (!is_prime(p)) throw std::invalid_argument("the modified algorithm needs a prime p");
  } else if (p < 2) {
    throw std::invalid_argument("l must be >= 2");
  }
  std::vector<TiltingCharacter> all;
  all.reserve(m + 1);
  for (long long k = 0; k <= m; ++k) {
    TiltingCharacter t;
    t.p = p;
    t.mode = mode;
    t.top = k;
    WeightMap w;
    if (k <= p - 2) {
      w[k] = 1;
    } else if (k % p == 0) {
      // Through the wall: two steps up from T(k-2).
      w = step(all[k - 2].entries, k - 2, static_cast<int>((k - 2) % p), mode, p);
      w = step(w, k - 1, static_cast<int>((k - 1) % p), mode, p);
    } else {
      w = step(all[k - 1].entries, k - 1, static_cast<int>((k - 1) % p), mode, p);
    }
    if (w[k] != LaurentPoly(1)) throw std::logic_error("tilting induction lost its top weight at " + std::to_string(k));
    long long key = k;
    while (true) {
      auto it = w.lower_bound(key);
      if (it == w.begin()) break;
      --it;
      key = it->first;
      if (it->second.is_zero() || it->second.min_exponent() >= 1) continue;
      LaurentPoly gamma = bar_symmetric_split(it->second).gamma;
      for (const auto& [s, c] : all[key].entries) w[s] -= gamma * c;
      t.events.push_back({key, gamma});
    }
    for (auto& [s, c] : w)
      if (!c.is_zero()) t.entries.emplace(s, std::move(c));
    all.push_back(std::move(t));
  }
  return all;
}

TiltingCharacter tilting_character(long long m, int p, Sl2Mode mode) {
  return tilting_characters_upto(m, p, mode).back();
}

std::vector<long long> quantum_reflection_support(long long m, int l) {
  std::vector<long long> out{m};
  long long r = (m + 1) % l;
  if (r != 0 && m - 2 * r >= 0) out.push_back(m - 2 * r);
  return out;
}

std::string render_alcove_picture(const TiltingCharacter& t, PictureFormat format) {
  const long long lo = -1, hi = t.top + 1;
  const long long p = t.p;
  // Wall order of weight w: the largest k with p^k | w+1 (capped by the range).
  int max_order = 0;
  for (long long pk = p; pk <= hi + 1; pk *= p) ++max_order;
  auto order = [&](long long w) {
    int k = 0;
    for (long long pk = p; k < max_order && (w + 1) % pk == 0; pk *= p) ++k;
    return k;
  };
  std::vector<std::pair<long long, std::string>> dots;
  for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it) dots.emplace_back(it->first, it->second.to_string());

  std::string power_name = t.mode == Sl2Mode::quantum ? "l" : "p";
  if (format == PictureFormat::text) {
    std::size_t cw = 2;
    for (const auto& d : dots) cw = std::max(cw, d.second.size() + 1);
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1) * cw;
    auto col = [&](long long w) { return static_cast<std::size_t>(w - lo) * cw; };
    std::string labels(width, ' '), axis(width, '-');
    for (long long w = lo; w <= hi; ++w) axis[col(w)] = '+';
    for (const auto& [w, label] : dots) {
      axis[col(w)] = 'o';
      labels.replace(col(w), label.size(), label);
    }
    std::ostringstream os;
    os << labels.substr(0, labels.find_last_not_of(' ') + 1) << '\n' << axis << '\n';
    for (int k = 1; k <= max_order; ++k) {
      std::string ticks(width, ' ');
      for (long long w = lo; w <= hi; ++w)
        if (order(w) >= k) ticks[col(w)] = '|';
      os << ticks.substr(0, ticks.find_last_not_of(' ') + 1) << '\n';
    }
    os << power_name << '=' << p << " m=" << t.top << " mode=" << to_string(t.mode) << '\n';
    os << "walls:";
    long long pk = p;
    for (int k = 1; k <= max_order; ++k, pk *= p) os << ' ' << power_name << '^' << k << "-1=" << pk - 1;
    os << '\n' << "dots:";
    for (const auto& [w, label] : dots) os << ' ' << w << ':' << label;
    os << '\n';
    return os.str();
  }
  if (format != PictureFormat::svg) throw std::invalid_argument("unknown picture format");
  const int step = 12, margin = 30, base = 70;
  const long long width = (hi - lo) * step + 2 * margin;
  auto x = [&](long long w) { return margin + (w - lo) * step; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << base + 40
     << "\" font-family=\"monospace\" font-size=\"10\">\n";
  os << "  <line x1=\"" << x(lo) << "\" y1=\"" << base << "\" x2=\"" << x(hi) << "\" y2=\"" << base
     << "\" stroke=\"black\"/>\n";
  for (long long w = lo; w <= hi; ++w) {
    int h = 3 + 5 * order(w);
    os << "  <line x1=\"" << x(w) << "\" y1=\"" << base - h << "\" x2=\"" << x(w) << "\" y2=\"" << base + h
       << "\" stroke=\"black\" stroke-width=\"" << (order(w) > 0 ? 1.5 : 0.5) << "\"/>\n";
  }
  os << "  <text x=\"" << x(lo) << "\" y=\"" << base + 35 << "\" text-anchor=\"middle\">-1</text>\n";
  for (const auto& [w, label] : dots) {
    os << "  <circle cx=\"" << x(w) << "\" cy=\"" << base << "\" r=\"3\" data-weight=\"" << w << "\" data-label=\""
       << label << "\"/>\n";
    os << "  <text x=\"" << x(w) << "\" y=\"" << base - 22 << "\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace specfock
