#include "specfock/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "specfock/branching.hpp"
#include "specfock/fock.hpp"
#include "specfock/hecke.hpp"
#include "specfock/llt.hpp"

namespace specfock::cli {

namespace {

using Task = std::function<std::vector<VerifyRow>()>;

std::vector<VerifyRow> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<VerifyRow>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) results[k] = tasks[k]();
  };
  int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<VerifyRow> out;
  for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  return out;
}

VerifyRow row(std::string instance, const std::string& expected, const std::string& got) {
  return {std::move(instance), expected, got, expected == got};
}

std::string lam_text(const Partition& lam) { return "(" + lam.to_string() + ")"; }

int pick(int given, int fallback, int lo, int cap, const char* what) {
  int v = given < 0 ? fallback : given;
  if (v < lo || v > cap)
    throw std::invalid_argument(std::string(what) + " must lie in " + std::to_string(lo) + ".." + std::to_string(cap));
  return v;
}

std::vector<VerifyRow> suite_restriction(const VerifyOptions& o) {
  int max_n = pick(o.max_n, 10, 0, 16, "--max-n");
  int max_l = pick(o.max_l, 8, 2, 16, "--max-l");
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n)
    tasks.push_back([n, max_l] {
      std::vector<VerifyRow> rows;
      for (const auto& lam : partitions_of(n))
        for (const Node& node : lam.removable_nodes()) {
          Partition mu = lam.remove_node(node.row);
          for (int l = 2; l <= max_l; ++l)
            rows.push_back(row(lam_text(lam) + " row=" + std::to_string(node.row) + " l=" + std::to_string(l),
                               std::to_string(n_counts(lam, mu, l).right),
                               std::to_string(restriction_valuation(lam, node.row, l))));
        }
      return rows;
    });
  return run_tasks(tasks, o.jobs);
}

std::vector<VerifyRow> suite_induction(const VerifyOptions& o) {
  int max_n = pick(o.max_n, 10, 0, 16, "--max-n");
  int max_l = pick(o.max_l, 8, 2, 16, "--max-l");
  std::vector<Task> tasks;
  for (int n = 0; n <= max_n; ++n)
    tasks.push_back([n, max_l] {
      std::vector<VerifyRow> rows;
      for (const auto& lam : partitions_of(n))
        for (const Node& node : lam.addable_nodes())
          for (int l = 2; l <= max_l; ++l)
            rows.push_back(row(lam_text(lam) + " row=" + std::to_string(node.row) + " l=" + std::to_string(l),
                               std::to_string(left_count(lam, node.row, l)),
                               std::to_string(induction_scalar(lam, node.row, l).valuation)));
      return rows;
    });
  return run_tasks(tasks, o.jobs);
}

std::vector<VerifyRow> suite_duality(const VerifyOptions& o) {
  int max_n = pick(o.max_n, 14, 0, 20, "--max-n");
  int max_l = pick(o.max_l, 7, 2, 16, "--max-l");
  std::vector<Task> tasks;
  for (int n = 0; n <= max_n; ++n)
    tasks.push_back([n, max_l] {
      std::vector<VerifyRow> rows;
      for (const auto& lam : partitions_of(n))
        for (int l = 2; l <= max_l; ++l)
          rows.push_back(row(lam_text(lam) + " l=" + std::to_string(l),
                             std::to_string(core_and_weight(lam, l).weight),
                             std::to_string(duality_valuation(lam, l))));
      return rows;
    });
  return run_tasks(tasks, o.jobs);
}

std::vector<VerifyRow> suite_weight_identity(const VerifyOptions& o) {
  int max_n = pick(o.max_n, 12, 0, 16, "--max-n");
  int max_l = pick(o.max_l, 6, 2, 16, "--max-l");
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n)
    tasks.push_back([n, max_l] {
      std::vector<VerifyRow> rows;
      for (const auto& lam : partitions_of(n))
        for (const Node& node : lam.removable_nodes()) {
          Partition mu = lam.remove_node(node.row);
          for (int l = 2; l <= max_l; ++l) {
            auto c = n_counts(lam, mu, l);
            rows.push_back(row(lam_text(mu) + "+" + node.to_string() + " l=" + std::to_string(l),
                               std::to_string(-core_and_weight(mu, l).weight),
                               std::to_string(-core_and_weight(lam, l).weight + c.left + c.right)));
          }
        }
      return rows;
    });
  return run_tasks(tasks, o.jobs);
}

std::string qpow_text(int k) { return k == 0 ? "1" : LaurentPoly::monomial(k).to_string(); }

std::vector<VerifyRow> suite_conventions(const VerifyOptions& o) {
  int max_n = pick(o.max_n, 8, 0, 10, "--max-n");
  int max_l = pick(o.max_l, 3, 2, 6, "--max-l");
  std::vector<Task> tasks;
  for (int l = 2; l <= max_l; ++l)
    for (int n = 0; n <= max_n; ++n)
      tasks.push_back([n, l] {
        std::vector<VerifyRow> rows;
        auto right = canonical_basis(n, l, Convention::right);
        auto left = canonical_basis(n, l, Convention::left);
        for (std::size_t k = 0; k < right.columns.size(); ++k) {
          const auto& label = right.columns[k].label;
          int w = l_weight(label, l);
          std::string got = "none";
          LaurentPoly diag = left.columns[k].entries.coeff(label);
          if (diag.is_monomial() && diag.coeff(diag.min_exponent()) == 1) {
            int s = diag.min_exponent();
            if (left.columns[k].entries == LaurentPoly::monomial(s) * right.columns[k].entries) got = qpow_text(s);
          }
          rows.push_back(row("G" + lam_text(label) + " l=" + std::to_string(l), qpow_text(w), got));
        }
        return rows;
      });
  return run_tasks(tasks, o.jobs);
}

std::map<long long, Integer> ones(const std::vector<long long>& support) {
  std::map<long long, Integer> out;
  for (long long s : support) out.emplace(s, 1);
  return out;
}

std::string support_text(const std::map<long long, Integer>& m) {
  std::string s;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (!s.empty()) s += ' ';
    s += std::to_string(it->first) + ":" + it->second.get_str();
  }
  return s;
}

std::vector<VerifyRow> suite_erdmann(const VerifyOptions& o) {
  Sl2Mode mode = parse_mode(o.mode);
  if (mode == Sl2Mode::modified && (o.p == 2 || !is_prime(o.p)))
    throw std::invalid_argument("modified mode needs an odd prime --p");
  if (o.p < 2 || o.p > 97) throw std::invalid_argument("--p must lie in 2..97");
  long long max_m = o.max_m < 0 ? 120 : o.max_m;
  if (max_m > 5000) throw std::invalid_argument("--max-m must lie in 0..5000");
  auto all = tilting_characters_upto(max_m, o.p, mode);
  std::vector<VerifyRow> rows;
  for (long long m = 0; m <= max_m; ++m) {
    auto expect = ones(mode == Sl2Mode::modified ? erdmann_support(m, o.p) : quantum_reflection_support(m, o.p));
    rows.push_back(row("T(" + std::to_string(m) + ") p=" + std::to_string(o.p) + " " + to_string(mode),
                       support_text(expect), support_text(all[m].at_one())));
  }
  return rows;
}

std::vector<VerifyRow> suite_bridge(const VerifyOptions& o) {
  int max_n = pick(o.max_n, 8, 0, 10, "--max-n");
  int max_l = pick(o.max_l, 5, 2, 8, "--max-l");
  std::vector<Task> tasks;
  for (int l = 2; l <= max_l; ++l)
    for (int n = 1; n <= max_n; ++n)
      tasks.push_back([n, l] {
        std::vector<VerifyRow> rows;
        auto tilts = tilting_characters_upto(n, l, Sl2Mode::quantum);
        auto d = canonical_basis(n, l);
        for (const auto& col : d.columns) {
          if (col.label.length() > 2) continue;
          auto t = tilts[col.label.row(1) - col.label.row(2)].at_one();
          std::map<long long, Integer> got;
          for (const auto& [mu, c] : col.entries.terms()) {
            if (mu.length() > 2) continue;
            Integer v = 0;
            for (const auto& [e, a] : c.terms()) v += a;
            if (v != 0) got.emplace(mu.row(1) - mu.row(2), v);
          }
          rows.push_back(row("G" + lam_text(col.label) + " l=" + std::to_string(l), support_text(t), support_text(got)));
        }
        return rows;
      });
  return run_tasks(tasks, o.jobs);
}

std::vector<VerifyRow> suite_hecke(const VerifyOptions& o) {
  if (o.max_rank < 1 || o.max_rank > 6) throw std::invalid_argument("--max-rank must lie in 1..6");
  if (o.specializations < 2 || o.specializations > 8)
    throw std::invalid_argument("--specializations must lie in 2..8");
  HeckeSuiteOptions h;
  h.max_rank = o.max_rank;
  h.seed = o.seed;
  h.specializations = o.specializations;
  h.jobs = o.jobs;
  h.allow_rank6 = o.max_rank == 6;
  std::vector<VerifyRow> rows;
  for (const auto& c : run_hecke_suite(h)) {
    std::string got = c.lhs;
    if (c.qpower) got += " q^" + std::to_string(*c.qpower);
    rows.push_back({c.identity + " " + c.lambda + " row=" + std::to_string(c.row) +
                        " q=" + c.q,
                    c.rhs, got, c.pass});
  }
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

int jobs_default() {
  const char* env = std::getenv("SPECFOCK_JOBS");
  if (!env || !*env) return 1;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used == std::string(env).size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("SPECFOCK_JOBS must be a positive integer");
}

struct FockOp {
  char kind = 'f';
  int i = 0;
  int power = 1;
};

std::vector<FockOp> parse_ops(const std::string& text, int l) {
  std::vector<FockOp> ops;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    FockOp op;
    if (tok.size() < 2 || (tok[0] != 'f' && tok[0] != 'e')) throw std::invalid_argument("bad operator '" + tok + "'");
    op.kind = tok[0];
    std::string rest = tok.substr(1);
    std::string pw;
    if (auto caret = rest.find('^'); caret != std::string::npos) {
      pw = rest.substr(caret + 1);
      rest = rest.substr(0, caret);
      if (op.kind != 'f') throw std::invalid_argument("divided powers are only available for f: '" + tok + "'");
    }
    auto number = [&](const std::string& s) {
      if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("bad operator '" + tok + "'");
      return std::stoi(s);
    };
    op.i = number(rest);
    if (!pw.empty()) op.power = number(pw);
    if (op.i >= l) throw std::invalid_argument("residue out of range in '" + tok + "'");
    if (op.power < 1 || op.power > 64) throw std::invalid_argument("bad power in '" + tok + "'");
    ops.push_back(op);
  }
  return ops;
}

Convention parse_convention(const std::string& s) {
  if (s == "right") return Convention::right;
  if (s == "left") return Convention::left;
  throw std::invalid_argument("convention must be right or left");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm1", "thm3", "duality", "eq13", "eq5", "hecke", "erdmann", "bridge"};
  return names;
}

std::vector<VerifyRow> run_suite(const std::string& suite, const VerifyOptions& options) {
  if (options.jobs < 1 || options.jobs > 256) throw std::invalid_argument("--jobs must lie in 1..256");
  if (suite == "thm1") return suite_restriction(options);
  if (suite == "thm3") return suite_induction(options);
  if (suite == "duality") return suite_duality(options);
  if (suite == "eq13") return suite_weight_identity(options);
  if (suite == "eq5") return suite_conventions(options);
  if (suite == "hecke") return suite_hecke(options);
  if (suite == "erdmann") return suite_erdmann(options);
  if (suite == "bridge") return suite_bridge(options);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::string verify_csv(const std::string& suite, const std::vector<VerifyRow>& rows) {
  std::string out = "suite,instance,expected,got,pass\n";
  for (const auto& r : rows)
    out += suite + "," + csv_field(r.instance) + "," + csv_field(r.expected) + "," + csv_field(r.got) + "," +
           (r.pass ? "1" : "0") + "\n";
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded branching, Fock space and tilting computations", "specfock"};
  app.require_subcommand(1);

  auto* decomp = app.add_subcommand("decomp", "Canonical basis columns of the level-one Fock space");
  int d_n = 0, d_l = 2;
  std::string d_format = "json", d_conv = "right";
  decomp->add_option("--n", d_n, "size of the partitions")->required();
  decomp->add_option("--l", d_l, "order of the root of unity")->default_val(2);
  decomp->add_option("--format", d_format)->check(CLI::IsMember({"json", "csv", "latex"}))->default_val("json");
  decomp->add_option("--convention", d_conv)->check(CLI::IsMember({"right", "left"}))->default_val("right");

  long long t_m = 0;
  int t_p = 3;
  std::string t_mode = "modified", t_format = "json";
  auto* tilt = app.add_subcommand("tilt", "Graded SL2 tilting character T(m)");
  tilt->add_option("--p", t_p, "prime (modified) or order of the root of unity (quantum)")->default_val(3);
  tilt->add_option("--m", t_m, "highest weight")->required();
  tilt->add_option("--mode", t_mode)->check(CLI::IsMember({"modified", "quantum"}))->default_val("modified");
  tilt->add_option("--format", t_format)
      ->check(CLI::IsMember({"json", "picture-text", "picture-svg"}))
      ->default_val("json");

  auto* picture = app.add_subcommand("picture", "Alcove picture of T(m)");
  std::string pic_format = "text";
  picture->add_option("--p", t_p)->default_val(3);
  picture->add_option("--m", t_m)->required();
  picture->add_option("--mode", t_mode)->check(CLI::IsMember({"modified", "quantum"}))->default_val("modified");
  picture->add_option("--format", pic_format)->check(CLI::IsMember({"text", "svg"}))->default_val("text");

  auto* fock = app.add_subcommand("fock", "Fock space operators");
  fock->require_subcommand(1);
  auto* apply = fock->add_subcommand("apply", "Apply f_i / e_i in order, left to right");
  int f_l = 2;
  std::string f_ops, f_start, f_format = "text", f_conv = "right";
  apply->add_option("--l", f_l)->required();
  apply->add_option("--ops", f_ops, "e.g. \"f0 f3 e1\"; f1^2 is a divided power")->required();
  apply->add_option("--start", f_start, "partition, e.g. 2,1 (empty for the empty partition)")->default_val("");
  apply->add_option("--format", f_format)->check(CLI::IsMember({"text", "json"}))->default_val("text");
  apply->add_option("--convention", f_conv)->check(CLI::IsMember({"right", "left"}))->default_val("right");

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a CSV report");
  std::string suite;
  VerifyOptions vo;
  std::optional<int> v_jobs;
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", vo.max_n);
  verify->add_option("--max-l", vo.max_l);
  verify->add_option("--p", vo.p)->default_val(3);
  verify->add_option("--max-m", vo.max_m);
  verify->add_option("--mode", vo.mode)->check(CLI::IsMember({"modified", "quantum"}))->default_val("modified");
  verify->add_option("--max-rank", vo.max_rank)->default_val(5);
  verify->add_option("--seed", vo.seed)->default_val(7);
  verify->add_option("--specializations", vo.specializations)->default_val(3);
  verify->add_option("--jobs", v_jobs, "worker threads (default SPECFOCK_JOBS or 1)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*decomp) {
      if (d_n < 0 || d_n > 16) throw std::invalid_argument("--n must lie in 0..16");
      if (d_l < 2 || d_l > 16) throw std::invalid_argument("--l must lie in 2..16");
      auto d = canonical_basis(d_n, d_l, parse_convention(d_conv));
      if (d_format == "json") out << d.to_json().dump(2) << "\n";
      else if (d_format == "csv") out << d.to_csv();
      else out << d.to_latex();
      return 0;
    }
    if (*tilt || *picture) {
      Sl2Mode mode = parse_mode(t_mode);
      if (mode == Sl2Mode::modified && t_p == 2) throw std::invalid_argument("modified mode needs p != 2");
      if (mode == Sl2Mode::modified && !is_prime(t_p)) throw std::invalid_argument("modified mode needs an odd prime --p");
      if (t_p < 2 || t_p > 97) throw std::invalid_argument("--p must lie in 2..97");
      if (t_m < 0 || t_m > 5000) throw std::invalid_argument("--m must lie in 0..5000");
      auto t = tilting_character(t_m, t_p, mode);
      std::string format = *picture ? "picture-" + pic_format : t_format;
      if (format == "json") out << t.to_json().dump(2) << "\n";
      else if (format == "picture-text") out << render_alcove_picture(t, PictureFormat::text);
      else out << render_alcove_picture(t, PictureFormat::svg);
      return 0;
    }
    if (*fock) {
      if (f_l < 2 || f_l > 64) throw std::invalid_argument("--l must lie in 2..64");
      Partition start = Partition::parse(f_start);
      Convention conv = parse_convention(f_conv);
      FockVector v = FockVector::basis(start);
      for (const auto& op : parse_ops(f_ops, f_l)) {
        if (op.kind == 'e') v = apply_e(v, op.i, f_l, conv);
        else if (op.power == 1) v = apply_f(v, op.i, f_l, conv);
        else v = divided_power_f(v, op.i, op.power, f_l, conv);
      }
      if (f_format == "json") out << v.to_json().dump(2) << "\n";
      else out << v.to_string() << "\n";
      return 0;
    }
    if (*verify) {
      vo.jobs = v_jobs ? *v_jobs : jobs_default();
      auto rows = run_suite(suite, vo);
      out << verify_csv(suite, rows);
      auto failed = std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.pass; });
      err << suite << ": " << rows.size() << " checks, " << failed << " failed\n";
      return failed == 0 ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace specfock::cli
