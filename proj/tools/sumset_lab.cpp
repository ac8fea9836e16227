#include "sumsetlab/report.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

using namespace sumsetlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  std::string set_text;
  std::string corpus_path;
  long long n = -1;
  long long n_max = -1;
  std::string format = "table";
  std::string out_path;
  long long budget_points = 10'000'000;
  long long budget_range = 10'000'000;
  std::string verify_target;
};

struct EntryResult {
  std::string table;
  Json json;
  bool counterexample = false;
};

long long thread_cap() {
  long long cap = static_cast<long long>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("SUMSET_LAB_THREADS")) {
    try {
      long long v = std::stoll(env);
      if (v >= 1) cap = std::min(cap, v);
    } catch (const std::exception&) {
    }
  }
  return cap;
}

std::vector<ParsedSet> gather_inputs(const RunConfig& cfg) {
  if (!cfg.set_text.empty() && !cfg.corpus_path.empty())
    throw std::invalid_argument("--set and --corpus are mutually exclusive");
  if (!cfg.set_text.empty()) return {parse_set(cfg.set_text)};
  if (cfg.corpus_path.empty()) throw std::invalid_argument("one of --set or --corpus is required");
  std::ifstream in(cfg.corpus_path);
  if (!in) throw std::invalid_argument("cannot open corpus file: " + cfg.corpus_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

// Runs `work` over all corpus entries, preserving order. Exceptions propagate
// from the first failing entry.
std::vector<EntryResult> run_entries(const std::vector<ParsedSet>& inputs,
                                     const std::function<EntryResult(const ParsedSet&)>& work) {
  std::vector<EntryResult> results(inputs.size());
  std::vector<std::exception_ptr> errors(inputs.size());
  const long long nthreads =
      std::min<long long>(thread_cap(), static_cast<long long>(inputs.size()));
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = work(inputs[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (long long t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= inputs.size()) return;
        try {
          results[i] = work(inputs[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (std::thread& t : pool) t.join();
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
  return results;
}

int emit(const RunConfig& cfg, const std::vector<EntryResult>& results, bool single) {
  std::string text;
  if (cfg.format == "json") {
    if (single) {
      text = dump(results.front().json);
    } else {
      Json arr = Json::array();
      for (const EntryResult& r : results) arr.push_back(r.json);
      text = dump(arr);
    }
  } else {
    for (const EntryResult& r : results) text += r.table;
  }
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
    out << text;
  } else {
    std::cout << text;
  }
  for (const EntryResult& r : results)
    if (r.counterexample) return kExitCounterexample;
  return kExitOk;
}

StampSet1D as_1d(const ParsedSet& s) {
  if (!s.is_1d()) throw std::invalid_argument("expected a 1D set literal");
  return normalize(s.raw_1d());
}

VectorSetND as_nd(const ParsedSet& s) {
  if (s.is_1d()) throw std::invalid_argument("expected a vector set literal");
  return validate_lattice(s.raw_nd());
}

std::string list_str(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

EntryResult do_sumset(const RunConfig& cfg, const ParsedSet& input) {
  EntryResult r;
  if (input.is_1d()) {
    StampSet1D a = as_1d(input);
    Sumset1D s = sumset_1d(a, cfg.n, Budget1D{cfg.budget_range});
    r.json = json_sumset_1d(a, s);
    r.table = list_str(s.members.to_list()) + "\n";
  } else {
    VectorSetND a = as_nd(input);
    SumsetImageND s = sumset_nd(a, cfg.n, BudgetND{cfg.budget_points});
    r.json = json_sumset_nd(a, s);
    r.table = set_literal_nd(s.points) + "\n";
  }
  return r;
}

EntryResult do_exceptional(const RunConfig& cfg, const ParsedSet& input) {
  EntryResult r;
  if (input.is_1d()) {
    StampSet1D a = as_1d(input);
    ExceptionalSet1D e = exceptional_set_1d(a);
    r.json = json_exceptional_1d(a, e);
    r.table = "{" + list_str(e.members) + "} frobenius=" +
              (e.frobenius ? std::to_string(*e.frobenius) : std::string("none")) + "\n";
  } else {
    VectorSetND a = as_nd(input);
    long long n = cfg.n >= 0 ? cfg.n : 10;
    ENSlice slice = e_n_slice(a, n, BudgetND{cfg.budget_points});
    Json j;
    j["set"] = json_set_nd(a.points);
    j["dim"] = a.dim;
    j["n"] = slice.n_copies;
    j["result"] = json_set_nd(slice.points);
    r.json = j;
    r.table = set_literal_nd(slice.points) + "\n";
  }
  return r;
}

EntryResult do_profile(const RunConfig&, const ParsedSet& input) {
  StampSet1D a = as_1d(input);
  ResidueProfile p = residue_profile(a);
  EntryResult r;
  r.json = json_profile(a, p);
  std::ostringstream t;
  t << "a\tn_aA\tN_aA\tNstar_num\tthreshold\n";
  for (const ResidueRow& row : p.rows)
    t << row.a << "\t" << row.n_aA << "\t" << row.N_aA << "\t" << row.nstar_num << "\t"
      << row.threshold << "\n";
  r.table = t.str();
  return r;
}

EntryResult do_threshold(const RunConfig&, const ParsedSet& input) {
  StampSet1D a = as_1d(input);
  long long t = threshold(a);
  EntryResult r;
  r.json = json_threshold(a, t);
  r.table = std::to_string(t) + "\n";
  return r;
}

EntryResult do_decompose(const RunConfig& cfg, const ParsedSet& input) {
  VectorSetND a = as_nd(input);
  StructuredExceptionalSet s = structure_decompose(a, BudgetND{cfg.budget_points});
  EntryResult r;
  r.json = json_decomposition(a, s);
  std::ostringstream t;
  for (const ExceptionalPiece& p : s.pieces)
    t << "(" << list_str(p.v) << ") + P{" << set_literal_nd(p.b) << "}\n";
  r.table = t.str();
  return r;
}

EntryResult do_khovanskii(const RunConfig& cfg, const ParsedSet& input) {
  VectorSetND a = as_nd(input);
  long long n_max = cfg.n_max >= 1 ? cfg.n_max : 12;
  KhovanskiiFit fit = khovanskii_fit(a, n_max, BudgetND{cfg.budget_points});
  EntryResult r;
  r.json = json_khovanskii(a, fit);
  std::ostringstream t;
  t << "counts " << list_str(fit.counts) << "\n";
  if (fit.onset) {
    t << "onset " << *fit.onset << " leading " << rat_str(fit.leading) << " coefficients";
    for (const Rat& c : fit.coefficients) t << " " << rat_str(c);
    t << "\n";
  } else {
    t << "no stabilization by " << n_max << "\n";
  }
  r.table = t.str();
  return r;
}

EntryResult verify_1d_thresholded(const RunConfig&, const ParsedSet& input, bool per_residue) {
  StampSet1D a = as_1d(input);
  EntryResult r;
  long long t = threshold(a);
  const long long cap = 2 * (a.b() / 2);
  bool ok = t <= std::max<long long>(1, cap);
  // Re-check the global statement just past the reported threshold.
  for (long long n = t; ok && n <= t + 3; ++n) ok = theorem1_statement_holds(a, n);
  Json j;
  j["set"] = json_set(a.elements);
  j["b"] = a.b();
  Json res;
  res["target"] = per_residue ? "thm0" : "thm1";
  res["threshold"] = t;
  res["holds"] = ok;
  j["result"] = res;
  r.json = j;
  r.table = std::string(per_residue ? "thm0 " : "thm1 ") + set_literal(a.elements) +
            " threshold=" + std::to_string(t) + (ok ? " ok" : " COUNTEREXAMPLE") + "\n";
  r.counterexample = !ok;
  return r;
}

EntryResult verify_sylvester(const RunConfig&, const ParsedSet& input) {
  StampSet1D a = as_1d(input);
  if (a.size() != 2 && a.size() != 3)
    throw std::invalid_argument("sylvester target expects {0,b} or {0,a,b}");
  ExceptionalSet1D e = exceptional_set_1d(a);
  bool ok = true;
  if (a.size() == 3) {
    const long long p = a.elements[1], q = a.elements[2];
    ok = e.members.size() == static_cast<std::size_t>((p - 1) * (q - 1) / 2) &&
         ((p - 1) * (q - 1) == 0
              ? !e.frobenius
              : (e.frobenius && *e.frobenius == p * q - p - q));
  }
  EntryResult r;
  Json j;
  j["set"] = json_set(a.elements);
  j["b"] = a.b();
  Json res;
  res["target"] = "sylvester";
  res["count"] = static_cast<long long>(e.members.size());
  res["frobenius"] = e.frobenius ? Json(*e.frobenius) : Json(nullptr);
  res["holds"] = ok;
  j["result"] = res;
  r.json = j;
  r.table = "sylvester " + set_literal(a.elements) + (ok ? " ok" : " COUNTEREXAMPLE") + "\n";
  r.counterexample = !ok;
  return r;
}

EntryResult verify_savchev_chen(const RunConfig&, const ParsedSet& input) {
  StampSet1D a = as_1d(input);
  std::vector<SavchevChenCertificate> certs = savchev_chen_certify(a);
  EntryResult r;
  Json j;
  j["set"] = json_set(a.elements);
  j["b"] = a.b();
  Json arr = Json::array();
  std::ostringstream t;
  for (const SavchevChenCertificate& c : certs) {
    Json cj;
    cj["residue"] = c.residue;
    cj["h"] = c.h;
    cj["copies"] = c.copies;
    arr.push_back(cj);
    t << "savchev-chen a=" << c.residue << " h=" << c.h << " copies=" << c.copies << "\n";
  }
  Json res;
  res["target"] = "savchev-chen";
  res["certificates"] = arr;
  j["result"] = res;
  r.json = j;
  r.table = t.str().empty() ? "savchev-chen (no residue above b/2)\n" : t.str();
  return r;
}

EntryResult verify_thm2(const RunConfig& cfg, const ParsedSet& input) {
  VectorSetND a = as_nd(input);
  long long n_max = cfg.n_max >= 1 ? cfg.n_max : 10;
  Theorem2Report rep = verify_theorem2(a, n_max, BudgetND{cfg.budget_points});
  bool ok = rep.onset.has_value();
  EntryResult r;
  Json j;
  j["set"] = json_set_nd(a.points);
  j["dim"] = a.dim;
  Json res;
  res["target"] = "thm2";
  res["n_max"] = n_max;
  res["onset"] = rep.onset ? Json(*rep.onset) : Json(nullptr);
  res["holds"] = ok;
  j["result"] = res;
  r.json = j;
  r.table = "thm2 " + set_literal_nd(a.points) +
            (ok ? " onset=" + std::to_string(*rep.onset) + " ok" : " COUNTEREXAMPLE") + "\n";
  r.counterexample = !ok;
  return r;
}

EntryResult verify_growth(const RunConfig& cfg, const ParsedSet& input) {
  VectorSetND a = as_nd(input);
  long long n_max = cfg.n_max >= 2 ? cfg.n_max : 20;
  Rat max_ratio(0), ratio_5(0), ratio_last(0);
  for (long long n = 2; n <= n_max; ++n) {
    ENSlice slice = e_n_slice(a, n, BudgetND{cfg.budget_points});
    Rat denom(1);
    for (int i = 1; i < a.dim; ++i) denom *= rat(n);
    Rat ratio = rat(static_cast<long long>(slice.points.size())) / denom;
    max_ratio = std::max(max_ratio, ratio);
    if (n == std::min<long long>(5, n_max)) ratio_5 = ratio;
    if (n == n_max) ratio_last = ratio;
  }
  const bool ok = ratio_last <= ratio_5 * Rat(2) + Rat(2);
  EntryResult r;
  Json j;
  j["set"] = json_set_nd(a.points);
  j["dim"] = a.dim;
  Json res;
  res["target"] = "growth";
  res["n_max"] = n_max;
  res["max_ratio"] = json_rat(max_ratio);
  res["holds"] = ok;
  j["result"] = res;
  r.json = j;
  r.table = "growth " + set_literal_nd(a.points) + " max_ratio=" + rat_str(max_ratio) +
            (ok ? " ok" : " COUNTEREXAMPLE") + "\n";
  r.counterexample = !ok;
  return r;
}

EntryResult do_bench(const RunConfig& cfg, const ParsedSet& input) {
  using Clock = std::chrono::steady_clock;
  EntryResult r;
  std::ostringstream t;
  Json res;
  auto timed = [&](const char* name, auto&& fn) {
    auto t0 = Clock::now();
    fn();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    t << name << " " << ms << " ms\n";
    res[name] = ms;
  };
  Json j;
  if (input.is_1d()) {
    StampSet1D a = as_1d(input);
    j["set"] = json_set(a.elements);
    long long n = cfg.n >= 1 ? cfg.n : 1000;
    timed("sumset_1d", [&] { sumset_1d(a, n, Budget1D{cfg.budget_range}); });
    timed("residue_profile", [&] { residue_profile(a); });
    timed("exceptional_set_1d", [&] { exceptional_set_1d(a); });
  } else {
    VectorSetND a = as_nd(input);
    j["set"] = json_set_nd(a.points);
    long long n = cfg.n >= 1 ? cfg.n : 8;
    timed("sumset_nd", [&] { sumset_nd(a, n, BudgetND{cfg.budget_points}); });
    timed("e_n_slice", [&] { e_n_slice(a, n, BudgetND{cfg.budget_points}); });
  }
  j["result"] = res;
  r.json = j;
  r.table = t.str();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact N-fold sumset laboratory"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--set", cfg.set_text, "set literal, e.g. 0,3,5 or (0,0);(2,0)");
    sub->add_option("--corpus", cfg.corpus_path, "corpus file, one set per line");
    sub->add_option("--format", cfg.format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--out", cfg.out_path, "write report to file");
    sub->add_option("--budget-points", cfg.budget_points, "point cap for nD engines");
    sub->add_option("--budget-range", cfg.budget_range, "cap on b*N for 1D bitmaps");
    return sub;
  };

  auto* c_sumset = add_common(app.add_subcommand("sumset", "compute NA"));
  c_sumset->add_option("--n", cfg.n, "number of copies N")->required();
  auto* c_exc = add_common(app.add_subcommand("exceptional", "exceptional set E(A) / E_N(A)"));
  c_exc->add_option("--n", cfg.n, "slice N for vector sets");
  add_common(app.add_subcommand("profile", "per-residue profile"));
  add_common(app.add_subcommand("threshold", "least N0 from which the structure holds"));
  auto* c_verify = add_common(app.add_subcommand("verify", "run a verification target"));
  c_verify
      ->add_option("target", cfg.verify_target,
                   "thm0|thm1|thm2|sylvester|savchev-chen|growth")
      ->required()
      ->check(CLI::IsMember({"thm0", "thm1", "thm2", "sylvester", "savchev-chen", "growth"}));
  c_verify->add_option("--n-max", cfg.n_max, "range bound for thm2/growth");
  add_common(app.add_subcommand("decompose", "structured description of E(A), vector sets"));
  auto* c_khov = add_common(app.add_subcommand("khovanskii", "polynomial growth fit"));
  c_khov->add_option("--n-max", cfg.n_max, "largest N to count");
  auto* c_bench = add_common(app.add_subcommand("bench", "time core operations"));
  c_bench->add_option("--n", cfg.n, "copies for the timed run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::vector<ParsedSet> inputs = gather_inputs(cfg);
    const bool single = !cfg.set_text.empty();
    const std::string cmd = app.get_subcommands().front()->get_name();
    std::function<EntryResult(const ParsedSet&)> work;
    if (cmd == "sumset") work = [&](const ParsedSet& s) { return do_sumset(cfg, s); };
    else if (cmd == "exceptional") work = [&](const ParsedSet& s) { return do_exceptional(cfg, s); };
    else if (cmd == "profile") work = [&](const ParsedSet& s) { return do_profile(cfg, s); };
    else if (cmd == "threshold") work = [&](const ParsedSet& s) { return do_threshold(cfg, s); };
    else if (cmd == "decompose") work = [&](const ParsedSet& s) { return do_decompose(cfg, s); };
    else if (cmd == "khovanskii") work = [&](const ParsedSet& s) { return do_khovanskii(cfg, s); };
    else if (cmd == "bench") work = [&](const ParsedSet& s) { return do_bench(cfg, s); };
    else {
      if (cfg.verify_target == "thm0")
        work = [&](const ParsedSet& s) { return verify_1d_thresholded(cfg, s, true); };
      else if (cfg.verify_target == "thm1")
        work = [&](const ParsedSet& s) { return verify_1d_thresholded(cfg, s, false); };
      else if (cfg.verify_target == "sylvester")
        work = [&](const ParsedSet& s) { return verify_sylvester(cfg, s); };
      else if (cfg.verify_target == "savchev-chen")
        work = [&](const ParsedSet& s) { return verify_savchev_chen(cfg, s); };
      else if (cfg.verify_target == "thm2")
        work = [&](const ParsedSet& s) { return verify_thm2(cfg, s); };
      else
        work = [&](const ParsedSet& s) { return verify_growth(cfg, s); };
    }
    return emit(cfg, run_entries(inputs, work), single);
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const StructureViolation& e) {
    std::cerr << "counterexample: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
