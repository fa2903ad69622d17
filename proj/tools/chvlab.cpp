// chvlab: exact verification laboratory for multivariate Cayley-Hamilton
// identities. Subcommands: verify, enumerate, compute, gen. Exit codes:
//   0 all requested checks pass
//   1 at least one verification failed
//   2 configuration, parse, or input-file error
//   3 a family violated its own hypotheses (commutation/constraint)
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "chv/decorated.hpp"
#include "chv/decorated2.hpp"
#include "chv/error.hpp"
#include "chv/family.hpp"
#include "chv/gen.hpp"
#include "chv/interner.hpp"
#include "chv/matrix.hpp"
#include "chv/mixed.hpp"
#include "chv/parse.hpp"
#include "chv/rng.hpp"
#include "chv/serial.hpp"
#include "chv/theorems.hpp"
#include "chv/xpoly.hpp"

namespace {

using namespace chv;
using Json = nlohmann::ordered_json;

struct Options {
  std::string theorem;
  std::string n_range = "2";
  std::string k_range = "2";
  std::string strategy = "powers-of-one";
  std::string seeds;  // "a" or "a..b"; empty -> [seed]
  std::uint64_t seed = 1;
  bool symbolic = false;
  int b = 1;
  int e = 1;
  std::string object;
  std::string input;
  std::string out;
  int jobs = 0;  // 0 = unset: CHVLAB_JOBS env, then 1
  std::uint64_t limit = 0;
};

template <typename T>
std::vector<T> parse_span(const std::string& text, const char* what) {
  auto parse_one = [&](const std::string& s) -> T {
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used != s.size() || v < 0) throw std::invalid_argument(s);
      return static_cast<T>(v);
    } catch (const std::exception&) {
      throw ConfigError(std::string("cannot parse ") + what + " value: " + s);
    }
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) return {parse_one(text)};
  T lo = parse_one(text.substr(0, dots));
  T hi = parse_one(text.substr(dots + 2));
  if (hi < lo) throw ConfigError(std::string(what) + " range is empty: " + text);
  std::vector<T> vals;
  for (T v = lo; v <= hi; ++v) vals.push_back(v);
  return vals;
}

int resolve_jobs(int flag) {
  if (flag > 0) return flag;
  if (flag < 0) throw ConfigError("--jobs must be >= 1");
  if (const char* env = std::getenv("CHVLAB_JOBS")) {
    std::string s(env);
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size() || v < 1) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("CHVLAB_JOBS must be a positive integer, got: " + s);
    }
  }
  return 1;
}

// All indeterminates must be interned serially (task-build order) so that
// canonical forms are independent of the worker count: families are built
// here and the x-indeterminates each verifier will request are pre-interned.
void intern_linear_x(int count) {
  for (int i = 1; i <= count; ++i) var("x" + std::to_string(i));
}

void intern_grid_x(int n, int k) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j) var("x" + std::to_string(i) + "_" + std::to_string(j));
}

struct Task {
  std::string label;
  std::function<VerificationReport()> run;
};

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<VerificationReport> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::size_t workers = std::min<std::size_t>(jobs, tasks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i].run();
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        try {
          results[i] = tasks[i].run();
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);  // earliest task index wins
  }
  return results;
}

std::string param_line(const VerificationReport& r) {
  std::string line = r.theorem;
  for (const auto& [key, value] : r.params.items()) {
    if (value.is_array() || value.is_object()) continue;
    line += ' ';
    line += key;
    line += '=';
    line += value.is_string() ? value.get<std::string>() : value.dump();
  }
  line += " -> " + r.status;
  return line;
}

int finish_verify(const std::vector<VerificationReport>& reports, const std::string& out) {
  for (const auto& r : reports) std::cout << param_line(r) << '\n';
  int pass = 0, fail = 0, violated = 0;
  for (const auto& r : reports) {
    if (r.status == "pass")
      ++pass;
    else if (r.status == "fail")
      ++fail;
    else
      ++violated;
  }
  std::cout << pass << " pass, " << fail << " fail, " << violated
            << " hypothesis-violation\n";
  if (!out.empty()) save_json_file(out, report_file_to_json(reports));
  if (violated > 0) return 3;
  if (fail > 0) return 1;
  return 0;
}

// Derived seed for the constrained-A draw, decorrelated from the commuting
// pool that consumed the raw seed.
std::uint64_t constrained_seed(std::uint64_t seed) {
  std::uint64_t st = seed;
  (void)splitmix64(st);
  return splitmix64(st);
}

FamilySpec make_spec(const Options& opt, int n, int k, std::uint64_t seed) {
  FamilySpec spec;
  spec.strategy = opt.strategy;
  spec.n = n;
  spec.k = k;
  spec.seed = seed;
  spec.symbolic = opt.symbolic;
  return spec;
}

Json gen_params(const Options& opt, std::uint64_t seed) {
  return Json{{"strategy", opt.strategy}, {"seed", seed}};
}

void merge_params(VerificationReport& r, const Json& extra) {
  for (const auto& [key, value] : extra.items()) r.params[key] = value;
}

int cmd_verify(const Options& opt) {
  static const char* kTheorems[] = {"phillips", "ch",      "cor12",  "bapat-roy", "mixed",
                                    "cor16",    "lemmas",  "lemmas2", "laplace"};
  bool known = false;
  for (const char* t : kTheorems) known = known || opt.theorem == t;
  if (!known) throw ConfigError("unknown theorem: " + opt.theorem +
                                " (expected phillips|ch|cor12|bapat-roy|mixed|cor16|"
                                "lemmas|lemmas2|laplace)");
  std::vector<int> ns = parse_span<int>(opt.n_range, "--n");
  std::vector<int> ks = parse_span<int>(opt.k_range, "--k");
  std::vector<std::uint64_t> seeds =
      opt.seeds.empty() ? std::vector<std::uint64_t>{opt.seed}
                        : parse_span<std::uint64_t>(opt.seeds, "--seeds");
  int jobs = resolve_jobs(opt.jobs);
  std::vector<Task> tasks;

  auto add = [&](std::string label, std::function<VerificationReport()> run) {
    tasks.push_back(Task{std::move(label), std::move(run)});
  };

  if (!opt.input.empty()) {
    Json j = load_json_file(opt.input);
    Json extra{{"input", opt.input}};
    if (opt.theorem == "phillips" || opt.theorem == "lemmas" || opt.theorem == "laplace") {
      auto f = family_from_json(j);
      intern_linear_x(f.k);
      auto runner = opt.theorem == "phillips"  ? +[](const ConstraintFamily& g) { return verify_phillips(g); }
                    : opt.theorem == "lemmas" ? +[](const ConstraintFamily& g) { return verify_lemma_suite(g); }
                                              : +[](const ConstraintFamily& g) { return verify_laplace_suite(g); };
      add(opt.theorem, [f, extra, runner]() {
        auto r = runner(f);
        merge_params(r, extra);
        return r;
      });
    } else if (opt.theorem == "mixed" || opt.theorem == "lemmas2") {
      auto f = mixed_family_from_json(j);
      intern_grid_x(f.n, f.k);
      bool suite = opt.theorem == "lemmas2";
      add(opt.theorem, [f, extra, suite]() {
        auto r = suite ? verify_lemma2_suite(f) : verify_mixed_theorem(f);
        merge_params(r, extra);
        return r;
      });
    } else if (opt.theorem == "ch") {
      auto M = matrix_from_json(j);
      intern_linear_x(2);
      add("ch", [M, extra]() {
        auto r = verify_classic_ch(M);
        merge_params(r, extra);
        return r;
      });
    } else if (opt.theorem == "cor12") {
      auto t = tuple_from_json(j);
      if (t.mats.size() != 2) throw ConfigError("cor12 input must be a tuple of 2 matrices");
      intern_linear_x(2);
      add("cor12", [t, extra]() {
        auto r = verify_cor_2matrices(t.mats[0], t.mats[1]);
        merge_params(r, extra);
        return r;
      });
    } else if (opt.theorem == "bapat-roy") {
      auto t = tuple_from_json(j);
      intern_linear_x(t.n());
      std::uint64_t order_seed = opt.seed;
      add("bapat-roy", [t, extra, order_seed]() {
        auto r = verify_bapat_roy(t.mats, order_seed);
        merge_params(r, extra);
        return r;
      });
    } else {  // cor16
      auto t = tuple_from_json(j);
      intern_grid_x(t.n(), 2);
      add("cor16", [t, extra]() {
        auto r = verify_mixed_theorem(specialize_cor16(t.mats));
        r.theorem = "cor16";
        merge_params(r, extra);
        return r;
      });
    }
    return finish_verify(run_tasks(tasks, jobs), opt.out);
  }

  if (opt.theorem == "phillips") {
    for (int n : ns)
      for (int k : ks)
        for (std::uint64_t s : seeds) {
          auto f = gen_constrained(gen_commuting(make_spec(opt, n, k, s)),
                                   constrained_seed(s));
          intern_linear_x(k);
          Json extra = gen_params(opt, s);
          add("phillips", [f, extra]() {
            auto r = verify_phillips(f);
            merge_params(r, extra);
            return r;
          });
        }
  } else if (opt.theorem == "ch") {
    for (int n : ns)
      for (std::uint64_t s : seeds) {
        RingMatrix M = random_int_matrix(n, s);
        intern_linear_x(2);
        add("ch", [M, s]() {
          auto r = verify_classic_ch(M);
          merge_params(r, Json{{"seed", s}});
          return r;
        });
      }
  } else if (opt.theorem == "cor12") {
    for (int n : ns)
      for (std::uint64_t s : seeds) {
        auto B = gen_commuting(make_spec(opt, n, 2, s));
        intern_linear_x(2);
        Json extra = gen_params(opt, s);
        add("cor12", [B, extra]() {
          auto r = verify_cor_2matrices(B[1], B[0]);
          merge_params(r, extra);
          return r;
        });
      }
  } else if (opt.theorem == "bapat-roy") {
    for (int n : ns)
      for (std::uint64_t s : seeds) {
        std::uint64_t st = s;
        std::vector<RingMatrix> A;
        for (int i = 0; i < n; ++i) A.push_back(random_int_matrix(n, splitmix64(st)));
        std::uint64_t order_seed = splitmix64(st);
        intern_linear_x(n);
        add("bapat-roy", [A, s, order_seed]() {
          auto r = verify_bapat_roy(A, order_seed);
          merge_params(r, Json{{"seed", s}});
          return r;
        });
      }
  } else if (opt.theorem == "mixed") {
    for (int n : ns)
      for (int k : ks)
        for (std::uint64_t s : seeds) {
          auto f = gen_mixed_constrained(make_spec(opt, n, k, s));
          intern_grid_x(n, k);
          Json extra = gen_params(opt, s);
          add("mixed", [f, extra]() {
            auto r = verify_mixed_theorem(f);
            merge_params(r, extra);
            return r;
          });
        }
  } else if (opt.theorem == "cor16") {
    for (int n : ns)
      for (std::uint64_t s : seeds) {
        auto f = specialize_cor16(gen_commuting(make_spec(opt, n, n, s)));
        intern_grid_x(n, 2);
        Json extra = gen_params(opt, s);
        add("cor16", [f, extra]() {
          auto r = verify_mixed_theorem(f);
          r.theorem = "cor16";
          merge_params(r, extra);
          return r;
        });
      }
  } else if (opt.theorem == "lemmas" || opt.theorem == "laplace") {
    if (opt.symbolic && opt.theorem == "lemmas") {
      for (int n : ns)
        for (int k : ks) {
          // Symbolic drivers intern their own names; run serially now so the
          // worker count cannot influence interner order.
          VerificationReport r = verify_lemmas_symbolic(n, k);
          add("lemmas", [r]() { return r; });
        }
    } else {
      bool laplace = opt.theorem == "laplace";
      for (int n : ns)
        for (int k : ks)
          for (std::uint64_t s : seeds) {
            auto f = gen_constrained(gen_commuting(make_spec(opt, n, k, s)),
                                     constrained_seed(s));
            intern_linear_x(k);
            Json extra = gen_params(opt, s);
            add(opt.theorem, [f, extra, laplace]() {
              auto r = laplace ? verify_laplace_suite(f) : verify_lemma_suite(f);
              merge_params(r, extra);
              return r;
            });
          }
    }
  } else {  // lemmas2
    if (opt.symbolic) {
      for (int n : ns)
        for (int k : ks) {
          VerificationReport r = verify_lemmas2_symbolic(n, k);
          add("lemmas2", [r]() { return r; });
        }
    } else {
      for (int n : ns)
        for (int k : ks)
          for (std::uint64_t s : seeds) {
            auto f = gen_mixed_constrained(make_spec(opt, n, k, s));
            intern_grid_x(n, k);
            Json extra = gen_params(opt, s);
            add("lemmas2", [f, extra]() {
              auto r = verify_lemma2_suite(f);
              merge_params(r, extra);
              return r;
            });
          }
    }
  }
  if (tasks.empty()) throw ConfigError("nothing to verify: empty n/k/seed ranges");
  return finish_verify(run_tasks(tasks, jobs), opt.out);
}

int cmd_enumerate(const Options& opt) {
  std::vector<int> ns = parse_span<int>(opt.n_range, "--n");
  std::vector<int> ks = parse_span<int>(opt.k_range, "--k");
  if (ns.size() != 1 || ks.size() != 1)
    throw ConfigError("enumerate takes single --n and --k values, not ranges");
  int n = ns[0], k = ks[0];
  if (n < 1 || k < 1) throw ConfigError("enumerate requires n >= 1 and k >= 1");
  const std::string& kind = opt.object;
  bool endpoints = kind != "decperm" && kind != "decperm2";
  int b = opt.b - 1, e = opt.e - 1;
  if (endpoints && (b < 0 || b >= n || e < 0 || e >= n))
    throw ConfigError("--b and --e must lie in 1..n");

  std::uint64_t printed = 0, count = 0;
  auto emit = [&](const Json& j) {
    ++count;
    if (printed < opt.limit) {
      std::cout << j.dump() << '\n';
      ++printed;
    }
  };

  Int formula;
  if (kind == "decperm") {
    formula = count_decorated_permutations(n, k);
    enumerate_decorated_permutations(n, k,
                                     [&](const DecoratedPermutation& p) { emit(to_json(p)); });
  } else if (kind == "decpath") {
    formula = count_decorated_paths(n, k);
    enumerate_decorated_paths(n, k, b, e, [&](const DecoratedPath& q) { emit(to_json(q)); });
  } else if (kind == "pathmutation") {
    formula = count_pathmutations(n, k);
    enumerate_pathmutations(n, k, b, e, [&](const Pathmutation& pm) { emit(to_json(pm)); });
  } else if (kind == "pathmap-H") {
    formula = count_H(n, k);
    enumerate_H(n, k, b, e, [&](const Pathmap& g) { emit(to_json(g)); });
  } else if (kind == "pathmap-G") {
    formula = count_G(n, k);
    enumerate_G(n, k, b, e, [&](const Pathmap& g) { emit(to_json(g)); });
  } else if (kind == "decperm2") {
    formula = count_decorated_2permutations(n, k);
    enumerate_decorated_2permutations(
        n, k, [&](const Decorated2Permutation& p) { emit(to_json(p)); });
  } else if (kind == "decpath2") {
    formula = count_decorated_2paths(n, k);
    enumerate_decorated_2paths(n, k, b, e,
                               [&](const Decorated2Path& q) { emit(to_json(q)); });
  } else if (kind == "pathmutation2") {
    formula = count_pathmutations2(n, k);
    enumerate_pathmutations2(n, k, b, e,
                             [&](const Pathmutation2& pm) { emit(to_json(pm)); });
  } else if (kind == "pathmap-H2") {
    formula = count_H2(n, k);
    enumerate_H2(n, k, b, e, [&](const Pathmap2& g) { emit(to_json(g)); });
  } else if (kind == "pathmap-G2") {
    formula = count_G2(n, k);
    enumerate_G2(n, k, b, e, [&](const Pathmap2& g) { emit(to_json(g)); });
  } else {
    throw ConfigError(
        "unknown object kind: " + kind +
        " (expected decperm|decpath|pathmutation|pathmap-H|pathmap-G or the 2-variants)");
  }

  Json tail{{"object", kind}, {"n", n}, {"k", k}};
  if (endpoints) {
    tail["b"] = opt.b;
    tail["e"] = opt.e;
  }
  tail["count"] = count;
  tail["formula"] = formula.convert_to<std::uint64_t>();
  std::cout << tail.dump() << '\n';
  return 0;
}

int cmd_compute(const Options& opt) {
  if (opt.input.empty()) throw ConfigError("compute requires --input");
  Json j = load_json_file(opt.input);
  std::string text;
  if (opt.object == "det" || opt.object == "permanent") {
    RingMatrix m = matrix_from_json(j);
    text = (opt.object == "det" ? det(m) : permanent(m)).str();
  } else if (opt.object == "mixed-discriminant") {
    MatrixTuple t = tuple_from_json(j);
    validate_tuple(t, true);
    text = mixed_discriminant(t).str();
  } else if (opt.object == "charpoly") {
    MatrixTuple t = tuple_from_json(j);
    validate_tuple(t, false);
    std::vector<const RingMatrix*> ptrs;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < t.mats.size(); ++i) {
      ptrs.push_back(&t.mats[i]);
      names.push_back("x" + std::to_string(i + 1));
    }
    std::vector<VarId> xv = fresh_x_vars(names, ptrs);
    RingMatrix mix(t.n());
    for (std::size_t i = 0; i < t.mats.size(); ++i)
      mix = mix + t.mats[i].scaled(PolyElem::variable(xv[i]));
    text = det(mix).str();
  } else if (opt.object == "substitute") {
    ConstraintFamily f = family_from_json(j);
    XPolynomial p = multivar_char_poly(f.A);
    RingMatrix res = substitute_commuting(p, f.B);
    text = matrix_to_json(res).dump(2);
  } else {
    throw ConfigError("unknown compute object: " + opt.object +
                      " (expected det|permanent|mixed-discriminant|charpoly|substitute)");
  }
  std::cout << text << '\n';
  if (!opt.out.empty()) {
    std::ofstream outf(opt.out);
    if (!outf) throw ConfigError("cannot open file for writing: " + opt.out);
    outf << text << '\n';
  }
  return 0;
}

int cmd_gen(const Options& opt) {
  std::vector<int> ns = parse_span<int>(opt.n_range, "--n");
  std::vector<int> ks = parse_span<int>(opt.k_range, "--k");
  if (ns.size() != 1 || ks.size() != 1)
    throw ConfigError("gen takes single --n and --k values, not ranges");
  FamilySpec spec = make_spec(opt, ns[0], ks[0], opt.seed);
  std::string kind = opt.object.empty() ? "constraint" : opt.object;
  Json out;
  if (kind == "constraint") {
    auto f = gen_constrained(gen_commuting(spec), constrained_seed(spec.seed));
    out = family_to_json(f, famspec_to_json(spec));
  } else if (kind == "mixed") {
    out = mixed_family_to_json(gen_mixed_constrained(spec), famspec_to_json(spec));
  } else if (kind == "matrix") {
    out = matrix_to_json(random_int_matrix(spec.n, spec.seed, spec.magnitude));
  } else {
    throw ConfigError("unknown gen object: " + kind + " (expected constraint|mixed|matrix)");
  }
  if (opt.out.empty())
    std::cout << out.dump(2) << '\n';
  else
    save_json_file(opt.out, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification laboratory for multivariate Cayley-Hamilton identities"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n_range, "matrix size n, or a range a..b");
    sub->add_option("--k", opt.k_range, "family size k, or a range a..b");
    sub->add_option("--jobs", opt.jobs, "worker threads (env CHVLAB_JOBS)");
    sub->add_option("--out", opt.out, "output file path");
    sub->add_option("--input", opt.input, "input JSON file");
    sub->add_option("--seed", opt.seed, "single seed");
  };

  CLI::App* verify = app.add_subcommand("verify", "run a theorem or lemma suite");
  add_common(verify);
  verify->add_option("--theorem", opt.theorem,
                     "phillips|ch|cor12|bapat-roy|mixed|cor16|lemmas|lemmas2|laplace")
      ->required();
  verify->add_option("--strategy", opt.strategy,
                     "diagonal-generic|powers-of-one|circulant|conjugated-diagonal");
  verify->add_option("--seeds", opt.seeds, "seed or seed range a..b");
  verify->add_flag("--symbolic", opt.symbolic, "symbolic families where supported");

  CLI::App* enumerate = app.add_subcommand("enumerate", "stream combinatorial objects");
  add_common(enumerate);
  enumerate->add_option("--object", opt.object, "object kind")->required();
  enumerate->add_option("--b", opt.b, "path start vertex (1-based)");
  enumerate->add_option("--e", opt.e, "path end vertex (1-based)");
  enumerate->add_option("--limit", opt.limit, "print at most this many objects");

  CLI::App* compute = app.add_subcommand("compute", "evaluate one exact quantity");
  add_common(compute);
  compute->add_option("--object", opt.object,
                      "det|permanent|mixed-discriminant|charpoly|substitute")
      ->required();

  CLI::App* gen = app.add_subcommand("gen", "write a seeded family file");
  add_common(gen);
  gen->add_option("--object", opt.object, "constraint|mixed|matrix");
  gen->add_option("--strategy", opt.strategy,
                  "diagonal-generic|powers-of-one|circulant|conjugated-diagonal");
  gen->add_flag("--symbolic", opt.symbolic, "symbolic families where supported");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (compute->parsed()) return cmd_compute(opt);
    return cmd_gen(opt);
  } catch (const HypothesisViolation& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 3;
  } catch (const ConfigError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
}
