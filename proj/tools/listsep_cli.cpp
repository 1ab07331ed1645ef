// listsep: command-line front end for the separation-number toolkit.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "listsep/choosability.hpp"
#include "listsep/colorsym.hpp"
#include "listsep/constructions.hpp"
#include "listsep/counting.hpp"
#include "listsep/json_io.hpp"
#include "listsep/kernel.hpp"
#include "listsep/search.hpp"
#include "listsep/verify.hpp"

using namespace listsep;
using io::Json;

namespace {

enum Exit { kOk = 0, kDomain = 1, kBudget = 2, kVerifyFailed = 3 };

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Input {
  std::optional<ListAssignment> lists;
  PIVector vector{1};
};

Input load(const std::string& path) {
  Json j = io::read_file(path);
  Input in;
  try {
    if (io::is_pi_vector_record(j)) {
      in.vector = io::pi_vector_from_json(j);
    } else {
      in.lists = io::list_assignment_from_json(j);
      in.vector = pi_vector(*in.lists);
    }
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
  return in;
}

Subset parse_subset(const std::string& text, int n) {
  std::vector<Vertex> members;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 1 || v > n) throw DomainError("--subset: bad vertex '" + tok + "'");
    members.push_back(v);
  }
  if (members.empty()) throw DomainError("--subset: empty");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Subset::of(members);
}

SearchOptions search_options(int max_vertices, bool no_symmetry, double time_limit, std::uint64_t node_limit) {
  SearchOptions opt;
  opt.max_vertices = max_vertices;
  opt.symmetry_reduction = !no_symmetry;
  if (time_limit > 0) opt.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(time_limit * 1000));
  if (node_limit > 0) opt.node_limit = node_limit;
  return opt;
}

Json kernel_family(const std::vector<kernel::NamedVector>& family, const kernel::RationalVector& va,
                   const kernel::RationalVector* vc) {
  Json arr = Json::array();
  for (const auto& nv : family) {
    Json e;
    e["name"] = nv.name;
    e["vector"] = io::to_json(nv.vec);
    e["a_dot"] = io::to_json(kernel::dot(va, nv.vec));
    if (vc) e["c_dot"] = io::to_json(kernel::dot(*vc, nv.vec));
    arr.push_back(std::move(e));
  }
  return arr;
}

std::vector<kernel::RationalVector> vectors_of(const std::vector<kernel::NamedVector>& family) {
  std::vector<kernel::RationalVector> out;
  for (const auto& nv : family) out.push_back(nv.vec);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separation numbers of complete graphs under list multicoloring"};
  app.require_subcommand(1);

  // Shared search budget.
  int max_vertices = 5;
  bool no_symmetry = false;
  double time_limit = 0;
  std::uint64_t node_limit = 0;
  int jobs = 1;
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", max_vertices, "Largest K_m the search may explore")->check(CLI::Range(2, 8));
    sub->add_flag("--no-symmetry", no_symmetry, "Disable symmetry pruning");
    sub->add_option("--time-limit", time_limit, "Seconds per search call (0 = none)")->check(CLI::NonNegativeNumber);
    sub->add_option("--node-limit", node_limit, "Nodes per search call (0 = none)");
  };

  std::string file;
  int n = 0, a = 0, b = 0, c = -1, x = 0;

  auto* pi = app.add_subcommand("pi", "Proper-intersection vector of a list assignment, or realize a vector");
  bool realize_flag = false;
  Color base = 1;
  pi->add_option("--file", file, "ListAssignment or PIVector JSON")->required();
  pi->add_flag("--realize", realize_flag, "Input is a PIVector; emit a ListAssignment");
  pi->add_option("--base", base, "First color used by --realize");

  auto* amp = app.add_subcommand("amplitude", "Size of the union of lists over a subset");
  std::string subset_text;
  amp->add_option("--file", file, "ListAssignment or PIVector JSON")->required();
  amp->add_option("--subset", subset_text, "Comma-separated vertices (default: all)");

  auto* check = app.add_subcommand("check", "Decide (L,b)-colorability on K_n");
  bool brute = false;
  check->add_option("--file", file, "ListAssignment or PIVector JSON")->required();
  check->add_option("--b", b, "Colors per vertex")->required()->check(CLI::PositiveNumber);
  check->add_flag("--brute", brute, "Exhaustive coloring search with a witness");

  auto* cs = app.add_subcommand("colorsym", "Greedy multicoloring for symmetric assignments");
  cs->add_option("--file", file, "ListAssignment or PIVector JSON")->required();
  cs->add_option("--b", b, "Colors per vertex")->required()->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "Build a counter-example family member");
  std::string family;
  construct->add_option("--family", family, "xb, low or high")->required()->check(CLI::IsMember({"xb", "low", "high"}));
  construct->add_option("--n", n)->required();
  construct->add_option("--a", a)->required();
  construct->add_option("--b", b)->required();
  construct->add_option("--x", x, "Multiplier for the xb family");

  auto* sepc = app.add_subcommand("sep", "Exact separation number of K_n");
  bool symmetric_only = false;
  int max_m = 0;
  sepc->add_option("--n", n)->required();
  sepc->add_option("--a", a)->required();
  sepc->add_option("--b", b)->required();
  sepc->add_flag("--symmetric-only", symmetric_only, "Bound from symmetric assignments only");
  sepc->add_option("--max-m", max_m, "Search sub-configurations on at most this many vertices");
  add_budget(sepc);

  auto* scan = app.add_subcommand("scan", "Tabulate sep against the conjectured formula (CSV)");
  int a_max = 0, b_max = 0;
  scan->add_option("--n", n)->required();
  scan->add_option("--a-max", a_max)->required();
  scan->add_option("--b-max", b_max)->required();
  scan->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  add_budget(scan);

  auto* count = app.add_subcommand("count", "Count assignments up to proper-intersection equivalence");
  bool fit = false;
  std::string format = "csv";
  count->add_option("--n", n)->required();
  count->add_option("--a", a, "List size (with --fit: largest list size)")->required();
  count->add_flag("--fit", fit, "Difference table over 0..a");
  count->add_option("--format", format, "Output of --fit: csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* kern = app.add_subcommand("kernel", "Named kernel vectors, ranks and extreme points");
  kern->add_option("--n", n)->required();
  kern->add_option("--a", a);
  kern->add_option("--c", c);

  auto* verify = app.add_subcommand("verify-paper", "Run every acceptance check");
  int max_n = 5;
  std::string example_file;
  std::vector<int> only;
  bool timings = false;
  verify->add_option("--max-n", max_n, "Skip grid points on more vertices")->check(CLI::Range(1, 8));
  verify->add_option("--example", example_file, "ListAssignment JSON replacing the built-in example");
  verify->add_option("--only", only, "Criteria to run")->delimiter(',');
  verify->add_flag("--timings", timings, "Append wall time per item");
  verify->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  add_budget(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kDomain;
  }

  try {
    if (pi->parsed()) {
      Json j = io::read_file(file);
      if (realize_flag) {
        emit(io::to_json(realize(io::pi_vector_from_json(j), base)));
      } else {
        emit(io::to_json(pi_vector(io::list_assignment_from_json(j))));
      }
    } else if (amp->parsed()) {
      Input in = load(file);
      Subset s = subset_text.empty() ? Subset::full(in.vector.n()) : parse_subset(subset_text, in.vector.n());
      Json out;
      out["subset"] = io::to_json(s);
      out["amplitude"] = amplitude(in.vector, s);
      emit(out);
    } else if (check->parsed()) {
      Input in = load(file);
      if (brute) {
        ListAssignment lists = in.lists ? *in.lists : realize(in.vector);
        ChoosabilityVerdict v = brute_force_color(lists, b);
        if (!v.colorable) {
          ChoosabilityVerdict fast = amplitude_ok(in.vector, b);
          v.violating_subset = fast.violating_subset;
          v.violating_amplitude = fast.violating_amplitude;
        }
        emit(io::to_json(v));
      } else {
        emit(io::to_json(amplitude_ok(in.vector, b)));
      }
    } else if (cs->parsed()) {
      Input in = load(file);
      ListAssignment lists = in.lists ? *in.lists : realize(in.vector);
      emit(io::to_json(colorsym(lists, b)));
    } else if (construct->parsed()) {
      PIVector v = family == "xb" ? counterexample_xb(n, a, b, x)
                   : family == "low" ? counterexample_low(n, a, b)
                                     : counterexample_high(n, a, b);
      Json out;
      out["family"] = family;
      out["n"] = n;
      out["a"] = a;
      out["b"] = b;
      out["vector"] = io::to_json(v);
      out["audit"] = io::to_json(audit(v));
      emit(out);
    } else if (sepc->parsed()) {
      SepQuery q{n, a, b};
      if (symmetric_only) {
        Json out;
        out["n"] = n;
        out["a"] = a;
        out["b"] = b;
        out["sep_symmetric"] = sep_symmetric(q);
        emit(out);
      } else {
        SearchOptions opt = search_options(max_vertices, no_symmetry, time_limit, node_limit);
        SepResult r = sep(q, opt, max_m > 0 ? std::optional<int>(max_m) : std::nullopt);
        Json out;
        out["n"] = n;
        out["a"] = a;
        out["b"] = b;
        out.update(io::to_json(r));
        emit(out);
      }
    } else if (scan->parsed()) {
      SearchOptions opt = search_options(max_vertices, no_symmetry, time_limit, node_limit);
      std::cout << scan_csv(conjecture_scan(n, a_max, b_max, opt, jobs));
    } else if (count->parsed()) {
      CountingBudget budget{4, 12};
      if (!fit) {
        emit(io::to_json(count_classes(n, a, budget)));
      } else {
        DegreeFit f = degree_fit(n, a, budget);
        if (format == "json") {
          emit(io::to_json(f));
        } else {
          std::cout << "a,value";
          for (std::size_t d = 1; d < f.differences.size(); ++d) std::cout << ",d" << d;
          std::cout << "\n";
          for (std::size_t k = 0; k < f.values.size(); ++k) {
            std::cout << k << "," << f.values[k];
            for (std::size_t d = 1; d < f.differences.size(); ++d) {
              std::cout << ",";
              if (k < f.differences[d].size()) std::cout << f.differences[d][k];
            }
            std::cout << "\n";
          }
        }
      }
    } else if (kern->parsed()) {
      kernel::RationalVector va = kernel::vec_a(n), vc = kernel::vec_c(n);
      Json out;
      out["n"] = n;
      out["a"] = io::to_json(va);
      out["c"] = io::to_json(vc);
      out["psi"] = io::to_json(kernel::vec_psi(n));
      auto ka = kernel::basis_ker_a(n);
      out["ker_a"] = kernel_family(ka, va, nullptr);
      out["ker_a_rank"] = kernel::rank(vectors_of(ka));
      if (n >= 4) {
        auto kac = kernel::basis_ker_ac(n);
        out["ker_ac"] = kernel_family(kac, va, &vc);
        out["ker_ac_rank"] = kernel::rank(vectors_of(kac));
      }
      if (kern->count("--a") || kern->count("--c")) {
        if (!kern->count("--a") || !kern->count("--c")) throw DomainError("--a and --c go together");
        kernel::ExtremePoints xs = kernel::extreme_points(n, a, c);
        Json pts;
        pts["x1"] = xs.x1 ? io::to_json(*xs.x1) : Json(nullptr);
        pts["x2"] = xs.x2 ? io::to_json(*xs.x2) : Json(nullptr);
        out["extreme_points"] = std::move(pts);
      }
      emit(out);
    } else if (verify->parsed()) {
      VerifyConfig config;
      config.max_n = max_n;
      config.search = search_options(max_vertices, no_symmetry, time_limit, node_limit);
      config.jobs = jobs;
      config.only = only;
      if (!example_file.empty()) {
        try {
          config.example = io::list_assignment_from_json(io::read_file(example_file));
        } catch (const DomainError& e) {
          std::string what = e.what();
          throw DomainError(what.rfind(example_file, 0) == 0 ? what : example_file + ": " + what);
        }
      }
      VerifyReport report = verify_paper(config);
      print_report(report, std::cout, timings);
      return report.any_failed() ? kVerifyFailed : kOk;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}
