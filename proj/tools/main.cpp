// mexec: multi-execution enforcement over security lattices.
//
// Subcommands:
//   closure  print the closure set C(S) of a label list
//   profile  worst-case closure sizes over a label pool, as CSV
//   run      execute a program raw or under (Galois-)multi-execution
//   bench    the execution-count / wall-clock experiment harness
//
// Exit codes: 0 success, 1 usage error, 2 safety-cap refusal,
// 3 internal invariant violation.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mexec/bench.hpp"
#include "mexec/closure.hpp"
#include "mexec/enforcement.hpp"
#include "mexec/errors.hpp"
#include "mexec/families.hpp"

namespace {

using namespace mexec;

std::vector<Label> parse_label_list(const Lattice& l, std::string_view text) {
  std::vector<Label> labels;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto part = text.substr(start, i - start);
      std::size_t lo = part.find_first_not_of(' ');
      if (lo != std::string_view::npos) {
        labels.push_back(l.parse_label(part.substr(lo)));
      }
      start = i + 1;
    } else {
      char c = text[i];
      if (c == '(' || c == '{' || c == '[' || c == '<') ++depth;
      if (c == ')' || c == '}' || c == ']' || c == '>') --depth;
    }
  }
  return labels;
}

void parse_sizes(const std::string& text, BenchConfig& cfg) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    cfg.size_from = cfg.size_to = std::stoul(text);
    return;
  }
  cfg.size_from = std::stoul(text.substr(0, dots));
  std::string rest = text.substr(dots + 2);
  auto colon = rest.find(':');
  if (colon == std::string::npos) {
    cfg.size_to = std::stoul(rest);
  } else {
    cfg.size_to = std::stoul(rest.substr(0, colon));
    cfg.stride = std::stoul(rest.substr(colon + 1));
  }
}

int cmd_closure(const std::string& lattice, const std::string& labels) {
  LatticePtr l = parse_lattice(lattice);
  std::vector<Label> s = parse_label_list(*l, labels);
  std::vector<Label> closure = compute_closure(*l, s);
  std::cout << '{';
  for (std::size_t i = 0; i < closure.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << l->render(closure[i]);
  }
  std::cout << "}\n" << closure.size() << " levels\n";
  return 0;
}

int cmd_profile(const std::string& lattice, std::size_t n_max, const std::string& pool_text,
                const std::string& out) {
  LatticePtr l = parse_lattice(lattice);
  std::vector<Label> pool;
  if (!pool_text.empty()) {
    pool = parse_label_list(*l, pool_text);
  } else if (auto carrier = l->enumerate(20)) {
    pool = *carrier;
  } else {
    throw DomainError("the carrier of " + l->descriptor() +
                      " is too large to use as a default pool; pass --pool");
  }
  ClosureProfile profile = closure_size_profile(*l, n_max, pool);
  std::string csv = to_csv(*l, profile);
  if (out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream file(out);
    if (!file) throw Error("cannot write " + out);
    file << csv;
  }
  return 0;
}

int cmd_run(const std::string& program, const std::string& lattice, const std::string& enforce,
            const std::string& input, bool allow_exponential) {
  LatticePtr l = parse_lattice(lattice);
  LabeledSet x = parse_labeled_set(*l, input);

  std::optional<std::vector<Label>> good_sum_default;
  if (program == "goodSum") good_sum_default = labels_of(x);
  ProgramPtr p = make_program(program, l, std::move(good_sum_default));

  std::size_t limit = allow_exponential ? 64 : 20;
  LabeledSet out;
  if (enforce == "none") {
    out = p->run(x);
  } else if (enforce == "mef") {
    out = mef(*l, *p, x, limit);
  } else if (enforce.starts_with("mef-galois:")) {
    GaloisConnection gc = parse_galois(enforce.substr(11), l, default_kp_hook(l));
    out = mef_galois(gc, *p, x, limit);
  } else {
    throw ParseError("--enforce must be none, mef, or mef-galois:<gc>");
  }
  std::cout << render(*l, out) << "\nruns: " << p->runs() << '\n';
  return 0;
}

int cmd_bench(BenchConfig cfg) {
  std::vector<BenchRecord> records = run_benchmark(cfg);
  std::string csv = to_csv(records, cfg.mode);
  if (cfg.out.empty()) std::cout << csv;
  std::cerr << records.size() << " sizes done\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-execution enforcement over security lattices"};
  app.require_subcommand(1);

  std::string lattice, labels, program, enforce = "mef", input, pool, out;
  std::size_t n_max = 4;
  bool allow_exponential = false;

  auto* closure = app.add_subcommand("closure", "print the closure set of a label list");
  closure->add_option("--lattice", lattice, "lattice descriptor")->required();
  closure->add_option("--labels", labels, "comma-separated labels")->required();

  auto* profile = app.add_subcommand("profile", "worst-case closure sizes as CSV n,cs,witness");
  profile->add_option("--lattice", lattice, "lattice descriptor")->required();
  profile->add_option("--n-max", n_max, "largest label-set size to profile");
  profile->add_option("--pool", pool, "label pool (default: small finite carriers)");
  profile->add_option("--out", out, "CSV output path (default stdout)");

  auto* run = app.add_subcommand("run", "run a program on a labeled-set literal");
  run->add_option("--program", program, "program name")->required();
  run->add_option("--lattice", lattice, "lattice descriptor")->required();
  run->add_option("--enforce", enforce, "none | mef | mef-galois:<gc>");
  run->add_option("--input", input, "labeled set, e.g. {1^{p1}, 2^{p2}}")->required();
  run->add_flag("--allow-exponential", allow_exponential, "lift the closure safety cap");

  BenchConfig cfg;
  std::string sizes, galois, mode = "count", pipeline;
  auto* bench = app.add_subcommand("bench", "execution-count and timing experiments");
  bench->add_option("--program", cfg.program, "program name")->required();
  bench->add_option("--lattice", cfg.lattice, "lattice descriptor")->required();
  bench->add_option("--galois", galois, "galois descriptor; bare 'specify' uses the input join");
  bench->add_option("--sizes", sizes, "input sizes <a>..<b>[:stride]")->required();
  bench->add_option("--reps", cfg.repetitions, "timed repetitions per size (time mode)");
  bench->add_option("--mode", mode, "time | count")->check(CLI::IsMember({"time", "count"}));
  bench->add_option("--enforce", pipeline, "none | mef | mef-galois (default inferred)")
      ->check(CLI::IsMember({"none", "mef", "mef-galois"}));
  bench->add_option("--out", cfg.out, "CSV output path (default stdout)");
  bench->add_option("--seed", cfg.seed, "rng seed");
  bench->add_flag("--allow-exponential", cfg.allow_exponential, "lift the 2^20 safety cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (closure->parsed()) return cmd_closure(lattice, labels);
    if (profile->parsed()) return cmd_profile(lattice, n_max, pool, out);
    if (run->parsed()) return cmd_run(program, lattice, enforce, input, allow_exponential);
    if (bench->parsed()) {
      if (!galois.empty()) cfg.galois = galois;
      if (pipeline == "none") cfg.pipeline = Pipeline::Raw;
      if (pipeline == "mef") cfg.pipeline = Pipeline::Mef;
      if (pipeline == "mef-galois") cfg.pipeline = Pipeline::MefGalois;
      cfg.mode = mode == "time" ? BenchMode::Time : BenchMode::Count;
      parse_sizes(sizes, cfg);
      return cmd_bench(std::move(cfg));
    }
  } catch (const mexec::LimitError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 2;
  } catch (const mexec::InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const mexec::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
