#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mexec/enforcement.hpp"
#include "mexec/programs.hpp"

namespace mexec {

enum class BenchMode { Time, Count };
enum class Pipeline { Raw, Mef, MefGalois };

struct BenchConfig {
  std::string program;                  // secure|insecure|badSum|goodSum[:<labels>]|pairwise|pairwise1
  std::string lattice;                  // lattice descriptor
  std::optional<std::string> galois;    // galois descriptor; "specify" alone
                                        // specifies the join of the input labels
  std::optional<Pipeline> pipeline;     // default: MefGalois when galois set, else Mef
  std::size_t size_from = 0;
  std::size_t size_to = 0;
  std::size_t stride = 1;
  std::size_t repetitions = 10;         // time mode only; one warm-up run precedes them
  BenchMode mode = BenchMode::Count;
  std::string out;                      // CSV path; empty writes nothing
  std::uint64_t seed = 0;
  bool allow_exponential = false;       // lifts the 2^n > 2^20 safety cap
};

struct BenchRecord {
  std::size_t size = 0;
  double mean_seconds = 0.0;   // time mode
  std::uint64_t runs = 0;      // executions of p observed (exact)
};

// The experiment input of size n: {1^{a1}, ..., n^{an}} over the
// lattice's first n atom labels. Errors when the lattice cannot provide
// n distinct atoms.
LabeledSet gen_input(const Lattice& l, std::size_t n);
// The singleton/atom labels used by gen_input, in input order.
std::vector<Label> gen_input_labels(const Lattice& l, std::size_t n);

// Runs the configured pipeline once per size. Count mode records the
// exact run-counter delta and asserts it is deterministic; time mode
// reports the arithmetic mean of wall-clock seconds over the repetitions
// after one warm-up, single-threaded. Exponential configurations (mef
// without a connection on powerset/dc/exponential lattices) with
// 2^n > 2^20 are refused unless allow_exponential is set.
std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg);

// CSV with the header "Size,Mean"; Mean is an exact integer run count in
// count mode and decimal seconds in time mode.
std::string to_csv(const std::vector<BenchRecord>& records, BenchMode mode);
std::vector<BenchRecord> parse_csv(const std::string& text, BenchMode mode);

// The kp hook used for "kp:<program>" descriptors: approximates the
// program's closure operator over the inputs gen_input(0..6), capped by
// the available atoms. Exact only where that universe witnesses the
// reachable output labels.
KpHook default_kp_hook(LatticePtr lattice);

}  // namespace mexec
