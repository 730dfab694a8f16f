#include "mexec/bench.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mexec/errors.hpp"
#include "mexec/families.hpp"

namespace mexec {

namespace {

// The first n atoms: p1..pn in numeric order when the carrier uses the
// default principal names, the carrier's own order otherwise.
std::vector<Atom> input_atoms(const Lattice& l, const AtomSet& atoms, std::size_t n) {
  if (atoms.size() < n) {
    throw DomainError(l.descriptor() + " provides only " + std::to_string(atoms.size()) +
                      " atoms; input size " + std::to_string(n) + " needs that many");
  }
  std::vector<Atom> numeric;
  for (std::size_t i = 1; i <= n; ++i) numeric.push_back("p" + std::to_string(i));
  bool all_present = std::all_of(numeric.begin(), numeric.end(), [&](const Atom& a) {
    return std::binary_search(atoms.begin(), atoms.end(), a);
  });
  if (all_present) return numeric;
  return {atoms.begin(), atoms.begin() + std::ptrdiff_t(n)};
}

}  // namespace

std::vector<Label> gen_input_labels(const Lattice& l, std::size_t n) {
  std::vector<Label> labels;
  labels.reserve(n);
  auto take_atoms = [&](const AtomSet& atoms) {
    for (const Atom& a : input_atoms(l, atoms, n)) labels.push_back(Label::atoms({a}));
  };
  if (auto* p = dynamic_cast<const PowersetLattice*>(&l)) {
    take_atoms(p->atoms());
  } else if (auto* t = dynamic_cast<const TruncatedPowersetLattice*>(&l)) {
    if (t->truncation() < 1) throw DomainError("trunc:0 has no singleton labels");
    take_atoms(t->atoms());
  } else if (auto* d = dynamic_cast<const DiscreteLattice*>(&l)) {
    take_atoms(d->atoms());
  } else if (auto* dc = dynamic_cast<const DcLabelLattice*>(&l)) {
    for (const Atom& a : input_atoms(l, dc->principals(), n)) {
      labels.push_back(Label::dc({{a}}, {}));
    }
  } else if (dynamic_cast<const NatChainLattice*>(&l)) {
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(Label::nat(i));
  } else {
    throw DomainError(l.descriptor() + " has no per-principal atom labels for input generation");
  }
  return labels;
}

LabeledSet gen_input(const Lattice& l, std::size_t n) {
  std::vector<Label> labels = gen_input_labels(l, n);
  LabeledSet out;
  for (std::size_t i = 0; i < n; ++i) out.insert(Value(i + 1), labels[i]);
  return out;
}

KpHook default_kp_hook(LatticePtr lattice) {
  return [lattice](const std::string& program_name) {
    std::vector<LabeledSet> universe;
    for (std::size_t n = 0; n <= 6; ++n) {
      try {
        universe.push_back(gen_input(*lattice, n));
      } catch (const DomainError&) {
        break;  // ran out of atoms
      }
    }
    std::optional<std::vector<Label>> good_sum_levels;
    if (program_name == "goodSum" && !universe.empty()) {
      good_sum_levels = labels_of(universe.back());
    }
    ProgramPtr p = make_program(program_name, lattice, std::move(good_sum_levels));
    return kp_oracle(*p, universe, lattice);
  };
}

namespace {

bool exponential_family(const Lattice& l) {
  switch (l.family()) {
    case Family::Powerset:
    case Family::DcLabels:
    case Family::Exponential:
      return true;
    default:
      return false;
  }
}

constexpr std::size_t kSafetyCapExponent = 20;  // refuse mef when 2^n > 2^20

struct SizePipeline {
  LatticePtr lattice;
  ProgramPtr program;
  std::optional<GaloisConnection> gc;
  Pipeline pipeline;
  LabeledSet input;
};

SizePipeline build_pipeline(const BenchConfig& cfg, const LatticePtr& lattice, std::size_t n) {
  SizePipeline out{lattice, nullptr, std::nullopt, Pipeline::Mef, gen_input(*lattice, n)};

  // A bare goodSum takes the per-size labels of the generated input as
  // its level family.
  std::optional<std::vector<Label>> good_sum_levels;
  if (cfg.program == "goodSum") good_sum_levels = gen_input_labels(*lattice, n);
  out.program = make_program(cfg.program, lattice, std::move(good_sum_levels));

  if (cfg.galois) {
    if (*cfg.galois == "specify") {
      // The per-size connection: specify at the join of the input labels.
      Label at = join_all(*lattice, labels_of(out.input));
      out.gc = specify_unspecify(lattice, std::move(at));
    } else {
      out.gc = parse_galois(*cfg.galois, lattice, default_kp_hook(lattice));
    }
  }

  out.pipeline = cfg.pipeline.value_or(cfg.galois ? Pipeline::MefGalois : Pipeline::Mef);
  if (out.pipeline == Pipeline::MefGalois && !out.gc) {
    throw DomainError("mef-galois pipeline needs a --galois descriptor");
  }
  return out;
}

LabeledSet run_pipeline(const SizePipeline& p, std::size_t closure_limit) {
  switch (p.pipeline) {
    case Pipeline::Raw:
      return p.program->run(p.input);
    case Pipeline::Mef:
      return mef(*p.lattice, *p.program, p.input, closure_limit);
    case Pipeline::MefGalois:
      return mef_galois(*p.gc, *p.program, p.input, closure_limit);
  }
  throw InternalError("unreachable pipeline");
}

}  // namespace

std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg) {
  if (cfg.repetitions < 1) throw DomainError("repetitions must be at least 1");
  if (cfg.stride < 1) throw DomainError("stride must be at least 1");
  if (cfg.size_to < cfg.size_from) throw DomainError("empty size range");

  LatticePtr lattice = parse_lattice(cfg.lattice);

  Pipeline pipeline = cfg.pipeline.value_or(cfg.galois ? Pipeline::MefGalois : Pipeline::Mef);
  if (pipeline == Pipeline::Mef && exponential_family(*lattice) && !cfg.allow_exponential &&
      cfg.size_to > kSafetyCapExponent) {
    throw LimitError("mef over " + lattice->descriptor() + " is Theta(2^n); size " +
                         std::to_string(cfg.size_to) + " exceeds 2^" +
                         std::to_string(kSafetyCapExponent) +
                         " executions. Pass --allow-exponential to run anyway",
                     kSafetyCapExponent);
  }
  std::size_t closure_limit = cfg.allow_exponential ? 64 : kSafetyCapExponent;

  std::vector<BenchRecord> records;
  for (std::size_t n = cfg.size_from; n <= cfg.size_to; n += cfg.stride) {
    SizePipeline p = build_pipeline(cfg, lattice, n);
    BenchRecord record;
    record.size = n;

    if (cfg.mode == BenchMode::Count) {
      p.program->reset_runs();
      LabeledSet first = run_pipeline(p, closure_limit);
      record.runs = p.program->runs();
      // Repetitions collapse in count mode; determinism is asserted.
      p.program->reset_runs();
      LabeledSet second = run_pipeline(p, closure_limit);
      if (p.program->runs() != record.runs || !(second == first)) {
        throw InternalError("count mode is nondeterministic for program '" + cfg.program +
                            "' at size " + std::to_string(n));
      }
      record.mean_seconds = double(record.runs);
    } else {
      using clock = std::chrono::steady_clock;
      run_pipeline(p, closure_limit);  // warm-up
      p.program->reset_runs();
      double total = 0.0;
      for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
        auto start = clock::now();
        LabeledSet out = run_pipeline(p, closure_limit);
        auto stop = clock::now();
        total += std::chrono::duration<double>(stop - start).count();
        if (rep == 0) record.runs = p.program->runs();
      }
      record.mean_seconds = total / double(cfg.repetitions);
      record.runs = p.program->runs() / cfg.repetitions;
    }
    records.push_back(record);
  }

  if (!cfg.out.empty()) {
    std::ofstream file(cfg.out);
    if (!file) throw Error("cannot write CSV to " + cfg.out);
    file << to_csv(records, cfg.mode);
  }
  return records;
}

std::string to_csv(const std::vector<BenchRecord>& records, BenchMode mode) {
  std::ostringstream out;
  out << "Size,Mean\n";
  for (const auto& r : records) {
    out << r.size << ',';
    if (mode == BenchMode::Count) {
      out << r.runs;
    } else {
      char buffer[64];
      std::snprintf(buffer, sizeof buffer, "%.17g", r.mean_seconds);
      out << buffer;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<BenchRecord> parse_csv(const std::string& text, BenchMode mode) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "Size,Mean") {
    throw ParseError("CSV must start with the header 'Size,Mean'");
  }
  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("malformed CSV row '" + line + "'");
    BenchRecord r;
    auto [p1, e1] = std::from_chars(line.data(), line.data() + comma, r.size);
    if (e1 != std::errc() || p1 != line.data() + comma) {
      throw ParseError("bad size in CSV row '" + line + "'");
    }
    std::string mean = line.substr(comma + 1);
    if (mode == BenchMode::Count) {
      auto [p2, e2] = std::from_chars(mean.data(), mean.data() + mean.size(), r.runs);
      if (e2 != std::errc() || p2 != mean.data() + mean.size()) {
        throw ParseError("bad count in CSV row '" + line + "'");
      }
      r.mean_seconds = double(r.runs);
    } else {
      r.mean_seconds = std::stod(mean);
    }
    records.push_back(r);
  }
  return records;
}

}  // namespace mexec
