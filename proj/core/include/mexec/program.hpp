#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "mexec/labeled_set.hpp"

namespace mexec {

// A batch-job program from labeled sets to labeled sets, instrumented
// with a run counter. The function must be deterministic; the counter is
// bumped exactly once per invocation and is safe to read concurrently.
class Program {
public:
  using Fn = std::function<LabeledSet(const LabeledSet&)>;

  Program(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}
  Program(const Program&) = delete;
  Program& operator=(const Program&) = delete;

  const std::string& name() const { return name_; }

  LabeledSet run(const LabeledSet& x) const {
    runs_.fetch_add(1, std::memory_order_relaxed);
    return fn_(x);
  }

  std::uint64_t runs() const { return runs_.load(std::memory_order_relaxed); }
  void reset_runs() const { runs_.store(0, std::memory_order_relaxed); }

private:
  std::string name_;
  Fn fn_;
  mutable std::atomic<std::uint64_t> runs_{0};
};

using ProgramPtr = std::shared_ptr<const Program>;

}  // namespace mexec
