#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "relpoly/patterns.hpp"
#include "relpoly/relations.hpp"
#include "relpoly/tiling.hpp"

namespace relpoly {

struct FaceDimInstance {
  std::string family;  // C1, C2, C1+, C2-, empty
  RelationSet c;
  Pattern x;
};

// Random integer C-patterns with entries in [0, width] for the families
// above and n in 2..5. Deterministic in the seed.
std::vector<FaceDimInstance> random_instances(std::uint64_t seed, std::size_t count, int width = 4);

// Compares the tiling formulas against the active-constraint oracle on P_C,
// P_C(λ), P_C(λ,μ) and, where the formulas apply, the nonnegative variants;
// also checks the perturbation basis. Returns one message per mismatch.
std::vector<std::string> check_instance(const FaceDimInstance& instance, const KernelRoutine& kernel_routine);

struct SelftestOptions {
  std::uint64_t seed = 0;
  std::size_t instances = 240;
  bool mutate_kernel = false;  // negative control: drop a kernel vector
};

struct SelftestReport {
  std::size_t facedim_instances = 0;
  std::size_t facedim_failures = 0;
  std::size_t commutator_modules = 0;
  std::size_t commutator_checks = 0;
  std::size_t commutator_failures = 0;
  std::vector<std::string> messages;

  bool ok() const { return facedim_failures == 0 && commutator_failures == 0; }
};

SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace relpoly
