#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "momentlab/ensemble.hpp"
#include "momentlab/experiments.hpp"

namespace momentlab {

using KillipNenciuBuilder =
    std::function<SymmetricTridiagonal(const CanonicalSample&)>;

/// Killip-Nenciu matrix against 4J - 2I over `samples` random samples with
/// n cycling through 1..50. The builder is injectable so the check can be
/// shown to reject a perturbed construction.
Check check_affine_identity(std::uint64_t seed, std::size_t samples = 1000,
                            const KillipNenciuBuilder& builder =
                                build_killip_nenciu);

/// Every invariant check of the library, seeded for its random inputs.
std::vector<Check> run_selftest(std::uint64_t seed, unsigned threads = 1);

}  // namespace momentlab
