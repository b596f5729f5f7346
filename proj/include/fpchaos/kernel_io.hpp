#pragma once

#include <cstdint>
#include <string>

#include "fpchaos/kernels.hpp"

namespace fpchaos {

// Kernel file format:
//   { "q": int, "bins": int, "cell_width": real,
//     "entries": [ [i1, ..., iq, re, im], ... ] }
// Entries that are omitted are zero; an index may appear at most once.

GridKernel parse_kernel_json(const std::string& text);
GridKernel load_kernel(const std::string& path);
std::string kernel_to_json(const GridKernel& f);

/// Uniform noise in [-1, 1) on every cell, averaged with its adjoint so the
/// result is mirror symmetric. Fully determined by `seed`.
GridKernel random_mirror_symmetric(int q, Grid grid, std::uint64_t seed);

}  // namespace fpchaos
