#pragma once

// Batch kernels over many input fold angles. Each has a serial reference
// path and an OpenMP path; both return identical results in input order.
// When several inputs fail, the exception of the lowest index is rethrown.

#include <cstddef>
#include <span>
#include <vector>

#include "foldwave/embedding.hpp"
#include "foldwave/strip_design.hpp"

namespace foldwave {

enum class Execution { Serial, Parallel };

/// Cell-boundary orbit for every rho0.
std::vector<std::vector<double>> orbit_sweep(const StripDesign& design,
                                             std::span<const double> rho0s, std::size_t cells,
                                             Execution exec = Execution::Parallel);

/// Folded mesh for every rho0 (one animation frame each).
std::vector<Mesh> frame_sweep(const StripDesign& design, std::span<const double> rho0s,
                              std::size_t cells, Execution exec = Execution::Parallel);

/// Largest loop-closure residual over every vertex of every configuration.
double max_closure_residual(const StripDesign& design, std::span<const double> rho0s,
                            std::size_t cells, Execution exec = Execution::Parallel);

/// rho0 = linspace(0, sign * pi * (1 - 1e-6), count). Throws DomainError for count < 2.
std::vector<double> frame_angles(std::size_t count, bool negative = false);

}  // namespace foldwave
