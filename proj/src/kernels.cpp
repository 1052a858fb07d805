#include "foldwave/kernels.hpp"

#include <algorithm>
#include <exception>

#include "foldwave/angles.hpp"
#include "foldwave/errors.hpp"
#include "foldwave/strip_dynamics.hpp"

namespace foldwave {

namespace {

// out[i] = fn(i). Exceptions are caught per index so that the parallel path
// reports the same failure as the serial one.
template <typename T, typename Fn>
std::vector<T> indexed_map(std::size_t count, Execution exec, Fn fn) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
      try {
        out[i] = fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (long long i = 0; i < n; ++i) {
      try {
        out[i] = fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

double configuration_residual(const StripDesign& design, double rho0, std::size_t cells) {
  const Orbit orbit = iterate(design, rho0, cells);
  double worst = 0.0;
  for (std::size_t n = 0; n < orbit.full_states.size(); ++n) {
    worst = std::max(worst, closure_residual(design.vertex(n).angles, orbit.full_states[n]));
  }
  return worst;
}

}  // namespace

std::vector<std::vector<double>> orbit_sweep(const StripDesign& design,
                                             std::span<const double> rho0s, std::size_t cells,
                                             Execution exec) {
  return indexed_map<std::vector<double>>(rho0s.size(), exec, [&](std::size_t i) {
    return iterate(design, rho0s[i], cells).rho_t;
  });
}

std::vector<Mesh> frame_sweep(const StripDesign& design, std::span<const double> rho0s,
                              std::size_t cells, Execution exec) {
  return indexed_map<Mesh>(rho0s.size(), exec, [&](std::size_t i) {
    return build_mesh(propagate(design, rho0s[i], cells));
  });
}

double max_closure_residual(const StripDesign& design, std::span<const double> rho0s,
                            std::size_t cells, Execution exec) {
  const std::vector<double> per_frame = indexed_map<double>(
      rho0s.size(), exec,
      [&](std::size_t i) { return configuration_residual(design, rho0s[i], cells); });
  return per_frame.empty() ? 0.0 : *std::max_element(per_frame.begin(), per_frame.end());
}

std::vector<double> frame_angles(std::size_t count, bool negative) {
  if (count < 2) throw DomainError("at least two frames are needed");
  const double end = (negative ? -1.0 : 1.0) * kPi * (1.0 - 1e-6);
  std::vector<double> angles(count);
  for (std::size_t k = 0; k < count; ++k) {
    angles[k] = end * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  return angles;
}

}  // namespace foldwave
