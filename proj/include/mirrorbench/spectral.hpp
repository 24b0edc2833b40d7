#pragma once

#include <cstddef>
#include <vector>

#include "mirrorbench/graph.hpp"

namespace mirrorbench {

enum class LaplacianKind { combinatorial, normalized };

inline constexpr std::size_t kDenseSpectrumLimit = 3000;
inline constexpr std::size_t kDefaultTruncatedRank = 500;

struct SpectrumResult {
  /// Sorted descending.
  std::vector<double> eigenvalues;
  LaplacianKind kind = LaplacianKind::combinatorial;
  /// True when only an extremal part of the spectrum was computed.
  bool truncated = false;
};

/// Full spectrum with a dense symmetric eigensolver. Throws
/// ErrorCode::size_limit above dense_limit nodes; use the truncated solver
/// for those.
SpectrumResult laplacian_spectrum(const Graph& g, LaplacianKind kind,
                                  std::size_t dense_limit = kDenseSpectrumLimit);

enum class SpectrumEnd { largest, smallest };

/// The `rank` extremal eigenvalues from a Lanczos iteration with full
/// reorthogonalization, sorted descending.
SpectrumResult laplacian_spectrum_truncated(const Graph& g, LaplacianKind kind, std::size_t rank,
                                            SpectrumEnd end = SpectrumEnd::largest);

/// y = L x for the requested Laplacian, without materializing L.
void laplacian_apply(const Graph& g, LaplacianKind kind, const std::vector<double>& x,
                     std::vector<double>& y);

}  // namespace mirrorbench
