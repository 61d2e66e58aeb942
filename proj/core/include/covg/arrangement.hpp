#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "covg/com.hpp"
#include "covg/lp.hpp"

namespace covg {

/// Labeled affine forms (the hyperplanes) plus an open polyhedral region given
/// by strict inequalities region[j](x) > 0. An empty region means the whole space.
struct Arrangement {
  std::size_t dimension = 0;
  std::vector<std::string> labels;
  std::vector<AffineForm> forms;
  std::vector<AffineForm> region;

  /// Throws Errc::LengthMismatch on inconsistent dimensions or label count.
  void validate() const;
};

struct EnumerationOptions {
  std::size_t max_forms = 14;
};

/// All sign vectors realized by a face of the arrangement meeting the region.
/// Exhaustive over {+,-,0}^m with prefix pruning; one exact LP per node.
/// Throws Errc::EmptyRegion, Errc::CapExceeded.
COM enumerate_covectors(const Arrangement& a, const EnumerationOptions& options = {});

/// The forms x_i - x_j (i < j) in R^n with no region.
Arrangement braid_arrangement(std::size_t n);

/// Braid COM built directly from ordered set partitions (no LP). The sign at
/// (i,j) is + when i's block comes before j's block ("earlier block = larger
/// coordinate"), - when after, 0 when shared.
COM braid_com(std::size_t n);

/// Ground label of the pair (i,j), 1-based: "12" for n <= 9, else "i,j".
std::string braid_pair_label(std::size_t i, std::size_t j, std::size_t n);

/// All ordered set partitions of {0,...,n-1}, each as a block index per element.
std::vector<std::vector<std::size_t>> ordered_set_partitions(std::size_t n);

}  // namespace covg
