#include "octocf/classical.hpp"

namespace octocf::classical {

std::vector<IntVec2> approximation_sequence(const ConvergentRun& run) {
  std::vector<IntVec2> out;
  for (std::size_t n = 0; n < run.convergents.size(); ++n) {
    out.insert(out.end(), run.intermediates[n].begin(), run.intermediates[n].end());
    out.push_back(run.convergents[n]);
  }
  return out;
}

}  // namespace octocf::classical
