#include "ergo/rng.hpp"

#include <algorithm>
#include <unordered_set>

#include "ergo/errors.hpp"

namespace ergo {

std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t universe, std::uint64_t k) {
    if (k > universe) throw input_error("sample size exceeds universe");
    std::vector<std::uint64_t> chosen;
    std::unordered_set<std::uint64_t> seen;
    chosen.reserve(static_cast<std::size_t>(k));
    seen.reserve(static_cast<std::size_t>(k) * 2);
    // Floyd: for t in [universe-k, universe), draw from [0,t]; a repeat maps to t itself.
    for (std::uint64_t t = universe - k; t < universe; ++t) {
        const std::uint64_t r = uniform_below(rng, t + 1);
        const std::uint64_t pick = seen.count(r) ? t : r;
        seen.insert(pick);
        chosen.push_back(pick);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace ergo
