// Independent oracles used by the test suites. Everything here is computed
// by brute force or closed form, never through the library code paths under
// test.
#ifndef ERGO_TESTS_ORACLES_HPP
#define ERGO_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ergo/group.hpp"

namespace oracles {

/// |{x in Z^d : sum |x_i| <= n}| by direct enumeration.
inline std::size_t lattice_ball_count(int d, int n) {
    std::size_t count = 0;
    std::vector<std::int64_t> x(d, -n);
    while (true) {
        std::int64_t l1 = 0;
        for (auto v : x) l1 += std::llabs(v);
        if (l1 <= n) ++count;
        int i = 0;
        while (i < d && ++x[i] > n) x[i++] = -n;
        if (i == d) break;
    }
    return count;
}

inline double harmonic_number(int n) {
    double h = 0.0;
    for (int k = n; k >= 1; --k) h += 1.0 / k;
    return h;
}

/// Min word length over all generator words of length <= max_len, by
/// exhaustive enumeration of products.
inline std::map<ergo::GroupElement, int> brute_force_lengths(
    const ergo::Group& g, int max_len) {
    std::map<ergo::GroupElement, int> best;
    best[g.identity()] = 0;
    std::vector<ergo::GroupElement> layer{g.identity()};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<ergo::GroupElement> next;
        for (const auto& w : layer) {
            for (const auto& s : g.generators()) {
                ergo::GroupElement p = g.multiply(w, s);
                if (!best.count(p)) {
                    best[p] = len;
                    next.push_back(p);
                }
            }
        }
        layer = std::move(next);
    }
    return best;
}

/// Exhaustive simplex grid minimum of c^T Q c at the given resolution.
inline double simplex_grid_min(const std::vector<std::vector<double>>& Q,
                               double resolution) {
    std::size_t n = Q.size();
    int steps = static_cast<int>(std::llround(1.0 / resolution));
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> idx(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n) {
            idx[i] = left;
            double J = 0.0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    J += (idx[a] * resolution) * Q[a][b] * (idx[b] * resolution);
            best = std::min(best, J);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            idx[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, steps);
    return best;
}

}  // namespace oracles

#endif
