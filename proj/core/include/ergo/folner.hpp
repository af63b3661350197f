#ifndef ERGO_FOLNER_HPP
#define ERGO_FOLNER_HPP

#include <map>
#include <set>
#include <vector>

#include "ergo/word_metric.hpp"

namespace ergo {

/// Finite subset of a group, kept as a sorted set for canonical iteration.
using FiniteSubset = std::set<GroupElement>;

FiniteSubset to_subset(const std::vector<GroupElement>& v);

/// Finitely supported probability measure. Weights must sum to 1 within
/// 1e-12 when used as a probability measure; sub-probability intermediates
/// are allowed during construction.
struct FiniteMeasure {
    std::map<GroupElement, double> weights;

    double mass() const;
    double operator()(const GroupElement& g) const {
        auto it = weights.find(g);
        return it == weights.end() ? 0.0 : it->second;
    }
};

struct FolnerDiagnostics {
    std::size_t set_size = 0;
    std::size_t boundary_size = 0;
    int diameter = 0;
    double controlled_constant = 0.0;  // diameter * |boundary| / |set|
};

/// dF = union over generators s of sF symdiff F.
FiniteSubset boundary(const Group& group, const FiniteSubset& F);

/// Least m with F contained in B(m), i.e. max word length over F.
int diameter(WordMetric& metric, const FiniteSubset& F);

/// |gF symdiff F| / |F|.
double folner_ratio(const Group& group, const FiniteSubset& F,
                    const GroupElement& g);

FolnerDiagnostics controlled_constant(WordMetric& metric, const FiniteSubset& F);

/// All n <= n_max with controlled_constant(B(n)) <= K, increasing.
/// An empty result is a valid return.
std::vector<int> shalom_ball_subsequence(WordMetric& metric, double K, int n_max);

FiniteMeasure uniform_measure(const FiniteSubset& F);

/// (g * mu)(h) = mu(g^{-1} h).
FiniteMeasure left_translate(const Group& group, const GroupElement& g,
                             const FiniteMeasure& mu);

/// Total-variation distance ||mu - g*mu||_1, in [0,2].
double reiter_defect(const Group& group, const FiniteMeasure& mu,
                     const GroupElement& g);

/// Convex combination; weights must be a simplex vector (sum within 1e-9).
FiniteMeasure mix_measures(const std::vector<FiniteMeasure>& ms,
                           const std::vector<double>& weights);

}  // namespace ergo

#endif
