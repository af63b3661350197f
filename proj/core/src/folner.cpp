#include "ergo/folner.hpp"

#include <algorithm>
#include <cmath>

#include "ergo/numeric.hpp"

namespace ergo {

FiniteSubset to_subset(const std::vector<GroupElement>& v) {
    return FiniteSubset(v.begin(), v.end());
}

double FiniteMeasure::mass() const {
    KahanSum s;
    for (const auto& [g, w] : weights) s.add(w);
    return s.value();
}

namespace {

FiniteSubset translate_set(const Group& group, const GroupElement& g,
                           const FiniteSubset& F) {
    FiniteSubset out;
    for (const auto& h : F) out.insert(group.multiply(g, h));
    return out;
}

FiniteSubset symdiff(const FiniteSubset& a, const FiniteSubset& b) {
    FiniteSubset out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(out, out.begin()));
    return out;
}

}  // namespace

FiniteSubset boundary(const Group& group, const FiniteSubset& F) {
    FiniteSubset out;
    for (const auto& s : group.generators()) {
        FiniteSubset d = symdiff(translate_set(group, s, F), F);
        out.insert(d.begin(), d.end());
    }
    return out;
}

int diameter(WordMetric& metric, const FiniteSubset& F) {
    if (F.empty()) throw UsageError("diameter of empty set");
    int d = 0;
    for (const auto& g : F) d = std::max(d, metric.length(g));
    return d;
}

double folner_ratio(const Group& group, const FiniteSubset& F,
                    const GroupElement& g) {
    if (F.empty()) throw UsageError("folner_ratio of empty set");
    FiniteSubset d = symdiff(translate_set(group, g, F), F);
    return static_cast<double>(d.size()) / static_cast<double>(F.size());
}

FolnerDiagnostics controlled_constant(WordMetric& metric, const FiniteSubset& F) {
    if (F.empty()) throw UsageError("controlled_constant of empty set");
    FolnerDiagnostics diag;
    diag.set_size = F.size();
    diag.boundary_size = boundary(metric.group(), F).size();
    diag.diameter = diameter(metric, F);
    diag.controlled_constant = static_cast<double>(diag.diameter) *
                               static_cast<double>(diag.boundary_size) /
                               static_cast<double>(diag.set_size);
    return diag;
}

std::vector<int> shalom_ball_subsequence(WordMetric& metric, double K, int n_max) {
    if (K <= 0) throw UsageError("shalom_ball_subsequence: K must be > 0");
    std::vector<int> out;
    for (int n = 1; n <= n_max; ++n) {
        FiniteSubset b = to_subset(metric.ball(n));
        if (controlled_constant(metric, b).controlled_constant <= K)
            out.push_back(n);
    }
    return out;
}

FiniteMeasure uniform_measure(const FiniteSubset& F) {
    if (F.empty()) throw UsageError("uniform_measure of empty set");
    FiniteMeasure mu;
    double w = 1.0 / static_cast<double>(F.size());
    for (const auto& g : F) mu.weights[g] = w;
    return mu;
}

FiniteMeasure left_translate(const Group& group, const GroupElement& g,
                             const FiniteMeasure& mu) {
    FiniteMeasure out;
    for (const auto& [h, w] : mu.weights)
        out.weights[group.multiply(g, h)] = w;
    return out;
}

double reiter_defect(const Group& group, const FiniteMeasure& mu,
                     const GroupElement& g) {
    FiniteMeasure shifted = left_translate(group, g, mu);
    KahanSum s;
    // union of supports, in canonical order
    auto it = mu.weights.begin();
    auto jt = shifted.weights.begin();
    while (it != mu.weights.end() || jt != shifted.weights.end()) {
        if (jt == shifted.weights.end() ||
            (it != mu.weights.end() && it->first < jt->first)) {
            s.add(std::abs(it->second));
            ++it;
        } else if (it == mu.weights.end() || jt->first < it->first) {
            s.add(std::abs(jt->second));
            ++jt;
        } else {
            s.add(std::abs(it->second - jt->second));
            ++it;
            ++jt;
        }
    }
    return s.value();
}

FiniteMeasure mix_measures(const std::vector<FiniteMeasure>& ms,
                           const std::vector<double>& weights) {
    if (ms.size() != weights.size() || ms.empty())
        throw UsageError("mix_measures: size mismatch or empty input");
    KahanSum total;
    for (double w : weights) {
        if (w < 0) throw UsageError("mix_measures: negative weight");
        total.add(w);
    }
    if (std::abs(total.value() - 1.0) > 1e-9)
        throw UsageError("mix_measures: weights do not sum to 1");
    FiniteMeasure out;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (const auto& [g, w] : ms[i].weights)
            out.weights[g] += weights[i] * w;
    return out;
}

}  // namespace ergo
