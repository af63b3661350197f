#include "ergo/word_metric.hpp"

#include <algorithm>
#include <cmath>

namespace ergo {

WordMetric::WordMetric(Group group, Config config)
    : group_(std::move(group)), config_(config) {
    GroupElement e = group_.identity();
    length_[e] = 0;
    frontiers_.push_back({e});
}

void WordMetric::extend_to(int r) {
    if (r <= radius_) return;
    if (r > config_.radius_cap)
        throw CapExceeded("radius " + std::to_string(r) +
                          " exceeds cap " + std::to_string(config_.radius_cap));
    const auto& gens = group_.generators();
    while (radius_ < r) {
        std::vector<GroupElement> next;
        for (const auto& g : frontiers_[radius_]) {
            for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
                GroupElement h = group_.multiply(g, gens[i]);
                if (length_.count(h)) continue;
                length_[h] = radius_ + 1;
                parent_[h] = Parent{g, i};
                next.push_back(h);
                if (length_.size() > config_.element_budget)
                    throw BudgetExceeded(
                        "element budget exceeded at radius " +
                        std::to_string(radius_ + 1));
            }
        }
        std::sort(next.begin(), next.end());
        frontiers_.push_back(std::move(next));
        ++radius_;
    }
}

int WordMetric::length(const GroupElement& g) {
    auto it = length_.find(g);
    if (it != length_.end()) return it->second;
    while (radius_ < config_.radius_cap) {
        extend_to(radius_ + 1);
        it = length_.find(g);
        if (it != length_.end()) return it->second;
    }
    throw CapExceeded("element beyond radius cap " +
                      std::to_string(config_.radius_cap));
}

int WordMetric::cached_length(const GroupElement& g) const {
    auto it = length_.find(g);
    if (it == length_.end())
        throw CapExceeded("element not in cached ball of radius " +
                          std::to_string(radius_));
    return it->second;
}

bool WordMetric::contains(const GroupElement& g) const {
    return length_.count(g) != 0;
}

std::vector<GroupElement> WordMetric::ball(int n) {
    if (n < 0) throw UsageError("ball: negative radius");
    extend_to(n);
    std::vector<GroupElement> out;
    for (int k = 0; k <= n; ++k)
        out.insert(out.end(), frontiers_[k].begin(), frontiers_[k].end());
    return out;
}

const std::vector<GroupElement>& WordMetric::sphere(int n) {
    if (n < 0) throw UsageError("sphere: negative radius");
    extend_to(n);
    return frontiers_[n];
}

std::size_t WordMetric::ball_size(int n) {
    extend_to(n);
    std::size_t total = 0;
    for (int k = 0; k <= n; ++k) total += frontiers_[k].size();
    return total;
}

const WordMetric::Parent& WordMetric::parent(const GroupElement& g) const {
    auto it = parent_.find(g);
    if (it == parent_.end())
        throw CapExceeded("no geodesic parent cached for element");
    return it->second;
}

LengthAxiomReport WordMetric::check_length_axioms(int sample_radius) {
    extend_to(2 * sample_radius);
    LengthAxiomReport report;
    report.sample_radius = sample_radius;
    auto b = ball(sample_radius);
    for (const auto& g : b) {
        int lg = cached_length(g);
        if ((lg == 0) != group_.is_identity(g)) {
            ++report.violations;
            report.max_violation = std::max<std::int64_t>(report.max_violation, 1);
        }
        int linv = cached_length(group_.inverse(g));
        if (linv != lg) {
            ++report.violations;
            report.max_violation =
                std::max<std::int64_t>(report.max_violation, std::abs(linv - lg));
        }
        for (const auto& h : b) {
            int lgh = cached_length(group_.multiply(g, h));
            int excess = lgh - lg - cached_length(h);
            if (excess > 0) {
                ++report.violations;
                report.max_violation =
                    std::max<std::int64_t>(report.max_violation, excess);
            }
        }
    }
    return report;
}

std::vector<std::pair<int, double>> WordMetric::growth_exponents(int n_max) {
    if (n_max < 2) throw UsageError("growth_exponents: n_max must be >= 2");
    std::vector<std::pair<int, double>> out;
    for (int n = 2; n <= n_max; ++n) {
        double v = std::log(static_cast<double>(ball_size(n))) / std::log(n);
        out.emplace_back(n, v);
    }
    return out;
}

}  // namespace ergo
