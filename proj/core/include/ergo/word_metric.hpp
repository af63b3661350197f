#ifndef ERGO_WORD_METRIC_HPP
#define ERGO_WORD_METRIC_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "ergo/group.hpp"

namespace ergo {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthAxiomReport {
    int sample_radius = 0;
    std::size_t violations = 0;
    std::int64_t max_violation = 0;  // worst excess of |gh| over |g|+|h|, etc.
};

/// BFS word metric from the identity, with per-radius frontiers and geodesic
/// parent links. Grown on demand up to a configurable radius cap; exceeding
/// the cap or the element budget is an error, never a silent truncation.
struct MetricConfig {
    int radius_cap = 14;
    std::size_t element_budget = 10'000'000;
};

class WordMetric {
public:
    using Config = MetricConfig;

    explicit WordMetric(Group group, Config config = {});

    const Group& group() const { return group_; }
    int radius() const { return radius_; }
    const Config& config() const { return config_; }

    /// Runs BFS out to radius r (throws BudgetExceeded / CapExceeded).
    void extend_to(int r);

    /// Word length; extends the cache up to the cap if needed.
    int length(const GroupElement& g);
    /// Length lookup without growing the cache; throws CapExceeded if unseen.
    int cached_length(const GroupElement& g) const;
    bool contains(const GroupElement& g) const;

    std::vector<GroupElement> ball(int n);
    const std::vector<GroupElement>& sphere(int n);
    std::size_t ball_size(int n);

    /// For g != e, the BFS predecessor p and generator index i with g = p * s_i.
    struct Parent {
        GroupElement parent;
        int generator = -1;
    };
    const Parent& parent(const GroupElement& g) const;

    /// Checks |g|=0 iff g=e, |g^{-1}|=|g| and |gh| <= |g|+|h| over B(radius)^2.
    LengthAxiomReport check_length_axioms(int sample_radius);

    /// Diagnostic sequence (n, log|B(n)| / log n) for n = 2..n_max.
    std::vector<std::pair<int, double>> growth_exponents(int n_max);

private:
    Group group_;
    Config config_;
    int radius_ = 0;
    std::map<GroupElement, int> length_;
    std::map<GroupElement, Parent> parent_;
    std::vector<std::vector<GroupElement>> frontiers_;  // frontiers_[n] = S(n)
};

}  // namespace ergo

#endif
