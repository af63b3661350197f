#include "ergo/cocycle.hpp"

#include <cmath>

namespace ergo {

Cocycle::Cocycle(Representation rep, std::shared_ptr<WordMetric> metric,
                 std::map<GroupElement, SparseVector> generator_values,
                 std::string name)
    : rep_(std::move(rep)),
      metric_(std::move(metric)),
      generator_values_(std::move(generator_values)),
      name_(std::move(name)) {
    const Group& g = metric_->group();
    for (const auto& s : g.generators()) {
        if (!generator_values_.count(s))
            throw UsageError("cocycle: missing value on generator " +
                             g.format(s));
    }
    cache_[g.identity()] = SparseVector{};
}

Cocycle Cocycle::coboundary(const Representation& rep,
                            std::shared_ptr<WordMetric> metric,
                            const SparseVector& xi) {
    std::map<GroupElement, SparseVector> vals;
    for (const auto& s : metric->group().generators())
        vals[s] = xi - rep.apply(s, xi);
    return Cocycle(rep, std::move(metric), std::move(vals), "coboundary");
}

Cocycle Cocycle::z_generated(const Representation& rep,
                             std::shared_ptr<WordMetric> metric,
                             const SparseVector& xi) {
    const Group& g = metric->group();
    if (g.kind() != GroupKind::FreeAbelian || g.rank() != 1)
        throw UsageError("z_generated cocycle requires the group zd:1");
    std::map<GroupElement, SparseVector> vals;
    GroupElement plus = g.generators()[0];
    GroupElement minus = g.generators()[1];
    vals[plus] = xi;
    // b(-1) = -pi_{-1} b(1)
    vals[minus] = -1.0 * rep.apply(minus, xi);
    return Cocycle(rep, std::move(metric), std::move(vals), "generated");
}

Cocycle Cocycle::zd_generated(const Representation& rep,
                              std::shared_ptr<WordMetric> metric,
                              const std::vector<SparseVector>& xis) {
    const Group& g = metric->group();
    if (g.kind() != GroupKind::FreeAbelian)
        throw UsageError("zd_generated cocycle requires a free abelian group");
    int d = g.rank();
    if (static_cast<int>(xis.size()) != d)
        throw UsageError("zd_generated: need one vector per coordinate");
    if (d == 1) return z_generated(rep, std::move(metric), xis[0]);
    // (pi_{e_i} - 1) xi_j = (pi_{e_j} - 1) xi_i for i < j
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const GroupElement& ei = g.generators()[2 * i];
            const GroupElement& ej = g.generators()[2 * j];
            SparseVector lhs = rep.apply(ei, xis[j]) - xis[j];
            SparseVector rhs = rep.apply(ej, xis[i]) - xis[i];
            double defect = norm(lhs - rhs);
            if (defect > 1e-9)
                throw UsageError(
                    "zd_generated: incompatible generator pair (" +
                    std::to_string(i) + "," + std::to_string(j) +
                    "), defect " + std::to_string(defect));
        }
    }
    std::map<GroupElement, SparseVector> vals;
    for (int i = 0; i < d; ++i) {
        const GroupElement& ei = g.generators()[2 * i];
        const GroupElement& mi = g.generators()[2 * i + 1];
        vals[ei] = xis[i];
        vals[mi] = -1.0 * rep.apply(mi, xis[i]);
    }
    return Cocycle(rep, std::move(metric), std::move(vals), "generated");
}

const SparseVector& Cocycle::eval(const GroupElement& g) const {
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
    metric_->length(g);  // make sure the geodesic chain is cached
    // b(p s) = b(p) + pi_p b(s) along the BFS parent chain
    const auto& par = metric_->parent(g);
    const SparseVector& prefix = eval(par.parent);
    const SparseVector& step =
        generator_values_.at(metric_->group().generators()[par.generator]);
    SparseVector value = prefix + rep_.apply(par.parent, step);
    return cache_.emplace(g, std::move(value)).first->second;
}

void Cocycle::validate(int radius) const {
    const Group& grp = metric_->group();
    const auto& gens = grp.generators();
    for (const auto& g : metric_->ball(radius)) {
        int lg = metric_->cached_length(g);
        const SparseVector& bg = eval(g);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            GroupElement gs = grp.multiply(g, gens[i]);
            if (metric_->length(gs) != lg + 1) continue;
            SparseVector candidate = bg + rep_.apply(g, generator_values_.at(gens[i]));
            double disagreement = norm(candidate - eval(gs));
            if (disagreement > 1e-8)
                throw UsageError(
                    "incompatible generator data: geodesic words for " +
                    grp.format(gs) + " disagree by " +
                    std::to_string(disagreement));
        }
    }
}

double Cocycle::generator_norm_bound() const {
    double c = 0.0;
    for (const auto& s : metric_->group().generators())
        c = std::max(c, norm(eval(s)));
    return c;
}

Array array_of(const Cocycle& b) {
    return Array{b.rep(),
                 [&b](const GroupElement& g) { return b.eval(g); }};
}

SparseVector flat_eval(const Array& alpha, WordMetric& metric,
                       const GroupElement& g) {
    int len = metric.length(g);
    if (len == 0) return SparseVector{};  // 1/|e| denotes 0 by convention
    return (1.0 / static_cast<double>(len)) * alpha.eval(g);
}

Array tensor_array(const Array& alpha, std::shared_ptr<WordMetric> metric) {
    Representation trep = alpha.rep.tensor_rep();
    auto eval = alpha.eval;
    return Array{trep, [eval, metric](const GroupElement& g) {
                     int len = metric->length(g);
                     if (len == 0) return SparseVector{};
                     SparseVector a = eval(g);
                     return (1.0 / static_cast<double>(len)) * tensor(a, a);
                 }};
}

Array adjoint_star(const Array& alpha, const Group& group) {
    Representation rep = alpha.rep;
    auto eval = alpha.eval;
    return Array{rep, [rep, eval, group](const GroupElement& g) {
                     return rep.apply(g, eval(group.inverse(g)));
                 }};
}

double equivariance_defect(const Array& alpha, WordMetric& metric,
                           const GroupElement& g, int sample_radius) {
    const Group& grp = metric.group();
    double worst = 0.0;
    for (const auto& h : metric.ball(sample_radius)) {
        SparseVector lhs = alpha.rep.apply(g, alpha.eval(h));
        SparseVector rhs = alpha.eval(grp.multiply(g, h));
        worst = std::max(worst, norm(lhs - rhs));
    }
    return worst;
}

double tensor_array_bound(double B_g, double D, int len_g,
                          double norm_tilde_g, double norm_tilde_ginv) {
    double lg = static_cast<double>(len_g);
    double main = B_g * D * (lg + 2.0) + D * D * lg * (lg + 1.0);
    return std::max({main, norm_tilde_g, norm_tilde_ginv});
}

}  // namespace ergo
