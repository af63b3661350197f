#ifndef ERGO_COCYCLE_HPP
#define ERGO_COCYCLE_HPP

#include <functional>
#include <map>
#include <memory>

#include "ergo/hilbert.hpp"
#include "ergo/word_metric.hpp"

namespace ergo {

/// 1-cocycle b: G -> H for a representation pi, i.e. b(gh) = pi_g b(h) + b(g).
/// Values are accumulated along BFS geodesics and memoized; well-definedness
/// is validated by multi-geodesic cross-checks, not assumed.
class Cocycle {
public:
    Cocycle(Representation rep, std::shared_ptr<WordMetric> metric,
            std::map<GroupElement, SparseVector> generator_values,
            std::string name = "cocycle");

    /// b(g) = xi - pi_g xi; the affine action fixes xi exactly.
    static Cocycle coboundary(const Representation& rep,
                              std::shared_ptr<WordMetric> metric,
                              const SparseVector& xi);

    /// On Z: b determined by b(1) = xi, b(n) = sum_{k<n} pi_k xi,
    /// b(-n) = -pi_{-n} b(n).
    static Cocycle z_generated(const Representation& rep,
                               std::shared_ptr<WordMetric> metric,
                               const SparseVector& xi);

    /// On Z^d with b(e_i) = xi_i; requires the compatibility conditions
    /// (pi_{e_i} - 1) xi_j = (pi_{e_j} - 1) xi_i, checked to 1e-9.
    static Cocycle zd_generated(const Representation& rep,
                                std::shared_ptr<WordMetric> metric,
                                const std::vector<SparseVector>& xis);

    const SparseVector& eval(const GroupElement& g) const;

    const Representation& rep() const { return rep_; }
    const Group& group() const { return metric_->group(); }
    WordMetric& metric() const { return *metric_; }
    const std::string& name() const { return name_; }

    /// Cross-checks all geodesic continuations on B(radius): for every cached
    /// g and generator s with |gs| = |g| + 1, the two routes to b(gs) must
    /// agree within 1e-8; throws UsageError("incompatible generator data")
    /// otherwise.
    void validate(int radius) const;

    /// sup over generators of ||b(s)||.
    double generator_norm_bound() const;

private:
    Representation rep_;
    std::shared_ptr<WordMetric> metric_;
    std::map<GroupElement, SparseVector> generator_values_;
    std::string name_;
    mutable std::map<GroupElement, SparseVector> cache_;
};

/// Boundedly equivariant map alpha: G -> H for a representation.
struct Array {
    Representation rep;
    std::function<SparseVector(const GroupElement&)> eval;
};

Array array_of(const Cocycle& b);

/// alpha^flat(g) = alpha(g)/|g|, with alpha^flat(e) = 0.
SparseVector flat_eval(const Array& alpha, WordMetric& metric,
                       const GroupElement& g);

/// alpha~(g) = (1/|g|) alpha(g) (x) alpha(g), alpha~(e) = 0; an array for
/// pi (x) pi.
Array tensor_array(const Array& alpha, std::shared_ptr<WordMetric> metric);

/// alpha*(g) = pi_g alpha(g^{-1}); an involution, and large scale Lipschitz
/// when alpha is an array.
Array adjoint_star(const Array& alpha, const Group& group);

/// max over h in B(sample_radius) of ||pi_g alpha(h) - alpha(gh)||; a
/// certified lower bound for the equivariance constant B_g.
double equivariance_defect(const Array& alpha, WordMetric& metric,
                           const GroupElement& g, int sample_radius);

/// Closed-form equivariance bound for the tensor array in terms of B_g and
/// D = max_s B_s: max{B_g D (|g|+2) + D^2 |g| (|g|+1),
/// ||alpha~(g^{-1})||, ||alpha~(g)||}.
double tensor_array_bound(double B_g, double D, int len_g,
                          double norm_tilde_g, double norm_tilde_ginv);

/// Affine isometric action T_g(v) = pi_g v + b(g).
class AffineAction {
public:
    explicit AffineAction(const Cocycle& b) : b_(&b) {}

    SparseVector apply(const GroupElement& g, const SparseVector& v) const {
        return b_->rep().apply(g, v) + b_->eval(g);
    }
    const Cocycle& cocycle() const { return *b_; }

private:
    const Cocycle* b_;
};

}  // namespace ergo

#endif
