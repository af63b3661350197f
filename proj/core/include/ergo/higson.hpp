#ifndef ERGO_HIGSON_HPP
#define ERGO_HIGSON_HPP

#include <functional>
#include <string>
#include <vector>

#include "ergo/folner.hpp"
#include "ergo/word_metric.hpp"

namespace ergo {

/// Real-valued function on the cached ball, with a provenance label.
struct ScalarField {
    std::function<double(const GroupElement&)> eval;
    std::string label;
};

/// delta f(g)(s) = f(g) - f(gs), indexed by the generating set.
std::vector<double> variation(const ScalarField& f, const Group& group,
                              const GroupElement& g);
double variation_norm(const ScalarField& f, const Group& group,
                      const GroupElement& g);

/// Boundedness gate: Higson candidates must be bounded, so sup |f| on the
/// outer sphere S(R) must not exceed sup |f| on the inner half ball B(R/2).
/// Growth at the edge of the window is rejected (a finite window can only
/// gather evidence, but linear-growth fields like |g| fail it immediately).
void require_bounded(const ScalarField& f, WordMetric& metric, int R);

/// Per-radius profile sup_{|g|=n} ||delta f(g)||; decay on the window is
/// Higson evidence, never a limit claim. Applies the boundedness gate at the
/// largest requested radius.
std::vector<double> higson_profile(const ScalarField& f, WordMetric& metric,
                                   const std::vector<int>& radii);

/// sum_{g in B(R)} ||delta f(g)||^p, monotone in R.
double hp_partial_norm(const ScalarField& f, WordMetric& metric, double p,
                       int R);

struct AnnulusComponents {
    int touching = 0;  // components of B(R)\B(r) meeting the outer sphere
    std::vector<std::vector<GroupElement>> components;
    std::vector<bool> touches_outer;
};

/// Connected components of the annulus graph B(R)\B(r) under generator moves
/// that stay inside the annulus. "Infinite component" is proxied by touching
/// the outer sphere S(R).
AnnulusComponents annulus_components(WordMetric& metric, int r, int R);

/// Count of annulus components meeting S(R); 1 is one-endedness evidence.
int one_ended_window(WordMetric& metric, int r, int R);

struct C0PlusConstantReport {
    double constant_estimate = 0.0;  // mean of f on the touching components
    double oscillation = 0.0;        // max f - min f over touching components
    double variation_budget = 0.0;   // K_r = sum over annulus of ||delta f||
    int touching_components = 0;
};

C0PlusConstantReport c0_plus_constant_test(const ScalarField& f,
                                           WordMetric& metric, int r, int R);

struct SubdivisionReport {
    double f_delta_f_sum = 0.0;        // sum over B(R) of ||f . delta f||(g)
    double max_pointwise_excess = 0.0; // max of ||f.df||(g) - ||delta(f^2)||(g)
};

/// Subdivided-graph comparison for f >= 0: vertex values f^2, edge values
/// f(g) f(gs); checks ||f . delta f|| <= ||delta(f^2)|| pointwise on B(R).
SubdivisionReport subdivision_field(const ScalarField& f, WordMetric& metric,
                                    int R);

/// |u(g) - sum_s mu(s) u(gs)|.
double harmonic_defect(const ScalarField& u, const Group& group,
                       const FiniteMeasure& mu, const GroupElement& g);

/// int |g|^2 dmu.
double second_moment(WordMetric& metric, const FiniteMeasure& mu);

/// max over g in B(R), s in S of |u(g) - u(gs)|.
double lipschitz_estimate(const ScalarField& u, WordMetric& metric, int R);

/// max over B(R) of |u|(g) - sum_s mu(s) |u|(gs); should be <= 0 up to
/// tolerance when u is mu-harmonic.
double subharmonic_check(const ScalarField& u, WordMetric& metric,
                         const FiniteMeasure& mu, int R);

struct ConjectureReport {
    std::vector<double> almost_sublinear_curve;  // int (1/|g|)|u(g^{-1})| dmu_n
    std::vector<double> sublinear_profile;       // sup_{|g|=n} |u(g)|/|g|
    double harmonic_defect_max = 0.0;
    double lipschitz_constant = 0.0;
    std::string verdict;  // "consistent" / "inconsistent" on this window only
};

/// Evidence harness pairing the averaged decay hypothesis with the sublinear
/// growth conclusion; emits curves and a window-level verdict, never a proof.
ConjectureReport conjecture31_harness(const ScalarField& u, WordMetric& metric,
                                      const FiniteMeasure& walk_mu,
                                      const std::vector<FiniteMeasure>& reiter,
                                      int n_max);

}  // namespace ergo

#endif
