#ifndef ERGO_AVERAGING_HPP
#define ERGO_AVERAGING_HPP

#include <vector>

#include "ergo/cocycle.hpp"
#include "ergo/folner.hpp"

namespace ergo {

/// Worker count for averaging sums. Results are bitwise independent of the
/// thread count: the support is cut into fixed-size chunks, each chunk is
/// summed sequentially, and chunk partials are folded in order.
struct ParallelConfig {
    int threads = 1;
    std::size_t chunk = 256;
};

/// sum_g mu(g) alpha^flat(g).
SparseVector flat_average(const Array& alpha, WordMetric& metric,
                          const FiniteMeasure& mu,
                          const ParallelConfig& par = {});

/// int <alpha^flat(g), xi> dmu and int |<alpha^flat(g), xi>| dmu.
double weak_pairing_average(const Array& alpha, WordMetric& metric,
                            const FiniteMeasure& mu, const SparseVector& xi,
                            const ParallelConfig& par = {});
double abs_pairing_average(const Array& alpha, WordMetric& metric,
                           const FiniteMeasure& mu, const SparseVector& xi,
                           const ParallelConfig& par = {});

/// int (1/|g|) <b(g^{-1}), xi> dmu(g)  (right-composed averaging).
double right_pairing_average(const Cocycle& b, const FiniteMeasure& mu,
                             const SparseVector& xi,
                             const ParallelConfig& par = {});

/// int (1/||b(g)||) |<b(g), xi>| dmu(g); the term at e is 0, and a zero-norm
/// value at g != e is a properness violation.
double proper_normalized_average(const Cocycle& b, const FiniteMeasure& mu,
                                 const SparseVector& xi);

/// Cesaro sums on Z: C_n = (1/n) sum_{k<=n} <A_k xi, eta> and the absolute
/// variant, where A_k xi = (1/k) sum_{j<k} pi_j xi.
struct CesaroSums {
    std::vector<double> weak;      // C_n, n = 1..n_max
    std::vector<double> absolute;  // C'_n
};
CesaroSums cesaro_sums(const Representation& pi, const SparseVector& xi,
                       const SparseVector& eta, int n_max);

/// eta_n = int b(g) dv_n(g) with v_n uniform on F_n.
std::vector<SparseVector> eta_sequence(const Cocycle& b,
                                       const std::vector<FiniteSubset>& sets);

struct DisplacementReport {
    std::vector<double> per_generator;  // ||T_s eta - eta|| in generator order
    double max_displacement = 0.0;
    double apriori_bound = 0.0;  // 2 C K for the set's measured K
    bool within_bound = false;
};

DisplacementReport displacement(const AffineAction& T, const SparseVector& eta,
                                double controlled_K);

/// Minimizes J(c) = sum_{s in S} || sum_n c_n w_{n,s} ||^2 over the simplex
/// by away-step conditional gradient. Input: per window index n, the
/// S-indexed displacement vectors w_{n,s}.
struct ConvexifyResult {
    std::vector<double> weights;
    double objective = 0.0;
    int iterations = 0;
    bool hit_iteration_cap = false;
};
ConvexifyResult mazur_convexify(
    const std::vector<std::vector<SparseVector>>& displacement_vectors);

struct FixedPointWindow {
    int window_size = 0;
    double objective = 0.0;
    double max_displacement = 0.0;
    double apriori_bound = 0.0;
};

struct FixedPointSearch {
    std::vector<FolnerDiagnostics> set_diagnostics;
    std::vector<SparseVector> etas;
    std::vector<FixedPointWindow> windows;
    std::vector<double> weights;   // over the final window's etas
    SparseVector final_point;
    double achieved_displacement = 0.0;
    bool target_reached = false;
};

/// Theorem B pipeline: eta sequence over the controlled sets, displacement
/// table, convexification over geometrically growing windows (4, 8, 16, ...)
/// until the mixed point moves at most `target` under every generator.
/// Window exhaustion yields a partial result, not an error.
FixedPointSearch almost_fixed_points(const Cocycle& b,
                                     const std::vector<FiniteSubset>& sets,
                                     double target);

/// Per n: max over the sphere S(n) of f(g)/|g|.
std::vector<double> sublinear_growth_scan(
    const std::function<double(const GroupElement&)>& f, WordMetric& metric,
    int n_max);

/// Per measure: int f(g^{-1}) dmu(g).
std::vector<double> almost_sublinear_test(
    const std::function<double(const GroupElement&)>& f, const Group& group,
    const std::vector<FiniteMeasure>& measures);

/// Prop.-style rigidity construction on Z: given a witness scan f(g_k) >= c,
/// builds mu_k uniform on F_k g_k^{-1} (F_k an interval Folner set) with
/// int f(g^{-1}) dmu_k >= c/2 while the Reiter defect 2/(k+1) -> 0.
struct RigidityRecord {
    int k = 0;
    std::int64_t witness = 0;
    double integral = 0.0;
    double defect = 0.0;
    FiniteMeasure measure;
};
std::vector<RigidityRecord> rigidity_counterexample(
    const std::function<double(const GroupElement&)>& f, WordMetric& metric,
    double c, int k_max);

/// Greedy epsilon-net size of a finite vector family; ties broken by input
/// order (callers pass canonical order).
std::size_t precompactness_proxy(const std::vector<SparseVector>& V, double eps);

}  // namespace ergo

#endif
