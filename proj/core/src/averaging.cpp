#include "ergo/averaging.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "ergo/numeric.hpp"

namespace ergo {

namespace {

using Support = std::vector<std::pair<GroupElement, double>>;

Support support_of(const FiniteMeasure& mu) {
    return Support(mu.weights.begin(), mu.weights.end());
}

// Runs fn(chunk_index) for every chunk on `threads` workers. Chunk boundaries
// depend only on the chunk size, so results can be folded deterministically.
void for_each_chunk(std::size_t n_items, const ParallelConfig& par,
                    const std::function<void(std::size_t, std::size_t,
                                             std::size_t)>& fn) {
    std::size_t chunk = std::max<std::size_t>(1, par.chunk);
    std::size_t n_chunks = (n_items + chunk - 1) / chunk;
    if (par.threads <= 1 || n_chunks <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c)
            fn(c, c * chunk, std::min(n_items, (c + 1) * chunk));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next.fetch_add(1); c < n_chunks;
             c = next.fetch_add(1))
            fn(c, c * chunk, std::min(n_items, (c + 1) * chunk));
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < par.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

double scalar_sum(const Support& items, const ParallelConfig& par,
                  const std::function<double(const GroupElement&, double)>& term) {
    std::size_t chunk = std::max<std::size_t>(1, par.chunk);
    std::size_t n_chunks = (items.size() + chunk - 1) / chunk;
    std::vector<double> partials(n_chunks, 0.0);
    for_each_chunk(items.size(), par,
                   [&](std::size_t c, std::size_t lo, std::size_t hi) {
                       KahanSum s;
                       for (std::size_t i = lo; i < hi; ++i)
                           s.add(term(items[i].first, items[i].second));
                       partials[c] = s.value();
                   });
    KahanSum total;
    for (double p : partials) total.add(p);
    return total.value();
}

SparseVector vector_sum(
    const Support& items, const ParallelConfig& par,
    const std::function<SparseVector(const GroupElement&, double)>& term) {
    std::size_t chunk = std::max<std::size_t>(1, par.chunk);
    std::size_t n_chunks = (items.size() + chunk - 1) / chunk;
    std::vector<SparseVector> partials(n_chunks);
    for_each_chunk(items.size(), par,
                   [&](std::size_t c, std::size_t lo, std::size_t hi) {
                       SparseVector acc;
                       for (std::size_t i = lo; i < hi; ++i)
                           acc += term(items[i].first, items[i].second);
                       partials[c] = std::move(acc);
                   });
    SparseVector total;
    for (const auto& p : partials) total += p;
    return total;
}

}  // namespace

SparseVector flat_average(const Array& alpha, WordMetric& metric,
                          const FiniteMeasure& mu, const ParallelConfig& par) {
    // warm metric and cocycle caches single-threaded; evaluations are then
    // pure reads
    for (const auto& [g, w] : mu.weights) {
        metric.length(g);
        alpha.eval(g);
    }
    auto items = support_of(mu);
    return vector_sum(items, par, [&](const GroupElement& g, double w) {
        return w * flat_eval(alpha, metric, g);
    });
}

double weak_pairing_average(const Array& alpha, WordMetric& metric,
                            const FiniteMeasure& mu, const SparseVector& xi,
                            const ParallelConfig& par) {
    for (const auto& [g, w] : mu.weights) {
        metric.length(g);
        alpha.eval(g);
    }
    auto items = support_of(mu);
    return scalar_sum(items, par, [&](const GroupElement& g, double w) {
        return w * inner(flat_eval(alpha, metric, g), xi);
    });
}

double abs_pairing_average(const Array& alpha, WordMetric& metric,
                           const FiniteMeasure& mu, const SparseVector& xi,
                           const ParallelConfig& par) {
    for (const auto& [g, w] : mu.weights) {
        metric.length(g);
        alpha.eval(g);
    }
    auto items = support_of(mu);
    return scalar_sum(items, par, [&](const GroupElement& g, double w) {
        return w * std::abs(inner(flat_eval(alpha, metric, g), xi));
    });
}

double right_pairing_average(const Cocycle& b, const FiniteMeasure& mu,
                             const SparseVector& xi, const ParallelConfig& par) {
    const Group& grp = b.group();
    for (const auto& [g, w] : mu.weights) {
        b.metric().length(g);
        b.eval(grp.inverse(g));
    }
    auto items = support_of(mu);
    return scalar_sum(items, par, [&](const GroupElement& g, double w) {
        int len = b.metric().length(g);
        if (len == 0) return 0.0;
        return w * inner(b.eval(grp.inverse(g)), xi) / static_cast<double>(len);
    });
}

double proper_normalized_average(const Cocycle& b, const FiniteMeasure& mu,
                                 const SparseVector& xi) {
    KahanSum s;
    for (const auto& [g, w] : mu.weights) {
        if (b.group().is_identity(g)) continue;
        double nb = norm(b.eval(g));
        if (nb == 0.0)
            throw UsageError("proper_normalized_average: ||b(g)|| = 0 at " +
                             b.group().format(g) + " (cocycle not proper)");
        s.add(w * std::abs(inner(b.eval(g), xi)) / nb);
    }
    return s.value();
}

CesaroSums cesaro_sums(const Representation& pi, const SparseVector& xi,
                       const SparseVector& eta, int n_max) {
    const Group& grp = pi.group();
    if (grp.kind() != GroupKind::FreeAbelian || grp.rank() != 1)
        throw UsageError("cesaro_sums requires the group zd:1");
    CesaroSums out;
    SparseVector orbit_sum;  // sum_{j<k} pi_j xi
    KahanSum weak_acc, abs_acc;
    for (int k = 1; k <= n_max; ++k) {
        orbit_sum += pi.apply(ZdElem{{k - 1}}, xi);
        double pairing = inner(orbit_sum, eta) / static_cast<double>(k);
        weak_acc.add(pairing);
        abs_acc.add(std::abs(pairing));
        out.weak.push_back(weak_acc.value() / static_cast<double>(k));
        out.absolute.push_back(abs_acc.value() / static_cast<double>(k));
    }
    return out;
}

std::vector<SparseVector> eta_sequence(const Cocycle& b,
                                       const std::vector<FiniteSubset>& sets) {
    std::vector<SparseVector> etas;
    for (const auto& F : sets) {
        if (F.empty()) throw UsageError("eta_sequence: empty Folner set");
        SparseVector eta;
        for (const auto& g : F) eta += b.eval(g);
        eta *= 1.0 / static_cast<double>(F.size());
        etas.push_back(std::move(eta));
    }
    return etas;
}

DisplacementReport displacement(const AffineAction& T, const SparseVector& eta,
                                double controlled_K) {
    DisplacementReport report;
    const Cocycle& b = T.cocycle();
    for (const auto& s : b.group().generators()) {
        double d = norm(T.apply(s, eta) - eta);
        report.per_generator.push_back(d);
        report.max_displacement = std::max(report.max_displacement, d);
    }
    report.apriori_bound = 2.0 * b.generator_norm_bound() * controlled_K;
    report.within_bound = report.max_displacement <= report.apriori_bound + 1e-9;
    return report;
}

ConvexifyResult mazur_convexify(
    const std::vector<std::vector<SparseVector>>& displacement_vectors) {
    std::size_t n = displacement_vectors.size();
    if (n == 0) throw UsageError("mazur_convexify: no inputs");
    // Gram matrix Q[m][k] = sum_s <w_{m,s}, w_{k,s}>; J(c) = c^T Q c.
    std::vector<std::vector<double>> Q(n, std::vector<double>(n, 0.0));
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = m; k < n; ++k) {
            KahanSum s;
            std::size_t ns = displacement_vectors[m].size();
            if (displacement_vectors[k].size() != ns)
                throw UsageError("mazur_convexify: ragged generator table");
            for (std::size_t g = 0; g < ns; ++g)
                s.add(inner(displacement_vectors[m][g],
                            displacement_vectors[k][g]));
            Q[m][k] = Q[k][m] = s.value();
        }
    }

    auto objective = [&](const std::vector<double>& c) {
        KahanSum s;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s.add(c[i] * Q[i][j] * c[j]);
        return s.value();
    };

    ConvexifyResult res;
    res.weights.assign(n, 0.0);
    // start at the best vertex
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (Q[i][i] < Q[best][best]) best = i;
    res.weights[best] = 1.0;
    res.objective = Q[best][best];

    const int max_iter = 10'000;
    const double tol = 1e-12;
    std::vector<double> grad(n);
    for (int iter = 0; iter < max_iter; ++iter) {
        res.iterations = iter + 1;
        for (std::size_t i = 0; i < n; ++i) {
            KahanSum s;
            for (std::size_t j = 0; j < n; ++j) s.add(Q[i][j] * res.weights[j]);
            grad[i] = 2.0 * s.value();
        }
        // Frank-Wolfe vertex and away vertex
        std::size_t fw = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (grad[i] < grad[fw]) fw = i;
        std::size_t away = fw;
        bool have_away = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (res.weights[i] <= 0.0) continue;
            if (!have_away || grad[i] > grad[away]) {
                away = i;
                have_away = true;
            }
        }
        double fw_gain = 0.0, away_gain = 0.0;
        {
            KahanSum gc;
            for (std::size_t i = 0; i < n; ++i) gc.add(grad[i] * res.weights[i]);
            fw_gain = gc.value() - grad[fw];
            away_gain = grad[away] - gc.value();
        }
        std::vector<double> dir(n, 0.0);
        double gamma_max = 0.0;
        if (fw_gain >= away_gain) {
            for (std::size_t i = 0; i < n; ++i) dir[i] = -res.weights[i];
            dir[fw] += 1.0;
            gamma_max = 1.0;
        } else {
            for (std::size_t i = 0; i < n; ++i) dir[i] = res.weights[i];
            dir[away] -= 1.0;
            double a = res.weights[away];
            gamma_max = a >= 1.0 ? 1e12 : a / (1.0 - a);
        }
        // exact line search for the quadratic along dir
        double qd = 0.0, cd = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                qd += dir[i] * Q[i][j] * dir[j];
                cd += res.weights[i] * Q[i][j] * dir[j];
            }
        if (qd <= 0.0) break;
        double gamma = std::clamp(-cd / qd, 0.0, gamma_max);
        if (gamma == 0.0) break;
        for (std::size_t i = 0; i < n; ++i) {
            res.weights[i] += gamma * dir[i];
            if (res.weights[i] < 0.0) res.weights[i] = 0.0;
        }
        // renormalize against drift
        double total = 0.0;
        for (double w : res.weights) total += w;
        for (double& w : res.weights) w /= total;
        double next = objective(res.weights);
        bool converged = res.objective - next < tol;
        res.objective = next;
        if (converged) return res;
    }
    res.hit_iteration_cap = true;
    return res;
}

FixedPointSearch almost_fixed_points(const Cocycle& b,
                                     const std::vector<FiniteSubset>& sets,
                                     double target) {
    if (sets.empty()) throw UsageError("almost_fixed_points: no Folner sets");
    FixedPointSearch search;
    AffineAction T(b);
    WordMetric& metric = b.metric();

    for (const auto& F : sets)
        search.set_diagnostics.push_back(controlled_constant(metric, F));
    search.etas = eta_sequence(b, sets);

    const auto& gens = b.group().generators();
    std::vector<std::vector<SparseVector>> w;  // [n][s]
    for (const auto& eta : search.etas) {
        std::vector<SparseVector> row;
        for (const auto& s : gens) row.push_back(T.apply(s, eta) - eta);
        w.push_back(std::move(row));
    }

    std::size_t n = sets.size();
    std::vector<std::size_t> window_sizes;
    for (std::size_t wsz = 1; wsz < n; wsz *= 2) window_sizes.push_back(wsz);
    window_sizes.push_back(n);

    for (std::size_t wsz : window_sizes) {
        std::vector<std::vector<SparseVector>> prefix(w.begin(),
                                                      w.begin() + wsz);
        ConvexifyResult conv = mazur_convexify(prefix);

        SparseVector point;
        for (std::size_t i = 0; i < wsz; ++i)
            point += conv.weights[i] * search.etas[i];
        double max_disp = 0.0;
        for (const auto& s : gens)
            max_disp = std::max(max_disp, norm(T.apply(s, point) - point));

        double bound = 0.0;
        for (std::size_t i = 0; i < wsz; ++i)
            bound = std::max(bound,
                             2.0 * b.generator_norm_bound() *
                                 search.set_diagnostics[i].controlled_constant);

        search.windows.push_back(
            FixedPointWindow{static_cast<int>(wsz), conv.objective, max_disp,
                             bound});
        search.weights = conv.weights;
        search.final_point = point;
        search.achieved_displacement = max_disp;
        if (max_disp <= target) {
            search.target_reached = true;
            break;
        }
    }
    return search;
}

std::vector<double> sublinear_growth_scan(
    const std::function<double(const GroupElement&)>& f, WordMetric& metric,
    int n_max) {
    std::vector<double> profile;
    for (int len = 1; len <= n_max; ++len) {
        double worst = 0.0;
        for (const auto& g : metric.sphere(len))
            worst = std::max(worst, f(g) / static_cast<double>(len));
        profile.push_back(worst);
    }
    return profile;
}

std::vector<double> almost_sublinear_test(
    const std::function<double(const GroupElement&)>& f, const Group& group,
    const std::vector<FiniteMeasure>& measures) {
    std::vector<double> out;
    for (const auto& mu : measures) {
        KahanSum s;
        for (const auto& [g, wgt] : mu.weights)
            s.add(wgt * f(group.inverse(g)));
        out.push_back(s.value());
    }
    return out;
}

std::vector<RigidityRecord> rigidity_counterexample(
    const std::function<double(const GroupElement&)>& f, WordMetric& metric,
    double c, int k_max) {
    const Group& grp = metric.group();
    if (grp.kind() != GroupKind::FreeAbelian || grp.rank() != 1)
        throw UsageError("rigidity_counterexample requires the group zd:1");
    const std::int64_t search_cap = 4 * static_cast<std::int64_t>(k_max) + 1000;

    std::vector<RigidityRecord> records;
    for (int k = 1; k <= k_max; ++k) {
        // F_k = {0..k}; mu_k uniform on F_k g_k^{-1} = {j - g_k : 0<=j<=k}.
        bool found = false;
        RigidityRecord rec;
        rec.k = k;
        for (std::int64_t n = 2 * k; n <= search_cap && !found; ++n) {
            for (std::int64_t sign : {+1, -1}) {
                std::int64_t g = sign * n;
                double lo = f(ZdElem{{g}});
                bool ok = lo >= c;
                for (std::int64_t j = 0; j <= k && ok; ++j)
                    ok = f(ZdElem{{g - j}}) >= c / 2.0;
                if (!ok) continue;
                rec.witness = g;
                for (std::int64_t j = 0; j <= k; ++j)
                    rec.measure.weights[ZdElem{{j - g}}] =
                        1.0 / static_cast<double>(k + 1);
                KahanSum s;
                for (const auto& [h, w] : rec.measure.weights)
                    s.add(w * f(grp.inverse(h)));
                rec.integral = s.value();
                rec.defect =
                    reiter_defect(grp, rec.measure, grp.generators()[0]);
                found = true;
                break;
            }
        }
        if (!found)
            throw UsageError(
                "rigidity_counterexample: no witness with f >= c within cap");
        records.push_back(std::move(rec));
    }
    return records;
}

std::size_t precompactness_proxy(const std::vector<SparseVector>& V,
                                 double eps) {
    std::vector<const SparseVector*> centers;
    for (const auto& v : V) {
        bool covered = false;
        for (const auto* ctr : centers) {
            if (norm(v - *ctr) <= eps) {
                covered = true;
                break;
            }
        }
        if (!covered) centers.push_back(&v);
    }
    return centers.size();
}

}  // namespace ergo
