// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Tolerances are pinned here, next to the checks.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "ergo/workbench.hpp"
#include "oracles.hpp"

using namespace ergo;

namespace {

int g_failures = 0;

struct Criterion {
    int id;
    std::string description;
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }

    void finish() const {
        if (pass) {
            std::printf("criterion %2d: PASS  %s\n", id, description.c_str());
        } else {
            std::printf("criterion %2d: FAIL  %s  [%s]\n", id,
                        description.c_str(), detail.c_str());
            ++g_failures;
        }
    }
};

GroupElement zi(std::int64_t n) { return ZdElem{{n}}; }

SparseVector delta(std::int64_t n) {
    return SparseVector::unit(BasisIndex::point(zi(n)));
}

SparseVector coords(std::initializer_list<double> vals) {
    SparseVector v;
    std::int64_t i = 0;
    for (double x : vals) v.set(BasisIndex::coord(i++), x);
    return v;
}

// ---------------------------------------------------------------------------
// 1. Algebraic identity suite over every shipped (group, rep, cocycle) combo.
void criterion1() {
    Criterion c{1, "cocycle algebra (Leibniz + inverse law) on B(5) x B(5)"};

    struct Combo {
        std::string label;
        std::shared_ptr<WordMetric> metric;
        Cocycle cocycle;
        double tol;
    };
    std::vector<Combo> combos;

    auto add_coboundary = [&combos](const std::string& group_spec) {
        auto metric = std::make_shared<WordMetric>(
            Group::from_string(group_spec), WordMetric::Config{14, 10'000'000});
        Representation reg = Representation::regular(metric->group());
        SparseVector xi =
            SparseVector::unit(BasisIndex::point(metric->group().identity()));
        for (const auto& s : metric->group().generators()) {
            xi.accumulate(BasisIndex::point(s), 0.25);
            break;
        }
        combos.push_back({group_spec + "/regular/coboundary", metric,
                          Cocycle::coboundary(reg, metric, xi), 1e-10});
    };
    for (const char* spec : {"zd:1", "zd:2", "heisenberg", "lamplighter2", "bs12"})
        add_coboundary(spec);

    {
        auto metric = std::make_shared<WordMetric>(Group::zd(1),
                                                   WordMetric::Config{32, 10'000'000});
        Representation reg = Representation::regular(metric->group());
        combos.push_back({"zd:1/regular/generated", metric,
                          Cocycle::z_generated(reg, metric, delta(0)), 1e-10});
        Representation rot = Representation::rotation({golden_angle()});
        combos.push_back({"zd:1/rotation/generated", metric,
                          Cocycle::z_generated(rot, metric, coords({1.0, 0.0})),
                          1e-9});
    }
    {
        auto metric = std::make_shared<WordMetric>(Group::zd(2),
                                                   WordMetric::Config{20, 10'000'000});
        Representation rot = Representation::rotation({golden_angle(), 1.3});
        SparseVector x1, x2;
        x1.set(BasisIndex::coord(0), 1.0);
        x2.set(BasisIndex::coord(2), 0.5);
        combos.push_back({"zd:2/rotation/generated", metric,
                          Cocycle::zd_generated(rot, metric, {x1, x2}), 1e-9});
    }

    for (auto& combo : combos) {
        const Group& grp = combo.metric->group();
        const Representation& pi = combo.cocycle.rep();
        std::vector<GroupElement> B5 = combo.metric->ball(5);
        double worst = 0.0;
        for (const auto& g : B5)
            for (const auto& h : B5) {
                SparseVector lhs = combo.cocycle.eval(grp.multiply(g, h));
                SparseVector rhs =
                    pi.apply(g, combo.cocycle.eval(h)) + combo.cocycle.eval(g);
                worst = std::max(worst, norm(lhs - rhs));
            }
        for (const auto& g : B5) {
            SparseVector lhs = combo.cocycle.eval(grp.inverse(g));
            SparseVector rhs =
                -1.0 * pi.apply(grp.inverse(g), combo.cocycle.eval(g));
            worst = std::max(worst, norm(lhs - rhs));
        }
        c.require(worst <= combo.tol,
                  combo.label + " defect " + std::to_string(worst));
    }
    c.finish();
}

// ---------------------------------------------------------------------------
// 2. Length axioms, exact controlled constants for integer balls, and the
//    controlled ball subsequence in rank 2.
void criterion2() {
    Criterion c{2, "word-length axioms and controlled Folner constants"};

    for (const char* spec : {"zd:1", "zd:2", "heisenberg", "lamplighter2", "bs12"}) {
        WordMetric m(Group::from_string(spec), WordMetric::Config{14, 10'000'000});
        LengthAxiomReport report = m.check_length_axioms(5);
        c.require(report.violations == 0,
                  std::string(spec) + " length-axiom violations");
    }

    WordMetric m1(Group::zd(1), WordMetric::Config{64, 10'000'000});
    for (int n = 1; n <= 40; ++n) {
        FolnerDiagnostics d = controlled_constant(m1, to_subset(m1.ball(n)));
        // Exact rational check: diam = n, boundary 4, set 2n+1.
        bool exact = d.diameter == n && d.boundary_size == 4 &&
                     d.set_size == static_cast<std::size_t>(2 * n + 1) &&
                     d.controlled_constant == 4.0 * n / (2.0 * n + 1.0);
        c.require(exact, "zd:1 ball " + std::to_string(n));
    }

    WordMetric m2(Group::zd(2), WordMetric::Config{64, 10'000'000});
    c.require(!shalom_ball_subsequence(m2, 21.0, 60).empty(),
              "zd:2 controlled subsequence empty at K=21");
    c.finish();
}

// ---------------------------------------------------------------------------
// 3. Weak and absolute averages of the flattened translation cocycle match
//    the harmonic-number oracle and decrease along the ball sequence.
std::string criterion3_table(int threads) {
    Manifest m;
    m.group = "zd:1";
    m.rep = "regular";
    m.cocycle = "generated:point:e";
    m.xi = "point:e";
    m.measures = "balls:25-1000:25";
    m.threads = threads;
    return run_met(m).table;
}

void criterion3() {
    Criterion c{3, "ball averages equal H_N/(2N+1) and decay (N <= 1000)"};
    auto metric = std::make_shared<WordMetric>(Group::zd(1),
                                               WordMetric::Config{2048, 10'000'000});
    Representation reg = Representation::regular(metric->group());
    Cocycle b = Cocycle::z_generated(reg, metric, delta(0));
    Array a = array_of(b);
    SparseVector xi = delta(0);

    std::vector<int> Ns{25, 50, 100, 200, 400, 1000};
    double prev = std::numeric_limits<double>::infinity();
    for (int N : Ns) {
        FiniteMeasure mu = uniform_measure(to_subset(metric->ball(N)));
        double weak = weak_pairing_average(a, *metric, mu, xi);
        double abs = abs_pairing_average(a, *metric, mu, xi);
        double oracle = oracles::harmonic_number(N) / (2.0 * N + 1.0);
        c.require(std::abs(weak - oracle) <= 1e-10,
                  "weak at N=" + std::to_string(N));
        c.require(std::abs(abs - oracle) <= 1e-10,
                  "abs at N=" + std::to_string(N));
        c.require(weak < prev, "not decreasing at N=" + std::to_string(N));
        prev = weak;
    }
    FiniteMeasure mu100 = uniform_measure(to_subset(metric->ball(100)));
    double at100 = weak_pairing_average(a, *metric, mu100, xi);
    c.require(std::abs(at100 - 0.02581) <= 5e-5, "N=100 pinned value");
    FiniteMeasure mu1000 = uniform_measure(to_subset(metric->ball(1000)));
    double at1000 = weak_pairing_average(a, *metric, mu1000, xi);
    c.require(std::abs(at1000 - 0.00374) <= 5e-5, "N=1000 pinned value");
    c.finish();
}

// ---------------------------------------------------------------------------
// 4. Cesaro reduction for the irrational rotation.
void criterion4() {
    Criterion c{4, "Cesaro sums of the golden rotation obey the log-envelope"};
    double theta = golden_angle();
    Representation rot = Representation::rotation({theta});
    SparseVector xi = coords({1.0, 0.0});
    CesaroSums sums = cesaro_sums(rot, xi, xi, 2000);
    c.require(sums.weak.size() == 2000, "length");
    for (std::size_t i = 0; i < sums.weak.size(); ++i)
        c.require(sums.absolute[i] >= std::abs(sums.weak[i]) - 1e-12,
                  "C'_n < |C_n| at n=" + std::to_string(i + 1));
    // Geometric-sum envelope 1.0725 * (ln n + gamma) / n at n = 2000.
    double envelope =
        oracles::harmonic_number(2000) / std::sin(theta / 2.0) / 2000.0;
    c.require(std::abs(sums.weak.back()) <= envelope, "envelope at n=2000");
    c.require(std::abs(sums.weak.back()) <= 0.005, "|C_2000| > 0.005");
    c.finish();
}

// ---------------------------------------------------------------------------
// 5. Almost-fixed-point pipeline.
std::string criterion5_table(int threads) {
    Manifest m;
    m.group = "zd:1";
    m.rep = "regular";
    m.cocycle = "generated:point:e";
    m.measures = "balls:2-60";
    m.target = 0.15;
    m.threads = threads;
    return run_fixpoint(m).table;
}

void criterion5() {
    Criterion c{5, "fixed-point pipeline: exact coboundary + 2CK ledger"};

    // (a) Coboundary with a finite exact orbit: the base point is fixed and
    // the very first window certifies it.
    {
        auto metric = std::make_shared<WordMetric>(Group::zd(1),
                                                   WordMetric::Config{32, 10'000'000});
        Representation rot =
            Representation::rotation({2.0 * std::numbers::pi / 5.0});
        Cocycle cb = Cocycle::coboundary(rot, metric, coords({1.0, 0.0}));
        FixedPointSearch s =
            almost_fixed_points(cb, {to_subset(metric->ball(2))}, 1e-9);
        c.require(s.target_reached, "coboundary target unreached");
        c.require(!s.windows.empty() && s.windows[0].window_size == 1,
                  "coboundary needed more than window 1");
        c.require(s.achieved_displacement <= 1e-9, "coboundary displacement");
    }

    // (b) Translation cocycle over B(2..60).
    {
        auto metric = std::make_shared<WordMetric>(Group::zd(1),
                                                   WordMetric::Config{128, 10'000'000});
        Representation reg = Representation::regular(metric->group());
        Cocycle b = Cocycle::z_generated(reg, metric, delta(0));
        std::vector<FiniteSubset> sets;
        for (int n = 2; n <= 60; ++n) sets.push_back(to_subset(metric->ball(n)));
        FixedPointSearch s = almost_fixed_points(b, sets, 0.15);

        AffineAction T(b);
        const auto& gens = metric->group().generators();
        for (const auto& eta : s.etas)
            for (const auto& g : gens)
                c.require(norm(T.apply(g, eta) - eta) <= 4.0 + 1e-9,
                          "a-priori bound 2CK violated");
        c.require(s.target_reached && s.achieved_displacement <= 0.15,
                  "achieved displacement " +
                      std::to_string(s.achieved_displacement));

        // Convexity oracle: J at the returned weights never exceeds J at any
        // vertex of the final window.
        std::size_t wsz = s.weights.size();
        std::vector<std::vector<SparseVector>> w;
        for (std::size_t i = 0; i < wsz; ++i) {
            std::vector<SparseVector> row;
            for (const auto& g : gens)
                row.push_back(T.apply(g, s.etas[i]) - s.etas[i]);
            w.push_back(std::move(row));
        }
        auto J = [&](const std::vector<double>& weights) {
            double total = 0.0;
            for (std::size_t si = 0; si < gens.size(); ++si) {
                SparseVector acc;
                for (std::size_t i = 0; i < wsz; ++i)
                    acc += weights[i] * w[i][si];
                total += inner(acc, acc);
            }
            return total;
        };
        double at_weights = J(s.weights);
        for (std::size_t i = 0; i < wsz; ++i) {
            std::vector<double> vertex(wsz, 0.0);
            vertex[i] = 1.0;
            c.require(at_weights <= J(vertex) + 1e-9,
                      "J above vertex " + std::to_string(i));
        }
    }
    c.finish();
}

// ---------------------------------------------------------------------------
// 6. Rigidity construction from the step-function witness.
void criterion6() {
    Criterion c{6, "rigidity witness measures: integral 1, defect 2/(k+1)"};
    WordMetric metric(Group::zd(1), WordMetric::Config{512, 10'000'000});
    auto step = [](const GroupElement& g) {
        return std::get<ZdElem>(g).c[0] >= 0 ? 1.0 : 0.0;
    };
    auto records = rigidity_counterexample(step, metric, 1.0, 50);
    c.require(records.size() == 50, "record count");
    const Group& grp = metric.group();
    for (const auto& rec : records) {
        c.require(std::abs(rec.integral - 1.0) <= 1e-12,
                  "integral at k=" + std::to_string(rec.k));
        c.require(rec.integral >= 0.5, "below c/2");
        c.require(std::abs(rec.defect - 2.0 / (rec.k + 1.0)) <= 1e-12,
                  "defect at k=" + std::to_string(rec.k));
        c.require(std::abs(reiter_defect(grp, rec.measure, zi(1)) -
                           rec.defect) <= 1e-12,
                  "reported defect mismatch");
    }
    c.finish();
}

// ---------------------------------------------------------------------------
// 7. Higson variation profile and partial p-norms.
void criterion7() {
    Criterion c{7, "variation decay and bounded partial p-norms"};

    auto metric = std::make_shared<WordMetric>(Group::zd(1),
                                               WordMetric::Config{256, 10'000'000});
    Representation reg = Representation::regular(metric->group());
    Cocycle b = Cocycle::z_generated(reg, metric, delta(0));
    SparseVector xi = delta(0);
    auto* mp = metric.get();
    const Cocycle* bp = &b;
    ScalarField f{[mp, bp, xi](const GroupElement& g) {
                      int len = mp->length(g);
                      return len == 0 ? 0.0
                                      : inner(bp->eval(g), xi) / len;
                  },
                  "pairing"};
    for (int n = 2; n <= 200; ++n)
        for (const auto& g : metric->sphere(n))
            c.require(variation_norm(f, metric->group(), g) <= 2.0 / n + 1e-12,
                      "variation at n=" + std::to_string(n));

    double prev = hp_partial_norm(f, *metric, 4.0, 50);
    for (int R = 51; R <= 100; ++R) {
        double cur = hp_partial_norm(f, *metric, 4.0, R);
        c.require(cur - prev < 1e-3, "p=4 increment at R=" + std::to_string(R));
        prev = cur;
    }

    // Rank 2: p = 5 keeps the partial sums bounded out to R = 40.
    auto metric2 = std::make_shared<WordMetric>(Group::zd(2),
                                                WordMetric::Config{48, 10'000'000});
    Representation rot = Representation::rotation({golden_angle(), 1.2});
    SparseVector x1, x2;
    x1.set(BasisIndex::coord(0), 1.0);
    x2.set(BasisIndex::coord(2), 1.0);
    Cocycle b2 = Cocycle::zd_generated(rot, metric2, {x1, x2});
    SparseVector xi2 = x1 + x2;
    auto* mp2 = metric2.get();
    const Cocycle* bp2 = &b2;
    ScalarField f2{[mp2, bp2, xi2](const GroupElement& g) {
                       int len = mp2->length(g);
                       return len == 0 ? 0.0 : inner(bp2->eval(g), xi2) / len;
                   },
                   "pairing2"};
    double partial40 = hp_partial_norm(f2, *metric2, 5.0, 40);
    double partial30 = hp_partial_norm(f2, *metric2, 5.0, 30);
    c.require(std::isfinite(partial40), "p=5 partial not finite");
    c.require(partial40 - partial30 <= 0.05,
              "p=5 partials growing near the window edge");
    c.finish();
}

// ---------------------------------------------------------------------------
// 8. One-endedness windows and the C0 + constants oscillation bound.
double dijkstra_oscillation(const ScalarField& f, const Group& grp,
                            const std::vector<GroupElement>& comp) {
    std::map<GroupElement, std::size_t> index;
    for (std::size_t i = 0; i < comp.size(); ++i) index[comp[i]] = i;
    double worst = 0.0;
    for (std::size_t src = 0; src < comp.size(); ++src) {
        std::vector<double> dist(comp.size(),
                                 std::numeric_limits<double>::infinity());
        using Item = std::pair<double, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[src] = 0.0;
        pq.push({0.0, src});
        while (!pq.empty()) {
            auto [d, i] = pq.top();
            pq.pop();
            if (d > dist[i]) continue;
            for (const auto& s : grp.generators()) {
                auto it = index.find(grp.multiply(comp[i], s));
                if (it == index.end()) continue;
                double edge =
                    std::abs(f.eval(comp[i]) - f.eval(comp[it->second]));
                if (d + edge < dist[it->second]) {
                    dist[it->second] = d + edge;
                    pq.push({dist[it->second], it->second});
                }
            }
        }
        for (double d : dist)
            if (std::isfinite(d)) worst = std::max(worst, d);
    }
    return worst;
}

void criterion8() {
    Criterion c{8, "annulus end counts and path-bounded oscillation"};
    WordMetric m1(Group::zd(1), WordMetric::Config{16, 10'000'000});
    c.require(one_ended_window(m1, 2, 10) == 2, "zd:1 end count");
    WordMetric m2s(Group::zd(2), WordMetric::Config{16, 10'000'000});
    c.require(one_ended_window(m2s, 2, 10) == 1, "zd:2 end count");
    WordMetric mh(Group::heisenberg(), WordMetric::Config{8, 10'000'000});
    c.require(one_ended_window(mh, 2, 6) == 1, "heisenberg end count");

    auto metric = std::make_shared<WordMetric>(Group::zd(2),
                                               WordMetric::Config{16, 10'000'000});
    Representation rot = Representation::rotation({golden_angle(), 1.2});
    SparseVector x1, x2;
    x1.set(BasisIndex::coord(0), 1.0);
    x2.set(BasisIndex::coord(2), 1.0);
    Cocycle b = Cocycle::zd_generated(rot, metric, {x1, x2});
    SparseVector xi = x1 + x2;
    auto* mp = metric.get();
    const Cocycle* bp = &b;
    ScalarField f{[mp, bp, xi](const GroupElement& g) {
                      int len = mp->length(g);
                      return len == 0 ? 0.0 : inner(bp->eval(g), xi) / len;
                  },
                  "pairing2"};
    C0PlusConstantReport report = c0_plus_constant_test(f, *metric, 2, 10);
    c.require(report.touching_components == 1, "zd:2 touching components");
    AnnulusComponents comps = annulus_components(*metric, 2, 10);
    double path_bound = 0.0;
    for (std::size_t i = 0; i < comps.components.size(); ++i)
        if (comps.touches_outer[i])
            path_bound = std::max(path_bound,
                                  dijkstra_oscillation(
                                      f, metric->group(), comps.components[i]));
    c.require(report.oscillation <= path_bound + 1e-12,
              "oscillation above the path oracle");
    c.require(path_bound <= report.variation_budget + 1e-12,
              "path bound above K_r");
    c.finish();
}

// ---------------------------------------------------------------------------
// 9. Harmonic diagnostics for the simple random walk on the integers.
void criterion9() {
    Criterion c{9, "harmonic defect algebra for the +-1 walk"};
    Group z = Group::zd(1);
    WordMetric m(z, WordMetric::Config{32, 10'000'000});
    FiniteMeasure mu;
    mu.weights[zi(1)] = 0.5;
    mu.weights[zi(-1)] = 0.5;

    ScalarField lin{[](const GroupElement& g) {
                        return double(std::get<ZdElem>(g).c[0]);
                    },
                    "linear"};
    ScalarField sq{[](const GroupElement& g) {
                       double n = double(std::get<ZdElem>(g).c[0]);
                       return n * n;
                   },
                   "square"};
    for (const auto& g : m.ball(20)) {
        c.require(harmonic_defect(lin, z, mu, g) <= 1e-12, "linear defect");
        c.require(std::abs(harmonic_defect(sq, z, mu, g) - 1.0) <= 1e-12,
                  "square defect");
    }
    for (int R : {5, 10, 20})
        c.require(subharmonic_check(lin, m, mu, R) <= 1e-12,
                  "subharmonic at R=" + std::to_string(R));
    c.require(std::abs(second_moment(m, mu) - 1.0) <= 1e-15, "second moment");
    c.finish();
}

// ---------------------------------------------------------------------------
// 10. Byte determinism of the criterion 3 and 5 tables across thread counts.
void criterion10() {
    Criterion c{10, "CSV tables byte-identical across 1/2/8 worker threads"};
    std::string met1 = criterion3_table(1);
    c.require(criterion3_table(2) == met1, "met table differs at 2 threads");
    c.require(criterion3_table(8) == met1, "met table differs at 8 threads");
    std::string fix1 = criterion5_table(1);
    c.require(criterion5_table(2) == fix1, "fixpoint table differs at 2 threads");
    c.require(criterion5_table(8) == fix1, "fixpoint table differs at 8 threads");
    c.finish();
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
