#ifndef ERGO_WORKBENCH_HPP
#define ERGO_WORKBENCH_HPP

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ergo/averaging.hpp"
#include "ergo/higson.hpp"

namespace ergo {

inline constexpr const char* kVersion = "0.1.0";

/// Reproducible experiment description. Every emitted table embeds the
/// manifest and its hash in the header; identical manifests give
/// byte-identical CSV bodies regardless of thread count.
struct Manifest {
    std::string group;
    std::string rep;
    std::string cocycle;
    std::string field;
    std::string measures;
    std::string xi;
    int radius = 0;
    int n_max = 0;
    double p = 2.0;
    double K = 0.0;
    double target = 0.0;
    int threads = 1;
    std::string format = "csv";

    nlohmann::json to_json() const;
    static Manifest from_json(const nlohmann::json& j);
    std::string canonical() const;  // sorted-key dump; round-trips exactly
    std::string hash() const;       // FNV-1a 64 over the canonical dump
};

/// Radius caps large enough for desk-scale runs on each shipped group;
/// exponential-growth groups keep the tight default.
WordMetric::Config recommended_metric_config(const Group& group);
std::shared_ptr<WordMetric> make_metric(const Group& group);

/// Vector grammar: point:e | point:<i1,...> (l^2(G) basis) | coord:<v0,v1,...>.
SparseVector parse_vector(const std::string& spec, const Group& group);

/// Cocycle grammar: generated:<vec>[;<vec>...] | coboundary:<vec>.
Cocycle parse_cocycle(const std::string& spec, const Representation& rep,
                      std::shared_ptr<WordMetric> metric);

/// Field grammar: pairing (flattened cocycle paired with xi) | step (Z) |
/// constant:<c>.
ScalarField parse_field(const std::string& spec, const Manifest& m,
                        std::shared_ptr<WordMetric> metric);

/// Measure grammar: balls:<n_max> | balls:<lo>-<hi>[:<step>] |
/// shalom:<K>,<n_max> |
/// shifted:<a>,<b>,<k_max> (uniform on [a k, b k], Z only).
struct MeasureSequence {
    std::vector<int> labels;
    std::vector<FiniteMeasure> measures;
};
MeasureSequence parse_measures(const std::string& spec, WordMetric& metric);

struct RunResult {
    std::string table;  // CSV (or JSON) body including header comments
    int exit_code = 0;  // 0 success, 2 partial, 1 error
};

RunResult run_group_info(const Manifest& m);
RunResult run_folner_scan(const Manifest& m);
RunResult run_met(const Manifest& m);
RunResult run_fixpoint(const Manifest& m);
RunResult run_higson_classify(const Manifest& m);
RunResult run_harmonic_test(const Manifest& m);
RunResult run_rigidity_demo(const Manifest& m);

/// Dry run: parses everything and projects cache budgets, no computation.
std::vector<std::string> validate(const Manifest& m);

}  // namespace ergo

#endif
