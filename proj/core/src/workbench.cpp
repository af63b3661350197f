#include "ergo/workbench.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ergo/numeric.hpp"

namespace ergo {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

std::string header(const Manifest& m) {
    std::ostringstream os;
    os << "# ergo " << kVersion << "\n";
    os << "# manifest " << m.canonical() << "\n";
    os << "# manifest_hash " << m.hash() << "\n";
    return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

}  // namespace

nlohmann::json Manifest::to_json() const {
    // `threads` is an execution detail, not part of the experiment identity:
    // results are byte-identical across thread counts.
    nlohmann::json j;
    j["group"] = group;
    if (!rep.empty()) j["rep"] = rep;
    if (!cocycle.empty()) j["cocycle"] = cocycle;
    if (!field.empty()) j["field"] = field;
    if (!measures.empty()) j["measures"] = measures;
    if (!xi.empty()) j["xi"] = xi;
    if (radius) j["radius"] = radius;
    if (n_max) j["n_max"] = n_max;
    j["p"] = p;
    if (K != 0.0) j["K"] = K;
    if (target != 0.0) j["target"] = target;
    j["format"] = format;
    return j;
}

Manifest Manifest::from_json(const nlohmann::json& j) {
    Manifest m;
    m.group = j.at("group").get<std::string>();
    m.rep = j.value("rep", "");
    m.cocycle = j.value("cocycle", "");
    m.field = j.value("field", "");
    m.measures = j.value("measures", "");
    m.xi = j.value("xi", "");
    m.radius = j.value("radius", 0);
    m.n_max = j.value("n_max", 0);
    m.p = j.value("p", 2.0);
    m.K = j.value("K", 0.0);
    m.target = j.value("target", 0.0);
    m.format = j.value("format", "csv");
    return m;
}

std::string Manifest::canonical() const { return to_json().dump(); }

std::string Manifest::hash() const { return fnv1a64(canonical()); }

WordMetric::Config recommended_metric_config(const Group& group) {
    WordMetric::Config cfg;
    switch (group.kind()) {
        case GroupKind::FreeAbelian:
            if (group.rank() == 1)
                cfg.radius_cap = 5000;
            else if (group.rank() == 2)
                cfg.radius_cap = 150;
            else
                cfg.radius_cap = 40;
            break;
        case GroupKind::Heisenberg:
            cfg.radius_cap = 24;
            break;
        case GroupKind::Lamplighter2:
        case GroupKind::BS12:
            cfg.radius_cap = 14;  // exponential growth
            break;
    }
    return cfg;
}

std::shared_ptr<WordMetric> make_metric(const Group& group) {
    return std::make_shared<WordMetric>(group, recommended_metric_config(group));
}

SparseVector parse_vector(const std::string& spec, const Group& group) {
    if (spec.rfind("point:", 0) == 0) {
        std::string body = spec.substr(6);
        if (body == "e") return SparseVector::unit(BasisIndex::point(group.identity()));
        nlohmann::json j = nlohmann::json::parse("[" + body + "]");
        return SparseVector::unit(BasisIndex::point(group.from_json(j)));
    }
    if (spec.rfind("coord:", 0) == 0) {
        SparseVector v;
        auto toks = split(spec.substr(6), ',');
        for (std::size_t i = 0; i < toks.size(); ++i)
            v.accumulate(BasisIndex::coord(static_cast<std::int64_t>(i)),
                         std::stod(toks[i]));
        return v;
    }
    throw UsageError("unknown vector token '" + spec + "'");
}

Cocycle parse_cocycle(const std::string& spec, const Representation& rep,
                      std::shared_ptr<WordMetric> metric) {
    const Group& group = metric->group();
    if (spec.rfind("coboundary:", 0) == 0)
        return Cocycle::coboundary(rep, metric,
                                   parse_vector(spec.substr(11), group));
    if (spec.rfind("generated:", 0) == 0) {
        auto vec_specs = split(spec.substr(10), ';');
        std::vector<SparseVector> xis;
        for (const auto& vs : vec_specs) xis.push_back(parse_vector(vs, group));
        if (group.kind() != GroupKind::FreeAbelian)
            throw UsageError("generated cocycles require zd:<d>");
        return Cocycle::zd_generated(rep, metric, xis);
    }
    throw UsageError("unknown cocycle token '" + spec + "'");
}

ScalarField parse_field(const std::string& spec, const Manifest& m,
                        std::shared_ptr<WordMetric> metric) {
    const Group& group = metric->group();
    if (spec == "step") {
        if (group.kind() != GroupKind::FreeAbelian || group.rank() != 1)
            throw UsageError("field 'step' requires zd:1");
        return ScalarField{[](const GroupElement& g) {
                               return std::get<ZdElem>(g).c[0] >= 0 ? 1.0 : 0.0;
                           },
                           "step"};
    }
    if (spec.rfind("constant:", 0) == 0) {
        double c = std::stod(spec.substr(9));
        return ScalarField{[c](const GroupElement&) { return c; }, spec};
    }
    if (spec == "pairing") {
        if (m.rep.empty() || m.cocycle.empty() || m.xi.empty())
            throw UsageError("field 'pairing' needs --rep, --cocycle and --xi");
        Representation rep = Representation::from_string(m.rep, group);
        auto b = std::make_shared<Cocycle>(
            parse_cocycle(m.cocycle, rep, metric));
        SparseVector xi = parse_vector(m.xi, group);
        return ScalarField{
            [b, metric, xi](const GroupElement& g) {
                int len = metric->length(g);
                if (len == 0) return 0.0;
                return inner(b->eval(g), xi) / static_cast<double>(len);
            },
            "pairing(" + m.cocycle + "," + m.xi + ")"};
    }
    throw UsageError("unknown field token '" + spec + "'");
}

MeasureSequence parse_measures(const std::string& spec, WordMetric& metric) {
    MeasureSequence seq;
    if (spec.rfind("balls:", 0) == 0) {
        std::string body = spec.substr(6);
        int lo = 1, hi = 0, step = 1;
        auto colon = body.find(':');
        if (colon != std::string::npos) {
            step = std::stoi(body.substr(colon + 1));
            if (step < 1) throw UsageError("balls: step must be >= 1");
            body = body.substr(0, colon);
        }
        auto dash = body.find('-', 1);  // skip a leading sign
        if (dash == std::string::npos) {
            hi = std::stoi(body);
        } else {
            lo = std::stoi(body.substr(0, dash));
            hi = std::stoi(body.substr(dash + 1));
        }
        for (int n = lo; n <= hi; n += step) {
            seq.labels.push_back(n);
            seq.measures.push_back(uniform_measure(to_subset(metric.ball(n))));
        }
        return seq;
    }
    if (spec.rfind("shalom:", 0) == 0) {
        auto toks = split(spec.substr(7), ',');
        if (toks.size() != 2) throw UsageError("shalom:<K>,<n_max>");
        double K = std::stod(toks[0]);
        int n_max = std::stoi(toks[1]);
        for (int n : shalom_ball_subsequence(metric, K, n_max)) {
            seq.labels.push_back(n);
            seq.measures.push_back(uniform_measure(to_subset(metric.ball(n))));
        }
        return seq;
    }
    if (spec.rfind("shifted:", 0) == 0) {
        if (metric.group().kind() != GroupKind::FreeAbelian ||
            metric.group().rank() != 1)
            throw UsageError("shifted measures require zd:1");
        auto toks = split(spec.substr(8), ',');
        if (toks.size() != 3) throw UsageError("shifted:<a>,<b>,<k_max>");
        std::int64_t a = std::stoll(toks[0]);
        std::int64_t b = std::stoll(toks[1]);
        int k_max = std::stoi(toks[2]);
        if (a > b) throw UsageError("shifted: need a <= b");
        for (int k = 1; k <= k_max; ++k) {
            FiniteSubset F;
            for (std::int64_t x = a * k; x <= b * k; ++x)
                F.insert(ZdElem{{x}});
            seq.labels.push_back(k);
            seq.measures.push_back(uniform_measure(F));
        }
        return seq;
    }
    throw UsageError("unknown measure token '" + spec + "'");
}

RunResult run_group_info(const Manifest& m) {
    Group group = Group::from_string(m.group);
    auto metric = make_metric(group);
    int radius = m.radius > 0 ? m.radius : 5;
    std::ostringstream os;
    os << header(m) << "n,ball,sphere,growth_exponent\n";
    for (int n = 0; n <= radius; ++n) {
        double ge = n >= 2 ? std::log(static_cast<double>(metric->ball_size(n))) /
                                 std::log(static_cast<double>(n))
                           : 0.0;
        os << n << "," << metric->ball_size(n) << ","
           << metric->sphere(n).size() << "," << fmt(ge) << "\n";
    }
    return {os.str(), 0};
}

RunResult run_folner_scan(const Manifest& m) {
    Group group = Group::from_string(m.group);
    auto metric = make_metric(group);
    int n_max = m.n_max > 0 ? m.n_max : (m.radius > 0 ? m.radius : 10);
    std::ostringstream os;
    os << header(m) << "n,|F|,|dF|,diam,K_hat,controlled\n";
    for (int n = 1; n <= n_max; ++n) {
        auto F = to_subset(metric->ball(n));
        auto diag = controlled_constant(*metric, F);
        bool controlled = m.K > 0.0 && diag.controlled_constant <= m.K;
        os << n << "," << diag.set_size << "," << diag.boundary_size << ","
           << diag.diameter << "," << fmt(diag.controlled_constant) << ","
           << (controlled ? 1 : 0) << "\n";
    }
    return {os.str(), 0};
}

RunResult run_met(const Manifest& m) {
    Group group = Group::from_string(m.group);
    auto metric = make_metric(group);
    Representation rep = Representation::from_string(m.rep, group);
    Cocycle b = parse_cocycle(m.cocycle, rep, metric);
    SparseVector xi = parse_vector(m.xi, group);
    MeasureSequence seq = parse_measures(m.measures, *metric);
    Array alpha = array_of(b);
    ParallelConfig par{m.threads};

    std::ostringstream os;
    os << header(m) << "n,weak,abs,norm_of_average\n";
    for (std::size_t i = 0; i < seq.measures.size(); ++i) {
        const auto& mu = seq.measures[i];
        double weak = weak_pairing_average(alpha, *metric, mu, xi, par);
        double abs = abs_pairing_average(alpha, *metric, mu, xi, par);
        double nrm = norm(flat_average(alpha, *metric, mu, par));
        os << seq.labels[i] << "," << fmt(weak) << "," << fmt(abs) << ","
           << fmt(nrm) << "\n";
    }
    return {os.str(), 0};
}

RunResult run_fixpoint(const Manifest& m) {
    Group group = Group::from_string(m.group);
    auto metric = make_metric(group);
    Representation rep = Representation::from_string(m.rep, group);
    Cocycle b = parse_cocycle(m.cocycle, rep, metric);
    MeasureSequence seq = parse_measures(m.measures, *metric);
    std::vector<FiniteSubset> sets;
    for (const auto& mu : seq.measures) {
        FiniteSubset F;
        for (const auto& [g, w] : mu.weights) F.insert(g);
        sets.push_back(std::move(F));
    }
    double target = m.target > 0.0 ? m.target : 0.15;
    FixedPointSearch search = almost_fixed_points(b, sets, target);

    std::ostringstream os;
    os << header(m) << "window,J,max_displacement,2CK_bound\n";
    for (const auto& w : search.windows)
        os << w.window_size << "," << fmt(w.objective) << ","
           << fmt(w.max_displacement) << "," << fmt(w.apriori_bound) << "\n";
    return {os.str(), search.target_reached ? 0 : 2};
}

RunResult run_higson_classify(const Manifest& m) {
    Group group = Group::from_string(m.group);
    auto metric = make_metric(group);
    ScalarField f = parse_field(m.field, m, metric);
    int R = m.radius > 0 ? m.radius : 20;
    std::ostringstream os;
    os << header(m) << "n,sup_variation,hp_partial\n";
    KahanSum partial;
    for (int n = 0; n <= R; ++n) {
        double sup = 0.0;
        for (const auto& g : metric->sphere(n)) {
            double vn = variation_norm(f, group, g);
            sup = std::max(sup, vn);
            partial.add(std::pow(vn, m.p));
        }
        os << n << "," << fmt(sup) << "," << fmt(partial.value()) << "\n";
    }
    return {os.str(), 0};
}

RunResult run_harmonic_test(const Manifest& m) {
    Group group = Group::from_string(m.group);
    auto metric = make_metric(group);
    ScalarField u = parse_field(m.field, m, metric);
    FiniteMeasure walk;
    if (!m.measures.empty()) {
        MeasureSequence seq = parse_measures(m.measures, *metric);
        if (seq.measures.empty()) throw UsageError("empty measure sequence");
        walk = seq.measures.back();
    } else {
        FiniteSubset S;
        for (const auto& s : group.generators()) S.insert(s);
        walk = uniform_measure(S);
    }
    int R = m.radius > 0 ? m.radius : 10;
    std::ostringstream os;
    os << header(m) << "g,defect\n";
    for (const auto& g : metric->ball(R))
        os << "\"" << group.format(g) << "\","
           << fmt(harmonic_defect(u, group, walk, g)) << "\n";
    return {os.str(), 0};
}

RunResult run_rigidity_demo(const Manifest& m) {
    Group group = Group::from_string(m.group);
    auto metric = make_metric(group);
    ScalarField f =
        parse_field(m.field.empty() ? "step" : m.field, m, metric);
    double c = m.K > 0.0 ? m.K : 1.0;
    int k_max = m.n_max > 0 ? m.n_max : 50;
    auto records = rigidity_counterexample(f.eval, *metric, c, k_max);
    std::ostringstream os;
    os << header(m) << "k,witness,integral,reiter_defect\n";
    for (const auto& r : records)
        os << r.k << "," << r.witness << "," << fmt(r.integral) << ","
           << fmt(r.defect) << "\n";
    return {os.str(), 0};
}

std::vector<std::string> validate(const Manifest& m) {
    std::vector<std::string> diags;
    try {
        Group group = Group::from_string(m.group);
        WordMetric::Config cfg = recommended_metric_config(group);
        int need = std::max(m.radius, m.n_max);
        if (need > cfg.radius_cap)
            diags.push_back("requested radius " + std::to_string(need) +
                            " exceeds cap " + std::to_string(cfg.radius_cap) +
                            " for " + group.name());
        if (!m.rep.empty()) Representation::from_string(m.rep, group);
        if (!m.xi.empty()) parse_vector(m.xi, group);
        if (!m.cocycle.empty() && !m.rep.empty()) {
            auto metric = make_metric(group);
            Representation rep = Representation::from_string(m.rep, group);
            parse_cocycle(m.cocycle, rep, metric);
        }
        if (!m.measures.empty() &&
            m.measures.rfind("balls:", 0) != 0 &&
            m.measures.rfind("shalom:", 0) != 0 &&
            m.measures.rfind("shifted:", 0) != 0)
            diags.push_back("unknown measure token '" + m.measures + "'");
    } catch (const std::exception& e) {
        diags.push_back(e.what());
    }
    return diags;
}

}  // namespace ergo
