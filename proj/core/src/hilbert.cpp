#include "ergo/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ergo/numeric.hpp"

namespace ergo {

double golden_angle() {
    return 2.0 * std::numbers::pi * (std::sqrt(5.0) - 1.0) / 2.0;
}

BasisIndex BasisIndex::pair(const BasisIndex& a, const BasisIndex& b) {
    if (a.is_pair() || b.is_pair())
        throw UsageError("tensor basis nesting deeper than H (x) H");
    return BasisIndex{{a.parts[0], b.parts[0]}};
}

SparseVector SparseVector::unit(const BasisIndex& b) {
    SparseVector v;
    v.set(b, 1.0);
    return v;
}

void SparseVector::set(const BasisIndex& b, double v) {
    if (std::abs(v) < kPurgeThreshold)
        entries_.erase(b);
    else
        entries_[b] = v;
}

void SparseVector::accumulate(const BasisIndex& b, double v) {
    auto [it, fresh] = entries_.emplace(b, v);
    if (!fresh) it->second += v;
    if (std::abs(it->second) < kPurgeThreshold) entries_.erase(it);
}

SparseVector& SparseVector::operator+=(const SparseVector& v) {
    for (const auto& [b, x] : v.entries_) accumulate(b, x);
    return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& v) {
    for (const auto& [b, x] : v.entries_) accumulate(b, -x);
    return *this;
}

SparseVector& SparseVector::operator*=(double c) {
    if (c == 0.0) {
        entries_.clear();
        return *this;
    }
    for (auto it = entries_.begin(); it != entries_.end();) {
        it->second *= c;
        if (std::abs(it->second) < kPurgeThreshold)
            it = entries_.erase(it);
        else
            ++it;
    }
    return *this;
}

SparseVector operator+(SparseVector u, const SparseVector& v) { return u += v; }
SparseVector operator-(SparseVector u, const SparseVector& v) { return u -= v; }
SparseVector operator*(double c, SparseVector v) { return v *= c; }

double inner(const SparseVector& u, const SparseVector& v) {
    const auto& a = u.entries();
    const auto& b = v.entries();
    KahanSum s;
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (it->first < jt->first)
            ++it;
        else if (jt->first < it->first)
            ++jt;
        else {
            s.add(it->second * jt->second);
            ++it;
            ++jt;
        }
    }
    return s.value();
}

double norm(const SparseVector& u) {
    KahanSum s;
    for (const auto& [b, x] : u.entries()) s.add(x * x);
    return std::sqrt(s.value());
}

SparseVector add_scaled(const SparseVector& u, double c, const SparseVector& v) {
    SparseVector out = u;
    for (const auto& [b, x] : v.entries()) out.accumulate(b, c * x);
    return out;
}

SparseVector tensor(const SparseVector& u, const SparseVector& v) {
    SparseVector out;
    for (const auto& [bu, xu] : u.entries())
        for (const auto& [bv, xv] : v.entries())
            out.accumulate(BasisIndex::pair(bu, bv), xu * xv);
    return out;
}

namespace {

// A rotation angle is flagged ergodic only when theta/(2 pi) is not close to
// a rational with small denominator; a finite computation cannot certify
// irrationality, so this is a constructor-side heuristic gate.
bool looks_irrational(double theta) {
    double frac = theta / (2.0 * std::numbers::pi);
    frac -= std::floor(frac);
    for (int q = 1; q <= 1024; ++q) {
        double scaled = frac * q;
        if (std::abs(scaled - std::round(scaled)) < 1e-9) return false;
    }
    return true;
}

}  // namespace

Representation::Representation(Kind kind, Group group)
    : kind_(kind), group_(std::move(group)) {}

Representation Representation::trivial(Group group) {
    return Representation(Kind::Trivial, std::move(group));
}

Representation Representation::rotation(std::vector<double> angles) {
    if (angles.empty()) throw UsageError("rotation: need at least one angle");
    Representation r(Kind::Rotation, Group::zd(static_cast<int>(angles.size())));
    r.angles_ = std::move(angles);
    bool all_irrational = true;
    for (double a : r.angles_)
        if (!looks_irrational(a)) all_irrational = false;
    r.ergodic_known_ = all_irrational;
    r.weakly_mixing_known_ = false;
    return r;
}

Representation Representation::regular(Group group) {
    Representation r(Kind::Regular, std::move(group));
    // Left-regular representation of an infinite group: weakly mixing since
    // lambda (x) lambda is a multiple of lambda.
    r.ergodic_known_ = true;
    r.weakly_mixing_known_ = true;
    return r;
}

Representation Representation::tensor_rep() const {
    if (kind_ == Kind::Tensor)
        throw UsageError("tensor of a tensor representation is out of scope");
    Representation r(Kind::Tensor, group_);
    r.base_ = std::make_shared<Representation>(*this);
    r.ergodic_known_ = weakly_mixing_known_;
    r.weakly_mixing_known_ = false;
    return r;
}

Representation Representation::from_string(const std::string& spec,
                                           const Group& group) {
    if (spec == "trivial") return trivial(group);
    if (spec == "regular") return regular(group);
    if (spec.rfind("rotation:", 0) == 0) {
        if (group.kind() != GroupKind::FreeAbelian)
            throw UsageError("rotation representation requires zd:<d>");
        std::vector<double> angles;
        std::stringstream ss(spec.substr(9));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok == "golden")
                angles.push_back(golden_angle());
            else
                angles.push_back(std::stod(tok));
        }
        if (static_cast<int>(angles.size()) != group.rank())
            throw UsageError("rotation: angle count must match zd rank");
        return rotation(std::move(angles));
    }
    throw UsageError("unknown representation token '" + spec + "'");
}

std::string Representation::name() const {
    switch (kind_) {
        case Kind::Trivial: return "trivial";
        case Kind::Regular: return "regular";
        case Kind::Rotation: {
            std::string s = "rotation:";
            for (std::size_t i = 0; i < angles_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(angles_[i]);
            }
            return s;
        }
        case Kind::Tensor: return base_->name() + "~tensor";
    }
    return "?";
}

SparseVector Representation::apply(const GroupElement& g,
                                   const SparseVector& v) const {
    switch (kind_) {
        case Kind::Trivial:
            return v;
        case Kind::Regular: {
            SparseVector out;
            for (const auto& [b, x] : v.entries()) {
                if (b.is_pair() || !std::holds_alternative<GroupElement>(b.parts[0]))
                    throw UsageError("regular representation needs l^2(G) basis");
                const auto& h = std::get<GroupElement>(b.parts[0]);
                out.accumulate(BasisIndex::point(group_.multiply(g, h)), x);
            }
            return out;
        }
        case Kind::Rotation: {
            const auto& n = std::get<ZdElem>(g).c;
            int d = static_cast<int>(angles_.size());
            SparseVector out;
            for (const auto& [b, x] : v.entries()) {
                if (b.is_pair() || !std::holds_alternative<Coord>(b.parts[0]))
                    throw UsageError("rotation representation needs Coord basis");
                std::int64_t i = std::get<Coord>(b.parts[0]).i;
                std::int64_t block = i / 2;
                if (block >= d) {
                    out.accumulate(b, x);  // coords beyond the blocks are fixed
                    continue;
                }
                double theta = static_cast<double>(n[block]) * angles_[block];
                double c = std::cos(theta), s = std::sin(theta);
                std::int64_t lo = 2 * block, hi = 2 * block + 1;
                if (i == lo) {
                    out.accumulate(BasisIndex::coord(lo), c * x);
                    out.accumulate(BasisIndex::coord(hi), s * x);
                } else {
                    out.accumulate(BasisIndex::coord(lo), -s * x);
                    out.accumulate(BasisIndex::coord(hi), c * x);
                }
            }
            return out;
        }
        case Kind::Tensor: {
            SparseVector out;
            for (const auto& [b, x] : v.entries()) {
                if (!b.is_pair())
                    throw UsageError("tensor representation needs Pair basis");
                SparseVector left = base_->apply(
                    g, SparseVector::unit(BasisIndex{{b.parts[0]}}));
                SparseVector right = base_->apply(
                    g, SparseVector::unit(BasisIndex{{b.parts[1]}}));
                SparseVector t = tensor(left, right);
                out += (x * t);
            }
            return out;
        }
    }
    return v;
}

double Representation::invariant_defect(const SparseVector& v) const {
    double nv = norm(v);
    if (nv == 0.0) throw UsageError("invariant_defect of the zero vector");
    double worst = 0.0;
    for (const auto& s : group_.generators())
        worst = std::max(worst, norm(apply(s, v) - v) / nv);
    return worst;
}

}  // namespace ergo
