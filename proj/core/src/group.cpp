#include "ergo/group.hpp"

#include <algorithm>
#include <sstream>

namespace ergo {

namespace {

// Normalizes a dyadic num/2^exp to lowest terms.
void normalize_dyadic(std::int64_t& num, std::int32_t& exp) {
    if (num == 0) {
        exp = 0;
        return;
    }
    while (exp > 0 && num % 2 == 0) {
        num /= 2;
        --exp;
    }
    while (exp < 0) {
        num *= 2;
        ++exp;
    }
}

// a + 2^k * b for dyadics a = an/2^ae, b = bn/2^be.
Bs12Elem bs12_product(const Bs12Elem& g, const Bs12Elem& h) {
    // shifted = 2^{g.k} * h.a = h.num / 2^{h.exp - g.k}
    std::int64_t sn = h.num;
    std::int32_t se = static_cast<std::int32_t>(h.exp - g.k);
    normalize_dyadic(sn, se);
    std::int32_t e = std::max(g.exp, se);
    std::int64_t n = (g.num << (e - g.exp)) + (sn << (e - se));
    normalize_dyadic(n, e);
    return Bs12Elem{n, e, g.k + h.k};
}

std::vector<std::int64_t> symdiff_shift(const std::vector<std::int64_t>& a,
                                        const std::vector<std::int64_t>& b,
                                        std::int64_t shift) {
    // a symdiff (b + shift), both sorted.
    std::vector<std::int64_t> bs(b);
    for (auto& x : bs) x += shift;
    std::vector<std::int64_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), bs.begin(), bs.end(),
                                  std::back_inserter(out));
    return out;
}

}  // namespace

Group::Group(GroupKind kind, int rank) : kind_(kind), rank_(rank) {
    switch (kind_) {
        case GroupKind::FreeAbelian:
            for (int i = 0; i < rank_; ++i) {
                ZdElem p{std::vector<std::int64_t>(rank_, 0)};
                p.c[i] = 1;
                ZdElem m{std::vector<std::int64_t>(rank_, 0)};
                m.c[i] = -1;
                generators_.push_back(p);
                generators_.push_back(m);
            }
            break;
        case GroupKind::Heisenberg:
            generators_ = {HeisElem{1, 0, 0}, HeisElem{-1, 0, 0},
                           HeisElem{0, 1, 0}, HeisElem{0, -1, 0}};
            break;
        case GroupKind::Lamplighter2:
            generators_ = {LampElem{{}, 1}, LampElem{{}, -1},
                           LampElem{{0}, 0}};
            break;
        case GroupKind::BS12:
            generators_ = {Bs12Elem{1, 0, 0}, Bs12Elem{-1, 0, 0},
                           Bs12Elem{0, 0, 1}, Bs12Elem{0, 0, -1}};
            break;
    }
}

Group Group::zd(int d) {
    if (d < 1) throw UsageError("zd: rank must be >= 1");
    return Group(GroupKind::FreeAbelian, d);
}
Group Group::heisenberg() { return Group(GroupKind::Heisenberg, 0); }
Group Group::lamplighter2() { return Group(GroupKind::Lamplighter2, 0); }
Group Group::bs12() { return Group(GroupKind::BS12, 0); }

Group Group::from_string(const std::string& spec) {
    if (spec.rfind("zd:", 0) == 0) {
        int d = 0;
        try {
            d = std::stoi(spec.substr(3));
        } catch (const std::exception&) {
            throw UsageError("bad group spec '" + spec + "'");
        }
        return zd(d);
    }
    if (spec == "heisenberg") return heisenberg();
    if (spec == "lamplighter2") return lamplighter2();
    if (spec == "bs12") return bs12();
    throw UsageError("unknown group token '" + spec + "'");
}

std::string Group::name() const {
    switch (kind_) {
        case GroupKind::FreeAbelian: return "zd:" + std::to_string(rank_);
        case GroupKind::Heisenberg: return "heisenberg";
        case GroupKind::Lamplighter2: return "lamplighter2";
        case GroupKind::BS12: return "bs12";
    }
    return "?";
}

GroupElement Group::identity() const {
    switch (kind_) {
        case GroupKind::FreeAbelian:
            return ZdElem{std::vector<std::int64_t>(rank_, 0)};
        case GroupKind::Heisenberg: return HeisElem{};
        case GroupKind::Lamplighter2: return LampElem{};
        case GroupKind::BS12: return Bs12Elem{};
    }
    return ZdElem{};
}

void Group::check_member(const GroupElement& g) const {
    bool ok = false;
    switch (kind_) {
        case GroupKind::FreeAbelian:
            ok = std::holds_alternative<ZdElem>(g) &&
                 std::get<ZdElem>(g).c.size() == static_cast<size_t>(rank_);
            break;
        case GroupKind::Heisenberg:
            ok = std::holds_alternative<HeisElem>(g);
            break;
        case GroupKind::Lamplighter2:
            ok = std::holds_alternative<LampElem>(g);
            break;
        case GroupKind::BS12:
            ok = std::holds_alternative<Bs12Elem>(g);
            break;
    }
    if (!ok) throw UsageError("element does not belong to group " + name());
}

GroupElement Group::multiply(const GroupElement& g, const GroupElement& h) const {
    check_member(g);
    check_member(h);
    switch (kind_) {
        case GroupKind::FreeAbelian: {
            const auto& a = std::get<ZdElem>(g);
            const auto& b = std::get<ZdElem>(h);
            ZdElem r = a;
            for (int i = 0; i < rank_; ++i) r.c[i] += b.c[i];
            return r;
        }
        case GroupKind::Heisenberg: {
            const auto& a = std::get<HeisElem>(g);
            const auto& b = std::get<HeisElem>(h);
            return HeisElem{a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y};
        }
        case GroupKind::Lamplighter2: {
            const auto& a = std::get<LampElem>(g);
            const auto& b = std::get<LampElem>(h);
            return LampElem{symdiff_shift(a.lamps, b.lamps, a.cursor),
                            a.cursor + b.cursor};
        }
        case GroupKind::BS12:
            return bs12_product(std::get<Bs12Elem>(g), std::get<Bs12Elem>(h));
    }
    return identity();
}

GroupElement Group::inverse(const GroupElement& g) const {
    check_member(g);
    switch (kind_) {
        case GroupKind::FreeAbelian: {
            ZdElem r = std::get<ZdElem>(g);
            for (auto& x : r.c) x = -x;
            return r;
        }
        case GroupKind::Heisenberg: {
            const auto& a = std::get<HeisElem>(g);
            return HeisElem{-a.x, -a.y, -a.z + a.x * a.y};
        }
        case GroupKind::Lamplighter2: {
            const auto& a = std::get<LampElem>(g);
            LampElem r;
            r.cursor = -a.cursor;
            r.lamps = a.lamps;
            for (auto& x : r.lamps) x -= a.cursor;
            return r;
        }
        case GroupKind::BS12: {
            const auto& a = std::get<Bs12Elem>(g);
            // (a,k)^{-1} = (-2^{-k} a, -k)
            std::int64_t n = -a.num;
            std::int32_t e = static_cast<std::int32_t>(a.exp + a.k);
            normalize_dyadic(n, e);
            return Bs12Elem{n, e, -a.k};
        }
    }
    return identity();
}

bool Group::is_identity(const GroupElement& g) const {
    check_member(g);
    return g == identity();
}

nlohmann::json Group::to_json(const GroupElement& g) const {
    check_member(g);
    switch (kind_) {
        case GroupKind::FreeAbelian:
            return nlohmann::json(std::get<ZdElem>(g).c);
        case GroupKind::Heisenberg: {
            const auto& a = std::get<HeisElem>(g);
            return nlohmann::json{a.x, a.y, a.z};
        }
        case GroupKind::Lamplighter2: {
            const auto& a = std::get<LampElem>(g);
            return nlohmann::json{a.lamps, a.cursor};
        }
        case GroupKind::BS12: {
            const auto& a = std::get<Bs12Elem>(g);
            return nlohmann::json{a.num, a.exp, a.k};
        }
    }
    return nullptr;
}

GroupElement Group::from_json(const nlohmann::json& j) const {
    switch (kind_) {
        case GroupKind::FreeAbelian: {
            ZdElem e{j.get<std::vector<std::int64_t>>()};
            if (e.c.size() != static_cast<size_t>(rank_))
                throw UsageError("element rank mismatch for " + name());
            return e;
        }
        case GroupKind::Heisenberg:
            return HeisElem{j.at(0).get<std::int64_t>(),
                            j.at(1).get<std::int64_t>(),
                            j.at(2).get<std::int64_t>()};
        case GroupKind::Lamplighter2: {
            LampElem e{j.at(0).get<std::vector<std::int64_t>>(),
                       j.at(1).get<std::int64_t>()};
            std::sort(e.lamps.begin(), e.lamps.end());
            return e;
        }
        case GroupKind::BS12:
            return Bs12Elem{j.at(0).get<std::int64_t>(),
                            j.at(1).get<std::int32_t>(),
                            j.at(2).get<std::int64_t>()};
    }
    return identity();
}

std::string Group::format(const GroupElement& g) const {
    return to_json(g).dump();
}

}  // namespace ergo
