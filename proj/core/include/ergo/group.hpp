#ifndef ERGO_GROUP_HPP
#define ERGO_GROUP_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace ergo {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GroupKind { FreeAbelian, Heisenberg, Lamplighter2, BS12 };

/// Element of Z^d in coordinates.
struct ZdElem {
    std::vector<std::int64_t> c;
    auto operator<=>(const ZdElem&) const = default;
};

/// Integer Heisenberg element; product (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
struct HeisElem {
    std::int64_t x = 0, y = 0, z = 0;
    auto operator<=>(const HeisElem&) const = default;
};

/// Lamplighter (Z/2) wr Z: finite set of lit lamps plus cursor position.
/// Product (A,t)(B,u) = (A symdiff (B+t), t+u); lamps kept sorted.
struct LampElem {
    std::vector<std::int64_t> lamps;
    std::int64_t cursor = 0;
    auto operator<=>(const LampElem&) const = default;
};

/// BS(1,2) = Z[1/2] x| Z as pairs (a, k) with a = num/2^exp in lowest terms
/// (num odd, or num = 0 and exp = 0). Product (a,k)(b,l) = (a + 2^k b, k+l).
struct Bs12Elem {
    std::int64_t num = 0;
    std::int32_t exp = 0;
    std::int64_t k = 0;
    auto operator<=>(const Bs12Elem&) const = default;
};

using GroupElement = std::variant<ZdElem, HeisElem, LampElem, Bs12Elem>;

/// One of the four shipped finitely generated groups together with its
/// ordered symmetric generating set.
class Group {
public:
    static Group zd(int d);
    static Group heisenberg();
    static Group lamplighter2();
    static Group bs12();

    /// Parses the selection grammar: zd:<d>, heisenberg, lamplighter2, bs12.
    static Group from_string(const std::string& spec);

    GroupKind kind() const { return kind_; }
    int rank() const { return rank_; }  // d for FreeAbelian, otherwise unused
    std::string name() const;

    GroupElement identity() const;
    const std::vector<GroupElement>& generators() const { return generators_; }

    GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
    GroupElement inverse(const GroupElement& g) const;
    bool is_identity(const GroupElement& g) const;

    nlohmann::json to_json(const GroupElement& g) const;
    GroupElement from_json(const nlohmann::json& j) const;
    std::string format(const GroupElement& g) const;

    bool operator==(const Group& o) const {
        return kind_ == o.kind_ && rank_ == o.rank_;
    }

private:
    Group(GroupKind kind, int rank);
    void check_member(const GroupElement& g) const;

    GroupKind kind_;
    int rank_;
    std::vector<GroupElement> generators_;
};

}  // namespace ergo

#endif
