#ifndef ERGO_HILBERT_HPP
#define ERGO_HILBERT_HPP

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "ergo/group.hpp"

namespace ergo {

/// Basis atom: either a finite-dimensional coordinate or a group point
/// (standard basis of l^2(G)).
struct Coord {
    std::int64_t i = 0;
    auto operator<=>(const Coord&) const = default;
};

using BasisAtom = std::variant<Coord, GroupElement>;

/// Basis index of H or of H (x) H; Pair nesting depth is at most 1.
struct BasisIndex {
    std::vector<BasisAtom> parts;  // size 1 (plain) or 2 (tensor)

    static BasisIndex coord(std::int64_t i) { return {{Coord{i}}}; }
    static BasisIndex point(const GroupElement& g) { return {{g}}; }
    static BasisIndex pair(const BasisIndex& a, const BasisIndex& b);

    bool is_pair() const { return parts.size() == 2; }
    auto operator<=>(const BasisIndex&) const = default;
};

/// Finitely supported real vector over an abstract basis. Entries with
/// |value| < 1e-15 are purged so equality of supports is meaningful.
class SparseVector {
public:
    static constexpr double kPurgeThreshold = 1e-15;

    SparseVector() = default;
    static SparseVector unit(const BasisIndex& b);

    const std::map<BasisIndex, double>& entries() const { return entries_; }
    double operator[](const BasisIndex& b) const {
        auto it = entries_.find(b);
        return it == entries_.end() ? 0.0 : it->second;
    }
    bool empty() const { return entries_.empty(); }

    void set(const BasisIndex& b, double v);
    void accumulate(const BasisIndex& b, double v);

    SparseVector& operator+=(const SparseVector& v);
    SparseVector& operator-=(const SparseVector& v);
    SparseVector& operator*=(double c);

private:
    std::map<BasisIndex, double> entries_;
};

SparseVector operator+(SparseVector u, const SparseVector& v);
SparseVector operator-(SparseVector u, const SparseVector& v);
SparseVector operator*(double c, SparseVector v);

double inner(const SparseVector& u, const SparseVector& v);
double norm(const SparseVector& u);
SparseVector add_scaled(const SparseVector& u, double c, const SparseVector& v);

/// Tensor product; both factors must live over plain (non-pair) bases.
SparseVector tensor(const SparseVector& u, const SparseVector& v);

/// Orthogonal representation handle. Weak mixing is a provenance flag set by
/// the constructor, never a numerical test.
class Representation {
public:
    enum class Kind { Trivial, Rotation, Regular, Tensor };

    static Representation trivial(Group group);
    /// Block rotations on R^{2d} for the group Z^d: the element (n_1..n_d)
    /// rotates block i (coords 2i, 2i+1) by n_i * theta_i.
    static Representation rotation(std::vector<double> angles);
    static Representation regular(Group group);

    /// The diagonal representation pi (x) pi acting on the Pair basis.
    Representation tensor_rep() const;

    /// Parses: trivial, rotation:<a1,...,ad> (radians; `golden` for
    /// 2*pi*(sqrt(5)-1)/2), regular.
    static Representation from_string(const std::string& spec, const Group& group);

    Kind kind() const { return kind_; }
    const Group& group() const { return group_; }
    const std::vector<double>& angles() const { return angles_; }
    std::string name() const;

    bool ergodic_known() const { return ergodic_known_; }
    bool weakly_mixing_known() const { return weakly_mixing_known_; }

    SparseVector apply(const GroupElement& g, const SparseVector& v) const;

    /// max over generators s of ||pi_s v - v|| / ||v||; zero iff v is invariant.
    double invariant_defect(const SparseVector& v) const;

private:
    Representation(Kind kind, Group group);

    Kind kind_;
    Group group_;
    std::vector<double> angles_;
    std::shared_ptr<const Representation> base_;  // set for Tensor
    bool ergodic_known_ = false;
    bool weakly_mixing_known_ = false;
};

/// Default irrational rotation angle 2*pi*(sqrt(5)-1)/2.
double golden_angle();

}  // namespace ergo

#endif
