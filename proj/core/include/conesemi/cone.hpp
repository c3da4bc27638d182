#ifndef CONESEMI_CONE_HPP
#define CONESEMI_CONE_HPP

#include <memory>
#include <vector>

#include "conesemi/errors.hpp"
#include "conesemi/vec.hpp"

namespace conesemi {

// All lattice points p with 0 <= p <= hi componentwise, in odometer order.
std::vector<Vec> box_points(const Vec& hi);

/// Positive integer cone C = cone(A) ∩ N^d for a finite generator set A.
///
/// Membership is decided exactly by integer sign checks against a derived
/// set of inward facet normals. Dimensions 1..3 are supported; rank-deficient
/// cones (rays in d=2,3 and planar cones in d=3) are handled by adding the
/// span equalities as normal pairs. Immutable after construction; the
/// Hilbert basis is computed once on demand and cached.
class Cone {
public:
    Cone(std::size_t dimension, std::vector<Vec> generators);

    std::size_t dim() const { return dim_; }
    const std::vector<Vec>& generators() const { return gens_; }
    const std::vector<Vec>& facet_normals() const { return normals_; }

    bool contains(const Vec& v) const;

    // x <=_C y, i.e. y - x in C.
    bool le(const Vec& x, const Vec& y) const;

    // I_C(k) = { x in C : x <=_C k }, ascending graded-lex.
    std::vector<Vec> interval(const Vec& k) const;

    std::size_t interval_size(const Vec& k) const;

    // Unique minimal monoid-generating set of C (all irreducible elements).
    const std::vector<Vec>& hilbert_basis() const;

    // <=_C antichain of minimal (resp. maximal) elements of xs.
    std::vector<Vec> minimals_in(const std::vector<Vec>& xs) const;
    std::vector<Vec> maximals_in(const std::vector<Vec>& xs) const;

    bool is_orthant() const;

    bool operator==(const Cone& o) const;

private:
    void check_dim(const Vec& v) const;
    void derive_normals();

    std::size_t dim_;
    std::vector<Vec> gens_;
    std::vector<Vec> normals_;

    struct HbCache;
    std::shared_ptr<HbCache> hb_;
};

using ConePtr = std::shared_ptr<const Cone>;

ConePtr make_cone(std::size_t dimension, std::vector<Vec> generators);
ConePtr make_orthant(std::size_t dimension);

}  // namespace conesemi

#endif
