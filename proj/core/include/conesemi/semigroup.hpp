#ifndef CONESEMI_SEMIGROUP_HPP
#define CONESEMI_SEMIGROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conesemi/cone.hpp"
#include "conesemi/orders.hpp"

namespace conesemi {

/// C-semigroup: a submonoid of a positive integer cone with finite
/// complement, represented by its canonically sorted gap set H(S).
///
/// Values are immutable after validation; derived sets (msg, PF, SG, ...)
/// are computed on demand behind a write-once cache shared across copies,
/// so instances can be freely shared between threads.
class CSemigroup {
public:
    // Validates the closure invariant: no gap may be the sum of two
    // nonzero semigroup elements.
    static CSemigroup from_gaps(ConePtr cone, std::vector<Vec> gaps);

    const ConePtr& cone_ptr() const { return cone_; }
    const Cone& cone() const { return *cone_; }
    const std::vector<Vec>& gaps() const { return gaps_; }

    std::size_t genus() const { return gaps_.size(); }
    bool is_gap(const Vec& x) const;
    bool contains(const Vec& x) const;  // x in S

    // max gap under the order; nullopt when S = C
    std::optional<Vec> frobenius(const TermOrder& o) const;

    const std::vector<Vec>& minimal_generators() const;
    const std::vector<Vec>& pseudo_frobenius() const;
    const std::vector<Vec>& special_gaps() const;
    const std::vector<Vec>& maximal_gaps() const;

    // <=_C-minimal elements of S \ {0}
    const std::vector<Vec>& minimals_nonzero() const;

    bool is_symmetric(const TermOrder& o) const;
    bool is_pseudo_symmetric(const TermOrder& o) const;

    // I_S(k) = S ∩ I_C(k), ascending graded-lex
    std::vector<Vec> unit_interval(const Vec& k) const;

    // M(S): gaps with no nonzero semigroup element <=_C below them, plus 0
    const std::vector<Vec>& m_set() const;
    // C(S): cone elements <=_C some gap
    const std::vector<Vec>& c_set() const;

    // Minimals of X_S = { x in C : h <=_C x for all gaps h }
    std::vector<Vec> x_minimals() const;

    CSemigroup add_element(const Vec& x) const;      // x must be a special gap
    CSemigroup remove_generator(const Vec& x) const; // x must be a minimal generator

    std::size_t expression_count(const Vec& x) const;  // unordered pairs of S* summing to x
    bool unique_expression(const Vec& x) const;

    bool operator==(const CSemigroup& o) const;
    std::string encode() const;  // canonical gap-list string

private:
    CSemigroup(ConePtr cone, std::vector<Vec> gaps, std::vector<Vec> gen_hint);

    bool decomposable(const Vec& s) const;

    ConePtr cone_;
    std::vector<Vec> gaps_;       // sorted graded-lex
    std::vector<Vec> gen_hint_;   // known generating superset, may be empty

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

// three-way canonical comparison on gap lists (degree, then coordinates)
int vec_cmp(const Vec& a, const Vec& b);
bool semigroup_less(const CSemigroup& a, const CSemigroup& b);

}  // namespace conesemi

#endif
