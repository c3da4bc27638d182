#ifndef CONESEMI_POSITIONED_HPP
#define CONESEMI_POSITIONED_HPP

#include <memory>
#include <vector>

#include "conesemi/semigroup.hpp"

namespace conesemi {

// k - h lands in S for every gap h
bool is_k_positioned(const CSemigroup& s, const Vec& k);

// k-positioned and |M(S)| + |C(S)| = |I_C(k)|
bool is_primary_positioned(const CSemigroup& s, const Vec& k);

// g(S) <= (|I_C(k)| - 2) / 2; requires k-positioned with k in S
bool genus_bound_holds(const CSemigroup& s, const Vec& k);

// All k for which S is primary positioned. The search region is finite:
// |I_C(k)| grows at least linearly in deg(k) along Hilbert-basis chains,
// so |I_C(k)| = |M|+|C| bounds deg(k).
std::vector<Vec> primary_k_set(const CSemigroup& s);

enum class SgClass { UESY, PEPSY, OTHER };
const char* sg_class_name(SgClass c);

// Classification of a k-positioned semigroup with k in S. The genus test
// decides the label; the equivalent structural route (k minimal generator /
// unique expression) is evaluated too and any disagreement raises
// InternalInconsistency.
SgClass classify(const CSemigroup& s, const Vec& k, const TermOrder& o);

/// Bundle of a semigroup with a distinguished k in S and a term order;
/// carries the write-once caches for I_C(k) and B(S).
class PositionedContext {
public:
    PositionedContext(CSemigroup s, Vec k, TermOrder order);

    const CSemigroup& semigroup() const { return s_; }
    const Vec& k() const { return k_; }
    const TermOrder& order() const { return order_; }

    const std::vector<Vec>& interval() const;  // I_C(k)

    // B(S): minimal generators inside C(S), not <=_C-minimal in S\{0},
    // with k - x in S and x != k/2
    const std::vector<Vec>& b_set() const;

    Vec beta() const;       // max of B(S); EmptyBSet if B empty
    CSemigroup psi() const; // S minus beta(S); requires S in P(k)

private:
    CSemigroup s_;
    Vec k_;
    TermOrder order_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

}  // namespace conesemi

#endif
