#include "conesemi/positioned.hpp"

#include <algorithm>
#include <mutex>

namespace conesemi {

bool is_k_positioned(const CSemigroup& s, const Vec& k) {
    if (!s.cone().contains(k)) raise(Errc::NotInCone, k.str());
    for (const Vec& h : s.gaps()) {
        Vec d = k - h;
        if (!d.is_nonnegative() || !s.contains(d)) return false;
    }
    return true;
}

bool is_primary_positioned(const CSemigroup& s, const Vec& k) {
    if (!is_k_positioned(s, k)) return false;
    return s.m_set().size() + s.c_set().size() == s.cone().interval_size(k);
}

bool genus_bound_holds(const CSemigroup& s, const Vec& k) {
    if (!is_k_positioned(s, k) || !s.contains(k))
        raise(Errc::PreconditionViolated, "genus bound needs a k-positioned semigroup with k in S");
    return 2 * s.genus() + 2 <= s.cone().interval_size(k);
}

std::vector<Vec> primary_k_set(const CSemigroup& s) {
    const Cone& c = s.cone();
    std::size_t target = s.m_set().size() + s.c_set().size();
    Coord step = 1;
    for (const Vec& b : c.hilbert_basis()) step = std::max(step, b.degree());
    Coord max_deg = static_cast<Coord>(target - 1) * step;

    Vec corner(c.dim());
    for (auto& x : corner.c) x = max_deg;

    const auto& maxg = s.maximal_gaps();
    std::vector<Vec> out;
    for (const Vec& k : box_points(corner)) {
        if (k.degree() > max_deg || !s.contains(k)) continue;
        bool in_xs = true;
        for (const Vec& h : maxg)
            if (!c.le(h, k)) {
                in_xs = false;
                break;
            }
        if (!in_xs) continue;
        if (c.interval_size(k) != target) continue;
        if (is_primary_positioned(s, k)) out.push_back(k);
    }
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

const char* sg_class_name(SgClass c) {
    switch (c) {
        case SgClass::UESY: return "UESY";
        case SgClass::PEPSY: return "PEPSY";
        case SgClass::OTHER: return "OTHER";
    }
    return "?";
}

SgClass classify(const CSemigroup& s, const Vec& k, [[maybe_unused]] const TermOrder& o) {
    // the label is order-independent: both routes avoid the Frobenius element
    if (!is_k_positioned(s, k) || !s.contains(k))
        raise(Errc::PreconditionViolated, "classify needs a k-positioned semigroup with k in S");
    std::size_t isize = s.cone().interval_size(k);
    std::size_t g = s.genus();
    bool genus_uesy = 2 * g + 2 == isize;
    bool genus_pepsy = 2 * g + 3 == isize;

    const auto& msg = s.minimal_generators();
    bool k_minimal = std::find(msg.begin(), msg.end(), k) != msg.end();
    bool pepsy_route = !k.is_zero() && k.all_even() && s.cone().contains(k.half()) &&
                       !k_minimal && s.unique_expression(k);

    // live check of the two equivalences behind the classification
    if (genus_uesy != k_minimal)
        raise(Errc::InternalInconsistency,
              "UESY genus test and minimal-generator test disagree for k=" + k.str());
    if (genus_pepsy != pepsy_route)
        raise(Errc::InternalInconsistency,
              "PEPSY genus test and unique-expression test disagree for k=" + k.str());

    if (genus_uesy) return SgClass::UESY;
    if (genus_pepsy) return SgClass::PEPSY;
    return SgClass::OTHER;
}

struct PositionedContext::Cache {
    std::once_flag interval_once, b_once;
    std::vector<Vec> interval, b;
};

PositionedContext::PositionedContext(CSemigroup s, Vec k, TermOrder order)
    : s_(std::move(s)), k_(std::move(k)), order_(std::move(order)),
      cache_(std::make_shared<Cache>()) {
    if (!s_.cone().contains(k_)) raise(Errc::NotInCone, k_.str());
    if (!s_.contains(k_))
        raise(Errc::PreconditionViolated, "context requires k in S, got gap " + k_.str());
}

const std::vector<Vec>& PositionedContext::interval() const {
    std::call_once(cache_->interval_once, [this] { cache_->interval = s_.cone().interval(k_); });
    return cache_->interval;
}

const std::vector<Vec>& PositionedContext::b_set() const {
    std::call_once(cache_->b_once, [this] {
        std::vector<Vec> out;
        const auto& cset = s_.c_set();
        const auto& minnz = s_.minimals_nonzero();
        bool k_even = k_.all_even();
        Vec half = k_even ? k_.half() : Vec();
        for (const Vec& x : s_.minimal_generators()) {
            if (!std::binary_search(cset.begin(), cset.end(), x, GradedLexLess{})) continue;
            if (std::find(minnz.begin(), minnz.end(), x) != minnz.end()) continue;
            Vec d = k_ - x;
            if (!d.is_nonnegative() || !s_.contains(d)) continue;
            if (k_even && x == half) continue;
            out.push_back(x);
        }
        cache_->b = std::move(out);
    });
    return cache_->b;
}

Vec PositionedContext::beta() const {
    const auto& b = b_set();
    if (b.empty()) raise(Errc::EmptyBSet, "B(S) is empty at k=" + k_.str());
    return order_.max_of(b);
}

CSemigroup PositionedContext::psi() const {
    Vec b = beta();
    if (!is_primary_positioned(s_, k_))
        raise(Errc::PreconditionViolated, "psi needs S in P(k)");
    CSemigroup t = s_.remove_generator(b);
    if (!is_primary_positioned(t, k_))
        raise(Errc::InternalInconsistency, "psi image left P(k) at k=" + k_.str());
    return t;
}

}  // namespace conesemi
