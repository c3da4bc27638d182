#include "conesemi/semigroup.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace conesemi {

struct CSemigroup::Cache {
    std::once_flag msg_once, pf_once, sg_once, maxg_once, minnz_once, m_once, c_once;
    std::vector<Vec> msg, pf, sg, maxg, minnz, m, c;
};

namespace {

void canonical_sort(std::vector<Vec>& xs) {
    std::sort(xs.begin(), xs.end(), GradedLexLess{});
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

int vec_cmp(const Vec& a, const Vec& b) {
    if (graded_lex_less(a, b)) return -1;
    if (graded_lex_less(b, a)) return 1;
    return 0;
}

bool semigroup_less(const CSemigroup& a, const CSemigroup& b) {
    const auto& ga = a.gaps();
    const auto& gb = b.gaps();
    for (std::size_t i = 0; i < ga.size() && i < gb.size(); ++i) {
        int c = vec_cmp(ga[i], gb[i]);
        if (c != 0) return c < 0;
    }
    return ga.size() < gb.size();
}

CSemigroup::CSemigroup(ConePtr cone, std::vector<Vec> gaps, std::vector<Vec> gen_hint)
    : cone_(std::move(cone)),
      gaps_(std::move(gaps)),
      gen_hint_(std::move(gen_hint)),
      cache_(std::make_shared<Cache>()) {}

CSemigroup CSemigroup::from_gaps(ConePtr cone, std::vector<Vec> gaps) {
    for (const Vec& g : gaps) {
        if (g.dim() != cone->dim())
            raise(Errc::DimensionMismatch, "gap " + g.str());
        if (g.is_zero()) raise(Errc::ZeroGap, "0 cannot be a gap");
        if (!cone->contains(g)) raise(Errc::GapNotInCone, g.str());
    }
    canonical_sort(gaps);
    CSemigroup s(std::move(cone), std::move(gaps), {});
    for (const Vec& h : s.gaps_) {
        for (const Vec& x : s.cone_->interval(h)) {
            if (x.is_zero() || x == h) continue;
            if (!s.is_gap(x) && !s.is_gap(h - x))
                raise(Errc::NotClosed,
                      h.str() + " = " + x.str() + " + " + (h - x).str() +
                          " with both summands in the semigroup");
        }
    }
    return s;
}

bool CSemigroup::is_gap(const Vec& x) const {
    return std::binary_search(gaps_.begin(), gaps_.end(), x, GradedLexLess{});
}

bool CSemigroup::contains(const Vec& x) const { return cone_->contains(x) && !is_gap(x); }

std::optional<Vec> CSemigroup::frobenius(const TermOrder& o) const {
    if (gaps_.empty()) return std::nullopt;
    return o.max_of(gaps_);
}

bool CSemigroup::decomposable(const Vec& s) const {
    for (const Vec& x : cone_->interval(s)) {
        if (x.is_zero() || x == s) continue;
        if (!is_gap(x) && !is_gap(s - x)) return true;
    }
    return false;
}

const std::vector<Vec>& CSemigroup::minimal_generators() const {
    std::call_once(cache_->msg_once, [this] {
        std::vector<Vec> cand;
        if (!gen_hint_.empty()) {
            cand = gen_hint_;
        } else {
            // complete candidate region HB ∪ (HB+H) ∪ (H+HB+H), see docs/notes.md
            const auto& hb = cone_->hilbert_basis();
            cand = hb;
            for (const Vec& b : hb)
                for (const Vec& h : gaps_) cand.push_back(b + h);
            for (const Vec& h1 : gaps_)
                for (const Vec& b : hb)
                    for (const Vec& h2 : gaps_) cand.push_back(h1 + b + h2);
        }
        canonical_sort(cand);
        std::vector<Vec> out;
        for (const Vec& s : cand) {
            if (s.is_zero() || !contains(s)) continue;
            if (!decomposable(s)) out.push_back(s);
        }
        cache_->msg = std::move(out);
    });
    return cache_->msg;
}

const std::vector<Vec>& CSemigroup::pseudo_frobenius() const {
    std::call_once(cache_->pf_once, [this] {
        std::vector<Vec> out;
        for (const Vec& h : gaps_) {
            bool pf = true;
            for (const Vec& g : gaps_) {
                Vec d = g - h;
                if (d.is_zero() || !d.is_nonnegative()) continue;
                if (contains(d)) {  // h + (d in S*) hits gap g
                    pf = false;
                    break;
                }
            }
            if (pf) out.push_back(h);
        }
        cache_->pf = std::move(out);
    });
    return cache_->pf;
}

const std::vector<Vec>& CSemigroup::special_gaps() const {
    std::call_once(cache_->sg_once, [this] {
        std::vector<Vec> out;
        for (const Vec& x : pseudo_frobenius())
            if (contains(x * 2)) out.push_back(x);
        cache_->sg = std::move(out);
    });
    return cache_->sg;
}

const std::vector<Vec>& CSemigroup::maximal_gaps() const {
    std::call_once(cache_->maxg_once, [this] { cache_->maxg = cone_->maximals_in(gaps_); });
    return cache_->maxg;
}

const std::vector<Vec>& CSemigroup::minimals_nonzero() const {
    std::call_once(cache_->minnz_once, [this] {
        std::vector<Vec> out;
        for (const Vec& s : minimal_generators()) {
            bool minimal = true;
            for (const Vec& x : cone_->interval(s)) {
                if (x.is_zero() || x == s) continue;
                if (!is_gap(x)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.push_back(s);
        }
        cache_->minnz = std::move(out);
    });
    return cache_->minnz;
}

bool CSemigroup::is_symmetric(const TermOrder& o) const {
    if (gaps_.empty()) return false;
    const auto& pf = pseudo_frobenius();
    return pf.size() == 1 && pf.front() == *frobenius(o);
}

bool CSemigroup::is_pseudo_symmetric(const TermOrder& o) const {
    if (gaps_.empty()) return false;
    Vec f = *frobenius(o);
    if (!f.all_even()) return false;
    std::vector<Vec> expect{f.half(), f};
    canonical_sort(expect);
    return pseudo_frobenius() == expect;
}

std::vector<Vec> CSemigroup::unit_interval(const Vec& k) const {
    std::vector<Vec> out;
    for (const Vec& x : cone_->interval(k))
        if (!is_gap(x)) out.push_back(x);
    return out;
}

const std::vector<Vec>& CSemigroup::m_set() const {
    std::call_once(cache_->m_once, [this] {
        std::vector<Vec> out{zero_vec(cone_->dim())};
        for (const Vec& h : gaps_) {
            bool trivial_below = true;
            for (const Vec& x : cone_->interval(h)) {
                if (x.is_zero()) continue;
                if (!is_gap(x)) {
                    trivial_below = false;
                    break;
                }
            }
            if (trivial_below) out.push_back(h);
        }
        canonical_sort(out);
        cache_->m = std::move(out);
    });
    return cache_->m;
}

const std::vector<Vec>& CSemigroup::c_set() const {
    std::call_once(cache_->c_once, [this] {
        std::vector<Vec> out;
        for (const Vec& h : maximal_gaps())
            for (const Vec& x : cone_->interval(h)) out.push_back(x);
        canonical_sort(out);
        cache_->c = std::move(out);
    });
    return cache_->c;
}

std::vector<Vec> CSemigroup::x_minimals() const {
    if (gaps_.empty()) raise(Errc::NoGaps, "X_S minimals need a nonempty gap set");
    const auto& maxg = maximal_gaps();
    Vec bound(cone_->dim());
    for (const Vec& h : maxg) bound = bound + h;
    for (const Vec& b : cone_->hilbert_basis()) bound = bound + b;

    auto in_xs = [&](const Vec& x) {
        if (!cone_->contains(x)) return false;
        for (const Vec& h : maxg)
            if (!cone_->le(h, x)) return false;
        return true;
    };

    std::vector<Vec> members;
    for (const Vec& x : box_points(bound))
        if (in_xs(x)) members.push_back(x);
    std::vector<Vec> mins = cone_->minimals_in(members);
    std::sort(mins.begin(), mins.end(), GradedLexLess{});

    // a minimal on the search-box boundary may hide smaller members outside
    for (const Vec& x : members) {
        bool boundary = false;
        for (std::size_t i = 0; i < x.dim(); ++i)
            if (x[i] == bound[i]) boundary = true;
        if (!boundary) continue;
        bool dominated = false;
        for (const Vec& m : mins)
            if (m != x && cone_->le(m, x)) {
                dominated = true;
                break;
            }
        if (!dominated)
            raise(Errc::BoundUncertain, "X_S minimal candidate " + x.str() + " touches the search box");
    }
    return mins;
}

CSemigroup CSemigroup::add_element(const Vec& x) const {
    const auto& sg = special_gaps();
    if (std::find(sg.begin(), sg.end(), x) == sg.end())
        raise(Errc::NotSpecialGap, x.str());
    std::vector<Vec> gaps;
    for (const Vec& g : gaps_)
        if (g != x) gaps.push_back(g);
    std::vector<Vec> hint = minimal_generators();
    hint.push_back(x);
    return CSemigroup(cone_, std::move(gaps), std::move(hint));
}

CSemigroup CSemigroup::remove_generator(const Vec& x) const {
    const auto& msg = minimal_generators();
    if (std::find(msg.begin(), msg.end(), x) == msg.end())
        raise(Errc::NotMinimalGenerator, x.str());
    std::vector<Vec> gaps = gaps_;
    gaps.push_back(x);
    canonical_sort(gaps);
    // generating superset of S \ {x} from msg(S)
    std::vector<Vec> hint;
    for (const Vec& n : msg)
        if (n != x) {
            hint.push_back(n);
            hint.push_back(x + n);
        }
    hint.push_back(x * 2);
    hint.push_back(x * 3);
    return CSemigroup(cone_, std::move(gaps), std::move(hint));
}

std::size_t CSemigroup::expression_count(const Vec& x) const {
    if (!contains(x)) raise(Errc::NotInSemigroup, x.str());
    std::size_t ordered = 0, fixed = 0;
    for (const Vec& a : cone_->interval(x)) {
        if (a.is_zero() || a == x) continue;
        if (!is_gap(a) && !is_gap(x - a)) {
            ++ordered;
            if (a + a == x) ++fixed;
        }
    }
    return (ordered + fixed) / 2;
}

bool CSemigroup::unique_expression(const Vec& x) const { return expression_count(x) <= 1; }

bool CSemigroup::operator==(const CSemigroup& o) const {
    return gaps_ == o.gaps_ && (cone_ == o.cone_ || *cone_ == *o.cone_);
}

std::string CSemigroup::encode() const {
    std::ostringstream os;
    for (const Vec& g : gaps_) os << g.str() << ';';
    return os.str();
}

}  // namespace conesemi
