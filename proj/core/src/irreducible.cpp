#include "conesemi/irreducible.hpp"

#include <algorithm>
#include <map>

namespace conesemi {

PairDecomposition pair_decomposition(const Cone& c, const Vec& k) {
    PairDecomposition out;
    for (const Vec& x : c.interval(k)) {
        Vec y = k - x;
        if (x == y) {
            out.fixed_point = x;
        } else if (graded_lex_less(x, y)) {
            out.pairs.emplace_back(x, y);
        }
    }
    // the {0, k} pair leads
    std::stable_partition(out.pairs.begin(), out.pairs.end(),
                          [](const auto& p) { return p.first.is_zero(); });
    return out;
}

namespace {

enum class Mark : unsigned char { Undecided, Member, Gap };

struct PairSearch {
    ConePtr cone;
    Vec k;
    std::vector<Vec> elems;              // I_C(k), graded-lex
    std::map<std::vector<Coord>, int> index;
    std::vector<Mark> mark;
    std::vector<std::pair<int, int>> free_pairs;  // (smaller, larger) indices
    std::vector<CSemigroup> found;

    int idx_of(const Vec& v) const {
        auto it = index.find(v.c);
        return it == index.end() ? -1 : it->second;
    }

    // closure check restricted to the decided part; decompositions of an
    // interval element never leave the interval
    bool consistent_member(int s) {
        for (std::size_t h = 0; h < elems.size(); ++h) {
            if (mark[h] != Mark::Gap) continue;
            int rest = idx_of(elems[h] - elems[s]);
            if (rest >= 0 && rest != s && mark[rest] == Mark::Member && !elems[rest].is_zero() &&
                !elems[s].is_zero())
                return false;
            if (rest == s && !elems[s].is_zero()) return false;  // h = s + s
        }
        return true;
    }

    bool consistent_gap(int g) {
        for (std::size_t a = 0; a < elems.size(); ++a) {
            if (mark[a] != Mark::Member || elems[a].is_zero()) continue;
            int rest = idx_of(elems[g] - elems[a]);
            if (rest >= 0 && mark[rest] == Mark::Member && !elems[rest].is_zero()) return false;
        }
        return true;
    }

    void run(std::size_t depth) {
        if (depth == free_pairs.size()) {
            std::vector<Vec> gaps;
            for (std::size_t i = 0; i < elems.size(); ++i)
                if (mark[i] == Mark::Gap) gaps.push_back(elems[i]);
            found.push_back(CSemigroup::from_gaps(cone, std::move(gaps)));
            return;
        }
        auto [lo, hi] = free_pairs[depth];
        for (int round = 0; round < 2; ++round) {
            int gap = round == 0 ? hi : lo;
            int mem = round == 0 ? lo : hi;
            mark[gap] = Mark::Gap;
            mark[mem] = Mark::Member;
            if (consistent_gap(gap) && consistent_member(mem)) run(depth + 1);
            mark[gap] = Mark::Undecided;
            mark[mem] = Mark::Undecided;
        }
    }
};

}  // namespace

std::vector<CSemigroup> enumerate_irreducible(ConePtr c, const Vec& k, IrreducibleKind kind) {
    if (!c->contains(k)) raise(Errc::NotInCone, k.str());
    if (k.is_zero()) raise(Errc::KZero, "no irreducible semigroup has Frobenius element 0");

    PairSearch ps;
    ps.cone = c;
    ps.k = k;
    ps.elems = c->interval(k);
    bool odd = ps.elems.size() % 2 == 1;
    if (kind == IrreducibleKind::Symmetric && odd)
        raise(Errc::ParityMismatch, "|I_C(k)| = " + std::to_string(ps.elems.size()) +
                                        " is odd; symmetric needs even");
    if (kind == IrreducibleKind::PseudoSymmetric && !odd)
        raise(Errc::ParityMismatch, "|I_C(k)| = " + std::to_string(ps.elems.size()) +
                                        " is even; pseudo-symmetric needs odd");

    for (std::size_t i = 0; i < ps.elems.size(); ++i) ps.index[ps.elems[i].c] = static_cast<int>(i);
    ps.mark.assign(ps.elems.size(), Mark::Undecided);

    PairDecomposition pd = pair_decomposition(*c, k);
    ps.mark[ps.idx_of(zero_vec(c->dim()))] = Mark::Member;
    ps.mark[ps.idx_of(k)] = Mark::Gap;
    if (pd.fixed_point) ps.mark[ps.idx_of(*pd.fixed_point)] = Mark::Gap;

    for (const auto& [x, y] : pd.pairs) {
        if (x.is_zero()) continue;
        ps.free_pairs.emplace_back(ps.idx_of(x), ps.idx_of(y));
    }
    // decide pairs with large members first; closure constraints bind early
    std::sort(ps.free_pairs.begin(), ps.free_pairs.end(), [&](const auto& a, const auto& b) {
        return graded_lex_less(ps.elems[b.second], ps.elems[a.second]);
    });

    ps.run(0);
    std::sort(ps.found.begin(), ps.found.end(), semigroup_less);
    return ps.found;
}

std::vector<CSemigroup> ei_set(ConePtr c, const Vec& k, [[maybe_unused]] const TermOrder& o,
                               std::vector<CSemigroup>* rejected) {
    if (!c->contains(k)) raise(Errc::NotInCone, k.str());
    if (k.is_zero()) return {CSemigroup::from_gaps(c, {})};

    std::size_t isize = c->interval_size(k);
    std::vector<CSemigroup> out;
    if (isize == 2) return out;  // T ∪ {k} = C is not primary positioned; EI ⊆ P(k)
    if (isize % 2 == 0) {
        for (const CSemigroup& t : enumerate_irreducible(c, k, IrreducibleKind::Symmetric)) {
            CSemigroup s = t.add_element(k);
            if (!is_primary_positioned(s, k))
                raise(Errc::InternalInconsistency, "UESY root not primary positioned at k=" + k.str());
            out.push_back(std::move(s));
        }
    } else {
        Vec half = k.half();
        for (const CSemigroup& t : enumerate_irreducible(c, k, IrreducibleKind::PseudoSymmetric)) {
            CSemigroup s = t.add_element(k).add_element(half);
            const auto& cs = s.c_set();
            if (!std::binary_search(cs.begin(), cs.end(), half, GradedLexLess{})) {
                if (rejected) rejected->push_back(std::move(s));
                continue;
            }
            if (!is_primary_positioned(s, k))
                raise(Errc::InternalInconsistency, "PEPSY root not primary positioned at k=" + k.str());
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), semigroup_less);
    return out;
}

}  // namespace conesemi
