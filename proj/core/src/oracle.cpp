#include "conesemi/oracle.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>

namespace conesemi::oracle {

namespace {

// child gaps: minimal generators inside I_C(k), strictly above the last
// added gap; the ascending-gap canonical path makes the tree duplicate-free
std::vector<Vec> child_gaps(const CSemigroup& s, const Vec& k, const std::optional<Vec>& last) {
    std::vector<Vec> out;
    for (const Vec& g : s.minimal_generators()) {
        if (!s.cone().le(g, k)) continue;
        if (last && !graded_lex_less(*last, g)) continue;
        out.push_back(g);
    }
    return out;
}

void dfs(const CSemigroup& s, const Vec& k, const std::optional<Vec>& last,
         std::vector<CSemigroup>& out) {
    for (const Vec& g : child_gaps(s, k, last)) {
        CSemigroup child = s.remove_generator(g);
        CSemigroup::from_gaps(child.cone_ptr(), child.gaps());  // revalidate emitted set
        out.push_back(child);
        dfs(child, k, g, out);
    }
}

}  // namespace

std::vector<CSemigroup> enumerate_all(ConePtr c, const Vec& k, std::size_t cap, int jobs) {
    if (!c->contains(k)) raise(Errc::NotInCone, k.str());
    std::size_t isize = c->interval_size(k);
    if (isize > cap)
        raise(Errc::CapExceeded, "|I_C(k)| = " + std::to_string(isize) + " exceeds cap " +
                                     std::to_string(cap));
    CSemigroup full = CSemigroup::from_gaps(c, {});
    std::vector<CSemigroup> out{full};

    std::vector<Vec> first = child_gaps(full, k, std::nullopt);
    if (jobs > 1 && first.size() > 1) {
        std::vector<std::future<std::vector<CSemigroup>>> futs;
        for (const Vec& g : first)
            futs.push_back(std::async(std::launch::async, [&, g] {
                std::vector<CSemigroup> part;
                CSemigroup child = full.remove_generator(g);
                CSemigroup::from_gaps(child.cone_ptr(), child.gaps());
                part.push_back(child);
                dfs(child, k, g, part);
                return part;
            }));
        for (auto& f : futs) {
            auto part = f.get();
            out.insert(out.end(), part.begin(), part.end());
        }
    } else {
        dfs(full, k, std::nullopt, out);
    }
    std::sort(out.begin(), out.end(), semigroup_less);
    return out;
}

std::vector<CSemigroup> primary_set(ConePtr c, const Vec& k, std::size_t cap, int jobs) {
    std::vector<CSemigroup> out;
    for (const CSemigroup& s : enumerate_all(c, k, cap, jobs))
        if (is_primary_positioned(s, k)) out.push_back(s);
    return out;
}

std::string CompareReport::str() const {
    std::ostringstream os;
    if (ok()) {
        os << "empty diff\n";
        return os.str();
    }
    for (const auto& s : missing) os << "missing from forest: " << s.encode() << "\n";
    for (const auto& s : extra) os << "extra in forest: " << s.encode() << "\n";
    for (const auto& m : beta_mismatches) os << "beta mismatch: " << m << "\n";
    return os.str();
}

CompareReport compare(ConePtr c, const Vec& k, const TermOrder& o, std::size_t cap, int jobs) {
    CompareReport rep;
    std::vector<CSemigroup> truth = primary_set(c, k, cap, jobs);
    Forest f = build_forest(c, k, o, jobs);

    std::vector<CSemigroup> nodes;
    for (const auto& t : f.trees)
        for (const auto& n : t.nodes) nodes.push_back(n.semigroup);
    std::sort(nodes.begin(), nodes.end(), semigroup_less);

    std::set_difference(truth.begin(), truth.end(), nodes.begin(), nodes.end(),
                        std::back_inserter(rep.missing), semigroup_less);
    std::set_difference(nodes.begin(), nodes.end(), truth.begin(), truth.end(),
                        std::back_inserter(rep.extra), semigroup_less);

    for (const auto& t : f.trees)
        for (const auto& n : t.nodes) {
            if (!n.beta) continue;
            PositionedContext ctx(n.semigroup, k, o);
            if (ctx.beta() != *n.beta)
                rep.beta_mismatches.push_back(n.semigroup.encode() + " stored " + n.beta->str() +
                                              " recomputed " + ctx.beta().str());
        }
    return rep;
}

}  // namespace conesemi::oracle
