#include "conesemi/forest.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

#include <json.hpp>

namespace conesemi {

std::size_t Forest::node_count() const {
    std::size_t n = 0;
    for (const auto& t : trees) n += t.nodes.size();
    return n;
}

namespace {

// candidate added elements shared by the root and non-root children rules
std::vector<Vec> child_candidates(const CSemigroup& s) {
    const auto& m = s.m_set();
    const auto& maxg = s.maximal_gaps();
    std::vector<Vec> out;
    for (const Vec& x : s.special_gaps()) {
        if (std::binary_search(m.begin(), m.end(), x, GradedLexLess{})) continue;
        if (std::find(maxg.begin(), maxg.end(), x) != maxg.end()) continue;
        out.push_back(x);
    }
    return out;
}

void sort_children(std::vector<std::pair<Vec, CSemigroup>>& cs, const TermOrder& o) {
    std::sort(cs.begin(), cs.end(),
              [&](const auto& a, const auto& b) { return o.less(a.first, b.first); });
}

}  // namespace

std::vector<std::pair<Vec, CSemigroup>> root_children(const CSemigroup& t, const Vec& k,
                                                      const TermOrder& o) {
    PositionedContext ctx(t, k, o);
    if (!ctx.b_set().empty()) raise(Errc::NotARoot, "B(S) nonempty at k=" + k.str());
    std::vector<std::pair<Vec, CSemigroup>> out;
    for (const Vec& x : child_candidates(t)) {
        // x ≻ k/2 is tested as 2x ≻ k; k/2 need not be a lattice point
        bool qualifies = o.greater(x * 2, k) || x * 3 == k || x * 4 == k;
        if (qualifies) out.emplace_back(x, t.add_element(x));
    }
    sort_children(out, o);
    return out;
}

std::vector<std::pair<Vec, CSemigroup>> node_children(const PositionedContext& ctx) {
    const CSemigroup& s = ctx.semigroup();
    const TermOrder& o = ctx.order();
    Vec b = ctx.beta();  // EmptyBSet on roots
    std::vector<std::pair<Vec, CSemigroup>> out;
    for (const Vec& x : child_candidates(s)) {
        bool qualifies;
        if (o.greater(x, b)) {
            qualifies = true;
        } else {
            qualifies = true;
            for (const Vec& y : ctx.b_set()) {
                if (!o.less(x, y)) continue;
                Vec d = y - x;
                bool in_s = d.is_nonnegative() && s.contains(d);
                if (!in_s && y != x * 2) {
                    qualifies = false;
                    break;
                }
            }
        }
        if (qualifies) out.emplace_back(x, s.add_element(x));
    }
    sort_children(out, o);
    return out;
}

ForestTree build_tree(const CSemigroup& root, const Vec& k, const TermOrder& o) {
    if (!is_primary_positioned(root, k)) raise(Errc::NotARoot, "root not in P(k)");
    ForestTree tree;
    tree.nodes.push_back(ForestNode{root, std::nullopt, -1, {}, 0});
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        std::vector<std::pair<Vec, CSemigroup>> kids;
        if (i == 0) {
            kids = root_children(tree.nodes[0].semigroup, k, o);
        } else {
            PositionedContext ctx(tree.nodes[i].semigroup, k, o);
            // stored β must agree with a from-scratch recomputation
            if (ctx.beta() != *tree.nodes[i].beta)
                raise(Errc::InternalInconsistency, "stored beta diverged at node " + std::to_string(i));
            kids = node_children(ctx);
        }
        for (auto& [x, child] : kids) {
            int id = static_cast<int>(tree.nodes.size());
            tree.nodes[i].children.push_back(id);
            tree.nodes.push_back(
                ForestNode{std::move(child), x, static_cast<int>(i), {}, tree.nodes[i].depth + 1});
        }
    }
    return tree;
}

Forest build_forest(ConePtr c, const Vec& k, const TermOrder& o, int jobs) {
    if (!c->contains(k)) raise(Errc::NotInCone, k.str());
    Forest f;
    f.cone = c;
    f.k = k;
    f.order = o;
    std::vector<CSemigroup> roots = ei_set(c, k, o);

    f.trees.resize(roots.size());
    if (jobs > 1 && roots.size() > 1) {
        std::vector<std::future<ForestTree>> futs;
        futs.reserve(roots.size());
        for (const CSemigroup& r : roots)
            futs.push_back(std::async(std::launch::async, [&, r] { return build_tree(r, k, o); }));
        for (std::size_t i = 0; i < futs.size(); ++i) f.trees[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < roots.size(); ++i) f.trees[i] = build_tree(roots[i], k, o);
    }

    std::set<std::string> seen;
    for (const auto& t : f.trees)
        for (const auto& n : t.nodes)
            if (!seen.insert(n.semigroup.encode()).second)
                raise(Errc::InternalInconsistency, "duplicate node across trees");
    return f;
}

CSemigroup construct_primary(ConePtr c, const Vec& k, const TermOrder& o) {
    if (!c->contains(k)) raise(Errc::NotInCone, k.str());
    if (k.is_zero()) return CSemigroup::from_gaps(c, {});

    std::vector<Vec> interval = c->interval(k);
    bool even = interval.size() % 2 == 0;

    // gaps of the larger-half construction: one per pair {x, k-x},
    // closure holds since members have 2x ≻ k and sums stay above k
    std::vector<Vec> lower_half;
    for (const Vec& x : interval) {
        if (x.is_zero()) continue;
        if (o.less(x * 2, k)) lower_half.push_back(x);
    }

    if (interval.size() == 2)  // the unitary extension collapses back to C
        raise(Errc::NoPrimaryExists,
              "no primary positioned semigroup exists for k=" + k.str() + " (|I_C(k)| = 2)");

    if (even) {
        CSemigroup s = CSemigroup::from_gaps(c, std::move(lower_half));
        if (!is_primary_positioned(s, k))
            raise(Errc::InternalInconsistency, "even-case construction failed at k=" + k.str());
        return s;
    }

    if (!c->is_orthant())
        raise(Errc::OddCaseUnsupportedCone,
              "odd |I_C(k)| construction is specific to C = N^d");
    if (!k.all_even())
        raise(Errc::InternalInconsistency, "odd |I_C(k)| with non-even k=" + k.str());
    Vec half = k.half();
    std::size_t nonzero = 0;
    Coord nonzero_val = 0;
    for (std::size_t i = 0; i < k.dim(); ++i)
        if (k[i] != 0) {
            ++nonzero;
            nonzero_val = k[i];
        }
    // k = 6e_i also has empty P(k): gaps are confined to the axis, where no
    // numerical semigroup has F + m = 6, and at k = 6e_i the swap element
    // satisfies 2(k - x) = x, breaking closure of the construction
    if (nonzero == 1 && (nonzero_val == 2 || nonzero_val == 4 || nonzero_val == 6))
        raise(Errc::NoPrimaryExists, "no primary positioned GNS exists for k=" + k.str());

    std::vector<Vec> candidates;
    for (std::size_t i = 0; i < k.dim(); ++i) {
        Vec x = half + unit_vec(k.dim(), i);
        if (x.leq_componentwise(k)) candidates.push_back(x);
    }
    Vec x = o.min_of(candidates);
    Vec kx = k - x;
    std::vector<Vec> gaps;
    for (const Vec& g : lower_half)
        if (g != kx) gaps.push_back(g);
    gaps.push_back(x);
    CSemigroup s = CSemigroup::from_gaps(c, std::move(gaps));
    if (!is_primary_positioned(s, k))
        raise(Errc::InternalInconsistency, "odd-case construction failed at k=" + k.str());
    return s;
}

EmitFormat parse_format(const std::string& name) {
    if (name == "text") return EmitFormat::Text;
    if (name == "json") return EmitFormat::Json;
    if (name == "dot") return EmitFormat::Dot;
    raise(Errc::UnknownFormat, name);
}

namespace {

using nlohmann::json;

json vec_to_json(const Vec& v) { return json(v.c); }

json gaps_to_json(const CSemigroup& s) {
    json a = json::array();
    for (const Vec& g : s.gaps()) a.push_back(vec_to_json(g));
    return a;
}

std::string emit_json(const Forest& f) {
    json doc;
    json gens = json::array();
    for (const Vec& g : f.cone->generators()) gens.push_back(vec_to_json(g));
    doc["cone"] = {{"generators", gens}};
    doc["k"] = vec_to_json(f.k);
    doc["order"] = f.order.name();
    json trees = json::array();
    int next_id = 0;
    for (const auto& t : f.trees) {
        json jt;
        jt["root"] = {{"gaps", gaps_to_json(t.nodes[0].semigroup)}};
        json nodes = json::array();
        int base = next_id;
        for (std::size_t i = 0; i < t.nodes.size(); ++i) {
            const ForestNode& n = t.nodes[i];
            json jn;
            jn["id"] = base + static_cast<int>(i);
            jn["gaps"] = gaps_to_json(n.semigroup);
            jn["beta"] = n.beta ? vec_to_json(*n.beta) : json(nullptr);
            jn["parent_id"] = n.parent >= 0 ? json(base + n.parent) : json(nullptr);
            jn["genus"] = n.semigroup.genus();
            jn["class"] = sg_class_name(classify(n.semigroup, f.k, f.order));
            nodes.push_back(std::move(jn));
        }
        next_id += static_cast<int>(t.nodes.size());
        jt["nodes"] = std::move(nodes);
        trees.push_back(std::move(jt));
    }
    doc["trees"] = std::move(trees);
    return doc.dump(2) + "\n";
}

std::string emit_dot(const Forest& f) {
    std::ostringstream os;
    os << "digraph forest {\n";
    os << "  node [shape=circle];\n";
    int next_id = 0;
    for (const auto& t : f.trees) {
        int base = next_id;
        for (std::size_t i = 0; i < t.nodes.size(); ++i) {
            const ForestNode& n = t.nodes[i];
            os << "  n" << (base + static_cast<int>(i)) << " [label=\"g=" << n.semigroup.genus()
               << "\\nbeta=" << (n.beta ? n.beta->str() : "-") << "\"";
            if (n.parent < 0) os << ", peripheries=2";
            os << "];\n";
        }
        for (std::size_t i = 0; i < t.nodes.size(); ++i) {
            const ForestNode& n = t.nodes[i];
            if (n.parent >= 0)
                os << "  n" << (base + n.parent) << " -> n" << (base + static_cast<int>(i))
                   << " [label=\"" << n.beta->str() << "\"];\n";
        }
        next_id += static_cast<int>(t.nodes.size());
    }
    os << "}\n";
    return os.str();
}

std::string emit_text(const Forest& f) {
    std::ostringstream os;
    os << "k=" << f.k.str() << " order=" << f.order.name() << " trees=" << f.trees.size()
       << " nodes=" << f.node_count() << "\n";
    int next_id = 0;
    for (std::size_t ti = 0; ti < f.trees.size(); ++ti) {
        const auto& t = f.trees[ti];
        int base = next_id;
        for (std::size_t i = 0; i < t.nodes.size(); ++i) {
            const ForestNode& n = t.nodes[i];
            os << "tree=" << ti << " id=" << (base + static_cast<int>(i)) << " parent=";
            if (n.parent >= 0)
                os << (base + n.parent);
            else
                os << "-";
            os << " depth=" << n.depth << " genus=" << n.semigroup.genus()
               << " beta=" << (n.beta ? n.beta->str() : "-")
               << " class=" << sg_class_name(classify(n.semigroup, f.k, f.order)) << " gaps=";
            const auto& gs = n.semigroup.gaps();
            for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                if (gi > 0) os << ';';
                os << gs[gi].str();
            }
            os << "\n";
        }
        next_id += static_cast<int>(t.nodes.size());
    }
    return os.str();
}

Vec vec_from_json(const json& j) {
    std::vector<Coord> c;
    for (const auto& x : j) c.push_back(x.get<Coord>());
    return Vec(std::move(c));
}

}  // namespace

std::string emit(const Forest& f, EmitFormat format) {
    switch (format) {
        case EmitFormat::Json: return emit_json(f);
        case EmitFormat::Dot: return emit_dot(f);
        case EmitFormat::Text: return emit_text(f);
    }
    raise(Errc::UnknownFormat, "unreachable");
}

Forest forest_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        raise(Errc::ParseError, e.what());
    }
    try {
        std::vector<Vec> gens;
        for (const auto& g : doc.at("cone").at("generators")) gens.push_back(vec_from_json(g));
        if (gens.empty()) raise(Errc::ParseError, "empty cone generators");
        Forest f;
        std::size_t dim = gens[0].dim();
        f.cone = make_cone(dim, std::move(gens));
        f.k = vec_from_json(doc.at("k"));
        f.order = TermOrder::parse(doc.at("order").get<std::string>());
        for (const auto& jt : doc.at("trees")) {
            ForestTree t;
            int base = -1;
            for (const auto& jn : jt.at("nodes")) {
                std::vector<Vec> gaps;
                for (const auto& g : jn.at("gaps")) gaps.push_back(vec_from_json(g));
                ForestNode n{CSemigroup::from_gaps(f.cone, std::move(gaps)), std::nullopt, -1, {}, 0};
                int id = jn.at("id").get<int>();
                if (base < 0) base = id;
                if (!jn.at("beta").is_null()) n.beta = vec_from_json(jn.at("beta"));
                if (!jn.at("parent_id").is_null()) n.parent = jn.at("parent_id").get<int>() - base;
                t.nodes.push_back(std::move(n));
            }
            for (std::size_t i = 0; i < t.nodes.size(); ++i) {
                if (t.nodes[i].parent >= 0) {
                    t.nodes[t.nodes[i].parent].children.push_back(static_cast<int>(i));
                    t.nodes[i].depth = t.nodes[t.nodes[i].parent].depth + 1;
                }
            }
            f.trees.push_back(std::move(t));
        }
        return f;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        raise(Errc::ParseError, e.what());
    }
}

}  // namespace conesemi
