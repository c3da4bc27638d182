// Command-line front end for the conesemi library: semigroup analysis,
// irreducible enumeration, forest construction, and oracle verification.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "conesemi/forest.hpp"
#include "conesemi/oracle.hpp"

using namespace conesemi;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitCap = 2;
constexpr int kExitInput = 3;

Vec parse_vec(const std::string& s) {
    std::vector<Coord> coords;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            coords.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            raise(Errc::ParseError, "bad coordinate '" + tok + "' in '" + s + "'");
        }
    }
    if (coords.empty()) raise(Errc::ParseError, "empty vector '" + s + "'");
    return Vec(std::move(coords));
}

// "1,0;1,1" -> cone spanned by (1,0) and (1,1)
ConePtr parse_cone(const std::string& s) {
    std::vector<Vec> gens;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ';')) gens.push_back(parse_vec(tok));
    if (gens.empty()) raise(Errc::ParseError, "empty cone spec '" + s + "'");
    std::size_t dim = gens[0].dim();
    return make_cone(dim, std::move(gens));
}

std::size_t interval_cap() {
    if (const char* env = std::getenv("CONESEMI_MAX_INTERVAL")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            raise(Errc::ParseError, std::string("bad CONESEMI_MAX_INTERVAL '") + env + "'");
        }
    }
    return oracle::kDefaultCap;
}

Vec json_vec(const json& j) {
    std::vector<Coord> c;
    for (const auto& x : j) c.push_back(x.get<Coord>());
    return Vec(std::move(c));
}

std::string frobenius_str(const CSemigroup& s, const TermOrder& o, bool gns_conventions) {
    auto f = s.frobenius(o);
    if (f) return f->str();
    if (gns_conventions && s.cone().is_orthant()) {
        Vec conv(s.cone().dim());
        for (auto& x : conv.c) x = -1;
        return conv.str();
    }
    return "none";
}

struct AnalyzeInput {
    ConePtr cone;
    std::vector<Vec> gaps;
    std::vector<Vec> ks;
    TermOrder order = TermOrder::grlex();
};

AnalyzeInput read_analyze_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) raise(Errc::ParseError, "cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        raise(Errc::ParseError, e.what());
    }
    AnalyzeInput in;
    try {
        std::vector<Vec> gens;
        for (const auto& g : doc.at("cone").at("generators")) gens.push_back(json_vec(g));
        if (gens.empty()) raise(Errc::ParseError, "empty cone generators");
        std::size_t dim = gens[0].dim();
        in.cone = make_cone(dim, std::move(gens));
        if (doc.contains("gaps"))
            for (const auto& g : doc["gaps"]) in.gaps.push_back(json_vec(g));
        if (doc.contains("k")) in.ks.push_back(json_vec(doc["k"]));
        if (doc.contains("order")) in.order = TermOrder::parse(doc["order"].get<std::string>());
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        raise(Errc::ParseError, e.what());
    }
    return in;
}

int run_analyze(const std::string& input, const std::vector<std::string>& k_flags,
                const std::string& order_flag, bool gns_conventions) {
    AnalyzeInput in = read_analyze_input(input);
    if (!order_flag.empty()) in.order = TermOrder::parse(order_flag);
    for (const auto& kf : k_flags) in.ks.push_back(parse_vec(kf));

    CSemigroup s = CSemigroup::from_gaps(in.cone, in.gaps);
    std::cout << "order: " << in.order.name() << "\n";
    std::cout << "genus: " << s.genus() << "\n";
    if (s.gaps().empty()) std::cout << "S = C\n";
    for (const auto& o : {TermOrder::lex(), TermOrder::grlex(), TermOrder::grevlex()})
        std::cout << "frobenius[" << o.name() << "]: " << frobenius_str(s, o, gns_conventions)
                  << "\n";
    if (in.order.kind() == OrderKind::Weighted)
        std::cout << "frobenius[" << in.order.name()
                  << "]: " << frobenius_str(s, in.order, gns_conventions) << "\n";
    std::cout << "msg: " << vec_list_str(s.minimal_generators()) << "\n";
    std::cout << "PF: " << vec_list_str(s.pseudo_frobenius()) << "\n";
    std::cout << "SG: " << vec_list_str(s.special_gaps()) << "\n";
    std::cout << "M: " << vec_list_str(s.m_set()) << "\n";
    std::cout << "C: " << vec_list_str(s.c_set()) << "\n";
    if (s.gaps().empty())
        std::cout << "x_minimals: undefined (S = C)\n";
    else
        std::cout << "x_minimals: " << vec_list_str(s.x_minimals()) << "\n";

    for (const Vec& k : in.ks) {
        std::cout << "k=" << k.str() << ":";
        bool pos = is_k_positioned(s, k);
        std::cout << " positioned=" << (pos ? "true" : "false");
        bool prim = pos && is_primary_positioned(s, k);
        std::cout << " primary=" << (prim ? "true" : "false");
        if (pos && s.contains(k)) {
            std::cout << " class=" << sg_class_name(classify(s, k, in.order));
            const auto& msg = s.minimal_generators();
            bool k_min = std::find(msg.begin(), msg.end(), k) != msg.end();
            std::cout << " k_in_msg=" << (k_min ? "true" : "false");
            std::cout << " unique_expr=" << (s.unique_expression(k) ? "true" : "false");
            PositionedContext ctx(s, k, in.order);
            std::cout << " B=" << vec_list_str(ctx.b_set());
            if (!ctx.b_set().empty()) std::cout << " beta=" << ctx.beta().str();
        } else if (!s.contains(k)) {
            std::cout << " k_in_S=false";
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int run_irreducible(const std::string& cone_spec, const std::string& k_spec,
                    const std::string& kind_name) {
    ConePtr c = parse_cone(cone_spec);
    Vec k = parse_vec(k_spec);
    IrreducibleKind kind;
    if (kind_name == "symmetric") kind = IrreducibleKind::Symmetric;
    else if (kind_name == "pseudo-symmetric") kind = IrreducibleKind::PseudoSymmetric;
    else raise(Errc::ParseError, "kind must be symmetric or pseudo-symmetric");
    auto ts = enumerate_irreducible(c, k, kind);
    std::cout << "count: " << ts.size() << "\n";
    for (const auto& t : ts) std::cout << "gaps: " << vec_list_str(t.gaps()) << "\n";
    return kExitOk;
}

int run_ei(const std::string& cone_spec, const std::string& k_spec, const std::string& order) {
    ConePtr c = parse_cone(cone_spec);
    Vec k = parse_vec(k_spec);
    TermOrder o = TermOrder::parse(order);
    std::vector<CSemigroup> rejected;
    auto roots = ei_set(c, k, o, &rejected);
    std::cout << "count: " << roots.size() << "\n";
    for (const auto& r : roots) std::cout << "gaps: " << vec_list_str(r.gaps()) << "\n";
    for (const auto& r : rejected)
        std::cout << "rejected (k/2 outside C(S)): " << vec_list_str(r.gaps()) << "\n";
    return kExitOk;
}

int run_forest(const std::string& cone_spec, const std::string& k_spec, const std::string& order,
               const std::string& format, int jobs) {
    ConePtr c = parse_cone(cone_spec);
    Vec k = parse_vec(k_spec);
    Forest f = build_forest(c, k, TermOrder::parse(order), jobs);
    if (f.node_count() == 0) {
        std::cout << "P(k) is empty\n";
        return kExitOk;
    }
    std::cout << emit(f, parse_format(format));
    return kExitOk;
}

int run_oracle(const std::string& cone_spec, const std::string& k_spec, int jobs) {
    ConePtr c = parse_cone(cone_spec);
    Vec k = parse_vec(k_spec);
    auto ps = oracle::primary_set(c, k, interval_cap(), jobs);
    std::cout << "count: " << ps.size() << "\n";
    for (const auto& s : ps) std::cout << "gaps: " << vec_list_str(s.gaps()) << "\n";
    return kExitOk;
}

int run_verify(const std::string& cone_spec, const std::string& k_spec, const std::string& order,
               int jobs) {
    ConePtr c = parse_cone(cone_spec);
    Vec k = parse_vec(k_spec);
    auto rep = oracle::compare(c, k, TermOrder::parse(order), interval_cap(), jobs);
    std::cout << rep.str();
    return rep.ok() ? kExitOk : kExitMismatch;
}

int run_construct(const std::string& cone_spec, const std::string& k_spec,
                  const std::string& order) {
    ConePtr c = parse_cone(cone_spec);
    Vec k = parse_vec(k_spec);
    CSemigroup s = construct_primary(c, k, TermOrder::parse(order));
    std::cout << "genus: " << s.genus() << "\n";
    std::cout << "gaps: " << vec_list_str(s.gaps()) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"C-semigroup invariants and primary positioned forests"};
    app.require_subcommand(1);

    std::string input, cone_spec, k_spec, kind = "symmetric", order = "grlex", format = "text";
    std::vector<std::string> k_flags;
    bool gns_conventions = false;
    int jobs = 1;

    auto* analyze = app.add_subcommand("analyze", "invariants of a semigroup document");
    analyze->add_option("input", input, "JSON input file, or - for stdin")->required();
    analyze->add_option("--k", k_flags, "extra k values, e.g. 4,3");
    analyze->add_option("--order", order, "term order")->capture_default_str();
    analyze->add_flag("--gns-conventions", gns_conventions,
                      "print Frobenius of S = N^d as (-1,...,-1)");

    auto* irr = app.add_subcommand("irreducible", "irreducible semigroups with Frobenius k");
    irr->add_option("--cone", cone_spec, "generators, e.g. 1,0;1,1")->required();
    irr->add_option("--k", k_spec, "Frobenius element")->required();
    irr->add_option("--kind", kind, "symmetric | pseudo-symmetric")->capture_default_str();

    auto* ei = app.add_subcommand("ei", "roots EI(k) of the forest");
    ei->add_option("--cone", cone_spec)->required();
    ei->add_option("--k", k_spec)->required();
    ei->add_option("--order", order)->capture_default_str();

    auto* forest = app.add_subcommand("forest", "the forest G(P(k))");
    forest->add_option("--cone", cone_spec)->required();
    forest->add_option("--k", k_spec)->required();
    forest->add_option("--order", order)->capture_default_str();
    forest->add_option("--format", format, "text | json | dot")->capture_default_str();
    forest->add_option("--jobs", jobs)->capture_default_str();

    auto* orc = app.add_subcommand("oracle", "brute-force P(k)");
    orc->add_option("--cone", cone_spec)->required();
    orc->add_option("--k", k_spec)->required();
    orc->add_option("--jobs", jobs)->capture_default_str();

    auto* verify = app.add_subcommand("verify", "diff forest against the oracle");
    verify->add_option("--cone", cone_spec)->required();
    verify->add_option("--k", k_spec)->required();
    verify->add_option("--order", order)->capture_default_str();
    verify->add_option("--jobs", jobs)->capture_default_str();

    auto* construct = app.add_subcommand("construct", "one primary positioned semigroup for k");
    construct->add_option("--cone", cone_spec)->required();
    construct->add_option("--k", k_spec)->required();
    construct->add_option("--order", order)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(input, k_flags, analyze->count("--order") ? order : "", gns_conventions);
        if (app.got_subcommand(irr)) return run_irreducible(cone_spec, k_spec, kind);
        if (app.got_subcommand(ei)) return run_ei(cone_spec, k_spec, order);
        if (app.got_subcommand(forest)) return run_forest(cone_spec, k_spec, order, format, jobs);
        if (app.got_subcommand(orc)) return run_oracle(cone_spec, k_spec, jobs);
        if (app.got_subcommand(verify)) return run_verify(cone_spec, k_spec, order, jobs);
        if (app.got_subcommand(construct)) return run_construct(cone_spec, k_spec, order);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::CapExceeded ? kExitCap : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
