#include "conesemi/orders.hpp"

#include <algorithm>
#include <sstream>

namespace conesemi {

TermOrder::TermOrder(std::vector<Coord> weights, OrderKind tiebreak)
    : kind_(OrderKind::Weighted), weights_(std::move(weights)), tiebreak_(tiebreak) {
    if (weights_.empty()) raise(Errc::InvalidOrder, "empty weight vector");
    for (Coord w : weights_)
        if (w <= 0) raise(Errc::InvalidOrder, "weights must be strictly positive");
    if (tiebreak_ == OrderKind::Weighted) raise(Errc::InvalidOrder, "weighted tie-break not allowed");
}

TermOrder TermOrder::with_permutation(std::vector<std::size_t> perm) const {
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t p : perm) {
        if (p >= perm.size() || seen[p]) raise(Errc::InvalidOrder, "invalid variable permutation");
        seen[p] = true;
    }
    TermOrder o(*this);
    o.perm_ = std::move(perm);
    return o;
}

Ordering TermOrder::base_compare(OrderKind kind, const Vec& x, const Vec& y) const {
    if (kind == OrderKind::GrLex || kind == OrderKind::GrevLex) {
        Coord dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy ? Ordering::Less : Ordering::Greater;
    }
    if (kind == OrderKind::GrevLex) {
        // on equal degree the vector with the larger trailing exponent is smaller
        for (std::size_t i = x.dim(); i > 0; --i) {
            Coord a = x[coord(i - 1)], b = y[coord(i - 1)];
            if (a != b) return a > b ? Ordering::Less : Ordering::Greater;
        }
        return Ordering::Equal;
    }
    for (std::size_t i = 0; i < x.dim(); ++i) {
        Coord a = x[coord(i)], b = y[coord(i)];
        if (a != b) return a < b ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

Ordering TermOrder::compare(const Vec& x, const Vec& y) const {
    if (x.dim() != y.dim())
        raise(Errc::DimensionMismatch, x.str() + " vs " + y.str());
    if (!perm_.empty() && perm_.size() != x.dim())
        raise(Errc::DimensionMismatch, "permutation size does not match vectors");
    if (kind_ == OrderKind::Weighted) {
        if (weights_.size() != x.dim())
            raise(Errc::DimensionMismatch, "weight vector size does not match vectors");
        Coord wx = 0, wy = 0;
        for (std::size_t i = 0; i < x.dim(); ++i) {
            wx += weights_[i] * x[i];
            wy += weights_[i] * y[i];
        }
        if (wx != wy) return wx < wy ? Ordering::Less : Ordering::Greater;
        return base_compare(tiebreak_, x, y);
    }
    return base_compare(kind_, x, y);
}

Vec TermOrder::max_of(const std::vector<Vec>& xs) const {
    if (xs.empty()) raise(Errc::EmptySet, "max of empty set");
    Vec best = xs.front();
    for (const Vec& x : xs)
        if (greater(x, best)) best = x;
    return best;
}

Vec TermOrder::min_of(const std::vector<Vec>& xs) const {
    if (xs.empty()) raise(Errc::EmptySet, "min of empty set");
    Vec best = xs.front();
    for (const Vec& x : xs)
        if (less(x, best)) best = x;
    return best;
}

void TermOrder::sort_ascending(std::vector<Vec>& xs) const {
    std::sort(xs.begin(), xs.end(), [this](const Vec& a, const Vec& b) { return less(a, b); });
}

std::string TermOrder::name() const {
    switch (kind_) {
        case OrderKind::Lex: return "lex";
        case OrderKind::GrLex: return "grlex";
        case OrderKind::GrevLex: return "grevlex";
        case OrderKind::Weighted: {
            std::ostringstream os;
            os << "weighted:";
            for (std::size_t i = 0; i < weights_.size(); ++i) {
                if (i > 0) os << ',';
                os << weights_[i];
            }
            os << ':' << TermOrder(tiebreak_).name();
            return os.str();
        }
    }
    return "?";
}

std::vector<Vec> interval_sorted(const Cone& c, const Vec& k, const TermOrder& o) {
    std::vector<Vec> out = c.interval(k);
    o.sort_ascending(out);
    return out;
}

TermOrder TermOrder::parse(const std::string& spec) {
    if (spec == "lex") return lex();
    if (spec == "grlex") return grlex();
    if (spec == "grevlex") return grevlex();
    if (spec.rfind("weighted:", 0) == 0) {
        std::string rest = spec.substr(9);
        auto colon = rest.find(':');
        std::string wpart = colon == std::string::npos ? rest : rest.substr(0, colon);
        std::string tiepart = colon == std::string::npos ? "lex" : rest.substr(colon + 1);
        std::vector<Coord> ws;
        std::istringstream is(wpart);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                ws.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                raise(Errc::InvalidOrder, "bad weight '" + tok + "' in " + spec);
            }
        }
        OrderKind tie;
        if (tiepart == "lex") tie = OrderKind::Lex;
        else if (tiepart == "grlex") tie = OrderKind::GrLex;
        else if (tiepart == "grevlex") tie = OrderKind::GrevLex;
        else raise(Errc::InvalidOrder, "unknown tie-break '" + tiepart + "'");
        return TermOrder(std::move(ws), tie);
    }
    raise(Errc::InvalidOrder, "unknown order '" + spec + "'");
}

}  // namespace conesemi
