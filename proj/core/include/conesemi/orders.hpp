#ifndef CONESEMI_ORDERS_HPP
#define CONESEMI_ORDERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "conesemi/cone.hpp"
#include "conesemi/errors.hpp"
#include "conesemi/vec.hpp"

namespace conesemi {

enum class Ordering { Less, Equal, Greater };

enum class OrderKind { Lex, GrLex, GrevLex, Weighted };

/// Term order on N^d: a total order with 0 minimal and compatible with
/// translation. Weighted orders need a strictly positive weight vector and
/// fall back to a plain kind on ties.
class TermOrder {
public:
    TermOrder() : kind_(OrderKind::GrLex) {}
    explicit TermOrder(OrderKind kind) : kind_(kind) {
        if (kind == OrderKind::Weighted)
            raise(Errc::InvalidOrder, "weighted order needs a weight vector");
    }
    TermOrder(std::vector<Coord> weights, OrderKind tiebreak);

    // optional variable permutation; order compares coordinates in this sequence
    TermOrder with_permutation(std::vector<std::size_t> perm) const;

    OrderKind kind() const { return kind_; }

    Ordering compare(const Vec& x, const Vec& y) const;
    bool less(const Vec& x, const Vec& y) const { return compare(x, y) == Ordering::Less; }
    bool greater(const Vec& x, const Vec& y) const { return compare(x, y) == Ordering::Greater; }
    bool leq(const Vec& x, const Vec& y) const { return compare(x, y) != Ordering::Greater; }

    Vec max_of(const std::vector<Vec>& xs) const;
    Vec min_of(const std::vector<Vec>& xs) const;

    void sort_ascending(std::vector<Vec>& xs) const;

    std::string name() const;

    // "lex", "grlex", "grevlex", "weighted:w1,w2,...:lex"
    static TermOrder parse(const std::string& spec);

    static TermOrder lex() { return TermOrder(OrderKind::Lex); }
    static TermOrder grlex() { return TermOrder(OrderKind::GrLex); }
    static TermOrder grevlex() { return TermOrder(OrderKind::GrevLex); }

private:
    std::size_t coord(std::size_t i) const { return perm_.empty() ? i : perm_[i]; }
    Ordering base_compare(OrderKind kind, const Vec& x, const Vec& y) const;

    OrderKind kind_;
    std::vector<Coord> weights_;
    OrderKind tiebreak_ = OrderKind::Lex;
    std::vector<std::size_t> perm_;
};

// I_C(k) listed ascending under the supplied order
std::vector<Vec> interval_sorted(const Cone& c, const Vec& k, const TermOrder& o);

}  // namespace conesemi

#endif
