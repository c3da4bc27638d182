#include "conesemi/vec.hpp"

#include <algorithm>
#include <sstream>

namespace conesemi {

bool Vec::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](Coord x) { return x == 0; });
}

bool Vec::is_nonnegative() const {
    return std::all_of(c.begin(), c.end(), [](Coord x) { return x >= 0; });
}

bool Vec::all_even() const {
    return std::all_of(c.begin(), c.end(), [](Coord x) { return x % 2 == 0; });
}

Coord Vec::degree() const {
    Coord s = 0;
    for (Coord x : c) s += x;
    return s;
}

Vec Vec::operator+(const Vec& o) const {
    Vec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

Vec Vec::operator-(const Vec& o) const {
    Vec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

Vec Vec::operator*(Coord s) const {
    Vec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.c[i] = c[i] * s;
    return r;
}

Vec Vec::half() const {
    Vec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.c[i] = c[i] / 2;
    return r;
}

bool Vec::leq_componentwise(const Vec& o) const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (c[i] > o.c[i]) return false;
    return true;
}

std::string Vec::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i > 0) os << ',';
        os << c[i];
    }
    os << ')';
    return os.str();
}

bool graded_lex_less(const Vec& a, const Vec& b) {
    Coord da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.c < b.c;
}

bool Vec::operator<(const Vec& o) const { return graded_lex_less(*this, o); }

Vec zero_vec(std::size_t d) { return Vec(d); }

Vec unit_vec(std::size_t d, std::size_t i) {
    Vec r(d);
    r.c[i] = 1;
    return r;
}

std::string vec_list_str(const std::vector<Vec>& xs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) os << ", ";
        os << xs[i].str();
    }
    os << '}';
    return os.str();
}

}  // namespace conesemi
