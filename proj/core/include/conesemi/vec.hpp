#ifndef CONESEMI_VEC_HPP
#define CONESEMI_VEC_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace conesemi {

using Coord = long long;

// Lattice point in Z^d. Semigroup elements live in N^d; negative
// coordinates only appear transiently in differences and are rejected
// by cone membership.
struct Vec {
    std::vector<Coord> c;

    Vec() = default;
    explicit Vec(std::size_t d) : c(d, 0) {}
    Vec(std::initializer_list<Coord> init) : c(init) {}
    explicit Vec(std::vector<Coord> coords) : c(std::move(coords)) {}

    std::size_t dim() const { return c.size(); }
    Coord operator[](std::size_t i) const { return c[i]; }
    Coord& operator[](std::size_t i) { return c[i]; }

    bool is_zero() const;
    bool is_nonnegative() const;
    bool all_even() const;
    Coord degree() const;  // coordinate sum

    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec operator*(Coord s) const;
    Vec half() const;  // valid only if all_even()

    bool operator==(const Vec& o) const { return c == o.c; }
    bool operator!=(const Vec& o) const { return c != o.c; }
    bool operator<(const Vec& o) const;  // graded-lex, the canonical order

    // componentwise x <= y
    bool leq_componentwise(const Vec& o) const;

    std::string str() const;  // "(a,b)"
};

// Canonical order used for sorting and canonical encodings: total degree,
// then lexicographic.
bool graded_lex_less(const Vec& a, const Vec& b);

struct GradedLexLess {
    bool operator()(const Vec& a, const Vec& b) const { return graded_lex_less(a, b); }
};

Vec zero_vec(std::size_t d);
Vec unit_vec(std::size_t d, std::size_t i);

std::string vec_list_str(const std::vector<Vec>& xs);

}  // namespace conesemi

#endif
