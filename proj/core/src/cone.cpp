#include "conesemi/cone.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace conesemi {

namespace {

Coord dot(const Vec& a, const Vec& b) {
    Coord s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

Vec cross3(const Vec& a, const Vec& b) {
    return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Coord cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

Vec primitive(Vec v) {
    Coord g = 0;
    for (Coord x : v.c) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (Coord& x : v.c) x /= g;
    return v;
}

// keep n if n.g >= 0 for all generators; keep -n if all <= 0
void push_if_valid(std::vector<Vec>& out, const Vec& n, const std::vector<Vec>& gens) {
    if (n.is_zero()) return;
    bool all_ge = true, all_le = true;
    for (const Vec& g : gens) {
        Coord s = dot(n, g);
        if (s < 0) all_ge = false;
        if (s > 0) all_le = false;
    }
    if (all_ge) out.push_back(primitive(n));
    if (all_le && !all_ge) out.push_back(primitive(Vec(n) * -1));
}

void dedupe(std::vector<Vec>& xs) {
    std::sort(xs.begin(), xs.end(), GradedLexLess{});
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

struct Cone::HbCache {
    std::once_flag once;
    std::vector<Vec> hb;
};

std::vector<Vec> box_points(const Vec& hi) {
    std::vector<Vec> out;
    Vec p(hi.dim());
    while (true) {
        out.push_back(p);
        std::size_t i = hi.dim();
        while (i > 0) {
            --i;
            if (p[i] < hi[i]) {
                ++p[i];
                break;
            }
            p[i] = 0;
            if (i == 0) return out;
        }
        if (hi.dim() == 0) return out;
    }
}

Cone::Cone(std::size_t dimension, std::vector<Vec> generators)
    : dim_(dimension), gens_(std::move(generators)), hb_(std::make_shared<HbCache>()) {
    if (dim_ < 1 || dim_ > 3)
        raise(Errc::UnsupportedDimension, "dimension must be 1, 2, or 3, got " + std::to_string(dim_));
    if (gens_.empty()) raise(Errc::EmptyGenerators, "cone needs at least one generator");
    for (const Vec& g : gens_) {
        if (g.dim() != dim_)
            raise(Errc::DimensionMismatch, "generator " + g.str() + " in dimension-" + std::to_string(dim_) + " cone");
        if (g.is_zero()) raise(Errc::ZeroGenerator, "zero vector cannot generate a ray");
        if (!g.is_nonnegative()) raise(Errc::ZeroGenerator, "generator " + g.str() + " outside N^d");
    }
    std::sort(gens_.begin(), gens_.end(), GradedLexLess{});
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    derive_normals();
}

void Cone::derive_normals() {
    std::vector<Vec> out;
    if (dim_ == 1) {
        out.push_back(Vec{1});
    } else if (dim_ == 2) {
        bool rank1 = true;
        for (std::size_t i = 1; i < gens_.size(); ++i)
            if (cross2(gens_[0], gens_[i]) != 0) rank1 = false;
        if (rank1) {
            Vec p = primitive(gens_[0]);
            out.push_back(Vec{-p[1], p[0]});
            out.push_back(Vec{p[1], -p[0]});
            out.push_back(p);  // direction along the ray
        } else {
            for (const Vec& g : gens_) {
                push_if_valid(out, Vec{-g[1], g[0]}, gens_);
                push_if_valid(out, Vec{g[1], -g[0]}, gens_);
            }
        }
    } else {
        // rank via pairwise cross products
        Vec plane_normal(3);
        bool found_plane = false;
        for (std::size_t i = 0; i < gens_.size() && !found_plane; ++i)
            for (std::size_t j = i + 1; j < gens_.size() && !found_plane; ++j) {
                Vec n = cross3(gens_[i], gens_[j]);
                if (!n.is_zero()) {
                    plane_normal = primitive(n);
                    found_plane = true;
                }
            }
        if (!found_plane) {
            // all generators on one ray
            Vec p = primitive(gens_[0]);
            std::vector<Vec> kernel;
            for (std::size_t i = 0; i < 3; ++i) {
                Vec n = cross3(p, unit_vec(3, i));
                if (!n.is_zero()) kernel.push_back(primitive(n));
            }
            out.push_back(kernel[0]);
            out.push_back(Vec(kernel[0]) * -1);
            for (std::size_t i = 1; i < kernel.size(); ++i)
                if (!cross3(kernel[0], kernel[i]).is_zero()) {
                    out.push_back(kernel[i]);
                    out.push_back(Vec(kernel[i]) * -1);
                    break;
                }
            out.push_back(p);
        } else {
            bool rank3 = false;
            for (const Vec& g : gens_)
                if (dot(plane_normal, g) != 0) rank3 = true;
            if (rank3) {
                for (std::size_t i = 0; i < gens_.size(); ++i)
                    for (std::size_t j = i + 1; j < gens_.size(); ++j)
                        push_if_valid(out, cross3(gens_[i], gens_[j]), gens_);
            } else {
                out.push_back(plane_normal);
                out.push_back(Vec(plane_normal) * -1);
                for (const Vec& g : gens_) push_if_valid(out, cross3(plane_normal, g), gens_);
            }
        }
    }
    dedupe(out);
    normals_ = std::move(out);
}

void Cone::check_dim(const Vec& v) const {
    if (v.dim() != dim_)
        raise(Errc::DimensionMismatch, v.str() + " in dimension-" + std::to_string(dim_) + " cone");
}

bool Cone::contains(const Vec& v) const {
    check_dim(v);
    if (!v.is_nonnegative()) return false;
    for (const Vec& n : normals_)
        if (dot(n, v) < 0) return false;
    return true;
}

bool Cone::le(const Vec& x, const Vec& y) const {
    check_dim(x);
    check_dim(y);
    return contains(y - x);
}

std::vector<Vec> Cone::interval(const Vec& k) const {
    if (!contains(k)) raise(Errc::NotInCone, k.str());
    // k - x in C forces x <= k componentwise, so the box suffices
    std::vector<Vec> out;
    for (const Vec& x : box_points(k))
        if (contains(x) && contains(k - x)) out.push_back(x);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::size_t Cone::interval_size(const Vec& k) const {
    if (!contains(k)) raise(Errc::NotInCone, k.str());
    std::size_t n = 0;
    for (const Vec& x : box_points(k))
        if (contains(x) && contains(k - x)) ++n;
    return n;
}

const std::vector<Vec>& Cone::hilbert_basis() const {
    std::call_once(hb_->once, [this] {
        Vec bound(dim_);
        for (const Vec& g : gens_) bound = bound + g;
        // every irreducible lies under the generator sum (Caratheodory +
        // fundamental parallelepiped of a simplicial subcone)
        std::vector<Vec> irr;
        for (const Vec& p : box_points(bound)) {
            if (p.is_zero() || !contains(p)) continue;
            bool reducible = false;
            for (const Vec& a : box_points(p)) {
                if (a.is_zero() || a == p) continue;
                if (contains(a) && contains(p - a)) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) irr.push_back(p);
        }
        std::sort(irr.begin(), irr.end(), GradedLexLess{});
        hb_->hb = std::move(irr);
    });
    return hb_->hb;
}

std::vector<Vec> Cone::minimals_in(const std::vector<Vec>& xs) const {
    std::vector<Vec> ys(xs);
    dedupe(ys);
    std::vector<Vec> out;
    for (const Vec& x : ys) {
        bool minimal = true;
        for (const Vec& y : ys)
            if (y != x && le(y, x)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(x);
    }
    return out;
}

std::vector<Vec> Cone::maximals_in(const std::vector<Vec>& xs) const {
    std::vector<Vec> ys(xs);
    dedupe(ys);
    std::vector<Vec> out;
    for (const Vec& x : ys) {
        bool maximal = true;
        for (const Vec& y : ys)
            if (y != x && le(x, y)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(x);
    }
    return out;
}

bool Cone::is_orthant() const {
    for (std::size_t i = 0; i < dim_; ++i)
        if (!contains(unit_vec(dim_, i))) return false;
    return true;
}

bool Cone::operator==(const Cone& o) const { return dim_ == o.dim_ && gens_ == o.gens_; }

ConePtr make_cone(std::size_t dimension, std::vector<Vec> generators) {
    return std::make_shared<const Cone>(dimension, std::move(generators));
}

ConePtr make_orthant(std::size_t dimension) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < dimension; ++i) gens.push_back(unit_vec(dimension, i));
    return make_cone(dimension, std::move(gens));
}

}  // namespace conesemi
