#include "catdef/category.hpp"

namespace catdef {

int LinCategory::object_index(const std::string& id) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == id) return static_cast<int>(i);
    return -1;
}

int LinCategory::identity_basis_slot(std::size_t x) const {
    int slot = -1;
    for (std::size_t k = 0; k < identity[x].size(); ++k) {
        if (field.is_zero(identity[x][k])) continue;
        if (slot != -1 || identity[x][k] != field.one()) return -1;
        slot = static_cast<int>(k);
    }
    return slot;
}

Arrow zero_arrow(const LinCategory& c, std::size_t src, std::size_t tgt) {
    return Arrow{src, tgt, Vec(c.dim(src, tgt), c.field.zero())};
}

Arrow identity_arrow(const LinCategory& c, std::size_t x) {
    return Arrow{x, x, c.identity[x]};
}

Arrow basis_arrow(const LinCategory& c, std::size_t src, std::size_t tgt, std::size_t k) {
    if (k >= c.dim(src, tgt))
        throw error("basis arrow index out of range");
    Arrow a = zero_arrow(c, src, tgt);
    a.coeffs[k] = c.field.one();
    return a;
}

Arrow add_arrows(const LinCategory& c, const Arrow& f, const Arrow& g) {
    if (f.src != g.src || f.tgt != g.tgt)
        throw error("arrow sum boundary mismatch");
    Arrow r = f;
    for (std::size_t k = 0; k < r.coeffs.size(); ++k)
        r.coeffs[k] = c.field.add(r.coeffs[k], g.coeffs[k]);
    return r;
}

Arrow scale_arrow(const LinCategory& c, const Scalar& s, const Arrow& f) {
    Arrow r = f;
    for (auto& x : r.coeffs) x = c.field.mul(s, x);
    return r;
}

bool arrow_is_zero(const LinCategory& c, const Arrow& f) {
    for (const auto& x : f.coeffs)
        if (!c.field.is_zero(x)) return false;
    return true;
}

Arrow compose_arrows(const LinCategory& c, const Arrow& f, const Arrow& g) {
    if (f.tgt != g.src)
        throw error("non-composable arrow pair");
    const Field& k = c.field;
    Arrow r = zero_arrow(c, f.src, g.tgt);
    const Matrix& table = c.comp[f.src][f.tgt][g.tgt];
    std::size_t djk = c.dim(f.tgt, g.tgt);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (k.is_zero(f.coeffs[i])) continue;
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
            if (k.is_zero(g.coeffs[j])) continue;
            Scalar cij = k.mul(f.coeffs[i], g.coeffs[j]);
            for (std::size_t t = 0; t < r.coeffs.size(); ++t)
                r.coeffs[t] = k.add(r.coeffs[t], k.mul(cij, table.at(i * djk + j, t)));
        }
    }
    return r;
}

Report validate_category(const LinCategory& c) {
    Report rep;
    std::size_t n = c.object_count();

    // Structural shape checks are hard errors, not findings.
    if (c.hom.size() != n || c.comp.size() != n || c.identity.size() != n)
        throw error("category tables do not match object count");
    for (std::size_t x = 0; x < n; ++x) {
        if (c.hom[x].size() != n || c.comp[x].size() != n)
            throw error("category tables do not match object count");
        if (c.identity[x].size() != c.dim(x, x))
            throw error("identity vector length mismatch at " + c.objects[x]);
        for (std::size_t y = 0; y < n; ++y) {
            if (c.comp[x][y].size() != n)
                throw error("category tables do not match object count");
            for (std::size_t z = 0; z < n; ++z) {
                const Matrix& m = c.comp[x][y][z];
                if (m.rows() != c.dim(x, y) * c.dim(y, z) || m.cols() != c.dim(x, z))
                    throw error("structure constant table shape mismatch");
            }
        }
    }

    // Unit axioms on every basis arrow.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < c.dim(x, y); ++k) {
                Arrow f = basis_arrow(c, x, y, k);
                Arrow lf = compose_arrows(c, identity_arrow(c, x), f);
                if (lf.coeffs != f.coeffs)
                    rep.add("unit", "1_" + c.objects[x] + " . " + c.hom[x][y][k] +
                                        " != " + c.hom[x][y][k]);
                Arrow fr = compose_arrows(c, f, identity_arrow(c, y));
                if (fr.coeffs != f.coeffs)
                    rep.add("unit", c.hom[x][y][k] + " . 1_" + c.objects[y] +
                                        " != " + c.hom[x][y][k]);
            }

    // Associativity on every basis triple.
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    for (std::size_t a = 0; a < c.dim(w, x); ++a)
                        for (std::size_t b = 0; b < c.dim(x, y); ++b)
                            for (std::size_t d = 0; d < c.dim(y, z); ++d) {
                                Arrow fa = basis_arrow(c, w, x, a);
                                Arrow fb = basis_arrow(c, x, y, b);
                                Arrow fd = basis_arrow(c, y, z, d);
                                Arrow left = compose_arrows(c, compose_arrows(c, fa, fb), fd);
                                Arrow right = compose_arrows(c, fa, compose_arrows(c, fb, fd));
                                if (left.coeffs != right.coeffs)
                                    rep.add("assoc", "(" + c.hom[w][x][a] + " " + c.hom[x][y][b] +
                                                         ") " + c.hom[y][z][d] + " != " +
                                                         c.hom[w][x][a] + " (" + c.hom[x][y][b] +
                                                         " " + c.hom[y][z][d] + ")");
                            }
    return rep;
}

} // namespace catdef
