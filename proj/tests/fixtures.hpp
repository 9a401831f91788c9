/**
 * Small categories, functors and naturals shared by the test suites:
 * K1 (the field as a one-object category), DUAL (dual numbers k[x]/(x^2)),
 * A2 (two objects, one arrow), and deterministic random generators.
 */

#ifndef CATDEF_TESTS_FIXTURES_HPP
#define CATDEF_TESTS_FIXTURES_HPP

#include <random>

#include "catdef/functor.hpp"

namespace catdef::fixtures {

/** Builds a category shell with all-zero composition tables. */
inline std::shared_ptr<LinCategory> shell(const Field& f, std::string name,
                                          std::vector<std::string> objects,
                                          std::vector<std::vector<std::vector<std::string>>> hom) {
    auto c = std::make_shared<LinCategory>();
    c->field = f;
    c->name = std::move(name);
    c->objects = std::move(objects);
    c->hom = std::move(hom);
    std::size_t n = c->objects.size();
    c->comp.assign(n, std::vector<std::vector<Matrix>>(n, std::vector<Matrix>(n)));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                c->comp[x][y][z] = Matrix(c->dim(x, y) * c->dim(y, z), c->dim(x, z));
    c->identity.resize(n);
    for (std::size_t x = 0; x < n; ++x)
        c->identity[x] = Vec(c->dim(x, x), f.zero());
    return c;
}

inline void set_comp(LinCategory& c, std::size_t x, std::size_t y, std::size_t z,
                     std::size_t i, std::size_t j, std::size_t t, const Scalar& v) {
    c.comp[x][y][z].at(i * c.dim(y, z) + j, t) = v;
}

/** The field as a one-object category: basis {e}, e.e = e, 1 = e. */
inline CategoryPtr k1(const Field& f) {
    auto c = shell(f, "K1", {"A"}, {{{"e"}}});
    set_comp(*c, 0, 0, 0, 0, 0, 0, f.one());
    c->identity[0][0] = f.one();
    return c;
}

/** Dual numbers k[x]/(x^2): basis {e, x}, x.x = 0, 1 = e. */
inline CategoryPtr dual(const Field& f) {
    auto c = shell(f, "DUAL", {"A"}, {{{"e", "x"}}});
    set_comp(*c, 0, 0, 0, 0, 0, 0, f.one()); // e e = e
    set_comp(*c, 0, 0, 0, 0, 1, 1, f.one()); // e x = x
    set_comp(*c, 0, 0, 0, 1, 0, 1, f.one()); // x e = x
    // x x = 0
    c->identity[0][0] = f.one();
    return c;
}

/** Two objects a, b; hom(a,b) = span{f}; only identities elsewhere. */
inline CategoryPtr a2(const Field& f) {
    auto c = shell(f, "A2", {"a", "b"}, {{{"ea"}, {"f"}}, {{}, {"eb"}}});
    set_comp(*c, 0, 0, 0, 0, 0, 0, f.one()); // ea ea = ea
    set_comp(*c, 0, 0, 1, 0, 0, 0, f.one()); // ea f = f
    set_comp(*c, 0, 1, 1, 0, 0, 0, f.one()); // f eb = f
    set_comp(*c, 1, 1, 1, 0, 0, 0, f.one()); // eb eb = eb
    c->identity[0][0] = f.one();
    c->identity[1][0] = f.one();
    return c;
}

/** Two-object semisimple category: hom(a,a) = hom(b,b) = k, no other arrows. */
inline CategoryPtr two_object_semisimple(const Field& f) {
    auto c = shell(f, "KxK", {"a", "b"}, {{{"ea"}, {}}, {{}, {"eb"}}});
    set_comp(*c, 0, 0, 0, 0, 0, 0, f.one());
    set_comp(*c, 1, 1, 1, 0, 0, 0, f.one());
    c->identity[0][0] = f.one();
    c->identity[1][0] = f.one();
    return c;
}

/** Endofunctor of DUAL scaling x by s (an automorphism when s != 0). */
inline FunctorPtr dual_scaling(const CategoryPtr& d, const Scalar& s) {
    auto fn = std::make_shared<LinFunctor>();
    fn->src = d;
    fn->tgt = d;
    fn->name = "scale";
    fn->obj_map = {0};
    Matrix m(2, 2);
    m.at(0, 0) = d->field.one();
    m.at(1, 1) = s;
    fn->hom_map = {{m}};
    return fn;
}

/** Endofunctor of A2 scaling the arrow f by s. */
inline FunctorPtr a2_scaling(const CategoryPtr& a, const Scalar& s) {
    auto fn = std::make_shared<LinFunctor>();
    fn->src = a;
    fn->tgt = a;
    fn->name = "scale";
    fn->obj_map = {0, 1};
    fn->hom_map.assign(2, std::vector<Matrix>(2));
    fn->hom_map[0][0] = Matrix::identity(a->field, 1);
    fn->hom_map[1][1] = Matrix::identity(a->field, 1);
    fn->hom_map[1][0] = Matrix(0, 0);
    Matrix m(1, 1);
    m.at(0, 0) = s;
    fn->hom_map[0][1] = m;
    return fn;
}

/**
 * Random truncated path category: acyclic quiver on <= 3 vertices plus
 * optional nilpotent loops, with paths of length >= 2 set to zero.  Every
 * such table is associative and unital by construction, identities are basis
 * elements, and hom dimensions stay <= 2.
 */
inline CategoryPtr random_category(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nobj_d(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    int n = nobj_d(rng);
    std::vector<std::string> objs;
    for (int i = 0; i < n; ++i) objs.push_back(std::string(1, char('a' + i)));

    // Decide arrows: per ordered pair (x < y) maybe one generator; per object
    // maybe one nilpotent loop.
    std::vector<std::vector<int>> gens(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y)
                gens[x][y] = coin(rng); // loop generator, squares to zero
            else if (x < y)
                gens[x][y] = coin(rng);
        }

    std::vector<std::vector<std::vector<std::string>>> hom(
        n, std::vector<std::vector<std::string>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) {
                hom[x][y].push_back("e" + objs[x]);
                if (gens[x][y]) hom[x][y].push_back("t" + objs[x]);
            } else if (gens[x][y]) {
                hom[x][y].push_back("g" + objs[x] + objs[y]);
            }
        }

    auto c = shell(f, "RND", objs, hom);
    // Composition: identity slots act as units; all generator products vanish
    // (paths of length two are truncated away).
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (std::size_t i = 0; i < c->dim(x, y); ++i)
                    for (std::size_t j = 0; j < c->dim(y, z); ++j) {
                        bool i_is_unit = (x == y && i == 0);
                        bool j_is_unit = (y == z && j == 0);
                        if (i_is_unit && j_is_unit)
                            set_comp(*c, x, y, z, i, j, 0, f.one());
                        else if (i_is_unit)
                            set_comp(*c, x, y, z, i, j, j, f.one());
                        else if (j_is_unit)
                            set_comp(*c, x, y, z, i, j, i, f.one());
                    }
    for (int x = 0; x < n; ++x)
        c->identity[x][0] = f.one();
    return c;
}

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-4, 4);
    return f.from_int(d(rng));
}

inline Scalar random_nonzero_scalar(const Field& f, std::mt19937_64& rng) {
    for (;;) {
        Scalar s = random_scalar(f, rng);
        if (!f.is_zero(s)) return s;
    }
}

} // namespace catdef::fixtures

#endif
