#include "catdef/functor.hpp"

namespace catdef {

Arrow LinFunctor::apply(const Arrow& f) const {
    std::size_t fx = obj_map[f.src], fy = obj_map[f.tgt];
    Arrow r = zero_arrow(*tgt, fx, fy);
    const Matrix& m = hom_map[f.src][f.tgt];
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
        if (src->field.is_zero(f.coeffs[k])) continue;
        for (std::size_t t = 0; t < r.coeffs.size(); ++t)
            r.coeffs[t] = tgt->field.add(r.coeffs[t], tgt->field.mul(f.coeffs[k], m.at(k, t)));
    }
    return r;
}

bool same_category(const LinCategory& a, const LinCategory& b) {
    if (&a == &b) return true;
    if (a.field != b.field || a.objects != b.objects || a.hom != b.hom) return false;
    if (a.identity != b.identity) return false;
    return a.comp == b.comp;
}

bool same_functor(const LinFunctor& a, const LinFunctor& b) {
    if (&a == &b) return true;
    if (!same_category(*a.src, *b.src) || !same_category(*a.tgt, *b.tgt)) return false;
    return a.obj_map == b.obj_map && a.hom_map == b.hom_map;
}

FunctorPtr identity_functor(const CategoryPtr& c) {
    auto f = std::make_shared<LinFunctor>();
    f->src = c;
    f->tgt = c;
    f->name = "id(" + c->name + ")";
    f->obj_map.resize(c->object_count());
    f->hom_map.assign(c->object_count(), std::vector<Matrix>(c->object_count()));
    for (std::size_t x = 0; x < c->object_count(); ++x) {
        f->obj_map[x] = x;
        for (std::size_t y = 0; y < c->object_count(); ++y)
            f->hom_map[x][y] = Matrix::identity(c->field, c->dim(x, y));
    }
    return f;
}

FunctorPtr compose_functors(const FunctorPtr& f, const FunctorPtr& g) {
    if (!same_category(*f->tgt, *g->src))
        throw error("functor composite boundary mismatch");
    auto r = std::make_shared<LinFunctor>();
    r->src = f->src;
    r->tgt = g->tgt;
    r->name = f->name + ";" + g->name;
    std::size_t n = f->src->object_count();
    r->obj_map.resize(n);
    r->hom_map.assign(n, std::vector<Matrix>(n));
    for (std::size_t x = 0; x < n; ++x)
        r->obj_map[x] = g->obj_map[f->obj_map[x]];
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            r->hom_map[x][y] = f->hom_map[x][y].mul(
                f->tgt->field, g->hom_map[f->obj_map[x]][f->obj_map[y]]);
    return r;
}

NatPtr identity_nat(const FunctorPtr& f) {
    auto s = std::make_shared<NatTransf>();
    s->src = f;
    s->tgt = f;
    s->name = "1(" + f->name + ")";
    for (std::size_t x = 0; x < f->src->object_count(); ++x)
        s->component.push_back(identity_arrow(*f->tgt, f->obj_map[x]));
    return s;
}

NatPtr vertical_compose_nats(const NatPtr& s, const NatPtr& t) {
    if (!same_functor(*s->tgt, *t->src))
        throw error("vertical composite boundary mismatch");
    auto r = std::make_shared<NatTransf>();
    r->src = s->src;
    r->tgt = t->tgt;
    r->name = s->name + "." + t->name;
    const LinCategory& b = *s->src->tgt;
    for (std::size_t x = 0; x < s->component.size(); ++x)
        r->component.push_back(compose_arrows(b, s->component[x], t->component[x]));
    return r;
}

NatPtr whisker_left(const FunctorPtr& f, const NatPtr& s) {
    if (!same_category(*f->tgt, *s->src->src))
        throw error("left whisker boundary mismatch");
    auto r = std::make_shared<NatTransf>();
    r->src = compose_functors(f, s->src);
    r->tgt = compose_functors(f, s->tgt);
    r->name = s->name + "_" + f->name;
    for (std::size_t x = 0; x < f->src->object_count(); ++x)
        r->component.push_back(s->component[f->obj_map[x]]);
    return r;
}

NatPtr whisker_right(const NatPtr& s, const FunctorPtr& h) {
    if (!same_category(*s->src->tgt, *h->src))
        throw error("right whisker boundary mismatch");
    auto r = std::make_shared<NatTransf>();
    r->src = compose_functors(s->src, h);
    r->tgt = compose_functors(s->tgt, h);
    r->name = h->name + "(" + s->name + ")";
    for (std::size_t x = 0; x < s->component.size(); ++x)
        r->component.push_back(h->apply(s->component[x]));
    return r;
}

Report validate_functor(const LinFunctor& f) {
    Report rep;
    std::size_t n = f.src->object_count();
    if (f.obj_map.size() != n || f.hom_map.size() != n)
        throw error("functor table size mismatch");
    for (std::size_t x = 0; x < n; ++x) {
        if (f.obj_map[x] >= f.tgt->object_count())
            throw error("functor object map out of range");
        if (f.hom_map[x].size() != n)
            throw error("functor table size mismatch");
        for (std::size_t y = 0; y < n; ++y) {
            const Matrix& m = f.hom_map[x][y];
            if (m.rows() != f.src->dim(x, y) ||
                m.cols() != f.tgt->dim(f.obj_map[x], f.obj_map[y]))
                throw error("functor hom matrix shape mismatch at " +
                            f.src->objects[x] + "," + f.src->objects[y]);
        }
    }
    // F(1_x) = 1_{F(x)}
    for (std::size_t x = 0; x < n; ++x) {
        Arrow img = f.apply(identity_arrow(*f.src, x));
        if (img.coeffs != identity_arrow(*f.tgt, f.obj_map[x]).coeffs)
            rep.add("unit", "F(1_" + f.src->objects[x] + ") != 1_F(" + f.src->objects[x] + ")");
    }
    // F(ab) = F(a)F(b) on basis pairs
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t a = 0; a < f.src->dim(x, y); ++a)
                    for (std::size_t b = 0; b < f.src->dim(y, z); ++b) {
                        Arrow fa = basis_arrow(*f.src, x, y, a);
                        Arrow fb = basis_arrow(*f.src, y, z, b);
                        Arrow lhs = f.apply(compose_arrows(*f.src, fa, fb));
                        Arrow rhs = compose_arrows(*f.tgt, f.apply(fa), f.apply(fb));
                        if (lhs.coeffs != rhs.coeffs)
                            rep.add("mult", "F(" + f.src->hom[x][y][a] + " " +
                                                f.src->hom[y][z][b] + ") != F(a)F(b)");
                    }
    return rep;
}

Report validate_naturality(const NatTransf& s) {
    Report rep;
    const LinFunctor& f = *s.src;
    const LinFunctor& g = *s.tgt;
    if (!same_category(*f.src, *g.src) || !same_category(*f.tgt, *g.tgt))
        throw error("natural transformation between non-parallel functors");
    std::size_t n = f.src->object_count();
    if (s.component.size() != n)
        throw error("component missing for some object");
    const LinCategory& b = *f.tgt;
    for (std::size_t x = 0; x < n; ++x) {
        const Arrow& cx = s.component[x];
        if (cx.src != f.obj_map[x] || cx.tgt != g.obj_map[x] ||
            cx.coeffs.size() != b.dim(cx.src, cx.tgt))
            throw error("component boundary mismatch at " + f.src->objects[x]);
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < f.src->dim(x, y); ++k) {
                Arrow a = basis_arrow(*f.src, x, y, k);
                Arrow lhs = compose_arrows(b, f.apply(a), s.component[y]);
                Arrow rhs = compose_arrows(b, s.component[x], g.apply(a));
                if (lhs.coeffs != rhs.coeffs)
                    rep.add("naturality", "F(" + f.src->hom[x][y][k] + ") s != s G(" +
                                              f.src->hom[x][y][k] + ")");
            }
    return rep;
}

} // namespace catdef
