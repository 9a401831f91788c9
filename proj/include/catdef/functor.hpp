/**
 * k-linear functors and natural transformations between finite k-linear
 * categories, with validators and the 2-categorical operations (composition,
 * vertical composition, whiskering).
 */

#ifndef CATDEF_FUNCTOR_HPP
#define CATDEF_FUNCTOR_HPP

#include "catdef/category.hpp"

namespace catdef {

class LinFunctor {
public:
    CategoryPtr src, tgt;
    std::string name;
    std::vector<std::size_t> obj_map;
    // hom_map[x][y]: dim(x,y) x dim(F x, F y) matrix; row k holds the image
    // coefficients of the k-th basis arrow of hom(x, y).
    std::vector<std::vector<Matrix>> hom_map;

    Arrow apply(const Arrow& f) const;
    std::size_t apply_obj(std::size_t x) const { return obj_map[x]; }
};

using FunctorPtr = std::shared_ptr<const LinFunctor>;

struct NatTransf {
    FunctorPtr src, tgt; // parallel functors A -> B
    std::string name;
    std::vector<Arrow> component; // per object x of A: arrow F(x) -> G(x) in B
};

using NatPtr = std::shared_ptr<const NatTransf>;

bool same_category(const LinCategory& a, const LinCategory& b);
bool same_functor(const LinFunctor& a, const LinFunctor& b);

FunctorPtr identity_functor(const CategoryPtr& c);
/** Diagrammatic composite F;G (apply F, then G). */
FunctorPtr compose_functors(const FunctorPtr& f, const FunctorPtr& g);

NatPtr identity_nat(const FunctorPtr& f);
/** Vertical composite: (s . t)_x = s_x t_x, for s: F=>G, t: G=>H. */
NatPtr vertical_compose_nats(const NatPtr& s, const NatPtr& t);
/** Left whisker s_F: components (s_F)_x = s_{F(x)}, for F: A->B, s over B. */
NatPtr whisker_left(const FunctorPtr& f, const NatPtr& s);
/** Right whisker H(s): components H(s_x), for s over A->B and H: B->C. */
NatPtr whisker_right(const NatPtr& s, const FunctorPtr& h);

Report validate_functor(const LinFunctor& f);
/** Empty iff F(f) s_y = s_x G(f) on all basis arrows (diagrammatic order). */
Report validate_naturality(const NatTransf& s);

} // namespace catdef

#endif
