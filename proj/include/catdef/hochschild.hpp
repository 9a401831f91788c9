/**
 * Hochschild cochains for a parallel pair of functors F,G: A -> B, with the
 * coboundary, the cup-like and brace-like compositions, the induced cochain
 * maps (pushforward, pullback, pre/post-composition by a natural
 * transformation, and the sigma-dagger map), and the retraction onto the
 * normalized subcomplex.
 *
 * A degree-n cochain assigns to every object tuple (x_0,...,x_n) and basis
 * arrow tuple in hom(x_0,x_1) x ... x hom(x_{n-1},x_n) a coefficient vector
 * in hom(F(x_0), G(x_n)).  Degree-0 cochains are indexed by single objects.
 * Compositions are written in diagrammatic order throughout.
 */

#ifndef CATDEF_HOCHSCHILD_HPP
#define CATDEF_HOCHSCHILD_HPP

#include <functional>
#include <map>

#include "catdef/functor.hpp"

namespace catdef {

struct PairContext {
    FunctorPtr F, G;

    const LinCategory& A() const { return *F->src; }
    const LinCategory& B() const { return *F->tgt; }
    const Field& field() const { return F->src->field; }
    bool operator==(const PairContext& o) const {
        return same_functor(*F, *o.F) && same_functor(*G, *o.G);
    }
};

PairContext pair_context(FunctorPtr F, FunctorPtr G);
PairContext endo_context(const FunctorPtr& F);      // C(F) = C(F, F)
PairContext category_context(const CategoryPtr& c); // C(cat) = C(Id, Id)

class Cochain {
public:
    Cochain() : degree_(0) {}
    Cochain(PairContext ctx, int degree);

    int degree() const { return degree_; }
    const PairContext& ctx() const { return ctx_; }

    /** Arrow-basis dimensions of the argument slots for an object tuple. */
    std::vector<std::size_t> arg_dims(const std::vector<std::size_t>& tuple) const;
    /** Dimension of hom(F(x_0), G(x_n)). */
    std::size_t target_dim(const std::vector<std::size_t>& tuple) const;

    const Scalar& get(const std::vector<std::size_t>& tuple,
                      const std::vector<std::size_t>& args, std::size_t t) const;
    void set(const std::vector<std::size_t>& tuple,
             const std::vector<std::size_t>& args, std::size_t t, const Scalar& v);
    void accumulate(const std::vector<std::size_t>& tuple,
                    const std::vector<std::size_t>& args, std::size_t t, const Scalar& v);

    /** Value on a basis-arrow tuple as an arrow of B. */
    Arrow eval_basis(const std::vector<std::size_t>& tuple,
                     const std::vector<std::size_t>& args) const;
    /** Multilinear value on arbitrary arrows (degree must match). */
    Arrow eval(const std::vector<Arrow>& args) const;
    /** Degree-0 component at an object. */
    Arrow eval_at(std::size_t x) const;

    bool is_zero() const;
    bool operator==(const Cochain& o) const;

    Cochain add(const Cochain& o) const;
    Cochain sub(const Cochain& o) const;
    Cochain scale(const Scalar& s) const;

    /** Nonzero blocks, keyed by object tuple (deterministic order). */
    const std::map<std::vector<std::size_t>, Vec>& blocks() const { return blocks_; }

    /** All object tuples with every argument slot nonempty. */
    static std::vector<std::vector<std::size_t>> tuples(const PairContext& ctx, int degree);

private:
    int degree_;
    PairContext ctx_;
    std::map<std::vector<std::size_t>, Vec> blocks_;

    Vec& block(const std::vector<std::size_t>& tuple);
    std::size_t offset(const std::vector<std::size_t>& tuple,
                       const std::vector<std::size_t>& args, std::size_t t) const;
};

Cochain nat_to_cochain(const NatTransf& s);
NatTransf cochain_to_nat(const Cochain& c); // degree 0

/** delta psi, one degree up; for degree 0: (d s)(f) = F(f) s_y - s_x G(f). */
Cochain coboundary(const Cochain& psi);

/** Cup-like composition C^n(F,G) x C^m(G,H) -> C^{n+m}(F,H), sign (-1)^{nm}. */
Cochain cup(const Cochain& phi, const Cochain& psi);

/**
 * Brace-like composition phi{psi_1,...,psi_k}: sum over order-preserving
 * insertions with the outer functors applied to the plain arguments; the sign
 * of a term is (-1)^e with e = sum_i (k_i - 1) l_i, where l_i counts every
 * input (including inputs consumed by earlier psi's) before psi_i.  Empty
 * insertion sets (k > deg phi) give the zero cochain.
 */
Cochain brace(const Cochain& phi, const std::vector<Cochain>& psis);

/** H_*(phi)(f_1..f_n) = H(phi(f_1..f_n)). */
Cochain pushforward(const FunctorPtr& H, const Cochain& phi);
/** F^*(phi)(f_1..f_n) = phi(F(f_1),...,F(f_n)). */
Cochain pullback(const FunctorPtr& F, const Cochain& phi);

enum class Side { Pre, Post };
/** Pre: tau^*(phi) = tau cup phi.  Post: tau_*(phi) = phi cup tau. */
Cochain nat_pre_post(const NatTransf& tau, const Cochain& phi, Side side);

/**
 * The chain map sigma-dagger of a natural transformation sigma: F => G,
 * from C^{m+1}(A) + C^{m+1}(B) + C^m(F) + C^m(G) to C^m(F,G).  Signs are
 * pinned by the chain-map identity (see tests):
 *   sigma_dagger(phi, psi, up, om) = psi{sigma} - up cup sigma + sigma cup om.
 */
Cochain sigma_dagger(const NatTransf& sigma, const Cochain& phiA, const Cochain& psiB,
                     const Cochain& upF, const Cochain& omG);

struct RetractionResult {
    Cochain normalized; // hbar psi
    Cochain homotopy;   // S psi, degree n-1 (zero degree-0 cochain when n = 0)
};

/** True when the cochain vanishes on every tuple containing an identity argument. */
bool is_normalized(const Cochain& psi);

/**
 * The chain retraction hbar onto normalized cochains together with the
 * homotopy S; they satisfy hbar(psi) - psi = -(d(S psi) + S(d psi)) exactly.
 */
RetractionResult normalize_retraction(const Cochain& psi);

/**
 * Enumeration of the coordinate basis of C^n(F,G) in a fixed deterministic
 * order, optionally restricted to the normalized subspace (which requires
 * every identity to be a basis arrow).
 */
class CochainBasis {
public:
    struct Coord {
        std::vector<std::size_t> tuple;
        std::vector<std::size_t> args;
        std::size_t t;
    };

    CochainBasis() = default;
    CochainBasis(PairContext ctx, int degree, bool normalized);

    int degree() const { return degree_; }
    const PairContext& ctx() const { return ctx_; }
    std::size_t dim() const { return coords_.size(); }
    const std::vector<Coord>& coords() const { return coords_; }

    Vec to_vec(const Cochain& c) const;
    Cochain from_vec(const Vec& v) const;
    Cochain unit(std::size_t i) const;

private:
    PairContext ctx_;
    int degree_ = 0;
    bool normalized_ = false;
    std::vector<Coord> coords_;
};

/** Matrix of a linear map between cochain groups in the given bases. */
SparseMatrix matrix_of(const std::function<Cochain(const Cochain&)>& map,
                       const CochainBasis& from, const CochainBasis& to);

/** Matrix of the coboundary C^n -> C^{n+1} in the coordinate bases. */
SparseMatrix delta_matrix(const PairContext& ctx, int degree, bool normalized = false);

} // namespace catdef

#endif
