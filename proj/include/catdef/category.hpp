/**
 * Finite k-linear categories presented by hom-space bases and composition
 * structure constants, together with the axiom validators.
 *
 * A category is immutable once built; every downstream structure holds it
 * through a shared_ptr and may be read concurrently.
 */

#ifndef CATDEF_CATEGORY_HPP
#define CATDEF_CATEGORY_HPP

#include <memory>
#include <string>
#include <vector>

#include "catdef/matrix.hpp"

namespace catdef {

/** One validation finding; an empty report means the structure is valid. */
struct Finding {
    std::string where;
    std::string message;
};

struct Report {
    std::vector<Finding> findings;
    bool ok() const { return findings.empty(); }
    void add(std::string where, std::string message) {
        findings.push_back({std::move(where), std::move(message)});
    }
};

class LinCategory {
public:
    Field field;
    std::string name;
    std::vector<std::string> objects;

    // hom[x][y]: ordered basis-arrow ids of hom(x, y); may be empty.
    std::vector<std::vector<std::vector<std::string>>> hom;

    // comp[x][y][z]: (dim(x,y) * dim(y,z)) x dim(x,z) matrix; row i*dim(y,z)+j
    // holds the coefficients of (basis_i : x->y) composed with (basis_j : y->z)
    // in diagrammatic order.
    std::vector<std::vector<std::vector<Matrix>>> comp;

    // identity[x]: coefficient vector of 1_x in hom(x, x).
    std::vector<Vec> identity;

    std::size_t object_count() const { return objects.size(); }
    std::size_t dim(std::size_t x, std::size_t y) const { return hom[x][y].size(); }
    int object_index(const std::string& id) const;

    /**
     * True when 1_x is itself a basis arrow (coefficient vector is a standard
     * basis vector with coefficient 1).  Returns the basis slot, or -1.
     * Normalized-cochain coordinate subspaces exist only under this rule.
     */
    int identity_basis_slot(std::size_t x) const;
};

using CategoryPtr = std::shared_ptr<const LinCategory>;

struct Arrow {
    std::size_t src = 0, tgt = 0;
    Vec coeffs;
};

Arrow zero_arrow(const LinCategory& c, std::size_t src, std::size_t tgt);
Arrow identity_arrow(const LinCategory& c, std::size_t x);
Arrow basis_arrow(const LinCategory& c, std::size_t src, std::size_t tgt, std::size_t k);

Arrow add_arrows(const LinCategory& c, const Arrow& f, const Arrow& g);
Arrow scale_arrow(const LinCategory& c, const Scalar& s, const Arrow& f);
bool arrow_is_zero(const LinCategory& c, const Arrow& f);

/** Bilinear composite fg in diagrammatic order; requires tgt(f) = src(g). */
Arrow compose_arrows(const LinCategory& c, const Arrow& f, const Arrow& g);

/** Lists every violated associativity or unit instance on basis arrows. */
Report validate_category(const LinCategory& c);

} // namespace catdef

#endif
