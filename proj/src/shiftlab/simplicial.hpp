#ifndef SHIFTLAB_SIMPLICIAL_HPP
#define SHIFTLAB_SIMPLICIAL_HPP

#include <string>
#include <vector>

#include "monomial_ideal.hpp"

namespace shiftlab {

// A simplicial complex on vertex set [n], stored by its facets as vertex
// bitmasks. The void complex (no faces at all) and the empty complex {{}}
// are distinct values: no facets versus the single facet {}.
class SimplicialComplex {
public:
    explicit SimplicialComplex(int n) : n_(check_n(n)) {}

    static SimplicialComplex void_complex(int n) { return SimplicialComplex(n); }
    static SimplicialComplex empty_complex(int n);
    static SimplicialComplex full_simplex(int n);

    // minimalizes the generating family
    static SimplicialComplex generated_by(int n, const std::vector<Subset>& faces);
    // rejects redundant facets instead of minimalizing (file-parser contract)
    static SimplicialComplex from_facets_strict(int n, const std::vector<std::vector<int>>& facets);

    int n() const { return n_; }
    bool is_void() const { return facets_.empty(); }
    // dim of the void complex is not defined; -1 for {{}}
    int dim() const;

    const std::vector<Subset>& facets() const { return facets_; }
    std::vector<std::vector<int>> facet_lists() const;

    bool is_face(Subset f) const;
    std::vector<Subset> faces() const;          // all faces, increasing (popcount, value)
    std::vector<Subset> faces_of_size(int k) const;
    std::vector<long> f_vector() const;         // entry k = number of faces of size k

    bool is_pure() const;
    bool is_shifted() const;
    bool is_subcomplex_of(const SimplicialComplex& other) const;

    std::vector<Subset> minimal_non_faces() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
        return !(a == b);
    }

    // stable identity for seeds and memo keys
    std::uint64_t hash() const;

private:
    static int check_n(int n) {
        if (n < 0 || n > Monomial::kMaxVars)
            throw ContractError("vertex count out of range");
        return n;
    }
    void canonicalize();

    int n_;
    std::vector<Subset> facets_;
};

// Faces are complements of non-faces; an involution.
SimplicialComplex alexander_dual(const SimplicialComplex& gamma);

// Minimal generators y^F over the minimal non-faces F. Rejects the void
// complex (its ideal would be the unit ideal).
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& gamma);

// Complex whose non-faces are the supports of the (squarefree) ideal.
SimplicialComplex complex_of_squarefree_ideal(const MonomialIdeal& ideal);

// The induced subcomplex on the vertices of w.
SimplicialComplex restriction(const SimplicialComplex& gamma, Subset w);

// f-triangle: entry (i, j) counts faces of size j whose star has dimension
// i-1, i.e. whose largest containing face has size i. Rows 0..dim+1.
struct FTriangle {
    std::vector<std::vector<long>> rows;
    long at(int i, int j) const;
};

// h-triangle: alternating-sum transform of the f-triangle; entries can be
// negative for complexes that are not sequentially Cohen-Macaulay.
struct HTriangle {
    std::vector<std::vector<long>> rows;
    long at(int i, int j) const;

    friend bool operator==(const HTriangle&, const HTriangle&) = default;
};

FTriangle f_triangle(const SimplicialComplex& gamma);
HTriangle h_triangle(const SimplicialComplex& gamma);

// Reduced rational homology dimensions, indexed -1..dim, computed from
// boundary-matrix ranks by fraction-free elimination.
std::vector<long> reduced_homology_dims(const SimplicialComplex& gamma);

// dim of the reduced homology in a single degree (-1-based sequence above)
long reduced_homology_dim(const SimplicialComplex& gamma, int degree);

// --- JSON file format ------------------------------------------------------

// {"n": 7, "facets": [[1,2,4], ...]}; rejects facets nested in one another.
SimplicialComplex complex_from_json(const std::string& text);
std::string complex_to_json(const SimplicialComplex& gamma);

// --- families for scans and batteries ---------------------------------------

// Every simplicial complex on [n] (all downsets of 2^[n]), void included.
std::vector<SimplicialComplex> all_complexes(int n);

// Deterministic pseudo-random complex on [n].
SimplicialComplex random_complex(int n, Rng& rng);

// Deterministic pseudo-random pure 1-dimensional complex (a graph); every
// such complex is Buchsbaum.
SimplicialComplex random_graph_complex(int n, Rng& rng);

} // namespace shiftlab

#endif
