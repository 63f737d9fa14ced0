#ifndef SHIFTLAB_MONOMIAL_IDEAL_HPP
#define SHIFTLAB_MONOMIAL_IDEAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace shiftlab {

// Vertex/variable subsets of [n] are bitmasks: bit i-1 stands for i.
using Subset = std::uint32_t;

std::vector<int> subset_elements(Subset s);
Subset subset_from(const std::vector<int>& elements, int n);
std::string subset_string(Subset s);  // "{1,2,3}", "{}" for the empty set

// A monomial ideal by its minimal generators (an antichain under
// divisibility, kept in decreasing monomial order).
class MonomialIdeal {
public:
    MonomialIdeal() : n_(0) {}
    explicit MonomialIdeal(int n) : n_(n) {}

    // minimalizes the given generating set
    static MonomialIdeal from_generators(int n, std::vector<Monomial> gens);

    int n() const { return n_; }
    const std::vector<Monomial>& min_gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_proper() const { return gens_.empty() || !gens_.front().is_one(); }

    bool contains(const Monomial& m) const;
    bool is_squarefree() const;

    // closed under swapping a variable for any larger one
    bool is_strongly_stable(std::string* violation = nullptr) const;
    // squarefree variant of the same closure
    bool is_squarefree_strongly_stable(std::string* violation = nullptr) const;

    // dimension of the degree-d slice of the ideal
    long slice_dimension(int degree) const;
    // monomials of the given degree outside the ideal
    std::vector<Monomial> standard_monomials(int degree) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
    int n_;
    std::vector<Monomial> gens_;
};

// A maximal coset m*N^sigma of standard monomials; supp(m) avoids sigma.
struct StandardPair {
    Monomial coset;
    Subset sigma;

    friend bool operator==(const StandardPair& a, const StandardPair& b) {
        return a.sigma == b.sigma && a.coset == b.coset;
    }
    friend bool operator<(const StandardPair& a, const StandardPair& b);
};

// All standard pairs of a proper monomial ideal, canonically sorted:
// larger sigma first, then cosets by increasing degree and decreasing order.
std::vector<StandardPair> standard_pairs(const MonomialIdeal& ideal);

// Associated-prime multiplicities and the three degrees, all read off the
// standard pair decomposition.
struct DegreeReport {
    int dim = 0;
    std::map<Subset, long> multiplicities;  // P_sigma -> number of pairs
    std::vector<Subset> minimal_primes;
    long degree = 0;
    long geomdeg = 0;
    long arithdeg = 0;
};

DegreeReport degree_report(const MonomialIdeal& ideal);
DegreeReport degree_report(const std::vector<StandardPair>& pairs, int n);

} // namespace shiftlab

#endif
