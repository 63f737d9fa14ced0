#include "simplicial.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include <json.hpp>

#include "linalg.hpp"

namespace shiftlab {

namespace {

std::vector<int> mask_vertices(Subset f) { return subset_elements(f); }

// facets sort by their vertex lists, lexicographically
bool facet_less(Subset a, Subset b) {
    auto va = mask_vertices(a), vb = mask_vertices(b);
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

} // namespace

SimplicialComplex SimplicialComplex::empty_complex(int n) {
    SimplicialComplex c(n);
    c.facets_.push_back(0);
    return c;
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    SimplicialComplex c(n);
    c.facets_.push_back(n == 0 ? 0 : (Subset(1) << n) - 1);
    return c;
}

SimplicialComplex SimplicialComplex::generated_by(int n, const std::vector<Subset>& faces) {
    SimplicialComplex c(n);
    for (Subset f : faces) {
        if (n < 32 && (f >> n) != 0) throw ContractError("face has vertices outside [n]");
        bool covered = false;
        for (Subset g : c.facets_)
            if ((f & g) == f) {
                covered = true;
                break;
            }
        if (covered) continue;
        std::erase_if(c.facets_, [&](Subset g) { return (g & f) == g; });
        c.facets_.push_back(f);
    }
    c.canonicalize();
    return c;
}

SimplicialComplex SimplicialComplex::from_facets_strict(int n,
                                                        const std::vector<std::vector<int>>& facets) {
    SimplicialComplex c(n);
    for (const auto& verts : facets) {
        Subset f = subset_from(verts, n);
        if (std::popcount(f) != static_cast<int>(verts.size()))
            throw ParseError("facet repeats a vertex");
        c.facets_.push_back(f);
    }
    for (std::size_t i = 0; i < c.facets_.size(); ++i)
        for (std::size_t j = 0; j < c.facets_.size(); ++j) {
            if (i == j) continue;
            if ((c.facets_[i] & c.facets_[j]) == c.facets_[i])
                throw ParseError("facet " + subset_string(c.facets_[i]) +
                                 " is contained in facet " + subset_string(c.facets_[j]));
        }
    c.canonicalize();
    return c;
}

void SimplicialComplex::canonicalize() {
    std::sort(facets_.begin(), facets_.end(), facet_less);
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
}

int SimplicialComplex::dim() const {
    if (is_void()) throw ContractError("the void complex has no dimension");
    int d = -1;
    for (Subset f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

std::vector<std::vector<int>> SimplicialComplex::facet_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (Subset f : facets_) out.push_back(mask_vertices(f));
    return out;
}

bool SimplicialComplex::is_face(Subset f) const {
    for (Subset g : facets_)
        if ((f & g) == f) return true;
    return false;
}

std::vector<Subset> SimplicialComplex::faces() const {
    std::vector<Subset> out;
    for (Subset f = 0; f < (Subset(1) << n_); ++f)
        if (is_face(f)) out.push_back(f);
    std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

std::vector<Subset> SimplicialComplex::faces_of_size(int k) const {
    std::vector<Subset> out;
    for (Subset f : faces())
        if (std::popcount(f) == k) out.push_back(f);
    return out;
}

std::vector<long> SimplicialComplex::f_vector() const {
    std::vector<long> fv(static_cast<std::size_t>(n_) + 1, 0);
    for (Subset f : faces()) fv[static_cast<std::size_t>(std::popcount(f))]++;
    return fv;
}

bool SimplicialComplex::is_pure() const {
    if (is_void()) return true;
    for (Subset f : facets_)
        if (std::popcount(f) != std::popcount(facets_.front())) return false;
    return true;
}

bool SimplicialComplex::is_shifted() const {
    for (Subset f : faces()) {
        for (int i : mask_vertices(f)) {
            for (int j = 1; j < i; ++j) {
                if (f & (Subset(1) << (j - 1))) continue;
                Subset g = (f & ~(Subset(1) << (i - 1))) | (Subset(1) << (j - 1));
                if (!is_face(g)) return false;
            }
        }
    }
    return true;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (Subset f : facets_)
        if (!other.is_face(f)) return false;
    return true;
}

std::vector<Subset> SimplicialComplex::minimal_non_faces() const {
    std::vector<Subset> out;
    for (Subset f = 0; f < (Subset(1) << n_); ++f) {
        if (is_face(f)) continue;
        bool minimal = true;
        for (int i = 0; i < n_ && minimal; ++i)
            if ((f & (Subset(1) << i)) && !is_face(f & ~(Subset(1) << i))) minimal = false;
        if (minimal) out.push_back(f);
    }
    return out;
}

std::uint64_t SimplicialComplex::hash() const {
    std::uint64_t h = fnv1a(&n_, sizeof(n_));
    for (Subset f : facets_) h = fnv1a(&f, sizeof(f), h);
    return h;
}

SimplicialComplex alexander_dual(const SimplicialComplex& gamma) {
    int n = gamma.n();
    Subset full = n == 0 ? 0 : (Subset(1) << n) - 1;
    if (gamma.is_void()) return SimplicialComplex::full_simplex(n);
    // facets of the dual are complements of minimal non-faces
    std::vector<Subset> gens;
    for (Subset f : gamma.minimal_non_faces()) gens.push_back(full & ~f);
    return SimplicialComplex::generated_by(n, gens);
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& gamma) {
    if (gamma.is_void())
        throw ContractError("the void complex has the unit ideal; not a valid input");
    int n = gamma.n();
    std::vector<Monomial> gens;
    for (Subset f : gamma.minimal_non_faces()) {
        Monomial m = Monomial::one(n);
        for (int v : subset_elements(f)) m = m.multiply_variable(v);
        gens.push_back(m);
    }
    return MonomialIdeal::from_generators(n, gens);
}

SimplicialComplex complex_of_squarefree_ideal(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw ContractError("ideal is not squarefree");
    if (!ideal.is_proper()) throw ContractError("unit ideal has no complex");
    int n = ideal.n();
    std::vector<Subset> nonface_gens;
    for (const auto& g : ideal.min_gens()) nonface_gens.push_back(subset_from(g.support(), n));
    std::vector<Subset> facets;
    for (Subset f = 0; f < (Subset(1) << n); ++f) {
        bool face = true;
        for (Subset g : nonface_gens)
            if ((f & g) == g) {
                face = false;
                break;
            }
        if (!face) continue;
        bool maximal = true;
        for (int i = 0; i < n && maximal; ++i) {
            if (f & (Subset(1) << i)) continue;
            Subset bigger = f | (Subset(1) << i);
            bool bigger_face = true;
            for (Subset g : nonface_gens)
                if ((bigger & g) == g) {
                    bigger_face = false;
                    break;
                }
            if (bigger_face) maximal = false;
        }
        if (maximal) facets.push_back(f);
    }
    return SimplicialComplex::generated_by(n, facets);
}

SimplicialComplex restriction(const SimplicialComplex& gamma, Subset w) {
    std::vector<Subset> gens;
    for (Subset f : gamma.facets()) gens.push_back(f & w);
    if (gamma.is_void()) return SimplicialComplex::void_complex(gamma.n());
    return SimplicialComplex::generated_by(gamma.n(), gens);
}

long FTriangle::at(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(rows.size())) return 0;
    if (j < 0 || j >= static_cast<int>(rows[i].size())) return 0;
    return rows[i][j];
}

long HTriangle::at(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(rows.size())) return 0;
    if (j < 0 || j >= static_cast<int>(rows[i].size())) return 0;
    return rows[i][j];
}

FTriangle f_triangle(const SimplicialComplex& gamma) {
    if (gamma.is_void()) throw ContractError("f-triangle of the void complex is undefined");
    int top = gamma.dim() + 1;
    FTriangle t;
    t.rows.resize(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) t.rows[i].assign(static_cast<std::size_t>(i) + 1, 0);
    for (Subset f : gamma.faces()) {
        // star dimension + 1 = size of the largest facet containing f
        int star = 0;
        for (Subset g : gamma.facets())
            if ((f & g) == f) star = std::max(star, std::popcount(g));
        t.rows[star][static_cast<std::size_t>(std::popcount(f))]++;
    }
    return t;
}

HTriangle h_triangle(const SimplicialComplex& gamma) {
    FTriangle f = f_triangle(gamma);
    HTriangle h;
    h.rows.resize(f.rows.size());
    for (std::size_t i = 0; i < f.rows.size(); ++i) {
        h.rows[i].assign(i + 1, 0);
        for (std::size_t j = 0; j <= i; ++j) {
            long sum = 0;
            for (std::size_t s = 0; s <= j; ++s) {
                long sign = ((j - s) % 2 == 0) ? 1 : -1;
                sum += sign * binomial(static_cast<long long>(i - s), static_cast<long long>(j - s)) *
                       f.at(static_cast<int>(i), static_cast<int>(s));
            }
            h.rows[i][j] = sum;
        }
    }
    return h;
}

std::vector<long> reduced_homology_dims(const SimplicialComplex& gamma) {
    if (gamma.is_void()) throw ContractError("homology of the void complex is undefined");
    int d = gamma.dim();
    // chain groups indexed by face size k = 0..d+1 (size k = dimension k-1)
    std::vector<std::vector<Subset>> bases(static_cast<std::size_t>(d) + 2);
    for (Subset f : gamma.faces()) bases[static_cast<std::size_t>(std::popcount(f))].push_back(f);

    // rank of the boundary map from size-(k+1) chains to size-k chains
    auto boundary_rank = [&](int k) -> int {
        if (k < 0 || k + 1 > d + 1) return 0;
        const auto& from = bases[static_cast<std::size_t>(k) + 1];
        const auto& to = bases[static_cast<std::size_t>(k)];
        if (from.empty() || to.empty()) return 0;
        std::vector<std::vector<long long>> m(from.size(),
                                              std::vector<long long>(to.size(), 0));
        for (std::size_t r = 0; r < from.size(); ++r) {
            auto verts = subset_elements(from[r]);
            for (std::size_t drop = 0; drop < verts.size(); ++drop) {
                Subset g = from[r] & ~(Subset(1) << (verts[drop] - 1));
                auto it = std::find(to.begin(), to.end(), g);
                m[r][static_cast<std::size_t>(it - to.begin())] = (drop % 2 == 0) ? 1 : -1;
            }
        }
        return integer_rank(std::move(m));
    };

    std::vector<long> beta(static_cast<std::size_t>(d) + 2, 0);  // index 0 = degree -1
    for (int k = 0; k <= d + 1; ++k) {
        // reduced homology in dimension k-1 uses chains over the size-k faces
        long dim_k = static_cast<long>(bases[static_cast<std::size_t>(k)].size());
        long rank_down = boundary_rank(k - 1);  // size k -> size k-1
        long rank_up = boundary_rank(k);        // size k+1 -> size k
        beta[static_cast<std::size_t>(k)] = dim_k - rank_down - rank_up;
    }
    return beta;
}

long reduced_homology_dim(const SimplicialComplex& gamma, int degree) {
    if (gamma.is_void()) return 0;
    if (degree < -1 || degree > gamma.dim()) return 0;
    return reduced_homology_dims(gamma)[static_cast<std::size_t>(degree) + 1];
}

SimplicialComplex complex_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
        throw ParseError("expected an object with \"n\" and \"facets\"");
    if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
    int n = j["n"].get<int>();
    if (n < 0 || n > Monomial::kMaxVars)
        throw ParseError("\"n\" must be between 0 and " + std::to_string(Monomial::kMaxVars));
    if (!j["facets"].is_array()) throw ParseError("\"facets\" must be an array");
    std::vector<std::vector<int>> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw ParseError("each facet must be an array of vertices");
        std::vector<int> verts;
        for (const auto& v : f) {
            if (!v.is_number_integer()) throw ParseError("vertices must be integers");
            int vi = v.get<int>();
            if (vi < 1 || vi > n) throw ParseError("vertex " + std::to_string(vi) + " outside [1," +
                                                   std::to_string(n) + "]");
            verts.push_back(vi);
        }
        facets.push_back(verts);
    }
    return SimplicialComplex::from_facets_strict(n, facets);
}

std::string complex_to_json(const SimplicialComplex& gamma) {
    nlohmann::json j;
    j["n"] = gamma.n();
    j["facets"] = nlohmann::json::array();
    for (const auto& f : gamma.facet_lists()) j["facets"].push_back(f);
    return j.dump();
}

std::vector<SimplicialComplex> all_complexes(int n) {
    if (n > 5) throw ContractError("exhaustive enumeration is limited to n <= 5");
    // subsets of [n] ordered so every set follows its subsets
    std::vector<Subset> order;
    for (Subset s = 0; s < (Subset(1) << n); ++s) order.push_back(s);
    std::sort(order.begin(), order.end(), [](Subset a, Subset b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<SimplicialComplex> out;
    std::vector<char> chosen(order.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == order.size()) {
            std::vector<Subset> faces;
            for (std::size_t k = 0; k < order.size(); ++k)
                if (chosen[k]) faces.push_back(order[k]);
            out.push_back(SimplicialComplex::generated_by(n, faces));
            return;
        }
        Subset s = order[idx];
        // include s only when all its codimension-one subsets are in
        bool can_include = true;
        for (int i = 0; i < n && can_include; ++i) {
            if (!(s & (Subset(1) << i))) continue;
            Subset sub = s & ~(Subset(1) << i);
            bool found = false;
            for (std::size_t k = 0; k < idx && !found; ++k)
                if (chosen[k] && order[k] == sub) found = true;
            if (!found) can_include = false;
        }
        rec(idx + 1);
        if (can_include) {
            chosen[idx] = 1;
            rec(idx + 1);
            chosen[idx] = 0;
        }
    };
    rec(0);
    return out;
}

SimplicialComplex random_complex(int n, Rng& rng) {
    int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n)));
    std::vector<Subset> gens;
    for (int i = 0; i < count; ++i) {
        int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        Subset f = 0;
        while (std::popcount(f) < size)
            f |= Subset(1) << rng.below(static_cast<std::uint64_t>(n));
        gens.push_back(f);
    }
    return SimplicialComplex::generated_by(n, gens);
}

SimplicialComplex random_graph_complex(int n, Rng& rng) {
    std::vector<Subset> gens;
    int edges = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n)));
    for (int i = 0; i < edges; ++i) {
        int a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int b = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (a == b) b = (b % n) + 1;
        gens.push_back(subset_from({a, b}, n));
    }
    return SimplicialComplex::generated_by(n, gens);
}

} // namespace shiftlab
