#include <algorithm>
#include <map>

#include "cwres/cwposet.hpp"

namespace cwres {

BasedBasis standard_basis(const BasedChainComplex& bc) {
    BasedBasis basis;
    for (const auto& level : bc.cells) {
        std::vector<BasisVector> vecs;
        for (std::size_t j = 0; j < level.size(); ++j) {
            FpVector coords(level.size(), 0);
            coords[j] = 1;
            vecs.push_back({level[j].id, level[j].mdeg, std::move(coords), 0});
        }
        basis.levels.push_back(std::move(vecs));
    }
    return basis;
}

FpMatrix basis_matrix(const BasedBasis& basis, int level, Scalar p) {
    const auto& vecs = basis.levels.at(static_cast<std::size_t>(level));
    std::vector<FpVector> cols;
    for (const auto& v : vecs) cols.push_back(v.coords);
    if (cols.empty()) return FpMatrix(0, 0, p);
    return from_columns(cols, p);
}

std::set<std::string> support(const FpVector& z, const BasedBasis& basis, int level, Scalar p) {
    const auto& vecs = basis.levels.at(static_cast<std::size_t>(level));
    if (z.size() != vecs.size())
        throw SizeMismatch("support: vector length " + std::to_string(z.size()) +
                           " vs basis size " + std::to_string(vecs.size()));
    std::set<std::string> out;
    if (vecs.empty()) return out;
    FpVector coords = inverse(basis_matrix(basis, level, p)).apply(z);
    for (std::size_t j = 0; j < coords.size(); ++j)
        if (coords[j] != 0) out.insert(vecs[j].id);
    return out;
}

namespace {

bool all_zero(const FpVector& v) {
    return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

// z in the image of the incoming differential d_{level+1}?
bool in_image_of_next(const FpVector& z, const BasedChainComplex& bc, int level) {
    if (level + 1 >= bc.length()) return all_zero(z);
    return in_column_space(bc.differential(level + 1), z);
}

std::vector<int> support_indices(const FpVector& coords) {
    std::vector<int> out;
    for (std::size_t j = 0; j < coords.size(); ++j)
        if (coords[j] != 0) out.push_back(static_cast<int>(j));
    return out;
}

// Shared worker; cinv = inverse of the level basis matrix.
bool minimal_support_core(const FpVector& z, const BasedChainComplex& bc, int level,
                          const FpMatrix& c, const FpMatrix& cinv) {
    if (all_zero(z)) return false;  // zero is excluded by fiat
    if (!in_image_of_next(z, bc, level)) return false;

    FpVector coords = cinv.apply(z);
    std::vector<int> supp = support_indices(coords);

    if (level >= 1) {
        // boundaries of basis elements, one column per basis vector
        FpMatrix m = bc.differential(level) * c;
        std::vector<int> all_rows(static_cast<std::size_t>(m.rows()));
        for (int r = 0; r < m.rows(); ++r) all_rows[static_cast<std::size_t>(r)] = r;
        for (int e : supp) {
            std::vector<int> cols;
            for (int s : supp)
                if (s != e) cols.push_back(s);
            FpMatrix restricted = m.submatrix(all_rows, cols);
            if (rank(restricted) < static_cast<int>(cols.size())) return false;
        }
        return true;
    }

    // level 0: the kernel of the bottom map is the image of d_1. A smaller-
    // support element exists iff d_1 hits the coordinate subspace nontrivially.
    if (bc.length() < 2) return true;
    FpMatrix n = cinv * bc.differential(1);
    int full_rank = rank(n);
    for (int e : supp) {
        std::vector<int> forbidden;
        for (int r = 0; r < n.rows(); ++r) {
            bool allowed = false;
            for (int s : supp)
                if (s == r && s != e) allowed = true;
            if (!allowed) forbidden.push_back(r);
        }
        std::vector<int> all_cols(static_cast<std::size_t>(n.cols()));
        for (int j = 0; j < n.cols(); ++j) all_cols[static_cast<std::size_t>(j)] = j;
        FpMatrix outside = n.submatrix(forbidden, all_cols);
        // some x with n x supported inside supp \ {e} and n x != 0
        if (rank(outside) < full_rank) return false;
    }
    return true;
}

}  // namespace

bool is_minimal_support(const FpVector& z, const BasedChainComplex& bc, int level,
                        const BasedBasis& basis) {
    FpMatrix c = basis_matrix(basis, level, bc.p);
    if (c.rows() == 0 && z.empty()) return false;
    FpMatrix cinv = inverse(c);
    return minimal_support_core(z, bc, level, c, cinv);
}

bool is_minimal_support_bruteforce(const FpVector& z, const BasedChainComplex& bc, int level,
                                   const BasedBasis& basis) {
    if (all_zero(z)) return false;
    if (!in_image_of_next(z, bc, level)) return false;
    FpMatrix c = basis_matrix(basis, level, bc.p);
    FpMatrix cinv = inverse(c);
    FpVector zc = cinv.apply(z);
    std::vector<int> zsupp = support_indices(zc);
    std::set<int> zset(zsupp.begin(), zsupp.end());

    const int dim = static_cast<int>(zc.size());
    if (dim > 16) throw Error("brute-force minimal-support check limited to dimension 16");
    Fp f(bc.p);
    std::vector<Scalar> coeffs(static_cast<std::size_t>(dim), 0);
    // odometer over all p^dim coefficient vectors
    while (true) {
        int k = dim - 1;
        while (k >= 0 && coeffs[static_cast<std::size_t>(k)] == bc.p - 1) {
            coeffs[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
        ++coeffs[static_cast<std::size_t>(k)];

        std::vector<int> ysupp = support_indices(coeffs);
        if (ysupp.empty()) continue;
        bool strict_subset = ysupp.size() < zset.size() &&
                             std::all_of(ysupp.begin(), ysupp.end(), [&](int s) { return zset.count(s) > 0; });
        if (!strict_subset) continue;
        FpVector y = c.apply(coeffs);
        bool in_kernel;
        if (level >= 1)
            in_kernel = all_zero(bc.differential(level).apply(y));
        else
            in_kernel = bc.length() >= 2 ? in_column_space(bc.differential(1), y) : all_zero(y);
        if (in_kernel) return false;
        (void)f;
    }
    return true;
}

LabeledPoset incidence_poset_of_based_complex(const BasedChainComplex& bc, const BasedBasis& basis) {
    if (basis.levels.size() != bc.cells.size())
        throw SizeMismatch("basis has " + std::to_string(basis.levels.size()) + " levels, complex has " +
                           std::to_string(bc.cells.size()));
    LabeledPoset poset;
    for (int i = 0; i < bc.length(); ++i) {
        const auto& vecs = basis.levels[static_cast<std::size_t>(i)];
        if (vecs.size() != bc.cells[static_cast<std::size_t>(i)].size())
            throw SizeMismatch("basis level " + std::to_string(i) + " size mismatch");
        for (const auto& v : vecs) poset.elements.push_back({v.id, i, v.mdeg});
    }
    for (int i = 1; i < bc.length(); ++i) {
        const auto& lower = basis.levels[static_cast<std::size_t>(i) - 1];
        const auto& upper = basis.levels[static_cast<std::size_t>(i)];
        if (lower.empty() || upper.empty()) continue;
        FpMatrix t = inverse(basis_matrix(basis, i - 1, bc.p)) *
                     (bc.differential(i) * basis_matrix(basis, i, bc.p));
        for (const auto& [rc, v] : t.entries()) {
            (void)v;
            poset.covers.push_back({lower[static_cast<std::size_t>(rc.first)].id,
                                    upper[static_cast<std::size_t>(rc.second)].id});
        }
    }
    std::sort(poset.elements.begin(), poset.elements.end(),
              [](const PosetElement& a, const PosetElement& b) {
                  if (a.rank != b.rank) return a.rank < b.rank;
                  return a.id < b.id;
              });
    std::sort(poset.covers.begin(), poset.covers.end());
    return poset;
}

namespace {

// Enumerates nonzero vectors of GF(p)^dim up to scalar multiples: ordered by
// support size, then support positions, then remaining coefficients; the
// first nonzero coefficient is pinned to 1.
class VectorEnumerator {
public:
    VectorEnumerator(int dim, Scalar p) : dim_(dim), p_(p) {}

    std::optional<FpVector> next() {
        while (true) {
            if (size_ == 0) {
                size_ = 1;
                if (!first_subset()) return std::nullopt;
                reset_coeffs();
                return current();
            }
            if (bump_coeffs()) return current();
            if (next_subset()) {
                reset_coeffs();
                return current();
            }
            ++size_;
            if (size_ > dim_) return std::nullopt;
            if (!first_subset()) return std::nullopt;
            reset_coeffs();
            return current();
        }
    }

private:
    bool first_subset() {
        if (size_ > dim_) return false;
        subset_.resize(static_cast<std::size_t>(size_));
        for (int i = 0; i < size_; ++i) subset_[static_cast<std::size_t>(i)] = i;
        return true;
    }
    bool next_subset() {
        int i = size_ - 1;
        while (i >= 0 && subset_[static_cast<std::size_t>(i)] == dim_ - size_ + i) --i;
        if (i < 0) return false;
        ++subset_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size_; ++j)
            subset_[static_cast<std::size_t>(j)] = subset_[static_cast<std::size_t>(j) - 1] + 1;
        return true;
    }
    void reset_coeffs() { coeffs_.assign(static_cast<std::size_t>(size_), 1); }
    bool bump_coeffs() {
        // first coefficient stays 1; later ones run over 1..p-1, last fastest
        int i = size_ - 1;
        while (i >= 1 && coeffs_[static_cast<std::size_t>(i)] == p_ - 1) {
            coeffs_[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 1) return false;
        ++coeffs_[static_cast<std::size_t>(i)];
        return true;
    }
    FpVector current() const {
        FpVector v(static_cast<std::size_t>(dim_), 0);
        for (int i = 0; i < size_; ++i)
            v[static_cast<std::size_t>(subset_[static_cast<std::size_t>(i)])] = coeffs_[static_cast<std::size_t>(i)];
        return v;
    }

    int dim_, size_ = 0;
    Scalar p_;
    std::vector<int> subset_;
    std::vector<Scalar> coeffs_;
};

FpVector embed(const FpVector& small, const std::vector<int>& positions, std::size_t dim) {
    FpVector out(dim, 0);
    for (std::size_t k = 0; k < positions.size(); ++k)
        out[static_cast<std::size_t>(positions[k])] = small[k];
    return out;
}

}  // namespace

MinimalBasisResult find_minimal_support_basis(const GradedFreeComplex& res, const SearchOptions& opts) {
    validate_complex(res);
    if (opts.bound < 1) throw Error("enumeration bound must be >= 1");
    BasedChainComplex bc = dehomogenize(res);
    MinimalBasisResult result;
    result.basis.levels.resize(static_cast<std::size_t>(res.length()));

    BasedBasis std_basis = standard_basis(bc);
    for (int i = 0; i < res.length() && i <= 2; ++i)
        result.basis.levels[static_cast<std::size_t>(i)] = std_basis.levels[static_cast<std::size_t>(i)];

    for (int i = 3; i < res.length(); ++i) {
        const auto& frame = res.frames[static_cast<std::size_t>(i)];
        std::vector<BasisVector> level(frame.size());
        std::map<Multidegree, std::vector<int>, GradedLexLess> groups;
        for (std::size_t j = 0; j < frame.size(); ++j) groups[frame[j].mdeg].push_back(static_cast<int>(j));

        // boundary-side context for minimality checks
        FpMatrix cprev = basis_matrix(result.basis, i - 1, res.p);
        FpMatrix cprev_inv = cprev.rows() > 0 ? inverse(cprev) : cprev;

        for (const auto& [alpha, positions] : groups) {
            const int k = static_cast<int>(positions.size());
            long examined = 0;
            std::vector<FpVector> chosen;        // full-frame coordinates
            std::vector<FpVector> chosen_projs;  // coordinates on the alpha block
            std::vector<int> chosen_stage;

            auto try_candidate = [&](const FpVector& coords, const FpVector& proj, int stage) {
                FpVector boundary = bc.differential(i).apply(coords);
                if (all_zero(boundary)) return;
                if (!minimal_support_core(boundary, bc, i - 1, cprev, cprev_inv)) return;
                std::vector<FpVector> cols = chosen_projs;
                cols.push_back(proj);
                if (rank(from_columns(cols, res.p)) != static_cast<int>(cols.size())) return;
                chosen.push_back(coords);
                chosen_projs.push_back(proj);
                chosen_stage.push_back(stage);
            };

            VectorEnumerator stage1(k, res.p);
            while (static_cast<int>(chosen.size()) < k) {
                auto cand = stage1.next();
                if (!cand) break;
                if (++examined > opts.bound) throw SearchExhausted(i, alpha.exponents(), opts.bound);
                try_candidate(embed(*cand, positions, frame.size()), *cand, 1);
            }

            if (static_cast<int>(chosen.size()) < k) {
                if (!opts.stage2) throw SearchExhausted(i, alpha.exponents(), opts.bound);
                std::vector<int> space;
                for (std::size_t j = 0; j < frame.size(); ++j)
                    if (frame[j].mdeg.divides(alpha)) space.push_back(static_cast<int>(j));
                std::map<int, int> block_pos;  // frame position -> index in `positions`
                for (int t = 0; t < k; ++t) block_pos[positions[static_cast<std::size_t>(t)]] = t;

                VectorEnumerator stage2(static_cast<int>(space.size()), res.p);
                while (static_cast<int>(chosen.size()) < k) {
                    auto cand = stage2.next();
                    if (!cand) throw SearchExhausted(i, alpha.exponents(), opts.bound);
                    if (++examined > opts.bound) throw SearchExhausted(i, alpha.exponents(), opts.bound);
                    FpVector proj(static_cast<std::size_t>(k), 0);
                    bool hits_block = false;
                    for (std::size_t t = 0; t < space.size(); ++t) {
                        auto it = block_pos.find(space[t]);
                        if (it != block_pos.end() && (*cand)[t] != 0) {
                            proj[static_cast<std::size_t>(it->second)] = (*cand)[t];
                            hits_block = true;
                        }
                    }
                    if (!hits_block) continue;  // cannot contribute to the same-degree block
                    try_candidate(embed(*cand, space, frame.size()), proj, 2);
                }
            }

            int stage_used = *std::max_element(chosen_stage.begin(), chosen_stage.end());
            for (int t = 0; t < k; ++t)
                level[static_cast<std::size_t>(positions[static_cast<std::size_t>(t)])] =
                    BasisVector{frame[static_cast<std::size_t>(positions[static_cast<std::size_t>(t)])].id, alpha,
                                chosen[static_cast<std::size_t>(t)], chosen_stage[static_cast<std::size_t>(t)]};
            result.provenance.push_back({i, alpha, static_cast<int>(examined), stage_used});
        }
        result.basis.levels[static_cast<std::size_t>(i)] = std::move(level);
    }
    return result;
}

Theorem47Verdict check_theorem_4_7(const GradedFreeComplex& res, const BasedBasis& basis) {
    validate_complex(res);
    Theorem47Verdict verdict;
    if (res.length() == 0) {
        verdict.posetSupports = verdict.degMorphism = verdict.minimalSupport = true;
        return verdict;
    }
    if (res.frames[0].empty()) throw NotMinimalResolution("frame 0 is empty");
    std::vector<Multidegree> gens;
    for (const auto& g : res.frames[0]) gens.push_back(g.mdeg);
    MonomialIdeal ideal = make_ideal(res.variables, gens);
    if (ideal.generators.size() != res.frames[0].size())
        throw NotMinimalResolution("frame-0 multidegrees are not a minimal generating set");
    if (!is_complex(res)) throw NotMinimalResolution("differentials do not compose to zero");
    if (!is_exact(res, ideal)) throw NotMinimalResolution("complex is not exact");
    if (!is_minimal(res)) throw NotMinimalResolution("complex has unit entries");

    BasedChainComplex bc = dehomogenize(res);
    if (basis.levels.size() != bc.cells.size()) throw SizeMismatch("basis level count mismatch");
    for (int i = 0; i < res.length(); ++i) {
        const auto& vecs = basis.levels[static_cast<std::size_t>(i)];
        const auto& frame = res.frames[static_cast<std::size_t>(i)];
        if (vecs.size() != frame.size()) throw SizeMismatch("basis level " + std::to_string(i) + " size mismatch");
        FpMatrix c = basis_matrix(basis, i, res.p);
        if (c.rows() > 0) inverse(c);  // throws SingularMatrix if not a basis
        for (const auto& v : vecs) {
            if (!v.mdeg) throw Error("basis vector '" + v.id + "' has no multidegree");
            for (std::size_t r = 0; r < v.coords.size(); ++r)
                if (v.coords[r] != 0 && !frame[r].mdeg.divides(*v.mdeg))
                    throw Error("basis vector '" + v.id + "' is not homogeneous of its multidegree");
        }
    }

    verdict.minimalSupport = true;
    for (int i = 1; i < res.length(); ++i)
        for (const auto& v : basis.levels[static_cast<std::size_t>(i)]) {
            FpVector z = bc.differential(i).apply(v.coords);
            if (!is_minimal_support(z, bc, i - 1, basis)) {
                verdict.minimalSupport = false;
                break;
            }
        }

    verdict.poset = incidence_poset_of_based_complex(bc, basis);
    std::map<std::string, Multidegree> degs;
    for (const auto& level : basis.levels)
        for (const auto& v : level) degs.emplace(v.id, *v.mdeg);
    verdict.degMorphism = true;
    for (const auto& [lo, hi] : verdict.poset.covers)
        if (!degs.at(lo).divides(degs.at(hi))) {
            verdict.degMorphism = false;
            break;
        }
    verdict.posetSupports = verdict.minimalSupport && verdict.degMorphism;
    return verdict;
}

}  // namespace cwres
