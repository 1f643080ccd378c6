#include "cwres/rescomplex.hpp"

#include <algorithm>
#include <set>

namespace cwres {

void validate_complex(const GradedFreeComplex& c) {
    Fp f(c.p);
    (void)f;
    if (c.diffs.size() + 1 != c.frames.size() && !(c.frames.empty() && c.diffs.empty()))
        throw SizeMismatch("expected " + std::to_string(c.frames.empty() ? 0 : c.frames.size() - 1) +
                           " differentials, got " + std::to_string(c.diffs.size()));
    std::set<std::string> ids;
    const int n = static_cast<int>(c.variables.size());
    for (const auto& frame : c.frames)
        for (const auto& g : frame) {
            if (!ids.insert(g.id).second) throw Error("duplicate generator id '" + g.id + "'");
            if (g.mdeg.size() != n)
                throw DimensionMismatch("generator '" + g.id + "' multidegree length mismatch");
        }
    for (int i = 1; i < c.length(); ++i) {
        const FpMatrix& d = c.differential(i);
        if (d.p() != c.p) throw SizeMismatch("differential modulus mismatch");
        if (d.rows() != static_cast<int>(c.frames[static_cast<std::size_t>(i) - 1].size()) ||
            d.cols() != static_cast<int>(c.frames[static_cast<std::size_t>(i)].size()))
            throw SizeMismatch("differential " + std::to_string(i) + " shape mismatch");
        for (const auto& [rc, v] : d.entries()) {
            (void)v;
            const auto& row = c.frames[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(rc.first)];
            const auto& col = c.frames[static_cast<std::size_t>(i)][static_cast<std::size_t>(rc.second)];
            if (!row.mdeg.divides(col.mdeg))
                throw GradingViolation("entry (" + row.id + ", " + col.id + ") of differential " +
                                       std::to_string(i) + " violates degree compatibility");
        }
    }
}

namespace {

std::string subset_id(const std::vector<int>& subset) {
    std::string id = "t";
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (k) id += ".";
        id += std::to_string(subset[k]);
    }
    return id;
}

// all k-subsets of {0..q-1} in lexicographic order
std::vector<std::vector<int>> subsets_of_size(int q, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    if (k > q) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == q - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j) - 1] + 1;
    }
    return out;
}

Multidegree subset_lcm(const MonomialIdeal& ideal, const std::vector<int>& subset) {
    Multidegree m = Multidegree::zero(ideal.nvars());
    for (int g : subset) m = lcm(m, ideal.generators[static_cast<std::size_t>(g)]);
    return m;
}

}  // namespace

GradedFreeComplex taylor_complex(const MonomialIdeal& ideal, Scalar p) {
    const int q = static_cast<int>(ideal.generators.size());
    GradedFreeComplex c;
    c.p = p;
    c.variables = ideal.variables;
    Fp f(p);

    std::vector<std::vector<std::vector<int>>> subsets;  // per homological degree
    for (int i = 0; i < q; ++i) subsets.push_back(subsets_of_size(q, i + 1));

    for (int i = 0; i < q; ++i) {
        std::vector<Generator> frame;
        for (const auto& s : subsets[static_cast<std::size_t>(i)])
            frame.push_back({subset_id(s), subset_lcm(ideal, s)});
        c.frames.push_back(std::move(frame));
    }

    for (int i = 1; i < q; ++i) {
        // position of each i-subset in frame i-1
        std::map<std::vector<int>, int> pos;
        for (std::size_t r = 0; r < subsets[static_cast<std::size_t>(i) - 1].size(); ++r)
            pos[subsets[static_cast<std::size_t>(i) - 1][r]] = static_cast<int>(r);
        FpMatrix d(static_cast<int>(subsets[static_cast<std::size_t>(i) - 1].size()),
                   static_cast<int>(subsets[static_cast<std::size_t>(i)].size()), p);
        for (std::size_t col = 0; col < subsets[static_cast<std::size_t>(i)].size(); ++col) {
            const auto& s = subsets[static_cast<std::size_t>(i)][col];
            for (std::size_t k = 0; k < s.size(); ++k) {
                std::vector<int> face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
                d.set(pos.at(face), static_cast<int>(col), (k % 2 == 0) ? 1 : f.neg(1));
            }
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

Strand restrict_at_degree(const GradedFreeComplex& c, const Multidegree& alpha) {
    Strand s;
    for (const auto& frame : c.frames) {
        std::vector<int> members;
        for (std::size_t j = 0; j < frame.size(); ++j)
            if (frame[j].mdeg.divides(alpha)) members.push_back(static_cast<int>(j));
        s.members.push_back(std::move(members));
    }
    for (int i = 1; i < c.length(); ++i)
        s.mats.push_back(c.differential(i).submatrix(s.members[static_cast<std::size_t>(i) - 1],
                                                     s.members[static_cast<std::size_t>(i)]));
    return s;
}

namespace {

std::vector<Multidegree> frame_degree_closure(const GradedFreeComplex& c) {
    std::set<Multidegree, GradedLexLess> degs;
    for (const auto& frame : c.frames)
        for (const auto& g : frame) degs.insert(g.mdeg);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Multidegree> cur(degs.begin(), degs.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                if (degs.insert(lcm(cur[i], cur[j])).second) grew = true;
    }
    return {degs.begin(), degs.end()};
}

}  // namespace

bool is_complex(const GradedFreeComplex& c) {
    validate_complex(c);
    for (const Multidegree& alpha : frame_degree_closure(c)) {
        Strand s = restrict_at_degree(c, alpha);
        for (std::size_t i = 0; i + 1 < s.mats.size(); ++i)
            if (!(s.mats[i] * s.mats[i + 1]).is_zero()) return false;
    }
    return true;
}

bool exact_at_degree(const GradedFreeComplex& c, const MonomialIdeal& ideal, const Multidegree& alpha) {
    Strand s = restrict_at_degree(c, alpha);
    const int len = c.length();
    std::vector<int> ranks(static_cast<std::size_t>(len) + 1, 0);  // ranks[i] = rank of strand D_i
    for (int i = 1; i < len; ++i) ranks[static_cast<std::size_t>(i)] = rank(s.mats[static_cast<std::size_t>(i) - 1]);
    // positions >= 1: nullity(D_i) = rank(D_{i+1})
    for (int i = 1; i < len; ++i) {
        int dim_i = static_cast<int>(s.members[static_cast<std::size_t>(i)].size());
        if (dim_i - ranks[static_cast<std::size_t>(i)] != ranks[static_cast<std::size_t>(i) + 1]) return false;
    }
    // position 0: cokernel of D_1 is the degree-alpha part of the ideal
    if (len > 0) {
        int dim_0 = static_cast<int>(s.members[0].size());
        int expected = contains_monomial(ideal, alpha) ? 1 : 0;
        if (dim_0 - ranks[1] != expected) return false;
    }
    return true;
}

bool is_exact(const GradedFreeComplex& c, const MonomialIdeal& ideal) {
    for (const Multidegree& alpha : lcm_lattice(ideal))
        if (!exact_at_degree(c, ideal, alpha)) return false;
    return true;
}

bool is_minimal(const GradedFreeComplex& c) {
    for (int i = 1; i < c.length(); ++i)
        for (const auto& [rc, v] : c.differential(i).entries()) {
            (void)v;
            if (c.frames[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(rc.first)].mdeg ==
                c.frames[static_cast<std::size_t>(i)][static_cast<std::size_t>(rc.second)].mdeg)
                return false;
        }
    return true;
}

namespace {

struct UnitEntry {
    int degree;
    int row;
    int col;
};

// lexicographically smallest (degree, row id, col id) unit entry, if any
std::optional<UnitEntry> find_unit_entry(const GradedFreeComplex& c) {
    std::optional<UnitEntry> best;
    std::tuple<int, std::string, std::string> best_key;
    for (int i = 1; i < c.length(); ++i)
        for (const auto& [rc, v] : c.differential(i).entries()) {
            (void)v;
            const auto& row = c.frames[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(rc.first)];
            const auto& col = c.frames[static_cast<std::size_t>(i)][static_cast<std::size_t>(rc.second)];
            if (!(row.mdeg == col.mdeg)) continue;
            std::tuple<int, std::string, std::string> key{i, row.id, col.id};
            if (!best || key < best_key) {
                best = UnitEntry{i, rc.first, rc.second};
                best_key = key;
            }
        }
    return best;
}

std::vector<int> erased(int size, int skip) {
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(size) - 1);
    for (int j = 0; j < size; ++j)
        if (j != skip) keep.push_back(j);
    return keep;
}

void cancel_unit(GradedFreeComplex& c, const UnitEntry& u) {
    Fp f(c.p);
    const int i = u.degree;
    FpMatrix& d = c.diffs[static_cast<std::size_t>(i) - 1];
    const Scalar uinv = f.inv(d.get(u.row, u.col));
    const int nrows = d.rows(), ncols = d.cols();
    std::vector<int> rkeep = erased(nrows, u.row);
    std::vector<int> ckeep = erased(ncols, u.col);

    // D_i' = E - c u^{-1} b  (b = pivot row, c = pivot column)
    FpMatrix nd = d.submatrix(rkeep, ckeep);
    for (std::size_t r = 0; r < rkeep.size(); ++r) {
        Scalar cv = d.get(rkeep[r], u.col);
        if (cv == 0) continue;
        for (std::size_t cc = 0; cc < ckeep.size(); ++cc) {
            Scalar bv = d.get(u.row, ckeep[cc]);
            if (bv == 0) continue;
            nd.set(static_cast<int>(r), static_cast<int>(cc),
                   f.sub(nd.get(static_cast<int>(r), static_cast<int>(cc)), f.mul(f.mul(cv, uinv), bv)));
        }
    }
    c.diffs[static_cast<std::size_t>(i) - 1] = std::move(nd);

    if (i + 1 < c.length()) {
        FpMatrix& up = c.diffs[static_cast<std::size_t>(i)];
        std::vector<int> all_cols(static_cast<std::size_t>(up.cols()));
        for (int j = 0; j < up.cols(); ++j) all_cols[static_cast<std::size_t>(j)] = j;
        up = up.submatrix(ckeep, all_cols);
    }
    if (i >= 2) {
        FpMatrix& down = c.diffs[static_cast<std::size_t>(i) - 2];
        std::vector<int> all_rows(static_cast<std::size_t>(down.rows()));
        for (int j = 0; j < down.rows(); ++j) all_rows[static_cast<std::size_t>(j)] = j;
        down = down.submatrix(all_rows, rkeep);
    }

    auto& lower = c.frames[static_cast<std::size_t>(i) - 1];
    lower.erase(lower.begin() + u.row);
    auto& upper = c.frames[static_cast<std::size_t>(i)];
    upper.erase(upper.begin() + u.col);
}

}  // namespace

GradedFreeComplex minimize(const GradedFreeComplex& c) {
    if (c.length() == 0) return c;
    if (c.frames[0].empty()) throw NotExact("minimize: empty frame 0");
    std::vector<Multidegree> gens;
    for (const auto& g : c.frames[0]) gens.push_back(g.mdeg);
    MonomialIdeal ideal = make_ideal(c.variables, std::move(gens));
    if (!is_complex(c) || !is_exact(c, ideal))
        throw NotExact("minimize requires an exact complex");

    GradedFreeComplex out = c;
    while (auto u = find_unit_entry(out)) cancel_unit(out, *u);
    return out;
}

BettiTable betti_table(const GradedFreeComplex& c) {
    BettiTable t;
    for (int i = 0; i < c.length(); ++i)
        for (const auto& g : c.frames[static_cast<std::size_t>(i)]) ++t.beta[{i, g.mdeg}];
    return t;
}

namespace {

// faces of the subset complex {S : lcm(S) strictly divides x^alpha},
// listed per dimension (-1-dimensional empty face first when present)
struct SubsetComplex {
    bool has_empty_face = false;
    std::vector<std::vector<std::vector<int>>> faces;  // faces[d] = d-dimensional faces
};

SubsetComplex strict_divisor_complex(const MonomialIdeal& ideal, const Multidegree& alpha) {
    const int q = static_cast<int>(ideal.generators.size());
    if (q > 20) throw Error("betti_oracle limited to 20 generators");
    SubsetComplex sc;
    Multidegree zero = Multidegree::zero(ideal.nvars());
    sc.has_empty_face = !(zero == alpha);
    for (int size = 1; size <= q; ++size) {
        std::vector<std::vector<int>> level;
        for (const auto& s : subsets_of_size(q, size)) {
            Multidegree m = subset_lcm(ideal, s);
            if (m.divides(alpha) && !(m == alpha)) level.push_back(s);
        }
        if (level.empty()) break;
        sc.faces.push_back(std::move(level));
    }
    return sc;
}

}  // namespace

BettiTable betti_oracle(const MonomialIdeal& ideal, Scalar p) {
    Fp f(p);
    BettiTable t;
    for (const Multidegree& alpha : lcm_lattice(ideal)) {
        SubsetComplex sc = strict_divisor_complex(ideal, alpha);
        if (!sc.has_empty_face) {
            // void complex: only for the degree of the unit generator
            t.beta[{0, alpha}] += 1;
            continue;
        }
        const int maxd = static_cast<int>(sc.faces.size()) - 1;
        // boundary matrices of the reduced chain complex; bd[d] : C_d -> C_{d-1}
        std::vector<FpMatrix> bd;
        for (int d = 0; d <= maxd; ++d) {
            int rows = d == 0 ? 1 : static_cast<int>(sc.faces[static_cast<std::size_t>(d) - 1].size());
            FpMatrix m(rows, static_cast<int>(sc.faces[static_cast<std::size_t>(d)].size()), p);
            std::map<std::vector<int>, int> pos;
            if (d > 0)
                for (std::size_t r = 0; r < sc.faces[static_cast<std::size_t>(d) - 1].size(); ++r)
                    pos[sc.faces[static_cast<std::size_t>(d) - 1][r]] = static_cast<int>(r);
            for (std::size_t col = 0; col < sc.faces[static_cast<std::size_t>(d)].size(); ++col) {
                const auto& s = sc.faces[static_cast<std::size_t>(d)][col];
                if (d == 0) {
                    m.set(0, static_cast<int>(col), 1);  // augmentation to the empty face
                    continue;
                }
                for (std::size_t k = 0; k < s.size(); ++k) {
                    std::vector<int> face = s;
                    face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
                    m.set(pos.at(face), static_cast<int>(col), (k % 2 == 0) ? 1 : f.neg(1));
                }
            }
            bd.push_back(std::move(m));
        }
        // reduced homology in degree j: nullity(bd[j]) - rank(bd[j+1]);
        // at j = -1 the kernel is the whole one-dimensional C_{-1}
        for (int j = -1; j <= maxd; ++j) {
            int nullity;
            if (j == -1)
                nullity = 1;
            else {
                int dim_j = static_cast<int>(sc.faces[static_cast<std::size_t>(j)].size());
                nullity = dim_j - rank(bd[static_cast<std::size_t>(j)]);
            }
            int im = (j + 1 <= maxd) ? rank(bd[static_cast<std::size_t>(j) + 1]) : 0;
            int h = nullity - im;
            if (h > 0) t.beta[{j + 1, alpha}] += h;
        }
    }
    return t;
}

}  // namespace cwres
