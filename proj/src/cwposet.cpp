#include "cwres/cwposet.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cwres {

bool CWChainData::graded() const {
    for (const auto& level : cells)
        for (const auto& cell : level)
            if (!cell.mdeg) return false;
    return true;
}

ValidationReport validate_cw(const CWChainData& data) {
    ValidationReport rep;
    auto fail = [&](ValidationIssue issue) {
        rep.ok = false;
        rep.issues.push_back(std::move(issue));
    };

    const int dims = static_cast<int>(data.cells.size());
    const int expected_boundaries = std::max(0, dims - 1);
    if (static_cast<int>(data.boundaries.size()) != expected_boundaries) {
        fail({"shape", -1, -1, -1,
              "expected " + std::to_string(expected_boundaries) + " boundary matrices, got " +
                  std::to_string(data.boundaries.size())});
        return rep;
    }
    for (int d = 1; d < dims; ++d) {
        const IntMatrix& b = data.boundary(d);
        if (b.rows() != static_cast<int>(data.cells[static_cast<std::size_t>(d) - 1].size()) ||
            b.cols() != static_cast<int>(data.cells[static_cast<std::size_t>(d)].size()))
            fail({"shape", d, -1, -1,
                  "boundary " + std::to_string(d) + " is " + std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()) + ", cells demand " +
                      std::to_string(data.cells[static_cast<std::size_t>(d) - 1].size()) + "x" +
                      std::to_string(data.cells[static_cast<std::size_t>(d)].size())});
    }
    if (!rep.ok) return rep;

    for (int d = 2; d < dims; ++d) {
        IntMatrix prod = data.boundary(d - 1) * data.boundary(d);
        for (int r = 0; r < prod.rows(); ++r)
            for (int c = 0; c < prod.cols(); ++c)
                if (prod.at(r, c) != 0)
                    fail({"boundary-composition", d, r, c,
                          "B_" + std::to_string(d - 1) + " * B_" + std::to_string(d) +
                              " nonzero at (" + std::to_string(r) + "," + std::to_string(c) + ")"});
    }

    if (dims >= 2) {
        const IntMatrix& b1 = data.boundary(1);
        for (int c = 0; c < b1.cols(); ++c) {
            std::vector<std::pair<int, Int>> nz;
            for (int r = 0; r < b1.rows(); ++r)
                if (b1.at(r, c) != 0) nz.push_back({r, b1.at(r, c)});
            if (nz.empty()) continue;  // degenerate loop column, accepted here
            bool good = nz.size() == 2 && ((nz[0].second == 1 && nz[1].second == -1) ||
                                           (nz[0].second == -1 && nz[1].second == 1));
            if (!good)
                fail({"edge-column", 1, -1, c,
                      "1-cell " + std::to_string(c) + " must have endpoint coefficients +1, -1"});
        }
    }

    // grading is all-or-nothing, with consistent multidegree lengths
    bool any_mdeg = false, all_mdeg = true;
    int nvars = -1;
    for (int d = 0; d < dims; ++d)
        for (std::size_t j = 0; j < data.cells[static_cast<std::size_t>(d)].size(); ++j) {
            const auto& cell = data.cells[static_cast<std::size_t>(d)][j];
            if (cell.mdeg) {
                any_mdeg = true;
                if (nvars < 0) nvars = cell.mdeg->size();
                if (cell.mdeg->size() != nvars)
                    fail({"grading", d, -1, static_cast<int>(j),
                          "cell '" + cell.id + "' multidegree length " +
                              std::to_string(cell.mdeg->size()) + " != " + std::to_string(nvars)});
            } else {
                all_mdeg = false;
            }
        }
    if (any_mdeg && !all_mdeg)
        fail({"grading", -1, -1, -1, "some cells are labeled with multidegrees, some are not"});

    return rep;
}

namespace {

// endpoints of edge column c in B_1, valid only when the proxy's edge check passed
std::pair<int, int> edge_endpoints(const IntMatrix& b1, int c) {
    int head = -1, tail = -1;
    for (int r = 0; r < b1.rows(); ++r) {
        if (b1.at(r, c) == 1) head = r;
        if (b1.at(r, c) == -1) tail = r;
    }
    return {head, tail};
}

}  // namespace

bool check_regular_two_skeleton(const CWChainData& data) {
    const int dims = static_cast<int>(data.cells.size());
    if (dims >= 2) {
        const IntMatrix& b1 = data.boundary(1);
        for (int c = 0; c < b1.cols(); ++c) {
            int nz = 0;
            bool plus = false, minus = false, unit = true;
            for (int r = 0; r < b1.rows(); ++r) {
                const Int& v = b1.at(r, c);
                if (v == 0) continue;
                ++nz;
                if (v == 1) plus = true;
                else if (v == -1) minus = true;
                else unit = false;
            }
            if (nz != 2 || !plus || !minus || !unit) return false;
        }
    }
    if (dims >= 3) {
        const IntMatrix& b1 = data.boundary(1);
        const IntMatrix& b2 = data.boundary(2);
        for (int c = 0; c < b2.cols(); ++c) {
            std::vector<int> edges;
            for (int r = 0; r < b2.rows(); ++r) {
                const Int& v = b2.at(r, c);
                if (v == 0) continue;
                if (v != 1 && v != -1) return false;
                edges.push_back(r);
            }
            if (edges.empty()) return false;
            // each vertex of the support must meet exactly two support edges,
            // and the support must be connected: a single simple closed cycle
            std::map<int, int> degree;
            std::map<int, std::vector<std::size_t>> incident;
            for (std::size_t k = 0; k < edges.size(); ++k) {
                auto [head, tail] = edge_endpoints(b1, edges[k]);
                ++degree[head];
                ++degree[tail];
                incident[head].push_back(k);
                incident[tail].push_back(k);
            }
            for (const auto& [v, deg] : degree)
                if (deg != 2) return false;
            std::vector<bool> seen(edges.size(), false);
            std::vector<std::size_t> stack{0};
            seen[0] = true;
            std::size_t reached = 1;
            while (!stack.empty()) {
                std::size_t k = stack.back();
                stack.pop_back();
                auto [head, tail] = edge_endpoints(b1, edges[k]);
                for (int v : {head, tail})
                    for (std::size_t other : incident[v])
                        if (!seen[other]) {
                            seen[other] = true;
                            ++reached;
                            stack.push_back(other);
                        }
            }
            if (reached != edges.size()) return false;
        }
    }
    return true;
}

BasedChainComplex cellular_chain_complex(const CWChainData& data, Scalar p) {
    BasedChainComplex bc;
    bc.p = p;
    bc.cells = data.cells;
    for (const IntMatrix& b : data.boundaries) bc.d.push_back(b.mod(p));
    return bc;
}

namespace {

void sort_poset(LabeledPoset& poset) {
    std::sort(poset.elements.begin(), poset.elements.end(),
              [](const PosetElement& a, const PosetElement& b) {
                  if (a.rank != b.rank) return a.rank < b.rank;
                  return a.id < b.id;
              });
    std::sort(poset.covers.begin(), poset.covers.end());
}

}  // namespace

LabeledPoset face_poset(const CWChainData& data, Scalar p) {
    LabeledPoset poset;
    for (int d = 0; d < static_cast<int>(data.cells.size()); ++d)
        for (const auto& cell : data.cells[static_cast<std::size_t>(d)])
            poset.elements.push_back({cell.id, d, cell.mdeg});
    for (int d = 1; d < static_cast<int>(data.cells.size()); ++d) {
        FpMatrix b = data.boundary(d).mod(p);
        for (const auto& [rc, v] : b.entries()) {
            (void)v;
            poset.covers.push_back({data.cells[static_cast<std::size_t>(d) - 1][static_cast<std::size_t>(rc.first)].id,
                                    data.cells[static_cast<std::size_t>(d)][static_cast<std::size_t>(rc.second)].id});
        }
    }
    sort_poset(poset);
    return poset;
}

namespace {

struct MatchState {
    const CWChainData& data;
    const GradedFreeComplex& res;
    std::vector<FpMatrix> bmod;               // boundaries mod p
    std::vector<std::vector<int>> assignment; // assignment[i][g] = cell index for frame-i generator g
    int deepest = 0;

    bool column_consistent(int degree, int gen, int cell) {
        // degree >= 1: compare column `gen` of D_degree with column `cell`
        // of B_degree under the completed bijection one level down
        const FpMatrix& d = res.differential(degree);
        const FpMatrix& b = bmod[static_cast<std::size_t>(degree) - 1];
        const auto& eta_prev = assignment[static_cast<std::size_t>(degree) - 1];
        for (int r = 0; r < d.rows(); ++r)
            if (d.get(r, gen) != b.get(eta_prev[static_cast<std::size_t>(r)], cell)) return false;
        return true;
    }

    bool extend(int degree, int gen, std::vector<bool>& used) {
        const int ncells = static_cast<int>(data.cells[static_cast<std::size_t>(degree)].size());
        if (gen == ncells) return next_degree(degree);
        const auto& gen_mdeg = res.frames[static_cast<std::size_t>(degree)][static_cast<std::size_t>(gen)].mdeg;
        for (int cell = 0; cell < ncells; ++cell) {
            if (used[static_cast<std::size_t>(cell)]) continue;
            if (!(*data.cells[static_cast<std::size_t>(degree)][static_cast<std::size_t>(cell)].mdeg == gen_mdeg)) continue;
            if (degree >= 1 && !column_consistent(degree, gen, cell)) continue;
            assignment[static_cast<std::size_t>(degree)][static_cast<std::size_t>(gen)] = cell;
            used[static_cast<std::size_t>(cell)] = true;
            if (extend(degree, gen + 1, used)) return true;
            used[static_cast<std::size_t>(cell)] = false;
        }
        return false;
    }

    bool next_degree(int degree) {
        deepest = std::max(deepest, degree + 1);
        if (degree + 1 >= static_cast<int>(data.cells.size())) return true;
        std::vector<bool> used(data.cells[static_cast<std::size_t>(degree) + 1].size(), false);
        return extend(degree + 1, 0, used);
    }
};

}  // namespace

SupportReport check_supports_cw(const CWChainData& data, const GradedFreeComplex& res) {
    SupportReport rep;
    for (int d = 0; d < static_cast<int>(data.cells.size()); ++d)
        for (const auto& cell : data.cells[static_cast<std::size_t>(d)])
            if (!cell.mdeg) {
                rep.reason = "ungraded";
                rep.degree = d;
                return rep;
            }

    const int levels = std::max(static_cast<int>(data.cells.size()), res.length());
    for (int i = 0; i < levels; ++i) {
        std::size_t ncells = i < static_cast<int>(data.cells.size()) ? data.cells[static_cast<std::size_t>(i)].size() : 0;
        std::size_t ngens = i < res.length() ? res.frames[static_cast<std::size_t>(i)].size() : 0;
        if (ncells != ngens) {
            rep.reason = "cardinality";
            rep.degree = i;
            return rep;
        }
        if (ncells == 0) continue;
        std::multiset<std::vector<int>> cell_degs, gen_degs;
        for (const auto& cell : data.cells[static_cast<std::size_t>(i)]) cell_degs.insert(cell.mdeg->exponents());
        for (const auto& g : res.frames[static_cast<std::size_t>(i)]) gen_degs.insert(g.mdeg.exponents());
        if (cell_degs != gen_degs) {
            rep.reason = "degree-multiset";
            rep.degree = i;
            return rep;
        }
    }

    MatchState state{data, res, {}, {}, 0};
    for (const IntMatrix& b : data.boundaries) state.bmod.push_back(b.mod(res.p));
    for (const auto& level : data.cells) state.assignment.emplace_back(level.size(), -1);

    bool found = data.cells.empty() ? true : [&] {
        std::vector<bool> used(data.cells[0].size(), false);
        return state.extend(0, 0, used);
    }();

    if (!found) {
        rep.reason = "incidence";
        rep.degree = state.deepest;
        return rep;
    }
    rep.supported = true;
    for (int i = 0; i < static_cast<int>(data.cells.size()); ++i) {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (std::size_t g = 0; g < state.assignment[static_cast<std::size_t>(i)].size(); ++g)
            pairs.push_back({res.frames[static_cast<std::size_t>(i)][g].id,
                             data.cells[static_cast<std::size_t>(i)]
                                       [static_cast<std::size_t>(state.assignment[static_cast<std::size_t>(i)][g])].id});
        rep.eta.push_back(std::move(pairs));
    }
    return rep;
}

GradedFreeComplex homogenize(const CWChainData& data, Scalar p) {
    GradedFreeComplex res;
    res.p = p;
    int nvars = -1;
    for (const auto& level : data.cells)
        for (const auto& cell : level) {
            if (!cell.mdeg) throw GradingViolation("cell '" + cell.id + "' has no multidegree");
            if (nvars < 0) nvars = cell.mdeg->size();
            if (cell.mdeg->size() != nvars)
                throw GradingViolation("cell '" + cell.id + "' multidegree length mismatch");
        }
    if (nvars < 0) nvars = 0;
    for (int i = 1; i <= nvars; ++i) res.variables.push_back("x" + std::to_string(i));
    for (const auto& level : data.cells) {
        std::vector<Generator> frame;
        for (const auto& cell : level) frame.push_back({cell.id, *cell.mdeg});
        res.frames.push_back(std::move(frame));
    }
    for (int d = 1; d < static_cast<int>(data.cells.size()); ++d) {
        FpMatrix b = data.boundary(d).mod(p);
        for (const auto& [rc, v] : b.entries()) {
            (void)v;
            const auto& lower = data.cells[static_cast<std::size_t>(d) - 1][static_cast<std::size_t>(rc.first)];
            const auto& upper = data.cells[static_cast<std::size_t>(d)][static_cast<std::size_t>(rc.second)];
            if (!lower.mdeg->divides(*upper.mdeg))
                throw GradingViolation("multidegree of '" + lower.id + "' does not divide that of '" +
                                       upper.id + "' along a nonzero incidence");
        }
        res.diffs.push_back(std::move(b));
    }
    return res;
}

BasedChainComplex dehomogenize(const GradedFreeComplex& res) {
    BasedChainComplex bc;
    bc.p = res.p;
    for (const auto& frame : res.frames) {
        std::vector<Cell> level;
        for (const auto& g : frame) level.push_back({g.id, g.mdeg});
        bc.cells.push_back(std::move(level));
    }
    bc.d = res.diffs;
    return bc;
}

namespace {

std::string face_id(const std::vector<int>& face) {
    std::string id = "c";
    for (std::size_t k = 0; k < face.size(); ++k) {
        if (k) id += ".";
        id += std::to_string(face[k]);
    }
    return id;
}

}  // namespace

CWChainData simplicial_cw(const std::vector<std::vector<int>>& facets) {
    std::set<std::vector<int>> faces;
    for (const auto& facet : facets) {
        std::vector<int> sorted = facet;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (sorted.empty()) throw Error("empty facet");
        // all nonempty subsets
        const std::size_t n = sorted.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<int> face;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (std::size_t{1} << k)) face.push_back(sorted[k]);
            faces.insert(face);
        }
    }
    int maxdim = 0;
    for (const auto& f : faces) maxdim = std::max(maxdim, static_cast<int>(f.size()) - 1);

    CWChainData data;
    std::vector<std::vector<std::vector<int>>> by_dim(static_cast<std::size_t>(maxdim) + 1);
    for (const auto& f : faces) by_dim[f.size() - 1].push_back(f);
    for (auto& level : by_dim) std::sort(level.begin(), level.end());

    for (const auto& level : by_dim) {
        std::vector<Cell> cells;
        for (const auto& f : level) cells.push_back({face_id(f), std::nullopt});
        data.cells.push_back(std::move(cells));
    }
    for (int d = 1; d <= maxdim; ++d) {
        std::map<std::vector<int>, int> pos;
        for (std::size_t r = 0; r < by_dim[static_cast<std::size_t>(d) - 1].size(); ++r)
            pos[by_dim[static_cast<std::size_t>(d) - 1][r]] = static_cast<int>(r);
        IntMatrix b(static_cast<int>(by_dim[static_cast<std::size_t>(d) - 1].size()),
                    static_cast<int>(by_dim[static_cast<std::size_t>(d)].size()));
        for (std::size_t col = 0; col < by_dim[static_cast<std::size_t>(d)].size(); ++col) {
            const auto& f = by_dim[static_cast<std::size_t>(d)][col];
            for (std::size_t k = 0; k < f.size(); ++k) {
                std::vector<int> sub = f;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
                b.at(pos.at(sub), static_cast<int>(col)) = (k % 2 == 0) ? 1 : -1;
            }
        }
        data.boundaries.push_back(std::move(b));
    }
    return data;
}

CWChainData lcm_labeled_simplicial_cw(const MonomialIdeal& ideal,
                                      const std::vector<std::vector<int>>& facets) {
    const int q = static_cast<int>(ideal.generators.size());
    CWChainData data = simplicial_cw(facets);
    for (auto& level : data.cells)
        for (auto& cell : level) {
            // recover the vertex list from the id ("c0.2.3" -> {0,2,3})
            Multidegree m = Multidegree::zero(ideal.nvars());
            std::size_t pos = 1;
            while (pos < cell.id.size()) {
                std::size_t next = cell.id.find('.', pos);
                if (next == std::string::npos) next = cell.id.size();
                int v = std::stoi(cell.id.substr(pos, next - pos));
                if (v < 0 || v >= q) throw Error("facet vertex " + std::to_string(v) + " out of range");
                m = lcm(m, ideal.generators[static_cast<std::size_t>(v)]);
                pos = next + 1;
            }
            cell.mdeg = m;
        }
    return data;
}

}  // namespace cwres
