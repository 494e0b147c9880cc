#include "scopt/counting.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace scopt {

std::int64_t partition_sum(const std::uint8_t* walk, int g, const PartitioningMatrix& p) {
    std::int64_t sum = 0;
    for (int k = 0; k < 2 * g; k += 2) {
        const int i = walk[k + 1];
        sum += p(i, walk[k]) - p(i, walk[(k + 2) % (2 * g)]);
    }
    return sum;
}

std::int64_t count_surviving_serial(const CandidateList& list, const PartitioningMatrix& p) {
    std::int64_t n = 0;
    for (std::int64_t c = 0; c < list.count(); ++c) {
        if (partition_sum(list.candidate(c), list.g, p) == 0) ++n;
    }
    return n;
}

std::int64_t count_surviving(const CandidateList& list, const PartitioningMatrix& p) {
    std::int64_t n = 0;
    const std::int64_t total = list.count();
#pragma omp parallel for reduction(+ : n) schedule(static)
    for (std::int64_t c = 0; c < total; ++c) {
        if (partition_sum(list.candidate(c), list.g, p) == 0) ++n;
    }
    return n;
}

ProtographCounts count_protograph_candidates(const PartitioningMatrix& p, Catalog catalog) {
    ProtographCounts out;
    out.count6 = count_surviving(enumerate_candidates(p.rows(), p.cols(), 3, catalog), p);
    out.count8 = count_surviving(enumerate_candidates(p.rows(), p.cols(), 4, catalog), p);
    return out;
}

WalkEval eval_walk(const std::uint8_t* walk, int g, const PartitioningMatrix& p,
                   const LiftingMatrix& l, int z) {
    // Column block offsets r_k and circulant offsets v_k along the walk; row
    // node offsets are s_k = r_k + P and u_k = v_k - L.
    std::int64_t roff[4], voff[4], soff[4], uoff[4];
    std::int64_t r = 0, v = 0;
    for (int k = 0; k < g; ++k) {
        const int i = walk[2 * k + 1];
        const int j = walk[2 * k];
        const int j2 = walk[(2 * k + 2) % (2 * g)];
        roff[k] = r;
        voff[k] = v;
        soff[k] = r + p(i, j);
        uoff[k] = v - l(i, j);
        r = soff[k] - p(i, j2);
        v = uoff[k] + l(i, j2);
    }
    WalkEval ev;
    ev.protograph = (r == 0);
    ev.tanner = ev.protograph && (((v % z) + z) % z == 0);
    std::int64_t mn = 0, mx = 0;
    for (int k = 0; k < g; ++k) {
        mn = std::min(mn, roff[k]);
        mx = std::max(mx, roff[k]);
    }
    ev.span = mx - mn;
    ev.multiplicity = z;
    if (!ev.tanner) return ev;

    // two walk slots on the same base node collide iff both offsets agree
    for (int a = 0; a < g && !ev.degenerate; ++a) {
        for (int b = a + 1; b < g; ++b) {
            if (walk[2 * a] == walk[2 * b] && roff[a] == roff[b] &&
                (voff[a] - voff[b]) % z == 0) {
                ev.degenerate = true;
                break;
            }
            if (walk[2 * a + 1] == walk[2 * b + 1] && soff[a] == soff[b] &&
                (uoff[a] - uoff[b]) % z == 0) {
                ev.degenerate = true;
                break;
            }
        }
    }
    // the doubled 2x2 traversal: its lift is the same cycle at shift z/2
    if (!ev.degenerate && g == 4 && walk[0] == walk[4] && walk[2] == walk[6] &&
        walk[1] == walk[5] && walk[3] == walk[7]) {
        ev.multiplicity = z / 2;
    }
    return ev;
}

std::int64_t walk_cycle_count(const WalkEval& ev, int replicas) {
    if (!ev.tanner || ev.degenerate) return 0;
    const std::int64_t placements = std::max<std::int64_t>(0, replicas - ev.span);
    return ev.multiplicity * placements;
}

namespace {

template <bool Parallel>
TannerCounts count_tanner_impl(const CodeParameters& params, const PartitioningMatrix& p,
                               const LiftingMatrix& l) {
    TannerCounts out;
    const int z = params.circulant_size;
    for (int g : {3, 4}) {
        const CandidateList list = enumerate_candidates(params.gamma, params.kappa, g,
                                                        Catalog::Complete);
        std::int64_t survivors = 0, full = 0;
        const std::int64_t total = list.count();
#pragma omp parallel for reduction(+ : survivors, full) schedule(static) if (Parallel)
        for (std::int64_t c = 0; c < total; ++c) {
            const WalkEval ev = eval_walk(list.candidate(c), g, p, l, z);
            if (ev.tanner) ++survivors;
            full += walk_cycle_count(ev, params.replicas);
        }
        if (g == 3) {
            out.survivors6 = survivors;
            out.full6 = full;
            out.period6 = z * survivors;
        } else {
            out.survivors8 = survivors;
            out.full8 = full;
            out.period8 = z * survivors;
        }
    }
    return out;
}

}  // namespace

TannerCounts count_tanner_cycles(const CodeParameters& params, const PartitioningMatrix& p,
                                 const LiftingMatrix& l) {
    return count_tanner_impl<true>(params, p, l);
}

TannerCounts count_tanner_cycles_serial(const CodeParameters& params, const PartitioningMatrix& p,
                                        const LiftingMatrix& l) {
    return count_tanner_impl<false>(params, p, l);
}

Matrix<std::uint8_t> build_parity_matrix(const CodeParameters& params, const PartitioningMatrix& p,
                                         const LiftingMatrix& l) {
    const int z = params.circulant_size;
    const std::int64_t edges = static_cast<std::int64_t>(params.gamma) * params.kappa * z *
                               params.replicas;
    if (edges > 100000) {
        std::ostringstream os;
        os << "build_parity_matrix: " << edges << " ones exceed the 100000 guard";
        throw ValidationError(os.str());
    }
    Matrix<std::uint8_t> h(params.gamma * z * (params.replicas + params.memory),
                           params.kappa * z * params.replicas);
    for (int r = 0; r < params.replicas; ++r) {
        for (int i = 0; i < params.gamma; ++i) {
            for (int j = 0; j < params.kappa; ++j) {
                const int block = r + p(i, j);
                const int e = l(i, j);
                for (int u = 0; u < z; ++u) {
                    h(block * params.gamma * z + i * z + u, r * params.kappa * z + j * z + (u + e) % z) = 1;
                }
            }
        }
    }
    return h;
}

namespace {

struct WalkSearch {
    const std::vector<std::vector<int>>& rows_of_col;
    const std::vector<std::vector<int>>& cols_of_row;
    int g;
    std::int64_t count = 0;
    std::vector<int> path;
    std::vector<bool> col_used, row_used;

    // Depth-first over alternating col/row paths. Each simple cycle is counted
    // once: the start is its smallest column and the first row is smaller than
    // the closing row.
    void from_col(int start, int col, int depth) {
        if (depth == 2 * g - 1) return;  // paths end on a row
        for (int row : rows_of_col[col]) {
            if (row_used[row]) continue;
            if (depth + 1 == 2 * g - 1) {
                if (path[1] < row &&
                    std::find(cols_of_row[row].begin(), cols_of_row[row].end(), start) !=
                        cols_of_row[row].end()) {
                    ++count;
                }
                continue;
            }
            row_used[row] = true;
            path.push_back(row);
            from_row(start, row, depth + 1);
            path.pop_back();
            row_used[row] = false;
        }
    }

    void from_row(int start, int row, int depth) {
        for (int col : cols_of_row[row]) {
            if (col <= start || col_used[col]) continue;
            col_used[col] = true;
            path.push_back(col);
            from_col(start, col, depth + 1);
            path.pop_back();
            col_used[col] = false;
        }
    }
};

}  // namespace

std::int64_t brute_force_tanner_count(const Matrix<std::uint8_t>& h, int g) {
    std::int64_t ones = 0;
    for (auto b : h.data()) ones += b;
    if (ones > 100000) {
        std::ostringstream os;
        os << "brute_force_tanner_count: " << ones << " edges exceed the 100000 guard";
        throw ValidationError(os.str());
    }
    std::vector<std::vector<int>> rows_of_col(h.cols()), cols_of_row(h.rows());
    for (int i = 0; i < h.rows(); ++i) {
        for (int j = 0; j < h.cols(); ++j) {
            if (h(i, j)) {
                rows_of_col[j].push_back(i);
                cols_of_row[i].push_back(j);
            }
        }
    }
    WalkSearch search{rows_of_col, cols_of_row, g, 0, {}, {}, {}};
    search.col_used.assign(h.cols(), false);
    search.row_used.assign(h.rows(), false);
    for (int c = 0; c < h.cols(); ++c) {
        search.col_used[c] = true;
        search.path = {c};
        search.from_col(c, c, 0);
        search.col_used[c] = false;
    }
    return search.count;
}

CycleStats compute_stats(const CodeParameters& params, const PartitioningMatrix& p,
                         const LiftingMatrix& l, double cycle6_weight) {
    CycleStats s;
    const ProtographCounts pc = count_protograph_candidates(p);
    s.protograph_candidates6 = pc.count6;
    s.protograph_candidates8 = pc.count8;
    const TannerCounts tc = count_tanner_cycles(params, p, l);
    s.tanner_cycles6 = tc.full6;
    s.tanner_cycles8 = tc.full8;
    s.tanner_period6 = tc.period6;
    s.tanner_period8 = tc.period8;
    s.weighted_objective = cycle6_weight * static_cast<double>(tc.full6) +
                           static_cast<double>(tc.full8);
    return s;
}

}  // namespace scopt
