#include "scopt/candidates.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>

namespace scopt {

namespace {

using Walk = std::vector<std::uint8_t>;

// Lexicographically smallest representative over the dihedral action: g even
// rotations (start at any column slot) times two directions.
Walk canonical(const Walk& w) {
    const int n = static_cast<int>(w.size());
    Walk best = w;
    Walk cand(n);
    for (int s = 0; s < n; s += 2) {
        for (int t = 0; t < n; ++t) cand[t] = w[(s + t) % n];
        if (cand < best) best = cand;
        for (int t = 0; t < n; ++t) cand[t] = w[(s - t % n + n) % n];
        if (cand < best) best = cand;
    }
    return best;
}

bool sorted_cyclic_columns(const Walk& w) {
    // 4x4-span walks: keep those whose column visit order is the sorted cyclic
    // order (0,1,2,3), i.e. opposite column slots hold {0,2} and {1,3}.
    const std::set<std::uint8_t> a{w[0], w[4]};
    const std::set<std::uint8_t> b{w[2], w[6]};
    return (a == std::set<std::uint8_t>{0, 2} && b == std::set<std::uint8_t>{1, 3}) ||
           (a == std::set<std::uint8_t>{1, 3} && b == std::set<std::uint8_t>{0, 2});
}

Structure classify(int r, int c) {
    const int lo = std::min(r, c), hi = std::max(r, c);
    if (lo == 2 && hi == 2) return Structure::S1;
    if (lo == 2 && hi == 3) return Structure::S2;
    if (lo == 3 && hi == 3) return Structure::S3;
    if (lo == 2 && hi == 4) return Structure::S4;
    if (lo == 3 && hi == 4) return Structure::S5;
    return Structure::S6;
}

// Canonical walks on an r x c grid using every row and column, found by brute
// force. Grids are at most 4x4 so this is cheap; results are cached.
std::vector<Walk> grid_templates(int g, int r, int c, Catalog catalog) {
    static std::map<std::tuple<int, int, int, Catalog>, std::vector<Walk>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(g, r, c, catalog);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::set<Walk> seen;
    std::vector<int> js(g), is(g);
    // enumerate column sequences then row sequences, both non-backtracking and
    // surjective onto their index ranges
    const auto next_seq = [](std::vector<int>& v, int base) {
        for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k) {
            if (++v[k] < base) return true;
            v[k] = 0;
        }
        return false;
    };
    std::fill(js.begin(), js.end(), 0);
    do {
        bool ok = true;
        int jmask = 0;
        for (int k = 0; k < g && ok; ++k) {
            if (js[k] == js[(k + 1) % g]) ok = false;
            jmask |= 1 << js[k];
        }
        if (!ok || jmask != (1 << c) - 1) continue;
        std::fill(is.begin(), is.end(), 0);
        do {
            bool rok = true;
            int imask = 0;
            for (int k = 0; k < g && rok; ++k) {
                if (is[k] == is[(k + 1) % g]) rok = false;
                imask |= 1 << is[k];
            }
            if (!rok || imask != (1 << r) - 1) continue;
            Walk w(2 * g);
            for (int k = 0; k < g; ++k) {
                w[2 * k] = static_cast<std::uint8_t>(js[k]);
                w[2 * k + 1] = static_cast<std::uint8_t>(is[k]);
            }
            seen.insert(canonical(w));
        } while (next_seq(is, r));
    } while (next_seq(js, c));

    std::vector<Walk> out(seen.begin(), seen.end());
    if (catalog == Catalog::Tracked && r == 4 && c == 4) {
        std::erase_if(out, [](const Walk& w) { return !sorted_cyclic_columns(w); });
    }
    cache[key] = out;
    return out;
}

}  // namespace

CandidateList enumerate_candidates(int gamma, int kappa, int g, Catalog catalog) {
    if (g != 3 && g != 4 && g != 2) throw ValidationError("enumerate_candidates: g must be 2, 3 or 4");
    if (gamma < 2 || kappa < 2) throw ValidationError("enumerate_candidates: gamma, kappa must be >= 2");
    if (gamma > 64 || kappa > 64) throw ValidationError("enumerate_candidates: gamma, kappa must be <= 64");

    CandidateList list;
    list.g = g;
    list.gamma = gamma;
    list.kappa = kappa;

    std::vector<int> rsel, csel;
    for (int r = 2; r <= std::min(g, gamma); ++r) {
        for (int c = 2; c <= std::min(g, kappa); ++c) {
            const auto temps = grid_templates(g, r, c, catalog);
            if (temps.empty()) continue;
            const Structure cls = classify(r, c);

            rsel.assign(r, 0);
            for (int k = 0; k < r; ++k) rsel[k] = k;
            const auto next_combo = [](std::vector<int>& v, int n) {
                const int m = static_cast<int>(v.size());
                for (int k = m - 1; k >= 0; --k) {
                    if (v[k] < n - (m - k)) {
                        ++v[k];
                        for (int t = k + 1; t < m; ++t) v[t] = v[t - 1] + 1;
                        return true;
                    }
                }
                return false;
            };
            do {
                csel.assign(c, 0);
                for (int k = 0; k < c; ++k) csel[k] = k;
                do {
                    for (const Walk& w : temps) {
                        for (int k = 0; k < g; ++k) {
                            list.nodes.push_back(static_cast<std::uint8_t>(csel[w[2 * k]]));
                            list.nodes.push_back(static_cast<std::uint8_t>(rsel[w[2 * k + 1]]));
                        }
                        list.structure.push_back(cls);
                    }
                } while (next_combo(csel, kappa));
            } while (next_combo(rsel, gamma));
        }
    }
    return list;
}

NodeCandidateIndex build_node_index(const CandidateList& list) {
    NodeCandidateIndex idx;
    idx.gamma = list.gamma;
    idx.kappa = list.kappa;
    idx.cells.resize(static_cast<std::size_t>(list.gamma) * list.kappa);
    const int g = list.g;
    std::vector<std::int8_t> coef(static_cast<std::size_t>(list.gamma) * list.kappa, 0);
    std::vector<std::int64_t> stamp(coef.size(), -1);
    std::vector<int> touched;
    for (std::int64_t cand = 0; cand < list.count(); ++cand) {
        const std::uint8_t* w = list.candidate(cand);
        touched.clear();
        for (int k = 0; k < 2 * g; k += 2) {
            const int i = w[k + 1];
            const int j = w[k];
            const int j2 = w[(k + 2) % (2 * g)];
            for (const auto& [cell, sign] :
                 {std::pair{i * list.kappa + j, +1}, std::pair{i * list.kappa + j2, -1}}) {
                if (stamp[cell] != cand) {
                    stamp[cell] = cand;
                    coef[cell] = 0;
                    touched.push_back(cell);
                }
                coef[cell] = static_cast<std::int8_t>(coef[cell] + sign);
            }
        }
        for (int cell : touched) {
            // a cell visited with canceling signs still counts as traversed once
            idx.cells[cell].push_back({static_cast<std::int32_t>(cand), coef[cell]});
        }
    }
    return idx;
}

}  // namespace scopt
