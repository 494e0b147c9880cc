#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "scopt/candidates.hpp"
#include "scopt/counting.hpp"
#include "scopt/metrics.hpp"
#include "scopt/rng.hpp"
#include "support/oracles.hpp"

using namespace scopt;

namespace {

std::map<Structure, std::int64_t> per_structure(const CandidateList& list) {
    std::map<Structure, std::int64_t> out;
    for (auto s : list.structure) out[s] += 1;
    return out;
}

}  // namespace

TEST_CASE("tracked per-structure totals match the closed forms") {
    for (int gamma = 2; gamma <= 6; ++gamma) {
        for (int kappa = 2; kappa <= 6; ++kappa) {
            const StructureWeights w = StructureWeights::compute(gamma, kappa);
            const auto counts = per_structure(enumerate_candidates(gamma, kappa, 4));
            auto get = [&](Structure s) {
                auto it = counts.find(s);
                return it == counts.end() ? 0 : it->second;
            };
            CHECK(get(Structure::S1) == w.w1);
            CHECK(get(Structure::S2) == w.w2);
            CHECK(get(Structure::S3) == w.w3);
            CHECK(get(Structure::S4) + get(Structure::S5) + get(Structure::S6) == w.w4);

            CHECK(enumerate_candidates(gamma, kappa, 3).count() ==
                  cycle6_candidate_count(gamma, kappa));
        }
    }
}

TEST_CASE("complete catalog has 72 traversals per 4x4 submatrix") {
    // all Hamiltonian cycles of the complete bipartite graph on 4+4 nodes; the
    // tracked family keeps the 24 with columns in sorted cyclic order
    const auto tracked = per_structure(enumerate_candidates(4, 4, 4, Catalog::Tracked));
    const auto complete = per_structure(enumerate_candidates(4, 4, 4, Catalog::Complete));
    CHECK(tracked.at(Structure::S6) == 24);
    CHECK(complete.at(Structure::S6) == 72);
    // every other class is identical between the two catalogs
    for (auto s : {Structure::S1, Structure::S2, Structure::S3, Structure::S4, Structure::S5}) {
        CHECK(tracked.at(s) == complete.at(s));
    }
    // the catalogs coincide whenever fewer than 4 rows or columns are available
    CHECK(enumerate_candidates(3, 6, 4, Catalog::Tracked).count() ==
          enumerate_candidates(3, 6, 4, Catalog::Complete).count());
}

TEST_CASE("small enumerations") {
    CHECK(enumerate_candidates(3, 3, 3).count() == 6);
    const auto list = enumerate_candidates(2, 2, 4);
    CHECK(list.count() == 1);
    CHECK(list.structure[0] == Structure::S1);
}

TEST_CASE("candidates are canonical and unique") {
    const auto list = enumerate_candidates(3, 4, 4, Catalog::Complete);
    std::set<std::vector<std::uint8_t>> seen;
    for (std::int64_t c = 0; c < list.count(); ++c) {
        const std::uint8_t* w = list.candidate(c);
        std::vector<std::uint8_t> base(w, w + 8);
        // minimal under rotation by node pairs and reflection
        std::vector<std::uint8_t> variant(8);
        for (int s = 0; s < 8; s += 2) {
            for (int t = 0; t < 8; ++t) variant[t] = base[(s + t) % 8];
            CHECK(base <= variant);
            for (int t = 0; t < 8; ++t) variant[t] = base[(s - t + 16) % 8];
            CHECK(base <= variant);
        }
        // non-backtracking
        for (int k = 0; k < 4; ++k) {
            CHECK(base[2 * k] != base[(2 * k + 2) % 8]);
            CHECK(base[2 * k + 1] != base[(2 * k + 3) % 8]);
        }
        CHECK(seen.insert(base).second);
    }
}

TEST_CASE("node index lists each candidate once per traversed cell") {
    const auto list = enumerate_candidates(3, 4, 4, Catalog::Complete);
    const auto index = build_node_index(list);
    std::map<std::int32_t, int> appearances;
    for (const auto& cell : index.cells) {
        std::set<std::int32_t> in_cell;
        for (const auto& e : cell) {
            CHECK(in_cell.insert(e.candidate).second);  // no duplicates within a cell
            appearances[e.candidate] += 1;
        }
    }
    for (std::int64_t c = 0; c < list.count(); ++c) {
        const std::uint8_t* w = list.candidate(c);
        std::set<std::pair<int, int>> cells;
        for (int k = 0; k < 8; k += 2) {
            cells.insert({w[k + 1], w[k]});
            cells.insert({w[k + 1], w[(k + 2) % 8]});
        }
        CHECK(appearances[static_cast<std::int32_t>(c)] == static_cast<int>(cells.size()));
    }
}

TEST_CASE("node index coefficients reproduce the partition sum") {
    const auto list = enumerate_candidates(3, 4, 4, Catalog::Complete);
    const auto index = build_node_index(list);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto p = test::random_partition(3, 4, CouplingPattern::full(3), seed);
        std::vector<std::int64_t> via_index(list.count(), 0);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 4; ++j) {
                for (const auto& e : index.at(i, j)) via_index[e.candidate] += e.coef * p(i, j);
            }
        }
        for (std::int64_t c = 0; c < list.count(); ++c) {
            CHECK(via_index[c] == partition_sum(list.candidate(c), 4, p));
        }
    }
}
