#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <random>

#include "interlace/gf2.hpp"

using namespace interlace;

namespace {

SymBitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    SymBitMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (rows[i][j]) m.set(i, j, true);
    return m;
}

}  // namespace

TEST_SUITE("gf2") {
    TEST_CASE("rank of small matrices") {
        CHECK(SymBitMatrix(0).rank() == 0);
        CHECK(from_rows({{1}}).rank() == 1);
        CHECK(from_rows({{0}}).rank() == 0);
        CHECK(from_rows({{0, 1}, {1, 0}}).rank() == 2);
        CHECK(from_rows({{1, 1}, {1, 1}}).rank() == 1);
    }

    TEST_CASE("corank") {
        CHECK(SymBitMatrix(0).corank() == 0);
        CHECK(SymBitMatrix(2).corank() == 2);
        CHECK(from_rows({{0, 1}, {1, 0}}).corank() == 0);
    }

    TEST_CASE("principal submatrix") {
        SymBitMatrix m = from_rows({{1, 1, 0}, {1, 0, 1}, {0, 1, 0}});
        std::vector<std::size_t> all{0, 1, 2};
        CHECK(m.principal_submatrix(all) == m);
        CHECK(m.principal_submatrix(std::vector<std::size_t>{}).dim() == 0);
        std::vector<std::size_t> idx{0, 2};
        SymBitMatrix sub = m.principal_submatrix(idx);
        CHECK(sub.dim() == 2);
        CHECK(sub.at(0, 0));
        CHECK_FALSE(sub.at(0, 1));
        CHECK_FALSE(sub.at(1, 1));
    }

    TEST_CASE("submatrix index out of range") {
        SymBitMatrix m(2);
        std::vector<std::size_t> bad{0, 5};
        CHECK_THROWS_AS((void)m.principal_submatrix(bad), std::out_of_range);
    }

    TEST_CASE("symmetry is maintained by set") {
        SymBitMatrix m(3);
        m.set(0, 2, true);
        CHECK(m.at(2, 0));
        m.flip(2, 0);
        CHECK_FALSE(m.at(0, 2));
    }

    TEST_CASE("rank invariant under simultaneous permutation") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t n = 1 + rng() % 7;
            SymBitMatrix m(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    if (rng() % 2) m.set(i, j, true);
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            SymBitMatrix p(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    if (m.at(perm[i], perm[j])) p.set(i, j, true);
            CHECK(p.rank() == m.rank());
            CHECK(m.rank() + m.corank() == n);
        }
    }

    TEST_CASE("rank across word boundaries") {
        SymBitMatrix m(70);
        for (std::size_t i = 0; i < 70; ++i) m.set(i, i, true);
        CHECK(m.rank() == 70);
        // a path's adjacency has full rank for even vertex count
        SymBitMatrix chain(70);
        for (std::size_t i = 0; i + 1 < 70; ++i) chain.set(i, i + 1, true);
        CHECK(chain.rank() == 70);
    }
}
