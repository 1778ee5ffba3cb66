#include <catch2/catch_amalgamated.hpp>

#include <hilbertforge/bigraded.hpp>
#include <hilbertforge/hilbert_polynomial.hpp>

#include "oracles.hpp"

using namespace hilbertforge;

namespace {

std::vector<std::vector<int>> collect(long total, int parts) {
    std::vector<std::vector<int>> out;
    for (const auto& c : WeakCompositions(total, parts)) out.push_back(c);
    return out;
}

const std::vector<std::vector<int>> kWeightGrid = {{1, 1}, {1, 2}, {2, 2}, {1, 2, 3}};

}  // namespace

TEST_CASE("weak compositions stream in lexicographic order") {
    REQUIRE(collect(2, 2) == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
    REQUIRE(collect(0, 4) == std::vector<std::vector<int>>{{0, 0, 0, 0}});
    REQUIRE(collect(3, 3).size() == 10);
    REQUIRE(collect(-1, 3).empty());
    REQUIRE_THROWS_AS(WeakCompositions(2, 0), std::invalid_argument);

    for (int parts = 1; parts <= 5; ++parts) {
        for (long total = 0; total <= 10; ++total) {
            auto all = collect(total, parts);
            REQUIRE(Int(static_cast<long>(all.size())) == WeakCompositions::count(total, parts));
            for (size_t i = 0; i + 1 < all.size(); ++i) REQUIRE(all[i] < all[i + 1]);
            for (const auto& c : all) {
                int sum = 0;
                for (int v : c) {
                    REQUIRE(v >= 0);
                    sum += v;
                }
                REQUIRE(sum == total);
            }
        }
    }
}

TEST_CASE("strand decomposition") {
    BigradedAlgebra A(2, 2, {1, 1});
    REQUIRE(strand_decomposition(A, {0, 0}, 3) == ShiftMultiset{{3, 4}});
    REQUIRE(strand_decomposition(A, {2, 1}, 3) == ShiftMultiset{{4, 3}});

    BigradedAlgebra B(2, 2, {1, 2});
    REQUIRE(strand_decomposition(B, {0, 0}, 2) == ShiftMultiset{{2, 1}, {3, 1}, {4, 1}});

    REQUIRE(strand_decomposition(A, {0, 5}, 3).empty());

    for (int m = 1; m <= 5; ++m) {
        BigradedAlgebra C(2, m, std::vector<int>(m, 1));
        for (long b = 0; b <= 2; ++b) {
            for (long k = b; k <= b + 10; ++k) {
                long total = 0;
                for (const auto& [c, mult] : strand_decomposition(C, {0, b}, k)) total += mult;
                REQUIRE(Int(total) == binomial(k - b + m - 1, m - 1));
            }
        }
    }
}

TEST_CASE("strand coefficients and the constant-weight closed form") {
    BigradedAlgebra A(2, 2, {1, 1});
    for (long k = 0; k <= 8; ++k)
        for (long j = 0; j <= 2; ++j)
            REQUIRE(strand_coefficient(A, {0, 0}, k, 1, j) == (k + 1) * binomial(k, j));
    REQUIRE(strand_coefficient(A, {0, 0}, 3, 1, 2) == 12);
    REQUIRE(strand_coefficient(A, {2, 1}, 3, 1, 2) == 18);
    for (long k = 1; k <= 8; ++k)
        for (long j = 0; j <= 2; ++j)
            REQUIRE(strand_coefficient(A, {2, 1}, k, 1, j) == k * binomial(k + 1, j));

    BigradedAlgebra B(2, 2, {1, 2});
    REQUIRE(strand_coefficient(B, {0, 0}, 2, 0, 1) == 9);  // C(2,1)+C(3,1)+C(4,1)

    // below the twist the strand is the zero module
    REQUIRE(strand_coefficient(A, {0, 3}, 2, 0, 0) == 0);
    // out of the coefficient range
    REQUIRE_FALSE(strand_coefficient_in_range(A, 0, 2));
    REQUIRE(strand_coefficient(A, {0, 0}, 3, 0, 2) == 0);
}

TEST_CASE("coefficient bounds sandwich the value") {
    BigradedAlgebra B(2, 2, {1, 2});
    auto [lo, hi] = strand_coefficient_bounds(B, {0, 0}, 2, 1);
    REQUIRE(lo == 6);
    REQUIRE(hi == 12);
    REQUIRE(strand_coefficient(B, {0, 0}, 2, 0, 1) == 9);

    for (const auto& p : kWeightGrid) {
        BigradedAlgebra A(2, static_cast<int>(p.size()), p);
        bool all_equal_weights = true;
        for (int w : p) all_equal_weights = all_equal_weights && (w == p[0]);
        bool equality_everywhere = true;
        for (long a = 0; a <= 2; ++a) {
            for (long b = 0; b <= 2; ++b) {
                for (long k = b; k <= b + 8; ++k) {
                    for (long j = 0; j <= 4; ++j) {
                        Int value = composition_binomial_sum(p, a, k - b, j);
                        auto [lower, upper] = strand_coefficient_bounds(A, {a, b}, k, j);
                        REQUIRE(lower <= value);
                        REQUIRE(value <= upper);
                        if (j == 0) REQUIRE(lower == upper);
                        if (j >= 1 && k > b && value != upper) equality_everywhere = false;
                    }
                }
            }
        }
        REQUIRE(equality_everywhere == all_equal_weights);
    }
}

TEST_CASE("strand hilbert series") {
    BigradedAlgebra A(2, 2, {1, 1});
    REQUIRE(strand_hilbert_series(A, {0, 3}, 1).is_zero());

    auto hs = strand_hilbert_series(A, {0, 0}, 2);
    REQUIRE(hs.shift() == 2);
    REQUIRE(hs.numerator() == Polynomial<Int>(std::vector<Int>{Int(3)}));

    BigradedAlgebra B(2, 2, {1, 2});
    auto hs2 = strand_hilbert_series(B, {0, 0}, 2);
    REQUIRE(hs2.shift() == 2);
    REQUIRE(hs2.numerator() == Polynomial<Int>(std::vector<Int>{Int(1), Int(1), Int(1)}));
}

TEST_CASE("composition sums match the series route") {
    for (const auto& p : kWeightGrid) {
        BigradedAlgebra A(2, static_cast<int>(p.size()), p);
        for (long a = 0; a <= 2; ++a) {
            for (long b = 0; b <= 2; ++b) {
                for (long k = b; k <= b + 8; ++k) {
                    auto hs = strand_hilbert_series(A, {a, b}, k);
                    for (int i = 0; i <= 2; ++i) {
                        auto coeffs = extract_coefficients(hilbert_polynomial(hs, i));
                        for (long j = 0; j < static_cast<long>(coeffs.size()) && j <= 4; ++j)
                            REQUIRE(coeffs[j] == Rat(strand_coefficient(A, {a, b}, k, i, j)));
                    }
                }
            }
        }
    }
}

TEST_CASE("negative twists keep exact series") {
    BigradedAlgebra A(2, 2, {1, 1});
    auto hs = strand_hilbert_series(A, {-3, 0}, 1);
    REQUIRE(hs.shift() == -2);
    REQUIRE(hs.h_vector() == HVector{-2, {Int(2)}});
    REQUIRE(strand_coefficient(A, {-3, 0}, 1, 0, 1) == 2 * binomial(-2, 1));
}

TEST_CASE("rees strands are ideal powers") {
    auto m = MonomialIdeal::make(2, {{1, 0}, {0, 1}});
    REQUIRE(rees_strand(m, 2) == m.power(2));
    REQUIRE(rees_strand(m, 0).is_unit());
    auto I = MonomialIdeal::make(2, {{2, 0}, {1, 1}, {0, 3}});
    REQUIRE(rees_strand(I, 2) == I.power(2));
}

TEST_CASE("bigraded algebra validation") {
    REQUIRE_THROWS_AS(BigradedAlgebra(0, 2, {1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(BigradedAlgebra(2, 2, {1}), std::invalid_argument);
    REQUIRE_THROWS_AS(BigradedAlgebra(2, 2, {1, -1}), std::invalid_argument);
}
