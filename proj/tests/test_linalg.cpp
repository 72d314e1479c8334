#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "esla/linalg.hpp"

using namespace esla::linalg;
using esla::cyclo::Cyc;
using esla::cyclo::rat;

namespace {

Mat random_mat(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> e(-3, 3);
    Mat m(r, c);
    for (auto& x : m.a) x = Cyc(e(rng));
    return m;
}

} // namespace

TEST_CASE("rref, rank and nullspace agree") {
    std::mt19937 rng(41);
    for (int t = 0; t < 25; ++t) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Mat A = random_mat(rng, r, c);
        std::size_t rk = rank(A);
        auto ns = nullspace(A);
        CHECK(rk + ns.size() == c);
        for (const auto& v : ns) CHECK(is_zero_vec(A * v));
    }
}

TEST_CASE("solve and inverse") {
    std::mt19937 rng(43);
    for (int t = 0; t < 20; ++t) {
        Mat A = random_mat(rng, 4, 4);
        auto inv = inverse(A);
        if (!inv) {
            CHECK(rank(A) < 4);
            continue;
        }
        CHECK(*inv * A == Mat::identity(4));
        Vec b(4);
        for (auto& x : b) x = Cyc(static_cast<long>(rng() % 7) - 3);
        auto x = solve(A, b);
        REQUIRE(x.has_value());
        CHECK(A * *x == b);
    }
    // inconsistent system
    Mat A(2, 1);
    A.at(0, 0) = Cyc(1);
    A.at(1, 0) = Cyc(1);
    CHECK(!solve(A, Vec{Cyc(1), Cyc(2)}).has_value());
}

TEST_CASE("cyclotomic entries eliminate exactly") {
    const auto& k = esla::cyclo::constants();
    Mat A(2, 2);
    A.at(0, 0) = k.sqrt2;
    A.at(0, 1) = Cyc(1);
    A.at(1, 0) = Cyc(1);
    A.at(1, 1) = k.sqrt2 * Cyc(rat(1, 2));
    // det = sqrt2 * sqrt2/2 - 1 = 0: rank 1
    CHECK(rank(A) == 1);
    CHECK(nullspace(A).size() == 1);
}

TEST_CASE("span basis tracks rank incrementally") {
    std::mt19937 rng(47);
    for (int t = 0; t < 10; ++t) {
        Mat A = random_mat(rng, 6, 5);
        SpanBasis sb(5);
        Mat sofar(0, 5);
        for (std::size_t i = 0; i < 6; ++i) {
            Vec row(5);
            for (std::size_t j = 0; j < 5; ++j) row[j] = A.at(i, j);
            sofar.rows += 1;
            sofar.a.insert(sofar.a.end(), row.begin(), row.end());
            bool grew = sb.add(row);
            CHECK(sb.rank() == rank(sofar));
            CHECK(sb.contains(row));
            (void)grew;
        }
    }
}
