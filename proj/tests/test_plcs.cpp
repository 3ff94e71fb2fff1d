#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "plcsnet/error.hpp"
#include "plcsnet/ingest.hpp"
#include "plcsnet/pair_matrix.hpp"
#include "plcsnet/plcs.hpp"

using namespace plcsnet;

namespace {

std::vector<double> random_walk(std::mt19937_64& rng, std::size_t n, double start = 100.0) {
    std::normal_distribution<double> step(0.5, 3.0);
    std::vector<double> v(n);
    double x = start;
    for (auto& e : v) e = (x += step(rng));
    return v;
}

std::vector<double> increments(std::size_t n, double exponent) {
    std::vector<double> d(n);
    for (std::size_t i = 1; i <= n; ++i) d[i - 1] = std::pow(static_cast<double>(i), exponent);
    return d;
}

void expect_fit_near(const FitResult& a, const FitResult& b, double tol) {
    EXPECT_NEAR(a.alpha, b.alpha, tol);
    EXPECT_NEAR(a.gamma, b.gamma, tol);
    EXPECT_NEAR(a.beta, b.beta, tol + 1e-6 * b.beta);
    EXPECT_NEAR(a.r_squared, b.r_squared, tol);
    EXPECT_EQ(a.tail_points, b.tail_points);
}

}  // namespace

TEST(CumulativeMd, Examples) {
    const std::vector<double> b = {5.0, -1.0, 3.5};
    std::vector<double> a = b;
    for (auto& x : a) x += 2.0;
    const auto m = cumulative_md(a, b);
    EXPECT_EQ(std::vector<double>(m.values().begin(), m.values().end()), (std::vector<double>{2, 4, 6}));

    const auto m2 = cumulative_md(std::vector<double>{1, 2, 4}, std::vector<double>{1, 1, 1});
    EXPECT_EQ(m2.at(1), 0.0);
    EXPECT_EQ(m2.at(2), 1.0);
    EXPECT_EQ(m2.at(3), 4.0);

    const auto zero = cumulative_md(b, b);
    for (double v : zero.values()) EXPECT_EQ(v, 0.0);
}

TEST(CumulativeMd, Errors) {
    EXPECT_THROW(cumulative_md(std::vector<double>{1, 2}, std::vector<double>{1}), ContractError);
    EXPECT_THROW(cumulative_md(std::vector<double>{}, std::vector<double>{}), ContractError);
    EXPECT_THROW(CumulativeMd(std::vector<double>{1, 0.5}), ContractError);
}

TEST(CumulativeMd, NondecreasingForRandomSeries) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_walk(rng, 1 + trial % 60);
        const auto b = random_walk(rng, a.size());
        const auto m = cumulative_md(a, b);
        for (std::size_t j = 1; j < m.size(); ++j) EXPECT_LE(m.values()[j - 1], m.values()[j]);
    }
}

TEST(LoglogPoints, AllPointsMapping) {
    PlcsConfig cfg;
    cfg.tail_points = std::nullopt;
    const auto pts = loglog_points(CumulativeMd({2, 4, 6}), cfg);
    ASSERT_EQ(pts.size(), 3u);
    for (std::size_t j = 1; j <= 3; ++j) {
        EXPECT_EQ(pts[j - 1].x, std::log(static_cast<double>(j)));
        EXPECT_EQ(pts[j - 1].y, std::log(2.0 * static_cast<double>(j)));
    }
}

TEST(LoglogPoints, TailTakesLargestJAndSkipsZeros) {
    std::vector<double> m(20, 0.0);
    for (std::size_t j = 15; j <= 20; ++j) m[j - 1] = static_cast<double>(j - 14);
    PlcsConfig cfg;
    cfg.tail_points = 10;
    const auto pts = loglog_points(CumulativeMd(m), cfg);
    ASSERT_EQ(pts.size(), 6u);
    EXPECT_EQ(pts.front().x, std::log(15.0));
    EXPECT_EQ(pts.back().x, std::log(20.0));
}

TEST(LoglogPoints, DegenerateInputs) {
    EXPECT_THROW(loglog_points(CumulativeMd(std::vector<double>(30, 0.0))), DegenerateSeriesError);
    std::vector<double> two(30, 0.0);
    two[28] = 1.0;
    two[29] = 2.0;
    EXPECT_THROW(loglog_points(CumulativeMd(two)), DegenerateSeriesError);
}

TEST(PlcsConfig, Validation) {
    PlcsConfig cfg;
    cfg.tail_points = 2;
    EXPECT_THROW(cfg.validate(), ContractError);
    cfg.tail_points = 3;
    cfg.min_md = 0.0;
    EXPECT_THROW(cfg.validate(), ContractError);
}

TEST(FitPowerLaw, ExactLine) {
    std::vector<LogLogPoint> pts;
    for (int j = 1; j <= 10; ++j) pts.push_back({std::log(j), std::log(j) + 0.7});
    const FitResult f = fit_power_law(pts);
    EXPECT_NEAR(f.alpha, 1.0, 1e-14);
    EXPECT_NEAR(f.gamma, 0.0, 1e-14);
    EXPECT_NEAR(f.intercept, 0.7, 1e-14);
    EXPECT_EQ(f.beta, 0.0);
    EXPECT_EQ(f.r_squared, 1.0);
    EXPECT_TRUE(std::isinf(f.t_statistic));
}

TEST(FitPowerLaw, ZeroSlopeHasBetaOne) {
    std::vector<LogLogPoint> pts;
    for (int x = 1; x <= 5; ++x) pts.push_back({static_cast<double>(x), static_cast<double>((x - 3) * (x - 3))});
    const FitResult f = fit_power_law(pts);
    EXPECT_EQ(f.alpha, 0.0);
    EXPECT_EQ(f.t_statistic, 0.0);
    EXPECT_EQ(f.beta, 1.0);
}

TEST(FitPowerLaw, Errors) {
    EXPECT_THROW(fit_power_law(std::vector<LogLogPoint>{{0, 1}, {1, 2}}), ContractError);
    EXPECT_THROW(fit_power_law(std::vector<LogLogPoint>{{1, 1}, {1, 2}, {1, 3}}), ContractError);
}

TEST(FitPowerLaw, MatchesNaiveOls) {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<std::size_t> len(3, 50);
    std::uniform_real_distribution<double> noise(-0.3, 0.3);
    std::uniform_real_distribution<double> slope(-2.0, 5.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = len(rng);
        const double s = slope(rng);
        std::vector<LogLogPoint> pts;
        std::vector<double> xs, ys;
        for (std::size_t j = 1; j <= n; ++j) {
            const double x = std::log(static_cast<double>(j));
            const double y = s * x + 1.3 + noise(rng);
            pts.push_back({x, y});
            xs.push_back(x);
            ys.push_back(y);
        }
        const FitResult f = fit_power_law(pts);
        const oracle::Line o = oracle::naive_ols(xs, ys);
        EXPECT_NEAR(f.alpha, o.slope, 1e-10 * std::max(1.0, std::fabs(o.slope)));
        EXPECT_NEAR(f.intercept, o.intercept, 1e-10 * std::max(1.0, std::fabs(o.intercept)));
    }
}

TEST(FitPowerLaw, RandomSeriesMatchNaiveOls) {
    std::mt19937_64 rng(23);
    PlcsConfig all;
    all.tail_points = std::nullopt;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 4 + trial % 47;
        const auto a = random_walk(rng, n);
        const auto b = random_walk(rng, n, 80.0);
        const auto pts = loglog_points(cumulative_md(a, b), all);
        std::vector<double> xs, ys;
        for (const auto& p : pts) {
            xs.push_back(p.x);
            ys.push_back(p.y);
        }
        const FitResult f = plcs_pair(a, b, all);
        const oracle::Line o = oracle::naive_ols(xs, ys);
        EXPECT_NEAR(f.alpha, o.slope, 1e-10 * std::max(1.0, std::fabs(o.slope)));
        EXPECT_NEAR(f.intercept, o.intercept, 1e-10 * std::max(1.0, std::fabs(o.intercept)));
    }
}

TEST(PlcsPair, ConstantOffsetIsExactClassZero) {
    std::mt19937_64 rng(3);
    for (double c : {1.0, 5.0, -2.5, 1e-3}) {
        const auto b = random_walk(rng, 42);
        std::vector<double> a = b;
        for (auto& x : a) x += c;
        const FitResult f = plcs_pair(a, b);
        // Rounding in a = b + c makes |a - b| wobble at the ulp level, so the
        // class is zero to rounding rather than bit-exact for real-valued data.
        EXPECT_NEAR(f.gamma, 0.0, 1e-9);
        EXPECT_LT(f.beta, 1e-12);
    }
    std::vector<double> b(42), a(42);
    for (int i = 0; i < 42; ++i) {
        b[i] = 1000 + 7 * i;
        a[i] = b[i] + 5;
    }
    const FitResult exact = plcs_pair(a, b);
    EXPECT_EQ(exact.gamma, 0.0);
    EXPECT_EQ(exact.alpha, 1.0);
    EXPECT_EQ(exact.beta, 0.0);
    EXPECT_EQ(exact.r_squared, 1.0);
}

TEST(PlcsPair, SquareRootIncrements) {
    const auto d = increments(200, 0.5);
    const std::vector<double> zero(200, 0.0);
    const FitResult f = plcs_pair(d, zero);
    EXPECT_NEAR(f.gamma, 0.5, 0.05);
    EXPECT_NEAR(f.alpha, oracle::tail_slope_from_increments(d, 10), 1e-10);
    EXPECT_EQ(f.tail_points, 10u);
}

TEST(PlcsPair, LinearDivergence) {
    std::vector<double> a(200), b(200);
    for (int i = 1; i <= 200; ++i) {
        a[i - 1] = 3.0 * i + 10.0;
        b[i - 1] = 2.0 * i + 10.0;  // |a - b| = i
    }
    const FitResult f = plcs_pair(a, b);
    EXPECT_NEAR(f.gamma, 1.0, 0.01);

    std::vector<double> xs, ys;
    for (int j = 191; j <= 200; ++j) {
        xs.push_back(std::log(j));
        ys.push_back(std::log(j * (j + 1) / 2.0));
    }
    EXPECT_NEAR(f.alpha, oracle::naive_ols(xs, ys).slope, 1e-10);
}

TEST(PlcsPair, LiteralNegativeIncrementsFollowTheOracle) {
    // Increments i^-0.76 carry a constant term in their partial sums, so the
    // tail slope sits well above -0.76 at N = 200.
    const auto d = increments(200, -0.76);
    const std::vector<double> zero(200, 0.0);
    const FitResult f = plcs_pair(d, zero);
    const double expected = oracle::tail_slope_from_increments(d, 10) - 1.0;
    EXPECT_NEAR(f.gamma, expected, 1e-10);
    EXPECT_NEAR(f.gamma, -0.6834, 5e-4);
}

TEST(PlcsPair, Symmetry) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_walk(rng, 42);
        const auto b = random_walk(rng, 42, 90.0);
        EXPECT_EQ(plcs_pair(a, b), plcs_pair(b, a));
    }
}

TEST(PlcsPair, ScaleInvariance) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_walk(rng, 42);
        const auto b = random_walk(rng, 42, 90.0);
        const FitResult base = plcs_pair(a, b);
        for (double c : {4.0, 3.7, 0.01, 1234.5}) {
            std::vector<double> ca = a, cb = b;
            for (auto& x : ca) x *= c;
            for (auto& x : cb) x *= c;
            const FitResult scaled = plcs_pair(ca, cb);
            expect_fit_near(scaled, base, 1e-9);
            EXPECT_NEAR(scaled.intercept, base.intercept + std::log(c), 1e-9);
        }
    }
}

TEST(PlcsPair, TranslationInvariance) {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> step(-20, 25);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> a(42), b(42);
        int x = 500, y = 480;
        for (int i = 0; i < 42; ++i) {
            a[i] = x += step(rng);
            b[i] = y += step(rng);
        }
        const FitResult base = plcs_pair(a, b);
        for (double shift : {1.0, -250.0, 1e6}) {
            std::vector<double> sa = a, sb = b;
            for (auto& v : sa) v += shift;
            for (auto& v : sb) v += shift;
            EXPECT_EQ(plcs_pair(sa, sb), base);  // integer data: differences are exact
        }
    }
}

TEST(PlcsPair, AnchoredFitMatchesPlainFit) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_walk(rng, 60);
        const auto b = random_walk(rng, 60, 70.0);
        const FitResult anchored = plcs_pair(a, b);
        const FitResult plain = fit_power_law(loglog_points(cumulative_md(a, b)));
        expect_fit_near(anchored, plain, 1e-11);
        EXPECT_NEAR(anchored.intercept, plain.intercept, 1e-10);
    }
}

TEST(PlcsPair, IdenticalSeriesAreDegenerate) {
    std::mt19937_64 rng(13);
    const auto a = random_walk(rng, 20);
    EXPECT_THROW(plcs_pair(a, a), DegenerateSeriesError);
}

TEST(PlcsMatrix, NineteenEntitiesGiveAllPairs) {
    std::mt19937_64 rng(14);
    std::vector<std::string> codes;
    std::vector<std::vector<double>> cols;
    for (int e = 0; e < 19; ++e) {
        codes.push_back("E" + std::to_string(e));
        cols.push_back(random_walk(rng, 42, 100.0 + e));
    }
    const SeriesPanel panel(codes, 1970, cols);
    const PairMatrix m = plcs_matrix(panel);
    EXPECT_EQ(m.pair_count(), 171u);
    EXPECT_TRUE(m.has_channel(Channel::Gamma));
    EXPECT_TRUE(m.degenerate_pairs(Channel::Gamma).empty());
    for (std::size_t i = 0; i < 19; ++i) {
        for (std::size_t j = i + 1; j < 19; ++j) {
            EXPECT_EQ(m.value(i, j, Channel::Gamma), m.value(j, i, Channel::Gamma));
            EXPECT_EQ(*m.cell(i, j).fit, plcs_pair(panel.series(i), panel.series(j)));
        }
    }
    // Single-threaded and pooled fills agree.
    const PairMatrix serial = plcs_matrix(panel, {}, 1);
    for (std::size_t k = 0; k < 171; ++k) EXPECT_EQ(*serial.cell_at(k).fit, *m.cell_at(k).fit);
    EXPECT_THROW(m.value(0, 1, Channel::Ud), ContractError);
}

TEST(PlcsMatrix, TwoEntitiesGiveOnePair) {
    const SeriesPanel panel({"A", "B"}, 2000, {{1, 2, 3, 4, 5}, {2, 4, 7, 9, 20}});
    const PairMatrix m = plcs_matrix(panel);
    EXPECT_EQ(m.pair_count(), 1u);
    EXPECT_TRUE(m.value(0, 1, Channel::Gamma).has_value());
}

TEST(PlcsMatrix, DuplicatedColumnIsMarkedDegenerate) {
    const SeriesPanel panel({"A", "B", "C"}, 2000, {{1, 2, 3, 4, 5}, {2, 4, 7, 9, 20}, {1, 2, 3, 4, 5}});
    const PairMatrix m = plcs_matrix(panel);
    const auto bad = m.degenerate_pairs(Channel::Gamma);
    ASSERT_EQ(bad.size(), 1u);
    EXPECT_EQ(bad[0], (std::pair<std::size_t, std::size_t>{0, 2}));
    EXPECT_TRUE(m.cell(0, 2).identical);
    EXPECT_FALSE(m.cell(0, 2).note.empty());
    EXPECT_FALSE(m.value(0, 2, Channel::Beta).has_value());
    EXPECT_TRUE(m.value(0, 1, Channel::Beta).has_value());
}
