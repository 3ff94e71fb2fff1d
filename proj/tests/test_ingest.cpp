#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "plcsnet/error.hpp"
#include "plcsnet/ingest.hpp"

using namespace plcsnet;

namespace {

SeriesPanel parse(const std::string& text) {
    std::istringstream in(text);
    return load_panel(in);
}

std::string years_csv(int first, int last, int entities) {
    std::ostringstream out;
    out << "period";
    for (int e = 0; e < entities; ++e) out << ",E" << e;
    out << '\n';
    for (int y = first; y <= last; ++y) {
        out << y;
        for (int e = 0; e < entities; ++e) out << ',' << (y - first) * 10.5 + e;
        out << '\n';
    }
    return out.str();
}

template <class Err>
std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const Err& e) {
        return e.what();
    }
    ADD_FAILURE() << "expected an error";
    return {};
}

}  // namespace

TEST(LoadPanel, ShapeOfThreeEntitiesOverFortyTwoYears) {
    const SeriesPanel p = parse(years_csv(1970, 2011, 3));
    EXPECT_EQ(p.entity_count(), 3u);
    EXPECT_EQ(p.period_count(), 42u);
    EXPECT_EQ(p.first_period(), 1970);
    EXPECT_EQ(p.last_period(), 2011);
    EXPECT_DOUBLE_EQ(p.value(41, 2), 41 * 10.5 + 2);
}

TEST(LoadPanel, GapNamesMissingPeriod) {
    const std::string msg = error_of<ContiguityError>("period,A\n1970,1\n1971,2\n1973,3\n");
    EXPECT_NE(msg.find("1972"), std::string::npos) << msg;
}

TEST(LoadPanel, DuplicateEntityIsSchemaError) {
    const std::string msg = error_of<SchemaError>("year,DN,DN\n1970,1,2\n");
    EXPECT_NE(msg.find("duplicate entity DN"), std::string::npos) << msg;
}

TEST(LoadPanel, EmptyInputsAreSchemaErrors) {
    error_of<SchemaError>("");
    error_of<SchemaError>("period,A,B\n");
}

TEST(LoadPanel, MalformedNumberNamesRowAndColumn) {
    const std::string msg = error_of<ParseError>("period,A,B\n1970,1,2\n1971,3,x4\n");
    EXPECT_NE(msg.find("row 3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("column 3"), std::string::npos) << msg;
}

TEST(LoadPanel, MissingValueIsAnError) {
    error_of<ParseError>("period,A,B\n1970,1,\n");
    error_of<ParseError>("period,A,B\n1970,1\n");
}

TEST(LoadPanel, SortsRowsAndAcceptsScientificNotation) {
    const SeriesPanel p = parse("\xEF\xBB\xBFperiod,A\r\n1971,2.5e3\r\n1970,+1E-2\r\n");
    ASSERT_EQ(p.period_count(), 2u);
    EXPECT_EQ(p.first_period(), 1970);
    EXPECT_DOUBLE_EQ(p.value(0, 0), 0.01);
    EXPECT_DOUBLE_EQ(p.value(1, 0), 2500.0);
}

TEST(LoadPanel, DuplicatePeriodIsRejected) {
    error_of<ContiguityError>("period,A\n1970,1\n1970,2\n");
}

TEST(WindowPanel, TenYearWindow) {
    const SeriesPanel p = parse(years_csv(1970, 2011, 3));
    const SeriesPanel w = window_panel(p, {2002, 2011});
    EXPECT_EQ(w.period_count(), 10u);
    EXPECT_EQ(w.first_period(), 2002);
    EXPECT_EQ(w.entities(), p.entities());
    EXPECT_DOUBLE_EQ(w.value(0, 1), p.value(32, 1));
}

TEST(WindowPanel, FullRangeIsIdentity) {
    const SeriesPanel p = parse(years_csv(1970, 2011, 3));
    EXPECT_EQ(window_panel(p, {1970, 2011}), p);
}

TEST(WindowPanel, OutsideRangeReportsAvailableRange) {
    const SeriesPanel p = parse(years_csv(1970, 2011, 3));
    try {
        window_panel(p, {1960, 2011});
        FAIL();
    } catch (const BoundsError& e) {
        EXPECT_NE(std::string(e.what()).find("1970:2011"), std::string::npos) << e.what();
    }
}

TEST(WindowPanel, IsIdempotent) {
    const SeriesPanel p = parse(years_csv(1970, 2011, 4));
    for (const AnalysisWindow w : {AnalysisWindow{1982, 2011}, AnalysisWindow{1992, 2011}, AnalysisWindow{1970, 1973}}) {
        const SeriesPanel once = window_panel(p, w);
        EXPECT_EQ(window_panel(once, w), once);
    }
}

TEST(AnalysisWindow, ParseAndValidate) {
    EXPECT_EQ(AnalysisWindow::parse("2002:2011"), (AnalysisWindow{2002, 2011}));
    EXPECT_THROW(AnalysisWindow::parse("2011:2002"), ContractError);
    EXPECT_THROW(AnalysisWindow::parse("2002:2004"), ContractError);  // 3 periods
    EXPECT_THROW(AnalysisWindow::parse("2002-2011"), ContractError);
    EXPECT_EQ(AnalysisWindow::parse("2002:2011").tag(), "2002_2011");
}

TEST(SavePanel, RoundTripsCodesPeriodsAndFifteenDigits) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mag(-8, 8);
    std::uniform_real_distribution<double> mant(-1, 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<double>> cols(5, std::vector<double>(17));
        for (auto& c : cols) {
            for (auto& v : c) v = mant(rng) * std::pow(10.0, mag(rng));
        }
        const SeriesPanel p({"AU", "AT", "BE", "x_1", "LONGCODE"}, 1900 + trial, cols);
        std::stringstream buf;
        save_panel(p, buf);
        const SeriesPanel q = load_panel(buf);
        ASSERT_EQ(q.entities(), p.entities());
        ASSERT_EQ(q.periods(), p.periods());
        for (std::size_t e = 0; e < 5; ++e) {
            for (std::size_t t = 0; t < 17; ++t) {
                const double a = p.value(t, e), b = q.value(t, e);
                EXPECT_LE(std::fabs(a - b), 5e-15 * std::fabs(a)) << a << " vs " << b;
            }
        }
    }
}
