#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "catgate/csv.hpp"
#include "catgate/errors.hpp"
#include "catgate/parallel.hpp"

using namespace catgate;

namespace {

std::filesystem::path tmp(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("catgate_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Csv, RoundTripIsBitExact) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    Table t{{"a", "b", "c"}, {}};
    for (int i = 0; i < 200; ++i) t.rows.push_back({u(rng), u(rng) * 1e-9, std::ldexp(u(rng), -900)});
    t.rows.push_back({0.1, 1.0 / 3.0, -0.0});
    const auto p = tmp("roundtrip.csv");
    write_csv(p, t);
    const Table back = read_csv(p);
    ASSERT_EQ(back.header, t.header);
    ASSERT_EQ(back.rows.size(), t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(back.rows[i][j], t.rows[i][j]);
    const auto p2 = tmp("roundtrip2.csv");
    write_csv(p2, back);
    EXPECT_EQ(slurp(p), slurp(p2));
}

TEST(Csv, ColumnLookup) {
    Table t{{"t", "x"}, {{0.0, 1.0}, {1.0, 2.0}}};
    EXPECT_EQ(t.values("x"), (std::vector<double>{1.0, 2.0}));
    EXPECT_THROW(t.column("y"), ConfigError);
}

TEST(Csv, MalformedInputIsConfigError) {
    const auto p = tmp("bad.csv");
    {
        std::ofstream out(p);
        out << "a,b\n1,2\n3,x\n";
    }
    EXPECT_THROW(read_csv(p), ConfigError);
    {
        std::ofstream out(p);
        out << "a,b\n1,2,3\n";
    }
    EXPECT_THROW(read_csv(p), ConfigError);
    EXPECT_THROW(read_csv(tmp("missing.csv")), ConfigError);
}

TEST(Csv, NanSurvives) {
    Table t{{"x"}, {{std::nan("")}}};
    const auto p = tmp("nan.csv");
    write_csv(p, t);
    EXPECT_TRUE(std::isnan(read_csv(p).rows[0][0]));
}

TEST(Parallel, CoversEveryIndexOnce) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(Parallel, RethrowsFirstError) {
    EXPECT_THROW(parallel_for(10, 3,
                              [](std::size_t i) {
                                  if (i == 5) throw NumericError("boom");
                              }),
                 NumericError);
}
