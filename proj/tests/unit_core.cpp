#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "fgbm/config.hpp"
#include "fgbm/csv.hpp"
#include "fgbm/parallel.hpp"
#include "fgbm/rng.hpp"
#include "fgbm/sampled_function.hpp"
#include "fgbm/scenario.hpp"
#include "fgbm/stats.hpp"
#include "fgbm/types.hpp"

using namespace fgbm;

TEST_CASE("domain types validate their arguments") {
    CHECK_THROWS_AS(HurstIndex(0.0), std::invalid_argument);
    CHECK_THROWS_AS(HurstIndex(1.0), std::invalid_argument);
    CHECK_THROWS_AS(HurstIndex(-0.3), std::invalid_argument);
    CHECK(HurstIndex(0.5).value == 0.5);

    CHECK_THROWS_AS(VolatilityBand(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(VolatilityBand(0.3, 0.1), std::invalid_argument);
    CHECK(VolatilityBand(0.2, 0.2).degenerate());
    CHECK_FALSE(VolatilityBand(0.1, 0.3).degenerate());

    CHECK_THROWS_AS(TimeGrid(0.0, 0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid(0.0, 1.0, 0), std::invalid_argument);
    TimeGrid g(0.0, 2.0, 4);
    CHECK(g.size() == 5);
    CHECK(g.dt() == doctest::Approx(0.5));
    CHECK(g.point(0) == 0.0);
    CHECK(g.point(4) == 2.0);
}

TEST_CASE("path rng is reproducible and path indexed") {
    SeedSpec s{42, seed_stream::kPaths};
    PathRng a(s, 7);
    PathRng b(s, 7);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    PathRng c(s, 7);
    PathRng d(s, 8);
    bool differ = false;
    for (int i = 0; i < 8; ++i) differ |= (c.next_u64() != d.next_u64());
    CHECK(differ);

    // derive_seed ignores draw order entirely: it is a pure function.
    CHECK(derive_seed(s, 3) == derive_seed(s, 3));
    CHECK(derive_seed(s, 3) != derive_seed(s.with_stream(seed_stream::kVerify), 3));
}

TEST_CASE("gaussian draws have sane moments") {
    SeedSpec s{2024, seed_stream::kVerify};
    PathRng r(s, 0);
    const std::size_t n = 200000;
    std::vector<double> z(n);
    for (auto& v : z) v = r.next_gaussian();
    double m = pairwise_sum(z) / static_cast<double>(n);
    double v2 = 0.0, v4 = 0.0;
    for (double x : z) {
        v2 += x * x;
        v4 += x * x * x * x;
    }
    v2 /= static_cast<double>(n);
    v4 /= static_cast<double>(n);
    CHECK(std::abs(m) < 4.0 / std::sqrt(static_cast<double>(n)));
    CHECK(v2 == doctest::Approx(1.0).epsilon(0.02));
    CHECK(v4 == doctest::Approx(3.0).epsilon(0.05));

    PathRng u(s, 1);
    for (int i = 0; i < 1000; ++i) {
        double x = u.next_uniform();
        CHECK(x > 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("pairwise sum exactness properties") {
    // Constant over a power-of-two count reduces to a pure doubling tree.
    const double c = 0.1 + 1e-17;
    std::vector<double> xs(1024, c);
    CHECK(pairwise_sum(xs) == 1024.0 * c);

    std::vector<double> ys(513);
    SeedSpec s{9, seed_stream::kVerify};
    PathRng r(s, 0);
    for (auto& y : ys) y = r.next_gaussian();
    std::vector<double> ys2(ys);
    for (auto& y : ys2) y *= 2.0;
    CHECK(pairwise_sum(ys2) == 2.0 * pairwise_sum(ys));

    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
    CHECK(pairwise_sum(std::vector<double>{3.5}) == 3.5);
}

TEST_CASE("parallel_for covers every index once for any worker count") {
    for (std::size_t threads : {std::size_t{1}, std::size_t{3}, std::size_t{8}}) {
        std::vector<int> hits(1000, 0);
        parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i] += 1; });
        for (int h : hits) CHECK(h == 1);
    }
}

TEST_CASE("thread resolution order: argument, environment, default") {
    unsetenv("FGBM_THREADS");
    CHECK(resolve_threads(5) == 5);
    CHECK(resolve_threads(1) == 1);
    setenv("FGBM_THREADS", "3", 1);
    CHECK(resolve_threads(1) == 1);
    std::size_t env_resolved = resolve_threads(0);
    CHECK(env_resolved == 3);
    setenv("FGBM_THREADS", "not-a-number", 1);
    CHECK(resolve_threads(0) >= 1);
    unsetenv("FGBM_THREADS");
    CHECK(resolve_threads(0) >= 1);
}

TEST_CASE("config parsing, defaults, merge precedence") {
    Config d = Config::defaults();
    CHECK(d.has("hurst"));
    CHECK(d.has("sigma_lo"));
    CHECK(d.has("sigma_hi"));
    CHECK(d.has("grid.n"));
    CHECK(d.has("horizon"));
    CHECK(d.has("seed"));
    CHECK(d.has("scenarios.m"));

    const char* path = "unit_core_config.tmp";
    {
        std::ofstream out(path);
        out << "# comment line\n"
            << "hurst = 0.7\n"
            << "\n"
            << "grid.n=64\n"
            << "sigma_hi = 0.45\n";
    }
    Config f = Config::from_file(path);
    CHECK(f.get_double("hurst") == doctest::Approx(0.7));
    CHECK(f.get_size("grid.n") == 64);
    CHECK(f.get_double("sigma_hi") == doctest::Approx(0.45));

    Config merged = Config::defaults();
    merged.merge(f);
    CHECK(merged.get_double("hurst") == doctest::Approx(0.7));
    CHECK(merged.has("sigma_lo"));

    Config over;
    over.set("hurst", "0.3");
    merged.merge(over);
    CHECK(merged.get_double("hurst") == doctest::Approx(0.3));

    std::string js = merged.to_json();
    CHECK(js.front() == '{');
    CHECK(js.find("\"hurst\"") != std::string::npos);

    {
        std::ofstream out(path);
        out << "no_such_key = 1\n";
    }
    CHECK_THROWS(Config::from_file(path));
    {
        std::ofstream out(path);
        out << "hurst 0.7\n";
    }
    CHECK_THROWS(Config::from_file(path));
    std::remove(path);
    CHECK_THROWS(Config::from_file("does-not-exist.cfg"));
}

TEST_CASE("csv output is byte stable with LF endings and round-trip doubles") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    double v = 0.1;
    double back = std::strtod(format_double(v).c_str(), nullptr);
    CHECK(back == v);
    back = std::strtod(format_double(1.0 / 3.0).c_str(), nullptr);
    CHECK(back == 1.0 / 3.0);

    const char* path = "unit_core_out.tmp.csv";
    write_csv(path, {"t", "x"}, {{0.0, 1.5}, {0.25, -2.0}});
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    CHECK(text == "t,x\n0,1.5\n0.25,-2\n");
    CHECK(text.find('\r') == std::string::npos);
    std::remove(path);
}

TEST_CASE("volatility scenarios evaluate right-continuously") {
    auto c = VolatilityScenario::constant(0.2);
    CHECK(c.is_constant());
    CHECK(c(0.0) == 0.2);
    CHECK(c(10.0) == 0.2);
    CHECK(c.max_level() == 0.2);

    auto p = VolatilityScenario::piecewise({0.5, 1.0}, {0.1, 0.3, 0.2});
    CHECK_FALSE(p.is_constant());
    CHECK(p(0.0) == 0.1);
    CHECK(p(0.49) == 0.1);
    CHECK(p(0.5) == 0.3);
    CHECK(p(0.99) == 0.3);
    CHECK(p(1.0) == 0.2);
    CHECK(p.max_level() == 0.3);
    CHECK(p.min_level() == 0.1);

    auto b = VolatilityScenario::bang_bang(VolatilityBand(0.1, 0.3), {0.25, 0.75}, true);
    CHECK(b(0.0) == 0.3);
    CHECK(b(0.3) == 0.1);
    CHECK(b(0.8) == 0.3);

    CHECK_THROWS_AS(VolatilityScenario::piecewise({0.5, 0.5}, {0.1, 0.2, 0.3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(VolatilityScenario::piecewise({0.5}, {0.1}), std::invalid_argument);
    CHECK_THROWS_AS(VolatilityScenario::constant(-1.0), std::invalid_argument);
}

TEST_CASE("scenario families start with the band extremes") {
    VolatilityBand band(0.1, 0.3);
    auto fam = make_scenario_family(band, 5, 1.0);
    REQUIRE(fam.members.size() == 5);
    CHECK(fam.members[0].is_constant());
    CHECK(fam.members[0].max_level() == 0.1);
    CHECK(fam.members[1].is_constant());
    CHECK(fam.members[1].max_level() == 0.3);
    for (std::size_t i = 2; i < 5; ++i) {
        CHECK_FALSE(fam.members[i].is_constant());
        CHECK(fam.members[i].max_level() <= 0.3 + 1e-15);
        CHECK(fam.members[i].min_level() >= 0.1 - 1e-15);
        for (std::size_t j = 2; j < i; ++j) CHECK_FALSE(fam.members[i].same_values(fam.members[j]));
    }

    auto deg = make_scenario_family(VolatilityBand(0.2, 0.2), 4, 1.0);
    for (const auto& m : deg.members) {
        CHECK(m.is_constant());
        CHECK(m.max_level() == 0.2);
    }
    CHECK_THROWS_AS(make_scenario_family(band, 1, 1.0), std::invalid_argument);
}

TEST_CASE("sampled functions interpolate and resample") {
    SampledFunction f;
    f.x0 = 0.0;
    f.x1 = 2.0;
    f.values = {0.0, 1.0, 4.0};  // samples of a piecewise-linear hat of x
    CHECK(value_at(f, 0.0) == doctest::Approx(0.0));
    CHECK(value_at(f, 0.5) == doctest::Approx(0.5));
    CHECK(value_at(f, 1.5) == doctest::Approx(2.5));
    CHECK(value_at(f, 2.0) == doctest::Approx(4.0));
    CHECK(value_at(f, -0.1) == 0.0);
    CHECK(value_at(f, 2.1) == 0.0);

    SampledFunction r = resample(f, 0.0, 2.0, 5);
    CHECK(r.values.size() == 5);
    CHECK(r.values[1] == doctest::Approx(0.5));
    CHECK(r.values[3] == doctest::Approx(2.5));
    CHECK_THROWS(resample(f, 0.0, 1.0, 1));
}
