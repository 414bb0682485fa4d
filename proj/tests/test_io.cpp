#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "mcflab/curve_io.hpp"
#include "mcflab/fixtures.hpp"
#include "mcflab/hausdorff.hpp"

using namespace mcf;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name)
        : path("mcflab_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

CurveRecord random_record(Rng& rng, size_t n) {
    CurveRecord rec;
    for (size_t i = 0; i < n; ++i) {
        rec.s.push_back(i * 1e-3);
        rec.u.push_back(rng.uniform(-10, 10) * std::pow(10, rng.uniform(-8, 8)));
        rec.v.push_back(rng.uniform(-1, 1));
        rec.w.push_back(rng.uniform(-1, 1));
        rec.z.push_back(rng.uniform(-1, 1));
    }
    return rec;
}

} // namespace

TEST_CASE("hausdorff distances") {
    const std::vector<Vec2> a{{0, 0}, {1, 0}};
    const std::vector<Vec2> b{{0, 0}, {1, 0}, {1, 2}};
    CHECK(directed_hausdorff(a, b) == doctest::Approx(0.0));
    CHECK(directed_hausdorff(b, a) == doctest::Approx(2.0));
    CHECK(hausdorff_distance(a, b) == doctest::Approx(2.0));

    const auto c1 = fixtures::unit_circle(512).pts;
    const auto c2 = fixtures::unit_circle(512, 0.9).pts;
    CHECK(hausdorff_distance(c1, c2) == doctest::Approx(0.1).epsilon(1e-3));
}

TEST_CASE("trimmed hausdorff ignores open ends") {
    std::vector<Vec2> a, b;
    for (int i = 0; i <= 100; ++i) {
        a.emplace_back(i * 0.01, 0.0);
        b.emplace_back(i * 0.01, 0.0);
    }
    b.front() = {0.0, 5.0}; // end outlier
    CHECK(hausdorff_distance(a, b) == doctest::Approx(5.0));
    CHECK(hausdorff_trimmed(a, false, b, false, 0.1) <= 1e-12);
    // against the polyline, interior points sit exactly on segments
    CHECK(directed_hausdorff_polyline(std::vector<Vec2>{{0.355, 0.0}}, a,
                                      false) <= 1e-12);
}

TEST_CASE("format_double round-trips") {
    Rng rng(77);
    for (int i = 0; i < 1000; ++i) {
        const double x =
            rng.uniform(-5, 5) * std::pow(10.0, rng.uniform(-300, 300));
        CHECK(std::stod(format_double(x)) == x);
    }
    CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("csv export: header-only for the empty curve, n+1 lines otherwise") {
    TempFile f("empty.csv");
    export_curve(CurveRecord{}, f.path, CurveFormat::CSV);
    std::ifstream in(f.path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "s,u,v,w,z");
    CHECK_FALSE(std::getline(in, line));

    TempFile g("three.csv");
    CurveRecord rec;
    rec.s = {0, 1, 2};
    rec.u = {0, 0.5, 1};
    rec.v = {1, 2, 3};
    rec.w = {0, 0, 0};
    rec.z = {1, 1, 1};
    export_curve(rec, g.path, CurveFormat::CSV);
    std::ifstream gin(g.path);
    int lines = 0;
    while (std::getline(gin, line)) ++lines;
    CHECK(lines == 4);
}

TEST_CASE("export/import round trip is bit exact") {
    Rng rng(123);
    for (auto format : {CurveFormat::CSV, CurveFormat::JSON}) {
        const auto rec = random_record(rng, 64);
        TempFile f(format == CurveFormat::CSV ? "rt.csv" : "rt.json");
        export_curve(rec, f.path, format);
        const auto back = import_curve(f.path, format);
        REQUIRE(back.size() == rec.size());
        for (size_t i = 0; i < rec.size(); ++i) {
            CHECK(back.s[i] == rec.s[i]);
            CHECK(back.u[i] == rec.u[i]);
            CHECK(back.v[i] == rec.v[i]);
            CHECK(back.w[i] == rec.w[i]);
            CHECK(back.z[i] == rec.z[i]);
        }
    }
}

TEST_CASE("csv with residual column keeps the import readable") {
    TempFile f("resid.csv");
    CurveRecord rec;
    rec.s = {0, 1};
    rec.u = {0, 1};
    rec.v = {0, 1};
    rec.w = {1, 1};
    rec.z = {0, 0};
    export_curve_with_residual(rec, {0.5, 0.25}, f.path);
    const auto back = import_curve(f.path, CurveFormat::CSV);
    CHECK(back.size() == 2);
    CHECK(back.u[1] == 1.0);
}

TEST_CASE("import rejects malformed files") {
    TempFile f("bad.csv");
    {
        std::ofstream out(f.path);
        out << "a,b\n1,2\n";
    }
    CHECK_THROWS_AS(import_curve(f.path, CurveFormat::CSV), IOError);
    CHECK_THROWS_AS(import_curve("does_not_exist.csv", CurveFormat::CSV),
                    IOError);
}

TEST_CASE("rng streams are reproducible") {
    Rng a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform(-1, 1), y = b.uniform(-1, 1),
                     z = c.uniform(-1, 1);
        all_equal = all_equal && (x == y);
        any_diff = any_diff || (x != z);
        CHECK(x >= -1);
        CHECK(x < 1);
    }
    CHECK(all_equal);
    CHECK(any_diff);
    Rng d(1);
    for (int i = 0; i < 100; ++i) {
        const double m = d.uniform_two_sided(0.1, 2.0);
        CHECK(std::abs(m) >= 0.1);
        CHECK(std::abs(m) <= 2.0);
    }
}

TEST_CASE("arclength resampling keeps closed curves round") {
    const Curve circle = fixtures::unit_circle(257);
    const Curve rs = resample_arclength(circle, 193, nullptr);
    CHECK(rs.size() == 193);
    for (const Vec2& p : rs.pts)
        CHECK(p.norm() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(arclength_uniform(rs, nullptr));
}

TEST_CASE("arclength uniformity detection") {
    Curve uneven;
    uneven.pts = {{0, 0}, {0.1, 0}, {0.2, 0}, {0.8, 0}, {0.9, 0}};
    CHECK_FALSE(arclength_uniform(uneven, nullptr));
    CHECK(arclength_uniform(fixtures::unit_circle(64), nullptr));
}

TEST_CASE("self intersection detection") {
    Curve bow;
    bow.pts = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    CHECK(self_intersects(bow));
    CHECK_FALSE(self_intersects(fixtures::unit_circle(64)));
}
