#include <doctest.h>

#include <filesystem>
#include <numeric>
#include <fstream>
#include <thread>

#include <unistd.h>

#include "volumes.hpp"
#include "wpv/recursion.hpp"
#include "wpv/serialize.hpp"

using namespace wpv;
using namespace wpv::test;

namespace {

std::vector<std::pair<int, int>> types_up_to(int complexity)
{
    std::vector<std::pair<int, int>> out;
    for (int g = 0; 2 * g - 1 <= complexity; ++g)
        for (int n = 1; 2 * g - 2 + n <= complexity; ++n)
            if (is_stable(g, n)) out.emplace_back(g, n);
    return out;
}

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() /
               ("wpv-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static inline int counter = 0;
};

}  // namespace

TEST_CASE("stable splittings")
{
    const auto s13 = stable_splittings(1, 3);
    REQUIRE(s13.size() == 2);
    CHECK(s13[0] == StableSplitting{0, {2, 3}, 1, {}});
    CHECK(s13[1] == StableSplitting{1, {}, 0, {2, 3}});

    const auto s21 = stable_splittings(2, 1);
    REQUIRE(s21.size() == 1);
    CHECK(s21[0] == StableSplitting{1, {}, 1, {}});

    CHECK(stable_splittings(0, 4).empty());
    CHECK(stable_splittings(1, 1).empty());
    CHECK_THROWS_AS(stable_splittings(0, 2), Error);

    for (const auto& [g, n] : types_up_to(7)) {
        for (const auto& s : stable_splittings(g, n)) {
            CHECK(s.g1 + s.g2 == g);
            CHECK(is_stable(s.g1, static_cast<int>(s.I1.size()) + 1));
            CHECK(is_stable(s.g2, static_cast<int>(s.I2.size()) + 1));
            std::vector<int> all(s.I1);
            all.insert(all.end(), s.I2.begin(), s.I2.end());
            std::sort(all.begin(), all.end());
            std::vector<int> expected(static_cast<std::size_t>(n - 1));
            std::iota(expected.begin(), expected.end(), 2);
            CHECK(all == expected);
        }
    }
}

TEST_CASE("base cases and low volumes")
{
    RecursionCache cache;
    CHECK(volume(0, 3, cache)->poly() == GradedPoly(1));
    CHECK(volume(1, 1, cache)->poly() == v11());
    CHECK(volume(0, 4, cache)->poly() == v04());
    CHECK(volume(1, 2, cache)->poly() == v12());
    CHECK(volume(1, 3, cache)->poly() == v13());
    CHECK(volume(0, 5, cache)->poly() == term(10, 2) + sym(3, 1, {1, 0, 0, 0, 0}) +
                                             sym(q(1, 8), 0, {2, 0, 0, 0, 0}) +
                                             sym(q(1, 2), 0, {1, 1, 0, 0, 0}));
    const std::vector<Rational> zeros{0, 0};
    CHECK(volume_at(1, 2, zeros, cache) == term(q(1, 4), 2));
}

TEST_CASE("the assembled derivative for V_{1,3}")
{
    RecursionCache cache;
    CHECK(recursion_rhs(1, 3, cache) == v13_rhs());
    CHECK(a_term(1, 3, 2, cache) == relabel(a_term(1, 3, 3, cache), {{1, 1}, {2, 3}, {3, 2}}));
    CHECK(b_term(0, 4, cache).is_zero());
    CHECK_THROWS_AS(a_term(1, 3, 1, cache), Error);
    CHECK_THROWS_AS(c_term(1, 3, StableSplitting{0, {2}, 1, {3}}, cache), Error);
}

TEST_CASE("P is the derivative of 2 b_1 V for every type")
{
    RecursionCache cache;
    for (const auto& [g, n] : types_up_to(5)) {
        if ((g == 0 && n == 3) || (g == 1 && n == 1)) continue;
        CAPTURE(g);
        CAPTURE(n);
        CHECK(double_derivative(volume(g, n, cache)->poly(), 1) == recursion_rhs(g, n, cache));
    }
}

TEST_CASE("volumes satisfy homogeneity, positivity and symmetry")
{
    RecursionCache cache;
    for (const auto& [g, n] : types_up_to(6)) {
        CAPTURE(g);
        CAPTURE(n);
        const auto v = volume(g, n, cache);
        CHECK(check_volume_invariants(*v).ok());
        CHECK(v->poly().degree_in(1) == 3 * g - 3 + n);
        int top_pi = 0;
        for (const auto& [m, c] : v->poly().terms()) top_pi = std::max(top_pi, m.pi2_exp());
        CHECK(top_pi == 3 * g - 3 + n);
    }
}

TEST_CASE("volume errors")
{
    RecursionCache cache;
    CHECK_THROWS_AS(volume(0, 2, cache), Error);
    CHECK_THROWS_AS(volume(2, 0, cache), Error);
    CHECK_THROWS_AS(volume(-1, 5, cache), Error);
    const std::vector<Rational> one{1};
    const std::vector<Rational> negative{-1, 1};
    CHECK_THROWS_AS(volume_at(1, 2, one, cache), Error);
    CHECK_THROWS_AS(volume_at(1, 2, negative, cache), Error);
}

TEST_CASE("the cache counts computations once")
{
    RecursionCache cache;
    volume(1, 3, cache);
    const std::size_t first = cache.computed_count();
    CHECK(first == cache.size());
    volume(1, 3, cache);
    CHECK(cache.computed_count() == first);
    CHECK(cache.dirty());
}

TEST_CASE("concurrent computation agrees with serial computation")
{
    RecursionCache serial;
    RecursionCache shared;
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) threads.emplace_back([&shared, t] { volume(2 + t % 2, 2 - t % 2, shared); });
    for (auto& t : threads) t.join();
    for (const auto& e : shared.entries()) CHECK(e->poly() == volume(e->g(), e->n(), serial)->poly());
}

TEST_CASE("cache persistence")
{
    TempDir dir;
    const auto file = dir.path / "nested" / "cache.json";
    RecursionCache cache;
    volume(2, 2, cache);
    cache.save(file);
    CHECK_FALSE(cache.dirty());
    for (const auto& entry : std::filesystem::directory_iterator(file.parent_path()))
        CHECK(entry.path().filename() == "cache.json");

    RecursionCache loaded;
    loaded.load(file);
    CHECK(loaded.size() == cache.size());
    for (const auto& e : cache.entries()) CHECK(loaded.find(e->g(), e->n())->poly() == e->poly());
    volume(2, 2, loaded);
    CHECK(loaded.computed_count() == 0);

    const auto write = [&file](const std::string& text) {
        std::ofstream(file, std::ios::trunc) << text;
    };
    const auto rejected_unchanged = [&](const std::string& text) {
        write(text);
        CHECK_THROWS_AS(loaded.load(file), Error);
        CHECK(loaded.size() == cache.size());
    };
    rejected_unchanged("{\"format_version\":1,\"volumes\":");
    rejected_unchanged(R"({"format_version":2,"volumes":{}})");
    rejected_unchanged(R"({"format_version":1})");
    rejected_unchanged(R"({"format_version":1,"volumes":{"1,2":{"g":1,"n":1,"terms":[{"pi2":1,"vars":{},"coeff":"1/12"}]}}})");
    // asymmetric: fails the invariants
    rejected_unchanged(R"({"format_version":1,"volumes":{"0,4":{"g":0,"n":4,"terms":[{"pi2":1,"vars":{},"coeff":"2"},{"pi2":0,"vars":{"1":1},"coeff":"1/2"}]}}})");
    CHECK_THROWS_AS(loaded.load(dir.path / "missing.json"), Error);
}
