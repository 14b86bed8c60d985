#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "volumes.hpp"
#include "wpv/cli.hpp"
#include "wpv/recursion.hpp"
#include "wpv/render.hpp"
#include "wpv/serialize.hpp"

using namespace wpv;
using namespace wpv::test;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    cli::RunStats stats;
};

class Sandbox {
public:
    Sandbox()
        : dir_(std::filesystem::temp_directory_path() /
               ("wpv-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++)))
    {
        std::filesystem::create_directories(dir_);
    }
    ~Sandbox() { std::filesystem::remove_all(dir_); }

    std::filesystem::path cache() const { return dir_ / "cache.json"; }

    Result run(std::vector<std::string> args) const
    {
        args.insert(args.begin(), {"--cache", cache().string()});
        std::ostringstream out;
        std::ostringstream err;
        Result r{};
        r.code = cli::run(args, out, err, &r.stats);
        r.out = out.str();
        r.err = err.str();
        return r;
    }

private:
    std::filesystem::path dir_;
    static inline int counter_ = 0;
};

}  // namespace

TEST_CASE("plain and latex rendering")
{
    CHECK(render_plain(v11()) == "1/12*pi^2 + 1/48*b1^2");
    CHECK(render_latex(v11()) == "\\frac{\\pi^2}{12}+\\frac{b_1^2}{48}");
    CHECK(render_latex(GradedPoly(1)) == "1");
    CHECK(render_plain(GradedPoly()) == "0");
    CHECK(render_latex(v04()) == "2\\pi^2+\\frac{b_1^2}{2}+\\frac{b_2^2}{2}+\\frac{b_3^2}{2}+\\frac{b_4^2}{2}");
    CHECK(render_latex(term(q(-3, 2), 5) + term(1, 0, {{12, 5}})) == "-\\frac{3\\pi^{10}}{2}+b_{12}^{10}");
    CHECK(render_plain(term(q(-3, 2), 5) - term(1, 0, {{kSlotX, 1}})) == "-3/2*pi^10 - x^2");
    CHECK(render_plain(term(7, 0, {{1, 1}, {2, 2}})) == "7*b1^2*b2^4");

    const auto order = display_order(v13());
    for (std::size_t i = 1; i < order.size(); ++i)
        CHECK(order[i - 1].first.pi2_exp() >= order[i].first.pi2_exp());
}

TEST_CASE("volume command")
{
    Sandbox box;
    auto r = box.run({"volume", "-g", "0", "-n", "4", "--latex"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\\pi^2+\\frac{b_1^2}{2}+\\frac{b_2^2}{2}+\\frac{b_3^2}{2}+\\frac{b_4^2}{2}\n");
    r = box.run({"--format", "latex", "volume", "-g", "1", "-n", "1"});
    CHECK(r.out == "\\frac{\\pi^2}{12}+\\frac{b_1^2}{48}\n");
    r = box.run({"volume", "-g", "1", "-n", "1"});
    CHECK(r.out == "1/12*pi^2 + 1/48*b1^2\n");
    r = box.run({"volume", "-g", "1", "-n", "2", "--eval", "0,0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("V(0,0) = 1/4*pi^4 ~ 24.35227275850060930911") != std::string::npos);
    r = box.run({"volume", "-g", "1", "-n", "1", "--eval", "2", "--digits", "12"});
    CHECK(r.out.find("V(2) = 1/12*pi^2 + 1/12 ~ 0.905800366757") != std::string::npos);
}

TEST_CASE("json output re-parses to the same volume")
{
    Sandbox box;
    const auto r = box.run({"volume", "-g", "1", "-n", "3", "--format", "json", "--eval", "1/2,0,3"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(volume_from_json(j) == VolumePoly(1, 3, v13()));
    CHECK(j.at("eval").at("lengths") == nlohmann::json::array({"1/2", "0", "3"}));
    RecursionCache cache;
    const std::vector<Rational> at{q(1, 2), 0, 3};
    CHECK(terms_from_json(j.at("eval").at("terms")) == volume_at(1, 3, at, cache));
}

TEST_CASE("tau, mixed and growth commands")
{
    Sandbox box;
    CHECK(box.run({"tau", "1"}).out == "1/24\n");
    CHECK(box.run({"tau", "0,0,0"}).out == "1\n");
    CHECK(box.run({"tau", "2,1,0"}).out == "1/12\n");
    CHECK(box.run({"tau", "2,0,0", "-g", "1"}).out == "0\n");
    CHECK(box.run({"tau", "4", "--latex"}).out == "\\frac{1}{1152}\n");
    CHECK(nlohmann::json::parse(box.run({"tau", "1", "--format", "json"}).out) ==
          nlohmann::json{{"g", 1}, {"a", {1}}, {"value", "1/24"}});
    CHECK(box.run({"mixed", "-g", "1", "0"}).out == "1/12*pi^2\n");
    CHECK(box.run({"mixed", "-g", "0", "0,0,0,0"}).out == "2*pi^2\n");

    auto r = box.run({"growth", "--ambient", "2,0", "--curve", "sep:1:"});
    CHECK(r.code == 0);
    CHECK(r.out.find("c(gamma) = 1/13824") != std::string::npos);
    CHECK(r.out.find("P(L) leading term: 1/13824*L^6") != std::string::npos);
    CHECK(r.err.find("symmetric") != std::string::npos);
    r = box.run({"growth", "--ambient", "1,1", "--curve", "nonsep"});
    CHECK(r.out.find("c(gamma) = 1/2") != std::string::npos);
    r = box.run({"growth", "--ambient", "1,2", "--curve", "sep:0:1,2", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out).at("exponent") == 4);
}

TEST_CASE("check commands")
{
    Sandbox box;
    auto r = box.run({"check", "zograf", "--max-n0", "6", "--max-n1", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS (8 identities)") != std::string::npos);
    r = box.run({"check", "virasoro", "--max-dim", "4", "--jobs", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS (") != std::string::npos);
    r = box.run({"check", "kernel", "--max-k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS (") != std::string::npos);
    r = box.run({"check", "mcshane", "--trace", "3,3,3", "--depth", "25", "--tol", "1e-6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("depth 25: S = ") != std::string::npos);
    r = box.run({"check", "invariants", "--max-complexity", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS (") != std::string::npos);
}

TEST_CASE("a failing check exits with 1")
{
    Sandbox box;
    const auto r = box.run({"check", "mcshane", "--depth", "3"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit with 2")
{
    Sandbox box;
    CHECK(box.run({}).code == 2);
    CHECK(box.run({"frobnicate"}).code == 2);
    CHECK(box.run({"volume", "-g", "0"}).code == 2);
    CHECK(box.run({"volume", "-g", "0", "-n", "2"}).code == 2);
    CHECK(box.run({"volume", "-g", "1", "-n", "2", "--eval", "1"}).code == 2);
    CHECK(box.run({"volume", "-g", "1", "-n", "1", "--eval", "0.5"}).code == 2);
    CHECK(box.run({"volume", "-g", "1", "-n", "1", "--eval", "-1"}).code == 2);
    CHECK(box.run({"volume", "-g", "1", "-n", "1", "--format", "xml"}).code == 2);
    CHECK(box.run({"tau", "2,0,0"}).code == 2);
    CHECK(box.run({"tau", "a,b"}).code == 2);
    CHECK(box.run({"mixed", "-g", "1", "3"}).code == 2);
    CHECK(box.run({"growth", "--ambient", "0,4", "--curve", "nonsep"}).code == 2);
    CHECK(box.run({"growth", "--ambient", "2,0", "--curve", "sep"}).code == 2);
    CHECK(box.run({"check"}).code == 2);
    CHECK(box.run({"check", "mcshane", "--trace", "3,3,4"}).code == 2);
    CHECK(box.run({"--help"}).code == 0);
}

TEST_CASE("second run is served from the cache")
{
    Sandbox box;
    const auto first = box.run({"volume", "-g", "2", "-n", "2"});
    CHECK(first.code == 0);
    CHECK(first.stats.computed > 0);
    CHECK(first.stats.cache_saved);
    CHECK(std::filesystem::exists(box.cache()));
    const auto second = box.run({"volume", "-g", "2", "-n", "2"});
    CHECK(second.stats.computed == 0);
    CHECK(second.stats.cache_loaded);
    CHECK_FALSE(second.stats.cache_saved);
    CHECK(second.out == first.out);
}

TEST_CASE("a corrupt cache is reported and rebuilt")
{
    Sandbox box;
    std::ofstream(box.cache()) << "{\"format_version\":1,\"volumes\":{\"0,3\":";
    const auto r = box.run({"tau", "0,0,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    CHECK(r.err.find("recomputing from scratch") != std::string::npos);
    RecursionCache cache;
    CHECK_NOTHROW(cache.load(box.cache()));
    CHECK(cache.find(0, 3) != nullptr);
}

TEST_CASE("default cache location")
{
    ::setenv("WPV_CACHE", "/tmp/somewhere/volumes.json", 1);
    CHECK(cli::default_cache_path() == "/tmp/somewhere/volumes.json");
    ::unsetenv("WPV_CACHE");
    ::setenv("XDG_DATA_HOME", "/tmp/xdg", 1);
    CHECK(cli::default_cache_path() == "/tmp/xdg/wpv/volumes.json");
    ::unsetenv("XDG_DATA_HOME");
    CHECK(cli::default_cache_path().filename() == "volumes.json");
}
