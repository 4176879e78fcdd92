#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "dimerforge/generators.hpp"
#include "dimerforge/instance.hpp"
#include "dimerforge/suite.hpp"

using namespace dimerforge;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("suite parsing") {
    SuiteConfig c = parse_suite("# grids\nkasteleyn max=2\n\ntheorem21 count=5 seed=3\n");
    REQUIRE(c.items.size() == 2);
    CHECK(c.items[0].line == 2);
    CHECK(c.items[1].spec.name == "theorem21");
    CHECK(c.items[1].spec.get_int("count", 0) == 5);
    CHECK(c.items[1].spec.seed(0) == 3);

    CHECK(kind_of([] { parse_suite("nosuch\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { parse_suite("kasteleyn max\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { parse_suite("theorem21 file=/nonexistent/x.txt\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { load_suite("/nonexistent/suite.txt"); }) == ErrorKind::ConfigError);
}

TEST_CASE("small suite passes") {
    SuiteConfig c = parse_suite("kasteleyn max=2\ntheorem21 count=200\n");
    VerificationReport r = run_suite(c);
    CHECK(r.pass());
    CHECK(r.text().find("summary PASS 2/2") != std::string::npos);
}

TEST_CASE("reports do not depend on the number of jobs") {
    SuiteConfig c = parse_suite("phi-psi count=10\nparity count=5\ntemperley count=5\nsymmetric count=5\n");
    SuiteOptions one;
    one.seed = 42;
    SuiteOptions many = one;
    many.jobs = 4;
    CHECK(run_suite(c, one).text() == run_suite(c, many).text());
}

TEST_CASE("instances from file") {
    auto dir = std::filesystem::temp_directory_path() / "dimerforge-suite-test";
    std::filesystem::create_directories(dir);
    InstanceFile f = random_instance("section2", 1);
    {
        std::ofstream out(dir / "inst.txt");
        out << format_instance(f);
    }
    SuiteConfig c = parse_suite("theorem21 file=inst.txt\n", dir.string());
    CHECK(run_suite(c).pass());
    std::filesystem::remove_all(dir);
}

TEST_CASE("failures carry a witness") {
    // a 3x3 grid with path 0,1,2 breaks the degree rule before any count is made
    InstanceFile f;
    f.kind = "section2";
    f.graph = load_graph("v 0 0 0\nv 1 1 0\nv 2 2 0\nv 3 0 1\nv 4 1 1\nv 5 2 1\n"
                         "e 0 0 1\ne 1 1 2\ne 2 3 4\ne 3 4 5\ne 4 0 3\ne 5 1 4\ne 6 2 5\n");
    f.path = {0, 1, 2};
    auto dir = std::filesystem::temp_directory_path() / "dimerforge-suite-fail";
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "bad.txt");
        out << format_instance(f);
    }
    VerificationReport r = run_suite(parse_suite("theorem21 file=bad.txt\n", dir.string()));
    CHECK_FALSE(r.pass());
    CHECK(r.text().find("status FAIL") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("generators are deterministic and valid") {
    for (const char* kind : {"section2", "symmetric", "symmetric-matching", "tea", "tec", "diagonal-grid", "plane"}) {
        InstanceFile a = random_instance(kind, 17);
        InstanceFile b = random_instance(kind, 17);
        CHECK(format_instance(a) == format_instance(b));
        CHECK(format_instance(parse_instance(format_instance(a))) == format_instance(a));
    }
    InstanceFile s2 = random_instance("section2", 1);
    CHECK_NOTHROW(make_section2(s2.graph, s2.path));
    InstanceFile sym = random_instance("symmetric", 2);
    CHECK_NOTHROW(check_reflection_symmetry(sym.graph, *sym.axis));
    Rng rng(3);
    InstanceFile tea = random_tea(rng, false, 1);
    CHECK_NOTHROW(make_tea_instance(tea.graph, tea.marks, tea.primed));
    CHECK_THROWS_AS(random_instance("nosuch", 1), Error);
}
