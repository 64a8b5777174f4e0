#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <maghom/homology.hpp>
#include <maghom/simplicial.hpp>

using namespace maghom;
using S = Simplex<int>;
using Complex = SimplicialComplex<int>;

namespace {

Complex full_simplex(int n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Complex::closure({S(v)});
}

Complex triangle_boundary() { return Complex::closure({S{0, 1}, S{1, 2}, S{0, 2}}); }

Complex random_complex(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> count(1, 6), size(1, 4), label(0, 6);
    std::vector<S> gens;
    for (int i = count(rng); i > 0; --i) {
        std::set<int> s;
        for (int k = size(rng); k > 0; --k) s.insert(label(rng));
        gens.emplace_back(std::vector<int>(s.begin(), s.end()));
    }
    return Complex::closure(gens);
}

} // namespace

TEST_CASE("simplex basics", "[simplicial]")
{
    S s{3, 1, 2};
    CHECK(s.vertices() == std::vector<int>{1, 2, 3});
    CHECK(s.dimension() == 2);
    CHECK(s.face(0) == S{2, 3});
    CHECK(s.face(2) == S{1, 2});
    CHECK(s.contains(S{1, 3}));
    CHECK_THROWS_AS(S(std::vector<int>{}), complex_error);
    CHECK_THROWS_AS((S{1, 1}), complex_error);
}

TEST_CASE("downward closure is enforced", "[simplicial]")
{
    CHECK_THROWS_AS(Complex({S{0, 1}}), complex_error);
    CHECK_NOTHROW(Complex({S{0, 1}, S{0}, S{1}}));
    auto c = full_simplex(3);
    CHECK(c.size() == 7);
    CHECK(c.is_downward_closed());
    CHECK(c.maximal_simplices() == std::vector<S>{S{0, 1, 2}});
    CHECK(Complex().dimension() == -1);
    CHECK_THROWS_AS(SimplicialPair<int>(triangle_boundary(), full_simplex(3)), complex_error);
}

TEST_CASE("simplicial chain complex", "[simplicial]")
{
    SECTION("full 2-simplex")
    {
        auto cc = chain_complex(full_simplex(3));
        CHECK(cc.dimension(0) == 3);
        CHECK(cc.dimension(1) == 3);
        CHECK(cc.dimension(2) == 1);
        CHECK_FALSE(cc.square_zero_violation());
        auto h = homology_all(cc, 2);
        CHECK(h[0] == HomologyGroup{1, {}});
        CHECK(h[1].is_zero());
        CHECK(h[2].is_zero());
        // d{0,1,2} = {1,2} - {0,2} + {0,1}; edge basis is (01, 02, 12).
        auto d2 = cc.boundary(2);
        CHECK(d2.at(0, 0) == 1);
        CHECK(d2.at(1, 0) == -1);
        CHECK(d2.at(2, 0) == 1);
    }
    SECTION("triangle boundary is a circle")
    {
        auto h = homology_all(chain_complex(triangle_boundary()), 1);
        CHECK(h[1] == HomologyGroup{1, {}});
    }
}

TEST_CASE("relative chain complex", "[simplicial]")
{
    SECTION("simplex modulo its boundary")
    {
        SimplicialPair<int> pair(full_simplex(3), triangle_boundary());
        auto rel = relative_chain_complex(pair);
        CHECK(rel.dimension(0) == 0);
        CHECK(rel.dimension(1) == 0);
        CHECK(rel.dimension(2) == 1);
        auto h = homology_all(rel, 2);
        CHECK(h[2] == HomologyGroup{1, {}});
        CHECK(h[0].is_zero());
    }
    SECTION("empty subcomplex gives the absolute complex")
    {
        auto k = full_simplex(4);
        auto rel = relative_chain_complex(SimplicialPair<int>(k, Complex()));
        auto abs = chain_complex(k);
        CHECK(rel.bases == abs.bases);
        CHECK(rel.boundaries == abs.boundaries);
    }
}

TEST_CASE("shift", "[simplicial]")
{
    auto cc = chain_complex(full_simplex(4));
    auto same = shift(cc, 0);
    CHECK(same.bases == cc.bases);
    CHECK(same.boundaries == cc.boundaries);

    SimplicialPair<int> pair(full_simplex(3), triangle_boundary());
    auto shifted = shift(relative_chain_complex(pair), 2);
    CHECK(shifted.num_degrees() == 1);
    CHECK(shifted.dimension(0) == 1);
    CHECK(shifted.boundary(0).shape() == "0x1");

    auto s1 = shift(cc, 1);
    CHECK(s1.dimension(0) == cc.dimension(1));
    CHECK(s1.boundary(0).is_zero());
    CHECK(s1.boundary(1) == cc.boundary(2));
    CHECK_FALSE(s1.square_zero_violation());
    s1.validate_shapes();
}

TEST_CASE("complex invariants on random complexes", "[simplicial][property]")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        auto k = random_complex(rng);
        REQUIRE(k.is_downward_closed());
        auto cc = chain_complex(k);
        cc.validate_shapes();
        CHECK_FALSE(cc.square_zero_violation());

        // Rebuilding from a shuffled list yields identical matrices.
        auto simplices = k.all_simplices();
        std::shuffle(simplices.begin(), simplices.end(), rng);
        auto again = chain_complex(Complex(simplices));
        CHECK(again.boundaries == cc.boundaries);

        // Subcomplex generated by a random selection of codimension-1 faces.
        std::vector<S> some;
        for (const auto& s : k.all_simplices())
            if (s.size() > 1 && rng() % 3 == 0) some.push_back(s.face(0));
        auto sub = Complex::closure(some);
        SimplicialPair<int> pair(k, sub);
        auto rel = relative_chain_complex(pair);
        CHECK_FALSE(rel.square_zero_violation());
        for (int n = 0; n <= k.dimension(); ++n)
            CHECK(rel.dimension(n) == k.simplices(n).size() - sub.simplices(n).size());
    }
}

TEST_CASE("export formats", "[simplicial]")
{
    auto k = Complex::closure({S{0, 1, 2}, S{2, 3}});
    auto j = complex_to_json(k, [](int x) { return x; }, true);
    CHECK(j["format_version"] == 1);
    CHECK(j["labels"] == nlohmann::json::array({0, 1, 2, 3}));
    CHECK(j["maximal_simplices"] == nlohmann::json::parse("[[2,3],[0,1,2]]"));
    CHECK(j["simplices"].size() == k.size());

    std::ostringstream off;
    write_off(off, k, [](int x) { return x % 2; });
    CHECK(off.str() == "OFF\n4 2 0\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n2 2 3\n3 0 1 2\n");

    CHECK_THROWS_AS(write_off(off, full_simplex(5), [](int) { return 0; }), complex_error);
}
