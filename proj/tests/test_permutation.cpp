#include <catch2/catch_amalgamated.hpp>

#include <patternlab/bigint.hpp>
#include <patternlab/permutation.hpp>

#include "helpers.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace patternlab;
using Catch::Matchers::ContainsSubstring;

namespace {

const permutation sigma_example = permutation::parse("867943251");

std::vector<permutation> filter_avoiders(int n, const pattern_set& ps) {
    std::vector<permutation> out;
    for (const auto& p : testutil::all_perms(n))
        if (avoids(p, ps)) out.push_back(p);
    return out;
}

} // namespace

TEST_CASE("reduce maps a word onto the pattern it realizes") {
    CHECK(reduce({4, 6, 8, 5}) == permutation::parse("1342"));
    CHECK(reduce({9}) == permutation::parse("1"));
    CHECK(reduce({}) == permutation());
    CHECK_THROWS_AS(reduce({3, 3}), std::invalid_argument);
}

TEST_CASE("parse accepts digit strings and comma separated one-line forms") {
    CHECK(permutation::parse("312").values() == std::vector<int>{2, 0, 1});
    CHECK(permutation::parse("10,2,3,4,5,6,7,8,9,1") ==
          permutation::from_one_line({10, 2, 3, 4, 5, 6, 7, 8, 9, 1}));
    CHECK(permutation::parse("312").str() == "312");
    CHECK(permutation::parse("10,2,3,4,5,6,7,8,9,1").str() == "10,2,3,4,5,6,7,8,9,1");
    CHECK_THROWS_WITH(permutation::parse("1,zz,3"), ContainsSubstring("zz"));
    CHECK_THROWS_AS(permutation::parse("122"), std::invalid_argument);
    CHECK_THROWS_AS(permutation::parse("13"), std::invalid_argument);
}

TEST_CASE("occurrence counting on the worked example") {
    CHECK(sigma_example.size() == 9);
    CHECK(avoids(sigma_example, {permutation::parse("132")}));
    // the only 123 occurrence is the subsequence 6, 7, 9
    CHECK(occurrences(sigma_example, permutation::parse("123")) == 1);
    CHECK(occurrences(sigma_example, permutation::parse("1")) == 9);
    CHECK(contains(sigma_example, permutation::parse("321")));
    CHECK_FALSE(contains(sigma_example, permutation::parse("1234")));
}

TEST_CASE("increasing-pattern fast path agrees with backtracking") {
    const permutation incr4 = permutation::parse("1234");
    for (const auto& s : testutil::all_perms(6)) {
        long long slow = detail::count_occurrences_backtrack(s, incr4, false);
        CHECK(occurrences(s, incr4) == slow);
    }
    // identity has binom(n, m) occurrences of 1..m
    CHECK(occurrences(permutation::identity(10), permutation::parse("123")) == binom(10, 3));
}

TEST_CASE("inversions and non-inversions partition the pairs") {
    for (const auto& s : testutil::all_perms(5)) {
        const auto st = stats(s);
        CHECK(st.inv + st.coinv == binom2(5));
        CHECK(st.inv == occurrences(s, permutation::parse("21")));
        CHECK(st.coinv == occurrences(s, permutation::parse("12")));
    }
}

TEST_CASE("statistics of the worked example") {
    const auto st = stats(sigma_example);
    CHECK(st.inv == 29);
    CHECK(st.coinv == 7);
    CHECK(st.lrmin == 6);
    CHECK(st.linv == 3);
    const auto mask = lr_minimum_mask(sigma_example);
    CHECK(mask == std::vector<bool>{true, true, false, false, true, true, true, false, true});
}

TEST_CASE("linv matches its positional definition") {
    for (const auto& s : testutil::all_perms(6)) {
        const auto mask = lr_minimum_mask(s);
        long long want = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (mask[static_cast<size_t>(i)] && !mask[static_cast<size_t>(j)] && s[i] > s[j]) {
                    CHECK(i < j); // a minimum cannot exceed an earlier entry
                    ++want;
                }
        CHECK(stats(s).linv == want);
    }
}

TEST_CASE("pattern counts transport along the symmetry group") {
    const auto actions = {symmetry_action::reverse, symmetry_action::complement,
                          symmetry_action::reverse_complement, symmetry_action::inverse};
    const auto patterns = testutil::all_patterns_up_to(3, 2);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& s : testutil::all_perms(n)) {
            for (const auto& tau : patterns) {
                const long long base = occurrences(s, tau);
                for (auto a : actions)
                    CHECK(occurrences(apply_symmetry(s, a), apply_symmetry(tau, a)) == base);
            }
        }
    }
    // spot sample at n = 7 with a length-4 pattern
    const permutation s7 = permutation::parse("5271634");
    const permutation tau = permutation::parse("2413");
    for (auto a : actions)
        CHECK(occurrences(apply_symmetry(s7, a), apply_symmetry(tau, a)) == occurrences(s7, tau));
}

TEST_CASE("symmetry actions on small patterns") {
    CHECK(reverse_of(permutation::parse("132")) == permutation::parse("231"));
    CHECK(complement_of(permutation::parse("132")) == permutation::parse("312"));
    CHECK(apply_symmetry(permutation::parse("132"), symmetry_action::reverse_complement) ==
          permutation::parse("213"));
    CHECK(inverse_of(permutation::parse("231")) == permutation::parse("312"));
    CHECK(inverse_of(permutation::parse("132")) == permutation::parse("132"));
}

TEST_CASE("direct and skew sums concatenate with value shifts") {
    CHECK(direct_sum(permutation::parse("21"), permutation::parse("1")) == permutation::parse("213"));
    CHECK(skew_sum(permutation::parse("21"), permutation::parse("1")) == permutation::parse("321"));
    CHECK(direct_sum(permutation(), permutation::parse("12")) == permutation::parse("12"));
    CHECK(skew_sum(permutation::parse("1"), permutation()) == permutation::parse("1"));
}

TEST_CASE("skew decompositions list every cut point") {
    auto dec312 = skew_decompositions(permutation::parse("312"));
    REQUIRE(dec312.size() == 1);
    CHECK(dec312[0].first == permutation::parse("1"));
    CHECK(dec312[0].second == permutation::parse("12"));

    auto dec231 = skew_decompositions(permutation::parse("231"));
    REQUIRE(dec231.size() == 1);
    CHECK(dec231[0].first == permutation::parse("12"));
    CHECK(dec231[0].second == permutation::parse("1"));

    CHECK(skew_decompositions(permutation::parse("132")).empty());
    CHECK(skew_decompositions(permutation::parse("12")).empty());

    auto dec321 = skew_decompositions(permutation::parse("321"));
    REQUIRE(dec321.size() == 2);
    // ordered by size of the left part
    CHECK(dec321[0].first == permutation::parse("1"));
    CHECK(dec321[0].second == permutation::parse("21"));
    CHECK(dec321[1].first == permutation::parse("21"));
    CHECK(dec321[1].second == permutation::parse("1"));

    for (const auto& g : testutil::all_perms(5))
        for (const auto& [a, b] : skew_decompositions(g)) CHECK(skew_sum(a, b) == g);
}

TEST_CASE("max split cuts a 132-avoider around its maximum") {
    const auto parts = max_split(sigma_example);
    CHECK(parts.left == permutation::parse("312"));
    CHECK(parts.k == 4);
    CHECK(parts.right == permutation::parse("43251"));
    CHECK(skew_sum(direct_sum(parts.left, permutation::parse("1")), parts.right) == sigma_example);

    CHECK(max_split(permutation::parse("1")).k == 1);
    CHECK_THROWS_AS(max_split(permutation::parse("132")), std::invalid_argument);
    CHECK_THROWS_AS(max_split(permutation::parse("24135")), std::invalid_argument);
}

TEST_CASE("avoider enumeration is lexicographic and complete") {
    std::vector<permutation> seen;
    enumerate_avoiders(3, {permutation::parse("132")},
                       [&](const permutation& p) { seen.push_back(p); });
    std::vector<std::string> names;
    for (const auto& p : seen) names.push_back(p.str());
    CHECK(names == std::vector<std::string>{"123", "213", "231", "312", "321"});

    size_t factorial = 1;
    for (int n = 0; n <= 6; ++n) {
        if (n) factorial *= static_cast<size_t>(n);
        for (const auto* pat : {"132", "123", "321", "2413"}) {
            const pattern_set ps = {permutation::parse(pat)};
            CHECK(list_avoiders(n, ps) == filter_avoiders(n, ps));
        }
        CHECK(list_avoiders(n, {}).size() == factorial);
    }
}

TEST_CASE("both catalan classes have catalan cardinality") {
    for (int n = 0; n <= 10; ++n) {
        long long c132 = 0, c123 = 0;
        enumerate_avoiders(n, {permutation::parse("132")}, [&](const permutation&) { ++c132; });
        enumerate_avoiders(n, {permutation::parse("123")}, [&](const permutation&) { ++c123; });
        CHECK(bigint(c132) == catalan_number(n));
        CHECK(bigint(c123) == catalan_number(n));
    }
}

TEST_CASE("pattern set validation") {
    CHECK_THROWS_AS(check_pattern_set({permutation()}), std::invalid_argument);
    CHECK_THROWS_AS(check_pattern_set({permutation::parse("12"), permutation::parse("12")}),
                    std::invalid_argument);
}

TEST_CASE("occurrence counts split across the maximum like the recursions say") {
    const permutation p12 = permutation::parse("12"), p21 = permutation::parse("21");
    const permutation p123 = permutation::parse("123"), p213 = permutation::parse("213");
    const permutation p231 = permutation::parse("231"), p312 = permutation::parse("312");
    const permutation p321 = permutation::parse("321");
    for (int n = 1; n <= 8; ++n) {
        enumerate_avoiders(n, {permutation::parse("132")}, [&](const permutation& s) {
            const auto parts = max_split(s);
            const auto& a = parts.left;
            const auto& b = parts.right;
            const long long k = parts.k;
            CHECK(occurrences(s, p12) ==
                  occurrences(a, p12) + occurrences(b, p12) + (k - 1));
            CHECK(occurrences(s, p21) ==
                  occurrences(a, p21) + occurrences(b, p21) + k * (n - k));
            CHECK(occurrences(s, p123) ==
                  occurrences(a, p123) + occurrences(b, p123) + occurrences(a, p12));
            CHECK(occurrences(s, p213) ==
                  occurrences(a, p213) + occurrences(b, p213) + occurrences(a, p21));
            CHECK(occurrences(s, p231) == occurrences(a, p231) + occurrences(b, p231) +
                                              (n - k) * occurrences(a, p12) + (k - 1) * (n - k));
            CHECK(occurrences(s, p312) ==
                  occurrences(a, p312) + occurrences(b, p312) + k * occurrences(b, p12));
            CHECK(occurrences(s, p321) == occurrences(a, p321) + occurrences(b, p321) +
                                              k * occurrences(b, p21) + (n - k) * occurrences(a, p21));
        });
    }
}
