#include <doctest.h>

#include "atomlr/core.hpp"

using namespace atomlr;

TEST_CASE("alpha star encodings") {
    CHECK(render(encode_alpha_star({0, 3, 0, 1, 3})) == "31040052");
    CHECK(render(encode_alpha_star({0, 0, 0})) == "321");
    CHECK(render(encode_alpha_star({1, 0, 2, 2})) == "201043");
    CHECK(render(encode_alpha_star({3, 2, 0, 2})) == "3004201");
}

TEST_CASE("alpha star decoding") {
    CHECK(decode_alpha_star(parse_bstring("31040052")) == Comp{0, 3, 0, 1, 3});
    CHECK(decode_alpha_star(parse_bstring("321")) == Comp{0, 0, 0});
    CHECK_THROWS_AS(decode_alpha_star(parse_bstring("3004010")), std::invalid_argument);
    CHECK_THROWS_AS(decode_alpha_star(parse_bstring("12")), std::invalid_argument);
}

TEST_CASE("alpha star round trip, n <= 5 and parts <= 4") {
    for (int n = 0; n <= 5; ++n)
        for (int d = 0; d <= 4 * n; ++d)
            for (auto& a : compositions(d, n)) {
                if (max_part(a) > 4) continue;
                auto s = encode_alpha_star(a);
                REQUIRE(static_cast<int>(s.size()) == n + max_part(a));
                REQUIRE(is_descending_string(s));
                REQUIRE(decode_alpha_star(s) == a);
            }
}

TEST_CASE("lambda encodings") {
    CHECK(render(encode_lambda_minus({4, 4, 2, 1, 0}, 5)) == "101010011");
    CHECK(render(encode_lambda_minus({2, 2, 1}, 3)) == "01011");
    CHECK(render(encode_lambda_minus({0, 0}, 2)) == "11");
    CHECK(render(encode_lambda_plus({4, 4, 2, 1, 0}, 5)) == "0+0+0++00");
    CHECK(render(encode_lambda_plus({0, 0, 0}, 3)) == "000");
    // zeros of the plus string sit where the minus string has ones
    CHECK(render(encode_lambda_plus({2, 2, 1}, 3)) == "+0+00");
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 6; ++d)
            for (auto& l : partitions(d, n)) {
                auto m = encode_lambda_minus(l, n), p = encode_lambda_plus(l, n);
                REQUIRE(m.size() == static_cast<std::size_t>(n + l[0]));
                REQUIRE(m.size() == p.size());
                for (std::size_t i = 0; i < m.size(); ++i)
                    REQUIRE((m[i].kind == Token::Colour) == (p[i].kind == Token::Zero));
            }
}

TEST_CASE("descending strings") {
    CHECK(is_descending_string(parse_bstring("31040052")));
    CHECK_FALSE(is_descending_string(parse_bstring("120")));
    CHECK(is_descending_string({}));
}

TEST_CASE("beta skip strings") {
    CHECK(render(beta_skip_string({2, 0, 0, 2}, 2, 7)) == "3004100");
    CHECK(render(beta_skip_string({3, 0, 0, 2}, 2, 7)) == "3004010");
    CHECK(render(beta_skip_string({0, 0}, 1, 3)) == "200");
    CHECK(render(beta_skip_string({0, 0}, 1)) == "20");
    CHECK_THROWS_AS(beta_skip_string({1, 0}, 1), std::invalid_argument);
}

TEST_CASE("sigma chain") {
    CHECK(sigma_chain(Perm({4, 1, 2, 3}), 1) == Perm({3, 1, 2}));
    CHECK(sigma_chain(Perm({2, 1, 4, 3}), 2) == Perm({2, 1}));
    CHECK(sigma_chain(Perm({2, 1, 4, 3}), 0) == Perm({2, 1, 4, 3}));
    CHECK_THROWS_AS(sigma_chain(Perm({2, 1}), 3), std::invalid_argument);
    for (auto& s : Perm::all(4)) {
        CHECK(s.inverse().inverse() == s);
        for (int j = 0; j < 4; ++j) CHECK(sigma_chain(s, j + 1) == sigma_chain(sigma_chain(s, j), 1));
    }
}

TEST_CASE("tokens and dotted strings") {
    auto s = parse_bstring("10.0.3+.2|5.+");
    REQUIRE(s.size() == 5);
    CHECK(s[0] == Token::colour(10));
    CHECK(s[2] == Token::colour_plus(3));
    CHECK(s[3] == Token::pair(2, 5));
    CHECK(render_dotted(s) == "10.0.3+.2|5.+");
}
