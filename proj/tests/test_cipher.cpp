#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "specsplit/cipher.hpp"
#include "specsplit/generators.hpp"
#include "specsplit/io.hpp"

using namespace specsplit;

namespace {

std::string random_text(std::size_t len, Rng& rng) {
  std::string s(len, '\0');
  for (auto& c : s) {
    c = static_cast<char>('A' + static_cast<int>(rng.below(26)));
  }
  return s;
}

}  // namespace

TEST_CASE("encoding packs bytes row-major with an offset of one") {
  const auto g = encode_text("ABCD");
  CHECK(g.side == 2);
  CHECK(g.cells == std::vector<std::vector<int>>{{66, 67}, {68, 69}});

  const auto single = encode_text("A");
  CHECK(single.side == 1);
  CHECK(single.cells == std::vector<std::vector<int>>{{66}});

  const auto padded = encode_text("ABCDE");
  CHECK(padded.side == 3);
  int pads = 0;
  for (const auto& row : padded.cells) {
    for (int c : row) pads += (c == TextGrid::pad_code);
  }
  CHECK(pads == 4);
  CHECK(padded.cells[0] == std::vector<int>{66, 67, 68});

  CHECK_THROWS_AS(encode_text(""), std::invalid_argument);
}

TEST_CASE("decoding inverts encoding for arbitrary bytes") {
  Rng rng(71);
  for (std::size_t len : {1u, 2u, 3u, 4u, 5u, 9u, 10u, 26u, 144u}) {
    const auto text = random_text(len, rng);
    CHECK(decode_text(encode_text(text)) == text);
  }
  // full byte range, including NUL
  std::string bytes;
  for (int b = 0; b < 256; ++b) bytes.push_back(static_cast<char>(b));
  CHECK(decode_text(encode_text(bytes)) == bytes);

  TextGrid bad;
  bad.side = 1;
  bad.cells = {{300}};
  CHECK_THROWS_AS(decode_text(bad), std::invalid_argument);
}

TEST_CASE("encryption applies the row and column shuffles") {
  const auto g = encode_text("ABCD");
  const auto rp = Permutation::from_map({1, 0});
  const auto cp = Permutation::identity(2);
  const auto c = encrypt(g, rp, cp);
  CHECK(c.cells == std::vector<std::vector<int>>{{68, 69}, {66, 67}});
  CHECK(decrypt(c, rp, cp) == g);
}

TEST_CASE("encrypt then decrypt round trips random grids") {
  Rng rng(72);
  for (int trial = 0; trial < 10; ++trial) {
    const auto text = random_text(5 + rng.below(60), rng);
    const auto g = encode_text(text);
    const auto rp = random_permutation(g.side, rng);
    const auto cp = random_permutation(g.side, rng);
    const auto c = encrypt(g, rp, cp);
    CHECK(decrypt(c, rp, cp) == g);
    CHECK(decode_text(decrypt(c, rp, cp)) == text);
  }
}

TEST_CASE("crack recovers a planted shuffle exactly") {
  Rng rng(73);
  const auto text = random_text(100, rng);  // 10 x 10 grid, no pads
  const auto plain = encode_text(text);
  const auto cipher = encrypt(plain, random_permutation(10, rng),
                              random_permutation(10, rng));

  const auto r = crack(plain, cipher, EngineConfig{});
  REQUIRE(r.status == CrackStatus::Match);
  REQUIRE(r.row_perm.has_value());
  CHECK(decrypt(cipher, *r.row_perm, *r.col_perm) == plain);
  CHECK(decode_text(decrypt(cipher, *r.row_perm, *r.col_perm)) == text);
}

TEST_CASE("crack accepts the identity shuffle") {
  const auto plain = encode_text("THE QUICK BROWN FOX");
  const auto r = crack(plain, plain, EngineConfig{});
  REQUIRE(r.status == CrackStatus::Match);
  CHECK(decrypt(plain, *r.row_perm, *r.col_perm) == plain);
}

TEST_CASE("a corrupted cell never yields a match") {
  Rng rng(74);
  for (int trial = 0; trial < 6; ++trial) {
    const auto text = random_text(36, rng);
    const auto plain = encode_text(text);
    auto cipher = encrypt(plain, random_permutation(6, rng),
                          random_permutation(6, rng));
    auto& cell = cipher.cells[rng.below(6)][rng.below(6)];
    cell = 1 + (cell + 7) % 256;
    const auto r = crack(plain, cipher, EngineConfig{});
    CHECK(r.status != CrackStatus::Match);
  }
}

TEST_CASE("grids of different sizes are rejected") {
  CHECK_THROWS_AS(crack(encode_text("ABCD"), encode_text("ABCDEFGHI"),
                        EngineConfig{}),
                  std::invalid_argument);
}

TEST_CASE("grid json round trip and rejection") {
  const auto g = encode_text("HELLO WORLD");
  CHECK(parse_grid_json(grid_json(g)) == g);

  CHECK_THROWS_AS(parse_grid_json("not json"), ParseError);
  CHECK_THROWS_AS(parse_grid_json(R"({"side": 2})"), ParseError);
  CHECK_THROWS_AS(parse_grid_json(R"({"side": 2, "cells": [[1, 2], [3]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_grid_json(R"({"side": 1, "cells": [[999]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_grid_json(R"({"side": -1, "cells": []})"), ParseError);
}

TEST_CASE("crack report json") {
  const auto plain = encode_text("ABCDEFGHI");
  const auto cipher = encrypt(plain, Permutation::from_map({2, 0, 1}),
                              Permutation::from_map({1, 2, 0}));
  const auto r = crack(plain, cipher, EngineConfig{});
  REQUIRE(r.status == CrackStatus::Match);
  const auto doc = nlohmann::json::parse(report_json(r));
  CHECK(doc.at("status") == "match");
  CHECK(doc.at("row_perm").size() == 3);
  CHECK(doc.at("stats").at("solve_count").is_number());
}
