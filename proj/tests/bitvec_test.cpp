#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "sgtree/bitvec.hpp"

using sgtree::BasicBitVec;
using sgtree::BitVec;

namespace {

// string model of the same operations: index 0 is the leftmost character
std::string model_shift_up(const std::string& s, std::size_t x) {
  std::string out = std::string(std::min(x, s.size()), '0') + s;
  out.resize(s.size());
  return out;
}

std::string model_shift_down(const std::string& s, std::size_t x) {
  std::string out = x >= s.size() ? std::string() : s.substr(x);
  out.resize(s.size(), '0');
  return out;
}

std::string model_bin(const std::string& a, const std::string& b, bool is_and) {
  std::string out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = (is_and ? (a[i] == '1' && b[i] == '1') : (a[i] == '1' || b[i] == '1')) ? '1' : '0';
  return out;
}

std::string random_bits(std::mt19937& rng, std::size_t n) {
  std::string s(n, '0');
  std::bernoulli_distribution bit(0.5);
  for (char& c : s)
    if (bit(rng)) c = '1';
  return s;
}

}  // namespace

TEST_CASE("string round trip") {
  const BitVec v = BitVec::from_string("1101001");
  CHECK(v.capacity() == 7);
  CHECK(v.to_string(7) == "1101001");
  CHECK(v.to_string(4) == "1101");
  CHECK(v.test(0));
  CHECK(!v.test(2));
  CHECK(v.test(6));
}

TEST_CASE("set and popcount") {
  BitVec v(70);
  v.set(0);
  v.set(63);
  v.set(64);
  v.set(69);
  CHECK(v.popcount() == 4);
  CHECK(v.popcount_below(64) == 2);
  CHECK(v.popcount_below(65) == 3);
  CHECK(v.popcount_below(0) == 0);
}

TEST_CASE("shift_up moves toward higher indices") {
  const BitVec v = BitVec::from_string("11110110");
  CHECK(v.shift_up(1).to_string(8) == "01111011");
  CHECK(v.shift_up(0).to_string(8) == "11110110");
  CHECK(v.shift_up(7).to_string(8) == "00000001");
  CHECK(v.shift_up(8).to_string(8) == "00000000");
  CHECK(v.shift_up(200).to_string(8) == "00000000");
}

TEST_CASE("shift_down moves toward index zero") {
  const BitVec v = BitVec::from_string("11011111");
  CHECK(v.shift_down(2).to_string(8) == "01111100");
  CHECK(v.shift_down(0).to_string(8) == "11011111");
  CHECK(v.shift_down(8).to_string(8) == "00000000");
}

TEST_CASE("bits shifted past the capacity are dropped") {
  const BitVec v = BitVec::from_string("1111");
  CHECK(v.shift_up(1).to_string(4) == "0111");
  CHECK(v.shift_up(1).popcount() == 3);
  // and they do not come back
  CHECK(v.shift_up(1).shift_down(1).to_string(4) == "1110");
}

TEST_CASE("ones ranges") {
  CHECK(BitVec::ones(2, 5, 8).to_string(8) == "00111000");
  CHECK(BitVec::ones(0, 8, 8).to_string(8) == "11111111");
  CHECK(BitVec::ones(-3, 2, 8).to_string(8) == "11000000");  // clamped at 0
  CHECK(BitVec::ones(5, 5, 8).popcount() == 0);
  CHECK(BitVec::ones(-2, 0, 8).popcount() == 0);
  CHECK(BitVec::ones(60, 70, 128).popcount() == 10);  // limb boundary
}

TEST_CASE("and or") {
  const BitVec a = BitVec::from_string("1100");
  const BitVec b = BitVec::from_string("1010");
  CHECK((a & b).to_string(4) == "1000");
  CHECK((a | b).to_string(4) == "1110");
}

TEST_CASE("equality is on content, not capacity") {
  CHECK(BitVec::from_string("101") == BitVec::from_string("101", 64));
  CHECK(!(BitVec::from_string("101") == BitVec::from_string("100")));
}

TEST_CASE("resized keeps content") {
  const BitVec v = BitVec::from_string("10101");
  const BitVec w = v.resized(40);
  CHECK(w.capacity() == 40);
  CHECK(w.to_string(5) == "10101");
  CHECK(w == v);
}

TEST_CASE("narrow limbs agree with wide limbs and the string model") {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<std::size_t> len_dist(1, 63);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = len_dist(rng);
    const std::string s = random_bits(rng, n);
    const std::string t = random_bits(rng, n);
    const std::size_t x = std::uniform_int_distribution<std::size_t>(0, n + 2)(rng);

    const auto v8 = BasicBitVec<std::uint8_t, 64>::from_string(s);
    const auto w8 = BasicBitVec<std::uint8_t, 64>::from_string(t);
    const BitVec v64 = BitVec::from_string(s);
    const BitVec w64 = BitVec::from_string(t);

    CHECK(v8.shift_up(x).to_string(n) == model_shift_up(s, x));
    CHECK(v64.shift_up(x).to_string(n) == model_shift_up(s, x));
    CHECK(v8.shift_down(x).to_string(n) == model_shift_down(s, x));
    CHECK(v64.shift_down(x).to_string(n) == model_shift_down(s, x));
    CHECK((v8 & w8).to_string(n) == model_bin(s, t, true));
    CHECK((v64 | w64).to_string(n) == model_bin(s, t, false));
    CHECK(v8.popcount() == v64.popcount());
    CHECK(v8.popcount_below(x <= n ? x : n) == v64.popcount_below(x <= n ? x : n));
  }
}

TEST_CASE("shift then unshift clears exactly the wrapped bits") {
  std::mt19937 rng(7);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 120)(rng);
    const std::string s = random_bits(rng, n);
    const std::size_t x = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    const BitVec v = BitVec::from_string(s);
    // up then down: the top x bits fall off
    std::string expect = s;
    for (std::size_t i = n - std::min(x, n); i < n; ++i) expect[i] = '0';
    CHECK(v.shift_up(x).shift_down(x).to_string(n) == expect);
  }
}
