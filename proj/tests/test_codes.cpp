#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "codedomain/code.hpp"
#include "codedomain/code_io.hpp"
#include "codedomain/errors.hpp"
#include "oracle.hpp"

using namespace codedomain;

namespace {

Word W(unsigned q, std::vector<Symbol> s) { return Word(q, std::move(s)); }

Code from_strings(unsigned q, std::vector<std::string> words) {
  std::vector<std::vector<Symbol>> rows;
  for (const auto& w : words) {
    std::vector<Symbol> r;
    for (char c : w) r.push_back(static_cast<Symbol>(c - '0'));
    rows.push_back(r);
  }
  return Code::from_rows(q, rows);
}

// Random code plus its oracle form.
std::pair<Code, std::vector<oracle::Vec>> random_code(std::mt19937_64& rng, unsigned q, unsigned n, std::size_t m) {
  std::set<oracle::Vec> words;
  std::uint64_t space = 1;
  for (unsigned i = 0; i < n && space < (1u << 20); ++i) space *= q;
  m = std::min<std::size_t>(m, space);
  while (words.size() < m) {
    oracle::Vec w(n);
    for (auto& s : w) s = static_cast<int>(rng() % q);
    words.insert(w);
  }
  std::vector<std::vector<Symbol>> rows;
  std::vector<oracle::Vec> plain(words.begin(), words.end());
  for (const auto& w : plain) rows.emplace_back(w.begin(), w.end());
  return {Code::from_rows(q, rows), plain};
}

}  // namespace

TEST(Hamming, Examples) {
  EXPECT_EQ(hamming_distance(W(2, {0, 0, 0}), W(2, {0, 0, 0})), 0u);
  EXPECT_EQ(hamming_distance(W(2, {0, 0, 0}), W(2, {1, 1, 1})), 3u);
  EXPECT_EQ(hamming_distance(W(3, {0, 1, 0, 2}), W(3, {0, 1, 1, 2})), 1u);
  EXPECT_THROW(hamming_distance(W(2, {0, 0}), W(2, {0, 0, 0})), ContractViolation);
  EXPECT_THROW(hamming_distance(W(2, {0, 0}), W(3, {0, 0})), ContractViolation);
  EXPECT_THROW(W(2, {2}), ContractViolation);
}

TEST(Hamming, MetricAxioms) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    unsigned q = 2 + rng() % 4, n = 1 + rng() % 10;
    auto rw = [&] {
      std::vector<Symbol> s(n);
      for (auto& x : s) x = static_cast<Symbol>(rng() % q);
      return W(q, s);
    };
    Word a = rw(), b = rw(), c = rw();
    EXPECT_EQ(hamming_distance(a, b) == 0, a == b);
    EXPECT_EQ(hamming_distance(a, b), hamming_distance(b, a));
    EXPECT_LE(hamming_distance(a, c), hamming_distance(a, b) + hamming_distance(b, c));
  }
}

TEST(Code, ConstructionValidates) {
  EXPECT_THROW(Code::from_rows(2, {}), ContractViolation);
  EXPECT_THROW(from_strings(2, {"00", "00"}), ContractViolation);
  EXPECT_THROW(from_strings(2, {"00", "000"}), ContractViolation);
  EXPECT_THROW(from_strings(2, {"02"}), ContractViolation);
}

TEST(MinDistance, Examples) {
  auto rep = min_distance(from_strings(2, {"000", "111"}));
  EXPECT_EQ(rep.d, 3u);
  ASSERT_TRUE(rep.witness);
  auto single = min_distance(from_strings(2, {"0000"}));
  EXPECT_EQ(single.d, 0u);
  EXPECT_FALSE(single.witness);
  Code cube = from_strings(2, {"00", "01", "10", "11"});
  auto md = min_distance(cube);
  EXPECT_EQ(md.d, 1u);
  EXPECT_EQ(cube.distance(md.witness->first, md.witness->second), 1u);
}

TEST(MinDistance, AgreesWithOracleOnRandomCodes) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    unsigned q = 2 + rng() % 3, n = 1 + rng() % 70;
    auto [c, plain] = random_code(rng, q, n, 1 + rng() % 40);
    auto md = min_distance(c);
    EXPECT_EQ(static_cast<int>(md.d), oracle::min_distance(plain));
    if (md.witness) EXPECT_EQ(c.distance(md.witness->first, md.witness->second), md.d);
    CodeParams p = params(c);
    EXPECT_LE(p.d, p.n);
    EXPECT_EQ(p.d == 0, p.m == 1);
  }
}

TEST(Params, Examples) {
  EXPECT_EQ(params(from_strings(2, {"000", "111"})), CodeParams(2, 3, 2, 3));
  EXPECT_EQ(params(from_strings(2, {"0000"})), CodeParams(2, 4, 1, 0));
  EXPECT_THROW(CodeParams(2, 3, 9, 1), ContractViolation);
  EXPECT_THROW(CodeParams(2, 3, 2, 0), ContractViolation);
  EXPECT_THROW(CodeParams(2, 3, 1, 1), ContractViolation);
}

TEST(FloorLog, Examples) {
  EXPECT_EQ(floor_log_q(16, 2), 4u);
  EXPECT_EQ(floor_log_q(20, 2), 4u);
  EXPECT_EQ(floor_log_q(1, 5), 0u);
  EXPECT_EQ(floor_log_q(pow_of(3, 40) - 1, 3), 39u);
  EXPECT_EQ(floor_log_q(pow_of(3, 40), 3), 40u);
}

TEST(CodePoint, Examples) {
  auto a = code_point(CodeParams(2, 7, 16, 3));
  EXPECT_EQ(a.r, make_rational(4, 7));
  EXPECT_EQ(a.delta, make_rational(3, 7));
  auto b = code_point(CodeParams(2, 10, 20, 3));
  EXPECT_EQ(b.r, make_rational(2, 5));
  EXPECT_EQ(b.delta, make_rational(3, 10));
  auto c = code_point(CodeParams(2, 4, 1, 0));
  EXPECT_EQ(c.r, 0);
  EXPECT_EQ(c.delta, 0);
}

TEST(RateReal, Examples) {
  EXPECT_EQ(rate_real(CodeParams(2, 7, 16, 3), 30), RatInterval::point(make_rational(4, 7)));
  auto iv = rate_real(CodeParams(2, 10, 20, 3), 40);
  EXPECT_LE(to_double(iv.lo()), oracle::kLog2Of20Over10 + 1e-15);
  EXPECT_GE(to_double(iv.hi()), oracle::kLog2Of20Over10 - 1e-15);
  EXPECT_LE(iv.width(), pow2(-40));
  EXPECT_EQ(rate_real(CodeParams(3, 5, 1, 0), 30), RatInterval::point(Rational(0)));
}

TEST(RateReal, WithinOneOverNOfFloorRate) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    unsigned q = 2 + rng() % 5, n = 1 + rng() % 12;
    BigInt top = pow_of(q, n);
    BigInt m = 1 + BigInt(static_cast<unsigned long>(rng() % 1000000)) % top;
    unsigned d = m == 1 ? 0 : 1 + rng() % n;
    CodeParams p(q, n, m, d);
    CodePoint cp = code_point(p);
    EXPECT_GE(cp.r, 0);
    EXPECT_LE(cp.r, 1);
    EXPECT_GE(cp.delta, 0);
    EXPECT_LE(cp.delta, 1);
    RatInterval iv = rate_real(p, 30);
    EXPECT_GE(iv.lo(), cp.r - pow2(-30));
    EXPECT_LE(iv.hi() - cp.r, make_rational(1, n));
  }
}

TEST(Numbering, FirstIndicesAreDistinctWellFormed) {
  for (unsigned q : {2u, 3u}) {
    std::set<std::tuple<unsigned, std::string, unsigned>> seen;
    for (unsigned long i = 0; i < 3; ++i) {
      ParamTriple t = decode_triple(BigInt(i), q);
      EXPECT_TRUE(is_well_formed(t, q));
      EXPECT_TRUE(seen.insert({t.n, to_string(t.m), t.d}).second);
    }
  }
  ParamTriple first = decode_triple(0, 2);
  EXPECT_EQ(first, (ParamTriple{1, 1, 0}));
}

TEST(Numbering, RoundTripAndInjective) {
  std::mt19937_64 rng(21);
  for (unsigned q : {2u, 3u, 4u}) {
    std::set<std::string> indices;
    std::set<std::tuple<unsigned, std::string, unsigned>> triples;
    for (int t = 0; t < 10000; ++t) {
      unsigned n = 1 + rng() % 9;
      BigInt top = pow_of(q, n);
      BigInt m = 1 + BigInt(static_cast<unsigned long>(rng())) % top;
      unsigned d = m == 1 ? 0 : 1 + rng() % n;
      ParamTriple tr{n, m, d};
      ASSERT_TRUE(is_well_formed(tr, q));
      BigInt idx = encode_triple(tr, q);
      EXPECT_EQ(decode_triple(idx, q), tr);
      bool new_triple = triples.insert({n, to_string(m), d}).second;
      bool new_index = indices.insert(to_string(idx)).second;
      EXPECT_EQ(new_triple, new_index);
    }
  }
  for (unsigned long i = 0; i < 2000; ++i) EXPECT_EQ(encode_triple(decode_triple(BigInt(i), 3), 3), BigInt(i));
}

TEST(Numbering, RejectsMalformed) {
  EXPECT_THROW(encode_triple(ParamTriple{3, 9, 1}, 2), ContractViolation);
  EXPECT_THROW(encode_triple(ParamTriple{3, 2, 0}, 2), ContractViolation);
  EXPECT_THROW(encode_triple(ParamTriple{3, 2, 4}, 2), ContractViolation);
  EXPECT_THROW(encode_triple(ParamTriple{0, 1, 0}, 2), ContractViolation);
}

TEST(CodeIo, RoundTrip) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    unsigned q = 2 + rng() % 30, n = 1 + rng() % 8;
    auto [c, plain] = random_code(rng, q, n, 1 + rng() % 20);
    std::string text = code_to_text(c);
    EXPECT_EQ(code_from_text(text), c);
  }
  EXPECT_EQ(code_to_text(from_strings(2, {"000", "111"})), "2 3 2\n000\n111\n");
  EXPECT_THROW(code_from_text("2 3 2\n000\n"), ContractViolation);
  EXPECT_EQ(code_from_text("# header {\"a\": 1}\n2 3 2\n  # note\n000\n111\n"), from_strings(2, {"000", "111"}));
}

TEST(CodeIo, CsvRow) {
  EXPECT_EQ(point_csv_row(CodeParams(2, 7, 16, 3)), "7,16,3,4/7,3/7,0.571428571429,0.428571428571");
}
