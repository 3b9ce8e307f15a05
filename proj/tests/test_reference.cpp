#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rankdec/channel.hpp"
#include "rankdec/reference.hpp"

using namespace rankdec;

namespace {

MessageTuple random_message(const InterleavedCode& code, Rng& rng) {
  MessageTuple msg(code.s);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    msg[i].c.resize(code.k[i]);
    for (Elem& c : msg[i].c) c = rng.elem(code.f());
  }
  return msg;
}

InterleavedCode example_code() {
  return make_code(std::make_shared<Field>(2, 7), 2, 7, {2, 2});
}

// Basis of the row space of a word, as digit vectors over the base field.
std::vector<std::vector<Elem>> row_space_basis(const InterleavedCode& code,
                                               const WordMatrix& e) {
  const Field& f = code.f();
  Mat digits = expand_over_base(f, e);
  // expand_over_base stacks the m digit rows of each word row; row-reduce over
  // the base field to get an independent basis.
  RrefResult rr = mat_rref(f.base_field(), digits);
  std::vector<std::vector<Elem>> basis;
  for (std::size_t p = 0; p < rr.rank; ++p) {
    std::vector<Elem> row(code.n);
    for (std::uint32_t j = 0; j < code.n; ++j) row[j] = rr.r.at(p, j);
    basis.push_back(std::move(row));
  }
  return basis;
}

}  // namespace

TEST_CASE("criterion matrix shapes and the zero-error baseline") {
  InterleavedCode code = example_code();
  const Field& f = code.f();
  Rng rng(1);
  MessageTuple msg = random_message(code, rng);
  WordMatrix cw = encode(code, msg);

  Mat m3 = rr_matrix(code, cw, 3);
  CHECK(m3.rows == 7);  // (7-3-1) + (7-2-3) + (7-2-3)
  CHECK(m3.cols == 7);
  Mat m0 = rr_matrix(code, cw, 0);
  CHECK(m0.rows == 16);
  // A clean codeword keeps the full generator span and nothing more.
  CHECK(mat_rank(f, m0) == code.n - 1);
  CHECK(!rr_fails(code, cw, 0));

  Mat s3 = syndrome_matrix(code, cw, 3);
  CHECK(s3.rows == 4);  // two stacked (7-2-3) x 4 blocks
  CHECK(s3.cols == 4);
  CHECK(!sb_fails(code, cw, 0));

  CHECK_THROWS(rr_matrix(code, cw, 5));       // empty received block
  CHECK_THROWS(syndrome_matrix(code, cw, 5));
  CHECK_THROWS(rr_matrix(code, WordMatrix(1, 7), 3));
}

TEST_CASE("received and error words span the same criterion row space") {
  // Codeword rows fold into the generator block, so swapping the received
  // rows for the bare error rows must not change the kernel.
  InterleavedCode code = example_code();
  const Field& f = code.f();
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    Rng rng = trial_stream(21, trial);
    std::uint32_t t = 1 + std::uint32_t(rng.below(3));
    MessageTuple msg = random_message(code, rng);
    WordMatrix e = sample_rank_error(code, t, rng);
    WordMatrix r = word_add(code, encode(code, msg), e);
    Mat from_r = rr_matrix(code, r, t);
    Mat from_e = rr_matrix(code, e, t);
    CHECK(mat_rank(f, from_r) == mat_rank(f, from_e));
    for (const std::vector<Elem>& v : mat_kernel(f, from_r)) {
      for (std::size_t row = 0; row < from_e.rows; ++row) {
        Elem acc = 0;
        for (std::size_t c = 0; c < from_e.cols; ++c)
          acc = f.add(acc, f.mul(from_e.at(row, c), v[c]));
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("syndrome blocks annihilate the error span polynomial") {
  // x_l lifts the l-th error row-space vector through the parity vector; the
  // minimal vanishing polynomial of their span is a right kernel vector of
  // every stacked syndrome block.
  InterleavedCode code = example_code();
  const Field& f = code.f();
  std::uint32_t k = code.k[0];
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    Rng rng = trial_stream(22, trial);
    std::uint32_t t = 1 + std::uint32_t(rng.below(3));
    MessageTuple msg = random_message(code, rng);
    WordMatrix e = sample_rank_error(code, t, rng);
    WordMatrix r = word_add(code, encode(code, msg), e);

    std::vector<std::vector<Elem>> basis = row_space_basis(code, e);
    REQUIRE(basis.size() == t);
    std::vector<Elem> x;
    for (const std::vector<Elem>& row : basis) {
      Elem acc = 0;
      for (std::uint32_t j = 0; j < code.n; ++j)
        acc = f.add(acc, f.mul(row[j], f.frobenius(code.h[j], k)));
      x.push_back(acc);
    }
    LinPoly gamma = min_subspace_poly(f, x);
    REQUIRE(lp_qdeg(gamma) == t);

    Mat s = syndrome_matrix(code, r, t);
    REQUIRE(s.cols == gamma.c.size());
    for (std::size_t row = 0; row < s.rows; ++row) {
      Elem acc = 0;
      for (std::size_t v = 0; v < s.cols; ++v)
        acc = f.add(acc, f.mul(s.at(row, v), gamma.c[v]));
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("classic syndrome decoder rebuilt from the stacked matrix") {
  // Single-row code: kernel of the syndrome matrix -> span polynomial -> error
  // locations -> coefficients -> message. Must match both the transmitted
  // message and the interpolation decoder.
  auto f7 = std::make_shared<Field>(2, 7);
  InterleavedCode code = make_code(f7, 1, 7, {3});
  const Field& f = code.f();
  const Field& bf = f.base_field();
  std::uint32_t k = code.k[0];
  std::uint64_t decoded = 0;
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    Rng rng = trial_stream(23, trial);
    std::uint32_t t = 1 + std::uint32_t(rng.below(2));
    MessageTuple msg = random_message(code, rng);
    WordMatrix e = sample_rank_error(code, t, rng);
    WordMatrix r = word_add(code, encode(code, msg), e);

    Mat s = syndrome_matrix(code, r, t);
    if (sb_fails(code, r, t)) continue;  // rare; skip the degenerate draw
    std::vector<std::vector<Elem>> ker = mat_kernel(f, s);
    REQUIRE(ker.size() == 1);
    LinPoly gamma;
    gamma.c = ker[0];

    // Root space of gamma as a base-field linear map.
    Mat phi(f.m(), f.m());
    for (std::uint32_t d = 0; d < f.m(); ++d) {
      std::vector<std::uint32_t> unit(f.m(), 0);
      unit[d] = 1;
      Elem img = lp_eval(f, gamma, f.from_digits(unit));
      std::vector<std::uint32_t> digits = f.to_digits(img);
      for (std::uint32_t row = 0; row < f.m(); ++row) phi.at(row, d) = digits[row];
    }
    std::vector<std::vector<Elem>> roots = mat_kernel(bf, phi);
    REQUIRE(roots.size() == t);

    // Coordinates of each root in the shifted parity basis give the support.
    Mat hbasis(f.m(), code.n);
    for (std::uint32_t j = 0; j < code.n; ++j) {
      std::vector<std::uint32_t> digits = f.to_digits(f.frobenius(code.h[j], k));
      for (std::uint32_t row = 0; row < f.m(); ++row) hbasis.at(row, j) = digits[row];
    }
    std::vector<Elem> x;
    Mat b(t, code.n);
    for (std::uint32_t l = 0; l < t; ++l) {
      std::vector<Elem> rhs(roots[l].begin(), roots[l].end());
      auto coords = mat_solve(bf, hbasis, rhs);
      REQUIRE(coords.has_value());
      Elem acc = 0;
      for (std::uint32_t j = 0; j < code.n; ++j) {
        b.at(l, j) = (*coords)[j];
        acc = f.add(acc, f.mul((*coords)[j], f.frobenius(code.h[j], k)));
      }
      x.push_back(acc);  // root rebuilt from its coordinates
    }

    // Error coefficients from s_u = sum_l a_l x_l^{[u]}.
    std::vector<Elem> syn = syndromes(code, r)[0];
    Mat moore(syn.size(), t);
    for (std::size_t u = 0; u < syn.size(); ++u)
      for (std::uint32_t l = 0; l < t; ++l) moore.at(u, l) = f.frobenius(x[l], u);
    auto a = mat_solve(f, moore, syn);
    REQUIRE(a.has_value());

    WordMatrix recovered(1, code.n);
    for (std::uint32_t j = 0; j < code.n; ++j) {
      Elem acc = 0;
      for (std::uint32_t l = 0; l < t; ++l)
        acc = f.add(acc, f.mul((*a)[l], b.at(l, j)));
      recovered.at(0, j) = acc;
    }
    CHECK((recovered.a == e.a));

    std::vector<Elem> clean(code.n);
    for (std::uint32_t j = 0; j < code.n; ++j)
      clean[j] = f.sub(r.at(0, j), recovered.at(0, j));
    LinPoly rebuilt = lp_lagrange(f, code.g, clean);
    CHECK((rebuilt == lp_trim(msg[0])));

    DecodeOutcome out = decode(code, r, DecodeMode::Unique);
    REQUIRE(out.kind == OutcomeKind::Unique);
    CHECK((out.messages[0][0] == rebuilt));
    decoded++;
  }
  CHECK(decoded >= 25);
}

TEST_CASE("kernel block instrumentation shapes") {
  InterleavedCode code = example_code();
  Rng rng(5);
  MessageTuple msg = random_message(code, rng);
  WordMatrix r = word_add(code, encode(code, msg), sample_rank_error(code, 3, rng));
  InterpSolution sol = interpolate(code, r, radius_unique(code));
  Mat q0 = q0_matrix(sol);
  Mat q0b = q0bar_matrix(sol);
  CHECK(q0.rows == sol.dim());
  CHECK(q0.cols == code.s);
  CHECK(q0b.rows == sol.dim());
  CHECK(q0b.cols == code.s + 1);
  for (std::size_t h = 0; h < sol.dim(); ++h) {
    CHECK(q0b.at(h, 0) == sol.q(h, 0, 0));
    for (std::uint32_t i = 0; i < code.s; ++i) {
      CHECK(q0.at(h, i) == sol.q(h, i + 1, 0));
      CHECK(q0b.at(h, i + 1) == sol.q(h, i + 1, 0));
    }
  }
}

TEST_CASE("failure predicates chain on a failure-rich code") {
  // Rank-deficient root system -> deficient leading kernel block -> both
  // classic criteria fire, and the two classic criteria agree exactly.
  auto f4 = std::make_shared<Field>(2, 4);
  InterleavedCode code = make_code(f4, 2, 4, {1, 1});
  const Field& f = code.f();
  std::uint32_t t = radius_unique(code);
  std::uint64_t a_cnt = 0, b_cnt = 0, c_cnt = 0, b_without_a = 0, c_without_b = 0;
  for (std::uint64_t trial = 0; trial < 4000; ++trial) {
    Rng rng = trial_stream(24, trial);
    MessageTuple msg = random_message(code, rng);
    WordMatrix r = word_add(code, encode(code, msg), sample_rank_error(code, t, rng));
    InterpSolution sol = interpolate(code, r, t);
    RootSystem sys = build_rootfind_system(code, sol);
    bool root_deficient = mat_rank(f, sys.a) < code.sum_k();
    bool block_deficient = mat_rank(f, q0bar_matrix(sol)) < code.s;
    bool rr = rr_fails(code, r, t);
    bool sb = sb_fails(code, r, t);
    if (root_deficient) {
      a_cnt++;
      CHECK(block_deficient);
    }
    if (block_deficient) {
      b_cnt++;
      CHECK(rr);
      if (!root_deficient) b_without_a++;
    }
    if (rr) {
      c_cnt++;
      if (!block_deficient) c_without_b++;
    }
    CHECK(sb == rr);
  }
  // The sweep must actually hit failures to mean anything.
  CHECK(a_cnt > 100);
  CHECK(b_cnt >= a_cnt);
  CHECK(c_cnt >= b_cnt);
  MESSAGE("chain counts: root=", a_cnt, " block=", b_cnt, " classic=", c_cnt,
          " block-only=", b_without_a, " classic-only=", c_without_b);
}

TEST_CASE("criteria agree with decoder failure on the reference code") {
  InterleavedCode code = example_code();
  std::uint32_t t = radius_unique(code);
  std::uint64_t fails = 0;
  for (std::uint64_t trial = 0; trial < 3000; ++trial) {
    Rng rng = trial_stream(25, trial);
    MessageTuple msg = random_message(code, rng);
    WordMatrix r = word_add(code, encode(code, msg), sample_rank_error(code, t, rng));
    bool rr = rr_fails(code, r, t);
    CHECK(sb_fails(code, r, t) == rr);
    DecodeOutcome out = decode(code, r, DecodeMode::Unique);
    if (out.kind == OutcomeKind::Failure) {
      fails++;
      CHECK(rr);
    }
  }
  MESSAGE("failures at the radius: ", fails, " / 3000");
}

TEST_CASE("analytic bounds at the reference parameters") {
  InterleavedCode code = example_code();
  BoundsReport b3 = bounds(code, 3);
  CHECK(b3.tau_u == 3);
  CHECK(b3.tau_list == 3);
  CHECK(b3.p_lo_valid);
  CHECK(b3.p_lo == doctest::Approx(24289.0 / 524288.0).epsilon(1e-12));
  CHECK(b3.p_sb_valid);
  CHECK(b3.p_sb == doctest::Approx(3.5 / 128.0).epsilon(1e-12));
  CHECK(b3.p_alt == doctest::Approx(2.44140625e-4).epsilon(1e-12));
  CHECK(b3.avg_list == doctest::Approx(1.0 + 6.103515602e-5).epsilon(1e-12));
  CHECK(b3.avg_list_excess == doctest::Approx(6.103515602e-5).epsilon(1e-9));
  CHECK(b3.avg_list_excess < 6.104e-5);

  BoundsReport b1 = bounds(code, 1);
  CHECK(!b1.p_lo_valid);  // needs t >= s
  CHECK(b1.p_sb_valid);
  double prev = -1.0;
  for (std::uint32_t t = 0; t <= 3; ++t) {
    BoundsReport bt = bounds(code, t);
    CHECK(bt.p_alt > prev);
    prev = bt.p_alt;
  }

  // Deep interleaving can push s past the unique radius.
  auto f5 = std::make_shared<Field>(2, 5);
  InterleavedCode deep = make_code(f5, 3, 5, {2, 2, 2});
  CHECK(radius_unique(deep) == 2);
  CHECK(!bounds(deep, 2).p_sb_valid);
}
