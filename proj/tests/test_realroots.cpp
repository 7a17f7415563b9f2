#include "phaseprob/realroots.hpp"
#include "phaseprob/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace phaseprob;

namespace {

// Sturm's count is only meaningful away from near-double roots and
// near-real complex pairs; the oracle comparison skips those.
bool well_separated(const std::vector<std::complex<double>>& roots)
{
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double im = std::abs(roots[i].imag());
    if (im > 1e-8 * (1 + std::abs(roots[i].real())) && im < 1e-4) return false;
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) < 1e-4) return false;
  }
  return true;
}

} // namespace

TEST_SUITE("realroots")
{
  TEST_CASE("Poly basics")
  {
    const Poly p({-1, 0, 1, 0, 0});
    CHECK(p.degree() == 2);
    CHECK(p(3.0) == 8.0);
    CHECK(p.derivative().coeffs() == std::vector<double>{0, 2});
    const auto [v, d] = p.eval_with_derivative(2.0);
    CHECK(v == 3.0);
    CHECK(d == 4.0);
    CHECK(Poly({0, 0}).is_zero());
    CHECK(Poly({0, 0}).degree() == -1);
    CHECK(Poly({1, -5, 2}).max_abs_coeff() == 5.0);
  }

  TEST_CASE("sturm_count")
  {
    CHECK(sturm_count(Poly({-1, 0, 1})) == 2);
    CHECK(sturm_count(Poly({1, 0, 1})) == 0);
    const Poly p({-6, 11, -6, 1});   // (x-1)(x-2)(x-3)
    CHECK(sturm_count(p, 0.0, 2.5) == 2);
    CHECK(sturm_count(p) == 3);
    CHECK(sturm_count(p, 3.5, kInf) == 0);
    CHECK(sturm_count(p, -kInf, 1.5) == 1);
    CHECK(sturm_count(Poly({5})) == 0);
    CHECK_THROWS_AS(sturm_count(Poly({1, -2, 1})), NonSquarefreeError);
    CHECK_THROWS_AS(sturm_count(p, 1.0, 2.5), std::invalid_argument);
  }

  TEST_CASE("sturm chain keeps signs under negative leading coefficients")
  {
    const Poly p({6, -11, 6, -1});   // -(x-1)(x-2)(x-3)
    CHECK(sturm_count(p) == 3);
    CHECK(sturm_count(p, 0.0, 2.5) == 2);
  }

  TEST_CASE("cubic_signature lemma cases")
  {
    auto r = cubic_signature(-6, 11, -6);
    CHECK(r.n_positive == 3);
    CHECK(r.n_negative == 0);
    CHECK(r.n_zero == 0);
    CHECK(r.distinct);

    r = cubic_signature(0, 1, -1);
    CHECK(r.n_positive == 1);
    CHECK(r.n_negative == 0);

    r = cubic_signature(6, 11, 6);
    CHECK(r.n_negative == 3);
    CHECK(r.n_positive == 0);

    // x^3 + x^2 - 4x - 4 = (x+1)(x-2)(x+2): b < 0, two negative roots.
    r = cubic_signature(1, -4, -4);
    CHECK(r.n_negative == 2);
    CHECK(r.n_positive == 1);

    // (x-1)(x-2)(x+4) = x^3 + x^2 - 10x + 8: two positive roots.
    r = cubic_signature(1, -10, 8);
    CHECK(r.n_negative == 1);
    CHECK(r.n_positive == 2);

    // x^3 + 1.5x^2 + x + 1: one negative root.
    r = cubic_signature(1.5, 1, 1);
    CHECK(r.total() == 1);
    CHECK(r.n_negative == 1);

    const auto names = [&] {
      std::vector<std::string> out;
      for (const auto& w : r.witnesses) out.push_back(w.name);
      return out;
    }();
    CHECK(std::find(names.begin(), names.end(), "d3") != names.end());
  }

  TEST_CASE("cubic_signature rejects in-band gating quantities")
  {
    // a = 0 is not read on the one-root branch.
    CHECK(cubic_signature(0, 11, -6).n_positive == 1);
    CHECK_THROWS_AS(cubic_signature(-6, 11, 0), DegenerateSignsError);
    // (x-1)^2 (x+2): zero discriminant
    CHECK_THROWS_AS(cubic_signature(0, -3, 2), DegenerateSignsError);
    try {
      cubic_signature(-3, 3, -1);   // (x-1)^3
      FAIL("expected DegenerateSignsError");
    } catch (const DegenerateSignsError& e) {
      CHECK(!e.quantities().empty());
    }
  }

  TEST_CASE("cubic_signature is equivariant under x -> -x")
  {
    int checked = 0;
    for (std::uint64_t i = 0; i < 5000; ++i) {
      NormalStream rng(11, i);
      const double a = rng.next(), b = rng.next(), c = rng.next();
      try {
        const auto r = cubic_signature(a, b, c);
        const auto m = cubic_signature(-a, b, -c);
        CHECK(r.n_negative == m.n_positive);
        CHECK(r.n_positive == m.n_negative);
        ++checked;
      } catch (const DegenerateSignsError&) {
      }
    }
    CHECK(checked > 4990);
  }

  TEST_CASE("quartic_real_count")
  {
    CHECK(quartic_real_count(-10, 35, -50, 24) == 4);
    CHECK(quartic_real_count(1, 1, 1, 1) == 0);
    // Two real roots near -1.361 and -0.422 plus a complex pair.
    CHECK(quartic_real_count(0.3, -1.2, 0.7, 0.5) == 2);
    // (x^2+1)(x^2+2x+5): no real roots, d4 > 0.
    CHECK(quartic_real_count(2, 6, 2, 5) == 0);

    const auto prof = quartic_profile(-10, 35, -50, 24);
    CHECK(prof.real_roots == 4);
    CHECK(prof.witnesses.size() == 5);

    // c = 0 and d = 0 do not enter the decision.
    CHECK(quartic_real_count(0, -5, 0, 4) == 4);
    CHECK(quartic_real_count(1, 1, 1, 0) == 2);
    // (x-1)^2 (x+1)(x+3): zero discriminant
    CHECK_THROWS_AS(quartic_real_count(2, -4, -2, 3), DegenerateSignsError);
  }

  TEST_CASE("companion_roots")
  {
    auto roots = companion_roots(Poly({-2, 0, 1}));
    std::vector<double> re;
    for (auto z : roots) {
      CHECK(is_numerically_real(z));
      re.push_back(z.real());
    }
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-std::numbers::sqrt2).epsilon(1e-10));
    CHECK(re[1] == doctest::Approx(std::numbers::sqrt2).epsilon(1e-10));

    roots = companion_roots(Poly({-1, 0, 0, 1}));
    CHECK(roots.size() == 3);
    CHECK(count_real(roots) == 1);
    for (auto z : roots) {
      CHECK(std::abs(z * z * z - 1.0) < 1e-12);
    }

    CHECK(companion_roots(Poly({3, 2})).at(0).real() == doctest::Approx(-1.5));
    CHECK_THROWS_AS(companion_roots(Poly({1})), std::invalid_argument);

    // Badly scaled: roots 1e-3 and 1e3.
    const auto wide = real_roots(Poly({1, -1000.001, 1}));
    REQUIRE(wide.size() == 2);
    CHECK(wide[0] == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(wide[1] == doctest::Approx(1e3).epsilon(1e-12));
  }

  TEST_CASE("real_roots is sorted and polished")
  {
    const auto r = real_roots(Poly({24, -50, 35, -10, 1}));
    REQUIRE(r.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(r[k] == doctest::Approx(k + 1.0).epsilon(1e-13));
    CHECK(real_roots(Poly({1, 0, 1})).empty());
    CHECK(real_roots(Poly({1, 1, 1, 1, 1})).empty());
  }

  TEST_CASE("has_close_roots")
  {
    CHECK(has_close_roots({1.0, 1.0 + 1e-9}));
    CHECK_FALSE(has_close_roots({1.0, 1.0 + 1e-6}));
    CHECK_FALSE(has_close_roots({}));
    CHECK(has_close_roots({-3.0, 1e6, 1e6 + 1e-3}));
  }

  TEST_CASE("sturm_count agrees with companion roots up to degree 6")
  {
    int compared = 0;
    for (int deg = 1; deg <= 6; ++deg) {
      for (std::uint64_t i = 0; i < 2000; ++i) {
        NormalStream rng(100 + deg, i);
        std::vector<double> c(deg + 1);
        for (auto& x : c) x = rng.next();
        const Poly p(c);
        const auto roots = companion_roots(p);
        if (!well_separated(roots)) continue;
        CHECK(sturm_count(p) == count_real(roots));
        ++compared;
      }
    }
    CHECK(compared > 11800);
  }

  TEST_CASE("lemma profiles agree with companion roots")
  {
    int skipped = 0;
    const int total = 10000;
    for (std::uint64_t i = 0; i < total; ++i) {
      NormalStream rng(5, i);
      const double a = rng.next(), b = rng.next(), c = rng.next(), d = rng.next();
      try {
        const auto prof = cubic_signature(a, b, c);
        int neg = 0, pos = 0;
        for (double x : real_roots(Poly({c, b, a, 1}))) (x < 0 ? neg : pos)++;
        CHECK(prof.n_negative == neg);
        CHECK(prof.n_positive == pos);
      } catch (const DegenerateSignsError&) {
        ++skipped;
      }
      try {
        CHECK(quartic_real_count(a, b, c, d) == count_real(companion_roots(Poly({d, c, b, a, 1}))));
      } catch (const DegenerateSignsError&) {
        ++skipped;
      }
    }
    CHECK(skipped < 2 * total * 1e-3);
  }
}
