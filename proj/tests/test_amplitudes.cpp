#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "rindler_dicke/amplitudes.hpp"
#include "test_util.hpp"

using namespace rindler_dicke;
using amplitudes::Complex;
using amplitudes::Sign;
using kinematics::DimensionlessParams;
using kinematics::PhysicalParams;
using test_util::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;

PhysicalParams fig2() {
    PhysicalParams p;
    p.omega = 1e9;
    p.nu = 1e8;
    p.chi = 1e7;
    p.a = p.omega * p.c;
    return p;
}
} // namespace

TEST_CASE("alpha: modulus, reference values, conjugacy, kappa independence") {
    const DimensionlessParams dp{1.0, 0.3, 0.0, 2};
    CHECK(rel_err(std::norm(amplitudes::alpha_pm(Sign::plus, dp)), 0.0117554413473691098) <
          1e-13);
    CHECK(rel_err(amplitudes::alpha_pm(Sign::plus, {0.5, 0.1, 0.0, 2}),
                  {0.593508715172784588, -0.464021979730437988}) < 1e-13);
    CHECK(rel_err(amplitudes::alpha_pm(Sign::plus, {1.0, 0.1, 0.0, 2}),
                  {0.0985456403407251907, 0.0452128092160346272}) < 1e-13);

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> uxi(0.05, 5.0), ukap(0.01, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const DimensionlessParams r{uxi(rng), ukap(rng), 0.0, 2};
        worst = std::max(worst, rel_err(amplitudes::alpha_pm(Sign::plus, r),
                                        std::conj(amplitudes::alpha_pm(Sign::minus, r))));
    }
    CHECK(worst < 1e-14);

    // |alpha| depends on xi only
    for (const double xi : {0.25, 1.0, 4.0}) {
        double lo = 1e300, hi = 0.0;
        for (const double kap : {0.01, 0.1, 0.9, 2.5}) {
            const double m = std::abs(amplitudes::alpha_pm(Sign::plus, {xi, kap, 0.0, 2}));
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
        CHECK((hi - lo) / hi < 1e-12);
    }
}

TEST_CASE("beta_ll / beta_rr: reference values, conjugacy, kappa-independent modulus") {
    CHECK(rel_err(amplitudes::beta_ll({1.0, 0.1, 0.0, 2}),
                  {0.00383352255647900918, 0.00445552523579717364}) < 1e-13);
    CHECK(rel_err(amplitudes::beta_ll({1.0, 0.5, 0.0, 2}),
                  {-0.00416607448778593274, -0.00414625417456262515}) < 1e-13);
    for (const double xi : {0.25, 1.0, 4.0}) {
        const double want = kPi / xi * kinematics::planck_factor(xi);
        double lo = 1e300, hi = 0.0;
        for (const double kap : {0.05, 0.1, 0.5, 1.0}) {
            const DimensionlessParams dp{xi, kap, 0.0, 2};
            CHECK(rel_err(amplitudes::beta_rr(dp), std::conj(amplitudes::beta_ll(dp))) == 0.0);
            const double m = std::abs(amplitudes::beta_ll(dp));
            CHECK(rel_err(m, want) < 1e-13);
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
        CHECK((hi - lo) / hi < 1e-12);
    }
}

TEST_CASE("beta_rl: reference values, conjugate partner, small-kappa limit") {
    CHECK(rel_err(amplitudes::beta_rl({1.0, 0.1, 0.0, 2}),
                  {0.000077768297607742418, 0.0033189906723904059}) < 1e-12);
    CHECK(rel_err(amplitudes::beta_rl({1.0, 0.5, 0.0, 2}),
                  {0.000107473278260416379, -0.00356288721709468524}) < 1e-12);
    const auto so = amplitudes::second_order({0.7, 0.25, 0.0, 2});
    CHECK(so.beta_lr == std::conj(so.beta_rl));
    CHECK(so.phi_rl == std::arg(so.beta_rl));

    // kappa -> 0: H -> 1, |beta_rl| -> (1/xi) e^{-pi xi} |Gamma(-2 i xi)|
    const double xi = 1.3;
    const auto tiny = amplitudes::second_order({xi, 1e-8, 0.0, 2});
    CHECK(rel_err(tiny.h, {1.0, 0.0}) < 1e-12);
    const double want = std::exp(-kPi * xi) / xi *
                        std::abs(std::exp(specfun::log_gamma(Complex(0.0, -2.0 * xi))));
    CHECK(rel_err(std::abs(tiny.beta_rl), want) < 1e-12);
}

TEST_CASE("pair probabilities: interference structure") {
    const double planck = kinematics::planck_factor(1.0);
    const auto at = [](double kd) {
        return amplitudes::pair_probabilities({1.0, 0.1, kd, 2});
    };
    CHECK(at(kPi).p_s < 1e-30);
    CHECK(at(0.0).p_a == 0.0);
    CHECK(rel_err(at(0.0).p_s, planck) < 1e-15);
    CHECK(rel_err(at(kPi / 2.0).p_s, 0.5 * at(0.0).p_s) < 1e-12);

    double lo = 1e300, hi = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const auto pp = at(4.0 * kPi * i / 400.0);
        const double sum = pp.p_s + pp.p_a;
        lo = std::min(lo, sum);
        hi = std::max(hi, sum);
        // ratio law wherever both sides are meaningfully nonzero
        if (pp.p_s > 1e-300 && pp.p_a > 1e-300) {
            const double kd = 4.0 * kPi * i / 400.0;
            const double cot = std::cos(0.5 * kd) / std::sin(0.5 * kd);
            CHECK(rel_err(pp.p_s / pp.p_a, cot * cot) < 1e-10);
        }
    }
    CHECK((hi - lo) / hi < 1e-12);
}

TEST_CASE("probability prefactor and single-atom law") {
    auto p = fig2();
    CHECK(rel_err(amplitudes::prob_prefactor(p), 7.03534587918152364e-55) < 1e-13);
    auto p0 = p;
    p0.chi = 0.0;
    CHECK(amplitudes::prob_prefactor(p0) == 0.0);
    auto p2 = p;
    p2.chi *= 2.0;
    CHECK(rel_err(amplitudes::prob_prefactor(p2), 4.0 * amplitudes::prob_prefactor(p)) < 1e-15);

    p.d2 = 1.7; // arbitrary separation
    CHECK(rel_err(2.0 * amplitudes::prob_single_atom(p),
                  amplitudes::prob_symmetric(p) + amplitudes::prob_antisymmetric(p)) < 1e-14);
    auto pd = p;
    pd.d2 = 123.0;
    CHECK(amplitudes::prob_single_atom(pd) == amplitudes::prob_single_atom(p));

    // thermal ratio between xi = 1 and xi = 2
    auto pa = fig2();
    auto pb = fig2();
    pb.a = pb.omega * pb.c / 2.0;
    const double ratio = amplitudes::prob_single_atom(pa) / amplitudes::prob_single_atom(pb);
    const double want = std::expm1(4.0 * kPi) / std::expm1(2.0 * kPi) / 2.0;
    // prefactor scales 1/a as well: (2 hbar chi^2/(nu omega a)) doubles when a halves
    CHECK(rel_err(ratio, want) < 1e-12);
}

TEST_CASE("prob_one_of_n and the constructive state-vector accounting") {
    const auto p = fig2();
    CHECK(amplitudes::prob_one_of_n(1, p) == amplitudes::prob_single_atom(p));
    CHECK(rel_err(amplitudes::prob_one_of_n(2, p),
                  amplitudes::prob_symmetric(p) + amplitudes::prob_antisymmetric(p)) < 1e-14);
    CHECK_THROWS_AS(amplitudes::prob_one_of_n(0, p), DomainError);

    const auto dp = kinematics::to_dimensionless(p);
    const double scale = p.chi * kinematics::mode_norm_w(p) * p.c / p.a;
    const double lone = scale * scale *
                        (std::norm(amplitudes::alpha_pm(Sign::plus, dp)) +
                         std::norm(amplitudes::alpha_pm(Sign::minus, dp)));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);
    for (int n = 1; n <= 12; ++n) {
        std::vector<double> kd(static_cast<std::size_t>(n));
        for (double& v : kd) v = uni(rng);
        const auto cl = amplitudes::build_symmetric_state_n(n, kd, amplitudes::Direction::left);
        double norm = 0.0;
        for (const auto& c : cl) norm += std::norm(c);
        CHECK(rel_err(norm, 1.0) < 1e-14);
        CHECK(rel_err(n * lone * norm, amplitudes::prob_one_of_n(n, p)) < 1e-12);
    }
}

TEST_CASE("build_symmetric_state_n coefficients") {
    const std::array<double, 1> one{0.0};
    const auto c1 = amplitudes::build_symmetric_state_n(1, one, amplitudes::Direction::left);
    CHECK(c1.size() == 1);
    CHECK(rel_err(c1[0], {1.0, 0.0}) < 1e-15);

    const std::array<double, 4> zeros{0.0, 0.0, 0.0, 0.0};
    for (const auto& c :
         amplitudes::build_symmetric_state_n(4, zeros, amplitudes::Direction::right))
        CHECK(rel_err(c, {0.5, 0.0}) < 1e-15);

    const std::array<double, 3> kd{0.0, kPi, 2.0 * kPi};
    const auto c3 = amplitudes::build_symmetric_state_n(3, kd, amplitudes::Direction::left);
    const double r3 = 1.0 / std::sqrt(3.0);
    CHECK(rel_err(c3[0], {r3, 0.0}) < 1e-15);
    CHECK(rel_err(c3[1], {-r3, 0.0}) < 1e-15);
    CHECK(rel_err(c3[2], {r3, 0.0}) < 1e-15);

    const std::vector<double> many(21, 0.0);
    CHECK_THROWS_AS(amplitudes::build_symmetric_state_n(21, many, amplitudes::Direction::left),
                    SizeError);
    CHECK_THROWS_AS(amplitudes::build_symmetric_state_n(3, one, amplitudes::Direction::left),
                    SizeError);
}

TEST_CASE("rescalings that fix xi, kappa, kd leave normalized results unchanged") {
    auto p = fig2();
    p.d2 = 2.1;
    auto q = p;
    const double lam = 3.7;
    q.omega *= lam;
    q.nu *= lam;
    q.a *= lam;
    q.d1 /= lam;
    q.d2 /= lam;
    const auto dp = kinematics::to_dimensionless(p);
    const auto dq = kinematics::to_dimensionless(q);
    CHECK(rel_err(dp.xi, dq.xi) < 1e-14);
    CHECK(rel_err(dp.kappa, dq.kappa) < 1e-14);
    CHECK(rel_err(dp.kd, dq.kd) < 1e-14);
    const auto pp = amplitudes::pair_probabilities(dp);
    const auto pq = amplitudes::pair_probabilities(dq);
    CHECK(rel_err(pp.p_s, pq.p_s) < 1e-13);
    CHECK(rel_err(pp.p_a, pq.p_a) < 1e-13);
    const auto sp = amplitudes::second_order(dp);
    const auto sq = amplitudes::second_order(dq);
    CHECK(rel_err(sp.beta_ll, sq.beta_ll) < 1e-13);
    CHECK(rel_err(sp.beta_rl, sq.beta_rl) < 1e-13);
    CHECK(rel_err(amplitudes::double_excitation_bracket(dp).bracket,
                  amplitudes::double_excitation_bracket(dq).bracket) < 1e-13);
}

TEST_CASE("joint excitation probability") {
    auto p = fig2();
    auto p0 = p;
    p0.chi = 0.0;
    CHECK(amplitudes::prob_double_excitation(p0).value == 0.0);

    // kd = pi/2 kills the interference term: pure thermal bracket
    const DimensionlessParams half{1.0, 0.1, kPi / 2.0, 2};
    const auto de = amplitudes::double_excitation_bracket(half);
    const double b = kinematics::planck_factor(1.0);
    CHECK(rel_err(de.bracket, kPi * b * b) < 1e-25);
    CHECK(de.valid);

    // chi^4 scaling
    auto p2 = p;
    p2.chi *= 2.0;
    CHECK(rel_err(amplitudes::prob_double_excitation(p2).value,
                  16.0 * amplitudes::prob_double_excitation(p).value) < 1e-12);

    // value = prefactor * bracket
    const auto dd = amplitudes::prob_double_excitation(p);
    const double w = kinematics::mode_norm_w(p);
    const double pref = 16.0 * kPi * p.c * std::pow(w, 4) * std::pow(p.chi, 4) /
                        (std::pow(p.omega, 3) * p.a);
    CHECK(rel_err(dd.value, pref * dd.bracket) < 1e-14);
}

TEST_CASE("dicke decomposition: selection rules and probability consistency") {
    auto p = fig2();
    p.d2 = 0.0; // kd = 0
    const auto d0 = amplitudes::dicke_decomposition(p);
    CHECK(std::norm(d0.amp_antisymmetric_left) < 1e-60);
    CHECK(std::norm(d0.amp_antisymmetric_right) < 1e-60);
    CHECK(d0.amp_ground == Complex{1.0, 0.0});

    const double lambda = 2.0 * kPi * p.c / p.nu;
    p.d2 = lambda / 2.0; // kd = pi
    const auto dpi = amplitudes::dicke_decomposition(p);
    const double scale = std::norm(dpi.amp_antisymmetric_left);
    CHECK(std::norm(dpi.amp_symmetric_left) < 1e-30 * scale);
    CHECK(std::norm(dpi.amp_symmetric_right) < 1e-30 * scale);

    for (const double d2 : {0.0, 0.3 * lambda, 0.77 * lambda}) {
        p.d2 = d2;
        const auto d = amplitudes::dicke_decomposition(p);
        const double ps = std::norm(d.amp_symmetric_left) + std::norm(d.amp_symmetric_right);
        const double pa =
            std::norm(d.amp_antisymmetric_left) + std::norm(d.amp_antisymmetric_right);
        CHECK(rel_err(ps, amplitudes::prob_symmetric(p)) < 1e-12);
        CHECK(rel_err(pa + ps, amplitudes::prob_symmetric(p) + amplitudes::prob_antisymmetric(p)) <
              1e-12);
    }

    // chi = 0 leaves only the ground amplitude
    auto pz = p;
    pz.chi = 0.0;
    const auto dz = amplitudes::dicke_decomposition(pz);
    CHECK(dz.amp_ground == Complex{1.0, 0.0});
    CHECK(std::abs(dz.amp_symmetric_left) == 0.0);
    CHECK(std::abs(dz.amp_doubly_excited_2l) == 0.0);
    CHECK(std::abs(dz.amp_doubly_excited_rl) == 0.0);

    // perturbative ordering: singles scale like chi, doubles like chi^2
    auto px = p;
    px.chi *= 3.0;
    const auto d1 = amplitudes::dicke_decomposition(p);
    const auto d3 = amplitudes::dicke_decomposition(px);
    CHECK(rel_err(std::abs(d3.amp_symmetric_left), 3.0 * std::abs(d1.amp_symmetric_left)) <
          1e-12);
    CHECK(rel_err(std::abs(d3.amp_doubly_excited_2l), 9.0 * std::abs(d1.amp_doubly_excited_2l)) <
          1e-12);
}
