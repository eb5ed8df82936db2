#include <doctest.h>

#include <ppower/power.hpp>
#include <ppower/spectral.hpp>

#include <cmath>
#include <map>

using namespace ppower;

namespace {
const double kPi = std::acos(-1.0);
}

namespace {

// Spectrum as a value -> multiplicity map for order-free comparison.
std::map<long, long> exact_spectrum_map(const PowerSpectrum& spec) {
    REQUIRE(spec.exact);
    std::map<long, long> m;
    for (const auto& e : spec.entries)
        m[static_cast<long>(e.exact_value)] += static_cast<long>(e.multiplicity);
    return m;
}

}  // namespace

TEST_CASE("base spectra of named graphs") {
    auto k3 = base_spectral_data(Graph::complete(3));
    CHECK(k3.n == 3);
    CHECK(k3.d == 2);
    REQUIRE(k3.eigenvalues.size() == 3);
    CHECK(k3.eigenvalues[0] == doctest::Approx(2).epsilon(1e-12));
    CHECK(k3.eigenvalues[1] == doctest::Approx(-1).epsilon(1e-12));
    CHECK(k3.eigenvalues[2] == doctest::Approx(-1).epsilon(1e-12));
    CHECK(k3.lambda == doctest::Approx(1).epsilon(1e-12));

    auto pet = base_spectral_data(Graph::petersen());
    CHECK(pet.d == 3);
    CHECK(pet.lambda == doctest::Approx(2).epsilon(1e-10));
    int ones = 0, minus_twos = 0;
    for (double ev : pet.eigenvalues) {
        if (std::abs(ev - 1) < 1e-9) ++ones;
        if (std::abs(ev + 2) < 1e-9) ++minus_twos;
    }
    CHECK(ones == 5);
    CHECK(minus_twos == 4);

    // lambda = max(lambda_2, |lambda_min|) = |2 cos(4 pi / 5)| = golden ratio.
    auto c5 = base_spectral_data(Graph::cycle(5));
    CHECK(c5.lambda == doctest::Approx(2 * std::cos(kPi / 5)).epsilon(1e-10));

    CHECK_THROWS_AS(base_spectral_data(Graph::path(3)), InvalidInput);
}

TEST_CASE("principal eigenvalue of powers of complete bases") {
    CHECK(mu1_exact(3, 2, 4, 3) == 48);
    CHECK(mu1_exact(2, 1, 2, 2) == 2);
    CHECK(mu1_exact(3, 2, 6, 3) == 504);
    // The principal eigenvalue is the regular degree of the explicit power.
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned k = 1; k <= 4; ++k)
            for (unsigned p : {2u, 3u}) {
                Graph power = p_power(Graph::complete(n), {k, p});
                CHECK(power.regularity().has_value());
                CHECK(Int(*power.regularity()) == mu1_exact(n, n - 1, k, p));
            }
}

TEST_CASE("exact spectra of powers of complete bases") {
    auto s1 = kn_power_spectrum_exact(3, 4, 3);
    CHECK(exact_spectrum_map(s1) ==
          std::map<long, long>{{48, 1}, {3, 48}, {-6, 32}});
    CHECK(s1.n_vertices == 81);
    CHECK(s1.mu1().exact_value == 48);
    CHECK(s1.mu_min().exact_value == -6);

    auto s2 = kn_power_spectrum_exact(2, 2, 2);
    CHECK(exact_spectrum_map(s2) == std::map<long, long>{{2, 1}, {0, 2}, {-2, 1}});

    auto s3 = kn_power_spectrum_exact(3, 6, 3);
    CHECK(exact_spectrum_map(s3) ==
          std::map<long, long>{{504, 1}, {18, 224}, {-9, 504}});

    // Multiplicities always fill the whole space, and the trace vanishes.
    for (unsigned n = 2; n <= 5; ++n)
        for (unsigned k = 1; k <= 5; ++k)
            for (unsigned p : {2u, 3u, 5u}) {
                auto spec = kn_power_spectrum_exact(n, k, p);
                Int total = 0, trace = 0;
                for (const auto& e : spec.entries) {
                    total += e.multiplicity;
                    trace += e.multiplicity * e.exact_value;
                }
                CHECK(total == int_pow(Int(n), k));
                CHECK(trace == 0);
                CHECK(spec.mu1().exact_value == mu1_exact(n, n - 1, k, p));
            }
}

TEST_CASE("tensor-decomposition spectrum agrees with the exact path") {
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned k = 1; k <= 4; ++k)
            for (unsigned p : {2u, 3u}) {
                auto exact = kn_power_spectrum_exact(n, k, p);
                auto numeric = power_spectrum(base_spectral_data(Graph::complete(n)), k, p);
                CHECK_FALSE(numeric.exact);
                REQUIRE(numeric.entries.size() == exact.entries.size());
                for (std::size_t i = 0; i < exact.entries.size(); ++i) {
                    double expect = static_cast<double>(exact.entries[i].exact_value);
                    CHECK(std::abs(numeric.entries[i].value - expect) <= 1e-8);
                    CHECK(numeric.entries[i].multiplicity == exact.entries[i].multiplicity);
                }
            }
}

TEST_CASE("tensor-decomposition spectrum matches dense eigensolves") {
    // Cross-check against a direct eigendecomposition of the materialized power.
    for (const Graph& base : {Graph::cycle(4), Graph::cycle(5), Graph::petersen()}) {
        auto data = base_spectral_data(base);
        for (unsigned p : {2u, 3u}) {
            auto spec = power_spectrum(data, 2, p);
            Graph power = p_power(base, {2, p});
            auto direct = base_spectral_data(power);  // powers of regular are regular
            std::vector<double> expanded;
            for (const auto& e : spec.entries)
                for (Int i = 0; i < e.multiplicity; ++i)
                    expanded.push_back(e.value);
            REQUIRE(expanded.size() == direct.eigenvalues.size());
            for (std::size_t i = 0; i < expanded.size(); ++i)
                CHECK(std::abs(expanded[i] - direct.eigenvalues[i]) <= 1e-6);
        }
    }
}

TEST_CASE("dense eigensolve of a large degenerate power spectrum") {
    // The cube of the Petersen parity power has 1000 vertices but only five
    // distinct eigenvalues; stock QL iteration exhausts its budget on such
    // matrices, so this pins the fallback deflation path.
    Graph power = p_power(Graph::petersen(), {3, 2});
    auto direct = base_spectral_data(power);
    REQUIRE(direct.eigenvalues.size() == 1000);
    // Closed form: 468 x1, 16 x375, 4 x125, -8 x375, -32 x124 (descending).
    std::vector<std::pair<double, std::size_t>> expect = {
        {468.0, 1}, {16.0, 375}, {4.0, 125}, {-8.0, 375}, {-32.0, 124}};
    std::size_t at = 0;
    for (const auto& [value, count] : expect)
        for (std::size_t i = 0; i < count; ++i, ++at)
            CHECK(std::abs(direct.eigenvalues[at] - value) <= 1e-6);
    CHECK(direct.lambda == doctest::Approx(32.0));
}

TEST_CASE("ratio bound") {
    auto h1 = hoffman_bound(kn_power_spectrum_exact(3, 4, 3));
    CHECK(h1.exact);
    CHECK(h1.exact_value == 9);
    CHECK(h1.floored == 9);

    auto h2 = hoffman_bound(kn_power_spectrum_exact(3, 6, 3));
    CHECK(h2.exact_value == Rat(729, 57));
    CHECK(h2.floored == 12);

    auto float_path = hoffman_bound(power_spectrum(base_spectral_data(Graph::complete(3)), 4, 3));
    CHECK_FALSE(float_path.exact);
    CHECK(float_path.value == doctest::Approx(9.0).epsilon(1e-9));
    CHECK(float_path.floored == 9);  // snapped, not floored to 8

    // The parity square of an edge is a four-cycle: bound 2.
    auto c4 = hoffman_bound(kn_power_spectrum_exact(2, 2, 2));
    CHECK(c4.exact_value == 2);

    // Requires mu_1 > 0 > mu_min.
    PowerSpectrum nonneg;
    nonneg.exact = true;
    nonneg.n_vertices = 4;
    nonneg.entries.push_back({true, Int(5), 5.0, Int(1)});
    nonneg.entries.push_back({true, Int(1), 1.0, Int(3)});
    CHECK_THROWS_AS(hoffman_bound(nonneg), InvalidInput);
}

TEST_CASE("moment bounds on the power growth rate") {
    auto b2 = xal_upper_bound(5, 2, Rat(1), 2);
    CHECK(b2.exact);
    CHECK(b2.rho1_sq == 1);   // (n - 2d)^2
    CHECK(b2.rho2_sq == 4);   // 4 lambda^2
    CHECK(b2.bound_sq == 4);
    CHECK(b2.bound == doctest::Approx(2.0).epsilon(1e-12));

    auto b3 = xal_upper_bound(3, 2, Rat(1), 3);
    CHECK(b3.rho1_sq == 3);  // n^2 - 3 d (n - d)
    CHECK(b3.rho2_sq == 3);  // 3 lambda^2
    CHECK(b3.bound_sq == 3);

    auto b4 = xal_upper_bound(3, 2, Rat(1), 4);
    CHECK(b4.rho1_sq == 5);  // (n-d)^2 + d^2
    CHECK(b4.rho2_sq == 4);
    CHECK(b4.bound_sq == 5);

    auto b5 = xal_upper_bound(4, 2, 1.5, 5);
    CHECK_FALSE(b5.exact);
    double c = 2 - 2 * std::cos(2 * kPi / 5);
    CHECK(b5.rho1 == doctest::Approx(std::sqrt(16 - c * 4)).epsilon(1e-12));

    CHECK_THROWS_AS(xal_upper_bound(3, 0, Rat(1), 3), InvalidInput);
    CHECK_THROWS_AS(xal_upper_bound(3, 2, Rat(-1), 3), InvalidInput);
    CHECK_THROWS_AS(xal_upper_bound(3, 4, Rat(1), 3), InvalidInput);
}

TEST_CASE("spectrum serialization") {
    std::string text = spectrum_to_json(kn_power_spectrum_exact(3, 4, 3));
    CHECK(text.find("\"48\"") != std::string::npos);
    CHECK(text.find("\"-6\"") != std::string::npos);
    CHECK(text.find("\"32\"") != std::string::npos);
    CHECK(text.find("\"exact\": true") != std::string::npos);
}
