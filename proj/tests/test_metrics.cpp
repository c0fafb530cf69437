// Copyright 2026 The blockge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blockge/metrics.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace blockge;

namespace {

struct Instance {
    std::vector<double> scores;
    std::vector<std::uint8_t> labels;
};

Instance random_instance(std::mt19937_64& rng, bool heavy_ties) {
    std::uniform_int_distribution<std::size_t> len(2, 120);
    std::uniform_int_distribution<int> level(0, 3);
    std::normal_distribution<double> g(0.0, 1.0);
    std::bernoulli_distribution coin(0.4);
    Instance in;
    const std::size_t n = len(rng);
    for(std::size_t i = 0; i < n; ++i) {
        in.labels.push_back(coin(rng));
        in.scores.push_back(heavy_ties ? double(level(rng)) : g(rng) + in.labels.back());
    }
    in.labels[0] = 0;
    in.labels[1] = 1;
    return in;
}

} // namespace

TEST_CASE("AUC on trivial inputs") {
    const std::vector<double> s{0.1, 0.2, 0.8, 0.9};
    const std::vector<std::uint8_t> y{0, 0, 1, 1};
    CHECK(roc_auc(s, y) == 1.0);
    const std::vector<double> flat(4, 3.0);
    CHECK(roc_auc(flat, y) == 0.5);
    const std::vector<std::uint8_t> inv{1, 1, 0, 0};
    CHECK(roc_auc(s, inv) == 0.0);
}

TEST_CASE("AUC requires both classes and aligned inputs") {
    const std::vector<double> s{1, 2, 3};
    CHECK_THROWS_CODE(roc_auc(s, std::vector<std::uint8_t>{0, 0, 0}), ErrorCode::SingleClass);
    CHECK_THROWS_CODE(roc_auc(s, std::vector<std::uint8_t>{1, 1, 1}), ErrorCode::SingleClass);
    CHECK_THROWS_CODE(roc_auc(s, std::vector<std::uint8_t>{0, 1}), ErrorCode::ShapeMismatch);
    CHECK_THROWS_CODE(roc_auc(std::vector<double>{}, std::vector<std::uint8_t>{}), ErrorCode::SingleClass);
}

TEST_CASE("AUC matches the pairwise oracle") {
    std::mt19937_64 rng(40);
    for(int k = 0; k < 1000; ++k) {
        const auto in = random_instance(rng, k % 2 == 0);
        CHECK(std::abs(roc_auc(in.scores, in.labels) - oracle::pairwise_auc(in.scores, in.labels)) <= 1e-9);
    }
}

TEST_CASE("AUC is invariant under increasing transforms") {
    std::mt19937_64 rng(41);
    for(int k = 0; k < 100; ++k) {
        const auto in = random_instance(rng, k % 2 == 0);
        const double base = roc_auc(in.scores, in.labels);
        std::vector<double> affine(in.scores), cubic(in.scores);
        for(auto& x : affine)
            x = 3.5 * x - 2.0;
        for(auto& x : cubic)
            x = x * x * x + x;
        CHECK(std::abs(roc_auc(affine, in.labels) - base) <= 1e-12);
        CHECK(std::abs(roc_auc(cubic, in.labels) - base) <= 1e-12);
    }
}

TEST_CASE("negating tie-free scores complements the AUC") {
    std::mt19937_64 rng(42);
    for(int k = 0; k < 100; ++k) {
        const auto in = random_instance(rng, false);
        std::vector<double> neg(in.scores);
        for(auto& x : neg)
            x = -x;
        CHECK(roc_auc(in.scores, in.labels) + roc_auc(neg, in.labels) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("shuffled labels give chance-level AUC") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double total = 0.0;
    for(int seed = 0; seed < 10; ++seed) {
        std::vector<double> s(2000);
        std::vector<std::uint8_t> y(2000);
        for(std::size_t i = 0; i < s.size(); ++i) {
            s[i] = u(rng);
            y[i] = i % 4 == 0;
        }
        std::shuffle(y.begin(), y.end(), rng);
        const double auc = roc_auc(s, y);
        CHECK(std::abs(auc - 0.5) <= 0.05);
        total += auc;
    }
    CHECK(std::abs(total / 10.0 - 0.5) <= 0.05);
}

TEST_CASE("saliency") {
    const std::vector<std::uint8_t> y{0, 0, 1, 1};
    CHECK(anomaly_saliency(std::vector<double>{2, 2, 2, 2}, y) == 0.0);
    CHECK(anomaly_saliency(std::vector<double>{1, 1, 3.6341, 3.6341}, y) == doctest::Approx(2.6341).epsilon(1e-12));
    CHECK_THROWS_CODE(anomaly_saliency(std::vector<double>{0, 0, 1, 1}, y), ErrorCode::ZeroNormalLevel);
    CHECK_THROWS_CODE(anomaly_saliency(std::vector<double>{1, 1}, std::vector<std::uint8_t>{0, 0}),
                      ErrorCode::SingleClass);
}

TEST_CASE("saliency matches class means and ignores scale") {
    std::mt19937_64 rng(44);
    for(int k = 0; k < 50; ++k) {
        auto in = random_instance(rng, false);
        for(auto& x : in.scores)
            x = std::abs(x) + 0.1;
        const double mn = oracle::masked_mean(in.scores, in.labels, 0);
        const double ma = oracle::masked_mean(in.scores, in.labels, 1);
        const double sal = anomaly_saliency(in.scores, in.labels);
        CHECK(sal == doctest::Approx((ma - mn) / mn).epsilon(1e-9));
        std::vector<double> scaled(in.scores);
        for(auto& x : scaled)
            x *= 7.25;
        CHECK(anomaly_saliency(scaled, in.labels) == doctest::Approx(sal).epsilon(1e-12));
    }
}

TEST_CASE("saliency uses dataset-global class means across segments") {
    const auto layout = make_layout({{"a", 3}, {"b", 3}});
    const ScoreSeries s(layout, {1, 1, 5, 3, 3, 3});
    const LabelSeries y(layout, {0, 0, 1, 0, 0, 0});
    // normal mean = (1 + 1 + 3 + 3 + 3) / 5 = 2.2, abnormal mean = 5
    CHECK(anomaly_saliency(s, y) == doctest::Approx((5.0 - 2.2) / 2.2).epsilon(1e-12));
}

TEST_CASE("normal GE level") {
    CHECK(normal_ge_level(std::vector<double>(5, 0.3), std::vector<std::uint8_t>(5, 0)) == doctest::Approx(0.3));
    CHECK(normal_ge_level(std::vector<double>{1, 2, 9}, std::vector<std::uint8_t>{0, 0, 1}) == 1.5);
    CHECK_THROWS_CODE(normal_ge_level(std::vector<double>{1, 2}, std::vector<std::uint8_t>{1, 1}),
                      ErrorCode::NoNormalFrames);

    std::mt19937_64 rng(45);
    for(int k = 0; k < 100; ++k) {
        const auto in = random_instance(rng, false);
        CHECK(std::abs(normal_ge_level(in.scores, in.labels) - oracle::masked_mean(in.scores, in.labels, 0)) <= 1e-9);
    }
}

TEST_CASE("level ratio") {
    CHECK(ge_level_ratio(3.0, 3.0) == 1.0);
    CHECK(ge_level_ratio(2.0, 4.0) == 2.0);
    CHECK(ge_level_ratio(4.0, 2.0) == 2.0);
    CHECK_THROWS_CODE(ge_level_ratio(0.0, 1.0), ErrorCode::NonPositiveLevel);
    CHECK_THROWS_CODE(ge_level_ratio(1.0, -2.0), ErrorCode::NonPositiveLevel);
    std::mt19937_64 rng(46);
    std::uniform_real_distribution<double> u(0.01, 10.0);
    for(int k = 0; k < 100; ++k) {
        const double a = u(rng), b = u(rng);
        CHECK(ge_level_ratio(a, b) == ge_level_ratio(b, a));
        CHECK(ge_level_ratio(a, b) >= 1.0);
    }
}

TEST_CASE("Pearson correlation") {
    const std::vector<double> x{1, 2, 3, 4, 5};
    std::vector<double> y(5), z(5);
    for(std::size_t i = 0; i < 5; ++i) {
        y[i] = 2.0 * x[i] + 3.0;
        z[i] = -x[i];
    }
    CHECK(pearson_correlation(x, y) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pearson_correlation(x, z) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK_THROWS_CODE(pearson_correlation(std::vector<double>{1}, std::vector<double>{2}), ErrorCode::TooFewSegments);
    CHECK_THROWS_CODE(pearson_correlation(std::vector<double>{2, 2, 2}, std::vector<double>{1, 2, 3}),
                      ErrorCode::ZeroVariance);
    CHECK_THROWS_CODE(pearson_correlation(x, std::vector<double>(5, 0.1)), ErrorCode::ZeroVariance);
}

TEST_CASE("Pearson matches the oracle and ignores positive-affine maps") {
    std::mt19937_64 rng(47);
    std::normal_distribution<double> g(0.0, 1.0);
    for(int k = 0; k < 100; ++k) {
        std::vector<double> x(8), y(8);
        for(std::size_t i = 0; i < 8; ++i) {
            x[i] = g(rng);
            y[i] = 0.5 * x[i] + g(rng);
        }
        const double r = pearson_correlation(x, y);
        CHECK(r == doctest::Approx(oracle::pearson(x, y)).epsilon(1e-12));
        std::vector<double> xa(x), ya(y);
        for(auto& v : xa)
            v = 4.0 * v + 1.0;
        for(auto& v : ya)
            v = 0.25 * v - 9.0;
        CHECK(pearson_correlation(xa, ya) == doctest::Approx(r).epsilon(1e-12));
        CHECK(std::abs(r) <= 1.0);
    }
}

TEST_CASE("report validation enforces ranges") {
    EvalReport r;
    r.auc = 0.7;
    CHECK_NOTHROW(r.validate());
    r.auc = 1.2;
    CHECK_THROWS_CODE(r.validate(), ErrorCode::InvalidArgument);
    r.auc = 0.7;
    r.correlation.push_back({"ge", GeLevel::Block, -1.5});
    CHECK_THROWS_CODE(r.validate(), ErrorCode::InvalidArgument);
    r.correlation.back().r = -0.2;
    r.ratios.push_back({"a", "b", "ge", GeLevel::Frame, 0.9});
    CHECK_THROWS_CODE(r.validate(), ErrorCode::InvalidArgument);
    r.ratios.back().ratio = std::nullopt;
    CHECK_NOTHROW(r.validate());
}
