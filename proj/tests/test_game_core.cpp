#include "tbsg/dynamics.hpp"
#include "tbsg/generate.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tbsg;
using testutil::GameBuilder;

TEST_CASE("validate accepts a well-formed self-loop game") {
    GameBuilder b(1, 0.9);
    b.det_action(0, 0.0, 0);
    CHECK(validate_game(b.build()).empty());
}

TEST_CASE("validate reports a defective transition row") {
    GameBuilder b(1, 0.9);
    const int a = b.action(0, 0.0, {{0, 0.9}});  // sums to 0.9
    const Game g = b.build();
    const auto violations = validate_game(g);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].action == a);
    CHECK(violations[0].defect == doctest::Approx(-0.1));
}

TEST_CASE("validate reports a state without actions") {
    GameBuilder b(2, 0.9);
    b.det_action(0, 0.0, 0);
    const auto violations = validate_game(b.build());
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].state == 1);
}

TEST_CASE("value of a zero-reward self-loop is zero") {
    GameBuilder b(1, 0.9);
    b.det_action(0, 0.0, 0);
    const Game g = b.build();
    CHECK(value_of(g, default_strategy(g))(0) == doctest::Approx(0.0));
}

TEST_CASE("value of a unit-reward self-loop is the geometric series") {
    GameBuilder b(1, 0.9);
    b.det_action(0, 1.0, 0);
    const Game g = b.build();
    CHECK(value_of(g, default_strategy(g))(0) == doctest::Approx(10.0));
}

TEST_CASE("value of a deterministic two-state cycle") {
    GameBuilder b(2, 0.5);
    b.det_action(0, 1.0, 1);
    b.det_action(1, 0.0, 0);
    const Game g = b.build();
    const Eigen::VectorXd v = value_of(g, default_strategy(g));
    CHECK(v(0) == doctest::Approx(4.0 / 3.0));
    CHECK(v(1) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("reduced cost of off-strategy self-loop actions") {
    const Game g = testutil::two_action_loop(Player::One);
    Strategy pi{{0}};
    Eigen::VectorXd v = value_of(g, pi);
    CHECK(v(0) == doctest::Approx(2.0));
    CHECK(modified_reward(g, v)(1) == doctest::Approx(1.0));

    pi.choice[0] = 1;
    v = value_of(g, pi);
    CHECK(v(0) == doctest::Approx(4.0));
    CHECK(modified_reward(g, v)(0) == doctest::Approx(-1.0));
}

TEST_CASE("flux of a self-loop is 1/(1-gamma)") {
    GameBuilder b(1, 0.9);
    b.det_action(0, 1.0, 0);
    const Game g = b.build();
    CHECK(flux_of(g, default_strategy(g))(0) == doctest::Approx(10.0));
}

TEST_CASE("flux of the two-state cycle") {
    GameBuilder b(2, 0.5);
    b.det_action(0, 1.0, 1);
    b.det_action(1, 0.0, 0);
    const Game g = b.build();
    const Eigen::VectorXd x = flux_of(g, default_strategy(g));
    CHECK(x(0) == doctest::Approx(2.0));
    CHECK(x(1) == doctest::Approx(2.0));
    CHECK(x.sum() == doctest::Approx(4.0));
}

TEST_CASE("flux identities hold on random games and strategies") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GenSpec spec;
        spec.num_states = 3 + (int)(seed % 4);
        spec.gamma = seed % 2 == 0 ? 0.5 : 0.9;
        spec.seed = seed;
        const Game g = generate(spec);
        REQUIRE(validate_game(g).empty());
        const double l_over = g.num_states / (1.0 - g.gamma);

        const Strategy pi = random_strategy(g, seed);
        const Strategy pi2 = random_strategy(g, seed + 999);
        const Eigen::VectorXd v = value_of(g, pi);
        const Eigen::VectorXd x = flux_of(g, pi);
        const Eigen::VectorXd rc = modified_reward(g, v);

        // sum, per-entry bounds, total-value identity
        CHECK(x.sum() == doctest::Approx(l_over).epsilon(1e-9));
        for (int s = 0; s < g.num_states; ++s) {
            CHECK(x(pi.choice[s]) >= 1.0 - 1e-9);
            CHECK(x(pi.choice[s]) <= l_over + 1e-9);
        }
        CHECK(v.sum() == doctest::Approx(x.dot(g.reward)).epsilon(1e-8));

        // on-strategy reduced costs vanish
        for (int s = 0; s < g.num_states; ++s)
            CHECK(std::abs(rc(pi.choice[s])) <= g.eps());

        // difference identity against a second strategy
        const Eigen::VectorXd v2 = value_of(g, pi2);
        const Eigen::VectorXd x2 = flux_of(g, pi2);
        const double lhs = v2.sum() - v.sum();
        CHECK(lhs == doctest::Approx(x2.dot(rc)).epsilon(1e-8));
    }
}

TEST_CASE("values stay within the reward bound") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        const Game g = generate(spec);
        const Eigen::VectorXd v = value_of(g, random_strategy(g, seed));
        CHECK(v.cwiseAbs().maxCoeff() <=
              g.max_abs_reward() / (1.0 - g.gamma) + 1e-9);
    }
}
