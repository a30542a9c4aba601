#include <doctest.h>

#include <cmath>
#include <vector>

#include "swarmsim/dynamics.hpp"
#include "swarmsim/rng.hpp"

using namespace swarmsim;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

AgentState ground_agent(int id, Vec2 pos, Vec2 vel) {
    return {id, AgentKind::Ground, pos, vel};
}

AgentState air_agent(int id, Vec2 pos, Vec2 vel) { return {id, AgentKind::Air, pos, vel}; }

NeighborList refs(const std::vector<AgentState>& agents) {
    NeighborList list;
    for (const auto& a : agents) list.push_back(&a);
    return list;
}

Target active_target(Vec2 pos) {
    Target t;
    t.position = pos;
    t.active = true;
    return t;
}

bool unit_or_zero(Vec2 f) {
    const double n = norm(f);
    return n == 0.0 || std::fabs(n - 1.0) <= 1e-12;
}

}  // namespace

TEST_CASE("air_neighbors is a closed-range distance filter excluding self") {
    const AgentState self = air_agent(0, {0, 0}, {1, 0});
    std::vector<AgentState> others;
    others.push_back(air_agent(1, {299.9, 0}, {}));
    others.push_back(ground_agent(2, {300.1, 0}, {}));
    others.push_back(ground_agent(3, {0, 300}, {}));
    others.push_back(self);  // same id: must never appear in its own neighborhood

    const NeighborList nb = air_neighbors(self, others, 300.0);
    REQUIRE(nb.size() == 2);
    CHECK(nb[0]->id == 1);
    CHECK(nb[1]->id == 3);
}

TEST_CASE("ground_neighbors applies vision distance and angle") {
    const AgentState self = ground_agent(0, {0, 0}, {1, 0});
    std::vector<AgentState> others;
    others.push_back(ground_agent(1, {20, 0}, {}));    // ahead
    others.push_back(ground_agent(2, {-20, 0}, {}));   // directly behind
    others.push_back(ground_agent(3, {30, 0}, {}));    // at the vision distance exactly
    others.push_back(ground_agent(4, {40, 0}, {}));    // out of range

    SUBCASE("a full 360-degree angle reduces to a distance filter") {
        const NeighborList nb = ground_neighbors(self, others, 30.0, 360.0);
        REQUIRE(nb.size() == 3);
        CHECK(nb[0]->id == 1);
        CHECK(nb[1]->id == 2);
        CHECK(nb[2]->id == 3);
    }

    SUBCASE("a 180-degree angle drops the neighbor directly behind") {
        const NeighborList nb = ground_neighbors(self, others, 30.0, 180.0);
        REQUIRE(nb.size() == 2);
        CHECK(nb[0]->id == 1);
        CHECK(nb[1]->id == 3);
    }

    SUBCASE("the bearing boundary is closed") {
        std::vector<AgentState> side{ground_agent(5, {0, 10}, {})};  // bearing 90 degrees
        CHECK(ground_neighbors(self, side, 30.0, 180.0).size() == 1);
    }
}

TEST_CASE("cohesion steers toward the neighborhood centroid") {
    const AgentState self = ground_agent(0, {0, 0}, {1, 0});
    std::vector<AgentState> two{ground_agent(1, {2, 0}, {}), ground_agent(2, {0, 2}, {})};
    const Vec2 f = cohesion(self, refs(two));
    CHECK(f.x == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(f.y == doctest::Approx(kInvSqrt2).epsilon(1e-12));

    CHECK(cohesion(self, {}) == Vec2{0, 0});

    std::vector<AgentState> one{ground_agent(1, {5, 0}, {})};
    CHECK(cohesion(self, refs(one)) == Vec2{1, 0});
}

TEST_CASE("alignment steers along the mean neighbor velocity") {
    std::vector<AgentState> two{ground_agent(1, {9, 9}, {1, 0}), ground_agent(2, {5, 5}, {0, 1})};
    const Vec2 f = alignment(refs(two));
    CHECK(f.x == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(f.y == doctest::Approx(kInvSqrt2).epsilon(1e-12));

    std::vector<AgentState> cancel{ground_agent(1, {}, {1, 0}), ground_agent(2, {}, {-1, 0})};
    CHECK(alignment(refs(cancel)) == Vec2{0, 0});

    CHECK(alignment({}) == Vec2{0, 0});
}

TEST_CASE("separation pushes away from close neighbors only") {
    const AgentState self = ground_agent(0, {0, 0}, {1, 0});

    std::vector<AgentState> one{ground_agent(1, {3, 0}, {})};
    CHECK(separation(self, refs(one), 10.0) == Vec2{-1, 0});

    std::vector<AgentState> sym{ground_agent(1, {2, 0}, {}), ground_agent(2, {-2, 0}, {})};
    CHECK(separation(self, refs(sym), 10.0) == Vec2{0, 0});

    std::vector<AgentState> far{ground_agent(1, {11, 0}, {})};
    CHECK(separation(self, refs(far), 10.0) == Vec2{0, 0});

    SUBCASE("the separation threshold is open") {
        std::vector<AgentState> at{ground_agent(1, {10, 0}, {})};
        CHECK(separation(self, refs(at), 10.0) == Vec2{0, 0});
    }

    SUBCASE("coincident agents split deterministically by id order") {
        std::vector<AgentState> here{ground_agent(1, {0, 0}, {})};
        CHECK(separation(self, refs(here), 10.0) == Vec2{1, 0});
        const AgentState other = ground_agent(2, {0, 0}, {1, 0});
        std::vector<AgentState> here2{ground_agent(1, {0, 0}, {})};
        CHECK(separation(other, refs(here2), 10.0) == Vec2{-1, 0});
    }
}

TEST_CASE("target_attraction points at an active target in range") {
    const AgentState self = ground_agent(0, {0, 0}, {1, 0});
    CHECK(target_attraction(self, active_target({10, 0}), 30.0) == Vec2{1, 0});
    CHECK(target_attraction(self, active_target({100, 0}), 30.0) == Vec2{0, 0});
    Target inactive = active_target({10, 0});
    inactive.active = false;
    CHECK(target_attraction(self, inactive, 30.0) == Vec2{0, 0});
}

TEST_CASE("obstacle_avoidance steers perpendicular away from the blocking obstacle") {
    const AgentState self = ground_agent(0, {0, 0}, {1, 0});

    SUBCASE("left-side obstacle steers right") {
        const std::vector<Obstacle> obstacles{{{20, 5}, 8.0}};
        CHECK(obstacle_avoidance(self, obstacles, 30.0) == Vec2{0, -1});
    }

    SUBCASE("no qualifying obstacle, no force") {
        const std::vector<Obstacle> obstacles{{{20, 20}, 8.0}};
        CHECK(obstacle_avoidance(self, obstacles, 30.0) == Vec2{0, 0});
    }

    SUBCASE("a dead-ahead obstacle steers left") {
        const std::vector<Obstacle> obstacles{{{20, 0}, 8.0}};
        CHECK(obstacle_avoidance(self, obstacles, 30.0) == Vec2{0, 1});
    }

    SUBCASE("only the nearest qualifying obstacle acts") {
        const std::vector<Obstacle> obstacles{{{25, -3}, 8.0}, {{12, 5}, 8.0}};
        CHECK(obstacle_avoidance(self, obstacles, 30.0) == Vec2{0, -1});
    }
}

TEST_CASE("uav_velocity_update keeps heading under zero weights and rescales speed") {
    AirParams p;
    p.speed = 3.0;
    p.cohesion_air_weight = 0.0;
    p.alignment_air_weight = 0.0;
    p.separation_weight = 0.0;
    p.cohesion_ground_weight = 0.0;
    p.alignment_ground_weight = 0.0;
    p.target_weight = 0.0;

    const AgentState self = air_agent(0, {500, 500}, {3, 0});
    std::vector<AgentState> others{air_agent(1, {510, 500}, {0, 3})};
    const Vec2 v = uav_velocity_update(self, refs(others), {}, {}, p);
    CHECK(v.x == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(v.y == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("uav_velocity_update with only target attraction from rest heads to the target") {
    AirParams p;
    p.speed = 2.0;
    p.cohesion_air_weight = 0.0;
    p.alignment_air_weight = 0.0;
    p.separation_weight = 0.0;
    p.cohesion_ground_weight = 0.0;
    p.alignment_ground_weight = 0.0;
    p.target_weight = 1.0;

    const AgentState self = air_agent(0, {0, 0}, {0, 0});
    const Vec2 v = uav_velocity_update(self, {}, {}, active_target({0, 50}), p);
    CHECK(v == Vec2{0, 2});

    SUBCASE("with a prior velocity the heading rotates toward the target") {
        const AgentState moving = air_agent(0, {0, 0}, {2, 0});
        const Vec2 rotated = uav_velocity_update(moving, {}, {}, active_target({0, 50}), p);
        CHECK(rotated.y > 0.0);
        CHECK(norm(rotated) == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("an isolated UAV flies straight") {
    AirParams p;
    p.speed = 4.0;
    const AgentState self = air_agent(0, {100, 100}, {0, 4});
    const Vec2 v = uav_velocity_update(self, {}, {}, {}, p);
    CHECK(v.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(v.y == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("ground_velocity_update rescales to unit ground speed") {
    GroundParams p;  // reference fixed weights

    SUBCASE("no forces: straight at speed 1") {
        const AgentState self = ground_agent(0, {50, 50}, {0, 1});
        const Vec2 v = ground_velocity_update(self, {}, {}, {}, {}, p);
        CHECK(v.x == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(v.y == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("target pull turns the velocity east") {
        const AgentState self = ground_agent(0, {0, 0}, {0, 1});
        const Vec2 v =
            ground_velocity_update(self, {}, {}, active_target({20, 0}), {}, p);
        CHECK(v.x > 0.0);
        CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("lone agent near an obstacle follows prev + avoidance") {
        const AgentState self = ground_agent(0, {0, 0}, {1, 0});
        const std::vector<Obstacle> obstacles{{{20, 5}, 8.0}};
        const Vec2 v = ground_velocity_update(self, {}, {}, {}, obstacles, p);
        const Vec2 expected = normalize(Vec2{1, 0} + Vec2{0, -1});
        CHECK(v.x == doctest::Approx(expected.x).epsilon(1e-12));
        CHECK(v.y == doctest::Approx(expected.y).epsilon(1e-12));
    }
}

TEST_CASE("position_update adds the velocity and reflects at the boundary") {
    const Space space{1000, 1000};
    const AgentState a = ground_agent(0, {500, 500}, {0, 0});
    CHECK(position_update(a, {1, 0}, space).position == Vec2{501, 500});

    const AgentState near_wall = ground_agent(1, {999.5, 500}, {2, 0});
    const AgentState bounced = position_update(near_wall, {2, 0}, space);
    CHECK(bounced.position == Vec2{998.5, 500});
    CHECK(bounced.velocity == Vec2{-2, 0});

    const AgentState still = ground_agent(2, {10, 10}, {1, 0});
    CHECK(position_update(still, {0, 0}, space).position == Vec2{10, 10});
}

TEST_CASE("every force is a unit vector or exactly zero on random scenes") {
    Rng rng(321);
    for (int trial = 0; trial < 400; ++trial) {
        const AgentState self =
            ground_agent(0, {rng.uniform(0, 100), rng.uniform(0, 100)},
                         {rng.uniform(-1, 1), rng.uniform(-1, 1)});
        std::vector<AgentState> others;
        const int n = static_cast<int>(rng.index(6));
        for (int i = 0; i < n; ++i) {
            others.push_back(ground_agent(i + 1, {rng.uniform(0, 100), rng.uniform(0, 100)},
                                          {rng.uniform(-1, 1), rng.uniform(-1, 1)}));
        }
        const NeighborList nb = refs(others);
        const std::vector<Obstacle> obstacles{
            {{rng.uniform(10, 90), rng.uniform(10, 90)}, rng.uniform(2.0, 10.0)}};
        const Target t = active_target({rng.uniform(0, 100), rng.uniform(0, 100)});

        CHECK(unit_or_zero(cohesion(self, nb)));
        CHECK(unit_or_zero(alignment(nb)));
        CHECK(unit_or_zero(separation(self, nb, 20.0)));
        CHECK(unit_or_zero(target_attraction(self, t, 50.0)));
        if (!self.velocity.is_zero()) {
            CHECK(unit_or_zero(obstacle_avoidance(self, obstacles, 30.0)));
        }
    }
}

TEST_CASE("velocity updates preserve the configured speeds exactly") {
    Rng rng(654);
    GroundParams gp;
    AirParams ap;
    for (int trial = 0; trial < 300; ++trial) {
        ap.speed = rng.uniform(1.0, 5.0);
        std::vector<AgentState> crowd;
        for (int i = 1; i <= 4; ++i) {
            crowd.push_back(air_agent(i, {rng.uniform(0, 400), rng.uniform(0, 400)},
                                      {rng.uniform(-3, 3), rng.uniform(-3, 3)}));
        }
        std::vector<AgentState> grounds;
        for (int i = 5; i <= 8; ++i) {
            grounds.push_back(ground_agent(i, {rng.uniform(0, 400), rng.uniform(0, 400)},
                                           {rng.uniform(-1, 1), rng.uniform(-1, 1)}));
        }
        const Target t = active_target({rng.uniform(0, 400), rng.uniform(0, 400)});

        const AgentState uav =
            air_agent(0, {rng.uniform(0, 400), rng.uniform(0, 400)},
                      {rng.uniform(-3, 3), rng.uniform(-3, 3)});
        const Vec2 uav_v = uav_velocity_update(uav, refs(crowd), refs(grounds), t, ap);
        CHECK(norm(uav_v) == doctest::Approx(ap.speed).epsilon(1e-9));

        const AgentState walker =
            ground_agent(9, {rng.uniform(0, 400), rng.uniform(0, 400)},
                         {rng.uniform(-1, 1), rng.uniform(-1, 1)});
        const Vec2 walker_v = ground_velocity_update(walker, refs(grounds), refs(crowd), t,
                                                     {{{200, 200}, 30.0}}, gp);
        CHECK(norm(walker_v) == doctest::Approx(gp.speed).epsilon(1e-9));
    }
}

TEST_CASE("forces are equivariant under rotation of the whole scene") {
    Rng rng(987);
    GroundParams gp;
    AirParams ap;
    for (int trial = 0; trial < 200; ++trial) {
        const double theta = rng.uniform(0.0, 6.283185307179586);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const auto rot = [&](Vec2 v) { return Vec2{c * v.x - s * v.y, s * v.x + c * v.y}; };
        const auto rot_agent = [&](const AgentState& a) {
            return AgentState{a.id, a.kind, rot(a.position), rot(a.velocity)};
        };

        const AgentState self =
            ground_agent(0, {rng.uniform(-50, 50), rng.uniform(-50, 50)},
                         {rng.uniform(-1, 1), rng.uniform(-1, 1)});
        std::vector<AgentState> others;
        for (int i = 1; i <= 5; ++i) {
            others.push_back(ground_agent(i, {rng.uniform(-50, 50), rng.uniform(-50, 50)},
                                          {rng.uniform(-1, 1), rng.uniform(-1, 1)}));
        }
        std::vector<AgentState> rotated_others;
        for (const auto& o : others) rotated_others.push_back(rot_agent(o));
        const AgentState rotated_self = rot_agent(self);

        const Target t = active_target({rng.uniform(-50, 50), rng.uniform(-50, 50)});
        Target rt = t;
        rt.position = rot(t.position);

        const std::vector<Obstacle> obstacles{
            {{rng.uniform(-50, 50), rng.uniform(-50, 50)}, rng.uniform(2.0, 15.0)}};
        const std::vector<Obstacle> rotated_obstacles{
            {rot(obstacles[0].center), obstacles[0].radius}};

        const auto close = [&](Vec2 a, Vec2 b) {
            CHECK(a.x == doctest::Approx(b.x).epsilon(1e-9));
            CHECK(a.y == doctest::Approx(b.y).epsilon(1e-9));
        };

        close(rot(cohesion(self, refs(others))), cohesion(rotated_self, refs(rotated_others)));
        close(rot(alignment(refs(others))), alignment(refs(rotated_others)));
        close(rot(separation(self, refs(others), 40.0)),
              separation(rotated_self, refs(rotated_others), 40.0));
        close(rot(target_attraction(self, t, 60.0)),
              target_attraction(rotated_self, rt, 60.0));

        // skip configurations where rounding can flip the detection predicate
        const auto hit = obstacle_ahead(self.position, self.velocity, obstacles[0], 30.0);
        const auto rhit = obstacle_ahead(rotated_self.position, rotated_self.velocity,
                                         rotated_obstacles[0], 30.0);
        if (hit.has_value() == rhit.has_value() && !self.velocity.is_zero() &&
            (!hit || hit->lateral > 1e-6)) {
            close(rot(obstacle_avoidance(self, obstacles, 30.0)),
                  obstacle_avoidance(rotated_self, rotated_obstacles, 30.0));
        }

        close(rot(ground_velocity_update(self, refs(others), {}, t, obstacles, gp)),
              ground_velocity_update(rotated_self, refs(rotated_others), {}, rt,
                                     rotated_obstacles, gp));

        const AgentState uav = air_agent(10, self.position, self.velocity * 3.0);
        const AgentState rotated_uav = rot_agent(uav);
        close(rot(uav_velocity_update(uav, refs(others), refs(others), t, ap)),
              uav_velocity_update(rotated_uav, refs(rotated_others), refs(rotated_others), rt,
                                  ap));
    }
}

TEST_CASE("neighbor list order never changes a force result") {
    Rng rng(222);
    for (int trial = 0; trial < 200; ++trial) {
        const AgentState self =
            ground_agent(0, {rng.uniform(0, 50), rng.uniform(0, 50)},
                         {rng.uniform(-1, 1), rng.uniform(-1, 1)});
        std::vector<AgentState> others;
        for (int i = 1; i <= 6; ++i) {
            others.push_back(ground_agent(i, {rng.uniform(0, 50), rng.uniform(0, 50)},
                                          {rng.uniform(-1, 1), rng.uniform(-1, 1)}));
        }
        NeighborList forward = refs(others);
        NeighborList backward(forward.rbegin(), forward.rend());

        const auto close = [&](Vec2 a, Vec2 b) {
            CHECK(a.x == doctest::Approx(b.x).epsilon(1e-12));
            CHECK(a.y == doctest::Approx(b.y).epsilon(1e-12));
        };
        close(cohesion(self, forward), cohesion(self, backward));
        close(alignment(forward), alignment(backward));
        close(separation(self, forward, 25.0), separation(self, backward, 25.0));
    }
}

TEST_CASE("ground dynamics ignore UAVs when the air-influence genes are zero") {
    GroundParams p;
    p.cohesion_air_weight = 0.0;
    p.alignment_air_weight = 0.0;
    const Space space{200, 200};
    const std::vector<Obstacle> obstacles{{{100, 100}, 15.0}};
    const Target no_target;  // inactive

    std::vector<AgentState> with_uavs;
    Rng rng(31);
    for (int i = 0; i < 8; ++i) {
        const double angle = rng.uniform(0.0, 6.283185307179586);
        with_uavs.push_back(ground_agent(i, {rng.uniform(10, 190), rng.uniform(10, 190)},
                                         {std::cos(angle), std::sin(angle)}));
    }
    std::vector<AgentState> uavs{air_agent(100, {90, 90}, {2, 1}),
                                 air_agent(101, {120, 100}, {-1, 2})};
    std::vector<AgentState> without_uavs = with_uavs;

    for (int step = 0; step < 200; ++step) {
        std::vector<AgentState> next_with(with_uavs.size());
        std::vector<AgentState> next_without(without_uavs.size());
        for (std::size_t i = 0; i < with_uavs.size(); ++i) {
            const NeighborList nb_with =
                ground_neighbors(with_uavs[i], with_uavs, p.vision_distance, p.vision_angle);
            const NeighborList linked = refs(uavs);
            const Vec2 v_with = ground_velocity_update(with_uavs[i], nb_with, linked, no_target,
                                                       obstacles, p);
            next_with[i] = position_update(with_uavs[i], v_with, space);

            const NeighborList nb_without = ground_neighbors(without_uavs[i], without_uavs,
                                                             p.vision_distance, p.vision_angle);
            const Vec2 v_without = ground_velocity_update(without_uavs[i], nb_without, {},
                                                          no_target, obstacles, p);
            next_without[i] = position_update(without_uavs[i], v_without, space);
        }
        with_uavs = std::move(next_with);
        without_uavs = std::move(next_without);
        // also move the UAVs around so their states keep changing
        for (auto& u : uavs) u = position_update(u, u.velocity, space);

        for (std::size_t i = 0; i < with_uavs.size(); ++i) {
            REQUIRE(with_uavs[i].position == without_uavs[i].position);
            REQUIRE(with_uavs[i].velocity == without_uavs[i].velocity);
        }
    }
}
