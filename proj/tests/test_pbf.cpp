#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "zccs/pbf.hpp"

using namespace zccs;

namespace {

Gbf example_seed() { return Gbf(2, 3, {{{1, 2}, 1}}, {{0, 1}}, 0); }

// q=2, m=3, delete {0}, gamma=1, primes (3,2,2), widths (2,1,1),
// h(v0, v1) = v0*v1 -- the running 48-code example
ConstructionParams example_params() {
    return ConstructionParams(2, example_seed(), {0}, 1, {3, 2, 2}, {2, 1, 1},
                              HFunction::from_table(2, 1, {0, 0, 0, 1}));
}

mpq_class frac(long n, long d) { return mpq_class(n, d); }

}  // namespace

TEST_CASE("pbf term bookkeeping") {
    Pbf p(3);
    p.add_term({0, 2}, frac(1, 3));
    p.add_term({0, 2}, frac(2, 3));
    CHECK(p.terms().at({0, 2}) == 1);
    p.add_term({0, 2}, mpq_class(-1));
    CHECK(p.terms().count({0, 2}) == 0);  // cancelled away

    CHECK_THROWS_AS(p.add_term({2, 0}, mpq_class(1)), std::invalid_argument);
    CHECK_THROWS_AS(p.add_term({0, 0}, mpq_class(1)), std::invalid_argument);
    CHECK_THROWS_AS(p.add_term({3}, mpq_class(1)), std::invalid_argument);

    p.add_term({}, frac(5, 2));
    CHECK(p.eval({0, 0, 0}) == frac(5, 2));
    CHECK_THROWS_AS(p.eval({0, 0}), std::invalid_argument);
}

TEST_CASE("pbf from quadratic seed") {
    const Pbf p = Pbf::from_gbf(example_seed(), 7);
    CHECK(p.vars() == 7);
    CHECK(p.terms().at({1, 2}) == 1);
    CHECK(p.terms().at({0}) == 1);
    CHECK(p.terms().size() == 2);
    // the lift is exact: values agree with the seed mod q (the pbf itself
    // never reduces)
    for (long pt = 0; pt < 8; ++pt) {
        std::vector<int> full(7, 0), small(3);
        for (int i = 0; i < 3; ++i) full[i] = small[i] = (pt >> i) & 1;
        const mpq_class diff = p.eval(full) - example_seed().eval(small);
        CHECK(diff.get_den() == 1);
        CHECK(mpz_class(diff.get_num()) % 2 == 0);
    }
    CHECK_THROWS_AS(Pbf::from_gbf(example_seed(), 2), std::invalid_argument);
}

TEST_CASE("seed plus prime tails: frozen coefficients") {
    const ConstructionParams cp = example_params();
    CHECK(cp.total_vars() == 7);

    const Pbf m1 = build_m_lambda(cp, {1, 0, 0});
    CHECK(m1.terms().at({1, 2}) == 1);
    CHECK(m1.terms().at({0}) == 1);
    CHECK(m1.terms().at({3}) == frac(2, 3));
    CHECK(m1.terms().at({4}) == frac(4, 3));
    CHECK(m1.terms().count({5}) == 0);
    CHECK(m1.terms().count({6}) == 0);

    const Pbf m2 = build_m_lambda(cp, {2, 1, 1});
    CHECK(m2.terms().at({3}) == frac(4, 3));
    CHECK(m2.terms().at({4}) == frac(8, 3));
    CHECK(m2.terms().at({5}) == 1);
    CHECK(m2.terms().at({6}) == 1);

    CHECK(build_m_lambda(cp, {0, 0, 0}).terms().size() == 2);  // bare seed

    CHECK_THROWS_AS(build_m_lambda(cp, {3, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_m_lambda(cp, {0, 0}), std::invalid_argument);
}

TEST_CASE("reversed seed variant") {
    const ConstructionParams cp = example_params();
    // reversed seed expands to y1*y2 + y0 + y1 + y2 over q=2
    const Pbf n0 = build_n_lambda(cp, {0, 0, 0});
    CHECK(n0.terms().at({1, 2}) == 1);
    CHECK(n0.terms().at({0}) == 1);
    CHECK(n0.terms().at({1}) == 1);
    CHECK(n0.terms().at({2}) == 1);
    CHECK(n0.terms().size() == 4);

    // the prime tails do not depend on which seed is used
    for (const std::vector<long>& lam : {std::vector<long>{1, 0, 0}, {2, 1, 0}, {0, 1, 1}}) {
        const Pbf a = build_m_lambda(cp, lam);
        const Pbf b = build_n_lambda(cp, lam);
        for (int var = 3; var < 7; ++var) {
            const bool in_a = a.terms().count({var}) > 0;
            const bool in_b = b.terms().count({var}) > 0;
            CHECK(in_a == in_b);
            if (in_a) CHECK(a.terms().at({var}) == b.terms().at({var}));
        }
    }
}

TEST_CASE("family members: frozen expansions") {
    const ConstructionParams cp = example_params();

    // v = 0, v_n = 0, r = 0: everything vanishes, leaving the bare seed
    const Pbf w00 = build_omega_member(cp, 0, {0, 0, 0}, {0}, 0);
    CHECK(w00 == build_m_lambda(cp, {0, 0, 0}));

    // v_n = 1 turns on the gamma carrier (q/2 = 1 on y1)
    const Pbf w01 = build_omega_member(cp, 0, {0, 0, 0}, {0}, 1);
    CHECK(w01.terms().at({1}) == 1);
    CHECK(w01.terms().count({}) == 0);  // h(0,1) = 0

    // v = 1, v_n = 1: h = 1 lands on the constant, carrier y0 gets (q/2)(1+0) = 1
    const Pbf w11 = build_omega_member(cp, 0, {0, 0, 0}, {1}, 1);
    CHECK(w11.terms().at({}) == 1);
    CHECK(w11.terms().at({0}) == 1 + 1);  // seed y0 plus carrier y0
    CHECK(w11.terms().at({1}) == 1);

    // v = 1, r = 1: (q/2)(1+1) reduces to 0 mod q before it is added
    const Pbf w_vr = build_omega_member(cp, 1, {0, 0, 0}, {1}, 0);
    CHECK(w_vr.terms().at({0}) == 1);  // only the seed's own y0 remains

    // second family, all-zero labels: reversed seed + complemented gamma carrier
    const Pbf l00 = build_lambda_member(cp, 0, {0, 0, 0}, {0}, 0);
    CHECK(l00.terms().at({1, 2}) == 1);
    CHECK(l00.terms().at({0}) == 1);
    CHECK(l00.terms().at({1}) == 1 + 1);  // reversed-seed y1 plus (q/2)(1-v_n) carrier
    CHECK(l00.terms().at({2}) == 1);

    // v = 1, r = 0: carrier (q/2)(1+0)(1 - y0) = 1 - y0 adds a constant and flips y0
    const Pbf l10 = build_lambda_member(cp, 0, {0, 0, 0}, {1}, 0);
    CHECK(l10.terms().at({}) == 1);
    CHECK(l10.terms().at({0}) == 1 + 1);  // reversed-seed y0 plus (q - c) = 1
}

TEST_CASE("literal reversal tail variant differs only on the last carrier") {
    const ConstructionParams literal(2, example_seed(), {0}, 1, {3, 2, 2}, {2, 1, 1},
                                     HFunction::from_table(2, 1, {0, 0, 0, 1}),
                                     /*literal_reversal_tail=*/true);
    const ConstructionParams def = example_params();
    // with v + r = 1 the default adds 1 - y0, the literal variant adds y0
    const Pbf a = build_lambda_member(def, 0, {0, 0, 0}, {1}, 0);
    const Pbf b = build_lambda_member(literal, 0, {0, 0, 0}, {1}, 0);
    CHECK(a.terms().at({}) == 1);
    CHECK(b.terms().count({}) == 0);
    CHECK(a.terms().at({0}) == 2);
    CHECK(b.terms().at({0}) == 2);  // seed y0 + literal carrier y0
}

TEST_CASE("integer-plus-roots phase evaluation") {
    const ConstructionParams cp = example_params();
    const Pbf m1 = build_m_lambda(cp, {1, 0, 0});
    // at y3 = 1 (rest 0) the value is 2/3, so the exponent is (2/3)*(6/2) = 2
    CHECK(eval_pbf_phase(m1, {0, 0, 0, 1, 0, 0, 0}, 2, 6) == 2);
    CHECK(eval_pbf_phase(m1, {0, 0, 0, 0, 0, 0, 0}, 2, 6) == 0);
    // at y0 = 1 the integer part 1 contributes exponent 3 = sigma/q
    CHECK(eval_pbf_phase(m1, {1, 0, 0, 0, 0, 0, 0}, 2, 6) == 3);
    CHECK(eval_pbf_phase(m1, {1, 0, 0, 1, 0, 0, 0}, 2, 6) == 5);

    // sigma that does not clear the denominator
    Pbf bad(1);
    bad.add_term({0}, frac(1, 3));
    CHECK_THROWS_AS(eval_pbf_phase(bad, {1}, 2, 2), std::domain_error);
    CHECK_THROWS_AS(eval_pbf_phase(bad, {1}, 2, 3), std::invalid_argument);  // sigma % q != 0
}

TEST_CASE("phases factor into a seed part and prime-tail parts") {
    // q=2, m=2, one prime tail p=3 over two extra bits: every exponent must
    // split as 3*(seed part) + 2*lambda*(tail weight) mod 6.
    const Gbf g(2, 2, {{{0, 1}, 1}});
    const ConstructionParams cp(2, g, {}, 0, {3}, {2},
                                HFunction::from_table(2, 0, {0, 0}));
    for (long lambda = 0; lambda < 3; ++lambda) {
        for (int v_n = 0; v_n <= 1; ++v_n) {
            const Pbf member = build_omega_member(cp, 0, {lambda}, {}, v_n);
            for (long pt = 0; pt < 16; ++pt) {
                std::vector<int> p(4);
                for (int i = 0; i < 4; ++i) p[i] = (pt >> i) & 1;
                const long seed_part = (g.eval({p[0], p[1]}) + v_n * p[0]) % 2;
                const long tail_weight = p[2] + 2 * p[3];
                const long expect = (3 * seed_part + 2 * lambda * tail_weight) % 6;
                CHECK(eval_pbf_phase(member, p, 2, 6) == expect);
            }
        }
    }
}

TEST_CASE("row offset function") {
    const HFunction h = HFunction::from_table(2, 1, {0, 0, 0, 1});
    CHECK(h.value(3) == 1);
    CHECK(h.value(1) == 0);
    CHECK_THROWS_AS(h.value(4), std::out_of_range);
    CHECK_THROWS_AS(HFunction::from_table(2, 1, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(HFunction::from_table(3, 1, {0, 0, 0, 0}), std::invalid_argument);

    // path form v0*v1 over q=2 reproduces the table above
    const HFunction hp = HFunction::from_path(2, 1, {0, 1}, {0, 0}, 0);
    CHECK(hp == h);
    // a 3-bit chain with linear offsets, spot-checked by hand:
    // (q/2) v0 v2 + (q/2) v2 v1 + v0 + 1 over q=4 at (1,1,1) = 2+2+1+1 = 2 mod 4
    const HFunction h3 = HFunction::from_path(4, 2, {0, 2, 1}, {1, 0, 0}, 1);
    CHECK(h3.value(7) == 2);
    CHECK(h3.value(0) == 1);
    CHECK_THROWS_AS(HFunction::from_path(2, 1, {0, 0}, {0, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(HFunction::from_path(2, 1, {0, 2}, {0, 0}, 0), std::invalid_argument);
}

TEST_CASE("two-level value condition on h") {
    CHECK(check_h_condition(HFunction::from_table(2, 1, {0, 0, 0, 1})).ok);
    CHECK(*check_h_condition(HFunction::from_table(2, 1, {0, 0, 0, 1})).c == 0);
    // q=4: {0,2} is fine, {0,1} is not
    CHECK(check_h_condition(HFunction::from_table(4, 0, {0, 2})).ok);
    CHECK(*check_h_condition(HFunction::from_table(4, 0, {0, 2})).c == 0);
    CHECK(*check_h_condition(HFunction::from_table(4, 0, {1, 3})).c == 1);
    CHECK_FALSE(check_h_condition(HFunction::from_table(4, 0, {0, 1})).ok);
    CHECK_FALSE(check_h_condition(HFunction::from_table(4, 1, {0, 0, 1, 2})).ok);
    // constant tables always pass
    CHECK(check_h_condition(HFunction::from_table(8, 0, {5, 5})).ok);
}

TEST_CASE("construction parameter validation") {
    const Gbf g = example_seed();
    const HFunction h1 = HFunction::from_table(2, 1, {0, 0, 0, 1});
    const HFunction h0 = HFunction::from_table(2, 0, {0, 0});

    try {
        ConstructionParams(2, g, {0}, 1, {4}, {2}, h1);
        FAIL("composite prime accepted");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("not prime") != std::string::npos);
    }
    CHECK_THROWS_AS(ConstructionParams(2, g, {0}, 1, {5}, {2}, h1),  // 5 > 2^2
                    std::invalid_argument);
    CHECK_NOTHROW(ConstructionParams(2, g, {0}, 1, {2}, {1}, h1));
    CHECK_THROWS_AS(ConstructionParams(2, g, {0}, 1, {2}, {1}, h1, false, /*strict=*/true),
                    std::invalid_argument);  // strict mode wants p < 2^s
    CHECK_NOTHROW(ConstructionParams(2, g, {0}, 1, {2}, {2}, h1, false, true));
    CHECK_THROWS_AS(ConstructionParams(2, g, {0}, 1, {3}, {2, 1}, h1), std::invalid_argument);
    CHECK_THROWS_AS(ConstructionParams(2, g, {1}, 0, {}, {}, h1), std::invalid_argument);
    CHECK_THROWS_AS(ConstructionParams(2, g, {0}, 1, {}, {}, h0), std::invalid_argument);
    CHECK_THROWS_AS(ConstructionParams(2, g, {0}, 0, {}, {}, h1), std::invalid_argument);
    CHECK_THROWS_AS(ConstructionParams(4, Gbf(4, 2, {{{0, 1}, 2}}), {}, 0, {}, {},
                                       HFunction::from_table(2, 0, {0, 0})),
                    std::invalid_argument);  // h carries the wrong q

    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
}

TEST_CASE("derived set dimensions") {
    const ConstructionParams cp = example_params();
    CHECK(cp.sigma() == 6);
    CHECK(cp.prime_product() == 12);
    CHECK(cp.code_rows() == 4);
    CHECK(cp.code_length() == 96);
    CHECK(cp.zcz_width() == 8);
    CHECK(cp.code_count() == 48);

    // no prime tails: the dimensions collapse to the complete-complementary case
    const ConstructionParams ccc(2, example_seed(), {0}, 1, {}, {},
                                 HFunction::from_table(2, 1, {0, 0, 0, 0}));
    CHECK(ccc.sigma() == 2);
    CHECK(ccc.code_length() == 8);
    CHECK(ccc.zcz_width() == 8);
    CHECK(ccc.code_count() == 4);
    CHECK(ccc.code_rows() == 4);
}
