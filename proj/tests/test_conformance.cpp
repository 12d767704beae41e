#include <gpforge/conformance.hpp>
#include <gpforge/json_io.hpp>

#include <catch2/catch.hpp>

using gpforge::AuditStatus;
using gpforge::Rational;

namespace {

const gpforge::AuditEntry& entry(const gpforge::ConformanceReport& rep, const std::string& id) {
    for (const auto& e : rep.entries)
        if (e.id == id) return e;
    FAIL("missing entry " + id);
    return rep.entries.front();
}

std::vector<Rational> samples() { return {Rational(2), Rational(3), Rational(5, 2)}; }

}  // namespace

TEST_CASE("printed a-formula is refuted, printed b-formula confirmed") {
    auto rep = gpforge::audit(samples(), 0);

    const auto& a = entry(rep, "EQ1_A");
    CHECK(a.status == AuditStatus::REFUTED);
    // the witness substitutes the printed pair into the first defining
    // equation: at t=2, U=V=1 the left side is 5/3 against U^2 = 1
    REQUIRE(a.witness.size() >= 6);
    CHECK(a.witness[0] == "t=2/1");
    CHECK(a.witness[3] == "printed_a=1/15");
    CHECK(a.witness[4] == "a(t^2+1)+bt=5/3");
    CHECK(a.witness[6] == "system_a=-1/15");

    CHECK(entry(rep, "EQ1_B").status == AuditStatus::CONFIRMED);
}

TEST_CASE("printed parametrization is refuted with the exact witness") {
    auto rep = gpforge::audit(samples(), 0);
    const auto& e = entry(rep, "EQ2_PARAM");
    CHECK(e.status == AuditStatus::REFUTED);
    REQUIRE(e.witness.size() == 5);
    CHECK(e.witness[0] == "t=2/1");
    CHECK(e.witness[1] == "p=1/1");
    CHECK(e.witness[2] == "q=1/1");
    CHECK(e.witness[3] == "-A*U^2+B*V^2=7561/1");
    CHECK(e.witness[4] == "R^2=8836/1");
}

TEST_CASE("printed quartic, Jacobian and its point are internally consistent") {
    auto rep = gpforge::audit(samples(), 0);
    CHECK(entry(rep, "EQ3_QUARTIC").status == AuditStatus::CONFIRMED);
    CHECK(entry(rep, "THM3_POINT_P").status == AuditStatus::CONFIRMED);
    CHECK(entry(rep, "THM3_E_POINT").status == AuditStatus::CONFIRMED);
    CHECK(entry(rep, "THM3_G2G3").status == AuditStatus::CONFIRMED);
    CHECK(entry(rep, "S4_CLOSED_FORMS").status == AuditStatus::CONFIRMED);
}

TEST_CASE("the report is deterministic") {
    auto rep1 = gpforge::audit(samples(), 0);
    auto rep2 = gpforge::audit(samples(), 0);
    gpforge::json j1 = rep1, j2 = rep2;
    CHECK(j1.dump() == j2.dump());

    // a different seed may change sampled extras but not any verdict
    auto rep3 = gpforge::audit(samples(), 1234);
    REQUIRE(rep3.entries.size() == rep1.entries.size());
    for (size_t i = 0; i < rep1.entries.size(); ++i)
        CHECK(rep1.entries[i].status == rep3.entries[i].status);
}

TEST_CASE("every formula id appears exactly once") {
    auto rep = gpforge::audit({Rational(2)}, 0);
    std::vector<std::string> ids;
    for (const auto& e : rep.entries) ids.push_back(e.id);
    std::vector<std::string> expect{"EQ1_A",        "EQ1_B",       "EQ2_PARAM",
                                    "EQ3_QUARTIC",  "THM3_POINT_P", "THM3_E_POINT",
                                    "THM3_G2G3",    "S4_CLOSED_FORMS"};
    CHECK(ids == expect);
}
