#include "qtaft/config.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qtaft/errors.hpp"
#include "qtaft/selftest.hpp"

using namespace qtaft;

TEST(Config, SpecRoundTripIsByteExact) {
  for (const ActionSpec& spec :
       {example_rotation_action(), example_reflection_action()}) {
    const std::string once = action_spec_to_json(spec);
    const std::string twice = action_spec_to_json(action_spec_from_json(once));
    EXPECT_EQ(once, twice);
  }
}

TEST(Config, ScalarForms) {
  EXPECT_EQ(cyc_from_json_text("\"zeta(12)^4\""), CycNum::root_of_unity(12, 4));
  EXPECT_EQ(cyc_from_json_text("\"-2/3\""), CycNum(Rational(-2, 3)));
  EXPECT_EQ(cyc_from_json_text("5"), CycNum(5));
  const CycNum value = CycNum::root_of_unity(12, 5) * CycNum(Rational(1, 2));
  EXPECT_EQ(cyc_from_json_text(cyc_to_json_text(value)), value);
  EXPECT_THROW(cyc_from_json_text("\"zeta(12)\""), parse_error);
  EXPECT_THROW(cyc_from_json_text("\"one half\""), parse_error);
}

TEST(Config, MissingFieldsAreNamed) {
  const std::string base = action_spec_to_json(example_rotation_action());
  auto without = [&](const std::string& field) {
    auto json = nlohmann::ordered_json::parse(base);
    json.erase(field);
    return json.dump();
  };
  try {
    action_spec_from_json(without("mu_star"));
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("mu_star"), std::string::npos);
  }
  try {
    action_spec_from_json(without("gamma"));
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("gamma"), std::string::npos);
  }
}

TEST(Config, NonMultipleOrderRejectedAtParseTime) {
  auto json = nlohmann::ordered_json::parse(action_spec_to_json(example_rotation_action()));
  json["m"] = 4;  // r = 3 does not divide 4
  EXPECT_THROW(action_spec_from_json(json.dump()), parse_error);
}

TEST(Config, BadGammaTableParsesButFailsVerification) {
  auto json = nlohmann::ordered_json::parse(action_spec_to_json(example_rotation_action()));
  json["gamma"][0] = "7";
  const ActionSpec spec = action_spec_from_json(json.dump());
  const ConstraintReport report = spec.validate_structure();
  const CheckEntry* entry = report.find("structure.gamma_eigenvector");
  ASSERT_NE(entry, nullptr);
  EXPECT_FALSE(entry->passed);
}

TEST(Config, FamilyConfigs) {
  const std::string rotation_text = R"({
    "family": "rotation",
    "n": 3, "r": 3, "m": 3, "d": 1,
    "gamma0": "1",
    "xi": ["zeta(12)^8"],
    "mu": ["1", "1", "1"],
    "mu_star": ["1", "1", "1"]
  })";
  const FamilyConfig config = family_config_from_json(rotation_text);
  ASSERT_EQ(config.family, FamilyKind::rotation);
  const BuildOutcome outcome = build_rotation(config.rotation);
  EXPECT_TRUE(outcome.ok()) << outcome.report.to_string();

  EXPECT_THROW(family_config_from_json(R"({"n": 3})"), parse_error);
  EXPECT_THROW(family_config_from_json(R"({"family": "spiral"})"), parse_error);
}

TEST(Config, ReportSerializationIsDeterministic) {
  ConstraintReport report;
  report.add("first", true);
  report.add("second", false, "why it failed");
  const std::string a = report_to_json(report);
  const std::string b = report_to_json(report);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("why it failed"), std::string::npos);
}
