#include <doctest.h>

#include <random>
#include <sstream>

#include "drad/error.hpp"
#include "drad/obstruction.hpp"
#include "drad/report.hpp"
#include "drad/subgroups.hpp"
#include "helpers.hpp"

using namespace drad;
using drad::testing::rng;

namespace {

std::string random_word(std::size_t max_len) {
  static const std::string alphabet = "abcxyzGH(),0123456789 _-";
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, alphabet.size() - 1);
  std::string s;
  for (std::size_t n = len(rng()); n > 0; --n) s += alphabet[pick(rng())];
  return s;
}

std::size_t uniform(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng()); }

SubsetBits random_subset(std::size_t order) {
  SubsetBits s(order);
  for (ElementIndex e = 0; e < order; ++e)
    if (uniform(0, 2) == 0) s.insert(e);
  return s;
}

ObstructionCert random_cert(std::size_t order) {
  ObstructionCert c;
  c.kind = static_cast<CertKind>(uniform(0, 5));
  c.group = random_word(10);
  c.h = random_subset(order);
  c.conclusion = random_word(30);
  switch (c.kind) {
    case CertKind::CharacterField:
      c.character = CharacterImages{static_cast<std::uint32_t>(uniform(1, 60)), {{"x", 3}, {"z", 1}}};
      c.conductor = static_cast<std::uint32_t>(uniform(1, 60));
      break;
    case CertKind::ParityInfeasible: {
      c.variables = uniform(1, 90);
      for (std::size_t r = uniform(1, 4); r > 0; --r) {
        ParityRow row;
        row.source = uniform(0, 1) ? ParityRow::Source::Character : ParityRow::Source::Coset;
        if (row.source == ParityRow::Source::Character) {
          row.character = CharacterImages{4, {{"z", 1}}};
          row.coordinate = static_cast<std::uint32_t>(uniform(0, 3));
        } else {
          row.coset_rep = static_cast<ElementIndex>(uniform(0, order - 1));
        }
        row.row = BitRow(c.variables);
        for (std::size_t v = 0; v < c.variables; ++v) row.row.set(v, uniform(0, 1));
        row.rhs = uniform(0, 1);
        c.rows.push_back(std::move(row));
      }
      break;
    }
    case CertKind::BoolRingUnit:
      c.y = random_subset(order);
      for (std::size_t k = uniform(1, 3); k > 0; --k) c.unit_combination.push_back(static_cast<ElementIndex>(uniform(1, order - 1)));
      break;
    case CertKind::ExhaustedSearch: c.search_nodes = uniform(0, 1u << 30); break;
    case CertKind::NoCandidateH: c.h = SubsetBits(order); break;
    default: break;
  }
  return c;
}

RunReport random_report() {
  RunReport r;
  for (std::size_t n = uniform(0, 4); n > 0; --n) r.command.push_back(random_word(8));
  r.seconds = uniform(0, 1000) / 8.0;
  for (std::size_t t = uniform(0, 3); t > 0; --t) {
    TargetReport tr;
    tr.order = uniform(0, 1) ? 16 : 100;
    tr.group = random_word(12);
    tr.h = random_subset(tr.order).indices();
    tr.status = static_cast<TargetStatus>(uniform(0, 2));
    for (std::size_t s = uniform(0, 4); s > 0; --s)
      tr.steps.push_back({random_word(8), uniform(0, 1) == 1, uniform(0, 100) / 4.0, random_word(20)});
    for (std::size_t c = uniform(0, 3); c > 0; --c) tr.certificates.push_back(random_cert(tr.order));
    for (std::size_t w = uniform(0, 2); w > 0; --w) tr.witnesses.push_back(random_subset(tr.order).indices());
    if (uniform(0, 1)) tr.details["nodes"] = uniform(0, 100000);
    r.targets.push_back(std::move(tr));
  }
  return r;
}

}  // namespace

TEST_CASE("base64 test vectors") {
  auto enc = [](std::string_view s) { return base64_encode(std::vector<std::uint8_t>(s.begin(), s.end())); };
  CHECK(enc("") == "");
  CHECK(enc("f") == "Zg==");
  CHECK(enc("fo") == "Zm8=");
  CHECK(enc("foo") == "Zm9v");
  CHECK(enc("foob") == "Zm9vYg==");
  CHECK(enc("fooba") == "Zm9vYmE=");
  CHECK(enc("foobar") == "Zm9vYmFy");
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint8_t> bytes(uniform(0, 40));
    for (auto& b : bytes) b = static_cast<std::uint8_t>(uniform(0, 255));
    CHECK(base64_decode(base64_encode(bytes)) == bytes);
  }
  CHECK_THROWS_AS(base64_decode("Zm9"), Error);
  CHECK_THROWS_AS(base64_decode("Zm9*"), Error);
}

TEST_CASE("report round trip") {
  for (int t = 0; t < 100; ++t) {
    const auto r = random_report();
    const auto j = report_to_json(r);
    CHECK(j.at("schema_version") == 1);
    const auto back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == r);
  }
  const RunReport empty;
  CHECK(report_from_json(report_to_json(empty)) == empty);
  CHECK(report_to_json(empty).at("targets").empty());
}

TEST_CASE("text rendering is deterministic") {
  const auto r = random_report();
  std::ostringstream a, b;
  write_text(a, r);
  write_text(b, r);
  CHECK(a.str() == b.str());
}

TEST_CASE("certificates survive serialisation and still revalidate") {
  const auto g = make_family(FamilySpec::make(Family::G14, 5));
  auto h = g.empty_subset();
  for (ElementIndex e = 0; e < 20; e += 2) h.insert(e);
  const auto cert = parity_obstruction(g, h);
  REQUIRE(cert);
  const auto back = cert_from_json(nlohmann::json::parse(cert_to_json(*cert).dump()));
  CHECK(back == *cert);
  CHECK_FALSE(revalidate(back, g));

  const auto g11 = make_family(FamilySpec::make(Family::G11, 5));
  auto hx = g11.empty_subset();
  for (ElementIndex i = 0; i < 5; ++i) {
    hx.insert(20 * i);
    hx.insert(20 * i + 2);
  }
  const auto lemma = lemma_test(g11, hx);
  REQUIRE(lemma);
  CHECK(cert_from_json(cert_to_json(*lemma)) == *lemma);
}

TEST_CASE("malformed certificate json") {
  CHECK_THROWS_AS(cert_from_json(nlohmann::json::object()), Error);
  auto j = cert_to_json(random_cert(16));
  j["kind"] = "Nope";
  CHECK_THROWS_AS(cert_from_json(j), Error);
  CHECK_THROWS_AS(report_from_json(nlohmann::json::array()), Error);
}
