#include "dedekind/serialize.hpp"

#include <stdexcept>

namespace dedekind {

using nlohmann::json;

json bigint_to_json(const BigInt& value) {
  if (const auto small = to_int64(value)) return *small;
  return to_string(value);
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return from_uint64(j.get<std::uint64_t>());
    return from_int64(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

namespace {

Method method_from_string(const std::string& name) {
  if (name == "naive") return Method::Naive;
  if (name == "bhk") return Method::Bhk;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::vector<BigInt> bigints_from_json(const json& array) {
  std::vector<BigInt> out;
  out.reserve(array.size());
  for (const auto& v : array) out.push_back(bigint_from_json(v));
  return out;
}

json bigints_to_json(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(bigint_to_json(v));
  return out;
}

}  // namespace

json to_json(const DedekindEvaluation& eval) {
  return json{{"m", bigint_to_json(eval.m)},
              {"n", bigint_to_json(eval.n)},
              {"value", eval.value.to_string()},
              {"residue", bigint_to_json(eval.fractional_residue)},
              {"method", std::string(to_string(eval.method))}};
}

DedekindEvaluation evaluation_from_json(const json& j) {
  return DedekindEvaluation{bigint_from_json(j.at("m")), bigint_from_json(j.at("n")),
                            parse_rational(j.at("value").get<std::string>()),
                            bigint_from_json(j.at("residue")),
                            method_from_string(j.at("method").get<std::string>())};
}

json to_json(const EquivalenceReport& report) {
  json groups = json::array();
  for (const auto& g : report.groups)
    groups.push_back(json{{"offset", bigint_to_json(g.offset)}, {"members", bigints_to_json(g.members)}});

  json out{{"n", bigint_to_json(report.n)},
           {"m1", bigint_to_json(report.m1)},
           {"base", report.base_fraction.to_string()},
           {"count", report.count},
           {"self_member", report.self_member},
           {"groups", std::move(groups)}};
  if (report.s_exponent) out["s"] = *report.s_exponent;
  return out;
}

EquivalenceReport report_from_json(const json& j) {
  EquivalenceReport report;
  report.n = bigint_from_json(j.at("n"));
  report.m1 = bigint_from_json(j.at("m1"));
  report.base_fraction = parse_rational(j.at("base").get<std::string>());
  report.count = j.at("count").get<std::size_t>();
  report.self_member = j.value("self_member", false);
  if (j.contains("s")) report.s_exponent = j.at("s").get<unsigned>();
  for (const auto& g : j.at("groups"))
    report.groups.push_back({bigint_from_json(g.at("offset")), bigints_from_json(g.at("members"))});
  return report;
}

json to_json(const std::vector<FractionalClass>& classes, const BigInt& n) {
  json out = json::array();
  for (const auto& c : classes) {
    out.push_back(json{{"residue", bigint_to_json(c.residue)},
                       {"fraction", Rational(c.residue, n).to_string()},
                       {"members", bigints_to_json(c.members)}});
  }
  return out;
}

}  // namespace dedekind
