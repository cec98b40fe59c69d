#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "dedekind/bigint.hpp"
#include "dedekind/dedekind_sum.hpp"
#include "dedekind/equivalence.hpp"

namespace dedekind {

/// Integers are JSON numbers when they fit in int64, decimal strings otherwise.
nlohmann::json bigint_to_json(const BigInt& value);
BigInt bigint_from_json(const nlohmann::json& j);

/// {m, n, value: "p/q", residue, method}
nlohmann::json to_json(const DedekindEvaluation& eval);
DedekindEvaluation evaluation_from_json(const nlohmann::json& j);

/// {n, m1, base: "p/q", s (optional), count, self_member, groups: [{offset, members}]}
nlohmann::json to_json(const EquivalenceReport& report);
EquivalenceReport report_from_json(const nlohmann::json& j);

/// [{residue, fraction: "p/q", members}]
nlohmann::json to_json(const std::vector<FractionalClass>& classes, const BigInt& n);

}  // namespace dedekind
