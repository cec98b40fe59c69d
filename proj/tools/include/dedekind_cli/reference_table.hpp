#pragma once

#include <string>
#include <vector>

#include <dedekind/equivalence.hpp>

namespace dedekind::cli {

struct ReferenceTable {
  BigInt n;
  BigInt m1;
  Rational base;
  unsigned s_exponent;
  std::vector<OffsetGroup> groups;  // descending offset
};

/// The published table for the class of 17 mod 15015 = 3 * 5 * 7 * 11 * 13,
/// embedded verbatim so the golden check needs no files or network.
const ReferenceTable& published_table();

/// One line per discrepancy; empty when `report` reproduces `table` exactly.
std::vector<std::string> diff_against(const EquivalenceReport& report, const ReferenceTable& table);

}  // namespace dedekind::cli
