#include "dedekind_cli/reference_table.hpp"

#include <map>
#include <sstream>

namespace dedekind::cli {
namespace {

std::string join(const std::vector<BigInt>& values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << to_string(values[i]);
  os << '}';
  return os.str();
}

}  // namespace

const ReferenceTable& published_table() {
  // S(m2/15015) = 710/3003 + offset for the 16 units in the class of 17.
  static const ReferenceTable table{
      BigInt(15015),
      BigInt(17),
      Rational(BigInt(710), BigInt(3003)),
      4,
      {
          {BigInt(880), {17, 3533}},
          {BigInt(40), {6023, 12542}},
          {BigInt(16), {992, 2558, 6452, 12113}},
          {BigInt(-8), {563, 2987, 6107, 6998, 11567, 12458}},
          {BigInt(-32), {8993, 9572}},
      }};
  return table;
}

std::vector<std::string> diff_against(const EquivalenceReport& report, const ReferenceTable& table) {
  std::vector<std::string> diff;
  if (report.n != table.n)
    diff.push_back("n: expected " + to_string(table.n) + ", got " + to_string(report.n));
  if (report.m1 != table.m1)
    diff.push_back("m1: expected " + to_string(table.m1) + ", got " + to_string(report.m1));
  if (report.base_fraction != table.base)
    diff.push_back("base: expected " + table.base.to_string() + ", got " +
                   report.base_fraction.to_string());
  if (report.s_exponent != table.s_exponent)
    diff.push_back("s: expected " + std::to_string(table.s_exponent) + ", got " +
                   (report.s_exponent ? std::to_string(*report.s_exponent) : "none"));

  std::size_t expected_count = 0;
  for (const auto& g : table.groups) expected_count += g.members.size();
  if (report.count != expected_count)
    diff.push_back("count: expected " + std::to_string(expected_count) + ", got " +
                   std::to_string(report.count));

  std::map<BigInt, std::vector<BigInt>> got, want;
  for (const auto& g : report.groups) got[g.offset] = g.members;
  for (const auto& g : table.groups) want[g.offset] = g.members;
  for (const auto& [offset, members] : want) {
    auto it = got.find(offset);
    if (it == got.end())
      diff.push_back("offset " + to_string(offset) + ": missing, expected " + join(members));
    else if (it->second != members)
      diff.push_back("offset " + to_string(offset) + ": expected " + join(members) + ", got " +
                     join(it->second));
  }
  for (const auto& [offset, members] : got)
    if (!want.contains(offset))
      diff.push_back("offset " + to_string(offset) + ": unexpected group " + join(members));

  std::vector<OffsetGroup> order;
  for (const auto& g : report.groups) order.push_back({g.offset, {}});
  std::vector<OffsetGroup> want_order;
  for (const auto& g : table.groups) want_order.push_back({g.offset, {}});
  if (diff.empty() && order != want_order) diff.push_back("groups are not in descending offset order");
  return diff;
}

}  // namespace dedekind::cli
