#include "bispace/point_set.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bispace {

namespace {

std::array<std::vector<Mask>, kMaxAlgebraUnits + 1> build_canonical_tables() {
  std::array<std::vector<Mask>, kMaxAlgebraUnits + 1> tables;
  for (int n = 0; n <= kMaxAlgebraUnits; ++n) {
    auto& t = tables[n];
    t.resize(std::size_t{1} << n);
    for (Mask m = 0; m < t.size(); ++m) t[m] = m;
    std::sort(t.begin(), t.end(), [](Mask a, Mask b) { return canonical_less(a, b); });
  }
  return tables;
}

}  // namespace

std::span<const Mask> canonical_masks(int n) {
  static const auto tables = build_canonical_tables();
  if (n < 0 || n > kMaxAlgebraUnits) throw std::out_of_range("canonical_masks: unit count out of range");
  return tables[n];
}

std::string format_indices(Mask m) {
  std::string out = "{";
  bool first = true;
  for (; m != 0; m &= m - 1) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(std::countr_zero(m));
  }
  out += "}";
  return out;
}

}  // namespace bispace
