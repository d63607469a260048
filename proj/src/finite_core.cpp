#include "bispace/finite_core.hpp"

#include <algorithm>

namespace bispace {

FiniteCarrier::FiniteCarrier(int n) : n_(n) {
  if (n < 1 || n > kMaxAlgebraUnits) {
    throw std::invalid_argument("carrier size must be in [1, " + std::to_string(kMaxAlgebraUnits) +
                                "], got " + std::to_string(n));
  }
}

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::kPointOutOfRange: return "point-out-of-range";
    case Axiom::kMissingEmpty: return "missing-empty-set";
    case Axiom::kMissingWhole: return "missing-whole-set";
    case Axiom::kUnionClosure: return "union-closure";
    case Axiom::kIntersectionClosure: return "intersection-closure";
  }
  return "unknown";
}

FiniteSpace::FiniteSpace(FiniteCarrier carrier, std::vector<PointSet> opens)
    : carrier_(carrier), opens_(std::move(opens)) {
  const std::size_t universe = std::size_t{1} << carrier_.size();
  open_bitmap_.assign((universe + 63) / 64, 0);
  for (PointSet u : opens_) open_bitmap_[u.bits() >> 6] |= Mask{1} << (u.bits() & 63);
}

FiniteSpace FiniteSpace::validate(FiniteCarrier carrier, std::vector<PointSet> family) {
  const PointSet whole = carrier.points();
  for (PointSet s : family) {
    if (!s.subset_of(whole)) {
      throw AxiomViolation(Axiom::kPointOutOfRange, s, s,
                           "set " + format_indices(s.bits()) + " has points outside the carrier of size " +
                               std::to_string(carrier.size()));
    }
  }
  std::sort(family.begin(), family.end(), [](PointSet a, PointSet b) { return canonical_less(a, b); });
  family.erase(std::unique(family.begin(), family.end()), family.end());

  FiniteSpace candidate(carrier, std::move(family));
  if (!candidate.is_open(PointSet{})) {
    throw AxiomViolation(Axiom::kMissingEmpty, PointSet{}, PointSet{}, "family does not contain the empty set");
  }
  if (!candidate.is_open(whole)) {
    throw AxiomViolation(Axiom::kMissingWhole, whole, whole, "family does not contain the whole carrier");
  }
  const auto& opens = candidate.opens_;
  for (std::size_t a = 0; a < opens.size(); ++a) {
    for (std::size_t b = a + 1; b < opens.size(); ++b) {
      if (!candidate.is_open(opens[a] | opens[b])) {
        throw AxiomViolation(Axiom::kUnionClosure, opens[a], opens[b],
                             "family is not closed under union: " + format_indices(opens[a].bits()) + " | " +
                                 format_indices(opens[b].bits()) + " = " +
                                 format_indices((opens[a] | opens[b]).bits()) + " is missing");
      }
    }
  }
  for (std::size_t a = 0; a < opens.size(); ++a) {
    for (std::size_t b = a + 1; b < opens.size(); ++b) {
      if (!candidate.is_open(opens[a] & opens[b])) {
        throw AxiomViolation(Axiom::kIntersectionClosure, opens[a], opens[b],
                             "family is not closed under intersection: " + format_indices(opens[a].bits()) +
                                 " & " + format_indices(opens[b].bits()) + " = " +
                                 format_indices((opens[a] & opens[b]).bits()) + " is missing");
      }
    }
  }
  return candidate;
}

FiniteSpace FiniteSpace::discrete(int n) {
  FiniteCarrier carrier(n);
  std::vector<PointSet> all;
  for (Mask m : canonical_masks(n)) all.emplace_back(m);
  return FiniteSpace(carrier, std::move(all));
}

FiniteSpace FiniteSpace::indiscrete(int n) {
  FiniteCarrier carrier(n);
  return FiniteSpace(carrier, {PointSet{}, carrier.points()});
}

PointSet FiniteSpace::closure(PointSet s) const {
  // Complement of every open set that misses s.
  PointSet removed;
  for (PointSet u : opens_) {
    if (!u.intersects(s)) removed |= u;
  }
  return full() - removed;
}

PointSet FiniteSpace::interior(PointSet s) const {
  PointSet out;
  for (PointSet u : opens_) {
    if (u.subset_of(s)) out |= u;
  }
  return out;
}

PointSet FiniteSpace::limit_points(PointSet s) const {
  PointSet out;
  for (int x = 0; x < unit_count(); ++x) {
    const PointSet others = s - PointSet::singleton(x);
    bool limit = true;
    for (PointSet u : opens_) {
      if (u.contains(x) && !u.intersects(others)) {
        limit = false;
        break;
      }
    }
    if (limit) out |= PointSet::singleton(x);
  }
  return out;
}

std::optional<PointSet> FiniteSpace::open_between(PointSet a, PointSet b) const {
  if (!a.subset_of(b)) throw std::invalid_argument("open_between: lower set is not contained in upper set");
  for (PointSet u : opens_) {
    if (a.subset_of(u) && u.subset_of(b)) return u;
  }
  return std::nullopt;
}

std::string FiniteSpace::describe() const {
  std::string out = "[";
  for (std::size_t k = 0; k < opens_.size(); ++k) {
    if (k) out += ", ";
    out += format_indices(opens_[k].bits());
  }
  return out + "]";
}

std::vector<FiniteSpace> enumerate_spaces(int n) {
  if (n < 1 || n > kMaxEnumeratedCarrier) {
    throw std::out_of_range("enumerate_spaces: n must be in [1, 4], got " + std::to_string(n));
  }
  const Mask whole = PointSet::full(n).bits();
  std::vector<Mask> middle;
  for (Mask m = 1; m < whole; ++m) middle.push_back(m);

  // A family is a membership mask over the 2^n subsets.
  const std::uint32_t base = (std::uint32_t{1} << 0) | (std::uint32_t{1} << whole);
  std::vector<std::vector<PointSet>> families;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << middle.size()); ++pick) {
    std::uint32_t fam = base;
    for (std::size_t k = 0; k < middle.size(); ++k) {
      if ((pick >> k) & 1U) fam |= std::uint32_t{1} << middle[k];
    }
    bool closed = true;
    for (Mask a = 0; a <= whole && closed; ++a) {
      if (!((fam >> a) & 1U)) continue;
      for (Mask b = a + 1; b <= whole; ++b) {
        if (!((fam >> b) & 1U)) continue;
        if (!((fam >> (a | b)) & 1U) || !((fam >> (a & b)) & 1U)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<PointSet> opens;
    for (Mask m : canonical_masks(n)) {
      if ((fam >> m) & 1U) opens.emplace_back(m);
    }
    families.push_back(std::move(opens));
  }

  std::sort(families.begin(), families.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](PointSet x, PointSet y) { return canonical_less(x, y); });
  });

  std::vector<FiniteSpace> spaces;
  spaces.reserve(families.size());
  for (auto& f : families) spaces.push_back(FiniteSpace::validate(FiniteCarrier(n), std::move(f)));
  return spaces;
}

bool semiopen_witness_exists(const FiniteSpace& ti, const FiniteSpace& tj, PointSet a) {
  for (PointSet o : ti.opens()) {
    if (o.subset_of(a) && a.subset_of(tj.closure(o))) return true;
  }
  return false;
}

bool interior_covers_closed_supersets(const FiniteSpace& ti, const FiniteSpace& tj, PointSet a) {
  for (PointSet v : tj.opens()) {
    const PointSet g = tj.full() - v;
    if (a.subset_of(g) && !a.subset_of(ti.interior(g))) return false;
  }
  return true;
}

FiniteSpace trace(const FiniteSpace& space, PointSet y) {
  if (y.empty() || !y.subset_of(space.full())) {
    throw std::invalid_argument("subspace must be a nonempty subset of the carrier");
  }
  std::vector<PointSet> opens;
  for (PointSet u : space.opens()) opens.emplace_back(compress((u & y).bits(), y.bits()));
  return FiniteSpace::validate(FiniteCarrier(y.size()), std::move(opens));
}

std::string format_set(const FiniteSpace&, PointSet s) { return format_indices(s.bits()); }

}  // namespace bispace
