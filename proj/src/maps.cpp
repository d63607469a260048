#include "bispace/maps.hpp"

#include <stdexcept>

namespace bispace {

FiniteMap::FiniteMap(int source_size, int target_size, std::vector<int> assignment)
    : source_size_(FiniteCarrier(source_size).size()),
      target_size_(FiniteCarrier(target_size).size()),
      assignment_(std::move(assignment)) {
  if (assignment_.size() != static_cast<std::size_t>(source_size_)) {
    throw std::invalid_argument("map must assign every source point");
  }
  for (int v : assignment_) {
    if (v < 0 || v >= target_size_) throw std::invalid_argument("map sends a point outside the target carrier");
  }
}

std::string FiniteMap::describe() const {
  std::string out = "[";
  for (std::size_t k = 0; k < assignment_.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(assignment_[k]);
  }
  return out + "]";
}

std::vector<FiniteMap> all_maps(int source_size, int target_size) {
  FiniteCarrier src(source_size);
  FiniteCarrier tgt(target_size);
  std::vector<FiniteMap> out;
  std::vector<int> digits(static_cast<std::size_t>(src.size()), 0);
  while (true) {
    out.emplace_back(src.size(), tgt.size(), digits);
    int k = src.size() - 1;
    while (k >= 0 && digits[static_cast<std::size_t>(k)] == tgt.size() - 1) {
      digits[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++digits[static_cast<std::size_t>(k)];
  }
  return out;
}

AtomMap::AtomMap(std::shared_ptr<const AtomUniverse> source, std::shared_ptr<const AtomUniverse> target,
                 std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (!source_ || !target_) throw std::invalid_argument("atom map needs source and target universes");
  if (assignment_.size() != static_cast<std::size_t>(source_->size())) {
    throw std::invalid_argument("atom map must assign every source atom");
  }
  for (std::size_t k = 0; k < assignment_.size(); ++k) {
    const int v = assignment_[k];
    if (v < 0 || v >= target_->size()) throw std::invalid_argument("atom map sends an atom outside the target");
    if (target_->atom(v).cardinality != Cardinality::kFiniteSingleton) {
      throw std::invalid_argument("atom map must send '" + source_->atom(static_cast<int>(k)).id +
                                  "' to a singleton atom, not '" + target_->atom(v).id + "'");
    }
  }
}

AtomMap AtomMap::from_ids(std::shared_ptr<const AtomUniverse> source, std::shared_ptr<const AtomUniverse> target,
                          std::span<const std::pair<std::string, std::string>> pairs) {
  std::vector<int> assignment(static_cast<std::size_t>(source->size()), -1);
  for (const auto& [from, to] : pairs) {
    auto a = source->index_of(from);
    auto b = target->index_of(to);
    if (!a || !b) throw std::invalid_argument("atom map refers to unknown atom '" + (a ? to : from) + "'");
    assignment[static_cast<std::size_t>(*a)] = *b;
  }
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    if (assignment[k] < 0) {
      throw std::invalid_argument("atom map leaves '" + source->atom(static_cast<int>(k)).id + "' unassigned");
    }
  }
  return AtomMap(std::move(source), std::move(target), std::move(assignment));
}

SymSet AtomMap::image(SymSet s) const {
  SymSet out;
  for (int k : s.elements()) out |= SymSet::singleton(assignment_[static_cast<std::size_t>(k)]);
  return out;
}

SymSet AtomMap::preimage(SymSet s) const {
  SymSet out;
  for (std::size_t k = 0; k < assignment_.size(); ++k) {
    if (s.contains(assignment_[k])) out |= SymSet::singleton(static_cast<int>(k));
  }
  return out;
}

std::string AtomMap::describe() const {
  std::string out = "{";
  for (std::size_t k = 0; k < assignment_.size(); ++k) {
    if (k) out += ", ";
    out += source_->atom(static_cast<int>(k)).id + " -> " + target_->atom(assignment_[k]).id;
  }
  return out + "}";
}

FiniteMap restrict_map(const FiniteMap& f, PointSet a) {
  if (a.empty() || !a.subset_of(f.source_full())) {
    throw std::invalid_argument("restriction needs a nonempty subset of the source");
  }
  std::vector<int> assignment;
  for (int p : a.elements()) assignment.push_back(f(p));
  return FiniteMap(a.size(), f.target_size(), std::move(assignment));
}

AtomMap restrict_map(const AtomMap& f, SymSet a) {
  if (a.empty() || !a.subset_of(f.source_full())) {
    throw std::invalid_argument("restriction needs a nonempty atom union of the source");
  }
  std::vector<Atom> atoms;
  std::vector<int> assignment;
  for (int k : a.elements()) {
    atoms.push_back(f.source().atom(k));
    assignment.push_back(f.assignment()[static_cast<std::size_t>(k)]);
  }
  auto target = std::make_shared<const AtomUniverse>(f.target());
  return AtomMap(std::make_shared<const AtomUniverse>(std::move(atoms)), std::move(target), std::move(assignment));
}

bool satisfies_condition_C(const AtomMap& f, IndexPair ij, const SymbolicBispace& x, const SymbolicBispace& y) {
  if (f.image(f.source_full()) != y.full()) return false;
  const SchematicSpace& target = y.space(ij.i());
  for (Mask m : canonical_masks(y.unit_count())) {
    const SymSet u(m);
    if (!target.is_open(u)) continue;
    if (f.image(x.closure(ij.j(), f.preimage(u))) != u) return false;
  }
  return true;
}

FiniteDirectedSet FiniteDirectedSet::make(std::vector<std::vector<bool>> leq) {
  const std::size_t m = leq.size();
  if (m == 0) throw std::invalid_argument("directed set must be nonempty");
  for (const auto& row : leq) {
    if (row.size() != m) throw std::invalid_argument("order relation must be square");
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (!leq[a][a]) throw std::invalid_argument("order relation is not reflexive");
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        if (leq[a][b] && leq[b][c] && !leq[a][c]) throw std::invalid_argument("order relation is not transitive");
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      bool bounded = false;
      for (std::size_t c = 0; c < m && !bounded; ++c) bounded = leq[a][c] && leq[b][c];
      if (!bounded) throw std::invalid_argument("pair without an upper bound: set is not directed");
    }
  }
  return FiniteDirectedSet(std::move(leq));
}

std::string FiniteDirectedSet::describe() const {
  std::string out = "{";
  bool first = true;
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (a == b || !leq(a, b)) continue;
      if (!first) out += ", ";
      first = false;
      out += std::to_string(a) + "<=" + std::to_string(b);
    }
  }
  return out + "} on " + std::to_string(size());
}

std::vector<FiniteDirectedSet> enumerate_directed_sets(int max_size) {
  std::vector<FiniteDirectedSet> out;
  for (int m = 1; m <= max_size; ++m) {
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b) cells.emplace_back(a, b);
      }
    }
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << cells.size()); ++pick) {
      std::vector<std::vector<bool>> leq(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
      for (int a = 0; a < m; ++a) leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if ((pick >> k) & 1U) {
          leq[static_cast<std::size_t>(cells[k].first)][static_cast<std::size_t>(cells[k].second)] = true;
        }
      }
      try {
        out.push_back(FiniteDirectedSet::make(std::move(leq)));
      } catch (const std::invalid_argument&) {
      }
    }
  }
  return out;
}

Net make_net(FiniteDirectedSet domain, std::vector<int> values, int carrier_size) {
  if (values.size() != static_cast<std::size_t>(domain.size())) {
    throw std::invalid_argument("net must assign a point to every index");
  }
  for (int v : values) {
    if (v < 0 || v >= carrier_size) throw std::invalid_argument("net value outside the carrier");
  }
  return Net{std::move(domain), std::move(values)};
}

Net image_net(const FiniteMap& f, const Net& net) {
  std::vector<int> values;
  values.reserve(net.values.size());
  for (int v : net.values) values.push_back(f(v));
  return Net{net.domain, std::move(values)};
}

bool net_converges(const FiniteSpace& space, const Net& net, int x) {
  const int m = net.domain.size();
  for (PointSet u : space.opens()) {
    if (!u.contains(x)) continue;
    bool eventually = false;
    for (int start = 0; start < m && !eventually; ++start) {
      eventually = true;
      for (int a = 0; a < m; ++a) {
        if (net.domain.leq(start, a) && !u.contains(net.values[static_cast<std::size_t>(a)])) {
          eventually = false;
          break;
        }
      }
    }
    if (!eventually) return false;
  }
  return true;
}

}  // namespace bispace
