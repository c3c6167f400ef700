#include "severi/record.hpp"

#include "severi/errors.hpp"

#include <algorithm>
#include <set>

namespace severi {

std::string_view to_string(Provenance p) { return p == Provenance::seed ? "seed" : "computed"; }

std::optional<Provenance> parse_provenance(std::string_view text) {
  if (text == "seed") return Provenance::seed;
  if (text == "computed") return Provenance::computed;
  return std::nullopt;
}

bool CountRecord::same_values(const CountRecord& other) const {
  return cls == other.cls && N == other.N && N2 == other.N2 && N3_next == other.N3_next;
}

std::optional<CountRecord> RecordMemo::find(const DivClass& cls) const {
  std::shared_lock lock(mutex_);
  auto it = records_.find(cls);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

CountRecord RecordMemo::insert(const CountRecord& rec) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = records_.emplace(rec.cls, rec);
  if (!inserted && !it->second.same_values(rec)) {
    auto opt = [](const std::optional<ExactInt>& v) { return v ? to_string(*v) : std::string("-"); };
    throw ConsistencyError("divergent values for " + format_class(rec.cls),
                           {{"stored N", to_string(it->second.N)},
                            {"new N", to_string(rec.N)},
                            {"stored N2", opt(it->second.N2)},
                            {"new N2", opt(rec.N2)},
                            {"stored N3_next", opt(it->second.N3_next)},
                            {"new N3_next", opt(rec.N3_next)}});
  }
  return it->second;
}

std::vector<CountRecord> RecordMemo::snapshot() const {
  std::shared_lock lock(mutex_);
  std::vector<CountRecord> out;
  out.reserve(records_.size());
  for (const auto& [key, rec] : records_) out.push_back(rec);
  return out;
}

std::size_t RecordMemo::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

std::vector<DivClass> evaluation_order(const SurfaceModel& s, const DivClass& d) {
  if (!is_countable(s, d)) throw DomainError(format_class(d) + " is not countable");
  if (s.id() == SurfaceId::P2) {
    std::vector<DivClass> out;
    for (std::int64_t k = 1; k <= d.coeffs[0]; ++k) out.push_back(plane_class(k));
    return out;
  }
  std::set<DivClass> seen{d};
  std::vector<DivClass> stack{d};
  auto visit = [&](const DivClass& c) {
    if (seen.insert(c).second) stack.push_back(c);
  };
  while (!stack.empty()) {
    DivClass cur = stack.back();
    stack.pop_back();
    for (const auto& [d1, d2] : split_pairs(s, cur)) {
      visit(d1);
      visit(d2);
    }
    DivClass rest = cur - s.E();
    for (const auto& [d1, d2] : split_pairs(s, rest)) {
      visit(d1);
      visit(d2);
    }
    if (s.id() == SurfaceId::F3) {
      for (const auto& t : split_triples(s, rest))
        for (const auto& c : t) visit(c);
    }
  }
  std::vector<DivClass> out(seen.begin(), seen.end());
  if (out.back() != d) throw DependencyError("dependency of " + format_class(d) + " is not smaller than it");
  return out;
}

void require_agreement(const DivClass& cls, const std::vector<Route>& routes, std::string_view quantity) {
  const Rational* first = nullptr;
  bool agree = true;
  for (const auto& r : routes) {
    if (r.quantity != quantity || r.diagnostic) continue;
    if (!first) {
      first = &r.value;
    } else if (r.value != *first) {
      agree = false;
    }
  }
  if (agree) return;
  std::vector<std::pair<std::string, std::string>> values;
  for (const auto& r : routes)
    if (r.quantity == quantity) values.emplace_back(r.route, to_string(r.value));
  throw ConsistencyError("routes disagree on " + std::string(quantity) + "(" + format_class(cls) + ")",
                         std::move(values));
}

}  // namespace severi
