#ifndef BASISKIT_FINITE_GROUP_HPP
#define BASISKIT_FINITE_GROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "basiskit/errors.hpp"
#include "basiskit/group.hpp"

namespace basiskit {

using CayleyTable = std::vector<std::vector<std::size_t>>;

inline constexpr std::size_t kMaxFiniteOrder = 256;

struct CayleyViolation {
  ErrorKind kind;
  std::string detail;
  std::vector<std::size_t> witness;
};

class FiniteGroup;

struct CayleyValidation {
  std::vector<CayleyViolation> violations;
  std::optional<std::size_t> identity;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

// Checks every group invariant of a Cayley table (table[a][b] = ab) and
// reports each violated one with its first witness. Associativity is checked
// over all n^3 triples.
inline CayleyValidation check_cayley_table(const CayleyTable& table,
                                           std::optional<std::size_t> declared_identity = std::nullopt) {
  CayleyValidation report;
  const std::size_t n = table.size();
  if (n == 0) {
    report.violations.push_back({ErrorKind::NoIdentity, "empty table", {}});
    return report;
  }
  if (n > kMaxFiniteOrder) {
    report.violations.push_back(
        {ErrorKind::EnumerationCapExceeded, "order " + std::to_string(n) + " exceeds 256", {n}});
    return report;
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      report.violations.push_back({ErrorKind::DimensionMismatch,
                                   "row " + std::to_string(r) + " has " + std::to_string(table[r].size()) +
                                       " entries, expected " + std::to_string(n),
                                   {r}});
      return report;
    }
  }
  bool closed = true;
  for (std::size_t r = 0; r < n && closed; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (table[r][c] >= n) {
        report.violations.push_back({ErrorKind::NotClosed,
                                     "entry [" + std::to_string(r) + "][" + std::to_string(c) + "] = " +
                                         std::to_string(table[r][c]) + " is out of range",
                                     {r, c}});
        closed = false;
        break;
      }
    }
  }
  if (!closed) return report;

  for (std::size_t e = 0; e < n; ++e) {
    bool works = true;
    for (std::size_t a = 0; a < n && works; ++a) works = table[e][a] == a && table[a][e] == a;
    if (works) {
      report.identity = e;
      break;
    }
  }
  if (!report.identity) {
    report.violations.push_back({ErrorKind::NoIdentity, "no element acts as a two-sided identity", {}});
  } else if (declared_identity && *declared_identity != *report.identity) {
    report.violations.push_back({ErrorKind::NoIdentity,
                                 "declared identity " + std::to_string(*declared_identity) +
                                     " is not the identity (found " + std::to_string(*report.identity) + ")",
                                 {*declared_identity}});
  }

  auto first_repeat = [n](auto&& at) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::vector<std::size_t> seen_at(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t v = at(k);
      if (seen_at[v] != n) return std::make_pair(k, v);
      seen_at[v] = k;
    }
    return std::nullopt;
  };
  bool latin = true;
  for (std::size_t r = 0; r < n && latin; ++r) {
    if (auto rep = first_repeat([&](std::size_t k) { return table[r][k]; })) {
      report.violations.push_back({ErrorKind::NotInvertible,
                                   "row " + std::to_string(r) + " repeats " + std::to_string(rep->second),
                                   {r, rep->first}});
      latin = false;
    }
  }
  for (std::size_t c = 0; c < n && latin; ++c) {
    if (auto rep = first_repeat([&](std::size_t k) { return table[k][c]; })) {
      report.violations.push_back({ErrorKind::NotInvertible,
                                   "column " + std::to_string(c) + " repeats " + std::to_string(rep->second),
                                   {c, rep->first}});
      latin = false;
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = table[a][b];
      for (std::size_t c = 0; c < n; ++c) {
        if (table[ab][c] != table[a][table[b][c]]) {
          report.violations.push_back({ErrorKind::NotAssociative,
                                       "(ab)c != a(bc) at a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                                           ", c=" + std::to_string(c),
                                       {a, b, c}});
          return report;
        }
      }
    }
  }
  return report;
}

/// Finite group given by a validated Cayley table.
class FiniteGroup {
 public:
  struct Element {
    GroupId owner = 0;
    std::size_t index = 0;

    friend bool operator==(const Element&, const Element&) = default;
  };
  using element_type = Element;

  static FiniteGroup from_table(CayleyTable table, std::vector<std::string> names = {},
                                std::optional<std::size_t> declared_identity = std::nullopt) {
    const CayleyValidation report = check_cayley_table(table, declared_identity);
    if (!report.ok()) {
      const CayleyViolation& first = report.violations.front();
      throw Error(first.kind, first.detail);
    }
    if (!names.empty() && names.size() != table.size()) {
      throw Error(ErrorKind::DimensionMismatch, "names list does not match group order");
    }
    return FiniteGroup(std::move(table), *report.identity, std::move(names));
  }

  [[nodiscard]] GroupId id() const noexcept { return id_; }
  [[nodiscard]] std::size_t order() const noexcept { return table_.size(); }
  [[nodiscard]] const CayleyTable& table() const noexcept { return table_; }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] std::size_t identity_index() const noexcept { return identity_; }

  [[nodiscard]] Element identity() const { return {id_, identity_}; }

  [[nodiscard]] Element element(std::size_t index) const {
    if (index >= order()) throw Error(ErrorKind::CarrierMismatch, "element index out of range");
    return {id_, index};
  }

  // Resolves a label (or a decimal index) to an element.
  [[nodiscard]] Element element(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return {id_, i};
    }
    try {
      std::size_t pos = 0;
      const auto idx = std::stoul(name, &pos);
      if (pos == name.size()) return element(idx);
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorKind::ParseError, "unknown group element '" + name + "'");
  }

  [[nodiscard]] std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(order());
    for (std::size_t i = 0; i < order(); ++i) out.push_back({id_, i});
    return out;
  }

  [[nodiscard]] Element compose(const Element& a, const Element& b) const {
    require_same_group(a.owner, id_, "compose");
    require_same_group(b.owner, id_, "compose");
    return {id_, table_[a.index][b.index]};
  }

  [[nodiscard]] Element inverse(const Element& a) const {
    require_same_group(a.owner, id_, "inverse");
    return {id_, inverse_[a.index]};
  }

  [[nodiscard]] bool equal(const Element& a, const Element& b) const { return a.index == b.index; }

  [[nodiscard]] std::string label(const Element& a) const {
    return names_.empty() ? std::to_string(a.index) : names_[a.index];
  }

  [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  [[nodiscard]] std::size_t inv(std::size_t a) const { return inverse_[a]; }

  [[nodiscard]] bool abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = a + 1; b < order(); ++b)
        if (table_[a][b] != table_[b][a]) return false;
    return true;
  }

 private:
  FiniteGroup(CayleyTable table, std::size_t identity, std::vector<std::string> names)
      : id_(next_group_id()), table_(std::move(table)), identity_(identity), names_(std::move(names)) {
    inverse_.assign(table_.size(), 0);
    for (std::size_t a = 0; a < table_.size(); ++a)
      for (std::size_t b = 0; b < table_.size(); ++b)
        if (table_[a][b] == identity_) inverse_[a] = b;
  }

  GroupId id_;
  CayleyTable table_;
  std::size_t identity_;
  std::vector<std::string> names_;
  std::vector<std::size_t> inverse_;
};

static_assert(EnumerableGroup<FiniteGroup>);

// Builds the Cayley table of a permutation group given as image arrays,
// composing as functions: (p q)(x) = p(q(x)). The list must be closed.
inline FiniteGroup group_from_permutations(const std::vector<std::vector<std::size_t>>& perms,
                                           std::vector<std::string> names = {}) {
  const std::size_t n = perms.size();
  CayleyTable table(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> ab(perms[b].size());
      for (std::size_t x = 0; x < ab.size(); ++x) ab[x] = perms[a][perms[b][x]];
      std::size_t found = n;
      for (std::size_t k = 0; k < n; ++k) {
        if (perms[k] == ab) {
          found = k;
          break;
        }
      }
      if (found == n) throw Error(ErrorKind::NotClosed, "permutation list is not closed under composition");
      table[a][b] = found;
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

}  // namespace basiskit

#endif  // BASISKIT_FINITE_GROUP_HPP
