#ifndef BASISKIT_GROUP_HPP
#define BASISKIT_GROUP_HPP

#include <atomic>
#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "basiskit/errors.hpp"

namespace basiskit {

// Identity of a constructed group. Copies of a group share the id, so elements
// stay composable with them; independently built groups never mix.
using GroupId = std::uint64_t;

inline GroupId next_group_id() {
  static std::atomic<GroupId> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

inline void require_same_group(GroupId a, GroupId b, const char* op) {
  if (a != b) throw Error(ErrorKind::MixedGroups, std::string(op) + ": elements belong to different groups");
}

template <class G>
concept Group = requires(const G& g, const typename G::element_type& a) {
  typename G::element_type;
  { g.id() } -> std::same_as<GroupId>;
  { g.identity() } -> std::same_as<typename G::element_type>;
  { g.compose(a, a) } -> std::same_as<typename G::element_type>;
  { g.inverse(a) } -> std::same_as<typename G::element_type>;
  { g.equal(a, a) } -> std::same_as<bool>;
  { g.label(a) } -> std::convertible_to<std::string>;
};

/// A group whose elements can be listed (finite table or stored matrix list).
template <class G>
concept EnumerableGroup = Group<G> && requires(const G& g) {
  { g.elements() } -> std::convertible_to<std::vector<typename G::element_type>>;
};

}  // namespace basiskit

#endif  // BASISKIT_GROUP_HPP
