#include "galring/actions/group.hpp"

#include <algorithm>
#include <deque>

#include "galring/error.hpp"

namespace galring {

PermutationGroup PermutationGroup::generate(std::size_t degree, const std::vector<Permutation>& generators,
                                            std::size_t cap) {
  PermutationGroup g;
  g.degree_ = degree;
  const Permutation id = identity_permutation(degree);
  g.elements_.push_back(id);
  g.index_.emplace(id, 0);
  for (const auto& s : generators) {
    if (s.size() != degree || !is_permutation(s)) fail(ErrorKind::Parameter, "group generator is not a permutation of degree " + std::to_string(degree));
  }
  std::deque<GroupElement> frontier{0};
  while (!frontier.empty()) {
    const GroupElement cur = frontier.front();
    frontier.pop_front();
    for (const auto& s : generators) {
      Permutation next = compose(g.elements_[cur], s);
      if (g.index_.count(next)) continue;
      if (g.elements_.size() >= cap) {
        fail(ErrorKind::Resource, "group closure exceeds the cap of " + std::to_string(cap) + " elements");
      }
      g.index_.emplace(next, g.elements_.size());
      frontier.push_back(g.elements_.size());
      g.elements_.push_back(std::move(next));
    }
  }
  for (const auto& s : generators) {
    const GroupElement idx = g.index_.at(s);
    if (idx != 0 && std::find(g.generators_.begin(), g.generators_.end(), idx) == g.generators_.end()) {
      g.generators_.push_back(idx);
    }
  }
  return g;
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) { return generate(degree, {}); }

PermutationGroup PermutationGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  PermutationGroup g;
  g.degree_ = degree;
  const Permutation id = identity_permutation(degree);
  g.elements_.push_back(id);
  g.index_.emplace(id, 0);
  for (auto& p : elements) {
    if (p.size() != degree || !is_permutation(p)) fail(ErrorKind::Parameter, "subgroup element is not a permutation");
    if (g.index_.count(p)) continue;
    g.index_.emplace(p, g.elements_.size());
    g.elements_.push_back(std::move(p));
  }
  for (const auto& a : g.elements_) {
    for (const auto& b : g.elements_) {
      if (!g.index_.count(compose(a, b))) fail(ErrorKind::Parameter, "element list is not closed under composition");
    }
  }
  for (GroupElement i = 1; i < g.elements_.size(); ++i) g.generators_.push_back(i);
  return g;
}

std::optional<GroupElement> PermutationGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupElement PermutationGroup::multiply(GroupElement a, GroupElement b) const {
  return index_.at(compose(elements_.at(a), elements_.at(b)));
}

GroupElement PermutationGroup::inverse(GroupElement a) const { return index_.at(galring::inverse(elements_.at(a))); }

}  // namespace galring
