#pragma once

#include <string>
#include <vector>

#include "galring/analysis/expression.hpp"

namespace galring {

struct Relation {
  std::string name;
  Expression expression;  // holds iff it evaluates to zero
};

using RelationSet = std::vector<Relation>;

// Parses "name: expression" pairs.
Relation make_relation(std::string name, std::string_view expression);

// Defining relations of gl_n in the generators E{k}{l} (Chevalley
// generators and Cartan part) including the Serre relations.
RelationSet gl_relations(std::size_t n);

// One check per relation; unresolved names throw Error{Definition} before
// anything is evaluated.
Report verify_relations(const AlgebraSpec& spec, const RelationSet& relations);

// Candidates commuting with every named generator of the spec.
std::vector<SkewElement> commutant_filter(const AlgebraSpec& spec, const std::vector<SkewElement>& candidates);

inline constexpr std::size_t kDefaultStandardIdentityCap = 6;

// s_N(a_1..a_N) = sum over S_N of sgn(sigma) a_sigma(1) ... a_sigma(N).
// Throws Error{Resource} if N exceeds the cap.
SkewElement standard_identity(const std::vector<SkewElement>& elements,
                              std::size_t cap = kDefaultStandardIdentityCap);

}  // namespace galring
