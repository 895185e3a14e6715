#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <boost/rational.hpp>

#include "glc/graph.hpp"

namespace glc {

using Rational = boost::rational<std::int64_t>;

namespace family {

/// Every component has at most `k` vertices.
struct Clustered {
  std::size_t k = 1;
  friend bool operator==(const Clustered&, const Clustered&) = default;
};
/// Maximum degree at most `d`; d = 0 is proper colouring.
struct MaxDegree {
  std::size_t d = 0;
  friend bool operator==(const MaxDegree&, const MaxDegree&) = default;
};
struct Forest {
  friend bool operator==(const Forest&, const Forest&) = default;
};
/// Forest whose components each have at most one vertex of degree >= 2.
struct StarForest {
  friend bool operator==(const StarForest&, const StarForest&) = default;
};
/// Forest of paths: acyclic with maximum degree at most 2.
struct LinearForest {
  friend bool operator==(const LinearForest&, const LinearForest&) = default;
};
/// Colouring number (degeneracy + 1) at most `k`.
struct ColouringNumber {
  std::size_t k = 1;
  friend bool operator==(const ColouringNumber&, const ColouringNumber&) = default;
};
/// Maximum average degree at most `threshold`.
struct MaxAvgDegree {
  Rational threshold{0};
  friend bool operator==(const MaxAvgDegree&, const MaxAvgDegree&) = default;
};

}  // namespace family

/// A hereditary graph family: the allowed shape of one colour class.
using FamilySpec = std::variant<family::Clustered, family::MaxDegree, family::Forest,
                                family::StarForest, family::LinearForest,
                                family::ColouringNumber, family::MaxAvgDegree>;

/// Throws std::invalid_argument when a parameter is out of range
/// (k = 0 for cluster/colnum, negative mad threshold).
void validate(const FamilySpec& f);

/// Grammar: `cluster:<k>`, `maxdeg:<d>`, `forest`, `starforest`, `linforest`,
/// `colnum:<k>`, `mad:<p>/<q>` or `mad:<p>`.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& f);

/// True iff `g` belongs to the family. The empty graph belongs to every family.
bool member(const Graph& g, const FamilySpec& f);

bool is_forest(const Graph& g);

/// Exact maximum average degree, max over nonempty S of 2|E(S)|/|S|.
/// Throws std::invalid_argument on the empty graph.
Rational mad(const Graph& g);

/// Subset enumeration; used for graphs up to kMadExhaustiveLimit vertices.
Rational mad_exhaustive(const Graph& g);
/// Dinkelbach iteration over min-cut densest-subgraph subproblems.
Rational mad_flow(const Graph& g);

/// True iff some nonempty S has 2|E(S)| > t|S|, decided by one min cut.
bool density_exceeds(const Graph& g, const Rational& t);

inline constexpr std::size_t kMadExhaustiveLimit = 20;

}  // namespace glc
