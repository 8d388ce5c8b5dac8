#pragma once

// The Bass-Serre tree of BS(n,m) = HNN(Z, nZ, n -> m): vertices BS/<a>, positive edges BS/<a^n>.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bsrig/group.hpp"

namespace bsrig {

/// Vertex g<a>, stored by its tail-free representative.
struct TreeVertex {
  NormalForm coset_rep;
  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend auto operator<=>(const TreeVertex& x, const TreeVertex& y) {
    return x.coset_rep <=> y.coset_rep;
  }
};

/// Positive edge g<a^n>, stored with tail reduced into [0, |n|).
struct TreeEdge {
  NormalForm coset_rep;
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
  friend auto operator<=>(const TreeEdge& x, const TreeEdge& y) {
    return x.coset_rep <=> y.coset_rep;
  }
};

TreeVertex vertex_of(const NormalForm& g);
TreeEdge edge_of(const NormalForm& g, const BsPresentation& group);
TreeVertex source(const TreeEdge& e);
TreeVertex range(const TreeEdge& e, const BsPresentation& group);

/// h^-1 g h in <a> for h the vertex representative.
bool fixes_vertex(const NormalForm& g, const TreeVertex& v, const BsPresentation& group);

/// Tree distance between vertices.
std::size_t distance(const TreeVertex& u, const TreeVertex& v, const BsPresentation& group);

/// The |n| + |m| neighbours of v: g a^i b^-1 <a> (i < |n|) and g a^j b <a> (j < |m|).
std::vector<TreeVertex> neighbours(const TreeVertex& v, const BsPresentation& group);

struct Elliptic {
  NormalForm witness;  // witness^-1 g witness lies in <a>
};
struct Hyperbolic {
  std::size_t translation_length;
};
using Classification = std::variant<Elliptic, Hyperbolic>;

Classification classify(const NormalForm& g, const BsPresentation& group);
bool is_elliptic(const NormalForm& g, const BsPresentation& group);

/// classify(g) hyperbolic implies classify(g^z) hyperbolic. Always expected to hold.
bool power_classify_consistency(const NormalForm& g, const BigInt& z,
                                const BsPresentation& group);

struct CommonFixedVertex {
  TreeVertex vertex;
  NormalForm g0;  // elements subset of g0 <a> g0^-1
};

/// The common fixed vertex nearest to the fixed vertex of the first element, found by
/// successive projections onto fixed subtrees and verified against every element. Empty when
/// the fixed subtrees do not meet or the nearest common vertex lies beyond `radius_bound`.
/// Throws DomainError if the list is empty or contains a hyperbolic element.
std::optional<CommonFixedVertex> common_fixed_vertex(const std::vector<NormalForm>& elements,
                                                     const BsPresentation& group,
                                                     std::size_t radius_bound);

struct BallEdge {
  TreeEdge edge;
  TreeVertex from;
  TreeVertex to;
};

struct TreeBall {
  std::vector<TreeVertex> vertices;
  std::vector<BallEdge> edges;
};

TreeBall tree_ball(const TreeVertex& center, std::size_t radius, const BsPresentation& group);

/// Directed graph in DOT, vertex and edge lines sorted by label.
std::string to_dot(const TreeBall& ball);

}  // namespace bsrig
