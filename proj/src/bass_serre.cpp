#include "bsrig/bass_serre.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace bsrig {

TreeVertex vertex_of(const NormalForm& g) { return {g.without_tail()}; }

TreeEdge edge_of(const NormalForm& g, const BsPresentation& group) {
  return {g.with_tail(floor_mod(g.tail(), group.n()))};
}

TreeVertex source(const TreeEdge& e) { return vertex_of(e.coset_rep); }

TreeVertex range(const TreeEdge& e, const BsPresentation& group) {
  return vertex_of(Reducer(group, e.coset_rep).push_b(-1).result());
}

bool fixes_vertex(const NormalForm& g, const TreeVertex& v, const BsPresentation& group) {
  NormalForm h = v.coset_rep;
  return multiply(multiply(invert(h, group), g, group), h, group).b_length() == 0;
}

std::size_t distance(const TreeVertex& u, const TreeVertex& v, const BsPresentation& group) {
  return multiply(invert(u.coset_rep, group), v.coset_rep, group).b_length();
}

std::vector<TreeVertex> neighbours(const TreeVertex& v, const BsPresentation& group) {
  std::vector<TreeVertex> out;
  for (int b_sign : {-1, 1}) {
    const BigInt& modulus = b_sign < 0 ? group.n() : group.m();
    for (BigInt i = 0; i < abs(modulus); ++i) {
      out.push_back(vertex_of(Reducer(group, v.coset_rep).push_a(i).push_b(b_sign).result()));
    }
  }
  return out;
}

Classification classify(const NormalForm& g, const BsPresentation& group) {
  CyclicReduction reduced = cyclically_reduce(g, group);
  if (reduced.core.b_length() == 0) return Elliptic{std::move(reduced.conjugator)};
  return Hyperbolic{reduced.core.b_length()};
}

bool is_elliptic(const NormalForm& g, const BsPresentation& group) {
  return std::holds_alternative<Elliptic>(classify(g, group));
}

bool power_classify_consistency(const NormalForm& g, const BigInt& z,
                                const BsPresentation& group) {
  if (z == 0) throw DomainError("power_classify_consistency requires z != 0");
  if (is_elliptic(g, group)) return true;
  return !is_elliptic(power(g, z, group), group);
}

namespace {

// Vertices of the geodesic from u to v: the reduced word u^-1 v read one b-letter at a time.
std::vector<TreeVertex> geodesic(const TreeVertex& u, const TreeVertex& v,
                                 const BsPresentation& group) {
  NormalForm step = multiply(invert(u.coset_rep, group), v.coset_rep, group);
  std::vector<TreeVertex> path{u};
  Reducer walker(group, u.coset_rep);
  for (const Crossing& c : step.prefix()) {
    walker.push_a(c.a_power).push_b(c.b_sign);
    path.push_back(vertex_of(walker.result()));
  }
  return path;
}

}  // namespace

std::optional<CommonFixedVertex> common_fixed_vertex(const std::vector<NormalForm>& elements,
                                                     const BsPresentation& group,
                                                     std::size_t radius_bound) {
  if (elements.empty()) throw DomainError("common_fixed_vertex requires a nonempty list");
  std::vector<TreeVertex> anchors;
  for (const auto& g : elements) {
    Classification c = classify(g, group);
    const auto* e = std::get_if<Elliptic>(&c);
    if (e == nullptr) throw DomainError("common_fixed_vertex: " + format(g) + " is hyperbolic");
    anchors.push_back(vertex_of(e->witness));
  }

  // Fixed subtrees are convex, so the first vertex of Fix(g) met on the way from the current
  // vertex to g's anchor is the projection onto Fix(g), and it stays inside every earlier
  // fixed subtree whenever the full intersection is nonempty.
  const TreeVertex& center = anchors.front();
  TreeVertex current = center;
  for (std::size_t i = 1; i < elements.size(); ++i) {
    for (const TreeVertex& v : geodesic(current, anchors[i], group)) {
      if (fixes_vertex(elements[i], v, group)) {
        current = v;
        break;
      }
    }
  }
  bool certified = std::all_of(elements.begin(), elements.end(), [&](const NormalForm& g) {
    return fixes_vertex(g, current, group);
  });
  if (!certified || distance(center, current, group) > radius_bound) return std::nullopt;
  NormalForm g0 = current.coset_rep;
  return CommonFixedVertex{std::move(current), std::move(g0)};
}

TreeBall tree_ball(const TreeVertex& center, std::size_t radius, const BsPresentation& group) {
  TreeBall ball;
  std::set<TreeVertex> seen{center};
  std::deque<std::pair<TreeVertex, std::size_t>> queue{{center, 0}};
  while (!queue.empty()) {
    auto [v, depth] = std::move(queue.front());
    queue.pop_front();
    ball.vertices.push_back(v);
    if (depth == radius) continue;
    for (auto& w : neighbours(v, group)) {
      if (seen.insert(w).second) queue.emplace_back(std::move(w), depth + 1);
    }
  }
  for (const auto& v : ball.vertices) {
    for (BigInt i = 0; i < abs(group.n()); ++i) {
      TreeEdge e{v.coset_rep.with_tail(i)};
      TreeVertex to = range(e, group);
      if (seen.contains(to)) ball.edges.push_back({std::move(e), v, std::move(to)});
    }
  }
  return ball;
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string to_dot(const TreeBall& ball) {
  std::vector<std::string> nodes;
  for (const auto& v : ball.vertices) nodes.push_back("  " + quoted(format(v.coset_rep)) + ";");
  std::vector<std::string> edges;
  for (const auto& e : ball.edges) {
    edges.push_back("  " + quoted(format(e.from.coset_rep)) + " -> " +
                    quoted(format(e.to.coset_rep)) +
                    " [label=" + quoted(format(e.edge.coset_rep)) + "];");
  }
  std::sort(nodes.begin(), nodes.end());
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "digraph bass_serre {\n";
  for (const auto& line : nodes) out << line << "\n";
  for (const auto& line : edges) out << line << "\n";
  out << "}\n";
  return out.str();
}

}  // namespace bsrig
