#include "bsrig/render.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

namespace bsrig::render {

Json integer(const BigInt& x) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (x < lo || x > hi) return x.str();
  return x.convert_to<std::int64_t>();
}

Json profile(const CosetProfile& p) {
  return {{"l", integer(p.l)}, {"r", integer(p.r)}, {"L", integer(p.L)}};
}

Json hecke(const HeckeElement& x) {
  Json out = Json::array();
  for (const auto& [coset, coeff] : x.terms()) {
    out.push_back({{"coset", format(coset.representative)}, {"coeff", coeff}});
  }
  return out;
}

Json irreducible(const Irreducible& x) {
  if (x.is_character()) return {{"char", x.as_character().to_string()}};
  return {{"coset", format(x.as_coset().representative)},
          {"l", integer(x.left_dim())},
          {"r", integer(x.right_dim())}};
}

Json bimodule_sum(const BimoduleSum& s) {
  Json out = Json::array();
  for (const auto& t : s.terms()) out.push_back(irreducible(t));
  return out;
}

Json witness(const SignWitness& w) {
  return {{"t", w.t}, {"omega", w.omega.to_string()}, {"mu", w.mu.to_string()}};
}

Json verdict(const RigidityVerdict& v) {
  Json out{{"verdict", std::string(verdict_name(v.kind))}};
  if (v.witness) out["witness"] = witness(*v.witness);
  return out;
}

Json classification(const Classification& c) {
  if (const auto* e = std::get_if<Elliptic>(&c)) {
    return {{"kind", "elliptic"}, {"witness", format(e->witness)}};
  }
  return {{"kind", "hyperbolic"},
          {"translation_length", std::get<Hyperbolic>(c).translation_length}};
}

Json ball(const TreeBall& b) {
  std::vector<std::string> vertices;
  for (const auto& v : b.vertices) vertices.push_back(format(v.coset_rep));
  std::sort(vertices.begin(), vertices.end());
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto& e : b.edges) {
    edges.emplace_back(format(e.from.coset_rep), format(e.to.coset_rep),
                       format(e.edge.coset_rep));
  }
  std::sort(edges.begin(), edges.end());
  Json out_edges = Json::array();
  for (const auto& [from, to, label] : edges) {
    out_edges.push_back({{"from", from}, {"to", to}, {"label", label}});
  }
  return {{"vertices", vertices}, {"edges", out_edges}};
}

}  // namespace bsrig::render
