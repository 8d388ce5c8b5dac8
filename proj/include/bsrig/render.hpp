#pragma once

// JSON documents for the CLI. Integers that fit in 64 bits are JSON numbers, larger ones
// are decimal strings.

#include <json.hpp>

#include "bsrig/bass_serre.hpp"
#include "bsrig/fusion.hpp"
#include "bsrig/hecke.hpp"
#include "bsrig/rigidity.hpp"

namespace bsrig::render {

using Json = nlohmann::ordered_json;

Json integer(const BigInt& x);

/// {"l":..., "r":..., "L":...}
Json profile(const CosetProfile& p);
/// [{"coset": word, "coeff": int}, ...]
Json hecke(const HeckeElement& x);
/// {"char": "p/q"} or {"coset": word, "l":..., "r":...}
Json irreducible(const Irreducible& x);
Json bimodule_sum(const BimoduleSum& s);
/// {"verdict": ..., "witness": {"t":..., "omega": "p/q", "mu": "p/q"}}
Json verdict(const RigidityVerdict& v);
Json witness(const SignWitness& w);
Json classification(const Classification& c);
Json ball(const TreeBall& b);

}  // namespace bsrig::render
