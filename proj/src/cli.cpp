#include "bsrig/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bsrig/bass_serre.hpp"
#include "bsrig/checks/acceptance.hpp"
#include "bsrig/fusion.hpp"
#include "bsrig/group.hpp"
#include "bsrig/hecke.hpp"
#include "bsrig/render.hpp"
#include "bsrig/rigidity.hpp"

namespace bsrig::cli {

namespace {

using render::Json;

constexpr const char* kSynopsis =
    "usage: bsrig [--group n,m] [--format text|json] [--seed N] <command> [args]\n"
    "commands:\n"
    "  reduce WORD            normal form of WORD\n"
    "  eq WORD WORD           equality in the group\n"
    "  blength WORD           b-length\n"
    "  profile WORD           coset indices {l, r, L}\n"
    "  qc WORD                quasi-centralizer membership\n"
    "  classify WORD          elliptic (with witness) or hyperbolic\n"
    "  fixed WORD... [--radius R]    common fixed vertex of elliptic elements\n"
    "  tree-ball [WORD] [--radius R]  Bass-Serre tree ball in DOT\n"
    "  coset WORD             canonical double coset <a> g <a>\n"
    "  convolve WORD WORD     product of double-coset basis elements\n"
    "  fuse-selfinv WORD      decomposition of K_g (x) K_g^-1\n"
    "  exchange P/Q WORD      partners mu with mu^L(g) = w^r(g)\n"
    "  invariants             parameters, chamber and index set of the group\n"
    "  iso n,m n,m            isomorphism of BS groups\n"
    "  obstruction n,m n,m    obstruction verdict for the crossed products\n"
    "  witness [n,m]          sign-separating roots of unity\n"
    "  selftest               run the acceptance suite\n"
    "word grammar:\n"
    "  word := term*   term := letter ('^' '-'? digits)?   letter := a | b | A | B\n"
    "  A = a^-1, B = b^-1, terms separated by optional whitespace, \"e\" = identity\n";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Parameters parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected n,m but got '" + text + "'");
  try {
    BigInt n(text.substr(0, comma));
    BigInt m(text.substr(comma + 1));
    if (n == 0 || m == 0) throw UsageError("group parameters must be nonzero: '" + text + "'");
    return {n, m};
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const UsageError*>(&e)) throw;
    throw UsageError("expected integers n,m but got '" + text + "'");
  }
}

std::string boolean(bool x) { return x ? "true" : "false"; }

struct Options {
  std::string group_text;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::vector<std::string> words;
  std::vector<std::string> pairs;
  std::string root;
  std::size_t radius = 8;
  std::size_t ball_radius = 1;
};

class Dispatcher {
 public:
  explicit Dispatcher(const Options& o) : o_(o) {}

  bool json() const { return o_.format == "json"; }

  const BsPresentation& group() {
    if (!group_) {
      if (o_.group_text.empty()) throw UsageError("this command requires --group n,m");
      Parameters p = parse_pair(o_.group_text);
      group_.emplace(p.n, p.m);
    }
    return *group_;
  }

  NormalForm word(std::size_t i) { return element(o_.words.at(i), group()); }

  std::string run(const std::string& command, int& exit_code);

 private:
  std::string emit(const Json& doc, const std::string& text) {
    return json() ? doc.dump() + "\n" : text + "\n";
  }

  const Options& o_;
  std::optional<BsPresentation> group_;
};

std::string Dispatcher::run(const std::string& command, int& exit_code) {
  exit_code = 0;
  if (command == "reduce") {
    NormalForm g = word(0);
    return emit({{"normal_form", format(g)}, {"b_length", g.b_length()}}, format(g));
  }
  if (command == "eq") {
    bool equal = word(0) == word(1);
    return emit({{"equal", equal}}, boolean(equal));
  }
  if (command == "blength") {
    std::size_t k = word(0).b_length();
    return emit({{"b_length", k}}, std::to_string(k));
  }
  if (command == "profile") {
    Json doc = render::profile(coset_profile(word(0), group()));
    return doc.dump() + "\n";
  }
  if (command == "qc") {
    NormalForm g = word(0);
    bool member = qc_member(g, group());
    return emit({{"qc", member}, {"profile", render::profile(coset_profile(g, group()))}},
                boolean(member));
  }
  if (command == "classify") {
    Classification c = classify(word(0), group());
    std::string text = std::holds_alternative<Elliptic>(c)
                           ? "elliptic witness=" + format(std::get<Elliptic>(c).witness)
                           : "hyperbolic translation_length=" +
                                 std::to_string(std::get<Hyperbolic>(c).translation_length);
    return emit(render::classification(c), text);
  }
  if (command == "fixed") {
    std::vector<NormalForm> elements;
    for (std::size_t i = 0; i < o_.words.size(); ++i) elements.push_back(word(i));
    auto found = common_fixed_vertex(elements, group(), o_.radius);
    if (!found) {
      return emit({{"found", false}, {"radius", o_.radius}},
                  "none within radius " + std::to_string(o_.radius));
    }
    return emit({{"found", true},
                 {"vertex", format(found->vertex.coset_rep)},
                 {"g0", format(found->g0)},
                 {"radius", o_.radius}},
                "vertex=" + format(found->vertex.coset_rep) + " g0=" + format(found->g0));
  }
  if (command == "tree-ball") {
    NormalForm center = o_.root.empty() ? NormalForm() : element(o_.root, group());
    TreeBall ball = tree_ball(vertex_of(center), o_.ball_radius, group());
    if (json()) return render::ball(ball).dump() + "\n";
    return to_dot(ball);
  }
  if (command == "coset") {
    DoubleCoset d = double_coset(word(0), group());
    Json doc = render::profile(d.profile);
    doc["coset"] = format(d.representative);
    return emit(doc, format(d.representative) + " l=" + d.profile.l.str() +
                         " r=" + d.profile.r.str() + " L=" + d.profile.L.str());
  }
  if (command == "convolve") {
    HeckeElement x = HeckeElement::basis(double_coset(word(0), group()));
    HeckeElement y = HeckeElement::basis(double_coset(word(1), group()));
    HeckeElement z = hecke_convolve(x, y, group());
    std::string text;
    for (const auto& [coset, coeff] : z.terms()) {
      if (!text.empty()) text += " + ";
      text += std::to_string(coeff) + " T[" + format(coset.representative) + "]";
    }
    return emit(render::hecke(z), text);
  }
  if (command == "fuse-selfinv") {
    BimoduleSum sum = decompose_self_inverse(word(0), group());
    std::string text;
    for (const auto& t : sum.terms()) {
      if (!text.empty()) text += " + ";
      text += t.is_character() ? "K[" + t.as_character().to_string() + "]"
                               : "K[" + format(t.as_coset().representative) + "]";
    }
    return emit(render::bimodule_sum(sum), text);
  }
  if (command == "exchange") {
    RootOfUnity w = RootOfUnity::parse(o_.root);
    auto partners = exchange_partners(w, word(0), group());
    Json list = Json::array();
    std::string text;
    for (const auto& mu : partners) {
      list.push_back(mu.to_string());
      text += (text.empty() ? "" : " ") + mu.to_string();
    }
    return emit({{"partners", list}}, text);
  }
  if (command == "invariants") {
    const BsPresentation& g = group();
    Parameters c = canonicalize(g.n(), g.m());
    Json doc{{"n", render::integer(g.n())},
             {"m", render::integer(g.m())},
             {"k", render::integer(g.k())},
             {"n0", render::integer(g.n0())},
             {"m0", render::integer(g.m0())},
             {"standing_hypothesis", g.standing_hypothesis()},
             {"amenable", is_amenable(g.n(), g.m())},
             {"canonical", {render::integer(c.n), render::integer(c.m)}}};
    std::ostringstream text;
    text << "group " << g.to_string() << "\nk " << g.k() << "\nn0 " << g.n0() << "\nm0 "
         << g.m0() << "\nstanding_hypothesis " << boolean(g.standing_hypothesis())
         << "\namenable " << boolean(is_amenable(g.n(), g.m())) << "\ncanonical BS(" << c.n
         << "," << c.m << ")";
    if (g.standing_hypothesis()) {
      Json f = Json::array();
      text << "\nF";
      for (const auto& z : f_set(3, g)) {
        f.push_back(render::integer(z));
        text << " " << z;
      }
      doc["F_depth3"] = f;
    }
    return emit(doc, text.str());
  }
  if (command == "iso") {
    Parameters p = parse_pair(o_.pairs.at(0));
    Parameters q = parse_pair(o_.pairs.at(1));
    bool iso = is_isomorphic(p.n, p.m, q.n, q.m);
    return emit({{"isomorphic", iso}}, boolean(iso));
  }
  if (command == "obstruction") {
    Parameters p = parse_pair(o_.pairs.at(0));
    Parameters q = parse_pair(o_.pairs.at(1));
    Parameters cp = canonicalize(p.n, p.m);
    Parameters cq = canonicalize(q.n, q.m);
    RigidityVerdict v = obstruction_verdict(cp.n, cp.m, cq.n, cq.m);
    std::string text(verdict_name(v.kind));
    if (v.witness) {
      text += " t=" + std::to_string(v.witness->t) + " omega=" + v.witness->omega.to_string() +
              " mu=" + v.witness->mu.to_string();
    }
    return emit(render::verdict(v), text);
  }
  if (command == "witness") {
    Parameters p = o_.pairs.empty() ? Parameters{group().n(), group().m()}
                                    : parse_pair(o_.pairs.at(0));
    SignWitness w = sign_witness(p.n, p.m);
    return emit(render::witness(w), "t=" + std::to_string(w.t) + " omega=" +
                                        w.omega.to_string() + " mu=" + w.mu.to_string());
  }
  if (command == "selftest") {
    auto results = acceptance::run_all(o_.seed.value_or(20130917));
    int passed = static_cast<int>(
        std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }));
    int failed = static_cast<int>(results.size()) - passed;
    exit_code = failed == 0 ? 0 : 1;
    if (json()) {
      Json list = Json::array();
      for (const auto& r : results) {
        list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                        {"detail", r.detail}});
      }
      return Json{{"passed", passed}, {"failed", failed}, {"criteria", list}}.dump() + "\n";
    }
    std::string text;
    for (const auto& r : results) text += acceptance::format_line(r) + "\n";
    return text + std::to_string(passed) + " passed, " + std::to_string(failed) + " failed\n";
  }
  throw UsageError("unknown command " + command);
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact computations in Baumslag-Solitar groups and their Hecke pairs", "bsrig"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--group", o.group_text, "group parameters n,m");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "seed for the randomized selftest");

  std::map<std::string, CLI::App*> commands;
  auto add = [&](const std::string& name, const std::string& help) {
    return commands[name] = app.add_subcommand(name, help);
  };
  for (const auto& [name, arity] : std::vector<std::pair<std::string, int>>{
           {"reduce", 1}, {"eq", 2}, {"blength", 1}, {"profile", 1}, {"qc", 1},
           {"classify", 1}, {"coset", 1}, {"convolve", 2}, {"fuse-selfinv", 1}}) {
    add(name, name)->add_option("words", o.words, "group words")->required()->expected(arity);
  }
  auto* fixed = add("fixed", "common fixed vertex");
  fixed->add_option("words", o.words, "elliptic elements")->required()->expected(1, -1);
  fixed->add_option("--radius", o.radius, "search radius");
  auto* ball = add("tree-ball", "Bass-Serre ball");
  ball->add_option("center", o.root, "center element");
  ball->add_option("--radius", o.ball_radius, "radius");
  auto* exchange = add("exchange", "exchange partners");
  exchange->add_option("omega", o.root, "root of unity p/q")->required();
  exchange->add_option("words", o.words, "group element")->required()->expected(1);
  add("invariants", "group invariants");
  add("iso", "isomorphism")->add_option("pairs", o.pairs, "n,m n,m")->required()->expected(2);
  add("obstruction", "obstruction verdict")
      ->add_option("pairs", o.pairs, "n,m n,m")
      ->required()
      ->expected(2);
  add("witness", "sign witness")->add_option("pairs", o.pairs, "n,m")->expected(0, 1);
  add("selftest", "acceptance suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream out, err;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help() + "\n" + kSynopsis, ""};
  } catch (const CLI::ParseError& e) {
    return {2, "", std::string(e.what()) + "\n" + kSynopsis};
  }

  std::string command;
  for (const auto& [name, sub] : commands) {
    if (sub->parsed()) command = name;
  }

  Dispatcher dispatch(o);
  try {
    int exit_code = 0;
    std::string text = dispatch.run(command, exit_code);
    return {exit_code, text, ""};
  } catch (const UsageError& e) {
    return {2, "", std::string("error: ") + e.what() + "\n" + kSynopsis};
  } catch (const ParseError& e) {
    return {2, "", std::string("error: ") + e.what() + "\n" + kSynopsis};
  } catch (const DomainError& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::out_of_range&) {
    return {2, "", std::string("error: missing argument\n") + kSynopsis};
  } catch (const std::exception& e) {
    return {1, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace bsrig::cli
