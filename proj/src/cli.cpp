#include "cxs/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cxs/bigmath.hpp"
#include "cxs/colorful.hpp"
#include "cxs/errors.hpp"
#include "cxs/hypergraph.hpp"
#include "cxs/json_io.hpp"
#include "cxs/radon.hpp"
#include "cxs/space.hpp"
#include "cxs/transversal.hpp"

namespace cxs {
namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
      return 3;
    case ErrorKind::ParseError:
      return 65;
    case ErrorKind::UsageError:
      return 64;
    default:
      return 2;
  }
}

const char* status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass:
      return "pass";
    case CheckResult::Status::Fail:
      return "fail";
    default:
      return "na";
  }
}

Json optional_to_json(const std::optional<int>& v) {
  if (v) return *v;
  return nullptr;
}

Json family_to_json(const std::vector<ElementSet>& family) {
  Json out = Json::array();
  for (const ElementSet& s : family) out.push_back(element_set_to_json(s));
  return out;
}

Json helly_certificate_to_json(const HellyCertificate& cert) {
  return Json{{"critical_family", family_to_json(cert.family)},
              {"size", static_cast<int>(cert.family.size())}};
}

// Flattened key: value lines; human-oriented, not a stable interface.
void text_render(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      if (value.is_object() && !value.empty()) {
        text_render(value, path, os);
      } else if (value.is_string()) {
        os << path << ": " << value.get<std::string>() << "\n";
      } else {
        os << path << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

// Parsed documents and the running budget for one command.
struct Session {
  std::istream& in;
  Budget budget;
  std::size_t cap;
  Json inputs = Json::object();

  Json doc(const std::string& arg) { return load_document(arg, in); }

  ConvexitySpace space(const std::string& arg) {
    ConvexitySpace s = parse_space(doc(arg), cap, &budget);
    inputs["space"] = digest(space_to_json(s));
    return s;
  }

  SetSystem system(const std::string& arg) {
    SetSystem s = parse_system(doc(arg));
    inputs["system"] = digest(system_to_json(s));
    return s;
  }

  std::vector<ElementSet> family(const std::string& arg, int ground_size) {
    std::vector<ElementSet> f = parse_family(doc(arg), ground_size);
    inputs["family"] = digest(family_to_json(f));
    return f;
  }
};

struct VerbArgs {
  std::string space, system, family, families, request, set, y, generators;
  int ground = 0;
  int k = 2, kmax = 4, r = 3, m = 2, p = 1, q = 1;
  bool y_given = false, system_given = false;
};

Json dispatch(const std::string& verb, const VerbArgs& a, Session& s) {
  if (verb == "validate") {
    ConvexitySpace space = s.space(a.space);
    return Json{{"valid", true},
                {"ground_size", space.ground_size()},
                {"convex_set_count", static_cast<int>(space.convex_sets().size())}};
  }
  if (verb == "closure") {
    std::vector<ElementSet> generators = parse_family(s.doc(a.generators), a.ground);
    s.inputs["generators"] = digest(family_to_json(generators));
    s.inputs["ground_size"] = a.ground;
    ConvexitySpace space = closure_from_generators(a.ground, generators, s.cap, &s.budget);
    return Json{{"space", space_to_json(space)},
                {"convex_set_count", static_cast<int>(space.convex_sets().size())}};
  }
  if (verb == "build") {
    ConvexitySpace space = s.space(a.space);
    return Json{{"space", space_to_json(space)},
                {"convex_set_count", static_cast<int>(space.convex_sets().size())}};
  }
  if (verb == "hull") {
    ConvexitySpace space = s.space(a.space);
    ElementSet y = ElementSet::from_indices(space.ground_size(), parse_element_list(s.doc(a.set)));
    s.inputs["set"] = digest(element_set_to_json(y));
    return Json{{"hull", element_set_to_json(space.hull(y))}};
  }
  if (verb == "radon") {
    ConvexitySpace space = s.space(a.space);
    return Json{{"r2", optional_to_json(radon_number(space, &s.budget))}};
  }
  if (verb == "partition-number") {
    ConvexitySpace space = s.space(a.space);
    s.inputs["k"] = a.k;
    if (a.y_given) {
      Multiset y = parse_multiset(s.doc(a.y));
      s.inputs["y"] = digest(multiset_to_json(y));
      std::optional<TverbergWitness> witness = find_k_partition(space, y, a.k, &s.budget);
      Json w = nullptr;
      if (witness) {
        Json parts = Json::array();
        for (const Multiset& part : witness->parts) parts.push_back(multiset_to_json(part));
        w = Json{{"parts", std::move(parts)}, {"common_point", witness->common_point}};
      }
      return Json{{"k", a.k},
                  {"cardinality", y.cardinality()},
                  {"admits", witness.has_value()},
                  {"witness", std::move(w)}};
    }
    return Json{{"k", a.k}, {"rk", optional_to_json(partition_number(space, a.k, &s.budget))}};
  }
  if (verb == "helly") {
    ConvexitySpace space = s.space(a.space);
    HellyResult h = helly_number(space, &s.budget);
    return Json{{"helly", h.number}, {"certificate", helly_certificate_to_json(h.certificate)}};
  }
  if (verb == "verify") {
    ConvexitySpace space = s.space(a.space);
    s.inputs["kmax"] = a.kmax;
    BoundsReport rep = verify_bounds(space, a.kmax, &s.budget);
    Json rk = Json::object();
    for (const auto& [k, v] : rep.rk) rk[std::to_string(k)] = optional_to_json(v);
    return Json{
        {"r2", optional_to_json(rep.r2)},
        {"rk", std::move(rk)},
        {"helly", rep.helly},
        {"degenerate", rep.degenerate},
        {"checks", Json{{"levi", status_name(rep.levi.status)},
                        {"jamison", status_name(rep.jamison.status)},
                        {"pigeonhole", status_name(rep.pigeonhole.status)},
                        {"monotone", status_name(rep.monotone.status)}}},
        {"details", Json{{"levi", rep.levi.detail},
                         {"jamison", rep.jamison.detail},
                         {"pigeonhole", rep.pigeonhole.detail},
                         {"monotone", rep.monotone.detail}}},
        {"certificates", Json{{"helly", helly_certificate_to_json(rep.helly_certificate)}}},
    };
  }
  if (verb == "hypergraph") {
    ConvexitySpace space = s.space(a.space);
    std::vector<ElementSet> family = s.family(a.family, space.ground_size());
    s.inputs["k"] = a.k;
    Hypergraph h = intersection_hypergraph(space, family, a.k, &s.budget);
    return Json{{"hypergraph", hypergraph_to_json(h)},
                {"edge_count", static_cast<int>(h.edges().size())}};
  }
  if (verb == "colorful-m") {
    s.inputs["r"] = a.r;
    return Json{{"m", bigint_to_string(colorful_m(a.r, &s.budget))}};
  }
  if (verb == "rainbow") {
    ConvexitySpace space = s.space(a.space);
    std::vector<std::vector<ElementSet>> families =
        parse_families(s.doc(a.families), space.ground_size());
    Json canon = Json::array();
    for (const auto& f : families) canon.push_back(family_to_json(f));
    s.inputs["families"] = digest(canon);
    s.inputs["r"] = a.r;
    RainbowWitness w = find_rainbow_empty(space, families, a.r, &s.budget);
    return Json{{"selection", w.selection},
                {"selected_sets", family_to_json(w.selected_sets)},
                {"failing_index", w.failing_index},
                {"chosen_subfamilies", w.chosen_subfamilies}};
  }
  if (verb == "fh-stats") {
    ConvexitySpace space = s.space(a.space);
    std::vector<ElementSet> family = s.family(a.family, space.ground_size());
    s.inputs["m"] = a.m;
    FHStats st = fh_stats(space, family, a.m, &s.budget);
    Json result{{"alpha", rational_to_string(st.alpha)},
                {"beta", rational_to_string(st.beta)},
                {"deepest_point", st.deepest_point},
                {"c_m", bigint_to_string(st.intersecting_tuples)},
                {"total_tuples", bigint_to_string(st.total_tuples)}};
    if (a.m >= 2) {
      Hypergraph h = intersection_hypergraph(space, family, a.m, &s.budget);
      result["omega"] = clique_number(h, &s.budget);
    }
    return result;
  }
  if (verb == "tau") {
    SetSystem system = s.system(a.system);
    TauResult t = tau(system, &s.budget);
    return Json{{"tau", t.size}, {"transversal", element_set_to_json(t.set)}};
  }
  if (verb == "tau-star") {
    SetSystem system = s.system(a.system);
    FractionalTransversal ft = tau_star(system, &s.budget);
    Json weights = Json::array();
    for (const Rational& w : ft.weights) weights.push_back(rational_to_string(w));
    Json duals = Json::array();
    for (const Rational& w : ft.dual_weights) duals.push_back(rational_to_string(w));
    return Json{{"value", rational_to_string(ft.value)},
                {"weights", std::move(weights)},
                {"dual_weights", std::move(duals)},
                {"dual_value", rational_to_string(ft.dual_value)}};
  }
  if (verb == "weak-net") {
    ConvexitySpace space = s.space(a.space);
    NetRequest request = parse_net_request(s.doc(a.request));
    s.inputs["request"] = digest(Json{{"Y", multiset_to_json(request.y)},
                                      {"epsilon", rational_to_string(request.epsilon)}});
    std::optional<SetSystem> family;
    if (a.system_given) family = s.system(a.system);
    WeakNetResult w = weak_net(space, request, family, &s.budget);
    return Json{{"net", element_set_to_json(w.net)},
                {"net_size", w.net.count()},
                {"heavy", system_to_json(w.heavy)},
                {"heavy_count", static_cast<int>(w.heavy.members.size())}};
  }
  if (verb == "closure-cap") {
    SetSystem system = s.system(a.system);
    IntersectionClosure c = intersection_closure(system, &s.budget);
    return Json{{"system", system_to_json(c.closed)},
                {"ground_added_by_convention", c.ground_added_by_convention},
                {"member_count", static_cast<int>(c.closed.members.size())}};
  }
  if (verb == "pq-check") {
    ConvexitySpace space = s.space(a.space);
    SetSystem system = s.system(a.system);
    s.inputs["p"] = a.p;
    s.inputs["q"] = a.q;
    PqResult r = pq_check(space, system, a.p, a.q, &s.budget);
    return Json{{"holds", r.holds}, {"tau", optional_to_json(r.tau_value)}};
  }
  throw Error(ErrorKind::UsageError, "unknown verb: " + verb);
}

std::string error_payload(const std::string& verb, const Error& e, Json extras) {
  Json body{{"type", error_kind_name(e.kind())}, {"message", e.what()}};
  for (auto& [key, value] : extras.items()) body[key] = std::move(value);
  Json report{{"verb", verb}, {"error", std::move(body)}};
  return report.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  std::uint64_t default_budget = Budget::kDefaultLimit;
  if (const char* env = std::getenv("CXS_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && end && *end == '\0') default_budget = v;
  }

  VerbArgs a;
  std::uint64_t budget_limit = default_budget;
  std::uint64_t cap = kDefaultClosureCap;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool timing = false;

  CLI::App app{"finite convexity space toolkit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", budget_limit, "step budget for this command");
    sub->add_option("--cap", cap, "closure size cap");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", seed, "seed echoed into the report");
    sub->add_flag("--timing", timing, "write elapsed wall time to standard error");
  };
  auto space_option = [&](CLI::App* sub) {
    sub->add_option("--space", a.space, "space document (inline JSON, file path, or -)")
        ->required();
  };
  auto system_option = [&](CLI::App* sub, bool required = true) {
    CLI::Option* o = sub->add_option("--system", a.system, "set system document");
    if (required) o->required();
  };

  CLI::App* sub = app.add_subcommand("validate", "check the convexity axioms of a space document");
  space_option(sub);
  add_common(sub);

  sub = app.add_subcommand("closure", "intersection-close a generator family into a space");
  sub->add_option("--ground", a.ground, "ground set size")->required();
  sub->add_option("--generators", a.generators, "array of generator sets")->required();
  add_common(sub);

  sub = app.add_subcommand("build", "materialize a space document in explicit form");
  space_option(sub);
  add_common(sub);

  sub = app.add_subcommand("hull", "hull of a subset");
  space_option(sub);
  sub->add_option("--set", a.set, "subset as an element array")->required();
  add_common(sub);

  sub = app.add_subcommand("radon", "Radon number over subsets");
  space_option(sub);
  add_common(sub);

  sub = app.add_subcommand("partition-number", "k-partition number over multisets");
  space_option(sub);
  sub->add_option("--k", a.k, "number of parts")->required();
  sub->add_option("--y", a.y, "multiset document: test/witness this multiset instead");
  add_common(sub);

  sub = app.add_subcommand("helly", "Helly number with a critical family");
  space_option(sub);
  add_common(sub);

  sub = app.add_subcommand("verify", "invariant report: r2, partition numbers, Helly, bounds");
  space_option(sub);
  sub->add_option("--kmax", a.kmax, "largest k for partition numbers");
  add_common(sub);

  sub = app.add_subcommand("hypergraph", "intersection hypergraph of a family");
  space_option(sub);
  sub->add_option("--family", a.family, "array of convex sets")->required();
  sub->add_option("--k", a.k, "tuple size (uniformity)")->required();
  add_common(sub);

  sub = app.add_subcommand("colorful-m", "family count sufficient for a Radon bound r");
  sub->add_option("--r", a.r, "claimed Radon bound")->required();
  add_common(sub);

  sub = app.add_subcommand("rainbow", "rainbow selection with empty intersection");
  space_option(sub);
  sub->add_option("--families", a.families, "array of families of convex sets")->required();
  sub->add_option("--r", a.r, "claimed Radon bound")->required();
  add_common(sub);

  sub = app.add_subcommand("fh-stats", "intersection statistics of a family");
  space_option(sub);
  sub->add_option("--family", a.family, "array of convex sets")->required();
  sub->add_option("--m", a.m, "tuple size")->required();
  add_common(sub);

  sub = app.add_subcommand("tau", "minimum transversal of a set system");
  system_option(sub);
  add_common(sub);

  sub = app.add_subcommand("tau-star", "fractional transversal optimum with dual certificate");
  system_option(sub);
  add_common(sub);

  CLI::App* weak_net_sub = app.add_subcommand("weak-net", "weak epsilon-net for a weighted multiset");
  space_option(weak_net_sub);
  weak_net_sub->add_option("--request", a.request, "net request document")->required();
  system_option(weak_net_sub, false);
  add_common(weak_net_sub);

  sub = app.add_subcommand("closure-cap", "close a set system under intersection");
  system_option(sub);
  add_common(sub);

  CLI::App* pq_sub = app.add_subcommand("pq-check", "(p,q) property and transversal number");
  space_option(pq_sub);
  system_option(pq_sub);
  pq_sub->add_option("--p", a.p, "subfamily size")->required();
  pq_sub->add_option("--q", a.q, "members that must share a point")->required();
  add_common(pq_sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 64;
  }

  CLI::App* parsed = app.get_subcommands().front();
  std::string verb = parsed->get_name();
  a.y_given = verb == "partition-number" && parsed->count("--y") > 0;
  a.system_given = verb == "weak-net" && parsed->count("--system") > 0;

  Session session{in, Budget(budget_limit), static_cast<std::size_t>(cap)};
  auto start = std::chrono::steady_clock::now();
  std::string payload;
  int code = 0;
  try {
    Json result = dispatch(verb, a, session);
    Json report{
        {"verb", verb},
        {"inputs", session.inputs},
        {"options",
         Json{{"budget", budget_limit}, {"cap", cap}, {"format", format}, {"seed", seed}}},
        {"result", std::move(result)},
        {"budget_used", session.budget.used()},
    };
    if (format == "text") {
      std::ostringstream os;
      text_render(report, "", os);
      payload = os.str();
    } else {
      payload = report.dump(2) + "\n";
    }
  } catch (const RadonRefutedError& e) {
    Json certificate = Json::object();
    for (const auto& [element, count] : e.certificate()) {
      certificate[std::to_string(element)] = count;
    }
    payload = error_payload(verb, e, Json{{"certificate", std::move(certificate)}});
    code = exit_code(e.kind());
  } catch (const NotIntersectionClosedError& e) {
    payload = error_payload(verb, e, Json{{"lhs", e.lhs()}, {"rhs", e.rhs()}});
    code = exit_code(e.kind());
  } catch (const Error& e) {
    payload = error_payload(verb, e, Json::object());
    code = exit_code(e.kind());
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 70;
  }
  out << payload;
  if (timing) {
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    err << "elapsed_ms=" << elapsed.count() << "\n";
  }
  return code;
}

}  // namespace cxs
