#include "seifcalc_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "seifcalc/cuspidal.hpp"
#include "seifcalc/errors.hpp"
#include "seifcalc/handles.hpp"
#include "seifcalc/json_io.hpp"
#include "seifcalc/openbook.hpp"
#include "seifcalc/plumbing.hpp"
#include "seifcalc/scenarios.hpp"
#include "seifcalc/seifert.hpp"

namespace seifcalc::cli {
namespace {

struct Config {
  std::string format = "pretty";
  std::string input;  // "-" reads the payload from stdin
  bool verbose = false;
};

// Outcome of a subcommand: a JSON payload, plus an exit code for commands whose
// answer is "no such object" or "checks failed" without an exception.
struct Result {
  Json value;
  int code = kOk;
  bool lines = false;  // print array elements one per line
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

class Inputs {
 public:
  Inputs(const Config& cfg, std::istream& in) : cfg_(cfg), in_(in) {}

  // The payload from exactly one of the positional text and stdin.
  std::string text(const std::string& positional) {
    const bool from_stdin = cfg_.input == "-";
    if (!cfg_.input.empty() && !from_stdin) throw InvalidInput("--input accepts only '-'");
    if (from_stdin && !positional.empty()) throw InvalidInput("give the payload either inline or on stdin, not both");
    if (from_stdin) return read_stdin();
    if (positional.empty()) throw InvalidInput("missing input payload");
    return positional;
  }

  std::string read_stdin() {
    if (!stdin_) stdin_ = std::string(std::istreambuf_iterator<char>(in_), {});
    return *stdin_;
  }

  SeifertData seifert(const std::string& positional) {
    std::string t = text(positional);
    auto first = t.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && t[first] == '{') return decode_seifert(parse_json(t));
    return parse_seifert_shorthand(t);
  }

  OpenBookSpec spec(const std::string& positional) { return decode_openbook_spec(parse_json(text(positional))); }

  PlumbingGraph graph(const std::string& name) {
    if (name == "figure1") return figure1();
    if (name == "figure1-single-cusp") return figure1_single_cusp();
    if (name == "-") return decode_graph(parse_json(read_stdin()));
    return decode_graph(parse_json(text(name)));
  }

 private:
  const Config& cfg_;
  std::istream& in_;
  std::optional<std::string> stdin_;
};

std::vector<Integer> integer_list(const std::string& text) {
  std::vector<Integer> v;
  for (const auto& s : split(text, ',')) v.push_back(parse_integer(s));
  return v;
}

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> v;
  for (const auto& s : split(text, ',')) v.push_back(Rational::parse(s));
  return v;
}

Json encode_list(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

std::vector<TargetBinding> target_bindings(const RationalOpenBook& ob, const std::vector<Integer>& targets) {
  if (targets.size() != ob.bindings.size()) throw InvalidInput("one target per binding is required");
  std::vector<TargetBinding> tb;
  for (std::size_t i = 0; i < targets.size(); ++i)
    tb.push_back({ob.bindings[i].oriented.alpha, targets[i], ob.bindings[i].p});
  return tb;
}

void print(std::ostream& out, const Json& v, const std::string& format) {
  if (format == "json") {
    out << v.dump() << '\n';
  } else if (v.is_string()) {
    out << v.get<std::string>() << '\n';
  } else if (v.is_primitive()) {
    out << v.dump() << '\n';
  } else {
    out << v.dump(2) << '\n';
  }
}

void add_seifert(CLI::App& app, Inputs& io, std::function<Result()>& action) {
  auto* cmd = app.add_subcommand("seifert", "Seifert invariant calculus")->require_subcommand(1);
  auto manifold_cmd = [&](const std::string& name, const std::string& desc,
                          std::function<Json(const SeifertData&)> f) {
    auto* sub = cmd->add_subcommand(name, desc);
    auto text = std::make_shared<std::string>();
    sub->add_option("manifold", *text, "\"a,b;a,b;...\" or JSON");
    sub->callback([&action, &io, text, f] { action = [&io, text, f] { return Result{f(io.seifert(*text))}; }; });
  };
  manifold_cmd("euler", "Euler number", [](const SeifertData& s) { return encode(euler_number(s)); });
  manifold_cmd("e0", "Sum of floor(-beta/alpha)", [](const SeifertData& s) { return encode(e0(s)); });
  manifold_cmd("normalize", "Normal form", [](const SeifertData& s) { return encode(normalize(s)); });
  manifold_cmd("h1", "First homology", [](const SeifertData& s) {
    AbelianGroup g = h1(s);
    Json j = encode(g);
    j["text"] = g.str();
    return j;
  });
  manifold_cmd("lens", "Lens space from at most two exceptional fibers",
               [](const SeifertData& s) { return encode(lens_from_two_fibers(s)); });

  auto* equal = cmd->add_subcommand("equal", "Compare two Seifert manifolds");
  auto lhs = std::make_shared<std::string>(), rhs = std::make_shared<std::string>();
  equal->add_option("first", *lhs)->required();
  equal->add_option("second", *rhs)->required();
  equal->callback([&action, &io, lhs, rhs] {
    action = [&io, lhs, rhs] { return Result{Json(same_seifert(io.seifert(*lhs), io.seifert(*rhs)))}; };
  });

  auto* verdict = cmd->add_subcommand("verdict", "Tightness verdict for an invariant contact structure");
  auto text = std::make_shared<std::string>();
  auto dividing = std::make_shared<std::size_t>(0);
  auto fixed = std::make_shared<bool>(false);
  verdict->add_option("manifold", *text);
  verdict->add_option("--dividing", *dividing, "Fiber index isolated by the dividing circle");
  verdict->add_flag("--fixed-points", *fixed, "The circle action has fixed points");
  verdict->callback([&action, &io, text, dividing, fixed] {
    action = [&io, text, dividing, fixed] {
      return Result{encode(tightness_verdict(io.seifert(*text), *dividing, *fixed))};
    };
  });
}

void add_openbook(CLI::App& app, Inputs& io, std::function<Result()>& action) {
  auto* cmd = app.add_subcommand("openbook", "Rational open books with periodic monodromy")->require_subcommand(1);

  auto* dagger = cmd->add_subcommand("solve-dagger", "Residues c_i with sum c_i/n_i integral");
  auto orders = std::make_shared<std::vector<std::string>>();
  auto all = std::make_shared<bool>(false);
  dagger->add_option("orders", *orders)->required();
  dagger->add_flag("--all", *all, "List every solution");
  dagger->callback([&action, orders, all] {
    action = [orders, all] {
      std::vector<Integer> n;
      for (const auto& s : *orders) n.push_back(parse_integer(s));
      if (*all) {
        Json rows = Json::array();
        for (const auto& sol : dagger_solve_all(n)) rows.push_back(encode_list(sol));
        return Result{rows, rows.empty() ? kInfeasible : kOk, true};
      }
      auto sol = dagger_solve(n);
      if (!sol) return Result{Json(nullptr), kInfeasible};
      return Result{encode_list(*sol)};
    };
  });

  auto* build = cmd->add_subcommand("build", "Open book from a spec");
  auto spec = std::make_shared<std::string>();
  build->add_option("spec", *spec, "JSON open book spec");
  build->callback([&action, &io, spec] {
    action = [&io, spec] {
      RationalOpenBook ob = open_book_multi(io.spec(*spec));
      Json j = encode(ob);
      j["manifold"] = encode(monodromy_to_seifert(ob.spec.genus, ob.spec.interior, ob.monodromy()));
      j["contact"] = encode(contact_type(ob));
      return Result{j};
    };
  });

  auto* single = cmd->add_subcommand("single", "Open book with one fiber as binding");
  auto text = std::make_shared<std::string>();
  auto index = std::make_shared<std::size_t>(0);
  single->add_option("manifold", *text);
  single->add_option("--binding", *index, "Index of the binding fiber");
  single->callback([&action, &io, text, index] {
    action = [&io, text, index] {
      auto ob = open_book_single(io.seifert(*text), *index);
      if (!ob) return Result{Json(nullptr), kInfeasible};
      Json j = encode(*ob);
      j["contact"] = encode(contact_type(*ob));
      return Result{j};
    };
  });
}

void add_cobordism(CLI::App& app, Inputs& io, std::function<Result()>& action) {
  auto* cmd = app.add_subcommand("cobordism", "Symplectic 2-handle attachments")->require_subcommand(1);

  auto spec_cmd = [&](const std::string& name, const std::string& desc,
                      std::function<Json(const RationalOpenBook&, const std::vector<Integer>&)> f) {
    auto* sub = cmd->add_subcommand(name, desc);
    auto spec = std::make_shared<std::string>();
    auto targets = std::make_shared<std::string>();
    sub->add_option("spec", *spec, "JSON open book spec");
    sub->add_option("--targets", *targets, "Comma-separated target alphas, one per binding")->required();
    sub->callback([&action, &io, spec, targets, f] {
      action = [&io, spec, targets, f] {
        RationalOpenBook ob = open_book_multi(io.spec(*spec));
        return Result{f(ob, integer_list(*targets))};
      };
    });
  };
  spec_cmd("attach", "Boundary, framings and canonical pairing",
           [](const RationalOpenBook& ob, const std::vector<Integer>& t) { return encode(attach(ob, t)); });
  spec_cmd("pairing", "Canonical pairing from both formulas",
           [](const RationalOpenBook& ob, const std::vector<Integer>& t) {
             AttachmentPlan plan = make_plan(ob, t);
             std::vector<PageBinding> pb;
             for (std::size_t i = 0; i < t.size(); ++i) pb.push_back({ob.bindings[i].p, plan.F[i]});
             std::vector<Integer> interior;
             for (const auto& f : ob.spec.interior) interior.push_back(f.alpha);
             Rational page = k_core_pairing(ob.chi, pb);
             Rational seif = k_pairing_seifert(ob.spec.n, target_bindings(ob, t), interior, ob.spec.genus);
             if (!(page == seif)) throw InternalAssertion("pairing formulas disagree");
             return Json{{"pairing", encode(page)}, {"sign", page.sign()}};
           });
  spec_cmd("self-int", "Self-intersection of the page class",
           [](const RationalOpenBook& ob, const std::vector<Integer>& t) {
             make_plan(ob, t);
             return encode(page_class_self_intersection(ob.spec.n, target_bindings(ob, t)));
           });

  auto* framing = cmd->add_subcommand("framing", "Framing and beta_bar for one binding");
  auto args = std::make_shared<std::vector<std::string>>();
  framing->add_option("values", *args, "alpha beta n p target")->required()->expected(5);
  framing->callback([&action, args] {
    action = [args] {
      const auto& a = *args;
      FramingResult r = framing_for_target(parse_integer(a[0]), parse_integer(a[1]), parse_integer(a[2]),
                                           parse_integer(a[3]), parse_integer(a[4]));
      return Result{Json{{"F", encode(r.F)}, {"beta_bar", encode(r.beta_bar)}}};
    };
  });

  auto* ratio = cmd->add_subcommand("area-ratio", "Admissible range of the area ratio of two handles");
  auto rargs = std::make_shared<std::vector<std::string>>();
  auto actual = std::make_shared<std::string>();
  ratio->add_option("values", *rargs, "a1 t1 a2 t2 T")->required()->expected(5);
  ratio->add_option("--actual", *actual, "Ratio to test against the interval");
  ratio->callback([&action, rargs, actual] {
    action = [rargs, actual] {
      const auto& a = *rargs;
      RatioInterval iv = area_ratio_interval(parse_integer(a[0]), parse_integer(a[1]), parse_integer(a[2]),
                                             parse_integer(a[3]), Rational::parse(a[4]));
      Json j = encode(iv);
      if (!actual->empty()) {
        bool inside = iv.contains(Rational::parse(*actual));
        j["contains_actual"] = inside;
        return Result{j, inside ? kOk : kInfeasible};
      }
      return Result{j};
    };
  });
}

void add_cusp(CLI::App& app, std::function<Result()>& action) {
  auto* cmd = app.add_subcommand("cusp", "Unicuspidal curve arithmetic")->require_subcommand(1);

  auto pq_cmd = [&](const std::string& name, const std::string& desc,
                    std::function<Json(const Integer&, const Integer&)> f) {
    auto* sub = cmd->add_subcommand(name, desc);
    auto args = std::make_shared<std::vector<std::string>>();
    sub->add_option("values", *args, "p q")->required()->expected(2);
    sub->callback([&action, args, f] {
      action = [args, f] { return Result{f(parse_integer((*args)[0]), parse_integer((*args)[1]))}; };
    });
  };
  pq_cmd("bound", "The bound m_{p,q}", [](const Integer& p, const Integer& q) { return encode(m_bound(p, q)); });
  pq_cmd("invariants", "Multiplicity sequence, M, ell and the competing bound",
         [](const Integer& p, const Integer& q) {
           Json j = encode(cusp_invariants(p, q));
           DualPair d = dual_pair(p, q);
           j["dual"] = {encode(d.p_prime), encode(d.q_prime)};
           j["m_bound"] = encode(m_bound(p, q));
           j["gs_bound"] = encode(gs_bound(p, q));
           j["compare"] = to_string(compare_bounds(p, q));
           return j;
         });

  auto pqm_cmd = [&](const std::string& name, const std::string& desc,
                     std::function<Json(const Integer&, const Integer&, const Integer&)> f) {
    auto* sub = cmd->add_subcommand(name, desc);
    auto args = std::make_shared<std::vector<std::string>>();
    sub->add_option("values", *args, "p q m")->required()->expected(3);
    sub->callback([&action, args, f] {
      action = [args, f] {
        const auto& a = *args;
        return Result{f(parse_integer(a[0]), parse_integer(a[1]), parse_integer(a[2]))};
      };
    });
  };
  pqm_cmd("classify", "The boundary manifold M_{p,q,m}",
          [](const Integer& p, const Integer& q, const Integer& m) { return encode(classify_Mpqm(p, q, m)); });
  pqm_cmd("fillable", "Fillability verdict",
          [](const Integer& p, const Integer& q, const Integer& m) {
            return Json(to_string(fillability_verdict(p, q, m)));
          });

  auto* catalog = cmd->add_subcommand("catalog", "Curve families with m = d^2, one JSON row per entry");
  auto max_d = std::make_shared<int>(16);
  auto max_j = std::make_shared<int>(11);
  catalog->add_option("--max-d", *max_d, "Largest degree");
  catalog->add_option("--max-j", *max_j, "Largest Fibonacci index");
  catalog->callback([&action, max_d, max_j] {
    action = [max_d, max_j] {
      Json rows = Json::array();
      bool ok = true;
      for (const auto& e : family_catalog(*max_d, *max_j)) {
        CatalogCheck c = check_catalog_entry(e);
        Json row = encode(e);
        row["matches"] = c.manifold_matches;
        row["within_bound"] = c.within_bound;
        row["m_bound"] = encode(c.m_bound);
        ok = ok && c.manifold_matches && c.within_bound;
        rows.push_back(row);
      }
      if (!ok) throw InternalAssertion("a catalog entry does not match its stated manifold");
      return Result{rows, kOk, true};
    };
  });
}

void add_plumbing(CLI::App& app, Inputs& io, std::function<Result()>& action) {
  auto* cmd = app.add_subcommand("plumbing", "Plumbing graph linear algebra")->require_subcommand(1);

  auto graph_cmd = [&](const std::string& name, const std::string& desc) {
    auto* sub = cmd->add_subcommand(name, desc);
    auto graph = std::make_shared<std::string>();
    sub->add_option("--graph", *graph, "figure1, figure1-single-cusp, JSON, or - for stdin")->required();
    return std::make_pair(sub, graph);
  };

  auto [matrix, mg] = graph_cmd("matrix", "Intersection matrix");
  matrix->callback([&action, &io, mg = mg] {
    action = [&io, mg] { return Result{encode(intersection_matrix(io.graph(*mg)))}; };
  });

  auto [form, fg] = graph_cmd("form", "Determinant and definiteness");
  form->callback([&action, &io, fg = fg] {
    action = [&io, fg] { return Result{encode(form_class(intersection_matrix(io.graph(*fg))))}; };
  });

  auto [limak, lg] = graph_cmd("limak", "Solve Q z = a; exit 2 unless z is positive");
  auto rhs = std::make_shared<std::string>();
  limak->add_option("--a", *rhs, "Comma-separated right-hand side")->required();
  limak->callback([&action, &io, lg = lg, rhs] {
    action = [&io, lg, rhs] {
      LimakResult r = limak_solve(intersection_matrix(io.graph(*lg)), rational_list(*rhs));
      return Result{encode(r), r.positive() ? kOk : kInfeasible};
    };
  });

  auto [star, sg] = graph_cmd("star", "Seifert invariants of a star-shaped graph");
  auto center = std::make_shared<long>(-1);
  star->add_option("--center", *center, "Center vertex (default: first vertex of maximal degree)");
  star->callback([&action, &io, sg = sg, center] {
    action = [&io, sg, center] {
      PlumbingGraph g = io.graph(*sg);
      std::size_t c = *center < 0 ? default_center(g) : static_cast<std::size_t>(*center);
      if (c >= g.vertices.size()) throw InvalidInput("center out of range");
      SeifertData s = star_to_seifert(g, c, false);
      FormClass fc = form_class(intersection_matrix(g));
      return Result{Json{{"center", c},
                         {"seifert", encode(s)},
                         {"normal_form", encode(normalize(s))},
                         {"determinant", encode(fc.determinant)}}};
    };
  });

  auto* resolve = cmd->add_subcommand("resolve", "Resolution graph of the (p,q) cusp at self-intersection m");
  auto args = std::make_shared<std::vector<std::string>>();
  resolve->add_option("values", *args, "p q m")->required()->expected(3);
  resolve->callback([&action, args] {
    action = [args] {
      const auto& a = *args;
      PlumbingGraph g = cusp_resolution_graph(parse_integer(a[0]), parse_integer(a[1]), parse_integer(a[2]));
      FormClass fc = form_class(intersection_matrix(g));
      return Result{Json{{"graph", encode(g)},
                         {"determinant", encode(fc.determinant)},
                         {"definiteness", to_string(fc.definiteness)}}};
    };
  });
}

void add_verify(CLI::App& app, const Config& cfg, std::ostream& out, std::function<Result()>& action) {
  auto* cmd = app.add_subcommand("verify", "Run the worked-example scenarios");
  auto name = std::make_shared<std::string>();
  auto all = std::make_shared<bool>(false);
  auto parallel = std::make_shared<bool>(false);
  auto list = std::make_shared<bool>(false);
  auto data = std::make_shared<std::string>();
  auto* case_opt = cmd->add_option("--case", *name, "Run one case by name");
  auto* all_opt = cmd->add_flag("--all", *all, "Run every case");
  auto* list_opt = cmd->add_flag("--list", *list, "List case names");
  case_opt->excludes(all_opt)->excludes(list_opt);
  all_opt->excludes(list_opt);
  cmd->add_flag("--parallel", *parallel, "Run cases concurrently (with --all)");
  cmd->add_option("--data", *data, "Scenario data file (default: $SEIFCALC_CASE_DATA or the bundled file)");
  cmd->callback([&action, &cfg, &out, name, all, parallel, list, data] {
    action = [&cfg, &out, name, all, parallel, list, data] {
      ScenarioSuite suite = data->empty() ? ScenarioSuite::load_default() : ScenarioSuite::load(*data);
      const bool pretty = cfg.format == "pretty";
      if (*list) {
        Json names = Json::array();
        for (const auto& n : suite.list_cases()) names.push_back(n);
        return Result{names, kOk, true};
      }
      if (*all) {
        Summary s = suite.run_all(*parallel);
        int code = s.failed == 0 ? kOk : kInternal;
        if (!pretty) return Result{encode(s), code};
        for (const auto& r : s.reports) out << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
        return Result{Json(std::to_string(s.passed) + "/" + std::to_string(s.total) + " cases passed"), code};
      }
      if (name->empty()) throw InvalidInput("verify needs --case NAME, --all or --list");
      CaseReport r = suite.run_case(*name);
      int code = r.passed ? kOk : kInternal;
      if (!pretty && !cfg.verbose) return Result{encode(r), code};
      if (cfg.verbose || !r.passed) {
        for (const auto& a : r.assertions)
          out << (a.passed ? "  ok   " : "  FAIL ") << a.key << " [" << a.check << "] expected "
              << a.expected.dump() << " computed " << a.computed.dump() << '\n';
        if (!r.error.empty()) out << "  error: " << r.error << '\n';
      }
      return Result{Json((r.passed ? "PASS " : "FAIL ") + r.name), code};
    };
  });
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Config cfg;
  Inputs io(cfg, in);
  std::function<Result()> action;

  CLI::App app{"Exact arithmetic for Seifert manifolds, open books, cusps and plumbings", "seifcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();
  app.add_option("--input", cfg.input, "Read the JSON or shorthand payload from stdin with '-'");
  app.add_flag("-v,--verbose", cfg.verbose, "Per-assertion detail for verify");

  add_seifert(app, io, action);
  add_openbook(app, io, action);
  add_cobordism(app, io, action);
  add_cusp(app, action);
  add_plumbing(app, io, action);
  add_verify(app, cfg, out, action);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    Result r = action();
    if (r.lines && r.value.is_array() && cfg.format == "pretty") {
      for (const auto& row : r.value) out << row.dump() << '\n';
    } else {
      print(out, r.value, cfg.format);
    }
    return r.code;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const InternalAssertion& e) {
    err << "internal assertion failed: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace seifcalc::cli
