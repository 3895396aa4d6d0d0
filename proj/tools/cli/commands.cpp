#include "cli/commands.hpp"

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cli/explore.hpp"
#include "cli/format.hpp"
#include "cli/seedfile.hpp"
#include "tropf/errors.hpp"
#include "tropf/invariant.hpp"
#include "tropf/pointed.hpp"
#include "tropf/tropical.hpp"

namespace tropf::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string seed;
  bool json = false;
  std::string word, chart, at;
  std::string expr, u, v, f, g, p, q;
  std::string p_anchor, q_anchor;
  std::string coord, anchor, kind = "y", map, sq, stilde;
  std::string dedup = "labeled";
  long depth = -1;
  std::size_t index = 0;
  bool audit = false;
  bool pairing = false;
};

struct Context {
  ClusterPattern pattern;
  Names names;
};

struct Output {
  std::string text;
  json value;
  json audit = nullptr;
};

json to_json(const IntMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return rows;
}

std::size_t depth_or(const Options& o, std::size_t fallback) {
  if (o.depth < -1) throw ParseError("--depth must be nonnegative");
  return o.depth < 0 ? fallback : static_cast<std::size_t>(o.depth);
}

MutationWord word_arg(const std::string& text, const Context& ctx) {
  MutationWord w = MutationWord::parse(text);
  w.validate(ctx.pattern.n());
  return w;
}

LaurentPoly expr_arg(const std::string& text, const std::string& flag, const Context& ctx) {
  if (text.empty()) throw ParseError(flag + " is required");
  return parse_expression(text, ctx.pattern, ctx.names);
}

std::string certificate_text(const PointedCertificate& c) {
  std::ostringstream os;
  os << "chart: " << c.chart.to_string() << "\n"
     << "g = " << to_string(c.g) << "\n"
     << "F = " << format_fpoly(c.fpoly) << "\n"
     << "f = " << to_string(c.fvec) << "\n"
     << "flags: pointed=" << c.pointed << " bipointed=" << c.bipointed << " positive=" << c.positive << "\n";
  return os.str();
}

json certificate_json(const PointedCertificate& c) {
  return json{{"chart", c.chart.to_string()}, {"g", c.g},          {"F", format_fpoly(c.fpoly)},
              {"fvec", c.fvec},              {"pointed", c.pointed}, {"bipointed", c.bipointed},
              {"positive", c.positive}};
}

// ---------------------------------------------------------------- commands

Output cmd_mutate(Context& ctx, const Options& o) {
  const MutationWord w = word_arg(o.word, ctx);
  const auto vertex = ctx.pattern.vertex(w);
  std::ostringstream os;
  os << "word: " << w.to_string() << "\nB̃:\n" << format_matrix(vertex->seed.btilde.matrix()) << "cluster:\n";
  json cluster = json::array();
  for (std::size_t j = 0; j < ctx.pattern.m(); ++j) {
    const std::string s = format_poly(vertex->seed.cluster[j], ctx.names);
    os << "  " << j + 1 << ": " << s << "\n";
    cluster.push_back(s);
  }
  json lambda = nullptr;
  if (vertex->lambda) {
    os << "Λ:\n" << format_matrix(*vertex->lambda);
    lambda = to_json(*vertex->lambda);
  }
  return {os.str(),
          json{{"word", w.to_string()}, {"btilde", to_json(vertex->seed.btilde.matrix())}, {"cluster", cluster},
               {"lambda", lambda}}};
}

Output cmd_gvec(Context& ctx, const Options& o) {
  const auto cert = certify_at(expr_arg(o.expr, "--expr", ctx), word_arg(o.word, ctx), ctx.pattern);
  return {"g = " + to_string(cert.g) + "\n", json{{"chart", cert.chart.to_string()}, {"g", cert.g}}};
}

Output cmd_fpoly(Context& ctx, const Options& o) {
  const auto cert = certify_at(expr_arg(o.expr, "--expr", ctx), word_arg(o.word, ctx), ctx.pattern);
  return {certificate_text(cert), certificate_json(cert)};
}

Output cmd_gmat(Context& ctx, const Options& o) {
  const auto g = g_matrix(ctx.pattern, word_arg(o.word, ctx), word_arg(o.chart, ctx));
  return {format_matrix(g) + "det = " + determinant(g).get_str() + "\n",
          json{{"matrix", to_json(g)}, {"det", determinant(g).get_si()}}};
}

Output cmd_cmat(Context& ctx, const Options& o) {
  const auto c = c_matrix(ctx.pattern, word_arg(o.word, ctx), word_arg(o.chart, ctx));
  return {format_matrix(c) + "det = " + determinant(c).get_str() + "\n",
          json{{"matrix", to_json(c)}, {"det", determinant(c).get_si()}}};
}

Output cmd_trop(Context& ctx, const Options& o) {
  if (o.coord.empty()) throw ParseError("--coord is required");
  if (o.kind != "y" && o.kind != "x") throw ParseError("--kind must be y or x");
  const MutationWord anchor = word_arg(o.anchor, ctx);
  const MutationWord target = word_arg(o.word, ctx);
  const IntVec coord = parse_vector(o.coord);
  std::string kind = o.kind;
  IntVec at_anchor = coord;

  if (o.map == "y2x") {
    if (kind != "y") throw ParseError("--map y2x needs --kind y");
    at_anchor = y_to_x(TropicalPointY{anchor, coord}, ctx.pattern).coord;
    kind = "x";
  } else if (o.map == "x2y") {
    if (kind != "x") throw ParseError("--map x2y needs --kind x");
    std::optional<SquareExtension> ext;
    if (o.sq.empty()) {
      ext = SquareExtension::principal_default(ctx.pattern.root().btilde);
    } else {
      json jsq, jst;
      try {
        jsq = json::parse(o.sq);
        jst = json::parse(o.stilde.empty() ? "null" : o.stilde);
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("--sq/--stilde: ") + e.what());
      }
      if (!jsq.is_array() || !jst.is_array()) throw ParseError("--sq needs a JSON matrix and --stilde a JSON vector");
      std::vector<IntVec> rows;
      try {
        for (const auto& r : jsq) rows.push_back(r.get<IntVec>());
        ext = SquareExtension(ctx.pattern.root().btilde, IntMatrix::from_rows(rows), jst.get<IntVec>());
      } catch (const json::exception& e) {
        throw ParseError(std::string("--sq/--stilde: ") + e.what());
      }
    }
    at_anchor = x_to_y(TropicalPointX{anchor, coord}, *ext, ctx.pattern).coord;
    kind = "y";
  } else if (!o.map.empty()) {
    throw ParseError("--map must be y2x or x2y");
  }

  const IntVec result = kind == "y" ? transport_y(TropicalPointY{anchor, at_anchor}, target, ctx.pattern)
                                    : transport_x(TropicalPointX{anchor, at_anchor}, target, ctx.pattern);
  return {kind + " at " + target.to_string() + ": " + to_string(result) + "\n",
          json{{"kind", kind}, {"word", target.to_string()}, {"coord", result}}};
}

Output cmd_compat(Context& ctx, const Options& o) {
  if (o.p.empty() || o.q.empty()) throw ParseError("--p and --q are required");
  const TropicalPointY p{word_arg(o.p_anchor, ctx), parse_vector(o.p)};
  const TropicalPointY q{word_arg(o.q_anchor, ctx), parse_vector(o.q)};
  const std::size_t depth = depth_or(o, 5);
  const auto verdict = are_compatible(p, q, depth, ctx.pattern);
  if (!verdict.compatible) {
    return {"incompatible: vertex " + verdict.witness->to_string() + ", k = " + std::to_string(verdict.witness_index) +
                "\n",
            json{{"compatible", false},
                 {"depth", depth},
                 {"witness", verdict.witness->to_string()},
                 {"index", verdict.witness_index}}};
  }
  const auto sum = uplus(p, q, depth, ctx.pattern);
  return {"compatible to depth " + std::to_string(depth) + "\nuplus = " + to_string(sum.coord) + " at " +
              sum.anchor.to_string() + "\n",
          json{{"compatible", true}, {"depth", depth}, {"uplus", sum.coord}, {"anchor", sum.anchor.to_string()}}};
}

Output cmd_poisson(Context& ctx, const Options& o) {
  const auto b = poisson_bracket(expr_arg(o.f, "--f", ctx), expr_arg(o.g, "--g", ctx), ctx.pattern);
  const std::string s = format_poly(b, ctx.names);
  return {s + "\n", json(s)};
}

Output cmd_logcanon(Context& ctx, const Options& o) {
  const auto v = is_log_canonical(expr_arg(o.f, "--f", ctx), expr_arg(o.g, "--g", ctx), ctx.pattern);
  if (!v.log_canonical) return {"no\n", json{{"log_canonical", false}}};
  return {"yes c = " + v.c.get_str() + "\n", json{{"log_canonical", true}, {"c", v.c.get_str()}}};
}

Output cmd_goodcert(Context& ctx, const Options& o) {
  const std::size_t depth = depth_or(o, 3);
  const auto good = certify_good(expr_arg(o.expr, "--expr", ctx), ctx.pattern, depth);
  std::ostringstream os;
  os << "good to depth " << depth << "\n";
  json charts = json::object();
  for (const auto& [w, c] : good.charts) {
    os << "  " << w.to_string() << ": g = " << to_string(c.g) << ", F = " << format_fpoly(c.fpoly) << "\n";
    charts[w.to_string()] = certificate_json(c);
  }
  return {os.str(), json{{"good_to_depth", depth}, {"charts", charts}}};
}

Output cmd_detect(Context& ctx, const Options& o) {
  const std::size_t depth = depth_or(o, 5);
  const auto v = detect_cluster_monomial(expr_arg(o.expr, "--expr", ctx), ctx.pattern, depth);
  if (!v.found)
    return {"not found to depth " + std::to_string(depth) + "\n", json{{"found", false}, {"depth", depth}}};
  return {"cluster monomial at " + v.word.to_string() + " with exponents " + to_string(v.exponents) + "\n",
          json{{"found", true}, {"word", v.word.to_string()}, {"exponents", v.exponents}}};
}

Output cmd_invariant(Context& ctx, const Options& o) {
  const auto u = expr_arg(o.u, "--u", ctx);
  const auto v = expr_arg(o.v, "--v", ctx);
  const MutationWord at = word_arg(o.at, ctx);
  const auto quantity = o.pairing ? AuditQuantity::Pairing : AuditQuantity::FInvariant;
  const std::int64_t value = o.pairing ? pairing(u, v, at, ctx.pattern) : f_invariant(u, v, ctx.pattern, at);
  Output out{std::to_string(value) + "\n", json(value)};
  if (!o.audit) return out;

  const std::size_t depth = depth_or(o, 5);
  const auto report = check_seed_independence(u, v, ctx.pattern, depth, quantity);
  std::ostringstream os;
  os << "audit (" << (o.pairing ? "pairing" : "F-invariant") << ", depth " << depth << "):\n";
  json per_vertex = json::object(), components = json::object();
  for (const auto& [w, val] : report.per_vertex) {
    const auto& parts = report.components.at(w);
    os << "  " << w.to_string() << ": " << val << " (" << parts.first << " + " << parts.second << ")\n";
    per_vertex[w.to_string()] = val;
    components[w.to_string()] = json::array({parts.first, parts.second});
  }
  if (report.constant)
    os << "PASS: constant over " << report.per_vertex.size() << " vertices\n";
  else
    os << "FAIL: value changes at " << report.witness->to_string() << "\n";
  out.text += os.str();
  out.audit = json{{"quantity", o.pairing ? "pairing" : "f-invariant"},
                   {"depth", depth},
                   {"per_vertex", per_vertex},
                   {"components", components},
                   {"constant", report.constant},
                   {"witness", report.witness ? json(report.witness->to_string()) : json(nullptr)}};
  return out;
}

Output cmd_product(Context& ctx, const Options& o) {
  const std::size_t depth = depth_or(o, 5);
  const auto v = is_product_cluster_monomial(expr_arg(o.u, "--u", ctx), expr_arg(o.v, "--v", ctx), ctx.pattern, depth);
  return {std::string(v.is_cluster_monomial ? "true" : "false") + "\n" + v.explanation + "\n",
          json{{"cluster_monomial", v.is_cluster_monomial},
               {"invariant", v.invariant},
               {"witness", v.witness ? json(v.witness->to_string()) : json(nullptr)},
               {"explanation", v.explanation}}};
}

Output cmd_fcompat(Context& ctx, const Options& o) {
  const auto value = f_compatibility_degree(word_arg(o.word, ctx), o.index, expr_arg(o.expr, "--expr", ctx), ctx.pattern);
  return {std::to_string(value) + "\n", json(value)};
}

Output cmd_yhat(Context& ctx, const Options& o) {
  const MutationWord w = word_arg(o.word, ctx);
  const auto yhat = yhat_variables(ctx.pattern.seed_at(w));
  std::ostringstream os;
  json list = json::array();
  for (std::size_t k = 0; k < yhat.own_chart.size(); ++k) {
    const auto& r = yhat.initial[k];
    const std::string den = format_poly(r.den, ctx.names);
    const std::string s = den == "1" ? format_poly(r.num, ctx.names)
                                     : "(" + format_poly(r.num, ctx.names) + ") / (" + den + ")";
    os << "  y" << k + 1 << ": " << to_string(yhat.own_chart[k]) << " = " << s << "\n";
    list.push_back(json{{"exponents", yhat.own_chart[k]}, {"root", s}});
  }
  return {os.str(), json{{"word", w.to_string()}, {"yhat", list}}};
}

Output cmd_explore(Context& ctx, const Options& o) {
  if (o.dedup != "labeled" && o.dedup != "unlabeled") throw ParseError("--dedup must be labeled or unlabeled");
  const std::size_t depth = depth_or(o, 3);
  const auto index = explore(ctx.pattern, depth, o.dedup == "labeled" ? Dedup::Labeled : Dedup::Unlabeled);
  std::ostringstream os;
  os << "vertices: " << index.digests.size() << "\n"
     << "distinct unfrozen cluster variables: " << index.variables.size() << "\n"
     << "cluster variables including frozen: " << index.variables.size() + ctx.pattern.m() - ctx.pattern.n() << "\n"
     << "by depth:";
  for (auto c : index.variables_by_depth) os << " " << c;
  os << "\nperiodicity hits (" << o.dedup << "): " << index.repeats.size() << "\n";
  json repeats = json::array();
  for (const auto& [w, earlier] : index.repeats) {
    os << "  " << w.to_string() << " ~ " << earlier.to_string() << "\n";
    repeats.push_back(json::array({w.to_string(), earlier.to_string()}));
  }
  os << "variables:\n";
  for (const auto& v : index.variables) os << "  " << v << "\n";
  return {os.str(), json{{"vertices", index.digests.size()},
                         {"distinct_variables", index.variables.size()},
                         {"by_depth", index.variables_by_depth},
                         {"variables", index.variables},
                         {"dedup", o.dedup},
                         {"repeats", repeats}}};
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Precondition: return 3;
    case ErrorKind::Internal: return 4;
  }
  return 4;
}

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Precondition: return "precondition";
    default: return "internal";
  }
}

void report_error(bool as_json, const std::string& name, ErrorKind kind, const std::string& message,
                  std::ostream& out, std::ostream& err) {
  if (as_json)
    out << json{{"value", nullptr},
                {"audit", nullptr},
                {"errors", json::array({json{{"name", name}, {"kind", kind_name(kind)}, {"message", message}}})}}
               .dump(2)
        << "\n";
  else
    err << "error: " << name << ": " << message << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tropf: seeds, tropical points and F-invariants of cluster patterns"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "JSON seed file")->required();
  app.add_flag("--json", o.json, "machine-readable output");

  using Handler = Output (*)(Context&, const Options&);
  std::map<std::string, Handler> handlers;
  auto sub = [&](const std::string& name, const std::string& help, Handler h) {
    handlers[name] = h;
    return app.add_subcommand(name, help);
  };
  auto word = [&](CLI::App* s, const std::string& help = "vertex as a mutation word") {
    s->add_option("--word", o.word, help);
  };

  word(sub("mutate", "seed at a vertex", cmd_mutate));
  for (auto [name, h] : {std::pair{"gvec", cmd_gvec}, std::pair{"fpoly", cmd_fpoly}}) {
    auto* s = sub(name, name == std::string("gvec") ? "degree in a chart" : "pointed certificate in a chart", h);
    s->add_option("--expr", o.expr, "expression")->required();
    word(s, "chart");
  }
  for (auto [name, h] : {std::pair{"gmat", cmd_gmat}, std::pair{"cmat", cmd_cmat}}) {
    auto* s = sub(name, name == std::string("gmat") ? "extended G-matrix" : "C-matrix", h);
    word(s, "vertex t");
    s->add_option("--chart", o.chart, "reference vertex w (default: root)");
  }
  {
    auto* s = sub("trop", "transport tropical points and map between them", cmd_trop);
    s->add_option("--kind", o.kind, "y or x");
    s->add_option("--coord", o.coord, "coordinates at the anchor")->required();
    s->add_option("--anchor", o.anchor, "vertex where --coord is given");
    word(s, "target vertex");
    s->add_option("--map", o.map, "y2x or x2y, applied at the anchor");
    s->add_option("--sq", o.sq, "square extension as a JSON matrix (x2y)");
    s->add_option("--stilde", o.stilde, "its symmetrizer as a JSON vector (x2y)");
  }
  {
    auto* s = sub("compat", "compatibility of two Y-points and their sum", cmd_compat);
    s->add_option("--p", o.p)->required();
    s->add_option("--q", o.q)->required();
    s->add_option("--p-anchor", o.p_anchor);
    s->add_option("--q-anchor", o.q_anchor);
    s->add_option("--depth", o.depth);
  }
  for (auto [name, h] : {std::pair{"poisson", cmd_poisson}, std::pair{"logcanon", cmd_logcanon}}) {
    auto* s = sub(name, name == std::string("poisson") ? "Poisson bracket" : "log-canonicity test", h);
    s->add_option("--f", o.f)->required();
    s->add_option("--g", o.g)->required();
  }
  for (auto [name, h] : {std::pair{"goodcert", cmd_goodcert}, std::pair{"detect", cmd_detect}}) {
    auto* s = sub(name, name == std::string("goodcert") ? "good-to-depth certificate" : "cluster monomial search", h);
    s->add_option("--expr", o.expr)->required();
    s->add_option("--depth", o.depth);
  }
  {
    auto* s = sub("invariant", "F-invariant (or pairing) with optional audit", cmd_invariant);
    s->add_option("--u", o.u)->required();
    s->add_option("--v", o.v)->required();
    s->add_option("--at", o.at, "chart for the value (default: root)");
    s->add_option("--depth", o.depth, "audit depth (default 5)");
    s->add_flag("--audit", o.audit, "evaluate at every vertex within the depth");
    s->add_flag("--pairing", o.pairing, "use the pairing <u,v> instead of the symmetric invariant");
  }
  {
    auto* s = sub("product", "is u*v a cluster monomial", cmd_product);
    s->add_option("--u", o.u)->required();
    s->add_option("--v", o.v)->required();
    s->add_option("--depth", o.depth, "search depth (default 5)");
  }
  {
    auto* s = sub("fcompat", "f-compatibility degree of x_{i;w} with u", cmd_fcompat);
    word(s, "vertex w");
    s->add_option("--index", o.index, "1-based cluster index")->required();
    s->add_option("--expr", o.expr)->required();
  }
  word(sub("yhat", "ŷ-monomials of a seed", cmd_yhat));
  {
    auto* s = sub("explore", "bounded exchange-graph walk", cmd_explore);
    s->add_option("--depth", o.depth);
    s->add_option("--dedup", o.dedup, "labeled or unlabeled");
  }

  std::vector<std::string> argv_store{"tropf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(o.json, "ParseError", ErrorKind::Parse, e.what(), out, err);
    return 2;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    const RootConfig root = load_seed_file(o.seed);
    Context ctx{ClusterPattern(root), Names(root.m(), root.names)};
    Output result = handlers.at(name)(ctx, o);
    if (o.json)
      out << json{{"value", result.value}, {"audit", result.audit}, {"errors", json::array()}}.dump(2) << "\n";
    else
      out << result.text;
    return 0;
  } catch (const Error& e) {
    report_error(o.json, e.name(), e.kind(), e.what(), out, err);
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    report_error(o.json, "InternalError", ErrorKind::Internal, e.what(), out, err);
    return 4;
  }
}

}  // namespace tropf::cli
