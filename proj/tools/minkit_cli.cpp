// minkit: compute, verify, scan, and render Minkowski-geometry artifacts.
//
// Exit codes: 0 success / verdict true, 1 verdict false (witness emitted),
// 2 input error, 3 numeric error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minkit/json_io.hpp"
#include "minkit/ortho.hpp"

using namespace mink;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// option values accept inline JSON or @file
json arg_json(const std::string& s) {
  std::string text = (!s.empty() && s[0] == '@') ? slurp(s.substr(1)) : s;
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad JSON argument: ") + e.what());
  }
}

Vec arg_vec(const std::string& s) { return vec_from_json(arg_json(s)); }
Mat arg_mat(const std::string& s) { return mat_from_json(arg_json(s)); }

std::vector<Vec> named_polytope(const std::string& name) {
  auto v2 = [](double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
  };
  auto v3 = [](double a, double b, double c) {
    Vec v(3);
    v << a, b, c;
    return v;
  };
  if (name == "square") return {v2(1, 1), v2(-1, 1), v2(1, -1), v2(-1, -1)};
  if (name == "diamond") return {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)};
  if (name == "hexagon") {
    std::vector<Vec> v;
    for (int k = 0; k < 6; ++k)
      v.push_back(v2(std::cos(std::numbers::pi * k / 3), std::sin(std::numbers::pi * k / 3)));
    return v;
  }
  if (name == "cube3") {
    std::vector<Vec> v;
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        for (int sz : {-1, 1}) v.push_back(v3(sx, sy, sz));
    return v;
  }
  if (name == "cross3")
    return {v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0), v3(0, -1, 0), v3(0, 0, 1), v3(0, 0, -1)};
  throw InputError("unknown polytope name: " + name +
                   " (known: square, diamond, hexagon, cube3, cross3)");
}

// shortcuts lp:P[:DIM], quadratic:<json|@file>, polytopal:<name|json|@file>,
// or a full model JSON document (inline or @file)
NormModel parse_model(const std::string& spec) {
  if (spec.rfind("lp:", 0) == 0) {
    std::string rest = spec.substr(3);
    size_t colon = rest.find(':');
    double p = std::stod(rest.substr(0, colon));
    int dim = (colon == std::string::npos) ? 2 : std::stoi(rest.substr(colon + 1));
    return NormModel::lp(p, dim);
  }
  if (spec.rfind("quadratic:", 0) == 0) return NormModel::quadratic(arg_mat(spec.substr(10)));
  if (spec.rfind("polytopal:", 0) == 0) {
    std::string rest = spec.substr(10);
    if (!rest.empty() && (rest[0] == '[' || rest[0] == '@')) {
      std::vector<Vec> verts;
      for (const auto& row : arg_json(rest)) verts.push_back(vec_from_json(row));
      return NormModel::polytopal(verts);
    }
    return NormModel::polytopal(named_polytope(rest));
  }
  return model_from_json(arg_json(spec));
}

// inclusive a:step:b grid, or a single value
std::vector<double> parse_grid(const std::string& spec) {
  size_t c1 = spec.find(':');
  if (c1 == std::string::npos) return {std::stod(spec)};
  size_t c2 = spec.find(':', c1 + 1);
  require(c2 != std::string::npos, "grid spec must be value or a:step:b");
  double a = std::stod(spec.substr(0, c1));
  double step = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  double b = std::stod(spec.substr(c2 + 1));
  require(step > 0.0 && b >= a, "grid spec needs step > 0 and b >= a");
  std::vector<double> g;
  for (int i = 0;; ++i) {
    double v = a + i * step;
    if (v > b + 1e-12) break;
    g.push_back(v);
  }
  return g;
}

void emit(const json& out, const std::string& path) {
  std::string text = out.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write file: " + path);
    f << text;
  }
}

json replay_record(const std::string& kind, const NormModel& model, const json& extra,
                   const Witness& w, double tol) {
  json r;
  r["kind"] = kind;
  r["model"] = to_json(model);
  for (auto it = extra.begin(); it != extra.end(); ++it) r[it.key()] = it.value();
  r["witness"] = {{"x", to_json(w.x)}, {"y", to_json(w.y)}};
  r["tol"] = tol;
  return r;
}

// residual of one predicate at one stored pair; shared by check and replay
double witness_residual(const std::string& kind, const SipContext& ctx, const Mat& A,
                        const Vec& x, const Vec& y) {
  if (kind == "self-adjoint")
    return std::abs(rho_plus(ctx, A * x, y) - rho_plus(ctx, x, A * y));
  if (kind == "adjoint-abelian") return std::abs(sip(ctx, A * x, y) - sip(ctx, x, A * y));
  if (kind == "isometry") {
    double r = std::abs(ctx.model.norm(A * x) - ctx.model.norm(x));
    if (ctx.model.classify().smooth)
      r = std::max(r, std::abs(sip(ctx, A * x, A * y) - sip(ctx, x, y)));
    return r;
  }
  if (kind == "iso-abelian")
    return (A.inverse() * y - gen_adjoint_apply(ctx, A, y)).cwiseAbs().maxCoeff();
  if (kind == "james")
    return std::abs(ctx.model.norm(x + y) - ctx.model.norm(x - y));
  throw InputError("unknown replay kind: " + kind);
}

// --- SVG rendering: 512x512 viewport, unit ball at 200 px radius ----------

constexpr int kSvgSize = 512;
constexpr double kSvgRadius = 200.0;
constexpr int kSvgSamples = 720;

std::string svg_point(const Vec& x) {
  double px = kSvgSize / 2.0 + kSvgRadius * x[0];
  double py = kSvgSize / 2.0 - kSvgRadius * x[1];
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f,%.3f", px, py);
  return buf;
}

std::string svg_polyline(const std::vector<Vec>& pts, const std::string& color) {
  std::string s = "  <polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\" points=\"";
  for (const Vec& p : pts) s += svg_point(p) + " ";
  s += "\"/>\n";
  return s;
}

std::vector<Vec> circle_samples(const NormModel& m) {
  require(m.dim() == 2, "render: plane models only");
  std::vector<Vec> pts;
  for (int i = 0; i <= kSvgSamples; ++i) {
    double theta = 2.0 * std::numbers::pi * i / kSvgSamples;
    Vec d(2);
    d << std::cos(theta), std::sin(theta);
    pts.push_back(d / m.norm(d));
  }
  return pts;
}

// --- subcommand drivers ----------------------------------------------------

int cmd_sip(const std::string& model_s, const std::string& u_s, const std::string& v_s,
            double fd_step, const std::string& out) {
  SipContext ctx(parse_model(model_s), fd_step);
  Vec u = arg_vec(u_s), v = arg_vec(v_s);
  json j;
  j["rho_plus"] = rho_plus(ctx, u, v);
  j["rho_minus"] = rho_minus(ctx, u, v);
  if (ctx.model.classify().smooth) {
    j["sip"] = sip(ctx, u, v);
    j["duality_map"] = to_json(duality_map(ctx, v));
  }
  emit(j, out);
  return 0;
}

int cmd_adjoint(const std::string& model_s, const std::string& op_s, const std::string& y_s,
                const std::string& out) {
  SipContext ctx(parse_model(model_s));
  Vec aty = gen_adjoint_apply(ctx, arg_mat(op_s), arg_vec(y_s));
  emit(json{{"adjoint_y", to_json(aty)}}, out);
  return 0;
}

int cmd_check(const std::string& kind, const std::string& model_s, const std::string& op_s,
              const SampleOptions& opt, const std::string& out) {
  SipContext ctx(parse_model(model_s));
  Mat A = arg_mat(op_s);
  PredicateReport rep;
  if (kind == "self-adjoint") rep = is_self_adjoint(ctx, A, opt);
  else if (kind == "adjoint-abelian") rep = is_adjoint_abelian(ctx, A, opt);
  else if (kind == "isometry") rep = is_isometry(ctx, A, opt);
  else if (kind == "iso-abelian") rep = iso_abelian_check(ctx, A, opt);
  else throw InputError("unknown check kind: " + kind);
  json j = to_json(rep);
  j["kind"] = kind;
  j["tol"] = opt.tol;
  if (!rep.verdict && rep.witness)
    j["replay"] = replay_record(kind, ctx.model, json{{"op", to_json(A)}}, *rep.witness, opt.tol);
  emit(j, out);
  return rep.verdict ? 0 : 1;
}

int cmd_normal_form(const std::string& kind, const std::string& model_s, const std::string& op_s,
                    double tol, const std::string& out) {
  Mat A = arg_mat(op_s);
  NormalForm nf;
  if (kind == "real") {
    nf = real_block_decomposition(A, tol);
  } else {
    SipContext ctx(parse_model(model_s));
    if (kind == "isometry") nf = isometry_normal_form(ctx, A, tol);
    else if (kind == "adjoint-abelian") nf = adjoint_abelian_normal_form(ctx, A, tol);
    else throw InputError("unknown normal-form kind: " + kind);
  }
  emit(to_json(nf), out);
  return 0;
}

int cmd_birkhoff(const std::string& model_s, const std::string& x_s, const std::string& y_s,
                 const std::string& g_s, double tol, const std::string& out) {
  NormModel m = parse_model(model_s);
  json j;
  if (!g_s.empty()) {
    Vec d = birkhoff_direction(m, arg_vec(g_s), tol);
    j["direction"] = to_json(d);
    emit(j, out);
    return 0;
  }
  require(!x_s.empty() && !y_s.empty(), "birkhoff: need --x and --y (or --g)");
  Vec x = arg_vec(x_s), y = arg_vec(y_s);
  auto res = birkhoff(m, x, y, tol);
  j["orthogonal"] = res.orthogonal;
  j["minimizer_t"] = res.minimizer_t;
  j["margin"] = res.margin;
  if (!res.orthogonal)
    j["replay"] = replay_record("birkhoff", m, json::object(), Witness{x, y}, tol);
  emit(j, out);
  return res.orthogonal ? 0 : 1;
}

int cmd_james(const std::string& model_s, const std::string& x_s, const std::string& y_s,
              double tol, const std::string& out) {
  NormModel m = parse_model(model_s);
  Vec x = arg_vec(x_s), y = arg_vec(y_s);
  bool ok = james(m, x, y, tol);
  json j{{"james", ok}};
  if (!ok) j["replay"] = replay_record("james", m, json::object(), Witness{x, y}, tol);
  emit(j, out);
  return ok ? 0 : 1;
}

AffineMap reflection_from_spec(const NormModel& m, const json& line) {
  // [point..., direction...]: n entries each for a line, or an object
  // {"point": [...], "directions": [[...], ...]} for a hyperplane
  if (line.is_object()) {
    LineSpec spec;
    spec.point = vec_from_json(line.at("point"));
    Mat dirs(m.dim(), line.at("directions").size());
    int c = 0;
    for (const auto& d : line.at("directions")) dirs.col(c++) = vec_from_json(d);
    spec.directions = dirs;
    return m.dim() == 2 ? left_reflection(m, spec) : left_reflection_hyperplane(m, spec);
  }
  Vec flat = vec_from_json(line);
  require(flat.size() == 2 * m.dim(), "reflect: flat line spec needs 2n entries");
  LineSpec spec = LineSpec::line(flat.head(m.dim()), flat.tail(m.dim()));
  return m.dim() == 2 ? left_reflection(m, spec) : left_reflection_hyperplane(m, spec);
}

int cmd_reflect(const std::string& mode, const std::string& model_s,
                const std::vector<std::string>& lines, int trials, double tol,
                const std::string& out) {
  NormModel m = parse_model(model_s);
  if (mode == "battery") {
    auto rep = euclidean_battery(m, trials, tol);
    emit(to_json(rep), out);
    return rep.all_pass ? 0 : 1;
  }
  if (mode == "probe") {
    auto rep = birkhoff_preservation_probe(m, trials, tol);
    emit(to_json(rep), out);
    return rep.rate >= 1.0 ? 0 : 1;
  }
  require(mode == "build" || mode == "compose", "reflect mode: build|compose|battery|probe");
  require(!lines.empty(), "reflect: need at least one --line");
  std::vector<AffineMap> maps;
  for (const auto& s : lines) maps.push_back(reflection_from_spec(m, arg_json(s)));
  AffineMap total = compose(maps);
  json j;
  j["map"] = to_json(total);
  j["class"] = to_string(classify_composition(m, total));
  emit(j, out);
  return 0;
}

int cmd_ellipsoid(const std::string& mode, const std::string& model_s,
                  const std::string& points_s, double eps, double tol, int samples, int ngon,
                  const std::string& out) {
  json j;
  if (mode == "lowner") {
    require(!points_s.empty(), "ellipsoid lowner: need --points");
    std::vector<Vec> pts;
    for (const auto& row : arg_json(points_s)) pts.push_back(vec_from_json(row));
    j["ellipsoid"] = to_json(lowner(pts, eps));
  } else if (mode == "john") {
    j["ellipsoid"] = to_json(john(parse_model(model_s), eps));
  } else if (mode == "contacts") {
    NormModel m = parse_model(model_s);
    Ellipsoid E = john(m, eps);
    j["ellipsoid"] = to_json(E);
    json cs = json::array();
    for (const Vec& c : contact_points(m, E, tol, samples)) cs.push_back(to_json(c));
    j["contacts"] = cs;
  } else if (mode == "remark-body") {
    json pts = json::array();
    for (const Vec& x : remark_body_samples(ngon, eps, samples)) pts.push_back(to_json(x));
    j["points"] = pts;
  } else {
    throw InputError("ellipsoid mode: john|lowner|contacts|remark-body");
  }
  emit(j, out);
  return 0;
}

int cmd_symmetry(const std::string& mode, const std::string& model_s, const std::string& x_s,
                 double tol, const std::string& out) {
  if (mode == "report") {
    emit(to_json(group_report(parse_model(model_s), tol)), out);
    return 0;
  }
  NormModel m = parse_model(model_s);
  require(m.kind() == NormModel::Kind::Polytopal, "symmetry " + mode + ": polytopal model only");
  PointGroup g = polytopal_isometry_group(m.vertices(), tol);
  if (mode == "group") {
    emit(to_json(g), out);
    return 0;
  }
  if (mode == "orbit") {
    require(!x_s.empty(), "symmetry orbit: need --x");
    json pts = json::array();
    for (const Vec& p : orbit_probe(m, arg_vec(x_s), g)) pts.push_back(to_json(p));
    emit(json{{"orbit", pts}, {"size", pts.size()}}, out);
    return 0;
  }
  throw InputError("symmetry mode: group|report|orbit");
}

int cmd_lp_scan(const std::string& p_spec, const std::string& t_spec, const std::string& out) {
  auto table = lp_rotation_scan(parse_grid(p_spec), parse_grid(t_spec));
  emit(to_json(table), out);
  return table.all_positive ? 0 : 1;
}

int cmd_render(const std::string& model_s, const std::vector<std::string>& lines,
               bool with_contacts, const std::string& out) {
  require(!out.empty(), "render: need --out file.svg");
  NormModel m = parse_model(model_s);
  auto circle = circle_samples(m);
  std::string body;
  body += svg_polyline(circle, "#1f4e79");
  for (const auto& s : lines) {
    AffineMap psi = reflection_from_spec(m, arg_json(s));
    std::vector<Vec> image;
    for (const Vec& p : circle) image.push_back(psi(p));
    body += svg_polyline(image, "#b02a2a");
  }
  if (with_contacts) {
    Ellipsoid E = john(m);
    body += svg_polyline(
        [&] {
          std::vector<Vec> pts;
          Mat S_half = Mat(E.S.llt().matrixL()).inverse().transpose();
          for (int i = 0; i <= kSvgSamples; ++i) {
            double theta = 2.0 * std::numbers::pi * i / kSvgSamples;
            Vec d(2);
            d << std::cos(theta), std::sin(theta);
            pts.push_back(E.center + S_half * d);
          }
          return pts;
        }(),
        "#2a7d3f");
    for (const Vec& c : contact_points(m, E)) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "  <circle cx=\"%.3f\" cy=\"%.3f\" r=\"4\" fill=\"#2a7d3f\"/>\n",
                    kSvgSize / 2.0 + kSvgRadius * c[0], kSvgSize / 2.0 - kSvgRadius * c[1]);
      body += buf;
    }
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write file: " + out);
  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgSize << "\" height=\""
    << kSvgSize << "\" viewBox=\"0 0 " << kSvgSize << " " << kSvgSize << "\">\n"
    << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << body << "</svg>\n";
  return 0;
}

int cmd_replay(const std::string& record_s, const std::string& out) {
  json rec = arg_json(record_s);
  if (rec.contains("replay")) rec = rec.at("replay");  // accept a full failure artifact
  std::string kind = rec.at("kind").get<std::string>();
  NormModel m = model_from_json(rec.at("model"));
  Vec x = vec_from_json(rec.at("witness").at("x"));
  Vec y = vec_from_json(rec.at("witness").at("y"));
  double tol = rec.at("tol").get<double>();
  bool reproduced;
  double residual = 0.0;
  if (kind == "birkhoff") {
    auto res = birkhoff(m, x, y, tol);
    residual = std::abs(res.minimizer_t);
    reproduced = !res.orthogonal;
  } else {
    SipContext ctx(m);
    Mat A = rec.contains("op") ? mat_from_json(rec.at("op")) : Mat::Identity(m.dim(), m.dim());
    residual = witness_residual(kind, ctx, A, x, y);
    reproduced = residual > tol;
  }
  emit(json{{"kind", kind}, {"residual", residual}, {"tol", tol}, {"reproduced", reproduced}},
       out);
  return reproduced ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("MINKKIT_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) Eigen::setNbThreads(n);
  }

  CLI::App app{"minkit: norm derivatives, generalized adjoints, normal forms, "
               "left reflections, ellipsoids, and symmetry groups"};
  app.require_subcommand(1);

  std::string model, op, u, v, x, y, g, points, mode, kind, out, p_spec, t_spec, record;
  std::vector<std::string> lines;
  double tol = 1e-6, fd_step = 1e-5, eps = 1e-6;
  int samples = 500, trials = 24, ngon = 16;
  std::uint64_t seed = 0;
  bool with_contacts = false;

  auto add_model = [&](CLI::App* c) {
    c->add_option("--model", model, "model: lp:P[:DIM], quadratic:G, polytopal:NAME, or JSON")
        ->required();
  };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", out, "output path (default stdout)"); };
  // raw per-value callback: keeps bracketed JSON from CLI11's container splitting
  auto add_lines = [&](CLI::App* c, const std::string& help) {
    c->add_option_function<std::string>(
         "--line", [&](const std::string& s) { lines.push_back(s); }, help)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->trigger_on_parse();
  };

  auto* c_sip = app.add_subcommand("sip", "evaluate [u,v] and the one-sided norm derivatives");
  add_model(c_sip);
  c_sip->add_option("--u", u)->required();
  c_sip->add_option("--v", v)->required();
  c_sip->add_option("--fd-step", fd_step);
  add_out(c_sip);

  auto* c_adj = app.add_subcommand("adjoint", "apply the generalized adjoint A^T(y)");
  add_model(c_adj);
  c_adj->add_option("--op", op)->required();
  c_adj->add_option("--y", y)->required();
  add_out(c_adj);

  auto* c_check = app.add_subcommand("check", "sampled operator-class predicates");
  c_check->add_option("kind", kind, "self-adjoint|adjoint-abelian|isometry|iso-abelian")
      ->required();
  add_model(c_check);
  c_check->add_option("--op", op)->required();
  c_check->add_option("--tol", tol);
  c_check->add_option("--samples", samples);
  c_check->add_option("--seed", seed);
  add_out(c_check);

  auto* c_nf = app.add_subcommand("normal-form", "real block normal forms");
  c_nf->add_option("kind", kind, "isometry|adjoint-abelian|real")->required();
  c_nf->add_option("--model", model, "required unless kind = real");
  c_nf->add_option("--op", op)->required();
  c_nf->add_option("--tol", tol);
  add_out(c_nf);

  auto* c_birk = app.add_subcommand("birkhoff", "decide x |_B y, or solve for the direction");
  add_model(c_birk);
  c_birk->add_option("--x", x);
  c_birk->add_option("--y", y);
  c_birk->add_option("--g", g, "solve for the unit d with d |_B g instead");
  c_birk->add_option("--tol", tol);
  add_out(c_birk);

  auto* c_james = app.add_subcommand("james", "decide the James relation ||x+y|| = ||x-y||");
  add_model(c_james);
  c_james->add_option("--x", x)->required();
  c_james->add_option("--y", y)->required();
  c_james->add_option("--tol", tol);
  add_out(c_james);

  auto* c_refl = app.add_subcommand("reflect", "left reflections: build, compose, battery");
  c_refl->add_option("mode", mode, "build|compose|battery|probe")->required();
  add_model(c_refl);
  add_lines(c_refl, "line as [point..., direction...] JSON; repeatable for compose");
  c_refl->add_option("--trials", trials);
  c_refl->add_option("--tol", tol);
  add_out(c_refl);

  auto* c_ell = app.add_subcommand("ellipsoid", "Loewner / John ellipsoids and contacts");
  c_ell->add_option("mode", mode, "john|lowner|contacts|remark-body")->required();
  c_ell->add_option("--model", model);
  c_ell->add_option("--points", points, "point cloud JSON for lowner");
  c_ell->add_option("--eps", eps, "solver gap (also the rim margin for remark-body)");
  c_ell->add_option("--tol", tol);
  c_ell->add_option("--samples", samples);
  c_ell->add_option("--ngon", ngon, "half vertex count of the remark-body polygon");
  add_out(c_ell);

  auto* c_sym = app.add_subcommand("symmetry", "isometry groups of polytopal balls");
  c_sym->add_option("mode", mode, "group|report|orbit")->required();
  add_model(c_sym);
  c_sym->add_option("--x", x, "orbit representative");
  c_sym->add_option("--tol", tol);
  add_out(c_sym);

  auto* c_scan = app.add_subcommand("lp-scan", "sign-function grids of the l_p argument");
  c_scan->add_option("--p", p_spec, "grid a:step:b or single value")->required();
  c_scan->add_option("--tanphi", t_spec, "grid a:step:b or single value")->required();
  add_out(c_scan);

  auto* c_render = app.add_subcommand("render", "SVG unit circle, reflected circles, contacts");
  add_model(c_render);
  add_lines(c_render, "overlay the reflected circle for each line");
  c_render->add_flag("--contacts", with_contacts, "overlay the John ellipse and its contacts");
  c_render->add_option("--out", out, "SVG output path")->required();

  auto* c_replay = app.add_subcommand("replay", "re-check a stored verdict-false witness");
  c_replay->add_option("record", record, "witness record JSON (inline or @file)")->required();
  add_out(c_replay);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help/version exit 0, parse failures are input errors
  }

  try {
    SampleOptions opt;
    opt.samples = samples;
    opt.tol = tol;
    opt.seed = seed;
    if (c_sip->parsed()) return cmd_sip(model, u, v, fd_step, out);
    if (c_adj->parsed()) return cmd_adjoint(model, op, y, out);
    if (c_check->parsed()) return cmd_check(kind, model, op, opt, out);
    if (c_nf->parsed()) return cmd_normal_form(kind, model, op, tol, out);
    if (c_birk->parsed()) return cmd_birkhoff(model, x, y, g, tol, out);
    if (c_james->parsed()) return cmd_james(model, x, y, tol, out);
    if (c_refl->parsed()) return cmd_reflect(mode, model, lines, trials, tol, out);
    if (c_ell->parsed()) return cmd_ellipsoid(mode, model, points, eps, tol, samples, ngon, out);
    if (c_sym->parsed()) return cmd_symmetry(mode, model, x, tol, out);
    if (c_scan->parsed()) return cmd_lp_scan(p_spec, t_spec, out);
    if (c_render->parsed()) return cmd_render(model, lines, with_contacts, out);
    if (c_replay->parsed()) return cmd_replay(record, out);
    throw InputError("no subcommand dispatched");
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
