// slideturn: load convex bodies from JSON, query supporting-line machinery,
// and emit tab-separated records and SVG figures.
//
// Numeric output: one record per line, fields tab-separated, floats printed
// with 12 significant digits. Exit codes: 0 success, 1 I/O or parse errors,
// 2 domain errors (NotDisjoint and friends).

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slideturn/slideturn.hpp"

namespace {

using namespace slideturn;

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // flush -0
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(12) << v;
  return os.str();
}

struct Config {
  int resolution = 4096;
  double tol = kTol;
  unsigned long long seed = 0x51edu;
};

Point2 parse_xy(const std::string& s) {
  std::istringstream is(s);
  double x = 0.0, y = 0.0;
  char comma = 0;
  if (!(is >> x >> comma >> y) || comma != ',')
    throw Error(Errc::ParseError, "expected coordinates as x,y");
  return {x, y};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << content;
}

void cmd_support(const std::string& body_path, double alpha) {
  ConvexBody H = load_body(body_path);
  PointedSupportingLine l = supporting_line(H, Direction(alpha));
  std::cout << "support\t" << fmt(l.point.x) << "\t" << fmt(l.point.y) << "\t"
            << fmt(l.line.dir.theta) << "\n";
}

void cmd_semitangent(const std::string& body_path, const std::string& point, double tol) {
  ConvexBody H = load_body(body_path);
  SemitangentPair st = semitangents(H, parse_xy(point), tol);
  std::cout << "semitangent\t" << fmt(st.first.dir.theta) << "\t" << fmt(st.last.dir.theta) << "\t"
            << (st.is_corner ? 1 : 0) << "\n";
}

void cmd_slidecurve(const std::string& body_path, const std::string& svg_path, int samples,
                    const Config& cfg) {
  ConvexBody H = load_body(body_path);
  SlideCurve sc = slide_curve(H, cfg.resolution);
  std::cout << "pieces\t" << sc.pieces().size() << "\n";
  for (int i = 0; i < samples; ++i) {
    double s = sc.length() * i / samples;
    CylinderPoint q = sc.eval(s);
    std::cout << "sample\t" << fmt(s) << "\t" << fmt(q.point.x) << "\t" << fmt(q.point.y) << "\t"
              << fmt(q.dir.theta) << "\n";
  }
  std::cout << "length\t" << fmt(sc.length()) << "\n";
  if (!svg_path.empty()) {
    write_file(svg_path, svg::slide_scene(H, sc, 24));
    // Companion figure: the unrolled boundary-position/direction graph.
    std::string unrolled = svg_path;
    std::size_t dotpos = unrolled.rfind(".svg");
    if (dotpos != std::string::npos)
      unrolled.replace(dotpos, 4, "_unrolled.svg");
    else
      unrolled += "_unrolled.svg";
    write_file(unrolled, svg::unrolled_scene(sc));
  }
}

void cmd_parallel(const std::string& body_path, double r, const std::string& svg_path) {
  ConvexBody H = load_body(body_path);
  ParallelBody pb = parallel_body(H, r);
  std::cout << "perimeter\t" << fmt(pb.perimeter()) << "\n";
  std::cout << "pieces\t" << pb.pieces().size() << "\n";
  if (!svg_path.empty()) write_file(svg_path, svg::parallel_scene(H, pb, 0.25 * pb.perimeter()));
}

void cmd_tangents(const std::string& p1, const std::string& p2, const std::string& svg_path) {
  ConvexBody H1 = load_body(p1), H2 = load_body(p2);
  CommonTangentReport rep = common_supporting_lines(H1, H2);
  int i = 1;
  for (const TangentEvent& ev : rep.events) {
    std::cout << "tangent\t" << i++ << "\t" << fmt(ev.param) << "\t" << fmt(ev.line.dir.theta)
              << "\t" << fmt(ev.touch1.x) << "\t" << fmt(ev.touch1.y) << "\t" << fmt(ev.touch2.x)
              << "\t" << fmt(ev.touch2.y) << "\t" << tangent_kind_name(ev.kind) << "\n";
  }
  if (!svg_path.empty()) write_file(svg_path, svg::tangents_scene(H1, H2, rep));
}

void cmd_separate(const std::string& p1, const std::string& p2, double tol) {
  ConvexBody H1 = load_body(p1), H2 = load_body(p2);
  ClosestPair cp = closest_pair(H1, H2);
  DirectedLine l = separating_line(H1, H2, tol);
  std::cout << "separate\t" << fmt(l.base.x) << "\t" << fmt(l.base.y) << "\t" << fmt(l.dir.theta)
            << "\t" << fmt(cp.dist) << "\n";
}

void cmd_chart(const std::string& body_path, const std::string& point) {
  ConvexBody H = load_body(body_path);
  Chart ch = chart_at(H, parse_xy(point));
  std::cout << "chart\t" << fmt(ch.p0.x) << "\t" << fmt(ch.p0.y) << "\t" << fmt(ch.o_point.x)
            << "\t" << fmt(ch.o_point.y) << "\t" << fmt(ch.epsilon) << "\n";
  const auto& xs = ch.f.node_xs();
  const auto& ys = ch.f.node_ys();
  for (std::size_t i = 0; i < xs.size(); ++i)
    std::cout << "node\t" << fmt(xs[i]) << "\t" << fmt(ys[i]) << "\n";
}

int cmd_check(const std::vector<std::string>& paths, const Config& cfg) {
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    all_ok = all_ok && ok;
    std::cout << "check\t" << name << "\t" << (ok ? "pass" : "FAIL") << "\t" << detail << "\n";
  };
  for (const std::string& path : paths) {
    ConvexBody H = load_body(path);

    // Supporting lines against the brute argmax oracle. Sampled bodies get
    // a tolerance matched to the oracle's boundary resolution.
    double sup_tol = H.is_polygon() || H.is_segment() || H.is_point() ? 1e-9 : 1e-4;
    bool sup_ok = true;
    for (int k = 0; k < 720 && sup_ok; ++k) {
      Direction a(-kPi + kTwoPi * k / 720.0);
      PointedSupportingLine fast = supporting_line(H, a);
      DirectedLine brute = oracles::brute_supporting_line(H, a, 1 << 14);
      sup_ok = line_gap(fast.line, brute) <= sup_tol;
    }
    report(path + ":support", sup_ok, "720 directions vs brute argmax");

    // Slide-curve length against the inscribed polyline oracle.
    SlideCurve sc = slide_curve(H, cfg.resolution);
    double poly = oracles::slide_polyline_length(sc, 1 << 14);
    double gap = std::fabs(sc.length() - poly);
    report(path + ":slidelength", gap <= 1e-4, "gap " + fmt(gap));

    // Parallel-body perimeter law.
    if (H.has_interior()) {
      ParallelBody pb = parallel_body(H, 1.0);
      double law = std::fabs(pb.perimeter() - (H.perimeter() + kTwoPi));
      report(path + ":parallel", law <= 1e-9, "perimeter-law gap " + fmt(law));

      // Reciprocity of the boundary maps on a few samples.
      bool recip_ok = true;
      for (int i = 0; i < 256 && recip_ok; ++i) {
        CylinderPoint q = sc.eval(sc.length() * i / 256.0);
        Point2 P = slide_to_boundary(H, q);
        CylinderPoint back = boundary_to_slide(H, P, 1.0, 1e-6);
        recip_ok = euclid4(q, back) <= 1e-6;
      }
      report(path + ":reciprocity", recip_ok, "f(g(q)) = q on 256 samples");

      // Randomized Lipschitz-in-the-small certificate, seedable.
      LipschitzReport lip = lipschitz_small_certificate(H, 2000, static_cast<unsigned>(cfg.seed));
      report(path + ":lipschitz", lip.passed,
             "max ratios f " + fmt(lip.max_f_ratio) + " g " + fmt(lip.max_g_ratio) + " vs 9");
    }
  }
  std::cout << "result\t" << (all_ok ? "pass" : "FAIL") << "\n";
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supporting lines, slide curves and common tangents of planar convex bodies"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after the subcommand too

  Config cfg;
  if (const char* env_seed = std::getenv("SLIDETURN_SEED")) cfg.seed = std::strtoull(env_seed, nullptr, 10);
  app.add_option("--resolution", cfg.resolution, "sample resolution for smooth bodies")
      ->check(CLI::Range(64, 1 << 22));
  app.add_option("--tol", cfg.tol, "classification tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized self-checks");

  std::string body1, body2, point_arg, svg_path;
  double alpha = 0.0, radius = 1.0;
  int samples = 0;
  std::vector<std::string> check_paths;

  CLI::App* support = app.add_subcommand("support", "supporting line of a given direction");
  support->add_option("body", body1)->required();
  support->add_option("--alpha", alpha, "line direction in radians")->required();

  CLI::App* semi = app.add_subcommand("semitangent", "semitangents through a boundary point");
  semi->add_option("body", body1)->required();
  semi->add_option("--point", point_arg, "boundary point as x,y")->required();

  CLI::App* slide = app.add_subcommand("slidecurve", "slide curve summary and samples");
  slide->add_option("body", body1)->required();
  slide->add_option("--svg", svg_path, "write a supporting-line fan figure");
  slide->add_option("--samples", samples, "print this many curve samples");

  CLI::App* par = app.add_subcommand("parallel", "parallel body at distance r");
  par->add_option("body", body1)->required();
  par->add_option("--r", radius, "offset radius")->check(CLI::PositiveNumber);
  par->add_option("--svg", svg_path, "write the parallel-body figure");

  CLI::App* tan = app.add_subcommand("tangents", "four common supporting lines");
  tan->add_option("body1", body1)->required();
  tan->add_option("body2", body2)->required();
  tan->add_option("--svg", svg_path, "write the common-tangents figure");

  CLI::App* sep = app.add_subcommand("separate", "strictly separating line");
  sep->add_option("body1", body1)->required();
  sep->add_option("body2", body2)->required();

  CLI::App* chart = app.add_subcommand("chart", "local convex-graph chart at a boundary point");
  chart->add_option("body", body1)->required();
  chart->add_option("--point", point_arg, "boundary point as x,y")->required();

  CLI::App* check = app.add_subcommand("check", "oracle self-verification");
  check->add_option("bodies", check_paths, "body files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (support->parsed()) cmd_support(body1, alpha);
    if (semi->parsed()) cmd_semitangent(body1, point_arg, cfg.tol);
    if (slide->parsed()) cmd_slidecurve(body1, svg_path, samples, cfg);
    if (par->parsed()) cmd_parallel(body1, radius, svg_path);
    if (tan->parsed()) cmd_tangents(body1, body2, svg_path);
    if (sep->parsed()) cmd_separate(body1, body2, cfg.tol);
    if (chart->parsed()) cmd_chart(body1, point_arg);
    if (check->parsed()) return cmd_check(check_paths, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code() == Errc::ParseError || e.code() == Errc::InvalidBody) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
