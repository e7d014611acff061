// Renders the gallery of SVG figures into the working directory: a
// supporting-line fan, the unrolled slide curve, a parallel-body scene and a
// common-tangents scene.

#include <fstream>
#include <iostream>

#include "slideturn/slideturn.hpp"

using namespace slideturn;

namespace {

void save(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  std::cout << "wrote " << path << "\n";
}

}  // namespace

int main() {
  ConvexBody pentagon =
      ConvexBody::polygon({{1.2, 0.0}, {0.4, 1.1}, {-0.9, 0.8}, {-1.1, -0.4}, {0.2, -1.2}});
  ConvexBody disc = ConvexBody::disc({3.5, 0.2}, 0.8);

  SlideCurve sc = slide_curve(pentagon);
  save("fan.svg", svg::slide_scene(pentagon, sc, 36));
  save("unrolled.svg", svg::unrolled_scene(sc));

  ParallelBody pb = parallel_body(pentagon, 1.0);
  save("parallel.svg", svg::parallel_scene(pentagon, pb, 0.35 * pb.perimeter()));

  CommonTangentReport rep = common_supporting_lines(pentagon, disc);
  save("tangents.svg", svg::tangents_scene(pentagon, disc, rep));
  return 0;
}
