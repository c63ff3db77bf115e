#include "moduli/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "moduli/errors.hpp"
#include "moduli/neighborhood.hpp"
#include "moduli/scanning.hpp"

namespace moduli {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

// y of the point at `turn`, with the same exactness as x_coord.
double y_coord(const Rational& turn) { return x_coord(Rational(turn - Rational(1, 4))); }

}  // namespace

std::string render_frame_svg(const ModuliPoint& x, const Rational& tau, int size, bool labels) {
  const ScanParameter w = scan_at_time(tau);
  const ModuliPoint frame = scan(x, w);
  const double centre = size / 2.0;
  const double radius = size * 0.38;
  auto px = [&](double v) { return num(centre + radius * v); };
  auto py = [&](double v) { return num(centre - radius * v); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "  <circle cx=\"" << num(centre) << "\" cy=\"" << num(centre) << "\" r=\"" << num(radius)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  const double s = w.abscissa();
  const double h = y_coord(w.w());
  out << "  <line x1=\"" << px(s) << "\" y1=\"" << num(0) << "\" x2=\"" << px(s) << "\" y2=\"" << num(size)
      << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n"
      << "  <line x1=\"" << px(s) << "\" y1=\"" << py(h) << "\" x2=\"" << px(s) << "\" y2=\"" << py(-h)
      << "\" stroke=\"#cc3333\" stroke-width=\"2\"/>\n";

  for (const auto& p : frame.cycle().points()) {
    const double vx = x_coord(p.turn);
    const double vy = y_coord(p.turn);
    const bool marked = !p.marks.empty();
    out << "  <circle class=\"" << (marked ? "vertex marked" : "vertex unmarked") << "\" cx=\"" << px(vx)
        << "\" cy=\"" << py(vy) << "\" r=\"5\" fill=\""
        << (marked ? "black" : "white") << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    if (labels && marked) {
      std::string text;
      for (Mark m : p.marks) text += (text.empty() ? "" : ",") + std::to_string(m);
      out << "  <text x=\"" << num(centre + (radius + 16) * vx) << "\" y=\"" << num(centre - (radius + 16) * vy + 4)
          << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << text << "</text>\n";
    }
  }
  if (labels) {
    out << "  <text x=\"8\" y=\"18\" font-family=\"sans-serif\" font-size=\"12\">tau = " << format_rational(tau)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<std::filesystem::path> render_frames(const ModuliPoint& x, const RenderSpec& spec) {
  if (spec.frames < 1) throw DomainError("render: frames must be at least 1");
  if (spec.size < 16) throw DomainError("render: image size too small");
  std::vector<std::filesystem::path> written;
  for (int k = 0; k < spec.frames; ++k) {
    const Rational tau = spec.frames == 1 ? Rational(0) : Rational(k, spec.frames - 1);
    char name[32];
    std::snprintf(name, sizeof name, "frame_%04d.svg", k);
    const auto path = spec.output_dir / name;
    std::ofstream file(path, std::ios::binary);
    file << render_frame_svg(x, tau, spec.size, spec.labels);
    if (!file) throw std::runtime_error("render: cannot write " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace moduli
