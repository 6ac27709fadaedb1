#include "sfk/ansatz.hpp"
#include "sfk/error.hpp"
#include "sfk/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sfk::ansatz {

void writeCsv(const GridSample& s, const std::string& path) {
  std::ostringstream out;
  out.precision(17);
  out << "x,y,t,V,v,w\n";
  // Excluded points are omitted.
  for (int i = 0; i < s.nx; ++i)
    for (int j = 0; j < s.ny; ++j)
      for (int k = 0; k < s.nt; ++k) {
        const size_t id = s.index(i, j, k);
        if (!std::isfinite(s.V[id])) continue;
        out << s.xs[static_cast<size_t>(i)] << ',' << s.ys[static_cast<size_t>(j)] << ','
            << s.ts[static_cast<size_t>(k)] << ',' << s.V[id] << ',' << s.v[id] << ',';
        if (std::isfinite(s.w[id])) out << s.w[id]; else out << "inf";
        out << '\n';
      }
  writeFileAtomic(path, out.str());
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string levelColor(int l, int levels) {
  const double f = levels > 1 ? static_cast<double>(l) / (levels - 1) : 0.0;
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(40 + 200 * f), 60, static_cast<int>(220 - 180 * f));
  return buf;
}

}  // namespace

void writeSliceSvg(const GridSample& s, double x, const std::string& path, int levels) {
  if (s.nx < 1 || s.ny < 2 || s.nt < 2) fail(ErrorCode::InvalidArgument, "slice plot needs at least 2 points in y and t");
  if (levels < 1) fail(ErrorCode::InvalidArgument, "contour plot needs at least one level");
  int ix = 0;
  for (int i = 1; i < s.nx; ++i)
    if (std::abs(s.xs[static_cast<size_t>(i)] - x) < std::abs(s.xs[static_cast<size_t>(ix)] - x)) ix = i;

  std::vector<double> vals;
  for (int j = 0; j < s.ny; ++j)
    for (int k = 0; k < s.nt; ++k) {
      const double v = s.V[s.index(ix, j, k)];
      if (std::isfinite(v)) vals.push_back(v);
    }
  if (vals.empty()) fail(ErrorCode::InvalidArgument, "slice has no finite values");
  std::sort(vals.begin(), vals.end());
  // Clip the top of the range so the singular peak does not use every level.
  const double lo = vals.front(), hi = vals[static_cast<size_t>(0.95 * static_cast<double>(vals.size() - 1))];

  const double W = 640, H = 480, margin = 60;
  const double y0 = std::log(s.ys.front()), y1 = std::log(s.ys.back());
  const double t0 = s.ts.front(), t1 = s.ts.back();
  auto px = [&](int j) { return margin + (std::log(s.ys[static_cast<size_t>(j)]) - y0) / (y1 - y0) * (W - 2 * margin); };
  auto py = [&](int k) { return H - margin - (s.ts[static_cast<size_t>(k)] - t0) / (t1 - t0) * (H - 2 * margin); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
      << ' ' << H << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << W - 2 * margin << "\" height=\""
      << H - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << W / 2 << "\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
      << "V on the y-t slice x = " << num(s.xs[static_cast<size_t>(ix)]) << "</text>\n";
  svg << "<text x=\"" << W / 2 << "\" y=\"" << H - 15
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">y (log scale) from " << num(s.ys.front())
      << " to " << num(s.ys.back()) << "</text>\n";
  svg << "<text x=\"18\" y=\"" << H / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
      << "transform=\"rotate(-90 18 " << H / 2 << ")\">t from " << num(t0) << " to " << num(t1) << "</text>\n";

  // Marching squares. Cells touching a missing value are skipped; saddles
  // are resolved by a fixed corner pairing.
  for (int l = 0; l < levels; ++l) {
    const double level = lo + (hi - lo) * (l + 0.5) / levels;
    svg << "<g stroke=\"" << levelColor(l, levels) << "\" stroke-width=\"1.2\" fill=\"none\">\n";
    for (int j = 0; j + 1 < s.ny; ++j)
      for (int k = 0; k + 1 < s.nt; ++k) {
        const double c[4] = {s.V[s.index(ix, j, k)], s.V[s.index(ix, j + 1, k)], s.V[s.index(ix, j + 1, k + 1)],
                             s.V[s.index(ix, j, k + 1)]};
        if (!std::isfinite(c[0]) || !std::isfinite(c[1]) || !std::isfinite(c[2]) || !std::isfinite(c[3])) continue;
        const double cx[4] = {px(j), px(j + 1), px(j + 1), px(j)};
        const double cy[4] = {py(k), py(k), py(k + 1), py(k + 1)};
        std::vector<std::pair<double, double>> hits;
        for (int e = 0; e < 4; ++e) {
          const int a = e, b = (e + 1) % 4;
          if ((c[a] < level) == (c[b] < level)) continue;
          const double f = (level - c[a]) / (c[b] - c[a]);
          hits.emplace_back(cx[a] + f * (cx[b] - cx[a]), cy[a] + f * (cy[b] - cy[a]));
        }
        for (size_t h = 0; h + 1 < hits.size(); h += 2)
          svg << "<line x1=\"" << num(hits[h].first) << "\" y1=\"" << num(hits[h].second) << "\" x2=\""
              << num(hits[h + 1].first) << "\" y2=\"" << num(hits[h + 1].second) << "\"/>\n";
      }
    svg << "</g>\n";
  }
  svg << "<text x=\"" << W - margin << "\" y=\"" << margin - 8
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">levels " << num(lo) << " .. " << num(hi)
      << "</text>\n";
  svg << "</svg>\n";
  writeFileAtomic(path, svg.str());
}

}  // namespace sfk::ansatz
