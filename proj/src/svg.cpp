#include "beflow/svg.hpp"

#include <sstream>

namespace beflow {

namespace {

// Fixed-point decimal rendering of a rational; no floating point involved.
std::string decimal_str(const Rat& q, int digits = 4) {
  mpz_class num = q.num(), den = q.den();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class scaled = num * scale / den;
  mpz_class ip = scaled / scale, fp = scaled % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

struct Mapper {
  Rat r_lo, r_hi;
  int width = 640, height = 480, margin = 50;

  std::string x(const Rat& r) const {
    Rat t = (r - r_lo) / (r_hi - r_lo);
    return decimal_str(Rat(margin) + Rat(width - 2 * margin) * t, 2);
  }
  std::string y(const Rat& alpha) const {
    Rat t = Rat(1) - alpha;  // alpha in [0, 1]
    return decimal_str(Rat(margin) + Rat(height - 2 * margin) * t, 2);
  }
};

void polyline(std::ostringstream& out, const std::vector<std::pair<Rat, Rat>>& pts,
              const Mapper& m, const std::string& style) {
  out << "  <polyline fill=\"none\" " << style << " points=\"";
  for (const auto& [r, a] : pts) out << m.x(r) << ',' << m.y(a) << ' ';
  out << "\"/>\n";
}

}  // namespace

std::string region_to_svg(const FlowRegion& reg,
                          const std::vector<SvgOverlay>& overlays) {
  Mapper m{reg.window.r_lo, reg.window.r_hi};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << m.width
      << "\" height=\"" << m.height << "\">\n";
  out << "  <rect x=\"" << m.margin << "\" y=\"" << m.margin << "\" width=\""
      << m.width - 2 * m.margin << "\" height=\"" << m.height - 2 * m.margin
      << "\" fill=\"white\" stroke=\"black\"/>\n";
  // axis ticks at integer r and quarter alphas
  for (mpz_class r = 2; Rat(mpq_class(r)) <= reg.window.r_hi; ++r) {
    Rat rr{mpq_class(r)};
    out << "  <text x=\"" << m.x(rr) << "\" y=\"" << m.height - m.margin + 18
        << "\" font-size=\"12\" text-anchor=\"middle\">" << rr.str()
        << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    Rat a(i, 4);
    out << "  <text x=\"" << m.margin - 8 << "\" y=\"" << m.y(a)
        << "\" font-size=\"12\" text-anchor=\"end\">" << a.str() << "</text>\n";
  }

  for (const SvgOverlay& ov : overlays) {
    std::string style = "stroke=\"#888\" stroke-dasharray=\"6 3\"";
    const NamedRegion& nr = ov.region;
    std::vector<std::pair<Rat, Rat>> pts;
    if (nr.kind == NamedRegion::Kind::Lk || nr.kind == NamedRegion::Kind::Mk) {
      Rat r_end = nr.kind == NamedRegion::Kind::Lk ? Rat(nr.k)
                                                   : mk_endpoint(nr.k).r;
      Rat a_end = nr.kind == NamedRegion::Kind::Lk ? Rat(0)
                                                   : mk_endpoint(nr.k).alpha;
      pts = {{Rat(2), Rat(1)}, {min(r_end, reg.window.r_hi),
                                nr.kind == NamedRegion::Kind::Lk && r_end > reg.window.r_hi
                                    ? (Rat(nr.k) - reg.window.r_hi) / Rat(nr.k - 2)
                                    : a_end}};
    } else if (nr.kind == NamedRegion::Kind::Urd && nr.anchor) {
      pts = {{Rat(2), Rat(1)},
             {nr.anchor->r, nr.anchor->alpha},
             {reg.window.r_hi, nr.anchor->alpha}};
    } else if (nr.kind == NamedRegion::Kind::Ak) {
      FlowPoint apex = mk_endpoint(nr.k);
      pts = {{apex.r, apex.alpha}, {Rat(2), Rat(1)},
             {Rat(4), Rat(nr.k - 3, nr.k - 1)}, {apex.r, apex.alpha}};
    }
    if (!pts.empty()) polyline(out, pts, m, style);
    out << "  <text x=\"" << m.x(pts.back().first) << "\" y=\""
        << m.y(pts.back().second) << "\" font-size=\"11\" fill=\"#666\">"
        << ov.label << "</text>\n";
  }

  // frontier: vertical piece of the boundary at r = 2, the frontier itself,
  // then the horizontal tail.
  std::vector<std::pair<Rat, Rat>> pts;
  pts.push_back({Rat(2), Rat(1)});
  for (const FrontierPoint& fp : reg.frontier) pts.push_back({fp.r, fp.alpha});
  pts.push_back({reg.window.r_hi, reg.alpha_min});
  polyline(out, pts, m, "stroke=\"#c00\" stroke-width=\"2\"");
  for (const FrontierPoint& fp : reg.frontier)
    out << "  <circle cx=\"" << m.x(fp.r) << "\" cy=\"" << m.y(fp.alpha)
        << "\" r=\"3\" fill=\"#c00\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace beflow
