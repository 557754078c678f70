#include "affkl/draw.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace affkl {

namespace {

struct Pt {
  double x = 0, y = 0;
};

std::string fmt(double v) {
  if (std::fabs(v) < 5e-4) v = 0;  // no "-0.000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& text, const std::string& term) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(text, &used);
    if (trim(text.substr(used)).empty()) return v;
  } catch (const std::logic_error&) {
  }
  throw InputError("bad integer '" + text + "' in shading term " + term);
}

std::string xml_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    switch (c) {
      case '<': r += "&lt;"; break;
      case '>': r += "&gt;"; break;
      case '&': r += "&amp;"; break;
      case '"': r += "&quot;"; break;
      default: r += c;
    }
  }
  return r;
}

std::string tex_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '^' || c == '_' || c == '{' || c == '}') {
      r += '$';
      r += c == '^' ? "^" : c == '_' ? "\\_" : c == '{' ? "\\{" : "\\}";
      r += '$';
    } else if (c == '#' || c == '%' || c == '&') {
      r += '\\';
      r += c;
    } else {
      r += c;
    }
  }
  return r;
}

// Euclidean picture of the span of the roots, via a W-invariant form.
class Geometry {
 public:
  explicit Geometry(const AlcoveModel& al) : al_(al), d_(al.weyl().datum()) {
    const auto& a = d_.simple_roots();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m_[i][j] = d_.pair_simple(a[j], i);  // <alpha_j, alpha_i^vee>
    det_ = m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0];
    double g[2][2] = {};
    for (int k = 0; k < d_.num_positive_roots(); ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          g[i][j] += static_cast<double>(d_.pair_coroot(a[i], k)) * static_cast<double>(d_.pair_coroot(a[j], k));
    l11_ = std::sqrt(g[0][0]);
    l21_ = g[1][0] / l11_;
    l22_ = std::sqrt(g[1][1] - l21_ * l21_);
    const double s = 2.0 / std::sqrt(std::min(g[0][0], g[1][1]));  // short simple roots get length 2
    l11_ *= s;
    l21_ *= s;
    l22_ *= s;
    build_fundamental();
  }

  // pairing coordinates a_i = <v, alpha_i^vee> -> plane
  Pt plane(double a0, double a1) const {
    const double b0 = (m_[1][1] * a0 - m_[0][1] * a1) / det_;
    const double b1 = (-m_[1][0] * a0 + m_[0][0] * a1) / det_;
    return {l11_ * b0 + l21_ * b1, l22_ * b1};
  }

  std::vector<Pt> polygon(const ExtElem& x) const {
    const auto& W = al_.weyl();
    std::vector<Pt> out;
    for (const auto& v : verts_) {
      const Weight img = W.act_scaled(x, v, den_);
      out.push_back(plane(static_cast<double>(d_.pair_simple(img, 0)) / den_,
                          static_cast<double>(d_.pair_simple(img, 1)) / den_));
    }
    return out;
  }

  Pt center(const ExtElem& x) const {
    Pt c;
    const auto poly = polygon(x);
    for (const auto& p : poly) {
      c.x += p.x / poly.size();
      c.y += p.y / poly.size();
    }
    return c;
  }

 private:
  const AlcoveModel& al_;
  const RootDatum& d_;
  std::int64_t m_[2][2] = {};
  std::int64_t det_ = 1;
  double l11_ = 1, l21_ = 0, l22_ = 1;
  std::vector<Weight> verts_;  // numerators over den_
  std::int64_t den_ = 1;

  void build_fundamental() {
    // vertices in pairing coordinates, scaled by c
    std::vector<std::array<std::int64_t, 2>> pairs;
    std::int64_t c = 1;
    if (d_.components().size() == 2) {
      pairs = {{{0, 0}}, {{1, 0}}, {{1, 1}}, {{0, 1}}};
    } else {
      int top = 0;
      for (int k = 1; k < d_.num_positive_roots(); ++k)
        if (d_.coroot_height(k) > d_.coroot_height(top)) top = k;
      const auto& cc = d_.coroot_coordinates()[top];
      c = cc[0] * cc[1];
      pairs = {{{0, 0}}, {{cc[1], 0}}, {{0, cc[0]}}};
    }
    den_ = c * det_;
    const auto& a = d_.simple_roots();
    for (const auto& p : pairs) {
      const std::int64_t b0 = m_[1][1] * p[0] - m_[0][1] * p[1];
      const std::int64_t b1 = -m_[1][0] * p[0] + m_[0][0] * p[1];
      verts_.push_back(b0 * a[0] + b1 * a[1]);
    }
  }
};

struct Shading {
  std::set<ExtElem> shaded;
  std::map<ExtElem, std::string> labels;
};

bool in_region(const AlcoveModel& al, const Alcove& a, const DrawOptions& o) {
  const std::int64_t lim = o.bound * al.denominator();
  for (int i = 0; i < 2; ++i) {
    const auto v = al.pair_bary(a, i);
    if (o.region == "dominant" ? (v <= 0 || v >= lim) : (v <= -lim || v >= lim)) return false;
  }
  return true;
}

std::vector<Alcove> region_alcoves(const AlcoveModel& al, const DrawOptions& o) {
  const auto& W = al.weyl();
  std::vector<Alcove> out;
  std::unordered_set<ExtElem, ExtElemHash> seen;
  std::deque<Alcove> q{al.fundamental()};
  seen.insert(q.front().elem);
  while (!q.empty()) {
    const Alcove a = q.front();
    q.pop_front();
    out.push_back(a);
    for (int g = 0; g < W.num_generators(); ++g) {
      const Alcove b = al.act_right(a, W.generator(g));
      if (!in_region(al, b, o) || !seen.insert(b.elem).second) continue;
      q.push_back(b);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Alcove& a, const Alcove& b) { return W.canonical_less(a.elem, b.elem); });
  return out;
}

Shading parse_shading(const AlcoveModel& al, const std::vector<Alcove>& alcoves, const std::string& expr) {
  const auto& W = al.weyl();
  const auto& d = W.datum();
  Shading s;
  // split on '+' outside parentheses
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (char c : expr) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      terms.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  terms.push_back(trim(cur));
  for (const auto& t : terms) {
    if (t.empty()) continue;
    const auto open = t.find('(');
    const std::string head = trim(t.substr(0, open));
    std::string arg;
    if (open != std::string::npos) {
      if (t.back() != ')') throw InputError("unbalanced shading term '" + t + "'");
      arg = t.substr(open + 1, t.size() - open - 2);
    }
    if (head == "restricted") {
      for (const auto& a : alcoves) {
        bool in = true;
        for (int i = 0; i < 2; ++i) in = in && al.pair_bary(a, i) > 0 && al.pair_bary(a, i) < al.denominator();
        if (in) s.shaded.insert(a.elem);
      }
    } else if (head == "fW-window") {
      const auto n = parse_int(arg, t);
      for (const auto& a : alcoves)
        if (W.is_fWext(a.elem) && W.length(a.elem) <= n) s.shaded.insert(a.elem);
    } else if (head == "box") {
      std::vector<std::int64_t> c;
      std::string inner = trim(arg);
      if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')') inner = inner.substr(1, inner.size() - 2);
      std::stringstream ss(inner);
      std::string tok;
      while (std::getline(ss, tok, ',')) c.push_back(parse_int(tok, t));
      if (static_cast<int>(c.size()) != d.lattice_rank()) throw InputError("box(...) needs one coordinate per lattice rank");
      const Weight mu = Weight::from_vector(c);
      for (const auto& a : alcoves)
        if (al.box_rep_above(a) == mu) s.shaded.insert(a.elem);
    } else if (head == "list") {
      std::stringstream ss(arg);
      std::string item;
      while (std::getline(ss, item, ';')) {
        item = trim(item);
        if (item.empty()) continue;
        std::string label, word = item;
        if (const auto eq = item.find('='); eq != std::string::npos) {
          label = trim(item.substr(0, eq));
          word = trim(item.substr(eq + 1));
        }
        const ExtElem x = al.normalize(W.parse(word));
        if (!W.in_W(x)) throw InputError("list entry '" + word + "' is not an element of W");
        if (std::none_of(alcoves.begin(), alcoves.end(), [&](const Alcove& a) { return a.elem == x; }))
          throw InputError("list entry '" + word + "' lies outside the drawn region; enlarge --window");
        s.shaded.insert(x);
        if (!label.empty()) s.labels[x] = label;
      }
    } else {
      throw InputError("unknown shading term '" + head + "' (restricted, fW-window(n), box(...), list(...))");
    }
  }
  return s;
}

}  // namespace

std::string draw_alcoves(const AlcoveModel& al, const DrawOptions& o) {
  const auto& d = al.weyl().datum();
  if (d.rank() != 2) throw InputError("draw needs a rank 2 datum, got rank " + std::to_string(d.rank()));
  if (o.region != "dominant" && o.region != "all") throw InputError("region must be dominant or all");
  if (o.bound < 1) throw InputError("window bound must be positive");
  const Geometry geo(al);
  const auto alcoves = region_alcoves(al, o);
  const Shading sh = parse_shading(al, alcoves, o.shade);

  std::vector<std::vector<Pt>> polys;
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (const auto& a : alcoves) {
    polys.push_back(geo.polygon(a.elem));
    for (const auto& p : polys.back()) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  struct Mark {
    Pt at;
    std::string text;
  };
  std::vector<Mark> marks;
  for (const auto& a : alcoves) {
    std::string text;
    if (auto it = sh.labels.find(a.elem); it != sh.labels.end()) text = it->second;
    if (auto it = o.inscriptions.find(a.elem); it != o.inscriptions.end())
      text += (text.empty() ? "" : " ") + it->second;
    if (!text.empty()) marks.push_back({geo.center(a.elem), text});
  }

  std::ostringstream out;
  if (o.format == DrawFormat::Svg) {
    const double unit = 40.0, pad = 0.3;
    auto X = [&](double x) { return (x - minx + pad) * unit; };
    auto Y = [&](double y) { return (maxy - y + pad) * unit; };
    const double w = (maxx - minx + 2 * pad) * unit, h = (maxy - miny + 2 * pad) * unit;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
        << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
    out << "<title>" << xml_escape(d.label()) << " alcoves</title>\n";
    for (std::size_t k = 0; k < alcoves.size(); ++k) {
      out << "<polygon points=\"";
      for (std::size_t j = 0; j < polys[k].size(); ++j)
        out << (j ? " " : "") << fmt(X(polys[k][j].x)) << "," << fmt(Y(polys[k][j].y));
      out << "\" fill=\"" << (sh.shaded.count(alcoves[k].elem) ? "#e6e6e6" : "none")
          << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    }
    for (const auto& m : marks)
      out << "<text x=\"" << fmt(X(m.at.x)) << "\" y=\"" << fmt(Y(m.at.y))
          << "\" font-family=\"serif\" font-size=\"9\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
          << xml_escape(m.text) << "</text>\n";
    out << "</svg>\n";
  } else {
    out << "\\documentclass[tikz]{standalone}\n\\begin{document}\n\\begin{tikzpicture}[scale=0.7]\n";
    out << "% " << tex_escape(d.label()) << " alcoves\n";
    for (std::size_t k = 0; k < alcoves.size(); ++k) {
      out << "\\draw" << (sh.shaded.count(alcoves[k].elem) ? "[fill=white!90!black]" : "") << " ";
      for (const auto& p : polys[k]) out << "(" << fmt(p.x) << "," << fmt(p.y) << ") -- ";
      out << "cycle;\n";
    }
    for (const auto& m : marks)
      out << "\\node at (" << fmt(m.at.x) << "," << fmt(m.at.y) << ") {\\small " << tex_escape(m.text) << "};\n";
    out << "\\end{tikzpicture}\n\\end{document}\n";
  }
  return out.str();
}

}  // namespace affkl
