#include "framed/io.hpp"

#include <algorithm>
#include <cctype>

namespace framed {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits on brackets, parentheses, commas, and whitespace.
std::vector<std::string> number_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

template <class T, class F>
std::vector<T> parse_entries(const std::string& text, std::size_t count, const char* what, F&& parse_one) {
  const auto tokens = number_tokens(text);
  if (tokens.size() != count) {
    throw ParseError(std::string("expected ") + what + ", got '" + text + "'");
  }
  std::vector<T> out;
  for (const auto& t : tokens) {
    try {
      out.push_back(parse_one(t));
    } catch (const DomainError& e) {
      throw ParseError(std::string("bad entry in ") + what + ": " + e.what());
    }
  }
  return out;
}

std::pair<std::string, std::int64_t> split_winding(const std::string& text) {
  const auto at = text.rfind('@');
  if (at == std::string::npos) return {text, 0};
  const std::string w = trim(std::string_view(text).substr(at + 1));
  try {
    return {text.substr(0, at), to_int64(parse_integer(w))};
  } catch (const DomainError& e) {
    throw ParseError("bad winding '" + w + "': " + e.what());
  }
}

template <class T>
std::string format_matrix(const Mat2<T>& m) {
  return "[[" + to_string(m.a) + "," + to_string(m.b) + "],[" + to_string(m.c) + "," + to_string(m.d) + "]]";
}

template <class T>
Json matrix_json(const Mat2<T>& m) {
  return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})});
}

template <class T>
Json cover_json(const BasicCoverElement<T>& x) {
  const auto z = z_of(x.matrix);
  Json j;
  j["matrix"] = to_json(x.matrix);
  j["winding"] = x.winding;
  j["arg_num"] = Json::array({to_string(z.re), to_string(z.im)});
  return j;
}

}  // namespace

Mat2Z parse_mat2z(const std::string& text) {
  const auto e = parse_entries<Int>(text, 4, "an integer matrix [[a,b],[c,d]]", parse_integer);
  return {e[0], e[1], e[2], e[3]};
}

Mat2Q parse_mat2q(const std::string& text) {
  const auto e = parse_entries<Rational>(text, 4, "a rational matrix [[a,b],[c,d]]", parse_rational);
  return {e[0], e[1], e[2], e[3]};
}

Vec2Q parse_vec2q(const std::string& text) {
  const auto e = parse_entries<Rational>(text, 2, "a rational pair (x,y)", parse_rational);
  return {e[0], e[1]};
}

CoverElement parse_cover(const std::string& text) {
  const auto [m, w] = split_winding(text);
  return {parse_mat2z(m), w};
}

RationalCoverElement parse_rational_cover(const std::string& text) {
  const auto [m, w] = split_winding(text);
  return {parse_mat2q(m), w};
}

BraidWord parse_braid(const std::string& text) {
  try {
    return parse_braid_word(text);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

SemidirectElement parse_semidirect(const std::string& text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("expected a semidirect literal '((x,y); part)', got '" + text + "'");
  }
  s = s.substr(1, s.size() - 2);
  const auto semi = s.find(';');
  if (semi == std::string::npos) throw ParseError("semidirect literal needs ';' between point and linear part");
  const Vec2Q v = parse_vec2q(s.substr(0, semi));
  const TorusPoint point(v.x, v.y);
  std::string part = trim(std::string_view(s).substr(semi + 1));
  if (part.rfind("braid:", 0) == 0) return make_semidirect(point, parse_braid(part.substr(6)));
  if (part.rfind("cover:", 0) == 0) return make_semidirect(point, parse_cover(part.substr(6)));
  if (part.rfind("matrix:", 0) == 0) part = part.substr(7);
  return make_semidirect(point, parse_mat2z(part));
}

std::string format(const Mat2Z& m) { return format_matrix(m); }
std::string format(const Mat2Q& m) { return format_matrix(m); }
std::string format(const Vec2Q& v) { return "(" + to_string(v.x) + "," + to_string(v.y) + ")"; }
std::string format(const CoverElement& x) { return format(x.matrix) + "@" + std::to_string(x.winding); }
std::string format(const RationalCoverElement& x) { return format(x.matrix) + "@" + std::to_string(x.winding); }

std::string format(const SemidirectElement& g) {
  std::string part;
  switch (g.ambient()) {
    case Ambient::Isogeny: part = format(std::get<Mat2Z>(g.part)); break;
    case Ambient::Braid: part = "braid: " + to_string(std::get<BraidWord>(g.part)); break;
    case Ambient::Cover: part = "cover: " + format(std::get<CoverElement>(g.part)); break;
  }
  return "(" + format(g.point.vec()) + "; " + part + ")";
}

Json to_json(const Int& x) {
  if (fits_int64(x)) return x.convert_to<std::int64_t>();
  return x.str();
}

Json to_json(const Rational& q) {
  if (is_integer(q)) return to_json(numer(q));
  return to_string(q);
}

Json to_json(const Mat2Z& m) { return matrix_json(m); }
Json to_json(const Mat2Q& m) { return matrix_json(m); }
Json to_json(const Vec2Q& v) { return Json::array({to_json(v.x), to_json(v.y)}); }

Json to_json(const GarsideNormalForm& nf) {
  Json j;
  j["delta_power"] = nf.delta_power;
  j["factors"] = Json::array();
  for (auto s : nf.factors) j["factors"].push_back(to_string(s));
  return j;
}

Json to_json(const CoverElement& x) { return cover_json(x); }
Json to_json(const RationalCoverElement& x) { return cover_json(x); }
Json to_json(const RationalComplex& z) { return Json::array({to_string(z.re), to_string(z.im)}); }

Json to_json(const HnfLattice& l) {
  Json j;
  j["index"] = to_json(l.index());
  j["hnf"] = to_json(l.basis);
  return j;
}

Json to_json(const FiniteTorusSubgroup& c) {
  Json j;
  j["order"] = to_json(c.order());
  j["superlattice_hnf"] = to_json(c.superlattice);
  return j;
}

Json to_json(const SemidirectElement& g) {
  Json j;
  j["point"] = to_json(g.point.vec());
  switch (g.ambient()) {
    case Ambient::Isogeny:
      j["ambient"] = "isogeny";
      j["matrix"] = to_json(std::get<Mat2Z>(g.part));
      break;
    case Ambient::Braid:
      j["ambient"] = "braid";
      j["word"] = to_string(std::get<BraidWord>(g.part));
      j["matrix"] = to_json(matrix_part(g));
      break;
    case Ambient::Cover:
      j["ambient"] = "cover";
      j["cover"] = to_json(std::get<CoverElement>(g.part));
      break;
  }
  j["literal"] = format(g);
  return j;
}

Json to_json(const SparseMatrixQ& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const HomologyResult& r) {
  Json j;
  j["betti"] = r.betti;
  j["built_through"] = r.built_through;
  j["truncated"] = r.truncated;
  j["note"] = r.note;
  return j;
}

Json to_json(const ValidationReport& r, const std::vector<std::string>& labels) {
  Json j;
  j["valid"] = r.valid();
  j["violation_count"] = r.violations.size();
  j["violations"] = Json::array();
  for (const auto& v : r.violations) {
    Json e;
    e["law"] = v.law;
    e["indices"] = v.indices;
    e["component"] = v.component;
    e["text"] = v.describe(labels);
    j["violations"].push_back(std::move(e));
  }
  j["messages"] = r.messages;
  return j;
}

}  // namespace framed
