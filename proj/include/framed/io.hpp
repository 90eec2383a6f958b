#pragma once

#include "framed/cover.hpp"
#include "framed/hochschild.hpp"
#include "framed/lattice.hpp"
#include "framed/semidirect.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace framed {

using Json = nlohmann::ordered_json;

/// Malformed textual input (as opposed to a well-formed value outside an operation's domain).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// "[[a,b],[c,d]]" or four whitespace/comma separated entries.
Mat2Z parse_mat2z(const std::string& text);
Mat2Q parse_mat2q(const std::string& text);
/// "(x,y)" or "x,y" or "x y".
Vec2Q parse_vec2q(const std::string& text);
/// "[[a,b],[c,d]]@w"; the winding defaults to 0.
CoverElement parse_cover(const std::string& text);
RationalCoverElement parse_rational_cover(const std::string& text);
/// "((x,y); [[a,b],[c,d]])", "((x,y); braid: a b a)", "((x,y); cover: [[a,b],[c,d]]@w)".
SemidirectElement parse_semidirect(const std::string& text);
BraidWord parse_braid(const std::string& text);

std::string format(const Mat2Z& m);
std::string format(const Mat2Q& m);
std::string format(const Vec2Q& v);
std::string format(const CoverElement& x);
std::string format(const RationalCoverElement& x);
std::string format(const SemidirectElement& g);

/// Integers become JSON numbers when they fit in 64 bits and strings otherwise;
/// rationals are numbers when integral and "p/q" strings otherwise.
Json to_json(const Int& x);
Json to_json(const Rational& q);
Json to_json(const Mat2Z& m);
Json to_json(const Mat2Q& m);
Json to_json(const Vec2Q& v);
Json to_json(const GarsideNormalForm& nf);
Json to_json(const CoverElement& x);
Json to_json(const RationalCoverElement& x);
Json to_json(const RationalComplex& z);
Json to_json(const HnfLattice& l);
Json to_json(const FiniteTorusSubgroup& c);
Json to_json(const SemidirectElement& g);
Json to_json(const SparseMatrixQ& m);
Json to_json(const HomologyResult& r);
Json to_json(const ValidationReport& r, const std::vector<std::string>& labels);

}  // namespace framed
