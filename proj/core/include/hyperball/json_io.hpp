#pragma once

#include <string>

#include "hyperball/ball.hpp"
#include "hyperball/classify.hpp"
#include "hyperball/group.hpp"
#include "hyperball/linalg.hpp"

namespace hyperball {

// Wire formats (all parsers validate dimensions and finiteness, throwing
// ParseError on malformed input):
//   complex   [re, im]
//   vector    {"dim": n, "data": [[re,im], ...]}
//   matrix    {"rows": r, "cols": c, "data": [[re,im], ...]}   row-major
//   BallPoint {"v": vector}
//   MobiusMap {"U": matrix, "x0": vector}
//   GElement  {"theta": real, "U": matrix, "xi": vector}       file ext .gel.json
//   FormMatrix {"M": matrix}

std::string to_json(const CVector& v);
std::string to_json(const CMatrix& m);
std::string to_json(const BallPoint& p);
std::string to_json(const MobiusMap& m);
std::string to_json(const GElement& g);
std::string to_json(const FormMatrix& f);
std::string to_json(const Classification& c);

CVector vector_from_json(const std::string& text);
CMatrix matrix_from_json(const std::string& text);
BallPoint ballpoint_from_json(const std::string& text);
MobiusMap mobius_from_json(const std::string& text);
GElement gelement_from_json(const std::string& text);
FormMatrix formmatrix_from_json(const std::string& text);

// Accepts either a canonical triple {"theta","U","xi"} or a raw {"M": matrix}
// that is canonicalized at tol.
GElement element_from_json(const std::string& text, double tol = kDefaultTol);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace hyperball
