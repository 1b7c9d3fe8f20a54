#include "hyperball/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hyperball {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_to_node(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

Complex complex_from_node(const ordered_json& node) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
        throw ParseError("complex: expected [re, im]");
    }
    const double re = node[0].get<double>();
    const double im = node[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("complex: non-finite entry");
    return {re, im};
}

ordered_json vector_to_node(const CVector& v) {
    ordered_json data = ordered_json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) data.push_back(complex_to_node(v[i]));
    return ordered_json{{"dim", v.dim()}, {"data", std::move(data)}};
}

CVector vector_from_node(const ordered_json& node) {
    if (!node.is_object() || !node.contains("dim") || !node.contains("data")) {
        throw ParseError("vector: expected {\"dim\", \"data\"}");
    }
    if (!node["dim"].is_number_unsigned() && !node["dim"].is_number_integer()) {
        throw ParseError("vector: dim must be a positive integer");
    }
    const auto dim = node["dim"].get<std::int64_t>();
    const auto& data = node["data"];
    if (dim < 1 || !data.is_array() || data.size() != static_cast<std::size_t>(dim)) {
        throw ParseError("vector: data length must equal dim >= 1");
    }
    CVector v(static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] = complex_from_node(data[i]);
    return v;
}

ordered_json matrix_to_node(const CMatrix& m) {
    ordered_json data = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) data.push_back(complex_to_node(m(i, j)));
    return ordered_json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

CMatrix matrix_from_node(const ordered_json& node) {
    if (!node.is_object() || !node.contains("rows") || !node.contains("cols") ||
        !node.contains("data")) {
        throw ParseError("matrix: expected {\"rows\", \"cols\", \"data\"}");
    }
    const auto rows = node["rows"].get<std::int64_t>();
    const auto cols = node["cols"].get<std::int64_t>();
    const auto& data = node["data"];
    if (rows < 1 || cols < 1 || !data.is_array() ||
        data.size() != static_cast<std::size_t>(rows * cols)) {
        throw ParseError("matrix: data length must equal rows*cols >= 1");
    }
    CMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::size_t k = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = complex_from_node(data[k++]);
    return m;
}

ordered_json parse_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
}

template <typename F>
auto rewrap(F&& f) -> decltype(f()) {
    // nlohmann type errors on field access become ParseError
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
}

} // namespace

std::string to_json(const CVector& v) { return vector_to_node(v).dump(2); }
std::string to_json(const CMatrix& m) { return matrix_to_node(m).dump(2); }

std::string to_json(const BallPoint& p) {
    return ordered_json{{"v", vector_to_node(p.v())}}.dump(2);
}

std::string to_json(const MobiusMap& m) {
    return ordered_json{{"U", matrix_to_node(m.U())}, {"x0", vector_to_node(m.x0())}}.dump(2);
}

std::string to_json(const GElement& g) {
    return ordered_json{{"theta", g.theta()},
                        {"U", matrix_to_node(g.U())},
                        {"xi", vector_to_node(g.xi())}}
        .dump(2);
}

std::string to_json(const FormMatrix& f) {
    return ordered_json{{"M", matrix_to_node(f.M)}}.dump(2);
}

std::string to_json(const Classification& c) {
    ordered_json fps = ordered_json::array();
    for (const auto& fp : c.fixed_points) {
        fps.push_back(ordered_json{{"point", vector_to_node(fp.point)},
                                   {"location", to_string(fp.location)},
                                   {"eigenvalue", complex_to_node(fp.eigenvalue)}});
    }
    ordered_json out{{"kind", to_string(c.kind)},
                     {"method", to_string(c.method)},
                     {"fixed_points", std::move(fps)}};
    if (c.spectrum) {
        const auto& s = *c.spectrum;
        out["spectrum"] = ordered_json{{"r", complex_to_node(s.r)},
                                       {"lambda1", complex_to_node(s.lambda1)},
                                       {"lambda2", complex_to_node(s.lambda2)},
                                       {"k1", complex_to_node(s.k1)},
                                       {"k2", complex_to_node(s.k2)},
                                       {"discriminant", complex_to_node(s.discriminant)}};
    } else {
        out["spectrum"] = nullptr;
    }
    return out.dump(2);
}

CVector vector_from_json(const std::string& text) {
    return rewrap([&] { return vector_from_node(parse_text(text)); });
}

CMatrix matrix_from_json(const std::string& text) {
    return rewrap([&] { return matrix_from_node(parse_text(text)); });
}

BallPoint ballpoint_from_json(const std::string& text) {
    return rewrap([&] {
        const auto node = parse_text(text);
        if (!node.is_object() || !node.contains("v")) throw ParseError("BallPoint: expected {\"v\"}");
        return BallPoint(vector_from_node(node["v"]));
    });
}

MobiusMap mobius_from_json(const std::string& text) {
    return rewrap([&] {
        const auto node = parse_text(text);
        if (!node.is_object() || !node.contains("U") || !node.contains("x0")) {
            throw ParseError("MobiusMap: expected {\"U\", \"x0\"}");
        }
        return MobiusMap(matrix_from_node(node["U"]), vector_from_node(node["x0"]));
    });
}

GElement gelement_from_json(const std::string& text) {
    return rewrap([&] {
        const auto node = parse_text(text);
        if (!node.is_object() || !node.contains("theta") || !node.contains("U") ||
            !node.contains("xi")) {
            throw ParseError("GElement: expected {\"theta\", \"U\", \"xi\"}");
        }
        if (!node["theta"].is_number()) throw ParseError("GElement: theta must be a number");
        const double theta = node["theta"].get<double>();
        if (!std::isfinite(theta)) throw ParseError("GElement: theta must be finite");
        return GElement(theta, matrix_from_node(node["U"]), vector_from_node(node["xi"]));
    });
}

FormMatrix formmatrix_from_json(const std::string& text) {
    return rewrap([&] {
        const auto node = parse_text(text);
        if (!node.is_object() || !node.contains("M")) throw ParseError("FormMatrix: expected {\"M\"}");
        return FormMatrix{matrix_from_node(node["M"])};
    });
}

GElement element_from_json(const std::string& text, double tol) {
    const auto node = parse_text(text);
    if (node.is_object() && node.contains("M")) {
        return canonicalize(formmatrix_from_json(text), tol);
    }
    return gelement_from_json(text);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

} // namespace hyperball
